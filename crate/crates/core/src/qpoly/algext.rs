//! Simple algebraic extensions Q[a]/(m(a)).

use std::fmt;
use std::sync::Arc;

use super::factor::is_irreducible;
use super::field::{rat_to_string, Field, Rat, Ring};
use super::upoly::UPoly;
use super::QpolyError;

/// The field Q[a]/(m) for a monic irreducible `m`.
#[derive(Debug, PartialEq)]
pub struct AlgExt {
    minpoly: UPoly<Rat>,
}

impl AlgExt {
    pub fn new(m: &UPoly<Rat>) -> Result<Arc<Self>, QpolyError> {
        if m.deg() < 1 {
            return Err(QpolyError::Degenerate("minimal polynomial must be nonconstant".into()));
        }
        let m = m.monic();
        if !is_irreducible(&m) {
            return Err(QpolyError::Reducible(m.display("a")));
        }
        Ok(Arc::new(AlgExt { minpoly: m }))
    }

    /// Q(sqrt(d)); `d` must not be a rational square.
    pub fn sqrt(d: &Rat) -> Result<Arc<Self>, QpolyError> {
        Self::new(&UPoly::new(vec![-d.clone(), Rat::zero(), Rat::one()]))
    }

    pub fn minpoly(&self) -> &UPoly<Rat> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }
}

/// Element of an algebraic extension. Rational elements may carry no
/// extension, which lets them mix freely with elements of any field.
#[derive(Clone, Debug)]
pub struct AlgElem {
    ext: Option<Arc<AlgExt>>,
    c: Vec<Rat>,
}

fn trim(mut c: Vec<Rat>) -> Vec<Rat> {
    while c.last().is_some_and(Ring::is_zero) {
        c.pop();
    }
    c
}

fn same_ext(a: &Option<Arc<AlgExt>>, b: &Option<Arc<AlgExt>>) -> Option<Arc<AlgExt>> {
    match (a, b) {
        (None, None) => None,
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (Some(x), Some(y)) => {
            assert!(
                Arc::ptr_eq(x, y) || x.minpoly == y.minpoly,
                "mixing elements of different algebraic extensions"
            );
            Some(x.clone())
        }
    }
}

impl AlgElem {
    pub fn rational(r: Rat) -> Self {
        AlgElem { ext: None, c: trim(vec![r]) }
    }

    /// The generator `a` of the extension.
    pub fn generator(ext: &Arc<AlgExt>) -> Self {
        Self::from_poly(ext, &UPoly::x())
    }

    /// Image of a polynomial in `a`, reduced modulo the minimal polynomial.
    pub fn from_poly(ext: &Arc<AlgExt>, p: &UPoly<Rat>) -> Self {
        let r = p.rem(&ext.minpoly);
        AlgElem { ext: Some(ext.clone()), c: r.into_coeffs() }
    }

    pub fn ext(&self) -> Option<&Arc<AlgExt>> {
        self.ext.as_ref()
    }

    pub fn as_poly(&self) -> UPoly<Rat> {
        UPoly::new(self.c.clone())
    }

    /// Coordinates in the power basis, padded to the extension degree.
    pub fn coords(&self) -> Vec<Rat> {
        let n = self.ext.as_ref().map_or(1, |e| e.degree());
        let mut c = self.c.clone();
        c.resize(n.max(c.len()), Rat::zero());
        c
    }

    pub fn is_rational(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self.c.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    fn reduce(ext: Option<Arc<AlgExt>>, p: UPoly<Rat>) -> Self {
        match &ext {
            Some(e) => {
                let r = if p.deg() >= e.degree() as isize { p.rem(&e.minpoly) } else { p };
                AlgElem { ext, c: r.into_coeffs() }
            }
            None => {
                assert!(p.deg() <= 0, "non-rational element without an extension");
                AlgElem { ext, c: p.into_coeffs() }
            }
        }
    }
}

impl PartialEq for AlgElem {
    fn eq(&self, o: &Self) -> bool {
        if let (Some(a), Some(b)) = (&self.ext, &o.ext) {
            if !(Arc::ptr_eq(a, b) || a.minpoly == b.minpoly) {
                return false;
            }
        }
        self.c == o.c
    }
}

impl Ring for AlgElem {
    fn zero() -> Self {
        AlgElem { ext: None, c: Vec::new() }
    }
    fn one() -> Self {
        Self::rational(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let ext = same_ext(&self.ext, &o.ext);
        let p = UPoly::new(self.c.clone()).add_ref(&UPoly::new(o.c.clone()));
        AlgElem { ext, c: p.into_coeffs() }
    }
    fn minus(&self, o: &Self) -> Self {
        let ext = same_ext(&self.ext, &o.ext);
        let p = UPoly::new(self.c.clone()).sub_ref(&UPoly::new(o.c.clone()));
        AlgElem { ext, c: p.into_coeffs() }
    }
    fn times(&self, o: &Self) -> Self {
        let ext = same_ext(&self.ext, &o.ext);
        let p = UPoly::new(self.c.clone()).mul_ref(&UPoly::new(o.c.clone()));
        Self::reduce(ext, p)
    }
    fn negate(&self) -> Self {
        AlgElem { ext: self.ext.clone(), c: self.c.iter().map(|x| -x).collect() }
    }
    fn from_rat(r: &Rat) -> Self {
        Self::rational(r.clone())
    }
}

impl Field for AlgElem {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.ext {
            None => Some(Self::rational(self.c[0].recip())),
            Some(e) => {
                let (g, s, _) = UPoly::new(self.c.clone()).xgcd(&e.minpoly);
                debug_assert_eq!(g, UPoly::one());
                Some(Self::reduce(self.ext.clone(), s))
            }
        }
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        if self.c.len() == 1 {
            return write!(f, "{}", rat_to_string(&self.c[0]));
        }
        write!(f, "{}", UPoly::new(self.c.clone()).display("a"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::field::rint;

    #[test]
    fn gaussian_rationals() {
        let ext = AlgExt::new(&UPoly::from_ints(&[1, 0, 1])).unwrap();
        let i = AlgElem::generator(&ext);
        assert_eq!(i.times(&i), AlgElem::rational(rint(-1)));
        let a = i.plus(&AlgElem::rational(rint(2)));
        let inv = a.inverse().unwrap();
        assert_eq!(a.times(&inv), AlgElem::one());
    }

    #[test]
    fn reducible_minpoly_rejected() {
        assert!(AlgExt::new(&UPoly::from_ints(&[-1, 0, 1])).is_err());
        assert!(AlgExt::sqrt(&rint(4)).is_err());
    }

    #[test]
    fn minpoly_vanishes_at_generator() {
        let ext = AlgExt::new(&UPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
        let a = AlgElem::generator(&ext);
        let val = ext.minpoly().eval_in(&a, |c| AlgElem::rational(c.clone()));
        assert!(val.is_zero());
    }
}
