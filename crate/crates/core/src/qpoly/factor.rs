//! Square-free parts, univariate factorization over Q and rational roots.

use num_traits::Signed;

use super::field::{Rat, Ring};
use super::upoly::UPoly;
use super::zpoly::{factor_squarefree_z, may_have_rational_root, rat_to_primitive, to_rat_poly};
use super::QpolyError;

/// `p = unit * prod f_i^{e_i}` with monic irreducible, pairwise distinct `f_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(UPoly<Rat>, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UPoly<Rat> {
        self.factors
            .iter()
            .fold(UPoly::constant(self.unit.clone()), |acc, (f, e)| {
                acc.mul_ref(&f.pow(*e))
            })
    }
}

/// `p / gcd(p, p')`, scaled to integer coefficients with content 1 and a
/// positive leading coefficient.
pub fn squarefree_part(p: &UPoly<Rat>) -> Result<UPoly<Rat>, QpolyError> {
    if p.is_zero() {
        return Err(QpolyError::ZeroInput);
    }
    let s = p.squarefree_part();
    Ok(to_rat_poly(&rat_to_primitive(&s).1))
}

/// Primitive integer representative of a nonzero polynomial (content 1, positive lead).
pub fn primitive_rat(p: &UPoly<Rat>) -> UPoly<Rat> {
    if p.is_zero() {
        return UPoly::zero();
    }
    to_rat_poly(&rat_to_primitive(p).1)
}

fn canonical_key(f: &UPoly<Rat>) -> (usize, Vec<String>) {
    (
        f.degree().unwrap_or(0),
        f.coeffs().iter().map(|c| c.to_string()).collect(),
    )
}

/// Complete factorization over Q.
pub fn factor_univariate(p: &UPoly<Rat>) -> Result<Factorization, QpolyError> {
    if p.is_zero() {
        return Err(QpolyError::ZeroInput);
    }
    let unit = p.lead();
    let mut factors = Vec::new();
    for (part, e) in p.squarefree_decomposition() {
        let (_, z) = rat_to_primitive(&part);
        for g in factor_squarefree_z(&z) {
            factors.push((to_rat_poly(&g).monic(), e));
        }
    }
    factors.sort_by(|a, b| canonical_key(&a.0).cmp(&canonical_key(&b.0)).then(a.1.cmp(&b.1)));
    Ok(Factorization { unit, factors })
}

/// Distinct rational roots, in increasing order.
pub fn rational_roots(p: &UPoly<Rat>) -> Vec<Rat> {
    if p.deg() <= 0 {
        return Vec::new();
    }
    if !may_have_rational_root(&rat_to_primitive(p).1) {
        return Vec::new();
    }
    let mut out: Vec<Rat> = factor_univariate(p)
        .map(|f| {
            f.factors
                .into_iter()
                .filter(|(g, _)| g.degree() == Some(1))
                .map(|(g, _)| g.coeff(0).negate())
                .collect()
        })
        .unwrap_or_default();
    out.sort();
    out
}

/// True when `p` is irreducible over Q (constants are not).
pub fn is_irreducible(p: &UPoly<Rat>) -> bool {
    match factor_univariate(p) {
        Ok(f) => p.deg() > 0 && f.factors.len() == 1 && f.factors[0].1 == 1,
        Err(_) => false,
    }
}

/// Whether a nonzero rational is a square of a rational.
pub fn is_rational_square(r: &Rat) -> bool {
    !r.is_negative() && super::field::rat_sqrt(r).is_some()
}

/// Exact square root of a polynomial over Q if it is a perfect square.
pub fn poly_sqrt(p: &UPoly<Rat>) -> Option<UPoly<Rat>> {
    if p.is_zero() {
        return Some(UPoly::zero());
    }
    let d = p.degree()?;
    if d % 2 == 1 {
        return None;
    }
    let lead_root = super::field::rat_sqrt(&p.lead())?;
    // coefficient-by-coefficient square root from the top
    let h = d / 2;
    let mut r = vec![Rat::from_integer(0.into()); h + 1];
    r[h] = lead_root.clone();
    let two_lead = &lead_root * Rat::from_integer(2.into());
    for k in (0..h).rev() {
        // coefficient of x^(h+k) in r^2 equals p[h+k]
        let mut s = p.coeff(h + k);
        for i in k + 1..=h {
            let j = h + k - i;
            if j > k && j <= h {
                s -= &r[i] * &r[j];
            }
        }
        r[k] = s / &two_lead;
    }
    let cand = UPoly::new(r);
    if cand.mul_ref(&cand) == *p {
        Some(cand)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::field::rat;

    fn p(c: &[i64]) -> UPoly<Rat> {
        UPoly::from_ints(c)
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&p(&[0, 0, 1])).unwrap(), p(&[0, 1]));
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        assert_eq!(squarefree_part(&f).unwrap(), &p(&[-1, 1]) * &p(&[2, 1]));
        let radicand = p(&[8340544, 0, -987696, 0, 81]);
        assert_eq!(squarefree_part(&radicand).unwrap(), radicand);
        assert!(squarefree_part(&UPoly::zero()).is_err());
    }

    #[test]
    fn factor_examples() {
        let f = factor_univariate(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        let g = factor_univariate(&p(&[1, 0, 1])).unwrap();
        assert_eq!(g.factors, vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn factor_weierstrass_cubic() {
        // x^3 - (364/3) x + 13376/27
        let c = UPoly::new(vec![rat(13376, 27), rat(-364, 3), rat(0, 1), rat(1, 1)]);
        let f = factor_univariate(&c).unwrap();
        let roots: Vec<Rat> = f.factors.iter().map(|(g, _)| -g.coeff(0)).collect();
        let mut roots = roots;
        roots.sort();
        assert_eq!(roots, vec![rat(-38, 3), rat(16, 3), rat(22, 3)]);
        assert_eq!(f.expand(), c);
    }

    #[test]
    fn poly_sqrt_detects_squares() {
        let q = p(&[3, -2, 5]);
        assert_eq!(poly_sqrt(&q.mul_ref(&q)).map(|r| r.mul_ref(&r)), Some(q.mul_ref(&q)));
        assert!(poly_sqrt(&p(&[1, 0, 2])).is_none());
        assert_eq!(rational_roots(&p(&[6, -5, 1])), vec![rat(2, 1), rat(3, 1)]);
    }
}
