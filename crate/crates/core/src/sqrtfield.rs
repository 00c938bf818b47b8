//! Rational functions in one variable and the quadratic extension
//! Q(t)[θ]/(θ² − P(t)).

use std::fmt;
use std::sync::Arc;

use crate::qpoly::field::{rat_square_split, Field, Rat, Ring};
use crate::qpoly::factor::primitive_rat;
use crate::qpoly::UPoly;

/// Reduced quotient of univariate polynomials with a monic denominator.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc {
    num: UPoly<Rat>,
    den: UPoly<Rat>,
}

impl RatFunc {
    pub fn new(num: UPoly<Rat>, den: UPoly<Rat>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from_poly(UPoly::zero());
        }
        if den.is_constant() {
            let d = den.lead();
            return RatFunc { num: num.scale(&d.recip()), den: UPoly::one() };
        }
        let g = num.gcd(&den);
        let (n, d) = if g.deg() > 0 {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        } else {
            (num, den)
        };
        let l = d.lead().recip();
        RatFunc { num: n.scale(&l), den: d.scale(&l) }
    }

    pub fn from_poly(p: UPoly<Rat>) -> Self {
        RatFunc { num: p, den: UPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    /// The parameter t.
    pub fn t() -> Self {
        Self::from_poly(UPoly::x())
    }

    pub fn num(&self) -> &UPoly<Rat> {
        &self.num
    }

    pub fn den(&self) -> &UPoly<Rat> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        (self.num.deg() <= 0 && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    /// Value at `t0`, or `None` at a pole.
    pub fn eval(&self, t0: &Rat) -> Option<Rat> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(t0) / d)
    }

    pub fn derivative(&self) -> Self {
        let n = self
            .num
            .derivative()
            .mul_ref(&self.den)
            .sub_ref(&self.num.mul_ref(&self.den.derivative()));
        Self::new(n, self.den.mul_ref(&self.den))
    }

    /// Substitutes a Möbius transformation t -> (a t + b)/(c t + d).
    pub fn mobius(&self, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Self {
        let top = UPoly::new(vec![b.clone(), a.clone()]);
        let bot = UPoly::new(vec![d.clone(), c.clone()]);
        let hom = |p: &UPoly<Rat>, n: usize| {
            let mut acc = UPoly::zero();
            for (i, k) in p.coeffs().iter().enumerate() {
                acc = acc.add_ref(&top.pow(i as u32).mul_ref(&bot.pow((n - i) as u32)).scale(k));
            }
            acc
        };
        let n = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        Self::new(hom(&self.num, n), hom(&self.den, n))
    }

    pub fn display(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.display(var)
        } else {
            format!("({})/({})", self.num.display(var), self.den.display(var))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("t"))
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add_ref(&o.num), self.den.clone());
        }
        Self::new(
            self.num.mul_ref(&o.den).add_ref(&o.num.mul_ref(&self.den)),
            self.den.mul_ref(&o.den),
        )
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negate())
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul_ref(&o.num));
        }
        Self::new(self.num.mul_ref(&o.num), self.den.mul_ref(&o.den))
    }
    fn negate(&self) -> Self {
        RatFunc { num: self.num.neg_ref(), den: self.den.clone() }
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(r.clone())
    }
}

impl Field for RatFunc {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()))
    }
}

/// Writes `r = c² · P` with `P` a square-free polynomial.
///
/// `P` is an integer polynomial with positive leading coefficient whose
/// content is a square-free integer. Zero maps to `(0, 1)`.
pub fn normalize_radicand(r: &RatFunc) -> (RatFunc, UPoly<Rat>) {
    if r.is_zero() {
        return (RatFunc::zero(), UPoly::one());
    }
    // r = n/d = n·d / d²
    let m = r.num.mul_ref(&r.den);
    let lead = m.lead();
    let mut square = UPoly::one();
    let mut odd = UPoly::one();
    for (s, e) in m.squarefree_decomposition() {
        if e >= 2 {
            square = square.mul_ref(&s.pow(e / 2));
        }
        if e % 2 == 1 {
            odd = odd.mul_ref(&s);
        }
    }
    // m = lead · square² · odd with square, odd monic; odd = pp / kappa
    let pp = primitive_rat(&odd);
    let kappa = pp.lead();
    let k0 = &lead / &kappa;
    let (c0, k) = rat_square_split(&k0);
    let p = pp.scale(&Rat::from_integer(k));
    let c = RatFunc::new(square.scale(&c0), r.den.clone());
    (c, p)
}

/// Element r0 + r1·θ with θ² = P.
#[derive(Clone, Debug)]
pub struct SqrtElem {
    r0: RatFunc,
    r1: RatFunc,
    radicand: Option<Arc<UPoly<Rat>>>,
}

fn shared(a: &Option<Arc<UPoly<Rat>>>, b: &Option<Arc<UPoly<Rat>>>) -> Option<Arc<UPoly<Rat>>> {
    match (a, b) {
        (None, None) => None,
        (Some(p), None) | (None, Some(p)) => Some(p.clone()),
        (Some(p), Some(q)) => {
            assert!(Arc::ptr_eq(p, q) || p == q, "mixing square-root elements with different radicands");
            Some(p.clone())
        }
    }
}

impl SqrtElem {
    pub fn new(r0: RatFunc, r1: RatFunc, radicand: &Arc<UPoly<Rat>>) -> Self {
        if r1.is_zero() {
            return Self::rational(r0);
        }
        assert!(!radicand.is_one(), "radicand 1 must be split into rational branches");
        SqrtElem { r0, r1, radicand: Some(radicand.clone()) }
    }

    pub fn rational(r0: RatFunc) -> Self {
        SqrtElem { r0, r1: RatFunc::zero(), radicand: None }
    }

    /// θ itself.
    pub fn theta(radicand: &Arc<UPoly<Rat>>) -> Self {
        Self::new(RatFunc::zero(), RatFunc::one(), radicand)
    }

    pub fn r0(&self) -> &RatFunc {
        &self.r0
    }

    pub fn r1(&self) -> &RatFunc {
        &self.r1
    }

    pub fn radicand(&self) -> Option<&Arc<UPoly<Rat>>> {
        self.radicand.as_ref()
    }

    /// The Galois involution θ -> −θ.
    pub fn conjugate(&self) -> Self {
        SqrtElem { r0: self.r0.clone(), r1: self.r1.negate(), radicand: self.radicand.clone() }
    }

    pub fn is_rational(&self) -> bool {
        self.r1.is_zero()
    }

    pub fn rational_part(&self) -> Option<RatFunc> {
        self.is_rational().then(|| self.r0.clone())
    }

    /// e · conj(e) = r0² − r1²·P.
    pub fn norm(&self) -> RatFunc {
        match &self.radicand {
            None => self.r0.times(&self.r0),
            Some(p) => {
                let pr = RatFunc::from_poly((**p).clone());
                self.r0.times(&self.r0).minus(&self.r1.times(&self.r1).times(&pr))
            }
        }
    }

    fn p_func(&self) -> Option<RatFunc> {
        self.radicand.as_ref().map(|p| RatFunc::from_poly((**p).clone()))
    }

    fn build(r0: RatFunc, r1: RatFunc, rad: Option<Arc<UPoly<Rat>>>) -> Self {
        if r1.is_zero() {
            SqrtElem { r0, r1, radicand: None }
        } else {
            SqrtElem { r0, r1, radicand: rad }
        }
    }
}

impl PartialEq for SqrtElem {
    fn eq(&self, o: &Self) -> bool {
        if !self.r1.is_zero() || !o.r1.is_zero() {
            if let (Some(p), Some(q)) = (&self.radicand, &o.radicand) {
                if p != q {
                    return false;
                }
            }
        }
        self.r0 == o.r0 && self.r1 == o.r1
    }
}

impl Ring for SqrtElem {
    fn zero() -> Self {
        Self::rational(RatFunc::zero())
    }
    fn one() -> Self {
        Self::rational(RatFunc::one())
    }
    fn is_zero(&self) -> bool {
        self.r0.is_zero() && self.r1.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        let rad = shared(&self.radicand, &o.radicand);
        Self::build(self.r0.plus(&o.r0), self.r1.plus(&o.r1), rad)
    }
    fn minus(&self, o: &Self) -> Self {
        let rad = shared(&self.radicand, &o.radicand);
        Self::build(self.r0.minus(&o.r0), self.r1.minus(&o.r1), rad)
    }
    fn times(&self, o: &Self) -> Self {
        let rad = shared(&self.radicand, &o.radicand);
        if self.r1.is_zero() {
            return Self::build(o.r0.times(&self.r0), o.r1.times(&self.r0), rad);
        }
        if o.r1.is_zero() {
            return Self::build(self.r0.times(&o.r0), self.r1.times(&o.r0), rad);
        }
        let p = self.p_func().unwrap();
        let r0 = self.r0.times(&o.r0).plus(&self.r1.times(&o.r1).times(&p));
        let r1 = self.r0.times(&o.r1).plus(&self.r1.times(&o.r0));
        Self::build(r0, r1, rad)
    }
    fn negate(&self) -> Self {
        SqrtElem { r0: self.r0.negate(), r1: self.r1.negate(), radicand: self.radicand.clone() }
    }
    fn from_rat(r: &Rat) -> Self {
        Self::rational(RatFunc::constant(r.clone()))
    }
}

impl Field for SqrtElem {
    /// Inverse through the norm; `None` for zero (and for zero divisors,
    /// which cannot occur when P is not a square).
    fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        let ni = n.inverse()?;
        let c = self.conjugate();
        Some(Self::build(c.r0.times(&ni), c.r1.times(&ni), c.radicand))
    }
}

impl fmt::Display for SqrtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r1.is_zero() {
            return write!(f, "{}", self.r0);
        }
        write!(f, "{} + ({})*sqrt({})", self.r0, self.r1, self.radicand.as_ref().unwrap().display("t"))
    }
}

/// Roots of a·X² + b·X + c over Q(t)[θ] and the shared radicand P.
///
/// With P = 1 the discriminant is a perfect square and both roots are
/// rational elements.
pub fn solve_quadratic(
    a: &RatFunc,
    b: &RatFunc,
    c: &RatFunc,
) -> Result<(SqrtElem, SqrtElem, UPoly<Rat>), crate::qpoly::QpolyError> {
    if a.is_zero() {
        return Err(crate::qpoly::QpolyError::Degenerate(
            "leading coefficient of the quadratic vanishes".into(),
        ));
    }
    let four = RatFunc::constant(Rat::from_integer(4.into()));
    let disc = b.times(b).minus(&four.times(a).times(c));
    let (cd, p) = normalize_radicand(&disc);
    let two_a_inv = a.times(&RatFunc::constant(Rat::from_integer(2.into()))).inverse().unwrap();
    let base = b.negate().times(&two_a_inv);
    let off = cd.times(&two_a_inv);
    if p.is_one() {
        let plus = SqrtElem::rational(base.plus(&off));
        let minus = SqrtElem::rational(base.minus(&off));
        return Ok((plus, minus, p));
    }
    let rad = Arc::new(p.clone());
    let plus = SqrtElem::new(base.clone(), off.clone(), &rad);
    let minus = SqrtElem::new(base, off.negate(), &rad);
    Ok((plus, minus, p))
}

/// True when r is a square in Q(t).
pub fn is_square(r: &RatFunc) -> bool {
    if r.is_zero() {
        return true;
    }
    let (_, p) = normalize_radicand(r);
    p.is_one()
}
