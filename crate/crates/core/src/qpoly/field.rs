//! Coefficient traits shared by every polynomial type in the crate.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Commutative ring with identity. Method names avoid clashing with `std::ops`.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::from_integer(n.into()))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// A ring in which nonzero elements are invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;

    fn divide(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.times(&inv))
    }

    /// Hook for fields with a faster univariate gcd than plain Euclid.
    fn poly_gcd(
        a: &super::upoly::UPoly<Self>,
        b: &super::upoly::UPoly<Self>,
    ) -> super::upoly::UPoly<Self> {
        super::upoly::euclid_gcd(a, b)
    }
}

/// Integral domain with exact division, used by fraction-free elimination.
pub trait ExactDiv: Ring {
    /// `self / other` when the quotient exists in the ring.
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

impl Field for Rat {
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn poly_gcd(
        a: &super::upoly::UPoly<Self>,
        b: &super::upoly::UPoly<Self>,
    ) -> super::upoly::UPoly<Self> {
        super::zpoly::rat_poly_gcd(a, b)
    }
}

impl ExactDiv for Rat {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.divide(other)
    }
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn rint(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Height of a rational number: max(|p|, q).
pub fn height(r: &Rat) -> Int {
    let n = r.numer().abs();
    let d = r.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

/// Exact `p/q` (or `p`) rendering used in machine-readable output.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: Int = n.trim().parse().ok()?;
        let d: Int = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: Int = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(r.numer())?;
    let d = int_sqrt_exact(r.denom())?;
    Some(Rat::new(n, d))
}

pub fn int_sqrt_exact(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

/// Writes `r = c^2 * d` with `d` a squarefree integer, returning `(c, d)`.
/// Trial division handles small prime squares; any leftover cofactor is kept
/// in `d`, so `d` is squarefree up to the trial bound (which is enough for the
/// radicands produced here, and the result is exact either way).
pub fn rat_square_split(r: &Rat) -> (Rat, Int) {
    if Zero::is_zero(r) {
        return (<Rat as Zero>::zero(), Int::one());
    }
    // r = n/d = n*d / d^2
    let num = r.numer() * r.denom();
    let (c, rest) = int_square_split(&num);
    (Rat::new(c, r.denom().clone()), rest)
}

fn int_square_split(n: &Int) -> (Int, Int) {
    let sign = if n.is_negative() { -Int::one() } else { Int::one() };
    let mut m = n.abs();
    let mut c = Int::one();
    if let Some(s) = int_sqrt_exact(&m) {
        return (s, sign);
    }
    let mut p: u64 = 2;
    while p < 20_000 {
        let pp = Int::from(p * p);
        if pp > m {
            break;
        }
        let pi = Int::from(p);
        while (&m % &pp).is_zero() {
            m /= &pp;
            c *= &pi;
        }
        p +=if p == 2 { 1 } else { 2 };
    }
    if let Some(s) = int_sqrt_exact(&m) {
        return (c * s, sign);
    }
    (c, sign * m)
}

pub fn lcm_int(a: &Int, b: &Int) -> Int {
    a.lcm(b)
}
