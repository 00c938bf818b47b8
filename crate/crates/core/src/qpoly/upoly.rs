//! Dense univariate polynomials over a generic coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{ExactDiv, Field, Rat, Ring};

/// Dense univariate polynomial; `c[i]` is the coefficient of `x^i`.
/// The zero polynomial has no coefficients; there are never trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<K> {
    c: Vec<K>,
}

impl<K: Ring> UPoly<K> {
    pub fn new(mut c: Vec<K>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(k: K) -> Self {
        Self::new(vec![k])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![K::zero(), K::one()])
    }

    pub fn monomial(k: K, n: usize) -> Self {
        let mut c = vec![K::zero(); n + 1];
        c[n] = k;
        Self::new(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&n| K::from_int(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.c
    }

    pub fn coeff(&self, i: usize) -> K {
        self.c.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn lead(&self) -> K {
        self.c.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn scale(&self, k: &K) -> Self {
        Self::new(self.c.iter().map(|a| a.times(k)).collect())
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(c)
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.minus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.negate(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(c)
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![K::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].plus(&a.times(b));
            }
        }
        Self::new(c)
    }

    pub fn neg_ref(&self) -> Self {
        Self::new(self.c.iter().map(|a| a.negate()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![K::zero(); n];
        c.extend(self.c.iter().cloned());
        Self::new(c)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for a in self.c.iter().rev() {
            acc = acc.times(x).plus(a);
        }
        acc
    }

    /// Evaluates at an element of an algebra over `K`.
    pub fn eval_in<R: Ring>(&self, x: &R, embed: impl Fn(&K) -> R) -> R {
        let mut acc = R::zero();
        for a in self.c.iter().rev() {
            acc = acc.times(x).plus(&embed(a));
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul_ref(g).add_ref(&Self::constant(a.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.times(&K::from_int(i as i64)))
                .collect(),
        )
    }

    /// Reverses the coefficient list of a polynomial regarded as having degree `n`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut c = vec![K::zero(); n + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[n - i] = a.clone();
        }
        Self::new(c)
    }

    pub fn map<R: Ring>(&self, f: impl Fn(&K) -> R) -> UPoly<R> {
        UPoly::new(self.c.iter().map(f).collect())
    }
}

impl<K: Field> UPoly<K> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lead().inverse().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let inv = d.lead().inverse().expect("nonzero leading coefficient");
        let mut r = self.c.clone();
        let mut q = vec![K::zero(); self.c.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = r[i + dd].times(&inv);
            if coef.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[i + j] = r[i + j].minus(&coef.times(b));
            }
            q[i] = coef;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        K::poly_gcd(self, o)
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub_ref(&q.mul_ref(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub_ref(&q.mul_ref(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lead().inverse().unwrap();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Yun's square-free decomposition: returns `[(a_1, 1), (a_2, 2), ...]`
    /// with monic, pairwise coprime `a_i` and `self = lc * prod a_i^i`.
    /// Only meaningful in characteristic zero.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.deg() <= 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_exact(&a).unwrap();
        let mut c = df.div_exact(&a).unwrap();
        let mut d = c.sub_ref(&b.derivative());
        let mut i = 1;
        while b.deg() > 0 {
            a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).unwrap();
            c = d.div_exact(&a).unwrap();
            d = c.sub_ref(&b.derivative());
            i += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.deg() <= 0 {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).unwrap().monic()
    }
}

/// Plain Euclidean gcd, normalized to be monic.
pub fn euclid_gcd<K: Field>(a: &UPoly<K>, b: &UPoly<K>) -> UPoly<K> {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let r = r0.rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
    }
    r0.monic()
}

impl<K: Ring> Ring for UPoly<K> {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn negate(&self) -> Self {
        self.neg_ref()
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(K::from_rat(r))
    }
}

impl<K: Field> ExactDiv for UPoly<K> {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        self.div_exact(other)
    }
}

macro_rules! upoly_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl<K: Ring> $tr<&UPoly<K>> for &UPoly<K> {
            type Output = UPoly<K>;
            fn $m(self, o: &UPoly<K>) -> UPoly<K> {
                self.$imp(o)
            }
        }
        impl<K: Ring> $tr<UPoly<K>> for UPoly<K> {
            type Output = UPoly<K>;
            fn $m(self, o: UPoly<K>) -> UPoly<K> {
                self.$imp(&o)
            }
        }
    };
}
upoly_binop!(Add, add, add_ref);
upoly_binop!(Sub, sub, sub_ref);
upoly_binop!(Mul, mul, mul_ref);

impl<K: Ring> Neg for &UPoly<K> {
    type Output = UPoly<K>;
    fn neg(self) -> UPoly<K> {
        self.neg_ref()
    }
}

impl<K: Ring> Neg for UPoly<K> {
    type Output = UPoly<K>;
    fn neg(self) -> UPoly<K> {
        self.neg_ref()
    }
}

impl fmt::Display for UPoly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl UPoly<Rat> {
    /// Renders the polynomial with the given variable name, highest degree first.
    pub fn display(&self, var: &str) -> String {
        use num_traits::Signed;
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if Ring::is_zero(a) {
                continue;
            }
            let neg = a.is_negative();
            let abs = a.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coeff = super::field::rat_to_string(&abs);
            match i {
                0 => s.push_str(&coeff),
                _ => {
                    if !Ring::is_one(&abs) {
                        s.push_str(&coeff);
                        s.push('*');
                    }
                    s.push_str(var);
                    if i > 1 {
                        s.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        s
    }
}
