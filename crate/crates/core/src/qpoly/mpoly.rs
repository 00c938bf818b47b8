//! Sparse multivariate polynomials.
//!
//! Variables are identified by index. Exponent vectors are stored with
//! trailing zeros trimmed, so polynomials in different numbers of variables
//! interoperate and the constant monomial is always the empty vector. The
//! `BTreeMap` order on trimmed vectors is lexicographic order with the first
//! variable most significant, which gives every polynomial one canonical
//! representation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed};

use super::field::{rat_to_string, ExactDiv, Field, Int, Rat, Ring};
use super::upoly::UPoly;

pub type Exp = Vec<u32>;

fn trim_exp(mut e: Exp) -> Exp {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn add_exp(a: &[u32], b: &[u32]) -> Exp {
    let n = a.len().max(b.len());
    trim_exp(
        (0..n)
            .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
            .collect(),
    )
}

fn sub_exp(a: &[u32], b: &[u32]) -> Option<Exp> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        if x < y {
            return None;
        }
        out.push(x - y);
    }
    Some(trim_exp(out))
}

pub fn exp_of(e: &[u32], i: usize) -> u32 {
    e.get(i).copied().unwrap_or(0)
}

#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<K> {
    terms: BTreeMap<Exp, K>,
}

impl<K: Ring> MPoly<K> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(k: K) -> Self {
        Self::monomial(k, Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self::monomial(K::one(), e)
    }

    pub fn monomial(k: K, e: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(trim_exp(e), k);
        }
        MPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exp, K)>) -> Self {
        let mut p = Self::zero();
        for (e, k) in it {
            p.add_term(trim_exp(e), k);
        }
        p
    }

    fn add_term(&mut self, e: Exp, k: K) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().plus(&k);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &K)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_empty())
    }

    pub fn constant_term(&self) -> K {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeff(&self, e: &[u32]) -> K {
        self.terms
            .get(&trim_exp(e.to_vec()))
            .cloned()
            .unwrap_or_else(K::zero)
    }

    /// Lexicographically leading term.
    pub fn leading(&self) -> Option<(&Exp, &K)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum::<i64>())
            .max()
            .unwrap_or(-1)
    }

    pub fn degree_in(&self, i: usize) -> i64 {
        self.terms
            .keys()
            .map(|e| exp_of(e, i) as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|e| exp_of(e, i) > 0)
    }

    /// One more than the largest variable index that appears.
    pub fn nvars_used(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.times(k)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, k) in &o.terms {
            r.add_term(e.clone(), k.clone());
        }
        r
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, k) in &o.terms {
            r.add_term(e.clone(), k.negate());
        }
        r
    }

    pub fn neg_ref(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.negate())).collect(),
        }
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut acc: BTreeMap<Exp, K> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = add_exp(e1, e2);
                let c = c1.times(c2);
                match acc.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut oc) => {
                        let s = oc.get().plus(&c);
                        *oc.get_mut() = s;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }

    pub fn mul_monomial(&self, k: &K, e: &[u32]) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e1, c)| (add_exp(e1, e), c.times(k)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    pub fn map_coeffs<R: Ring>(&self, f: impl Fn(&K) -> R) -> MPoly<R> {
        MPoly::from_terms(self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(e, c)| {
            let d = exp_of(e, i);
            if d == 0 {
                return None;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            Some((e2, c.times(&K::from_int(d as i64))))
        }))
    }

    /// Evaluates at a point whose coordinates live in an algebra over `K`.
    pub fn eval_in<R: Ring>(&self, pt: &[R], embed: impl Fn(&K) -> R) -> R {
        let mut cache: Vec<Vec<R>> = pt.iter().map(|x| vec![R::one(), x.clone()]).collect();
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut m = embed(c);
            for (i, &d) in e.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let d = d as usize;
                while cache[i].len() <= d {
                    let next = cache[i].last().unwrap().times(&pt[i]);
                    cache[i].push(next);
                }
                m = m.times(&cache[i][d]);
            }
            acc = acc.plus(&m);
        }
        acc
    }

    pub fn eval(&self, pt: &[K]) -> K {
        self.eval_in(pt, |c| c.clone())
    }

    /// Replaces every variable `j` by `images[j]`.
    pub fn compose(&self, images: &[MPoly<K>]) -> MPoly<K> {
        self.eval_in(images, |c| MPoly::constant(c.clone()))
    }

    /// Replaces variable `i` by `q`, leaving the other variables in place.
    pub fn substitute(&self, i: usize, q: &MPoly<K>) -> MPoly<K> {
        let n = self.nvars_used().max(q.nvars_used()).max(i + 1);
        let images: Vec<MPoly<K>> = (0..n)
            .map(|j| if j == i { q.clone() } else { MPoly::var(j) })
            .collect();
        self.compose(&images)
    }

    /// Views the polynomial as univariate in variable `i` with polynomial coefficients.
    pub fn as_univariate(&self, i: usize) -> UPoly<MPoly<K>> {
        let d = self.degree_in(i);
        if d < 0 {
            return UPoly::zero();
        }
        let mut coeffs = vec![MPoly::zero(); d as usize + 1];
        for (e, c) in &self.terms {
            let k = exp_of(e, i) as usize;
            let mut e2 = e.clone();
            if i < e2.len() {
                e2[i] = 0;
            }
            coeffs[k].add_term(trim_exp(e2), c.clone());
        }
        UPoly::new(coeffs)
    }

    pub fn from_univariate(i: usize, u: &UPoly<MPoly<K>>) -> Self {
        let mut acc = Self::zero();
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; i + 1];
            e[i] = k as u32;
            acc = acc.add_ref(&c.mul_monomial(&K::one(), &e));
        }
        acc
    }

    /// Converts to a dense univariate polynomial when only variable `i` occurs.
    pub fn to_upoly(&self, i: usize) -> Option<UPoly<K>> {
        let d = self.degree_in(i).max(0) as usize;
        let mut c = vec![K::zero(); d + 1];
        for (e, k) in &self.terms {
            if e.iter().enumerate().any(|(j, &x)| j != i && x > 0) {
                return None;
            }
            c[exp_of(e, i) as usize] = k.clone();
        }
        Some(UPoly::new(c))
    }

    pub fn from_upoly(i: usize, u: &UPoly<K>) -> Self {
        Self::from_terms(u.coeffs().iter().enumerate().map(|(k, c)| {
            let mut e = vec![0; i + 1];
            e[i] = k as u32;
            (e, c.clone())
        }))
    }

    /// Homogenizes with a new variable at index `h` (which must not occur).
    pub fn homogenize(&self, h: usize) -> Self {
        let d = self.total_degree().max(0) as u32;
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let deg: u32 = e.iter().sum();
            let mut e2 = e.clone();
            if e2.len() <= h {
                e2.resize(h + 1, 0);
            }
            e2[h] = d - deg;
            (e2, c.clone())
        }))
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// Lowest total degree among the terms (order at the origin).
    pub fn order(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum::<i64>())
            .min()
            .unwrap_or(-1)
    }
}

impl<K: Field> MPoly<K> {
    /// Exact multivariate division by lexicographic leading terms.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (ld, lc) = d.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let lc_inv = lc.inverse().unwrap();
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((lr, cr)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let m = sub_exp(&lr, &ld)?;
            let c = cr.times(&lc_inv);
            r = r.sub_ref(&d.mul_monomial(&c, &m));
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.inverse().unwrap()),
        }
    }
}

impl MPoly<Rat> {
    /// Scales to integer coefficients with gcd 1 and a positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den = Int::one();
        let mut num = Int::from(0);
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        for c in self.terms.values() {
            num = num.gcd(&(c * Rat::from_integer(den.clone())).to_integer());
        }
        let mut f = Rat::new(den, num);
        if self.leading().unwrap().1.is_negative() {
            f = -f;
        }
        self.scale(&f)
    }

    /// True when the two polynomials differ by a nonzero rational factor.
    pub fn proportional(&self, o: &Self) -> bool {
        self.primitive() == o.primitive()
    }

    /// Renders with the given variable names, highest term first.
    pub fn display(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut mono = Vec::new();
            for (i, &d) in e.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let name = names.get(i).copied().map(String::from).unwrap_or(format!("v{i}"));
                if d == 1 {
                    mono.push(name);
                } else {
                    mono.push(format!("{name}^{d}"));
                }
            }
            if mono.is_empty() {
                s.push_str(&rat_to_string(&abs));
            } else {
                if !Ring::is_one(&abs) {
                    s.push_str(&rat_to_string(&abs));
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for MPoly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&["x", "y", "z", "w"]))
    }
}

impl<K: Ring> Ring for MPoly<K> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        MPoly::constant(K::from_rat(r))
    }
}

impl<K: Field> ExactDiv for MPoly<K> {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        self.div_exact(other)
    }
}

macro_rules! mpoly_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl<K: Ring> $tr<&MPoly<K>> for &MPoly<K> {
            type Output = MPoly<K>;
            fn $m(self, o: &MPoly<K>) -> MPoly<K> {
                self.$imp(o)
            }
        }
        impl<K: Ring> $tr<MPoly<K>> for MPoly<K> {
            type Output = MPoly<K>;
            fn $m(self, o: MPoly<K>) -> MPoly<K> {
                self.$imp(&o)
            }
        }
        impl<K: Ring> $tr<&MPoly<K>> for MPoly<K> {
            type Output = MPoly<K>;
            fn $m(self, o: &MPoly<K>) -> MPoly<K> {
                self.$imp(o)
            }
        }
    };
}
mpoly_binop!(Add, add, add_ref);
mpoly_binop!(Sub, sub, sub_ref);
mpoly_binop!(Mul, mul, mul_ref);

impl<K: Ring> Neg for &MPoly<K> {
    type Output = MPoly<K>;
    fn neg(self) -> MPoly<K> {
        self.neg_ref()
    }
}

impl<K: Ring> Neg for MPoly<K> {
    type Output = MPoly<K>;
    fn neg(self) -> MPoly<K> {
        self.neg_ref()
    }
}

/// Shorthand constructors for rational polynomials in tests and fixtures.
pub fn qvar(i: usize) -> MPoly<Rat> {
    MPoly::var(i)
}

pub fn qconst(n: i64) -> MPoly<Rat> {
    MPoly::constant(Rat::from_integer(n.into()))
}

pub fn qconst_rat(r: &Rat) -> MPoly<Rat> {
    MPoly::constant(r.clone())
}
