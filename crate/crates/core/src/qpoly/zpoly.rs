//! Integer polynomial machinery: modular gcd and Zassenhaus factorization.
//!
//! Polynomials are `Vec<Int>` in ascending order without trailing zeros.
//! Arithmetic modulo word-sized primes uses `u64` with primes below 2^31,
//! so products never overflow.

use num_bigint::{BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Int, Rat, Ring};
use super::upoly::UPoly;

pub type ZPoly = Vec<Int>;

fn trim(v: &mut ZPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub fn content(f: &[Int]) -> Int {
    let mut g = Int::zero();
    for c in f {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(f: &[Int]) -> ZPoly {
    let c = content(f);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if f.last().unwrap().is_negative() { -c } else { c };
    let mut out: ZPoly = f.iter().map(|a| a / &sign).collect();
    trim(&mut out);
    out
}

/// Writes `p = c * q` with `q` a primitive integer polynomial with positive lead.
pub fn rat_to_primitive(p: &UPoly<Rat>) -> (Rat, ZPoly) {
    if p.is_zero() {
        return (<Rat as Ring>::zero(), Vec::new());
    }
    let mut l = Int::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let ints: ZPoly = p
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
        .collect();
    let prim = primitive(&ints);
    let c = Rat::new(ints.last().unwrap().clone(), l) / Rat::from_integer(prim.last().unwrap().clone());
    (c, prim)
}

pub fn to_rat_poly(f: &[Int]) -> UPoly<Rat> {
    UPoly::new(f.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

fn zmul(a: &[Int], b: &[Int]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(&mut c);
    c
}

/// Exact division over Z; `None` if `b` does not divide `a`.
pub fn zdiv_exact(a: &[Int], b: &[Int]) -> Option<ZPoly> {
    assert!(!b.is_empty());
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r: ZPoly = a.to_vec();
    let mut q = vec![Int::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let top = &r[i + db];
        if top.is_zero() {
            continue;
        }
        let (qi, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, c) in b.iter().enumerate() {
            r[i + j] -= &qi * c;
        }
        q[i] = qi;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

// ---------------------------------------------------------------------------
// word-size prime field arithmetic

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod_u(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    powmod_u(a, p - 2, p)
}

fn int_mod(c: &Int, p: u64) -> u64 {
    let r = c.mod_floor(&Int::from(p));
    r.to_u64().unwrap()
}

type PP = Vec<u64>;

fn ptrim(v: &mut PP) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn preduce(f: &[Int], p: u64) -> PP {
    let mut v: PP = f.iter().map(|c| int_mod(c, p)).collect();
    ptrim(&mut v);
    v
}

fn psub(a: &[u64], b: &[u64], p: u64) -> PP {
    let n = a.len().max(b.len());
    let mut c: PP = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    ptrim(&mut c);
    c
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> PP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + mulmod(x, y, p)) % p;
        }
    }
    ptrim(&mut c);
    c
}

fn pscale(a: &[u64], k: u64, p: u64) -> PP {
    let mut c: PP = a.iter().map(|&x| mulmod(x, k, p)).collect();
    ptrim(&mut c);
    c
}

fn pdivrem(a: &[u64], b: &[u64], p: u64) -> (PP, PP) {
    assert!(!b.is_empty());
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let db = b.len() - 1;
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    for i in (0..q.len()).rev() {
        let coef = mulmod(r[i + db], inv, p);
        if coef == 0 {
            continue;
        }
        for (j, &c) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + p - mulmod(coef, c, p)) % p;
        }
        q[i] = coef;
    }
    r.truncate(db);
    ptrim(&mut r);
    ptrim(&mut q);
    (q, r)
}

fn pmonic(a: &[u64], p: u64) -> PP {
    if a.is_empty() {
        return Vec::new();
    }
    pscale(a, inv_mod(*a.last().unwrap(), p), p)
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> PP {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    while !r1.is_empty() {
        let r = pdivrem(&r0, &r1, p).1;
        r0 = std::mem::replace(&mut r1, r);
    }
    pmonic(&r0, p)
}

/// Returns `(s, t)` with `s*a + t*b = 1` modulo p (inputs coprime).
fn pxgcd(a: &[u64], b: &[u64], p: u64) -> (PP, PP) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1): (PP, PP) = (vec![1], Vec::new());
    let (mut t0, mut t1): (PP, PP) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = pdivrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = psub(&s0, &pmul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = psub(&t0, &pmul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(r0.len(), 1, "pxgcd on non-coprime inputs");
    let inv = inv_mod(r0[0], p);
    (pscale(&s0, inv, p), pscale(&t0, inv, p))
}

fn pderiv(a: &[u64], p: u64) -> PP {
    let mut c: PP = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &x)| mulmod(x, i as u64 % p, p))
        .collect();
    ptrim(&mut c);
    c
}

fn ppowmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> PP {
    let mut acc: PP = vec![1];
    let base = pdivrem(base, m, p).1;
    let bits = e.bits();
    for i in (0..bits).rev() {
        acc = pdivrem(&pmul(&acc, &acc, p), m, p).1;
        if e.bit(i) {
            acc = pdivrem(&pmul(&acc, &base, p), m, p).1;
        }
    }
    acc
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial mod p.
fn distinct_degree(f: &[u64], p: u64) -> Vec<(PP, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x: PP = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0;
    let pe = BigUint::from(p);
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            let deg = f.len() - 1;
            out.push((f.clone(), deg));
            break;
        }
        h = ppowmod(&h, &pe, &f, p);
        let g = pgcd(&psub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = pdivrem(&f, &g, p).0;
            h = pdivrem(&h, &f, p).1;
            out.push((g, d));
        }
    }
    out
}

fn equal_degree(g: &[u64], d: usize, p: u64, rng: &mut XorShift, out: &mut Vec<PP>) {
    let n = g.len() - 1;
    if n == d {
        out.push(g.to_vec());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let mut a: PP = (0..n).map(|_| rng.next() % p).collect();
        ptrim(&mut a);
        if a.len() <= 1 {
            continue;
        }
        let b = psub(&ppowmod(&a, &e, g, p), &[1], p);
        let u = pgcd(&b, g, p);
        if u.len() > 1 && u.len() < g.len() {
            let v = pdivrem(g, &u, p).0;
            equal_degree(&u, d, p, rng, out);
            equal_degree(&pmonic(&v, p), d, p, rng, out);
            return;
        }
    }
}

fn factor_mod_p(f: &[u64], p: u64) -> Vec<PP> {
    let f = pmonic(f, p);
    let mut rng = XorShift(0x9E37_79B9_7F4A_7C15 ^ p);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&f, p) {
        equal_degree(&g, d, p, &mut rng, &mut out);
    }
    out
}

fn small_odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| is_prime_u64(n))
}

fn large_primes() -> impl Iterator<Item = u64> {
    (0..).map(|i| (1u64 << 31) - 1 - 2 * i).filter(|&n| is_prime_u64(n))
}

// ---------------------------------------------------------------------------
// modular gcd

fn symmetric_mod(c: &Int, m: &Int) -> Int {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// gcd of two primitive integer polynomials, primitive with positive lead.
pub fn zgcd(a: &[Int], b: &[Int]) -> ZPoly {
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    if a.len() == 1 || b.len() == 1 {
        return vec![Int::one()];
    }
    let lg = a.last().unwrap().gcd(b.last().unwrap());
    let mut best_deg = usize::MAX;
    let mut acc: Option<(ZPoly, Int)> = None;
    for p in large_primes() {
        let pi = Int::from(p);
        if (a.last().unwrap() % &pi).is_zero() || (b.last().unwrap() % &pi).is_zero() {
            continue;
        }
        let g = pgcd(&preduce(a, p), &preduce(b, p), p);
        let dg = g.len() - 1;
        if dg == 0 {
            return vec![Int::one()];
        }
        if dg > best_deg {
            continue;
        }
        let g = pscale(&g, int_mod(&lg, p), p);
        let gz: ZPoly = g.iter().map(|&c| Int::from(c)).collect();
        if dg < best_deg {
            best_deg = dg;
            acc = Some((gz.iter().map(|c| symmetric_mod(c, &pi)).collect(), pi));
            continue;
        }
        let (prev, m) = acc.take().unwrap();
        // CRT combine
        let m_inv_p = inv_mod(int_mod(&m, p), p);
        let mut next = Vec::with_capacity(prev.len());
        for (i, c_prev) in prev.iter().enumerate() {
            let r = int_mod(c_prev, p);
            let gi = g.get(i).copied().unwrap_or(0);
            let delta = mulmod((gi + p - r) % p, m_inv_p, p);
            next.push(c_prev + &m * Int::from(delta));
        }
        let mm = &m * &pi;
        let next: ZPoly = next.iter().map(|c| symmetric_mod(c, &mm)).collect();
        let stable = next == prev;
        acc = Some((next.clone(), mm));
        if stable {
            let cand = primitive(&next);
            if zdiv_exact(a, &cand).is_some() && zdiv_exact(b, &cand).is_some() {
                return cand;
            }
        }
    }
    unreachable!()
}

/// Monic gcd over Q via the modular algorithm.
pub fn rat_poly_gcd(a: &UPoly<Rat>, b: &UPoly<Rat>) -> UPoly<Rat> {
    if a.is_zero() && b.is_zero() {
        return UPoly::zero();
    }
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.deg() == 0 || b.deg() == 0 {
        return UPoly::one();
    }
    let (_, pa) = rat_to_primitive(a);
    let (_, pb) = rat_to_primitive(b);
    to_rat_poly(&zgcd(&pa, &pb)).monic()
}

// ---------------------------------------------------------------------------
// Zassenhaus factorization

fn zmod(v: &[Int], m: &Int) -> ZPoly {
    let mut out: ZPoly = v.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut out);
    out
}

fn zsub(a: &[Int], b: &[Int]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut c: ZPoly = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(Int::zero) - b.get(i).cloned().unwrap_or_else(Int::zero)
        })
        .collect();
    trim(&mut c);
    c
}

fn zadd(a: &[Int], b: &[Int]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut c: ZPoly = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(Int::zero) + b.get(i).cloned().unwrap_or_else(Int::zero)
        })
        .collect();
    trim(&mut c);
    c
}

/// Division by a monic polynomial modulo m.
fn zdivrem_monic(a: &[Int], h: &[Int], m: &Int) -> (ZPoly, ZPoly) {
    let a = zmod(a, m);
    if a.len() < h.len() {
        return (Vec::new(), a);
    }
    let dh = h.len() - 1;
    let mut r = a.clone();
    let mut q = vec![Int::zero(); a.len() - dh];
    for i in (0..q.len()).rev() {
        let coef = r[i + dh].mod_floor(m);
        if coef.is_zero() {
            continue;
        }
        for (j, c) in h.iter().enumerate() {
            r[i + j] = (&r[i + j] - &coef * c).mod_floor(m);
        }
        q[i] = coef;
    }
    r.truncate(dh);
    (zmod(&q, m), zmod(&r, m))
}

fn to_z(v: &[u64]) -> ZPoly {
    v.iter().map(|&c| Int::from(c)).collect()
}

/// One quadratic Hensel step: from modulus m to m^2 (both factors monic).
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[Int],
    g: &[Int],
    h: &[Int],
    s: &[Int],
    t: &[Int],
    m: &Int,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zmod(&zsub(f, &zmul(g, h)), &m2);
    let (q, r) = zdivrem_monic(&zmul(s, &e), h, &m2);
    let g2 = zmod(&zadd(&zadd(g, &zmul(t, &e)), &zmul(&q, g)), &m2);
    let h2 = zmod(&zadd(h, &r), &m2);
    let b = zmod(&zsub(&zadd(&zmul(s, &g2), &zmul(t, &h2)), &[Int::one()]), &m2);
    let (c, d) = zdivrem_monic(&zmul(s, &b), &h2, &m2);
    let s2 = zmod(&zsub(s, &d), &m2);
    let t2 = zmod(&zsub(&zsub(t, &zmul(t, &b)), &zmul(&c, &g2)), &m2);
    (g2, h2, s2, t2)
}

/// Lifts the monic factorization `f = prod facs (mod p)` to modulus `p^(2^k)`.
fn hensel_lift(f: &[Int], facs: &[PP], p: u64, k: u32) -> Vec<ZPoly> {
    let big_m = Int::from(p).pow(1u32 << k);
    if facs.len() == 1 {
        return vec![zmod(f, &big_m)];
    }
    let half = facs.len() / 2;
    let g0 = facs[..half].iter().fold(vec![1u64], |acc, x| pmul(&acc, x, p));
    let h0 = facs[half..].iter().fold(vec![1u64], |acc, x| pmul(&acc, x, p));
    let (s0, t0) = pxgcd(&g0, &h0, p);
    let (mut g, mut h, mut s, mut t) = (to_z(&g0), to_z(&h0), to_z(&s0), to_z(&t0));
    let mut m = Int::from(p);
    for _ in 0..k {
        let r = hensel_step(f, &g, &h, &s, &t, &m);
        g = r.0;
        h = r.1;
        s = r.2;
        t = r.3;
        m = &m * &m;
    }
    let mut out = hensel_lift(&g, &facs[..half], p, k);
    out.extend(hensel_lift(&h, &facs[half..], p, k));
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Factors a primitive, squarefree integer polynomial of positive degree
/// (positive leading coefficient) into irreducibles over Z.
pub fn factor_squarefree_z(f: &[Int]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();
    // choose a prime giving the fewest modular factors
    let mut best: Option<(u64, Vec<PP>)> = None;
    let mut tried = 0;
    for p in small_odd_primes() {
        if (&lc % Int::from(p)).is_zero() {
            continue;
        }
        let fp = preduce(f, p);
        if pgcd(&fp, &pderiv(&fp, p), p).len() != 1 {
            continue;
        }
        let facs = factor_mod_p(&fp, p);
        if facs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (p, facs) = best.unwrap();
    // coefficient bound for any factor, times the leading coefficient
    let norm2: Int = f.iter().map(|c| c * c).sum::<Int>().sqrt() + Int::one();
    let bound = (Int::one() << n) * norm2 * lc.abs() * 2;
    let mut k = 0u32;
    while Int::from(p).pow(1u32 << k) <= bound {
        k += 1;
    }
    let big_m = Int::from(p).pow(1u32 << k);
    let lc_inv = lc.modinv(&big_m).expect("lc invertible mod p^k");
    let f_monic = zmod(&f.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &big_m);
    let mut lifted = hensel_lift(&f_monic, &facs, p, k);

    let mut result = Vec::new();
    let mut cur = f.to_vec();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        for combo in combinations(lifted.len(), s) {
            let lcc = cur.last().unwrap().clone();
            let mut prod = vec![lcc];
            for &i in &combo {
                prod = zmod(&zmul(&prod, &lifted[i]), &big_m);
            }
            let cand: ZPoly = prod.iter().map(|c| symmetric_mod(c, &big_m)).collect();
            let cand = primitive(&cand);
            if let Some(q) = zdiv_exact(&cur, &cand) {
                found = Some((combo, cand, q));
                break;
            }
        }
        match found {
            Some((combo, cand, q)) => {
                result.push(cand);
                cur = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, x)| x)
                    .collect();
            }
            None => s += 1,
        }
    }
    if cur.len() > 1 {
        result.push(primitive(&cur));
    }
    result
}

/// Sign of a big integer as -1, 0, 1.
/// False only when `f` certainly has no rational root, witnessed by a prime
/// modulo which `f` keeps its degree and has no root.
pub fn may_have_rational_root(f: &[Int]) -> bool {
    if f.len() <= 2 {
        return true;
    }
    if f[0].is_zero() {
        return true;
    }
    for p in [1_000_003u64, 998_244_353, 1_000_000_007] {
        let fp = preduce(f, p);
        if fp.len() != f.len() {
            continue;
        }
        let x = vec![0, 1];
        let xp = ppowmod(&x, &BigUint::from(p), &fp, p);
        let g = pgcd(&fp, &psub(&xp, &x, p), p);
        if g.len() <= 1 {
            return false;
        }
    }
    true
}

pub fn sign_of(c: &Int) -> i32 {
    match c.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        c.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn modular_gcd_matches_known_factor() {
        let a = zmul(&z(&[-1, 1]), &z(&[5, 0, 3]));
        let b = zmul(&z(&[-1, 1]), &z(&[7, 2, 0, 1]));
        assert_eq!(zgcd(&a, &b), z(&[-1, 1]));
        let c = zmul(&z(&[2, 3]), &z(&[2, 3]));
        let d = zmul(&z(&[2, 3]), &z(&[1, 1]));
        assert_eq!(zgcd(&c, &d), z(&[2, 3]));
    }

    #[test]
    fn factors_swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible but splits mod every prime
        let f = z(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_squarefree_z(&f), vec![f.clone()]);
    }

    #[test]
    fn factors_product_of_three() {
        let f = zmul(&zmul(&z(&[-1, 1]), &z(&[1, 0, 1])), &z(&[3, 0, 0, 2]));
        let mut facs = factor_squarefree_z(&f);
        facs.sort_by_key(|g| g.len());
        assert_eq!(facs.len(), 3);
        let prod = facs.iter().fold(z(&[1]), |a, b| zmul(&a, b));
        assert_eq!(primitive(&prod), primitive(&f));
    }

    #[test]
    fn combos_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(3, 1).len(), 3);
    }
}
