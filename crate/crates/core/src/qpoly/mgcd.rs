//! Multivariate gcd over Q by recursive primitive remainder sequences, and
//! square-free reduction of multivariate polynomials.

use super::field::{rint, Rat};
use super::mpoly::MPoly;
use super::upoly::UPoly;
use super::zpoly::rat_poly_gcd;

fn main_var(a: &MPoly<Rat>, b: &MPoly<Rat>) -> Option<usize> {
    let n = a.nvars_used().max(b.nvars_used());
    (0..n).rev().find(|&i| a.involves(i) || b.involves(i))
}

fn content(p: &UPoly<MPoly<Rat>>) -> MPoly<Rat> {
    let mut c = MPoly::zero();
    for k in p.coeffs() {
        c = mgcd(&c, k);
        if c.is_constant() && !c.is_zero() {
            return MPoly::one();
        }
    }
    c
}

fn divide_coeffs(p: &UPoly<MPoly<Rat>>, c: &MPoly<Rat>) -> UPoly<MPoly<Rat>> {
    UPoly::new(
        p.coeffs()
            .iter()
            .map(|k| k.div_exact(c).expect("content divides every coefficient"))
            .collect(),
    )
}

fn prem(a: &UPoly<MPoly<Rat>>, b: &UPoly<MPoly<Rat>>) -> UPoly<MPoly<Rat>> {
    let db = b.deg();
    let lb = b.lead();
    let mut r = a.clone();
    while !r.is_zero() && r.deg() >= db {
        let shift = (r.deg() - db) as usize;
        let lr = r.lead();
        r = r.scale(&lb).sub_ref(&b.shift(shift).scale(&lr));
    }
    r
}

fn primitive_part(p: &UPoly<MPoly<Rat>>) -> UPoly<MPoly<Rat>> {
    let c = content(p);
    if c.is_zero() {
        return p.clone();
    }
    divide_coeffs(p, &c)
}

/// Greatest common divisor, normalized by [`MPoly::primitive`]; gcd(0, 0) = 0.
pub fn mgcd(a: &MPoly<Rat>, b: &MPoly<Rat>) -> MPoly<Rat> {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let v = main_var(a, b).unwrap();
    let single = a.nvars_used().max(b.nvars_used()) == v + 1
        && (0..v).all(|i| !a.involves(i) && !b.involves(i));
    if single {
        let g = rat_poly_gcd(&a.to_upoly(v).unwrap(), &b.to_upoly(v).unwrap());
        return MPoly::from_upoly(v, &g).primitive();
    }
    let au = a.as_univariate(v);
    let bu = b.as_univariate(v);
    if au.deg() == 0 {
        return mgcd(&au.coeff(0), &content(&bu));
    }
    if bu.deg() == 0 {
        return mgcd(&content(&au), &bu.coeff(0));
    }
    let ca = content(&au);
    let cb = content(&bu);
    let c = mgcd(&ca, &cb);
    let (mut p, mut q) = (divide_coeffs(&au, &ca), divide_coeffs(&bu, &cb));
    if p.deg() < q.deg() {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = prem(&p, &q);
        if r.is_zero() {
            p = q;
            break;
        }
        if r.deg() == 0 {
            p = UPoly::constant(MPoly::one());
            break;
        }
        p = q;
        q = primitive_part(&r);
    }
    let g = MPoly::from_univariate(v, &primitive_part(&p));
    (&g * &c).primitive()
}

/// Points on a few fixed lines used to test square-freeness cheaply.
fn line_restriction(f: &MPoly<Rat>, k: i64) -> UPoly<Rat> {
    let n = f.nvars_used().max(1);
    let pt: Vec<UPoly<Rat>> = (0..n)
        .map(|i| {
            let a = rint((k * 7 + 3 * i as i64 + 1) % 11 - 5);
            let b = rint((k * 5 + 2 * i as i64 * i as i64 + 2) % 13 - 6);
            UPoly::new(vec![a, if b == rint(0) { rint(1) } else { b }])
        })
        .collect();
    f.eval_in(&pt, |c| UPoly::constant(c.clone()))
}

/// Product of the distinct irreducible factors of `f`, made primitive.
pub fn msquarefree_part(f: &MPoly<Rat>) -> MPoly<Rat> {
    if f.is_zero() || f.is_constant() {
        return f.primitive();
    }
    let d = f.total_degree() as isize;
    for k in 0..4 {
        let r = line_restriction(f, k);
        if r.deg() == d && rat_poly_gcd(&r, &r.derivative()).deg() == 0 {
            return f.primitive();
        }
    }
    let mut g = f.clone();
    for i in 0..f.nvars_used() {
        if f.involves(i) {
            g = mgcd(&g, &f.partial(i));
        }
    }
    if g.is_constant() {
        return f.primitive();
    }
    f.div_exact(&g).expect("gcd divides f").primitive()
}
