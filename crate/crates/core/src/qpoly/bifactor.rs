//! Irreducibility of bivariate polynomials over Q by specialization,
//! power-series Hensel lifting and factor recombination.

use super::factor::factor_univariate;
use super::field::{rint, Field, Rat, Ring};
use super::mpoly::MPoly;
use super::upoly::UPoly;

/// Series in s with coefficients in Q[u], truncated at `prec`.
type Series = Vec<UPoly<Rat>>;

fn series_mul(a: &Series, b: &Series, prec: usize) -> Series {
    let mut out = vec![UPoly::zero(); prec];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= prec {
                break;
            }
            out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
        }
    }
    out
}

fn to_series(g: &MPoly<Rat>, prec: usize) -> Series {
    let mut out = vec![UPoly::zero(); prec];
    for (e, c) in g.terms() {
        let du = super::mpoly::exp_of(e, 0) as usize;
        let ds = super::mpoly::exp_of(e, 1) as usize;
        if ds < prec {
            out[ds] = out[ds].add_ref(&UPoly::monomial(c.clone(), du));
        }
    }
    out
}

fn from_series(s: &Series) -> MPoly<Rat> {
    MPoly::from_terms(s.iter().enumerate().flat_map(|(k, p)| {
        p.coeffs()
            .iter()
            .enumerate()
            .map(move |(i, c)| (vec![i as u32, k as u32], c.clone()))
    }))
}

fn combinations(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop();
    }
}

/// A nontrivial factor of `g` (variables 0 and 1), or `None` if `g` is
/// irreducible over Q. Constants and zero are reported as having no factor.
pub fn find_bivariate_factor(g: &MPoly<Rat>) -> Option<MPoly<Rat>> {
    let d = g.total_degree();
    if d <= 1 {
        return None;
    }
    let d = d as u32;
    let top = g.homogeneous_part(d);
    // shear v -> v + c·u so that g is monic in u
    let c = (0i64..)
        .map(|k| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 })
        .find(|&c| !top.eval(&[rint(1), rint(c)]).is_zero())
        .unwrap();
    let sheared = g.compose(&[MPoly::var(0), &MPoly::var(1) + &MPoly::var(0).scale(&rint(c))]);
    let lead = sheared.as_univariate(0).lead();
    let lc = lead.constant_term();
    let h = sheared.scale(&lc.inverse().unwrap());
    // specialization point with square-free image
    let (v0, spec) = (0i64..)
        .map(|k| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 })
        .map(|v0| (v0, h.substitute(1, &MPoly::constant(rint(v0))).to_upoly(0).unwrap()))
        .find(|(_, p)| p.gcd(&p.derivative()).deg() == 0)
        .unwrap();
    let fac = factor_univariate(&spec).ok()?;
    let facs: Vec<UPoly<Rat>> = fac.factors.iter().map(|(f, _)| f.clone()).collect();
    if facs.len() <= 1 {
        return None;
    }
    let prec = d as usize + 1;
    let shifted = h.substitute(1, &(&MPoly::var(1) + &MPoly::constant(rint(v0))));
    let gs = to_series(&shifted, prec);
    let lifted = hensel_series(&gs, &facs, prec);
    let r = lifted.len();
    for k in 1..=r / 2 {
        let mut subsets = Vec::new();
        combinations(r, k, 0, &mut Vec::new(), &mut subsets);
        for s in subsets {
            let mut prod: Series = vec![UPoly::one()];
            for &i in &s {
                prod = series_mul(&prod, &lifted[i], prec);
            }
            let cand = from_series(&prod);
            if shifted.div_exact(&cand).is_some() {
                // undo v -> v0 + s and the shear
                let back = cand.substitute(1, &(&MPoly::var(1) - &MPoly::constant(rint(v0))));
                let unsheared =
                    back.compose(&[MPoly::var(0), &MPoly::var(1) - &MPoly::var(0).scale(&rint(c))]);
                return Some(unsheared.primitive());
            }
        }
    }
    None
}

/// Lifts g ≡ ∏ f_i (mod s) to precision `prec`; g and the f_i are monic in u.
fn hensel_series(g: &Series, facs: &[UPoly<Rat>], prec: usize) -> Vec<Series> {
    let r = facs.len();
    // w_i = (∏_{j≠i} f_j)^{-1} mod f_i
    let weights: Vec<UPoly<Rat>> = (0..r)
        .map(|i| {
            let others = (0..r)
                .filter(|&j| j != i)
                .fold(UPoly::one(), |acc, j| acc.mul_ref(&facs[j]));
            let (_, s, _) = others.rem(&facs[i]).xgcd(&facs[i]);
            s
        })
        .collect();
    let mut lifted: Vec<Series> = facs.iter().map(|f| vec![f.clone()]).collect();
    for k in 1..prec {
        let mut prod: Series = vec![UPoly::one()];
        for f in &lifted {
            prod = series_mul(&prod, f, k + 1);
        }
        let pk = prod.get(k).cloned().unwrap_or_else(UPoly::zero);
        let e = g.get(k).cloned().unwrap_or_else(UPoly::zero).sub_ref(&pk);
        for i in 0..r {
            let delta = if e.is_zero() {
                UPoly::zero()
            } else {
                e.mul_ref(&weights[i]).rem(&facs[i])
            };
            lifted[i].push(delta);
        }
    }
    lifted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::mpoly::{qconst, qvar};

    #[test]
    fn detects_products() {
        let (u, v) = (qvar(0), qvar(1));
        let a = &u + &v;
        let b = &u - &v;
        let f = find_bivariate_factor(&(&a * &b)).unwrap();
        assert!(f.proportional(&a) || f.proportional(&b));
        let c = &(&u * &u) + &(&v * &v) - qconst(1);
        let q = &(&u * &v) - &qconst(2);
        let f2 = find_bivariate_factor(&(&c * &q)).unwrap();
        assert!(f2.proportional(&c) || f2.proportional(&q));
    }

    #[test]
    fn irreducible_inputs() {
        let (u, v) = (qvar(0), qvar(1));
        let c = &(&u * &u) + &(&v * &v) - qconst(1);
        assert!(find_bivariate_factor(&c).is_none());
        let node = &(&v * &v) - &(&(&u * &u) * &(&u + &qconst(1)));
        assert!(find_bivariate_factor(&node).is_none());
    }
}
