//! Sylvester resultants evaluated by fraction-free (Bareiss) elimination.

use super::field::{ExactDiv, Field, Ring};
use super::mpoly::MPoly;
use super::upoly::UPoly;
use super::QpolyError;

/// Determinant by Bareiss elimination; every division is exact.
pub fn bareiss_det<T: ExactDiv>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut sign_neg = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return T::zero();
            };
            m.swap(k, swap);
            sign_neg = !sign_neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].times(&m[i][j]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = v
                    .exact_div(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_neg {
        d.negate()
    } else {
        d
    }
}

/// Sylvester matrix of two polynomials of positive total degree sum.
pub fn sylvester_matrix<T: Ring>(p: &UPoly<T>, q: &UPoly<T>) -> Vec<Vec<T>> {
    let m = p.degree().unwrap_or(0);
    let n = q.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![T::zero(); size];
        for (j, c) in p.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![T::zero(); size];
        for (j, c) in q.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of two univariate polynomials over an integral domain.
pub fn resultant_upoly<T: ExactDiv>(p: &UPoly<T>, q: &UPoly<T>) -> T {
    if p.is_zero() || q.is_zero() {
        return T::zero();
    }
    let m = p.degree().unwrap();
    let n = q.degree().unwrap();
    if m == 0 {
        return p.lead().pow(n as u32);
    }
    if n == 0 {
        return q.lead().pow(m as u32);
    }
    bareiss_det(sylvester_matrix(p, q))
}

/// Sylvester resultant with respect to variable `var`.
///
/// The result does not involve `var`. It vanishes exactly when `p` and `q`
/// share a factor of positive degree in `var`.
pub fn resultant<K: Field>(p: &MPoly<K>, q: &MPoly<K>, var: usize) -> Result<MPoly<K>, QpolyError> {
    if p.degree_in(var) <= 0 && q.degree_in(var) <= 0 {
        return Err(QpolyError::Degenerate(
            "both polynomials are constant in the elimination variable".into(),
        ));
    }
    let pu = p.as_univariate(var);
    let qu = q.as_univariate(var);
    Ok(resultant_upoly(&pu, &qu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::field::{rint, Rat};
    use crate::qpoly::mpoly::{qconst, qvar};

    #[test]
    fn small_univariate_resultants() {
        let x = qvar(0);
        let f = &(&x * &x) - &qconst(1);
        let g = &x - &qconst(2);
        assert_eq!(resultant(&f, &g, 0).unwrap(), qconst(3));
        let a = &(&x * &x) + &qconst(1);
        let b = &(&x * &x) - &qconst(2);
        assert_eq!(resultant(&a, &b, 0).unwrap(), qconst(9));
    }

    #[test]
    fn pipe_elimination() {
        // Res_t((x-t)^2 + y^2 + z^2 - 1, 2(t - x)) = 4(y^2 + z^2 - 1)
        let (x, y, z, t) = (qvar(0), qvar(1), qvar(2), qvar(3));
        let xt = &x - &t;
        let sigma = &(&(&(&xt * &xt) + &(&y * &y)) + &(&z * &z)) - &qconst(1);
        let dsigma = &(&t - &x) * &qconst(2);
        let r = resultant(&sigma, &dsigma, 3).unwrap();
        let expect = &(&(&(&y * &y) + &(&z * &z)) - &qconst(1)) * &qconst(4);
        assert_eq!(r, expect);
    }

    #[test]
    fn degenerate_rejected() {
        let x = qvar(0);
        assert!(resultant(&qconst(2), &x, 1).is_err());
    }

    #[test]
    fn bareiss_matches_hand_determinant() {
        let m = vec![
            vec![rint(2), rint(0), rint(1)],
            vec![rint(1), rint(3), rint(2)],
            vec![rint(1), rint(1), rint(1)],
        ];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(bareiss_det(m), Rat::from_integer(0.into()));
        let m2 = vec![vec![rint(0), rint(1)], vec![rint(1), rint(0)]];
        assert_eq!(bareiss_det(m2), rint(-1));
    }
}
