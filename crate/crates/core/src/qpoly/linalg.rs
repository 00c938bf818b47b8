//! Dense linear algebra over an exact field.

use super::field::Field;

/// Reduces `m` to reduced row echelon form in place and returns the pivot columns.
pub fn rref<K: Field>(m: &mut Vec<Vec<K>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse().unwrap();
        for j in col..ncols {
            m[row][j] = m[row][j].times(&inv);
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..ncols {
                    let v = m[i][j].minus(&f.times(&m[row][j]));
                    m[i][j] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace<K: Field>(rows: &[Vec<K>], ncols: usize) -> Vec<Vec<K>> {
    let mut m: Vec<Vec<K>> = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![K::zero(); ncols];
            v[f] = K::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m[r][f].negate();
            }
            v
        })
        .collect()
}

pub fn rank<K: Field>(rows: &[Vec<K>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// One solution of `A x = b`, if any.
pub fn solve<K: Field>(a: &[Vec<K>], b: &[K]) -> Option<Vec<K>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<K>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols + 1);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![K::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::field::{rint, Rat};

    #[test]
    fn nullspace_of_rank_one() {
        let rows = vec![vec![rint(1), rint(2), rint(3)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: Rat = rows[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert_eq!(dot, rint(0));
        }
    }

    #[test]
    fn solve_square_system() {
        let a = vec![vec![rint(2), rint(1)], vec![rint(1), rint(3)]];
        let x = solve(&a, &[rint(5), rint(10)]).unwrap();
        assert_eq!(x, vec![rint(1), rint(3)]);
        let sing = vec![vec![rint(1), rint(1)], vec![rint(2), rint(2)]];
        assert!(solve(&sing, &[rint(1), rint(3)]).is_none());
    }
}
