//! Dense exact linear algebra over [`Scalar`]. Matrices are row vectors.

use num_traits::{One, Zero};

use super::{Scalar, Vector};

/// Reduced row-echelon form together with the pivot column of each nonzero
/// row. `cols` is needed so that empty matrices have a width.
pub fn rref(rows: &[Vector], cols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut m: Vec<Vector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Scalar::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vector], cols: usize) -> usize {
    rref(rows, cols).1.len()
}

/// Determinant of a square matrix by fraction-exact elimination.
pub fn det(rows: &[Vector]) -> Scalar {
    let n = rows.len();
    let mut m: Vec<Vector> = rows.to_vec();
    let mut acc = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        acc *= &m[c][c];
        let (top, rest) = m.split_at_mut(c + 1);
        let pivot = &top[c];
        for row in rest.iter_mut().filter(|row| !row[c].is_zero()) {
            let f = &row[c] / &pivot[c];
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * p;
            }
        }
    }
    acc
}

/// Basis of `{x : rows · x = 0}` in `cols`-dimensional space.
pub fn null_space(rows: &[Vector], cols: usize) -> Vec<Vector> {
    let (r, pivots) = rref(rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `a · x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &[Vector], b: &[Scalar], cols: usize) -> Option<Vector> {
    let aug: Vec<Vector> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

/// The solution of `a · x = b` if it exists and is unique.
pub fn solve_unique(a: &[Vector], b: &[Scalar], cols: usize) -> Option<Vector> {
    let x = solve(a, b, cols)?;
    (rank(a, cols) == cols).then_some(x)
}

pub fn transpose(rows: &[Vector], cols: usize) -> Vec<Vector> {
    (0..cols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}

pub fn mat_vec(rows: &[Vector], v: &[Scalar]) -> Vector {
    rows.iter().map(|r| super::dot(r, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, int_vec};

    #[test]
    fn det_of_permutation_matrix() {
        let m = vec![int_vec(&[0, 1, 0]), int_vec(&[1, 0, 0]), int_vec(&[0, 0, 1])];
        assert_eq!(det(&m), int(-1));
    }

    #[test]
    fn null_space_of_plane() {
        let ns = null_space(&[int_vec(&[1, 1, 1])], 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(crate::exact::dot(v, &int_vec(&[1, 1, 1])), int(0));
        }
        assert_eq!(null_space(&[], 2), vec![int_vec(&[1, 0]), int_vec(&[0, 1])]);
    }

    #[test]
    fn inconsistent_system() {
        let a = vec![int_vec(&[1, 1]), int_vec(&[2, 2])];
        assert!(solve(&a, &int_vec(&[1, 3]), 2).is_none());
        assert!(solve(&a, &int_vec(&[1, 2]), 2).is_some());
        assert!(solve_unique(&a, &int_vec(&[1, 2]), 2).is_none());
    }
}
