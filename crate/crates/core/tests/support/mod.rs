//! Independent oracles and random instance generators shared by the
//! integration tests. Nothing here calls into the library's geometry.

#![allow(dead_code)]

use kneser_core::exact::{Scalar, Vector};
use kneser_core::PointConfig;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(x: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(x))
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = Scalar::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn sign(x: &Scalar) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of det[[1, p_0], …, [1, p_d]].
pub fn orient_oracle(points: &[&Vector]) -> i8 {
    let m: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| std::iter::once(Scalar::one()).chain(p.iter().cloned()).collect())
        .collect();
    sign(&cofactor_det(&m))
}

/// Solves the square system `a x = b` by Cramer's rule; `None` if singular.
pub fn cramer(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let det = cofactor_det(a);
    if det.is_zero() {
        return None;
    }
    let n = a.len();
    Some(
        (0..n)
            .map(|j| {
                let m: Vec<Vec<Scalar>> = a
                    .iter()
                    .zip(b)
                    .map(|(row, bi)| row.iter().enumerate().map(|(c, x)| if c == j { bi.clone() } else { x.clone() }).collect())
                    .collect();
                cofactor_det(&m) / &det
            })
            .collect(),
    )
}

fn diff(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Outcome of the face-parametrization oracle.
#[derive(Debug, PartialEq, Eq)]
pub enum Oracle {
    Meets(bool),
    /// Some square system was singular; the instance is not generic enough.
    Degenerate,
}

/// Whether `base + span(dirs)` meets `conv(simplex)`, by visiting every face
/// of the simplex of dimension d − m and intersecting the flat with its
/// affine hull through a square Cramer solve. Valid for generic instances
/// with at least d − m + 1 vertices.
pub fn flat_simplex_oracle(base: &[Scalar], dirs: &[Vec<Scalar>], simplex: &[Vec<Scalar>]) -> Oracle {
    let d = base.len();
    let m = dirs.len();
    let face_size = d - m + 1;
    let mut met = false;
    for face in kneser_core::combin::Combinations::new(simplex.len(), face_size) {
        let s0 = &simplex[face[0]];
        // base + Σ t_i dir_i − Σ λ_j (s_j − s0) = s0
        let mut cols: Vec<Vec<Scalar>> = dirs.to_vec();
        for &j in &face[1..] {
            cols.push(diff(s0, &simplex[j]));
        }
        let a: Vec<Vec<Scalar>> = (0..d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let Some(x) = cramer(&a, &diff(s0, base)) else {
            return Oracle::Degenerate;
        };
        let lambdas = &x[m..];
        let sum: Scalar = lambdas.iter().sum();
        if lambdas.iter().all(|l| !l.is_negative()) && sum <= Scalar::one() {
            met = true;
        }
    }
    Oracle::Meets(met)
}

/// Whether the line through `p1`, `p2` meets the closed triangle `abc` in
/// R³; `None` when the line is parallel to the triangle's plane.
pub fn line_triangle_oracle(p1: &[Scalar], p2: &[Scalar], tri: [&Vector; 3]) -> Option<bool> {
    let dir = diff(p2, p1);
    let e1 = diff(tri[1], tri[0]);
    let e2 = diff(tri[2], tri[0]);
    // p1 + t dir = a + u e1 + v e2
    let a: Vec<Vec<Scalar>> = (0..3).map(|r| vec![dir[r].clone(), -e1[r].clone(), -e2[r].clone()]).collect();
    let x = cramer(&a, &diff(tri[0], p1))?;
    let (u, v) = (&x[1], &x[2]);
    Some(!u.is_negative() && !v.is_negative() && u + v <= Scalar::one())
}

/// Whether the line `base + t dir` meets the closed tetrahedron, through its
/// faces. Faces parallel to the line are skipped, which is exact for lines
/// in generic position.
pub fn line_tetra_oracle(base: &[Scalar], dir: &[Scalar], tet: [&Vector; 4]) -> bool {
    let p2: Vec<Scalar> = base.iter().zip(dir).map(|(b, v)| b + v).collect();
    [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
        .iter()
        .any(|f| line_triangle_oracle(base, &p2, [tet[f[0]], tet[f[1]], tet[f[2]]]) == Some(true))
}

pub fn random_point(rng: &mut ChaCha8Rng, d: usize, range: i64) -> Vec<i64> {
    (0..d).map(|_| rng.gen_range(-range..=range)).collect()
}

fn in_general_position(points: &[Vec<i64>], d: usize) -> bool {
    let pts: Vec<Vector> = points.iter().map(|p| p.iter().map(|&x| q(x)).collect()).collect();
    let k = (d + 1).min(pts.len());
    kneser_core::combin::Combinations::new(pts.len(), k)
        .all(|c| affinely_independent(&c.iter().map(|&i| &pts[i]).collect::<Vec<_>>()))
}

/// At most d + 1 points: some maximal minor of the homogenized rows is
/// nonzero.
fn affinely_independent(points: &[&Vector]) -> bool {
    let d = points[0].len();
    let rows: Vec<Vec<Scalar>> =
        points.iter().map(|p| std::iter::once(Scalar::one()).chain(p.iter().cloned()).collect()).collect();
    kneser_core::combin::Combinations::new(d + 1, rows.len()).any(|cols| {
        let m: Vec<Vec<Scalar>> = rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        !cofactor_det(&m).is_zero()
    })
}

pub fn to_config(d: usize, points: &[Vec<i64>]) -> PointConfig {
    let refs: Vec<&[i64]> = points.iter().map(|p| p.as_slice()).collect();
    PointConfig::from_ints(d, &refs).unwrap()
}

/// `n` integer points of [−range, range]^d with no d + 1 on a hyperplane.
pub fn random_gp_config(rng: &mut ChaCha8Rng, n: usize, d: usize, range: i64) -> PointConfig {
    loop {
        let pts: Vec<Vec<i64>> = (0..n).map(|_| random_point(rng, d, range)).collect();
        if in_general_position(&pts, d) {
            return to_config(d, &pts);
        }
    }
}

/// Seven general-position points of R³ with a planted non-complete
/// transversal line: x7 on the line and segments x1x2, x3x4, x5x6 crossing
/// it at distinct points.
pub fn planted_line_config(rng: &mut ChaCha8Rng) -> PointConfig {
    loop {
        let p = random_point(rng, 3, 10);
        let v = random_point(rng, 3, 4);
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let mut pts: Vec<Vec<i64>> = Vec::new();
        for t in [2i64, -3, 5] {
            let c: Vec<i64> = (0..3).map(|i| p[i] + t * v[i]).collect();
            let w = random_point(rng, 3, 6);
            let (alpha, beta) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            pts.push((0..3).map(|i| c[i] + alpha * w[i]).collect());
            pts.push((0..3).map(|i| c[i] - beta * w[i]).collect());
        }
        pts.push(p.clone());
        if in_general_position(&pts, 3) {
            return to_config(3, &pts);
        }
    }
}
