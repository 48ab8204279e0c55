//! Exact convex-hull membership `y ∈ conv(points)`.

use num_traits::{Signed, Zero};

use super::{linalg, sub, Scalar, Vector};
use crate::combin::Combinations;

/// Largest dimension for which the subset search is used.
const CARATHEODORY_MAX_DIM: usize = 4;

/// Decides `y ∈ conv(points)` (closed hull). An empty point list has an
/// empty hull.
pub fn in_hull(y: &[Scalar], points: &[Vector]) -> bool {
    if y.len() <= CARATHEODORY_MAX_DIM {
        in_hull_caratheodory(y, points)
    } else {
        in_hull_fourier_motzkin(y, points)
    }
}

/// Subset search: `y` is in the hull iff it has nonnegative barycentric
/// coordinates with respect to some affinely independent subset of at most
/// `dim + 1` points.
pub fn in_hull_caratheodory(y: &[Scalar], points: &[Vector]) -> bool {
    let e = y.len();
    let max = (e + 1).min(points.len());
    for size in 1..=max {
        for subset in Combinations::new(points.len(), size) {
            let origin = &points[subset[0]];
            let rhs = sub(y, origin);
            if size == 1 {
                if rhs.iter().all(Zero::is_zero) {
                    return true;
                }
                continue;
            }
            // columns: p_i - p_0 for the remaining subset members
            let cols: Vec<Vector> = subset[1..].iter().map(|&i| sub(&points[i], origin)).collect();
            let a = linalg::transpose(&cols, e);
            let Some(mu) = linalg::solve_unique(&a, &rhs, size - 1) else {
                continue;
            };
            let total: Scalar = mu.iter().sum();
            if mu.iter().all(|m| !m.is_negative()) && total <= Scalar::from_integer(1.into()) {
                return true;
            }
        }
    }
    false
}

/// A linear inequality `coeffs · x ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Ineq {
    coeffs: Vector,
    rhs: Scalar,
}

impl Ineq {
    /// Scales so the first nonzero coefficient has absolute value one, which
    /// makes duplicate rows identical.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c /= &lead;
            }
            self.rhs /= &lead;
        }
        self
    }
}

/// Exact Fourier–Motzkin elimination on `{μ ≥ 0, Σμ = 1, Σ μ_i p_i = y}`.
/// The equalities are first solved for pivot variables; the remaining free
/// variables are then eliminated from the inequality system.
pub fn in_hull_fourier_motzkin(y: &[Scalar], points: &[Vector]) -> bool {
    let n = points.len();
    if n == 0 {
        return false;
    }
    let e = y.len();
    let mut rows: Vec<Vector> = (0..e).map(|r| points.iter().map(|p| p[r].clone()).collect()).collect();
    rows.push(vec![Scalar::from_integer(1.into()); n]);
    let mut rhs: Vec<Scalar> = y.to_vec();
    rhs.push(Scalar::from_integer(1.into()));

    let aug: Vec<Vector> = rows
        .iter()
        .zip(&rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (red, pivots) = linalg::rref(&aug, n + 1);
    if pivots.last() == Some(&n) {
        return false;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let m = free.len();

    // μ_p = b_p − Σ_f a_pf μ_f ≥ 0  ⇔  Σ_f a_pf μ_f ≤ b_p
    let mut system: Vec<Ineq> = red
        .iter()
        .map(|row| Ineq { coeffs: free.iter().map(|&f| row[f].clone()).collect(), rhs: row[n].clone() })
        .collect();
    // μ_f ≥ 0  ⇔  −μ_f ≤ 0
    for j in 0..m {
        let mut coeffs = vec![Scalar::zero(); m];
        coeffs[j] = -Scalar::from_integer(1.into());
        system.push(Ineq { coeffs, rhs: Scalar::zero() });
    }

    for var in 0..m {
        let (mut upper, mut lower, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in system {
            if ineq.coeffs[var].is_positive() {
                upper.push(ineq);
            } else if ineq.coeffs[var].is_negative() {
                lower.push(ineq);
            } else {
                rest.push(ineq);
            }
        }
        for u in &upper {
            for l in &lower {
                let cu = u.coeffs[var].clone();
                let cl = -l.coeffs[var].clone();
                let coeffs: Vector = u.coeffs.iter().zip(&l.coeffs).map(|(a, b)| a * &cl + b * &cu).collect();
                let combined = Ineq { coeffs, rhs: &u.rhs * &cl + &l.rhs * &cu }.normalized();
                if combined.coeffs.iter().all(Zero::is_zero) {
                    if combined.rhs.is_negative() {
                        return false;
                    }
                    continue;
                }
                rest.push(combined);
            }
        }
        rest.sort_by(|a, b| a.coeffs.cmp(&b.coeffs).then_with(|| a.rhs.cmp(&b.rhs)));
        rest.dedup_by(|a, b| a.coeffs == b.coeffs);
        system = rest;
    }
    system.iter().all(|i| !i.rhs.is_negative())
}
