use num_traits::One;

use super::{linalg, sign, Scalar, Vector};
use crate::combin::Combinations;
use crate::config::PointConfig;
use crate::error::{KneserError, Result};
use crate::om::SignedSet;

fn homogenize(p: &[Scalar]) -> Vector {
    let mut row = Vec::with_capacity(p.len() + 1);
    row.push(Scalar::one());
    row.extend(p.iter().cloned());
    row
}

/// Sign of `det[(1, p_0); (1, p_1); …; (1, p_d)]` for `d + 1` points in R^d.
pub fn orientation(points: &[Vector]) -> Result<i8> {
    let d = points.len().checked_sub(1).ok_or_else(|| KneserError::invalid("orientation of no points"))?;
    if points.iter().any(|p| p.len() != d) {
        return Err(KneserError::invalid(format!("orientation needs {} points of dimension {d}", d + 1)));
    }
    let rows: Vec<Vector> = points.iter().map(|p| homogenize(p)).collect();
    Ok(sign(&linalg::det(&rows)))
}

pub(crate) fn orientation_unchecked(points: &[&Vector]) -> i8 {
    let rows: Vec<Vector> = points.iter().map(|p| homogenize(p)).collect();
    sign(&linalg::det(&rows))
}

/// True iff every `d + 1` of the points have nonzero orientation.
pub fn general_position(config: &PointConfig) -> bool {
    let d = config.dim();
    let pts = config.points();
    Combinations::new(pts.len(), d + 1).all(|s| {
        let sel: Vec<&Vector> = s.iter().map(|&i| &pts[i]).collect();
        orientation_unchecked(&sel) != 0
    })
}

/// The signed affine dependence of `d + 2` points spanning R^d, labeled by
/// position (1-based) and canonicalized so the smallest support label is
/// positive.
pub fn radon_partition(points: &[Vector]) -> Result<SignedSet> {
    let d = points.len().checked_sub(2).ok_or_else(|| KneserError::invalid("need d + 2 points"))?;
    if points.iter().any(|p| p.len() != d) {
        return Err(KneserError::invalid(format!("radon partition needs {} points of dimension {d}", d + 2)));
    }
    // Columns are the homogenized points.
    let cols: Vec<Vector> = points.iter().map(|p| homogenize(p)).collect();
    let rows = linalg::transpose(&cols, d + 1);
    let ns = linalg::null_space(&rows, d + 2);
    if ns.len() != 1 {
        return Err(KneserError::degenerate(format!(
            "points do not affinely span R^{d} (dependence space has dimension {})",
            ns.len()
        )));
    }
    let signs: Vec<(usize, i8)> = ns[0].iter().enumerate().map(|(i, x)| (i + 1, sign(x))).collect();
    Ok(SignedSet::from_signs(&signs).canonical())
}
