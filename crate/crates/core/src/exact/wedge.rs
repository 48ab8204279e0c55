//! Lines through a fixed point of R³ meeting a family of closed segments.
//!
//! A line `p + t·v` meets `[a, b]` iff `v` lies in the double wedge
//! `{α(a − p) + β(b − p) : αβ ≥ 0}`, a subset of the plane spanned by
//! `a − p` and `b − p`.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::{cross, dot, is_zero_vec, primitive_direction, scale, sub, Scalar, Vector};
use crate::error::{KneserError, Result};

/// Directions `v` (up to scaling, `v` and `−v` give the same line) of the
/// lines through `p` that meet every segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionSet {
    Empty,
    /// Finitely many lines, each given by a primitive integer direction.
    FiniteSet(Vec<Vector>),
    /// A family with nonempty interior inside one plane.
    ConeFamily,
}

struct Wedge {
    a: Vector,
    b: Vector,
    normal: Vector,
}

impl Wedge {
    fn contains(&self, v: &[Scalar]) -> bool {
        if !dot(v, &self.normal).is_zero() {
            return false;
        }
        // v = αa + βb with α ∝ (v × b)·n and β ∝ (a × v)·n
        let alpha = dot(&cross(v, &self.b), &self.normal);
        let beta = dot(&cross(&self.a, v), &self.normal);
        !(alpha * beta).is_negative()
    }
}

fn cross2(u: &[Scalar; 2], v: &[Scalar; 2]) -> Scalar {
    &u[0] * &v[1] - &u[1] * &v[0]
}

fn in_wedge2(v: &[Scalar; 2], a: &[Scalar; 2], b: &[Scalar; 2]) -> bool {
    !(cross2(v, b) * cross2(a, v)).is_negative()
}

/// Representative of `±v` in the half-plane `y > 0 ∨ (y = 0 ∧ x > 0)`.
fn upper(v: [Scalar; 2]) -> [Scalar; 2] {
    if v[1].is_negative() || (v[1].is_zero() && v[0].is_negative()) {
        [-v[0].clone(), -v[1].clone()]
    } else {
        v
    }
}

pub fn line_through_point_meets_segments(p: &[Scalar], segments: &[super::Segment]) -> Result<SolutionSet> {
    if segments.is_empty() {
        return Err(KneserError::invalid("need at least one segment"));
    }
    if p.len() != 3 || segments.iter().any(|s| s.a.len() != 3 || s.b.len() != 3) {
        return Err(KneserError::invalid("line/segment search works in R^3"));
    }
    let wedges: Vec<Wedge> = segments
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let a = sub(&s.a, p);
            let b = sub(&s.b, p);
            let normal = cross(&a, &b);
            if is_zero_vec(&normal) {
                return Err(KneserError::degenerate(format!("point lies on the line of segment {}", i + 1)));
            }
            Ok(Wedge { a, b, normal })
        })
        .collect::<Result<_>>()?;

    let n0 = &wedges[0].normal;
    if let Some(other) = wedges.iter().find(|w| !is_zero_vec(&cross(n0, &w.normal))) {
        let v0 = cross(n0, &other.normal);
        return Ok(if wedges.iter().all(|w| w.contains(&v0)) {
            SolutionSet::FiniteSet(vec![primitive_direction(&v0)])
        } else {
            SolutionSet::Empty
        });
    }
    Ok(coplanar(&wedges))
}

/// All wedges share one plane: intersect arcs of the projective line.
fn coplanar(wedges: &[Wedge]) -> SolutionSet {
    let u1 = wedges[0].a.clone();
    let u2 = cross(&wedges[0].normal, &u1);
    let coords = |x: &[Scalar]| [dot(x, &u1), dot(x, &u2)];
    let flat: Vec<([Scalar; 2], [Scalar; 2])> = wedges.iter().map(|w| (coords(&w.a), coords(&w.b))).collect();
    let in_all = |v: &[Scalar; 2]| flat.iter().all(|(a, b)| in_wedge2(v, a, b));

    let mut rays: Vec<[Scalar; 2]> = flat.iter().flat_map(|(a, b)| [upper(a.clone()), upper(b.clone())]).collect();
    rays.sort_by(|u, v| match cross2(u, v) {
        c if c.is_positive() => Ordering::Less,
        c if c.is_negative() => Ordering::Greater,
        _ => Ordering::Equal,
    });
    rays.dedup_by(|u, v| cross2(u, v).is_zero());

    let gaps: Vec<[Scalar; 2]> = if rays.len() == 1 {
        vec![[-rays[0][1].clone(), rays[0][0].clone()]]
    } else {
        let mut g: Vec<[Scalar; 2]> =
            rays.windows(2).map(|w| [&w[0][0] + &w[1][0], &w[0][1] + &w[1][1]]).collect();
        let (first, last) = (&rays[0], &rays[rays.len() - 1]);
        g.push([&last[0] - &first[0], &last[1] - &first[1]]);
        g
    };
    if gaps.iter().any(in_all) {
        return SolutionSet::ConeFamily;
    }
    let (n1, n2) = (dot(&u1, &u1), dot(&u2, &u2));
    let found: Vec<Vector> = rays
        .iter()
        .filter(|r| in_all(r))
        .map(|r| {
            let v: Vector = scale(&u1, &(&r[0] / &n1)).into_iter().zip(scale(&u2, &(&r[1] / &n2))).map(|(x, y)| x + y).collect();
            primitive_direction(&v)
        })
        .collect();
    if found.is_empty() {
        SolutionSet::Empty
    } else {
        SolutionSet::FiniteSet(found)
    }
}
