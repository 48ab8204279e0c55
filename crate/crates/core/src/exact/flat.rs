use num_traits::Zero;

use super::{hull, is_zero_vec, linalg, sub, Scalar, Vector};
use crate::config::PointConfig;
use crate::error::{KneserError, Result};

/// An affine flat `base + span(directions)` in R^d. The directions are
/// linearly independent, so their count is the flat's dimension.
#[derive(Debug, Clone)]
pub struct AffineFlat {
    base: Vector,
    directions: Vec<Vector>,
    anchor_labels: Vec<usize>,
}

impl AffineFlat {
    pub fn new(base: Vector, directions: Vec<Vector>) -> Result<Self> {
        let d = base.len();
        if directions.iter().any(|v| v.len() != d) {
            return Err(KneserError::invalid("flat direction has the wrong dimension"));
        }
        if linalg::rank(&directions, d) != directions.len() {
            return Err(KneserError::invalid("flat directions are linearly dependent"));
        }
        Ok(AffineFlat { base, directions, anchor_labels: Vec::new() })
    }

    /// The affine hull of `points`, whatever its dimension.
    pub fn affine_hull(points: &[Vector]) -> Result<Self> {
        let base = points.first().ok_or_else(|| KneserError::invalid("affine hull of no points"))?.clone();
        let d = base.len();
        let diffs: Vec<Vector> = points[1..].iter().map(|p| sub(p, &base)).collect();
        let (dirs, _) = linalg::rref(&diffs, d);
        AffineFlat::new(base, dirs)
    }

    /// The flat spanned by affinely independent `points`; errors if they are
    /// not independent.
    pub fn through(points: &[Vector]) -> Result<Self> {
        let base = points.first().ok_or_else(|| KneserError::invalid("flat through no points"))?.clone();
        let diffs: Vec<Vector> = points[1..].iter().map(|p| sub(p, &base)).collect();
        AffineFlat::new(base, diffs).map_err(|_| KneserError::degenerate("points are affinely dependent"))
    }

    /// Attaches the labels of configuration points known to lie on the flat.
    pub fn with_anchor(mut self, config: &PointConfig, labels: &[usize]) -> Result<Self> {
        for &l in labels {
            if !self.contains(config.point(l)) {
                return Err(KneserError::invalid(format!("anchor point {l} is not on the flat")));
            }
        }
        self.anchor_labels = labels.to_vec();
        Ok(self)
    }

    pub fn base(&self) -> &Vector {
        &self.base
    }

    pub fn directions(&self) -> &[Vector] {
        &self.directions
    }

    pub fn anchor_labels(&self) -> &[usize] {
        &self.anchor_labels
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.len()
    }

    pub fn contains(&self, p: &[Scalar]) -> bool {
        let rhs = sub(p, &self.base);
        if is_zero_vec(&rhs) {
            return true;
        }
        let a = linalg::transpose(&self.directions, self.ambient_dim());
        linalg::solve(&a, &rhs, self.dim()).is_some()
    }

    /// Labels of configuration points lying on the flat.
    pub fn labels_on(&self, config: &PointConfig) -> Vec<usize> {
        config.labels().filter(|&l| self.contains(config.point(l))).collect()
    }

    /// Canonical representation: the direction space in reduced row-echelon
    /// form and the base with its pivot coordinates eliminated. Two flats are
    /// equal iff their canonical forms are.
    pub fn canonical_form(&self) -> (Vec<Vector>, Vector) {
        let d = self.ambient_dim();
        let (dirs, pivots) = linalg::rref(&self.directions, d);
        let mut base = self.base.clone();
        for (row, &p) in dirs.iter().zip(&pivots) {
            let f = base[p].clone();
            if !f.is_zero() {
                for (b, r) in base.iter_mut().zip(row) {
                    *b -= &f * r;
                }
            }
        }
        (dirs, base)
    }

    pub fn quotient(&self) -> Quotient {
        let d = self.ambient_dim();
        Quotient { map: linalg::null_space(&self.directions, d).into_iter().collect(), base: self.base.clone() }
    }
}

impl PartialEq for AffineFlat {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.canonical_form() == other.canonical_form()
    }
}

impl Eq for AffineFlat {}

/// The linear map `x ↦ Q (x − base)` whose kernel is exactly a flat's
/// direction space. Images live in R^(d − m).
#[derive(Debug, Clone)]
pub struct Quotient {
    map: Vec<Vector>,
    base: Vector,
}

impl Quotient {
    pub fn target_dim(&self) -> usize {
        self.map.len()
    }

    pub fn project(&self, x: &[Scalar]) -> Vector {
        linalg::mat_vec(&self.map, &sub(x, &self.base))
    }

    /// Some vector `w` in R^d with `Q w = v`.
    pub fn lift_direction(&self, v: &[Scalar]) -> Vector {
        let d = self.base.len();
        linalg::solve(&self.map, v, d).expect("quotient map has full row rank")
    }

    /// Some point `x` with `project(x) = y`.
    pub fn lift_point(&self, y: &[Scalar]) -> Vector {
        super::add(&self.lift_direction(y), &self.base)
    }
}

/// A closed segment `[a, b]` in R^d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub a: Vector,
    pub b: Vector,
    degenerate: bool,
}

impl Segment {
    pub fn new(a: Vector, b: Vector) -> Result<Self> {
        if a.len() != b.len() {
            return Err(KneserError::invalid("segment endpoints differ in dimension"));
        }
        if a == b {
            return Err(KneserError::degenerate("segment endpoints coincide"));
        }
        Ok(Segment { a, b, degenerate: false })
    }

    /// A single point treated as a segment.
    pub fn point(a: Vector) -> Self {
        Segment { b: a.clone(), a, degenerate: true }
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// The configuration with the direction space of `along` factored out: each
/// point `x` goes to `Q (x − base)` in R^(d − dim along). Labels are kept.
pub fn quotient_project(config: &PointConfig, along: &AffineFlat) -> Result<PointConfig> {
    if along.ambient_dim() != config.dim() {
        return Err(KneserError::invalid("flat and configuration differ in dimension"));
    }
    if along.dim() >= config.dim() {
        return Err(KneserError::invalid("can only project along a proper flat"));
    }
    let q = along.quotient();
    PointConfig::new(q.target_dim(), config.points().iter().map(|p| q.project(p)).collect())
}

/// Whether `flat ∩ conv(hull_points) ≠ ∅`, hulls closed.
pub fn flat_meets_hull(flat: &AffineFlat, hull_points: &[Vector]) -> Result<bool> {
    let d = flat.ambient_dim();
    if hull_points.iter().any(|p| p.len() != d) {
        return Err(KneserError::invalid("hull point dimension differs from the flat's"));
    }
    let q = flat.quotient();
    let images: Vec<Vector> = hull_points.iter().map(|p| q.project(p)).collect();
    let origin = vec![Scalar::zero(); q.target_dim()];
    Ok(hull::in_hull(&origin, &images))
}

/// Repeated `flat_meets_hull` queries of one flat against subsets of one
/// configuration, with the projection done once.
#[derive(Debug, Clone)]
pub struct FlatTester {
    images: Vec<Vector>,
    origin: Vector,
}

impl FlatTester {
    pub fn new(flat: &AffineFlat, config: &PointConfig) -> Result<Self> {
        if flat.ambient_dim() != config.dim() {
            return Err(KneserError::invalid("flat and configuration differ in dimension"));
        }
        let q = flat.quotient();
        Ok(FlatTester {
            images: config.points().iter().map(|p| q.project(p)).collect(),
            origin: vec![Scalar::zero(); q.target_dim()],
        })
    }

    /// `flat_meets_hull` on the points with these (1-based) labels.
    pub fn meets(&self, labels: &[usize]) -> bool {
        let pts: Vec<Vector> = labels.iter().map(|&l| self.images[l - 1].clone()).collect();
        hull::in_hull(&self.origin, &pts)
    }

    pub fn on_flat(&self, label: usize) -> bool {
        is_zero_vec(&self.images[label - 1])
    }
}
