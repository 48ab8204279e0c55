//! Kneser transversals: verification, complete and non-complete search,
//! classification of transversal flats, and the realization-free tests on
//! rank-4 chirotopes.

mod classify;
mod complete;
mod decide;
mod noncomplete;
mod om_lines;

pub use classify::{classify_flat, is_kneser_transversal, Classification};
pub use complete::{complete_transversals, CompleteSearch};
pub use decide::{decide, decide_lines_d3, Decision};
pub use noncomplete::{noncomplete_transversals_lambda2, NoncompleteSearch};
pub use om_lines::{complete_line_transversals_om, line_meets_hull_om, stabs_triangle_om};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::config::PointConfig;
use crate::error::{KneserError, Result};
use crate::exact::{format_scalar, AffineFlat};

/// Looking for (d − λ)-flats meeting the convex hull of every k-subset of a
/// configuration in R^d.
#[derive(Debug, Clone)]
pub struct KneserProblem {
    pub config: PointConfig,
    pub k: usize,
    pub lambda: usize,
}

impl KneserProblem {
    pub fn new(config: PointConfig, k: usize, lambda: usize) -> Result<Self> {
        let d = config.dim();
        if lambda < 1 || lambda > d {
            return Err(KneserError::invalid(format!("need 1 <= lambda <= d, got lambda={lambda}, d={d}")));
        }
        if k < 1 {
            return Err(KneserError::invalid("k must be at least 1"));
        }
        Ok(KneserProblem { config, k, lambda })
    }

    pub fn n(&self) -> usize {
        self.config.len()
    }

    pub fn d(&self) -> usize {
        self.config.dim()
    }

    /// Dimension of the transversal flats.
    pub fn flat_dim(&self) -> usize {
        self.d() - self.lambda
    }

    /// Whether `n = d + 2(k − λ)`, the size where the dichotomy applies.
    pub fn is_critical_size(&self) -> bool {
        self.k >= self.lambda && self.n() == self.d() + 2 * (self.k - self.lambda)
    }
}

/// Type α of a non-complete transversal: the on-flat anchor plus a perfect
/// matching of the other labels into pairs whose segments the flat meets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TypeAlpha {
    pub anchor: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
}

impl TypeAlpha {
    /// Sorts the anchor, each pair and the list of pairs.
    pub fn new(mut anchor: Vec<usize>, pairs: Vec<(usize, usize)>) -> Self {
        anchor.sort_unstable();
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        TypeAlpha { anchor, pairs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateKind {
    /// All configuration labels on the flat (at least d − λ + 1 of them).
    Complete { labels: Vec<usize> },
    NonComplete(TypeAlpha),
}

/// A transversal flat with the evidence that classifies it.
#[derive(Debug, Clone)]
pub struct TransversalCertificate {
    pub flat: AffineFlat,
    pub kind: CertificateKind,
    pub verified: bool,
}

impl TransversalCertificate {
    pub fn is_complete(&self) -> bool {
        matches!(self.kind, CertificateKind::Complete { .. })
    }

    /// Deterministic ordering key: complete certificates first, each group
    /// by its labels.
    pub fn sort_key(&self) -> (u8, Vec<usize>, Vec<(usize, usize)>) {
        match &self.kind {
            CertificateKind::Complete { labels } => (0, labels.clone(), Vec::new()),
            CertificateKind::NonComplete(t) => (1, t.anchor.clone(), t.pairs.clone()),
        }
    }
}

pub(crate) fn flat_json(flat: &AffineFlat) -> serde_json::Value {
    let base: Vec<String> = flat.base().iter().map(format_scalar).collect();
    let dirs: Vec<Vec<String>> = flat.directions().iter().map(|v| v.iter().map(format_scalar).collect()).collect();
    serde_json::json!({ "base": base, "directions": dirs })
}

impl Serialize for TransversalCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        match &self.kind {
            CertificateKind::Complete { labels } => {
                m.serialize_entry("kind", "complete")?;
                m.serialize_entry("flat", &flat_json(&self.flat))?;
                m.serialize_entry("labels", labels)?;
            }
            CertificateKind::NonComplete(t) => {
                m.serialize_entry("kind", "noncomplete")?;
                m.serialize_entry("flat", &flat_json(&self.flat))?;
                m.serialize_entry("anchor", &t.anchor)?;
                m.serialize_entry("pairs", &t.pairs)?;
            }
        }
        m.serialize_entry("verified", &self.verified)?;
        m.end()
    }
}

/// Whether a search covered every case it was asked to decide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchStatus {
    Definitive,
    /// Subproblems (anchor, matching) whose candidate set was not finite or
    /// hit a degenerate position.
    UndecidedDegenerate { undecided: Vec<TypeAlpha> },
    /// Only part of the search space is covered (e.g. complete transversals
    /// only).
    Partial { reason: String },
}

impl SearchStatus {
    pub fn is_definitive(&self) -> bool {
        matches!(self, SearchStatus::Definitive)
    }
}
