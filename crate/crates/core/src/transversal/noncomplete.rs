use std::collections::HashSet;

use num_traits::Zero;
use rayon::prelude::*;

use super::classify::kneser_with;
use super::{CertificateKind, KneserProblem, SearchStatus, TransversalCertificate, TypeAlpha};
use crate::combin::{perfect_matchings, Combinations};
use crate::error::{KneserError, Result};
use crate::exact::{
    general_position, line_through_point_meets_segments, linalg, sub, AffineFlat, FlatTester, Scalar, Segment,
    SolutionSet, Vector,
};

/// Result of the non-complete search.
#[derive(Debug, Clone)]
pub struct NoncompleteSearch {
    pub certificates: Vec<TransversalCertificate>,
    pub status: SearchStatus,
}

enum Outcome {
    Flats(Vec<AffineFlat>),
    Undecided,
}

/// All non-complete (d − 2)-flat transversals for `n = d + 2(k − 2)`, found
/// type by type: for every anchor of d − 2 labels and every perfect matching
/// of the rest, the flats through the anchor meeting every matched segment.
pub fn noncomplete_transversals_lambda2(problem: &KneserProblem) -> Result<NoncompleteSearch> {
    let (n, d, k) = (problem.n(), problem.d(), problem.k);
    if problem.lambda != 2 {
        return Err(KneserError::invalid("non-complete search needs lambda = 2"));
    }
    if k < 4 {
        return Err(KneserError::invalid("non-complete search needs k >= 4"));
    }
    if !problem.is_critical_size() {
        return Err(KneserError::invalid(format!("non-complete search needs n = d + 2(k - 2) = {}, got {n}", d + 2 * (k - 2))));
    }
    if !general_position(&problem.config) {
        return Err(KneserError::invalid("non-complete search needs points in general position"));
    }

    let mut types = Vec::new();
    for anchor in Combinations::new(n, d - 2) {
        let anchor: Vec<usize> = anchor.iter().map(|&i| i + 1).collect();
        let rest: Vec<usize> = problem.config.labels().filter(|l| !anchor.contains(l)).collect();
        for m in perfect_matchings(&rest) {
            types.push(TypeAlpha::new(anchor.clone(), m));
        }
    }

    let outcomes: Vec<Outcome> =
        types.par_iter().map(|t| solve_type(problem, t)).collect::<Result<_>>()?;

    let mut seen = HashSet::new();
    let mut certificates = Vec::new();
    let mut undecided = Vec::new();
    for (t, outcome) in types.into_iter().zip(outcomes) {
        match outcome {
            Outcome::Undecided => undecided.push(t),
            Outcome::Flats(flats) => {
                if flats.len() > 1 {
                    return Err(KneserError::Internal(format!("two distinct flats share the type {t:?}")));
                }
                for flat in flats {
                    if seen.insert(flat.canonical_form()) {
                        certificates.push(TransversalCertificate {
                            flat,
                            kind: CertificateKind::NonComplete(t.clone()),
                            verified: true,
                        });
                    }
                }
            }
        }
    }
    certificates.sort_by_key(|c| c.sort_key());
    let status = if undecided.is_empty() {
        SearchStatus::Definitive
    } else {
        SearchStatus::UndecidedDegenerate { undecided }
    };
    Ok(NoncompleteSearch { certificates, status })
}

fn solve_type(problem: &KneserProblem, t: &TypeAlpha) -> Result<Outcome> {
    let config = &problem.config;
    let candidates = if problem.d() == 2 {
        common_point(config, &t.pairs).into_iter().collect()
    } else {
        let anchor_flat = AffineFlat::through(&config.select(&t.anchor))?;
        let q = anchor_flat.quotient();
        let origin = vec![Scalar::zero(); 3];
        let segments: Vec<Segment> = match t
            .pairs
            .iter()
            .map(|&(a, b)| Segment::new(q.project(config.point(a)), q.project(config.point(b))))
            .collect::<Result<_>>()
        {
            Ok(s) => s,
            Err(KneserError::DegenerateInput(_)) => return Ok(Outcome::Undecided),
            Err(e) => return Err(e),
        };
        match line_through_point_meets_segments(&origin, &segments) {
            Ok(SolutionSet::Empty) => Vec::new(),
            Ok(SolutionSet::FiniteSet(dirs)) => dirs
                .iter()
                .map(|v| {
                    let mut directions = anchor_flat.directions().to_vec();
                    directions.push(q.lift_direction(v));
                    AffineFlat::new(anchor_flat.base().clone(), directions)
                })
                .collect::<Result<_>>()?,
            Ok(SolutionSet::ConeFamily) | Err(KneserError::DegenerateInput(_)) => return Ok(Outcome::Undecided),
            Err(e) => return Err(e),
        }
    };

    let mut kept = Vec::new();
    for flat in candidates {
        if flat.labels_on(config).len() != problem.d() - 2 {
            continue;
        }
        let flat = flat.with_anchor(config, &t.anchor)?;
        let tester = FlatTester::new(&flat, config)?;
        let pairs_met = t.pairs.iter().all(|&(a, b)| tester.meets(&[a, b]));
        if !pairs_met || !kneser_with(&tester, problem.n(), problem.k) {
            return Err(KneserError::Internal(format!("candidate flat for type {t:?} failed verification")));
        }
        kept.push(flat);
    }
    Ok(Outcome::Flats(kept))
}

/// The point shared by all segments in the plane, if any (segments from
/// disjoint pairs of a general-position configuration).
fn common_point(config: &crate::config::PointConfig, pairs: &[(usize, usize)]) -> Option<AffineFlat> {
    let (a1, b1) = (config.point(pairs[0].0), config.point(pairs[0].1));
    let (a2, b2) = (config.point(pairs[1].0), config.point(pairs[1].1));
    // a1 + s (b1 − a1) = a2 + t (b2 − a2)
    let (u, v) = (sub(b1, a1), sub(b2, a2));
    let m: Vec<Vector> = vec![vec![u[0].clone(), -v[0].clone()], vec![u[1].clone(), -v[1].clone()]];
    let st = linalg::solve_unique(&m, &sub(a2, a1), 2)?;
    let point: Vector = a1.iter().zip(&u).map(|(a, du)| a + &st[0] * du).collect();
    let flat = AffineFlat::new(point, Vec::new()).ok()?;
    let tester = FlatTester::new(&flat, config).ok()?;
    pairs.iter().all(|&(a, b)| tester.meets(&[a, b])).then_some(flat)
}
