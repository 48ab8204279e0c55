use serde::Serialize;

use super::{KneserProblem, TypeAlpha};
use crate::combin::{perfect_matchings, Combinations};
use crate::error::{KneserError, Result};
use crate::exact::{general_position, AffineFlat, FlatTester};

/// Whether `flat` meets the convex hull of every k-subset.
pub fn is_kneser_transversal(problem: &KneserProblem, flat: &AffineFlat) -> Result<bool> {
    if flat.ambient_dim() != problem.d() || flat.dim() != problem.flat_dim() {
        return Err(KneserError::invalid(format!(
            "expected a {}-flat in R^{}, got a {}-flat in R^{}",
            problem.flat_dim(),
            problem.d(),
            flat.dim(),
            flat.ambient_dim()
        )));
    }
    let tester = FlatTester::new(flat, &problem.config)?;
    Ok(kneser_with(&tester, problem.n(), problem.k))
}

pub(crate) fn kneser_with(tester: &FlatTester, n: usize, k: usize) -> bool {
    let on: Vec<bool> = (1..=n).map(|l| tester.on_flat(l)).collect();
    Combinations::new(n, k).all(|s| {
        if s.iter().any(|&i| on[i]) {
            return true;
        }
        let labels: Vec<usize> = s.iter().map(|&i| i + 1).collect();
        tester.meets(&labels)
    })
}

/// Where a transversal flat falls in the complete / type-α dichotomy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Classification {
    Complete { labels: Vec<usize> },
    TypeAlpha(TypeAlpha),
    /// Neither case holds: would contradict the dichotomy theorem.
    OutsideDichotomy { on_flat: Vec<usize> },
}

/// Classifies a verified transversal of a general-position configuration
/// with `n = d + 2(k − λ)`, `λ ∈ {2, 3}`, `k ≥ λ + 2`.
pub fn classify_flat(problem: &KneserProblem, flat: &AffineFlat) -> Result<Classification> {
    let (d, k, lambda) = (problem.d(), problem.k, problem.lambda);
    if !(2..=3).contains(&lambda) {
        return Err(KneserError::invalid("classification needs lambda in {2, 3}"));
    }
    if k < lambda + 2 {
        return Err(KneserError::invalid("classification needs k >= lambda + 2"));
    }
    if !problem.is_critical_size() {
        return Err(KneserError::invalid(format!("classification needs n = d + 2(k - lambda) = {}", d + 2 * (k - lambda))));
    }
    if !general_position(&problem.config) {
        return Err(KneserError::invalid("classification needs points in general position"));
    }
    if !is_kneser_transversal(problem, flat)? {
        return Err(KneserError::invalid("flat is not a Kneser transversal"));
    }
    let on = flat.labels_on(&problem.config);
    if on.len() > d - lambda {
        return Ok(Classification::Complete { labels: on });
    }
    if d + 2 < 2 * lambda || on.len() != d + 2 - 2 * lambda {
        return Ok(Classification::OutsideDichotomy { on_flat: on });
    }
    let tester = FlatTester::new(flat, &problem.config)?;
    let off: Vec<usize> = problem.config.labels().filter(|l| !on.contains(l)).collect();
    let matching = perfect_matchings(&off)
        .into_iter()
        .find(|m| m.iter().all(|&(a, b)| tester.meets(&[a, b])));
    Ok(match matching {
        Some(pairs) => Classification::TypeAlpha(TypeAlpha::new(on, pairs)),
        None => Classification::OutsideDichotomy { on_flat: on },
    })
}
