use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::PointConfig;
use crate::error::{KneserError, Result};
use crate::exact::{format_scalar, general_position, Scalar};
use crate::transversal::{decide, Decision, KneserProblem};

const GRID: i64 = 1_000_000;
const MAX_ATTEMPTS: usize = 10_000;

/// Moves every coordinate by a seeded rational in [−ε/2, ε/2], resampling
/// until the result is in general position. The max-norm displacement is
/// therefore below ε.
pub fn perturb(config: &PointConfig, epsilon: &Scalar, seed: u64) -> Result<PointConfig> {
    if !epsilon.is_positive() {
        return Err(KneserError::invalid("epsilon must be positive"));
    }
    let half = epsilon / Scalar::from_integer(BigInt::from(2));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let points = config
            .points()
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| {
                        let r = rng.gen_range(-GRID..=GRID);
                        x + &half * Scalar::new(BigInt::from(r), BigInt::from(GRID))
                    })
                    .collect()
            })
            .collect();
        let moved = PointConfig::new(config.dim(), points)?;
        if general_position(&moved) {
            return Ok(moved);
        }
    }
    Err(KneserError::Internal(format!("no general-position perturbation after {MAX_ATTEMPTS} attempts")))
}

/// Certificate counts of one decision run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KindCounts {
    pub complete: usize,
    pub noncomplete: usize,
    pub definitive: bool,
}

impl From<&Decision> for KindCounts {
    fn from(d: &Decision) -> Self {
        KindCounts { complete: d.count_complete(), noncomplete: d.count_noncomplete(), definitive: d.status.is_definitive() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilityTrial {
    pub seed: u64,
    #[serde(flatten)]
    pub counts: KindCounts,
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilityReport {
    pub before: KindCounts,
    pub after: Vec<StabilityTrial>,
    pub epsilon: String,
    pub seeds: Vec<u64>,
    /// Share of trials left with no non-complete transversal; 0 without trials.
    pub fraction_noncomplete_destroyed: f64,
    /// Whether every transversal found in any trial is complete.
    pub survivors_all_complete: bool,
}

/// Runs the decision on `config` and on `trials` perturbed copies, trial `i`
/// using seed `seed + i`.
pub fn stability_experiment(
    config: &PointConfig,
    k: usize,
    lambda: usize,
    epsilon: &Scalar,
    trials: usize,
    seed: u64,
) -> Result<StabilityReport> {
    let problem = KneserProblem::new(config.clone(), k, lambda)?;
    if lambda != 2 || k < 4 || !problem.is_critical_size() {
        return Err(KneserError::invalid("stability needs lambda = 2, k >= 4 and n = d + 2(k - 2)"));
    }
    if !epsilon.is_positive() {
        return Err(KneserError::invalid("epsilon must be positive"));
    }
    let before = KindCounts::from(&decide(&problem)?);
    let seeds: Vec<u64> = (0..trials as u64).map(|i| seed.wrapping_add(i)).collect();
    let after: Vec<StabilityTrial> = seeds
        .par_iter()
        .map(|&s| {
            let moved = perturb(config, epsilon, s)?;
            let d = decide(&KneserProblem::new(moved, k, lambda)?)?;
            Ok(StabilityTrial { seed: s, counts: KindCounts::from(&d) })
        })
        .collect::<Result<_>>()?;
    let destroyed = after.iter().filter(|t| t.counts.noncomplete == 0).count();
    Ok(StabilityReport {
        before,
        fraction_noncomplete_destroyed: if trials == 0 { 0.0 } else { destroyed as f64 / trials as f64 },
        survivors_all_complete: after.iter().all(|t| t.counts.noncomplete == 0),
        after,
        epsilon: format_scalar(epsilon),
        seeds,
    })
}
