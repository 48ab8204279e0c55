use std::collections::HashSet;

use serde::Serialize;

use super::classify::kneser_with;
use super::{
    complete_transversals, noncomplete_transversals_lambda2, CertificateKind, KneserProblem, SearchStatus,
    TransversalCertificate, TypeAlpha,
};
use crate::combin::Combinations;
use crate::config::PointConfig;
use crate::error::{KneserError, Result};
use crate::exact::{general_position, FlatTester};

/// Every transversal found, and how far the search is conclusive.
#[derive(Debug, Clone, Serialize)]
pub struct Decision {
    pub certificates: Vec<TransversalCertificate>,
    #[serde(flatten)]
    pub status: SearchStatus,
}

impl Decision {
    pub fn count_complete(&self) -> usize {
        self.certificates.iter().filter(|c| c.is_complete()).count()
    }

    pub fn count_noncomplete(&self) -> usize {
        self.certificates.len() - self.count_complete()
    }
}

/// Complete and non-complete search combined. Exact for λ = 2 at
/// `n = d + 2(k − 2)` in general position and for lines among n ≥ 7 points
/// of R³ with k = 4; elsewhere only complete transversals are listed and the
/// status is `Partial`.
pub fn decide(problem: &KneserProblem) -> Result<Decision> {
    let (n, d, k, lambda) = (problem.n(), problem.d(), problem.k, problem.lambda);
    if d == 3 && k == 4 && lambda == 2 && n >= 7 {
        return decide_lines_d3(&problem.config);
    }
    let complete = complete_transversals(problem).certificates;
    let partial = |reason: &str| Decision { certificates: complete.clone(), status: SearchStatus::Partial { reason: reason.into() } };
    if lambda != 2 {
        return Ok(partial("non-complete search is only implemented for lambda = 2"));
    }
    if k < 4 || !problem.is_critical_size() {
        return Ok(partial("non-complete search needs k >= 4 and n = d + 2(k - 2)"));
    }
    if !general_position(&problem.config) {
        return Ok(partial("non-complete search needs points in general position"));
    }
    let nc = noncomplete_transversals_lambda2(problem)?;
    let mut certificates = complete;
    certificates.extend(nc.certificates);
    certificates.sort_by_key(|c| c.sort_key());
    Ok(Decision { certificates, status: nc.status })
}

/// Lines meeting the convex hull of every 4 of n ≥ 7 points in R³.
///
/// Complete lines come from the full configuration. Non-complete candidates
/// come from the first 7-subset in general position whose search is
/// definitive, then get re-verified against all points.
pub fn decide_lines_d3(config: &PointConfig) -> Result<Decision> {
    if config.dim() != 3 {
        return Err(KneserError::invalid("line decision works in R^3"));
    }
    let n = config.len();
    if n < 7 {
        return Err(KneserError::Unsupported(format!(
            "only complete transversals can be searched for n = {n} < 7"
        )));
    }
    let problem = KneserProblem::new(config.clone(), 4, 2)?;
    let mut certificates = complete_transversals(&problem).certificates;

    let relabel_type = |labels: &[usize], t: &TypeAlpha| {
        TypeAlpha::new(
            t.anchor.iter().map(|&l| labels[l - 1]).collect(),
            t.pairs.iter().map(|&(a, b)| (labels[a - 1], labels[b - 1])).collect(),
        )
    };
    let mut status = SearchStatus::Partial { reason: "no 7-subset is in general position".into() };
    let mut candidates: Vec<TransversalCertificate> = Vec::new();
    for subset in Combinations::new(n, 7) {
        let labels: Vec<usize> = subset.iter().map(|&i| i + 1).collect();
        let sub = config.restrict(&labels)?;
        if !general_position(&sub) {
            continue;
        }
        let search = noncomplete_transversals_lambda2(&KneserProblem::new(sub, 4, 2)?)?;
        let mapped: Vec<TransversalCertificate> = search
            .certificates
            .into_iter()
            .map(|mut c| {
                if let CertificateKind::NonComplete(t) = &c.kind {
                    c.kind = CertificateKind::NonComplete(relabel_type(&labels, t));
                }
                c
            })
            .collect();
        match search.status {
            SearchStatus::UndecidedDegenerate { undecided } => {
                if !matches!(status, SearchStatus::UndecidedDegenerate { .. }) {
                    let undecided = undecided.iter().map(|t| relabel_type(&labels, t)).collect();
                    status = SearchStatus::UndecidedDegenerate { undecided };
                    candidates = mapped;
                }
            }
            _ => {
                status = SearchStatus::Definitive;
                candidates = mapped;
                break;
            }
        }
    }

    let mut seen: HashSet<_> = certificates.iter().map(|c| c.flat.canonical_form()).collect();
    for c in candidates {
        if c.flat.labels_on(config).len() >= 2 || !seen.insert(c.flat.canonical_form()) {
            continue;
        }
        let tester = FlatTester::new(&c.flat, config)?;
        if kneser_with(&tester, n, 4) {
            certificates.push(c);
        }
    }
    certificates.sort_by_key(|c| c.sort_key());
    Ok(Decision { certificates, status })
}
