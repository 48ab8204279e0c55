use std::collections::HashSet;

use super::classify::kneser_with;
use super::{CertificateKind, KneserProblem, TransversalCertificate};
use crate::combin::Combinations;
use crate::exact::{AffineFlat, FlatTester, Scalar, Vector};

/// Result of the complete-transversal search.
#[derive(Debug, Clone)]
pub struct CompleteSearch {
    pub certificates: Vec<TransversalCertificate>,
    /// (d − λ + 1)-subsets skipped because their affine hull is too small.
    pub degenerate_subsets: Vec<Vec<usize>>,
}

/// Every (d − λ)-flat spanned by configuration points that is a Kneser
/// transversal, one certificate per distinct flat.
pub fn complete_transversals(problem: &KneserProblem) -> CompleteSearch {
    let m = problem.flat_dim();
    let n = problem.n();
    let mut seen: HashSet<(Vec<Vector>, Vec<Scalar>)> = HashSet::new();
    let mut certificates = Vec::new();
    let mut degenerate_subsets = Vec::new();
    for subset in Combinations::new(n, m + 1) {
        let labels: Vec<usize> = subset.iter().map(|&i| i + 1).collect();
        let Ok(flat) = AffineFlat::through(&problem.config.select(&labels)) else {
            degenerate_subsets.push(labels);
            continue;
        };
        if !seen.insert(flat.canonical_form()) {
            continue;
        }
        let tester = FlatTester::new(&flat, &problem.config).expect("dimensions agree");
        if kneser_with(&tester, n, problem.k) {
            let on = flat.labels_on(&problem.config);
            certificates.push(TransversalCertificate {
                flat,
                kind: CertificateKind::Complete { labels: on },
                verified: true,
            });
        }
    }
    certificates.sort_by_key(|c| c.sort_key());
    CompleteSearch { certificates, degenerate_subsets }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::PointConfig;

    #[test]
    fn two_points_both_qualify() {
        let p = KneserProblem::new(PointConfig::from_ints(2, &[&[0, 0], &[3, 1]]).unwrap(), 2, 2).unwrap();
        let s = complete_transversals(&p);
        let labels: Vec<_> = s.certificates.iter().map(|c| c.sort_key().1).collect();
        assert_eq!(labels, vec![vec![1], vec![2]]);
    }

    #[test]
    fn coincident_points_are_reported_degenerate() {
        let c = PointConfig::from_ints(2, &[&[0, 0], &[0, 0], &[1, 0]]).unwrap();
        let p = KneserProblem::new(c, 2, 1).unwrap();
        let s = complete_transversals(&p);
        assert_eq!(s.degenerate_subsets, vec![vec![1, 2]]);
    }
}
