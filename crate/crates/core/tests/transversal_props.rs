mod support;

use kneser_core::combin::Combinations;
use kneser_core::exact::{int_vec, ratio, AffineFlat, Scalar};
use kneser_core::experiments::{figure2_fixture, hexagon_fixture, perturb};
use kneser_core::transversal::{
    classify_flat, complete_transversals, decide, decide_lines_d3, is_kneser_transversal,
    noncomplete_transversals_lambda2, CertificateKind, Classification, KneserProblem, SearchStatus, TypeAlpha,
};
use kneser_core::{KneserError, PointConfig};
use proptest::prelude::*;
use rand::Rng;

fn brute_force_line(config: &PointConfig, flat: &AffineFlat) -> bool {
    let on = flat.labels_on(config);
    Combinations::new(config.len(), 4).all(|t| {
        let l: Vec<usize> = t.iter().map(|&i| i + 1).collect();
        l.iter().any(|x| on.contains(x))
            || support::line_tetra_oracle(
                flat.base(),
                &flat.directions()[0],
                [config.point(l[0]), config.point(l[1]), config.point(l[2]), config.point(l[3])],
            )
    })
}

fn planted_type() -> TypeAlpha {
    TypeAlpha::new(vec![7], vec![(1, 2), (3, 4), (5, 6)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transversal_test_matches_brute_force(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let c = support::random_gp_config(&mut rng, 7, 3, 8);
        let base = int_vec(&support::random_point(&mut rng, 3, 3));
        let dir = int_vec(&support::random_point(&mut rng, 3, 3));
        prop_assume!(dir.iter().any(|x| *x != Scalar::from_integer(0.into())));
        let line = AffineFlat::new(base, vec![dir]).unwrap();
        prop_assume!(line.labels_on(&c).is_empty());
        let p = KneserProblem::new(c.clone(), 4, 2).unwrap();
        prop_assert_eq!(is_kneser_transversal(&p, &line).unwrap(), brute_force_line(&c, &line));
    }

    /// A line through x7 meeting the segments x1x2, x3x4, x5x6 meets every
    /// tetrahedron avoiding x7, and the search recovers its type.
    #[test]
    fn planted_type_is_found_and_sufficient(seed in any::<u64>()) {
        let c = support::planted_line_config(&mut support::rng(seed));
        let p = KneserProblem::new(c.clone(), 4, 2).unwrap();
        let search = noncomplete_transversals_lambda2(&p).unwrap();
        let planted = search.certificates.iter().find(|cert| cert.kind == CertificateKind::NonComplete(planted_type()));
        let planted = planted.expect("planted type missing");
        prop_assert!(planted.verified);
        prop_assert!(brute_force_line(&c, &planted.flat));
        for cert in &search.certificates {
            let CertificateKind::NonComplete(t) = &cert.kind else { unreachable!() };
            prop_assert_eq!(classify_flat(&p, &cert.flat).unwrap(), Classification::TypeAlpha(t.clone()));
            prop_assert_eq!(cert.flat.labels_on(&c), t.anchor.clone());
        }
    }

    #[test]
    fn generic_configs_decide_consistently(seed in any::<u64>()) {
        let c = support::random_gp_config(&mut support::rng(seed), 7, 3, 30);
        let d = decide_lines_d3(&c).unwrap();
        prop_assert!(d.status.is_definitive());
        let p = KneserProblem::new(c.clone(), 4, 2).unwrap();
        for cert in &d.certificates {
            prop_assert!(brute_force_line(&c, &cert.flat));
            let class = classify_flat(&p, &cert.flat).unwrap();
            prop_assert!(!matches!(class, Classification::OutsideDichotomy { .. }), "outside the dichotomy: {:?}", class);
        }
    }
}

#[test]
fn figure2_has_exactly_one_line() {
    let c = figure2_fixture();
    let p = KneserProblem::new(c.clone(), 4, 2).unwrap();
    let nc = noncomplete_transversals_lambda2(&p).unwrap();
    assert_eq!(nc.status, SearchStatus::Definitive);
    assert_eq!(nc.certificates.len(), 1);
    let z = AffineFlat::new(int_vec(&[0, 0, 0]), vec![int_vec(&[0, 0, 1])]).unwrap();
    assert_eq!(nc.certificates[0].flat, z);
    assert!(complete_transversals(&p).certificates.is_empty());
    assert_eq!(decide(&p).unwrap().count_noncomplete(), 1);
}

#[test]
fn complete_lines_classify_as_complete() {
    let mut rng = support::rng(0x5151);
    let mut seen = 0;
    for _ in 0..400 {
        let c = support::random_gp_config(&mut rng, 7, 3, 6);
        let p = KneserProblem::new(c.clone(), 4, 2).unwrap();
        for cert in complete_transversals(&p).certificates {
            let CertificateKind::Complete { labels } = &cert.kind else { unreachable!() };
            assert_eq!(classify_flat(&p, &cert.flat).unwrap(), Classification::Complete { labels: labels.clone() });
            assert!(brute_force_line(&c, &cert.flat));
            seen += 1;
        }
        if seen >= 5 {
            break;
        }
    }
    assert!(seen >= 5, "only {seen} complete lines found");
}

#[test]
fn hexagon_center_is_a_point_transversal() {
    let hex = hexagon_fixture();
    let p = KneserProblem::new(hex.clone(), 4, 2).unwrap();
    let center = AffineFlat::new(int_vec(&[0, 0]), vec![]).unwrap();
    assert!(is_kneser_transversal(&p, &center).unwrap());
    let diagonals = TypeAlpha::new(vec![], vec![(1, 4), (2, 5), (3, 6)]);
    assert_eq!(classify_flat(&p, &center).unwrap(), Classification::TypeAlpha(diagonals.clone()));
    let d = decide(&p).unwrap();
    assert!(d.status.is_definitive());
    assert!(d.certificates.iter().any(|c| c.flat == center && c.kind == CertificateKind::NonComplete(diagonals.clone())));

    let moved = perturb(&hex, &ratio(1, 10), 0x6060).unwrap();
    let d = decide(&KneserProblem::new(moved.clone(), 4, 2).unwrap()).unwrap();
    assert!(d.status.is_definitive());
    assert!(d.certificates.iter().all(|c| c.kind != CertificateKind::NonComplete(diagonals.clone())));
    let off = AffineFlat::new(int_vec(&[5, 5]), vec![]).unwrap();
    assert!(!is_kneser_transversal(&KneserProblem::new(moved, 4, 2).unwrap(), &off).unwrap());
}

#[test]
fn point_transversals_in_the_plane_match_brute_force() {
    let mut rng = support::rng(0x2d2d);
    for _ in 0..30 {
        let c = support::random_gp_config(&mut rng, 6, 2, 20);
        let p = KneserProblem::new(c.clone(), 4, 2).unwrap();
        let d = decide(&p).unwrap();
        for cert in &d.certificates {
            assert!(is_kneser_transversal(&p, &cert.flat).unwrap());
        }
        // a random rational point is a transversal only if the search lists it
        let pt = AffineFlat::new(vec![ratio(rng.gen_range(-40..40), 3), ratio(rng.gen_range(-40..40), 3)], vec![]).unwrap();
        if is_kneser_transversal(&p, &pt).unwrap() {
            assert!(d.certificates.iter().any(|c| c.flat == pt));
        }
    }
}

#[test]
fn wrong_shapes_are_rejected() {
    let fig2 = figure2_fixture();
    let eight = fig2.with_point(int_vec(&[7, -3, 2])).unwrap();
    let p8 = KneserProblem::new(eight.clone(), 4, 2).unwrap();
    assert!(matches!(noncomplete_transversals_lambda2(&p8), Err(KneserError::InvalidInput(_))));
    let p3 = KneserProblem::new(fig2.clone(), 4, 3).unwrap();
    assert!(matches!(noncomplete_transversals_lambda2(&p3), Err(KneserError::InvalidInput(_))));
    let six = fig2.delete(7).unwrap();
    assert!(matches!(decide_lines_d3(&six), Err(KneserError::Unsupported(_))));
    assert!(matches!(decide_lines_d3(&hexagon_fixture()), Err(KneserError::InvalidInput(_))));
    assert!(KneserProblem::new(fig2.clone(), 4, 4).is_err());
    let line = AffineFlat::new(int_vec(&[0, 0]), vec![int_vec(&[0, 1])]).unwrap();
    assert!(is_kneser_transversal(&KneserProblem::new(fig2, 4, 2).unwrap(), &line).is_err());
}

#[test]
fn eight_points_reuse_seven_point_candidates() {
    let mut rng = support::rng(0x0808);
    for _ in 0..6 {
        let c = support::planted_line_config(&mut rng).with_point(int_vec(&support::random_point(&mut rng, 3, 30))).unwrap();
        let d = decide_lines_d3(&c).unwrap();
        if d.status.is_definitive() {
            for cert in &d.certificates {
                assert!(brute_force_line(&c, &cert.flat));
            }
        }
    }
}

#[test]
fn partial_outside_the_exact_regime() {
    let c = support::random_gp_config(&mut support::rng(3), 9, 3, 20);
    let d = decide(&KneserProblem::new(c, 5, 3).unwrap()).unwrap();
    assert!(matches!(d.status, SearchStatus::Partial { .. }));
}
