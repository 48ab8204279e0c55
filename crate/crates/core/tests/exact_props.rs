mod support;

use kneser_core::exact::{
    flat_meets_hull, format_scalar, in_hull_caratheodory, in_hull_fourier_motzkin, int_vec, line_through_point_meets_segments,
    orientation, parse_scalar, radon_partition, AffineFlat, Scalar, Segment, SolutionSet, Vector,
};
use kneser_core::PointConfig;
use proptest::prelude::*;

fn ivec(v: &[i64]) -> Vector {
    int_vec(v)
}

fn points(d: usize, n: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-range..=range, d), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn orientation_matches_cofactor_expansion(pts in (1usize..=4).prop_flat_map(|d| points(d, d + 1, 9))) {
        let pts: Vec<Vector> = pts.iter().map(|p| ivec(p)).collect();
        let refs: Vec<&Vector> = pts.iter().collect();
        prop_assert_eq!(orientation(&pts).unwrap(), support::orient_oracle(&refs));
    }

    #[test]
    fn orientation_flips_under_a_swap(pts in points(3, 4, 9)) {
        let pts: Vec<Vector> = pts.iter().map(|p| ivec(p)).collect();
        let mut swapped = pts.clone();
        swapped.swap(0, 3);
        prop_assert_eq!(orientation(&pts).unwrap(), -orientation(&swapped).unwrap());
    }

    #[test]
    fn hull_methods_agree((pts, y) in (1usize..=3).prop_flat_map(|d| (points(d, 5, 5), prop::collection::vec(-5i64..=5, d)))) {
        let pts: Vec<Vector> = pts.iter().map(|p| ivec(p)).collect();
        let y = ivec(&y);
        prop_assert_eq!(in_hull_caratheodory(&y, &pts), in_hull_fourier_motzkin(&y, &pts));
    }

    #[test]
    fn vertices_and_centroid_are_inside(pts in points(4, 6, 7)) {
        let pts: Vec<Vector> = pts.iter().map(|p| ivec(p)).collect();
        let n = Scalar::from_integer((pts.len() as i64).into());
        let centroid: Vector = (0..4).map(|c| pts.iter().map(|p| p[c].clone()).sum::<Scalar>() / &n).collect();
        prop_assert!(in_hull_fourier_motzkin(&centroid, &pts));
        prop_assert!(in_hull_fourier_motzkin(&pts[2], &pts));
    }

    #[test]
    fn radon_parts_have_a_common_point(pts in points(3, 5, 9)) {
        let pts: Vec<Vector> = pts.iter().map(|p| ivec(p)).collect();
        let Ok(r) = radon_partition(&pts) else { return Ok(()) };
        let pos: Vec<Vector> = r.positive().iter().map(|&l| pts[l - 1].clone()).collect();
        let neg: Vec<Vector> = r.negative().iter().map(|&l| pts[l - 1].clone()).collect();
        // conv(pos) ∩ conv(neg) ≠ ∅ iff 0 ∈ conv(pos − neg)
        let diffs: Vec<Vector> = pos.iter().flat_map(|p| neg.iter().map(move |q| p.iter().zip(q).map(|(a, b)| a - b).collect())).collect();
        prop_assert!(!pos.is_empty() && !neg.is_empty());
        prop_assert!(in_hull_fourier_motzkin(&ivec(&[0, 0, 0]), &diffs));
    }

    #[test]
    fn scalar_text_roundtrip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let x = Scalar::new(p.into(), q.into());
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn config_json_roundtrip(pts in points(3, 4, 50), den in 1i64..20) {
        let pts: Vec<Vector> = pts.iter().map(|p| p.iter().map(|&x| Scalar::new(x.into(), den.into())).collect()).collect();
        let c = PointConfig::new(3, pts).unwrap();
        prop_assert_eq!(PointConfig::from_json(&c.to_json()).unwrap(), c);
    }

    /// Lines through p returned by the solver meet every segment, checked by
    /// the flat/hull test; a planted line is always found.
    #[test]
    fn wedge_solutions_are_sound(p in prop::collection::vec(-5i64..=5, 3), v in prop::collection::vec(-3i64..=3, 3),
                                 ws in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 3),
                                 ts in prop::collection::vec(1i64..=4, 3)) {
        prop_assume!(v.iter().any(|&x| x != 0));
        let segs: Vec<Segment> = ws.iter().zip(&ts).enumerate().map(|(i, (w, &t))| {
            let c: Vec<i64> = (0..3).map(|k| p[k] + (i as i64 + 1) * t * v[k]).collect();
            let a: Vec<i64> = (0..3).map(|k| c[k] + w[k]).collect();
            let b: Vec<i64> = (0..3).map(|k| c[k] - 2 * w[k]).collect();
            (ivec(&a), ivec(&b))
        }).filter_map(|(a, b)| Segment::new(a, b).ok()).collect();
        prop_assume!(segs.len() == 3);
        let pv = ivec(&p);
        let Ok(sol) = line_through_point_meets_segments(&pv, &segs) else { return Ok(()) };
        match sol {
            SolutionSet::Empty => prop_assert!(false, "planted line missed"),
            SolutionSet::ConeFamily => {}
            SolutionSet::FiniteSet(dirs) => {
                let vv = ivec(&v);
                let planted = dirs.iter().any(|d| kneser_core::exact::is_zero_vec(&kneser_core::exact::cross(d, &vv)));
                prop_assert!(planted, "planted direction not among {:?}", dirs);
                for d in dirs {
                    let line = AffineFlat::new(pv.clone(), vec![d]).unwrap();
                    for s in &segs {
                        prop_assert!(flat_meets_hull(&line, &[s.a.clone(), s.b.clone()]).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn hexagon_center_meets_every_four() {
    let hex = kneser_core::experiments::hexagon_fixture();
    let origin = AffineFlat::new(ivec(&[0, 0]), vec![]).unwrap();
    for s in kneser_core::combin::Combinations::new(6, 4) {
        let pts: Vec<Vector> = s.iter().map(|&i| hex.points()[i].clone()).collect();
        assert!(flat_meets_hull(&origin, &pts).unwrap());
    }
}

#[test]
fn hull_dimension_mismatch_is_rejected() {
    let line = AffineFlat::new(ivec(&[0, 0]), vec![ivec(&[1, 0])]).unwrap();
    assert!(flat_meets_hull(&line, &[ivec(&[1, 1, 1])]).is_err());
}
