use crate::config::PointConfig;
use crate::exact::{general_position, int, Vector};
use crate::om::{chirotope_of, match_cocircuit_pattern, BasisOrder, Chirotope, SignedSet};

/// The 35 signs of OT(7,4,2) in colex basis order.
pub const OT742_TABLE: &str = "+-+---+---++--++-+++--++++--+-+++-+";

/// Points `(t, t², …, t^d)` for `t = 1..=n`.
pub fn moment_curve_config(n: usize, d: usize) -> PointConfig {
    let points: Vec<Vector> = (1..=n as i64)
        .map(|t| (1..=d as u32).map(|e| int(t.pow(e))).collect())
        .collect();
    PointConfig::new(d, points).expect("moment curve points have dimension d")
}

/// Seven points with a non-complete transversal line, the z-axis, through
/// x7 and the segments x1x2, x3x4, x5x6.
pub fn figure2_fixture() -> PointConfig {
    let c = PointConfig::from_ints(
        3,
        &[&[-1, 0, 4], &[1, 0, 4], &[0, -1, 3], &[0, 2, 3], &[-1, -1, 1], &[2, 2, 2], &[0, 0, 5]],
    )
    .expect("valid fixture");
    assert!(general_position(&c), "figure 2 fixture must be in general position");
    let chi = chirotope_of(&c).expect("full rank");
    let circuit = chi.circuit_on(&[1, 2, 3, 4, 7]).expect("five points in R^3 are dependent");
    assert!(circuit.same_up_to_sign(&SignedSet::new(&[1, 2], &[3, 4, 7])));
    c
}

/// [`figure2_fixture`] plus x8 on the z-axis, making the line complete.
/// x1, x2, x7, x8 share the plane y = 0, so this one is not in general
/// position.
pub fn figure4_fixture() -> PointConfig {
    let c = figure2_fixture().with_point(crate::exact::int_vec(&[0, 0, 1])).expect("same dimension");
    let chi = chirotope_of(&c).expect("full rank");
    let matches = match_cocircuit_pattern(&chi).expect("eight elements");
    assert!(matches.contains(&[1, 2, 3, 4, 5, 6]), "figure 4 fixture must carry the cocircuit pattern");
    c
}

/// A centrally symmetric hexagon; its center meets the hull of any four
/// vertices.
pub fn hexagon_fixture() -> PointConfig {
    PointConfig::from_ints(2, &[&[2, 0], &[1, 2], &[-1, 2], &[-2, 0], &[-1, -2], &[1, -2]]).expect("valid fixture")
}

/// The OT(7,4,2) table as a chirotope.
pub fn ot742_chirotope() -> Chirotope {
    Chirotope::from_sign_string(7, 4, OT742_TABLE, BasisOrder::PaperTable).expect("valid table")
}

/// Integer coordinates realizing OT(7,4,2).
pub fn ot742_fixture() -> PointConfig {
    let c = PointConfig::from_ints(
        3,
        &[
            &[14, 3, 4],
            &[23, 10, -11],
            &[11, -10, 26],
            &[-30, -16, -12],
            &[38, 67, -26],
            &[19, 24, -2],
            &[29, -45, -6],
        ],
    )
    .expect("valid fixture");
    let chi = chirotope_of(&c).expect("full rank");
    assert_eq!(chi.lex_signs(), ot742_chirotope().lex_signs(), "realization must match the table");
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        figure2_fixture();
        figure4_fixture();
        ot742_fixture();
        assert_eq!(hexagon_fixture().len(), 6);
    }

    #[test]
    fn figure4_minus_x8_is_figure2() {
        assert_eq!(figure4_fixture().delete(8).unwrap(), figure2_fixture());
        assert!(!general_position(&figure4_fixture()));
    }

    #[test]
    fn small_moment_curve() {
        let c = moment_curve_config(4, 3);
        assert_eq!(c, PointConfig::from_ints(3, &[&[1, 1, 1], &[2, 4, 8], &[3, 9, 27], &[4, 16, 64]]).unwrap());
    }
}
