//! Detection of the three-cocircuit pattern that characterizes 8-element
//! extensions carrying a line through two extra elements.
//!
//! With three disjoint pairs A = (x1, x2), B = (x3, x4), C = (x5, x6) the
//! pattern asks for the cocircuits
//! `(x3⁻ x4⁺ x5⁻ x6⁺)`, `(x1⁻ x2⁺ x5⁺ x6⁻)`, `(x1⁻ x2⁺ x3⁻ x4⁺)`,
//! each up to negation, and with the two labels of any pair allowed to trade
//! places (which flips that pair's signs in every cocircuit at once).

use std::collections::HashSet;

use super::chirotope::Chirotope;
use super::signed::{bit, SignedSet};
use crate::combin::Combinations;
use crate::error::{KneserError, Result};

/// An assignment `[x1, …, x6]` of pattern roles to labels, canonicalized
/// with `x1 < x2`, `x3 < x4`, `x5 < x6`.
pub type PatternMatch = [usize; 6];

/// Pattern signs by role index (0-based x1..x6); each row has four entries.
const PATTERN: [[(usize, i8); 4]; 3] = [
    [(2, -1), (3, 1), (4, -1), (5, 1)],
    [(0, -1), (1, 1), (4, 1), (5, -1)],
    [(0, -1), (1, 1), (2, -1), (3, 1)],
];

fn pattern_present(cocircuits: &HashSet<SignedSet>, x: &[usize; 6]) -> bool {
    PATTERN.iter().all(|row| {
        let signs: Vec<(usize, i8)> = row.iter().map(|&(role, s)| (x[role], s)).collect();
        cocircuits.contains(&SignedSet::from_signs(&signs).canonical())
    })
}

/// Every assignment (modulo the within-pair swaps) under which the pattern
/// occurs among the cocircuits of `chirotope`. Sorted; empty if none.
pub fn match_cocircuit_pattern(chirotope: &Chirotope) -> Result<Vec<PatternMatch>> {
    let n = chirotope.n();
    if n < 6 {
        return Err(KneserError::invalid(format!("pattern needs at least 6 elements, got {n}")));
    }
    let cocircuits: HashSet<SignedSet> = chirotope.cocircuits().into_iter().collect();
    let supports4: HashSet<u64> =
        cocircuits.iter().map(|c| c.support_mask()).filter(|m| m.count_ones() == 4).collect();
    let pairs: Vec<(usize, usize)> = Combinations::new(n, 2).map(|c| (c[0] + 1, c[1] + 1)).collect();
    let pmask = |p: (usize, usize)| bit(p.0) | bit(p.1);

    let mut out = Vec::new();
    for &a in &pairs {
        for &b in &pairs {
            if pmask(a) & pmask(b) != 0 || !supports4.contains(&(pmask(a) | pmask(b))) {
                continue;
            }
            for &c in &pairs {
                let cm = pmask(c);
                if cm & (pmask(a) | pmask(b)) != 0
                    || !supports4.contains(&(pmask(b) | cm))
                    || !supports4.contains(&(pmask(a) | cm))
                {
                    continue;
                }
                let found = (0..8u8).any(|swap| {
                    let orient = |p: (usize, usize), k: u8| if swap >> k & 1 == 1 { (p.1, p.0) } else { p };
                    let (a2, b2, c2) = (orient(a, 0), orient(b, 1), orient(c, 2));
                    pattern_present(&cocircuits, &[a2.0, a2.1, b2.0, b2.1, c2.0, c2.1])
                });
                if found {
                    out.push([a.0, a.1, b.0, b.1, c.0, c.1]);
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Canonical form of an assignment after relabeling by `perm`.
pub fn relabel_match(m: &PatternMatch, perm: &[usize]) -> PatternMatch {
    let mut x = m.map(|l| perm[l - 1]);
    for k in 0..3 {
        if x[2 * k] > x[2 * k + 1] {
            x.swap(2 * k, 2 * k + 1);
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::PointConfig;
    use crate::om::chirotope_of;

    #[test]
    fn needs_six_elements() {
        let c = PointConfig::from_ints(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        let chi = chirotope_of(&c).unwrap();
        assert!(matches!(match_cocircuit_pattern(&chi), Err(KneserError::InvalidInput(_))));
    }
}
