use std::fmt;

use serde::{Deserialize, Serialize};

/// A signed subset of the labels `1..=64`: a circuit, cocircuit or vector of
/// an oriented matroid. Stored as two disjoint bitmasks (bit `l − 1` stands
/// for label `l`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSet {
    pos: u64,
    neg: u64,
}

pub(crate) fn bit(label: usize) -> u64 {
    debug_assert!((1..=64).contains(&label));
    1u64 << (label - 1)
}

pub(crate) fn mask_of(labels: &[usize]) -> u64 {
    labels.iter().fold(0, |m, &l| m | bit(l))
}

pub(crate) fn labels_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

impl SignedSet {
    pub fn new(positive: &[usize], negative: &[usize]) -> Self {
        let (pos, neg) = (mask_of(positive), mask_of(negative));
        assert_eq!(pos & neg, 0, "positive and negative parts overlap");
        SignedSet { pos, neg }
    }

    /// From `(label, sign)` pairs; zero signs are left out of the support.
    pub fn from_signs(signs: &[(usize, i8)]) -> Self {
        let mut s = SignedSet { pos: 0, neg: 0 };
        for &(l, sg) in signs {
            match sg {
                1 => s.pos |= bit(l),
                -1 => s.neg |= bit(l),
                _ => {}
            }
        }
        s
    }

    pub fn positive(&self) -> Vec<usize> {
        labels_of(self.pos)
    }

    pub fn negative(&self) -> Vec<usize> {
        labels_of(self.neg)
    }

    pub fn support(&self) -> Vec<usize> {
        labels_of(self.support_mask())
    }

    pub(crate) fn pos_mask(&self) -> u64 {
        self.pos
    }

    pub(crate) fn neg_mask(&self) -> u64 {
        self.neg
    }

    pub(crate) fn support_mask(&self) -> u64 {
        self.pos | self.neg
    }

    pub fn is_empty(&self) -> bool {
        self.support_mask() == 0
    }

    pub fn sign_of(&self, label: usize) -> i8 {
        if self.pos & bit(label) != 0 {
            1
        } else if self.neg & bit(label) != 0 {
            -1
        } else {
            0
        }
    }

    pub fn negated(&self) -> Self {
        SignedSet { pos: self.neg, neg: self.pos }
    }

    /// Orientation with the smallest support label positive.
    pub fn canonical(&self) -> Self {
        let low = self.support_mask() & self.support_mask().wrapping_neg();
        if self.neg & low != 0 {
            self.negated()
        } else {
            *self
        }
    }

    /// Relabels through `map[old_label - 1] = new_label`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        let mv = |m: u64| labels_of(m).iter().fold(0u64, |acc, &l| acc | bit(map[l - 1]));
        SignedSet { pos: mv(self.pos), neg: mv(self.neg) }
    }

    /// Equality up to global negation.
    pub fn same_up_to_sign(&self, other: &SignedSet) -> bool {
        self == other || self.negated() == *other
    }
}

/// Written the way circuits are usually printed: negative elements carry a
/// trailing `'`, e.g. `{1' 2 3 4 5}`.
impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .support()
            .iter()
            .map(|&l| if self.sign_of(l) < 0 { format!("{l}'") } else { l.to_string() })
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct SignedSetRepr {
    positive: Vec<usize>,
    negative: Vec<usize>,
}

impl Serialize for SignedSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SignedSetRepr { positive: self.positive(), negative: self.negative() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SignedSetRepr::deserialize(d)?;
        let (pos, neg) = (mask_of(&r.positive), mask_of(&r.negative));
        if pos & neg != 0 {
            return Err(serde::de::Error::custom("positive and negative parts overlap"));
        }
        Ok(SignedSet { pos, neg })
    }
}
