use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::signed::{bit, mask_of, SignedSet};
use crate::combin::{binomial, Combinations};
use crate::config::PointConfig;
use crate::error::{KneserError, Result};
use crate::exact::Vector;

/// Enumeration order of the r-subsets in a serialized sign string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum BasisOrder {
    /// Lexicographic: 1234, 1235, …, 4567.
    #[default]
    Lex,
    /// Colexicographic: 1234, 1235, 1245, 1345, 2345, 1236, …, 4567. This is
    /// the column order of the usual printed rank-4 tables on 7 elements.
    PaperTable,
}

impl BasisOrder {
    /// All r-subsets of {1..n} as sorted tuples, in this order.
    pub fn bases(self, n: usize, r: usize) -> Vec<Vec<usize>> {
        let mut all: Vec<Vec<usize>> =
            Combinations::new(n, r).map(|c| c.into_iter().map(|i| i + 1).collect()).collect();
        if self == BasisOrder::PaperTable {
            all.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        }
        all
    }
}

impl std::str::FromStr for BasisOrder {
    type Err = KneserError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(BasisOrder::Lex),
            "paper_table" | "colex" => Ok(BasisOrder::PaperTable),
            _ => Err(KneserError::invalid(format!("unknown basis order {s:?}"))),
        }
    }
}

/// Lexicographic rank of a sorted tuple of 1-based labels among the
/// r-subsets of {1..n}.
fn lex_rank(n: usize, sorted: &[usize]) -> usize {
    let r = sorted.len();
    // complement-reverse to a colex rank
    let colex: usize = sorted.iter().rev().enumerate().map(|(i, &c)| binomial(n - c, i + 1)).sum();
    binomial(n, r) - 1 - colex
}

/// A rank-r chirotope on the elements 1..n, stored on sorted r-tuples in
/// lexicographic order. Alternation is applied on lookup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chirotope {
    n: usize,
    r: usize,
    signs: Vec<i8>,
    basis_order: BasisOrder,
}

impl Chirotope {
    /// `signs` are given in lexicographic order of the sorted r-tuples.
    pub fn new(n: usize, r: usize, signs: Vec<i8>) -> Result<Self> {
        if r == 0 || r > n || n > 64 {
            return Err(KneserError::invalid(format!("unsupported chirotope shape n={n}, r={r}")));
        }
        if signs.len() != binomial(n, r) {
            return Err(KneserError::invalid(format!("expected {} signs, got {}", binomial(n, r), signs.len())));
        }
        if signs.iter().any(|s| !(-1..=1).contains(s)) {
            return Err(KneserError::invalid("signs must be -1, 0 or +1"));
        }
        if signs.iter().all(|&s| s == 0) {
            return Err(KneserError::invalid("chirotope is identically zero"));
        }
        Ok(Chirotope { n, r, signs, basis_order: BasisOrder::Lex })
    }

    /// Parses a string over `{+, -, 0}` listing χ on the r-tuples in `order`.
    pub fn from_sign_string(n: usize, r: usize, text: &str, order: BasisOrder) -> Result<Self> {
        let expected = binomial(n, r);
        let chars: Vec<char> = text.chars().collect();
        if chars.len() != expected {
            return Err(KneserError::invalid(format!("sign string has length {}, expected {expected}", chars.len())));
        }
        let mut signs = vec![0i8; expected];
        for (tuple, ch) in order.bases(n, r).iter().zip(chars) {
            signs[lex_rank(n, tuple)] = match ch {
                '+' => 1,
                '-' => -1,
                '0' => 0,
                other => return Err(KneserError::invalid(format!("unexpected character {other:?} in sign string"))),
            };
        }
        let mut c = Chirotope::new(n, r, signs)?;
        c.basis_order = order;
        Ok(c)
    }

    pub fn to_sign_string(&self, order: BasisOrder) -> String {
        order
            .bases(self.n, self.r)
            .iter()
            .map(|t| match self.signs[lex_rank(self.n, t)] {
                1 => '+',
                -1 => '-',
                _ => '0',
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn basis_order(&self) -> BasisOrder {
        self.basis_order
    }

    pub fn with_basis_order(mut self, order: BasisOrder) -> Self {
        self.basis_order = order;
        self
    }

    /// Signs in lexicographic tuple order.
    pub fn lex_signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_uniform(&self) -> bool {
        self.signs.iter().all(|&s| s != 0)
    }

    /// χ on an arbitrary ordered r-tuple of labels: zero on repeated labels,
    /// otherwise the stored sign times the parity of the sorting permutation.
    pub fn sign(&self, tuple: &[usize]) -> i8 {
        debug_assert_eq!(tuple.len(), self.r);
        let mut t: Vec<usize> = tuple.to_vec();
        let mut parity = 1i8;
        // insertion sort, counting transpositions
        for i in 1..t.len() {
            let mut j = i;
            while j > 0 && t[j - 1] > t[j] {
                t.swap(j - 1, j);
                parity = -parity;
                j -= 1;
            }
        }
        if t.windows(2).any(|w| w[0] == w[1]) {
            return 0;
        }
        parity * self.signs[lex_rank(self.n, &t)]
    }

    /// Whether the labels extend to a basis.
    pub fn is_independent(&self, labels: &[usize]) -> bool {
        if labels.len() > self.r {
            return false;
        }
        let mask = mask_of(labels);
        if mask.count_ones() as usize != labels.len() {
            return false;
        }
        let rest: Vec<usize> = (1..=self.n).filter(|&l| mask & bit(l) == 0).collect();
        Combinations::new(rest.len(), self.r - labels.len()).any(|ext| {
            let mut t = labels.to_vec();
            t.extend(ext.iter().map(|&i| rest[i]));
            self.sign(&t) != 0
        })
    }

    /// Matroid rank of a set of labels.
    pub fn rank_of(&self, labels: &[usize]) -> usize {
        let mut indep: Vec<usize> = Vec::new();
        for &l in labels {
            indep.push(l);
            if !self.is_independent(&indep) {
                indep.pop();
            }
        }
        indep.len()
    }

    /// Signs of the circuit with support `support`, assuming it is one.
    fn circuit_signs(&self, support: &[usize]) -> Option<SignedSet> {
        let t = support.len();
        let smask = mask_of(support);
        let rest: Vec<usize> = (1..=self.n).filter(|&l| smask & bit(l) == 0).collect();
        let need = self.r + 1 - t;
        for ext in Combinations::new(rest.len(), need) {
            let completion: Vec<usize> = ext.iter().map(|&i| rest[i]).collect();
            let signs: Vec<(usize, i8)> = support
                .iter()
                .enumerate()
                .map(|(j, &e)| {
                    let mut tuple: Vec<usize> = support.iter().copied().filter(|&x| x != e).collect();
                    tuple.extend(&completion);
                    let alt = if j % 2 == 0 { 1 } else { -1 };
                    (e, alt * self.sign(&tuple))
                })
                .collect();
            if signs.iter().all(|&(_, s)| s != 0) {
                return Some(SignedSet::from_signs(&signs).canonical());
            }
        }
        None
    }

    fn is_circuit_support(&self, support: &[usize]) -> bool {
        !self.is_independent(support)
            && (0..support.len()).all(|j| {
                let sub: Vec<usize> = support.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &x)| x).collect();
                self.is_independent(&sub)
            })
    }

    /// The circuit supported on `support` when that set is a circuit;
    /// otherwise the first circuit (by size, then lexicographically) inside
    /// it; `None` if the set is independent. Canonically signed.
    pub fn circuit_on(&self, support: &[usize]) -> Option<SignedSet> {
        let mut s = support.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() == self.r + 1 {
            // fast path for a spanning (r+1)-set
            let signs: Vec<(usize, i8)> = s
                .iter()
                .enumerate()
                .map(|(j, &e)| {
                    let tuple: Vec<usize> = s.iter().copied().filter(|&x| x != e).collect();
                    (e, if j % 2 == 0 { 1 } else { -1 } * self.sign(&tuple))
                })
                .collect();
            if signs.iter().all(|&(_, x)| x != 0) {
                return Some(SignedSet::from_signs(&signs).canonical());
            }
        }
        self.circuits_within(&s).into_iter().next()
    }

    /// Every circuit whose support is contained in `labels`, ordered by
    /// support size and then lexicographically.
    pub fn circuits_within(&self, labels: &[usize]) -> Vec<SignedSet> {
        let mut out = Vec::new();
        for size in 1..=labels.len().min(self.r + 1) {
            for c in Combinations::new(labels.len(), size) {
                let support: Vec<usize> = c.iter().map(|&i| labels[i]).collect();
                if self.is_circuit_support(&support) {
                    if let Some(sig) = self.circuit_signs(&support) {
                        out.push(sig);
                    }
                }
            }
        }
        out
    }

    pub fn all_circuits(&self) -> Vec<SignedSet> {
        let all: Vec<usize> = (1..=self.n).collect();
        self.circuits_within(&all)
    }

    /// All cocircuits, canonically signed and sorted.
    pub fn cocircuits(&self) -> Vec<SignedSet> {
        let mut out = BTreeSet::new();
        for h in Combinations::new(self.n, self.r - 1) {
            let mut tuple: Vec<usize> = h.iter().map(|&i| i + 1).collect();
            tuple.push(0);
            let mut signs = Vec::with_capacity(self.n);
            for e in 1..=self.n {
                *tuple.last_mut().expect("non-empty") = e;
                signs.push((e, self.sign(&tuple)));
            }
            let y = SignedSet::from_signs(&signs);
            if !y.is_empty() {
                out.insert(y.canonical());
            }
        }
        out.into_iter().collect()
    }

    /// χ with every sign flipped.
    pub fn negated(&self) -> Self {
        Chirotope { signs: self.signs.iter().map(|s| -s).collect(), ..self.clone() }
    }

    /// The chirotope of the relabeled configuration where old label `l`
    /// becomes `perm[l - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut inv = vec![0; self.n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new - 1] = old + 1;
        }
        let signs = Combinations::new(self.n, self.r)
            .map(|c| {
                let tuple: Vec<usize> = c.iter().map(|&i| inv[i]).collect();
                self.sign(&tuple)
            })
            .collect();
        Chirotope { n: self.n, r: self.r, signs, basis_order: self.basis_order }
    }

    /// Deletes element `label`; the remaining elements are renumbered
    /// 1..n−1 in order. Fails if the deletion drops the rank.
    pub fn delete(&self, label: usize) -> Result<Self> {
        let keep: Vec<usize> = (1..=self.n).filter(|&l| l != label).collect();
        let signs = Combinations::new(keep.len(), self.r)
            .map(|c| {
                let tuple: Vec<usize> = c.iter().map(|&i| keep[i]).collect();
                self.sign(&tuple)
            })
            .collect();
        let mut c = Chirotope::new(self.n - 1, self.r, signs)?;
        c.basis_order = self.basis_order;
        Ok(c)
    }
}

/// The rank-(d+1) chirotope of an affine configuration:
/// χ(B) = orientation of the points of B in increasing label order.
pub fn chirotope_of(config: &PointConfig) -> Result<Chirotope> {
    let d = config.dim();
    if config.len() < d + 1 {
        return Err(KneserError::invalid(format!("need at least {} points in R^{d}", d + 1)));
    }
    let pts = config.points();
    let signs: Vec<i8> = Combinations::new(config.len(), d + 1)
        .map(|c| {
            let sel: Vec<&Vector> = c.iter().map(|&i| &pts[i]).collect();
            crate::exact::orientation_unchecked(&sel)
        })
        .collect();
    Chirotope::new(config.len(), d + 1, signs)
        .map_err(|_| KneserError::invalid("configuration does not affinely span its ambient space"))
}

pub(crate) fn restrict_circuits(circuits: &[SignedSet], mask: u64) -> impl Iterator<Item = &SignedSet> {
    circuits.iter().filter(move |c| c.support_mask() & !mask == 0)
}
