//! Identification of chirotopes up to relabeling (and optionally global
//! negation) against a catalog of order types.

use std::collections::HashMap;

use super::chirotope::Chirotope;

/// How signs are compared when identifying order types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    /// χ and −χ are the same oriented matroid.
    #[default]
    UpToNegation,
    /// Only relabelings are allowed.
    Strict,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        heap(k - 1, a, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            heap(k - 1, a, out);
        }
    }
    let mut a: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// Lexicographically smallest lex-ordered sign vector over all relabelings
/// (and negations, if allowed).
pub fn canonical_form(chi: &Chirotope, convention: SignConvention) -> Vec<i8> {
    let mut best: Option<Vec<i8>> = None;
    let mut consider = |v: Vec<i8>| {
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    };
    for perm in permutations(chi.n()) {
        let relabeled = chi.relabel(&perm);
        if convention == SignConvention::UpToNegation {
            consider(relabeled.negated().lex_signs().to_vec());
        }
        consider(relabeled.lex_signs().to_vec());
    }
    best.expect("at least one permutation")
}

/// Maps canonical forms to catalog indices (1-based record positions).
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    convention: SignConvention,
    index: HashMap<Vec<i8>, usize>,
}

impl Catalog {
    pub fn new(convention: SignConvention) -> Self {
        Catalog { convention, index: HashMap::new() }
    }

    /// Adds an entry; returns the index of an earlier equivalent entry if
    /// there was one (the earlier index is kept).
    pub fn insert(&mut self, index: usize, chi: &Chirotope) -> Option<usize> {
        let key = canonical_form(chi, self.convention);
        match self.index.get(&key) {
            Some(&prev) => Some(prev),
            None => {
                self.index.insert(key, index);
                None
            }
        }
    }

    pub fn identify(&self, chi: &Chirotope) -> Option<usize> {
        self.index.get(&canonical_form(chi, self.convention)).copied()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }
}
