//! Subset and matching enumeration.

/// Lexicographic iterator over the `k`-subsets of `0..n`, each as a sorted
/// vector of indices.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// All `k`-subsets of `items`, in lexicographic order of positions.
pub fn subsets_of<T: Clone>(items: &[T], k: usize) -> impl Iterator<Item = Vec<T>> + '_ {
    Combinations::new(items.len(), k).map(move |idx| idx.into_iter().map(|i| items[i].clone()).collect())
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Every perfect matching of `items` (which must have even length). Pairs
/// are ordered as in `items`, and the matchings come out in lexicographic
/// order: the first element is always paired first.
pub fn perfect_matchings<T: Clone>(items: &[T]) -> Vec<Vec<(T, T)>> {
    fn go<T: Clone>(rest: &[T], acc: &mut Vec<(T, T)>, out: &mut Vec<Vec<(T, T)>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        let first = &rest[0];
        for j in 1..rest.len() {
            acc.push((first.clone(), rest[j].clone()));
            let remaining: Vec<T> = rest[1..]
                .iter()
                .enumerate()
                .filter(|&(i, _)| i + 1 != j)
                .map(|(_, x)| x.clone())
                .collect();
            go(&remaining, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if items.len().is_multiple_of(2) {
        go(items, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_counts() {
        for n in 0..8 {
            for k in 0..=n + 1 {
                assert_eq!(Combinations::new(n, k).count(), binomial(n, k), "C({n},{k})");
            }
        }
        let first: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(first, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn matching_counts_are_double_factorials() {
        assert_eq!(perfect_matchings::<u8>(&[]).len(), 1);
        assert_eq!(perfect_matchings(&[1, 2]).len(), 1);
        assert_eq!(perfect_matchings(&[1, 2, 3, 4]).len(), 3);
        assert_eq!(perfect_matchings(&[1, 2, 3, 4, 5, 6]).len(), 15);
        assert_eq!(perfect_matchings(&[1, 2, 3, 4, 5, 6, 7, 8]).len(), 105);
        assert!(perfect_matchings(&[1, 2, 3]).is_empty());
    }
}
