use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Exponent vector `α ∈ ℕ^n`.
///
/// Ordering is graded lexicographic: lower degree first, then the larger
/// leading exponent first, so `(2,0) < (1,1) < (0,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    /// Counts how often each coordinate occurs in a tuple of slot indices.
    pub fn from_tuple(n: usize, tuple: &[usize]) -> Self {
        let mut e = vec![0u32; n];
        for &j in tuple {
            e[j] += 1;
        }
        MultiIndex(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// The non-decreasing slot tuple `(1,…,1,2,…,2,…)` with `α_j` copies of `j`.
    pub fn to_tuple(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(j, &a)| std::iter::repeat_n(j, a as usize))
            .collect()
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All `α ∈ ℕ^n` with `|α| = m`, in graded lexicographic order.
pub fn enumerate_multi_indices(n: usize, m: usize) -> Result<Vec<MultiIndex>> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut current, 0, m as u32, &mut out);
    Ok(out)
}

fn fill(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    let n = current.len();
    if pos == n - 1 {
        current[pos] = remaining;
        out.push(MultiIndex(current.clone()));
        return;
    }
    for a in (0..=remaining).rev() {
        current[pos] = a;
        fill(current, pos + 1, remaining - a, out);
    }
    current[pos] = 0;
}

/// `m! / (α_1! ⋯ α_n!)`.
pub fn multinomial(m: usize, alpha: &MultiIndex) -> Result<u128> {
    let d = alpha.degree();
    if d != m {
        return Err(Error::DegreeMismatch { expected: m, found: d });
    }
    // Product of binomials avoids the m! overflow for moderate m.
    let mut acc: u128 = 1;
    let mut seen: u128 = 0;
    for &a in alpha.exponents() {
        for k in 1..=a as u128 {
            seen += 1;
            acc = acc * seen / k;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn enumerates_in_grlex_order() {
        let idx = enumerate_multi_indices(2, 2).unwrap();
        assert_eq!(idx, vec![mi(&[2, 0]), mi(&[1, 1]), mi(&[0, 2])]);
        assert_eq!(enumerate_multi_indices(1, 5).unwrap(), vec![mi(&[5])]);
        let mut sorted = enumerate_multi_indices(4, 3).unwrap();
        let orig = sorted.clone();
        sorted.sort();
        assert_eq!(sorted, orig);
    }

    #[test]
    fn count_matches_brute_force() {
        for n in 1..=4usize {
            for m in 1..=4usize {
                let brute = (0..(m + 1).pow(n as u32))
                    .filter(|&code| {
                        let mut c = code;
                        let mut s = 0;
                        for _ in 0..n {
                            s += c % (m + 1);
                            c /= m + 1;
                        }
                        s == m
                    })
                    .count();
                assert_eq!(enumerate_multi_indices(n, m).unwrap().len(), brute, "n={n} m={m}");
            }
        }
        assert_eq!(enumerate_multi_indices(3, 2).unwrap().len(), 6);
    }

    #[test]
    fn rejects_zero_sizes() {
        assert_eq!(enumerate_multi_indices(0, 2), Err(Error::ZeroDimension));
        assert_eq!(enumerate_multi_indices(2, 0), Err(Error::ZeroDegree));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(2, &mi(&[1, 1])).unwrap(), 2);
        assert_eq!(multinomial(3, &mi(&[3, 0])).unwrap(), 1);
        assert_eq!(multinomial(3, &mi(&[2, 1, 0])).unwrap(), 3);
        assert_eq!(multinomial(4, &mi(&[1, 1, 1, 1])).unwrap(), 24);
        assert!(matches!(
            multinomial(3, &mi(&[1, 1])),
            Err(Error::DegreeMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn tuple_round_trip() {
        let a = mi(&[2, 0, 1]);
        assert_eq!(a.to_tuple(), vec![0, 0, 2]);
        assert_eq!(MultiIndex::from_tuple(3, &[2, 0, 0]), a);
    }
}
