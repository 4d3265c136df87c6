//! Integer partitions, cycle-type multiplicities and rim-hook removal.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{arg, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The same type stands for an irreducible character label and for the
/// cycle type of a permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return arg(format!("partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return arg(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(k, 1^{n-k})`; requires `1 <= k <= n`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return arg(format!("hook (k={k}) needs 1 <= k <= n={n}"));
        }
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, n - k));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i`, or zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True when the Young diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// Returns the hook index `k` when the partition has shape `(k, 1^{n-k})`.
    pub fn hook_arm(&self) -> Option<usize> {
        match self.parts.split_first() {
            Some((&k, rest)) if rest.iter().all(|&p| p == 1) => Some(k),
            _ => None,
        }
    }

    /// Appends `count` parts equal to one.
    pub fn padded(&self, count: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, count));
        Partition { parts }
    }

    pub fn cycle_counts(&self) -> CycleTypeCounts {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        CycleTypeCounts { counts }
    }

    /// Deletes every rim hook of `length` cells.
    ///
    /// Each result pairs the remaining shape with the hook height (rows
    /// spanned minus one). Works on first-column hook lengths: a rim hook of
    /// length `l` is a bead moved from position `b` to the free slot `b - l`,
    /// and the height counts the beads jumped over.
    pub fn remove_rim_hooks(&self, length: usize) -> Vec<(Partition, usize)> {
        if length == 0 {
            return Vec::new();
        }
        let len = self.parts.len();
        let beads: Vec<usize> = (0..len).map(|i| self.parts[i] + (len - 1 - i)).collect();
        let mut out = Vec::new();
        for (i, &b) in beads.iter().enumerate() {
            if b < length {
                continue;
            }
            let target = b - length;
            if beads.contains(&target) {
                continue;
            }
            let height = beads.iter().filter(|&&c| c > target && c < b).count();
            let mut moved = beads.clone();
            moved[i] = target;
            moved.sort_unstable_by(|x, y| y.cmp(x));
            let parts = (0..len).map(|j| moved[j] - (len - 1 - j)).collect();
            out.push((Partition::from_unsorted(parts), height));
        }
        out
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (0..first)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Number of permutations with this cycle type: `n! / prod(l^t_l t_l!)`.
    pub fn class_size(&self) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        let mut size = factorial(self.weight());
        for (&l, &t) in &self.cycle_counts().counts {
            size /= BigInt::from(l).pow(t as u32) * factorial(t);
        }
        size
    }
}

pub(crate) fn factorial(n: usize) -> num_bigint::BigInt {
    (1..=n).fold(num_bigint::BigInt::from(1), |acc, i| acc * i)
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = crate::error::Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Multiplicities `l -> t_l` of a cycle type.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleTypeCounts {
    counts: BTreeMap<usize, usize>,
}

impl CycleTypeCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, l: usize) -> usize {
        self.counts.get(&l).copied().unwrap_or(0)
    }

    pub fn set(&mut self, l: usize, t: usize) {
        assert!(l >= 1, "cycle length must be positive");
        if t == 0 {
            self.counts.remove(&l);
        } else {
            self.counts.insert(l, t);
        }
    }

    /// `sum_l l * t_l`.
    pub fn degree(&self) -> usize {
        self.counts.iter().map(|(l, t)| l * t).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&l, &t)| (l, t))
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.counts.values().sum());
        for (&l, &t) in self.counts.iter().rev() {
            parts.extend(std::iter::repeat_n(l, t));
        }
        Partition { parts }
    }
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`
/// and ending at `(1^n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Hooks `(k, 1^{n-k})` for `k = 1..=n`.
pub fn hooks(n: usize) -> Vec<Partition> {
    (1..=n).filter_map(|k| Partition::hook(n, k).ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn brute_count(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max)).map(|k| brute_count(n - k, k)).sum()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(9).len(), 30);
        for n in 0..=12 {
            assert_eq!(enumerate_partitions(n).len(), brute_count(n, n));
        }
    }

    #[test]
    fn enumeration_is_reverse_lex_and_unique() {
        for n in 1..=10 {
            let all = enumerate_partitions(n);
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts());
            }
            assert!(all.iter().all(|q| q.weight() == n));
            assert_eq!(all.first().unwrap(), &Partition::row(n));
            assert_eq!(all.last().unwrap(), &Partition::column(n));
        }
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::hook(3, 0).is_err());
        assert!(Partition::hook(3, 4).is_err());
    }

    #[test]
    fn rim_hooks_examples() {
        assert_eq!(
            p(&[1, 1]).remove_rim_hooks(2),
            vec![(Partition::empty(), 1)]
        );
        assert_eq!(
            p(&[2, 1]).remove_rim_hooks(3),
            vec![(Partition::empty(), 1)]
        );
        assert!(p(&[3]).remove_rim_hooks(4).is_empty());
        // the cells (0,2) and (1,1) are not edge-connected, so the only
        // domino is the bottom row
        assert_eq!(p(&[3, 2]).remove_rim_hooks(2), vec![(p(&[3]), 0)]);
        let mut got = p(&[3, 1]).remove_rim_hooks(2);
        got.sort();
        assert_eq!(got, vec![(p(&[1, 1]), 0)]);
        let mut got = p(&[2, 2]).remove_rim_hooks(2);
        got.sort();
        assert_eq!(got, vec![(p(&[1, 1]), 1), (p(&[2]), 0)]);
    }

    #[test]
    fn rim_hook_removal_keeps_weight() {
        for n in 1..=8 {
            for lam in enumerate_partitions(n) {
                for l in 1..=n {
                    for (rest, h) in lam.remove_rim_hooks(l) {
                        assert_eq!(rest.weight() + l, n);
                        assert!(lam.contains(&rest));
                        assert!(h < l);
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_counts_round_trip() {
        for n in 0..=9 {
            for lam in enumerate_partitions(n) {
                let counts = lam.cycle_counts();
                assert_eq!(counts.degree(), n);
                assert_eq!(counts.to_partition(), lam);
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=8 {
            let total: num_bigint::BigInt =
                enumerate_partitions(n).iter().map(|m| m.class_size()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn conjugate_is_involution() {
        for lam in enumerate_partitions(7) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }
}
