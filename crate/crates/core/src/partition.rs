//! Integer partitions, used both as Young diagrams and as types of abelian p-groups.
//!
//! A partition `[a,b,c]` with `a >= b >= c >= 1` is the type of the p-group
//! `Z/p^a x Z/p^b x Z/p^c`. The empty partition is the type of the trivial group.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    /// The zero partition.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `[n]` (empty for `n = 0`).
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: u32) -> Self {
        Self::from_sorted(vec![1; n as usize])
    }

    /// Drops zeros and sorts; rejects negative entries.
    pub fn normalize(raw: &[i64]) -> Result<Self> {
        if let Some(&neg) = raw.iter().find(|&&x| x < 0) {
            return Err(Error::NegativeEntry(neg));
        }
        let mut parts = Vec::with_capacity(raw.len());
        for &x in raw.iter().filter(|&&x| x > 0) {
            let part = u32::try_from(x)
                .map_err(|_| Error::InvalidPartition(format!("part {x} is too large")))?;
            parts.push(part);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, reading missing parts as 0.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    /// `true` iff the Young diagram of `other` fits inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Self::from_sorted(parts)
    }

    /// Multiset union of the parts, i.e. the type of a direct product of p-groups.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    /// Multiset difference; `None` if some part of `other` is missing from `self`.
    pub fn remove_parts(&self, other: &Partition) -> Option<Partition> {
        let mut remaining = self.parts.clone();
        for &p in &other.parts {
            let idx = remaining.iter().position(|&q| q == p)?;
            remaining.remove(idx);
        }
        Some(Self::from_sorted(remaining))
    }

    /// All partitions whose diagram is contained in this one, including the empty one.
    pub fn contained_partitions(&self) -> Vec<Partition> {
        fn go(bound: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::from_sorted(prefix.clone()));
            let i = prefix.len();
            if i == bound.len() {
                return;
            }
            let cap = match prefix.last() {
                Some(&last) => last.min(bound[i]),
                None => bound[i],
            };
            for v in 1..=cap {
                prefix.push(v);
                go(bound, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, &mut Vec::new(), &mut out);
        out
    }

    /// All sub-multisets of the parts (each distinct multiset once).
    pub fn sub_multisets(&self) -> Vec<Partition> {
        let mut distinct: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match distinct.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => distinct.push((p, 1)),
            }
        }
        let mut out = vec![Vec::new()];
        for (value, count) in distinct {
            let mut next = Vec::with_capacity(out.len() * (count + 1));
            for prefix in &out {
                for c in 0..=count {
                    let mut parts = prefix.clone();
                    parts.extend(std::iter::repeat_n(value, c));
                    next.push(parts);
                }
            }
            out = next;
        }
        out.into_iter().map(Self::from_sorted).collect()
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for v in (1..=remaining.min(max)).rev() {
            prefix.push(v);
            go(remaining - v, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[a,b,c]`; whitespace is ignored, parts must be positive and weakly decreasing.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, format!("expected `[a,b,...]`, got `{trimmed}`")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 1;
        for piece in inner.split(',') {
            let value: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::parse(offset, format!("bad part `{}`", piece.trim())))?;
            parts.push(value);
            offset += piece.len() + 1;
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A formal sum of partitions with positive integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionMultiset {
    entries: BTreeMap<Partition, u64>,
}

impl PartitionMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(p: Partition) -> Self {
        let mut m = Self::new();
        m.add(p, 1);
        m
    }

    /// Adds `count` copies of `p`; adding zero is a no-op.
    pub fn add(&mut self, p: Partition, count: u64) {
        if count > 0 {
            *self.entries.entry(p).or_insert(0) += count;
        }
    }

    pub fn coefficient(&self, p: &Partition) -> u64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    /// Number of distinct partitions.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Terms in decreasing lexicographic order of the partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.entries.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.entries.keys().rev()
    }
}

impl FromIterator<(Partition, u64)> for PartitionMultiset {
    fn from_iter<T: IntoIterator<Item = (Partition, u64)>>(iter: T) -> Self {
        let mut m = Self::new();
        for (p, c) in iter {
            m.add(p, c);
        }
        m
    }
}

impl fmt::Display for PartitionMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(Partition::normalize(&[0, 2, 1, 2]).unwrap(), p(&[2, 2, 1]));
        assert_eq!(Partition::normalize(&[]).unwrap(), Partition::empty());
        assert_eq!(Partition::normalize(&[3]).unwrap(), p(&[3]));
        assert_eq!(
            Partition::normalize(&[1, -2]),
            Err(Error::NegativeEntry(-2))
        );
    }

    #[test]
    fn new_rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn contains_examples() {
        assert!(p(&[2, 1]).contains(&p(&[1, 1])));
        assert!(!p(&[2]).contains(&p(&[1, 1])));
        assert!(p(&[3, 2, 1]).contains(&p(&[3, 2, 1])));
        assert!(p(&[1]).contains(&Partition::empty()));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn contained_partitions_of_two_one() {
        let mut got = p(&[2, 1]).contained_partitions();
        got.sort();
        let mut want = vec![Partition::empty(), p(&[1]), p(&[1, 1]), p(&[2]), p(&[2, 1])];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn sub_multisets_counts() {
        // two distinct values with multiplicities 2 and 1
        assert_eq!(p(&[2, 2, 1]).sub_multisets().len(), 6);
        assert_eq!(Partition::empty().sub_multisets(), vec![Partition::empty()]);
    }

    #[test]
    fn union_and_remove() {
        let a = p(&[2, 1]);
        let b = p(&[3, 1]);
        let u = a.union(&b);
        assert_eq!(u, p(&[3, 2, 1, 1]));
        assert_eq!(u.remove_parts(&b), Some(a));
        assert_eq!(p(&[2]).remove_parts(&p(&[1])), None);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p(&[3, 2, 1]).to_string(), "[3,2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[ 2, 2 ,1 ]".parse::<Partition>().unwrap(), p(&[2, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("2,1".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn multiset_display() {
        let m: PartitionMultiset = [(p(&[2, 1]), 2), (p(&[3]), 1)].into_iter().collect();
        assert_eq!(m.to_string(), "[3] + 2[2,1]");
        assert_eq!(m.total(), 3);
    }
}
