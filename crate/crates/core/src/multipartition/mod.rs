//! Partitions, multipartitions and their Young diagrams.
//!
//! Nodes are 1-based in row, column and component. Enumeration order is
//! decreasing-lexicographic per component (comparing zero-padded part
//! sequences) and lexicographic over component tuples; the `Ord` impls on
//! [`Partition`] and [`Multipartition`] are exactly that order, so sorting
//! a list puts it in enumeration order.

mod hooks;

pub use hooks::{e_core, rim_hook_additions, rim_hook_removals, RimHook};

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition stored as its weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&x| x > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from any sequence of parts, dropping zeros.
    /// Fails if the nonzero parts are not weakly decreasing.
    pub fn from_padded(parts: &[u32]) -> Result<Self> {
        Self::new(parts.iter().copied().filter(|&x| x > 0).collect())
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&x| x as usize).sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&x| x >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook length of the cell in row `i`, column `j` (both 1-based).
    pub fn hook_length(&self, i: usize, j: usize) -> Option<u32> {
        if j == 0 || self.part(i) < j as u32 {
            return None;
        }
        let arm = self.part(i) - j as u32;
        let leg = self.parts[i..].iter().filter(|&&x| x >= j as u32).count() as u32;
        Some(arm + leg + 1)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.parts.len().max(other.parts.len());
        for i in 1..=len {
            // larger part sorts first
            match other.part(i).cmp(&self.part(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// An r-tuple of partitions, r ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyMultipartition);
        }
        Ok(Multipartition { components })
    }

    /// Convenience constructor from nested part lists.
    pub fn from_parts<I, P>(components: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: Into<Vec<u32>>,
    {
        let comps = components
            .into_iter()
            .map(|p| Partition::new(p.into()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn empty(r: usize) -> Result<Self> {
        Self::new(vec![Partition::empty(); r])
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `k`, 1-based.
    pub fn component(&self, k: usize) -> &Partition {
        &self.components[k - 1]
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub(crate) fn with_component(&self, k: usize, p: Partition) -> Multipartition {
        let mut components = self.components.clone();
        components[k - 1] = p;
        Multipartition { components }
    }

    /// Reorders components: component `k` of the result is component
    /// `perm[k-1]` (1-based) of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Multipartition> {
        let r = self.rank();
        let mut seen = vec![false; r];
        for &k in perm {
            if k == 0 || k > r || std::mem::replace(&mut seen[k - 1], true) {
                return Err(Error::Precondition(format!(
                    "{perm:?} is not a permutation of 1..={r}"
                )));
            }
        }
        if perm.len() != r {
            return Err(Error::RankMismatch { left: r, right: perm.len() });
        }
        let components = perm.iter().map(|&k| self.components[k - 1].clone()).collect();
        Ok(Multipartition { components })
    }

    pub fn to_nested(&self) -> Vec<Vec<u32>> {
        self.components.iter().map(|p| p.parts.clone()).collect()
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.components.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let comps = Vec::<Partition>::deserialize(deserializer)?;
        Multipartition::new(comps).map_err(serde::de::Error::custom)
    }
}

/// A cell `(row, col, comp)` of a Young diagram, all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub comp: u32,
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32, comp: u32) -> Self {
        Node { comp, row, col }
    }

    /// The content `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for x in (1..=max.min(rest)).rev() {
            cur.push(x);
            go(rest - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All r-partitions of `n` in enumeration order.
pub fn enumerate_multipartitions(n: usize, r: usize) -> Vec<Multipartition> {
    assert!(r >= 1, "rank must be positive");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();

    fn go(
        rest: usize,
        slots: usize,
        by_size: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        out: &mut Vec<Multipartition>,
    ) {
        if slots == 1 {
            for p in &by_size[rest] {
                cur.push(p.clone());
                out.push(Multipartition { components: cur.clone() });
                cur.pop();
            }
            return;
        }
        for m in 0..=rest {
            for p in &by_size[m] {
                cur.push(p.clone());
                go(rest - m, slots - 1, by_size, cur, out);
                cur.pop();
            }
        }
    }

    let mut out = Vec::new();
    go(n, r, &by_size, &mut Vec::with_capacity(r), &mut out);
    out.sort();
    out
}

/// The Young diagram `[λ]`.
pub fn diagram(lambda: &Multipartition) -> BTreeSet<Node> {
    let mut cells = BTreeSet::new();
    for (k, p) in lambda.components.iter().enumerate() {
        for (i, &len) in p.parts.iter().enumerate() {
            for j in 1..=len {
                cells.insert(Node::new(i as u32 + 1, j, k as u32 + 1));
            }
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::from_parts(parts.iter().map(|p| p.to_vec())).unwrap()
    }

    #[test]
    fn partitions_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let two: Vec<_> = enumerate_partitions(2).iter().map(|p| p.parts.clone()).collect();
        assert_eq!(two, vec![vec![2], vec![1, 1]]);
        assert_eq!(enumerate_partitions(4).len(), 5);
    }

    #[test]
    fn partitions_are_sorted_and_distinct() {
        for n in 0..=8 {
            let ps = enumerate_partitions(n);
            assert!(ps.windows(2).all(|w| w[0] < w[1]), "n = {n}");
            assert!(ps.iter().all(|p| p.size() == n));
        }
    }

    #[test]
    fn multipartitions_small() {
        assert_eq!(enumerate_multipartitions(1, 2), vec![mp(&[&[1], &[]]), mp(&[&[], &[1]])]);
        assert_eq!(
            enumerate_multipartitions(2, 2),
            vec![
                mp(&[&[2], &[]]),
                mp(&[&[1, 1], &[]]),
                mp(&[&[1], &[1]]),
                mp(&[&[], &[2]]),
                mp(&[&[], &[1, 1]]),
            ]
        );
        assert_eq!(enumerate_multipartitions(0, 3), vec![mp(&[&[], &[], &[]])]);
    }

    #[test]
    fn diagram_examples() {
        let d = diagram(&mp(&[&[2, 1]]));
        let expect: BTreeSet<_> =
            [Node::new(1, 1, 1), Node::new(1, 2, 1), Node::new(2, 1, 1)].into_iter().collect();
        assert_eq!(d, expect);
        let d = diagram(&mp(&[&[1], &[1]]));
        let expect: BTreeSet<_> = [Node::new(1, 1, 1), Node::new(1, 1, 2)].into_iter().collect();
        assert_eq!(d, expect);
        assert!(diagram(&Multipartition::empty(3).unwrap()).is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Multipartition::new(vec![]), Err(Error::EmptyMultipartition));
        assert!(mp(&[&[1], &[]]).permute(&[1, 1]).is_err());
    }

    #[test]
    fn hook_lengths_of_21() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.hook_length(1, 1), Some(3));
        assert_eq!(p.hook_length(1, 2), Some(1));
        assert_eq!(p.hook_length(2, 1), Some(1));
        assert_eq!(p.hook_length(2, 2), None);
        assert_eq!(p.conjugate(), p);
    }

    #[test]
    fn json_shape() {
        let m = mp(&[&[2, 1], &[]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[[2,1],[]]");
        let back: Multipartition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Multipartition>("[[1,2]]").is_err());
        assert!(serde_json::from_str::<Multipartition>("[]").is_err());
    }
}
