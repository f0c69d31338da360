//! Rim hooks on a single component, via beta-numbers.
//!
//! A rim hook of length `l` in a partition corresponds to a bead at
//! position `b` in a beta-set with `b - l` unoccupied; sliding it down by
//! `l` removes the hook. Adding a hook is the reverse slide, done on a
//! beta-set with `l` extra beads so that new rows can appear.

use std::collections::BTreeSet;

use super::{Multipartition, Node, Partition};

/// A rim hook: a connected skew strip with no 2×2 square, inside one component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RimHook {
    comp: u32,
    cells: Vec<Node>,
}

impl RimHook {
    pub fn component(&self) -> u32 {
        self.comp
    }

    /// Cells in `(row, col)` order.
    pub fn cells(&self) -> &[Node] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Leg length: number of rows spanned minus one.
    pub fn leg_length(&self) -> u32 {
        let min = self.cells.iter().map(|c| c.row).min().unwrap_or(0);
        let max = self.cells.iter().map(|c| c.row).max().unwrap_or(0);
        max - min
    }
}

fn beta_set(p: &Partition, beads: usize) -> Vec<usize> {
    (1..=beads).map(|i| p.part(i) as usize + beads - i).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let n = beta.len();
    let parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b + i + 1 - n) as u32)
        .filter(|&x| x > 0)
        .collect();
    Partition { parts }
}

/// Cells of `outer` not in `inner` (inner ⊆ outer), tagged with component `comp`.
fn skew_cells(outer: &Partition, inner: &Partition, comp: u32) -> Vec<Node> {
    let mut cells = Vec::new();
    for i in 1..=outer.len() {
        for j in inner.part(i) + 1..=outer.part(i) {
            cells.push(Node::new(i as u32, j, comp));
        }
    }
    cells
}

/// All `(smaller, hook)` pairs obtained by removing a length-`l` rim hook
/// from `p`, ordered by the top row of the hook.
pub(crate) fn partition_removals(p: &Partition, l: usize, comp: u32) -> Vec<(Partition, RimHook)> {
    if l == 0 {
        return Vec::new();
    }
    let beta = beta_set(p, p.len());
    let occupied: BTreeSet<usize> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < l || occupied.contains(&(b - l)) {
            continue;
        }
        let mut moved = beta.clone();
        moved[idx] = b - l;
        let smaller = from_beta(moved);
        let cells = skew_cells(p, &smaller, comp);
        out.push((smaller, RimHook { comp, cells }));
    }
    out
}

/// All `(larger, hook)` pairs obtained by wrapping a length-`l` rim hook
/// onto `p`, ordered by the top row of the hook.
pub(crate) fn partition_additions(p: &Partition, l: usize, comp: u32) -> Vec<(Partition, RimHook)> {
    if l == 0 {
        return Vec::new();
    }
    let beta = beta_set(p, p.len() + l);
    let occupied: BTreeSet<usize> = beta.iter().copied().collect();
    let mut out = Vec::new();
    // beads are listed top row first; the topmost moved bead gives the
    // hook with the highest top row
    for (idx, &b) in beta.iter().enumerate() {
        if occupied.contains(&(b + l)) {
            continue;
        }
        let mut moved = beta.clone();
        moved[idx] = b + l;
        let larger = from_beta(moved);
        let cells = skew_cells(&larger, p, comp);
        out.push((larger, RimHook { comp, cells }));
    }
    out
}

/// Every way to remove a rim hook of length `l` from some component of `λ`.
/// Ordered by component, then by the top row of the hook.
pub fn rim_hook_removals(lambda: &Multipartition, l: usize) -> Vec<(Multipartition, RimHook)> {
    let mut out = Vec::new();
    for (k, p) in lambda.components().iter().enumerate() {
        for (q, hook) in partition_removals(p, l, k as u32 + 1) {
            out.push((lambda.with_component(k + 1, q), hook));
        }
    }
    out
}

/// Every way to wrap a rim hook of length `l` onto some component of `λ`.
pub fn rim_hook_additions(lambda: &Multipartition, l: usize) -> Vec<(Multipartition, RimHook)> {
    let mut out = Vec::new();
    for (k, p) in lambda.components().iter().enumerate() {
        for (q, hook) in partition_additions(p, l, k as u32 + 1) {
            out.push((lambda.with_component(k + 1, q), hook));
        }
    }
    out
}

/// The `e`-core of `p`: strip `e`-rim hooks until none is left.
///
/// # Panics
///
/// If `e < 2`.
pub fn e_core(p: &Partition, e: usize) -> Partition {
    assert!(e >= 2, "e-core needs e >= 2, got {e}");
    let mut cur = p.clone();
    while let Some((smaller, _)) = partition_removals(&cur, e, 1).into_iter().next() {
        cur = smaller;
    }
    cur
}
