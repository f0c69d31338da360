//! Block reports shared by both classification routes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::clifford::{GrpnParams, Label, OrbitInfo};
use crate::multipartition::Multipartition;
use crate::residue::HeckeParamsG1;

/// Attached to every report: what the computed partition does and does not certify.
pub const REPORT_NOTE: &str = "Blocks are computed from residue combinatorics. Category O blocks follow from \
the known equivalence with Hecke algebra blocks and are not computed independently.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockKind {
    #[serde(rename = "g_r1n")]
    GR1N,
    #[serde(rename = "g_rpn")]
    GRPN,
}

/// A partition of a label set into blocks.
///
/// Each block is sorted and blocks are ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport<L, P> {
    pub kind: BlockKind,
    pub n: usize,
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub params: P,
    /// Parameters of the G(r,1,n) algebra the classification was run under,
    /// when they differ from `params`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lifted_params: Option<HeckeParamsG1>,
    pub blocks: Vec<Vec<L>>,
    /// Multipartitions alone in their residue class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<Multipartition>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitInfo>>,
    pub note: String,
}

pub type R1Report = BlockReport<Multipartition, HeckeParamsG1>;
pub type RpnReport = BlockReport<Label, GrpnParams>;

impl<L: Ord + Clone, P> BlockReport<L, P> {
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: &L) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(x).is_ok())
    }

    /// Blocks as sets, for order-free comparison.
    pub fn as_sets(&self) -> BTreeSet<BTreeSet<L>> {
        self.blocks.iter().map(|b| b.iter().cloned().collect()).collect()
    }

    /// True iff the blocks are nonempty, pairwise disjoint, cover exactly
    /// `universe`, and are in canonical order.
    pub fn is_partition_of(&self, universe: &[L]) -> bool {
        let mut seen = BTreeSet::new();
        for b in &self.blocks {
            if b.is_empty() || !b.windows(2).all(|w| w[0] < w[1]) {
                return false;
            }
            for x in b {
                if !seen.insert(x.clone()) {
                    return false;
                }
            }
        }
        let ordered = self.blocks.windows(2).all(|w| w[0][0] < w[1][0]);
        let all: BTreeSet<L> = universe.iter().cloned().collect();
        ordered && seen == all && all.len() == universe.len()
    }

    /// True iff every block of `self` lies inside a block of `coarser`.
    pub fn refines<Q>(&self, coarser: &BlockReport<L, Q>) -> bool {
        self.blocks.iter().all(|b| {
            let target = coarser.block_of(&b[0]);
            target.is_some() && b.iter().all(|x| coarser.block_of(x) == target)
        })
    }
}

/// Sorts each block, then orders blocks by smallest member.
pub(crate) fn canonical_blocks<L: Ord>(mut blocks: Vec<Vec<L>>) -> Vec<Vec<L>> {
    for b in &mut blocks {
        b.sort();
    }
    blocks.retain(|b| !b.is_empty());
    blocks.sort_by(|a, b| a[0].cmp(&b[0]));
    blocks
}
