//! Blocks of type G(r,1,n): residue classes of multipartitions, the set Γ
//! of residue-isolated multipartitions, and a rim-hook (Jantzen-style)
//! closure that checks the residue classification from an independent
//! direction.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multipartition::{enumerate_multipartitions, rim_hook_additions, rim_hook_removals, Multipartition};
use crate::report::{canonical_blocks, BlockKind, R1Report, REPORT_NOTE};
use crate::residue::{check_same_shape, residue_content, HeckeParamsG1, ResidueContent};
use crate::unionfind::UnionFind;

fn check_rank(r: usize, params: &HeckeParamsG1) -> Result<()> {
    if params.r() != r {
        return Err(Error::RankMismatch { left: r, right: params.r() });
    }
    Ok(())
}

fn r1_report(n: usize, params: &HeckeParamsG1, blocks: Vec<Vec<Multipartition>>) -> R1Report {
    R1Report {
        kind: BlockKind::GR1N,
        n,
        r: params.r(),
        p: None,
        d: None,
        params: params.clone(),
        lifted_params: None,
        blocks: canonical_blocks(blocks),
        gamma: None,
        orbits: None,
        note: REPORT_NOTE.to_string(),
    }
}

/// Groups `𝒫_{n,r}` into classes of equal residue content.
pub(crate) fn content_classes(n: usize, params: &HeckeParamsG1) -> Vec<Vec<Multipartition>> {
    let mut by_content: BTreeMap<ResidueContent, Vec<Multipartition>> = BTreeMap::new();
    for lambda in enumerate_multipartitions(n, params.r()) {
        by_content.entry(residue_content(&lambda, params)).or_default().push(lambda);
    }
    canonical_blocks(by_content.into_values().collect())
}

/// The residue classes of `𝒫_{n,r}`, i.e. the blocks of the G(r,1,n) Hecke algebra.
pub fn residue_classes(n: usize, r: usize, params: &HeckeParamsG1) -> Result<R1Report> {
    check_rank(r, params)?;
    Ok(r1_report(n, params, content_classes(n, params)))
}

/// Multipartitions that are alone in their residue class, in enumeration order.
pub fn gamma_set(n: usize, r: usize, params: &HeckeParamsG1) -> Result<Vec<Multipartition>> {
    check_rank(r, params)?;
    Ok(gamma_from_classes(&content_classes(n, params)))
}

pub(crate) fn gamma_from_classes(classes: &[Vec<Multipartition>]) -> Vec<Multipartition> {
    let mut gamma: Vec<_> = classes.iter().filter(|c| c.len() == 1).map(|c| c[0].clone()).collect();
    gamma.sort();
    gamma
}

/// Multipartitions reachable from `λ` by unwrapping one rim hook and wrapping
/// another of the same length, without the residue condition.
fn hook_moves(lambda: &Multipartition) -> Vec<Multipartition> {
    let n = lambda.size();
    let mut out = Vec::new();
    for l in 1..=n {
        for (nu, _) in rim_hook_removals(lambda, l) {
            for (mu, _) in rim_hook_additions(&nu, l) {
                if &mu != lambda {
                    out.push(mu);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// One Jantzen move: `μ ≠ λ` is obtained from `λ` by removing a rim hook and
/// adding one of the same length, and the two residue contents agree.
pub fn jantzen_adjacent(lambda: &Multipartition, mu: &Multipartition, params: &HeckeParamsG1) -> Result<bool> {
    check_same_shape(lambda, mu)?;
    check_rank(lambda.rank(), params)?;
    if lambda == mu {
        return Ok(false);
    }
    if residue_content(lambda, params) != residue_content(mu, params) {
        return Ok(false);
    }
    Ok(hook_moves(lambda).binary_search(mu).is_ok())
}

/// Connected components of the Jantzen-move graph on `𝒫_{n,r}`.
pub fn jantzen_closure(n: usize, r: usize, params: &HeckeParamsG1) -> Result<R1Report> {
    check_rank(r, params)?;
    let all = enumerate_multipartitions(n, r);
    let index: HashMap<&Multipartition, usize> = all.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let contents: Vec<ResidueContent> = all.iter().map(|m| residue_content(m, params)).collect();
    let mut uf = UnionFind::new(all.len());
    for (i, lambda) in all.iter().enumerate() {
        for mu in hook_moves(lambda) {
            let j = index[&mu];
            if contents[i] == contents[j] {
                uf.union(i, j);
            }
        }
    }
    let blocks = uf.groups().into_iter().map(|g| g.into_iter().map(|i| all[i].clone()).collect()).collect();
    Ok(r1_report(n, params, blocks))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Refinement {
    /// The two partitions coincide.
    Equal,
    /// Jantzen classes are strictly finer than residue classes.
    JantzenStrictlyFiner,
    /// Some Jantzen class crosses residue classes.
    NotARefinement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LmAgreement {
    pub agree: bool,
    pub refinement: Refinement,
    /// Pairs that are residue-equivalent but lie in different Jantzen classes,
    /// or (if the refinement fails) Jantzen-linked with different contents.
    pub witnesses: Vec<(Multipartition, Multipartition)>,
}

/// Compares the Jantzen closure with the residue classes.
pub fn verify_lm_agreement(n: usize, r: usize, params: &HeckeParamsG1) -> Result<LmAgreement> {
    let residue = residue_classes(n, r, params)?;
    let jantzen = jantzen_closure(n, r, params)?;
    if !jantzen.refines(&residue) {
        let mut witnesses = Vec::new();
        for b in &jantzen.blocks {
            let block = residue.block_of(&b[0]);
            for x in b.iter().filter(|x| residue.block_of(x) != block) {
                witnesses.push((b[0].clone(), x.clone()));
            }
        }
        return Ok(LmAgreement { agree: false, refinement: Refinement::NotARefinement, witnesses });
    }
    let mut witnesses = Vec::new();
    for class in &residue.blocks {
        let lead = &class[0];
        let lead_block = jantzen.block_of(lead);
        let mut split: Vec<usize> = Vec::new();
        for x in class {
            let b = jantzen.block_of(x).expect("jantzen closure covers 𝒫_{n,r}");
            if Some(b) != lead_block && !split.contains(&b) {
                split.push(b);
                witnesses.push((lead.clone(), x.clone()));
            }
        }
    }
    let refinement = if witnesses.is_empty() { Refinement::Equal } else { Refinement::JantzenStrictlyFiner };
    Ok(LmAgreement { agree: witnesses.is_empty(), refinement, witnesses })
}
