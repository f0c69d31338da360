//! Block classification for cyclotomic Hecke algebras of types G(r,1,n)
//! and G(r,p,n), in exact arithmetic.
//!
//! Parameters are rationals read as angles of roots of unity, so every
//! residue comparison is an exact equality in ℚ/ℤ.

pub mod blocks_r1;
pub mod clifford;
pub mod error;
pub mod multipartition;
pub mod report;
pub mod residue;
pub mod sweep;
mod unionfind;

pub use blocks_r1::{gamma_set, jantzen_adjacent, jantzen_closure, residue_classes, verify_lm_agreement};
pub use clifford::{
    approx_equivalent, grpn_blocks, index_set, lift_params, orbit_period, shift, verify_full_period_claim,
    verify_shift_translation, verify_shift_translation_q1, GrpnParams, Label,
};
pub use error::{Error, Result};
pub use multipartition::{
    diagram, e_core, enumerate_multipartitions, enumerate_partitions, rim_hook_additions, rim_hook_removals,
    Multipartition, Node, Partition, RimHook,
};
pub use report::{BlockKind, BlockReport, R1Report, RpnReport};
pub use residue::{
    generic_params, residue, residue_content, residue_equivalent, HeckeParamsG1, Rational, RationalAngle,
    ResidueContent, ResidueValue,
};
