//! Exhaustive parameter sweeps for the verification checks.
//!
//! Parameters range over all angles `a/b ∈ [0, 1)` with `b ≤ max_den`;
//! residues only see parameters mod 1, so this covers every root-of-unity
//! regime of the given orders.

use serde::Serialize;

use crate::blocks_r1::{verify_lm_agreement, LmAgreement};
use crate::clifford::{
    lift_params, verify_full_period_claim, verify_shift_translation, verify_shift_translation_q1, FullPeriodReport,
    GrpnParams, ShiftTranslationReport,
};
use crate::error::Result;
use crate::residue::{format_rational, HeckeParamsG1, Rational, ResidueRegime};

/// Reduced fractions `a/b` in `[0, 1)` with `1 ≤ b ≤ max_den`, ascending.
pub fn angles_up_to(max_den: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=max_den.max(1))
        .flat_map(|b| (0..b).map(move |a| Rational::new(a, b)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// All `len`-tuples over `values`, lexicographic.
fn tuples(values: &[Rational], len: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                values.iter().map(move |&v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn g1_param_sweep(r: usize, max_den: i64) -> Vec<HeckeParamsG1> {
    let angles = angles_up_to(max_den);
    let ks = tuples(&angles, r - 1);
    angles
        .iter()
        .flat_map(|&h| ks.iter().map(move |k| HeckeParamsG1::new(r, h, k.clone()).expect("r - 1 values")))
        .collect()
}

pub fn grpn_param_sweep(n: usize, r: usize, p: usize, max_den: i64) -> Result<Vec<GrpnParams>> {
    let angles = angles_up_to(max_den);
    let d = r.checked_div(p).unwrap_or(0).max(1);
    let ks = tuples(&angles, d - 1);
    let mut out = Vec::with_capacity(angles.len() * ks.len());
    for &h in &angles {
        for k in &ks {
            out.push(GrpnParams::new(n, r, p, h, k.clone())?);
        }
    }
    Ok(out)
}

/// One failing instance and its witnesses.
#[derive(Debug, Clone, Serialize)]
pub struct SweepFailure<W> {
    pub n: usize,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    pub h: String,
    pub k: Vec<String>,
    pub detail: W,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport<W> {
    pub check: String,
    pub instances: usize,
    pub pass: bool,
    pub failures: Vec<SweepFailure<W>>,
}

impl<W> SweepReport<W> {
    fn new(check: &str) -> Self {
        SweepReport { check: check.to_string(), instances: 0, pass: true, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> SweepFailure<W>) {
        self.instances += 1;
        if !ok {
            self.pass = false;
            self.failures.push(failure());
        }
    }
}

fn strings(k: &[Rational]) -> Vec<String> {
    k.iter().map(format_rational).collect()
}

/// Jantzen closure vs residue classes on one instance.
pub fn check_lm(n: usize, params: &HeckeParamsG1) -> Result<SweepReport<LmAgreement>> {
    let mut rep = SweepReport::new("lm");
    let out = verify_lm_agreement(n, params.r(), params)?;
    rep.record(out.agree, || SweepFailure {
        n,
        r: params.r(),
        p: None,
        h: format_rational(&params.h()),
        k: strings(params.k()),
        detail: out.clone(),
    });
    Ok(rep)
}

/// Jantzen closure vs residue classes for `n ≤ max_n`, `r ≤ max_r`.
pub fn sweep_lm(max_n: usize, max_r: usize, max_den: i64) -> Result<SweepReport<LmAgreement>> {
    let mut rep = SweepReport::new("lm");
    for r in 1..=max_r {
        for params in g1_param_sweep(r, max_den) {
            for n in 0..=max_n {
                let out = verify_lm_agreement(n, r, &params)?;
                rep.record(out.agree, || SweepFailure {
                    n,
                    r,
                    p: None,
                    h: format_rational(&params.h()),
                    k: strings(params.k()),
                    detail: out.clone(),
                });
            }
        }
    }
    Ok(rep)
}

fn grpn_instances(max_n: usize, ranks: &[usize], ps: &[usize], max_den: i64) -> Result<Vec<GrpnParams>> {
    let mut out = Vec::new();
    for &r in ranks {
        for &p in ps.iter().filter(|&&p| p >= 1 && r % p == 0) {
            for n in 0..=max_n {
                out.extend(grpn_param_sweep(n, r, p, max_den)?);
            }
        }
    }
    Ok(out)
}

/// Shift-translation of residue contents on one instance, in whichever
/// residue regime the lifted parameters fall.
pub fn check_shift(gp: &GrpnParams) -> Result<ShiftTranslationReport> {
    if lift_params(gp).regime() == ResidueRegime::Circle {
        verify_shift_translation(gp)
    } else {
        verify_shift_translation_q1(gp)
    }
}

pub fn sweep_shift(
    max_n: usize,
    ranks: &[usize],
    ps: &[usize],
    max_den: i64,
) -> Result<SweepReport<ShiftTranslationReport>> {
    let mut rep = SweepReport::new("shift");
    for gp in grpn_instances(max_n, ranks, ps, max_den)? {
        let out = check_shift(&gp)?;
        rep.record(out.pass, || grpn_failure(&gp, out.clone()));
    }
    Ok(rep)
}

pub fn sweep_claim(max_n: usize, ranks: &[usize], ps: &[usize], max_den: i64) -> Result<SweepReport<FullPeriodReport>> {
    let mut rep = SweepReport::new("claim");
    for gp in grpn_instances(max_n, ranks, ps, max_den)? {
        let out = verify_full_period_claim(&gp)?;
        rep.record(out.pass, || grpn_failure(&gp, out.clone()));
    }
    Ok(rep)
}

pub fn single_grpn<W>(check: &str, gp: &GrpnParams, pass: bool, detail: W) -> SweepReport<W> {
    let mut rep = SweepReport::new(check);
    rep.record(pass, || grpn_failure(gp, detail));
    rep
}

fn grpn_failure<W>(gp: &GrpnParams, detail: W) -> SweepFailure<W> {
    SweepFailure {
        n: gp.n(),
        r: gp.r(),
        p: Some(gp.p()),
        h: format_rational(&gp.h()),
        k: strings(gp.k()),
        detail,
    }
}
