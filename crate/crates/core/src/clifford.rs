//! Type G(r,p,n) with r = p·d.
//!
//! The shift `λ[i]` rotates components inside each consecutive run of `p`
//! components. Labels `λ⟨j⟩` of the G(r,p,n) side are shift orbits paired
//! with a residue `j` mod `𝔡_λ = p / 𝔨_λ`, where `𝔨_λ` is the shift period.
//! Blocks are computed on the G(r,1,n) side under the lifted parameters
//! `k†_{cp+j} = k_c + c/d + j/p − (cp+j)/r`, whose Hecke parameters are
//! `x_c·ξ^j` with `ξ = exp(2π√−1/p)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::blocks_r1::{content_classes, gamma_from_classes};
use crate::error::{Error, Result};
use crate::multipartition::{enumerate_multipartitions, Multipartition};
use crate::report::{canonical_blocks, BlockKind, RpnReport, REPORT_NOTE};
use crate::residue::{
    check_same_shape, generic_params, rational_string, rational_vec_string, residue_content, HeckeParamsG1, Rational,
    RationalAngle, ResidueContent, ResidueRegime,
};
use crate::unionfind::UnionFind;

/// Parameters `{h, k_1, …, k_{d−1}}` of type G(r,p,n).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGrpn", into = "RawGrpn")]
pub struct GrpnParams {
    n: usize,
    r: usize,
    p: usize,
    h: Rational,
    k: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawGrpn {
    n: usize,
    r: usize,
    p: usize,
    #[serde(with = "rational_string")]
    h: Rational,
    #[serde(with = "rational_vec_string")]
    k: Vec<Rational>,
}

impl TryFrom<RawGrpn> for GrpnParams {
    type Error = Error;
    fn try_from(raw: RawGrpn) -> Result<Self> {
        GrpnParams::new(raw.n, raw.r, raw.p, raw.h, raw.k)
    }
}

impl From<GrpnParams> for RawGrpn {
    fn from(g: GrpnParams) -> Self {
        RawGrpn { n: g.n, r: g.r, p: g.p, h: g.h, k: g.k }
    }
}

impl GrpnParams {
    /// `k` holds `k_1..k_{d−1}` (empty when `r = p`).
    pub fn new(n: usize, r: usize, p: usize, h: Rational, k: Vec<Rational>) -> Result<Self> {
        check_divides(p, r)?;
        let d = r / p;
        if k.len() != d - 1 {
            return Err(Error::InvalidParams(format!("expected {} k-values for d = {d}, got {}", d - 1, k.len())));
        }
        Ok(GrpnParams { n, r, p, h, k })
    }

    /// Parameters whose lifted residues only collide when forced: `h` and
    /// each `k_c` are reciprocals of distinct primes exceeding `2nr`.
    pub fn generic(n: usize, r: usize, p: usize) -> Result<Self> {
        check_divides(p, r)?;
        let g = generic_params(n, r);
        GrpnParams::new(n, r, p, g.h(), g.k()[..r / p - 1].to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn d(&self) -> usize {
        self.r / self.p
    }

    pub fn h(&self) -> Rational {
        self.h
    }

    pub fn k(&self) -> &[Rational] {
        &self.k
    }

    /// Angle of `x_c = exp(2π√−1(k_c + c/d))`, `c = 0..d−1`, `k_0 = 0`.
    pub fn x_angle(&self, c: usize) -> RationalAngle {
        let k_c = if c == 0 { Rational::from_integer(0) } else { self.k[c - 1] };
        RationalAngle::new(k_c + Rational::new(c as i64, self.d() as i64))
    }
}

fn check_divides(p: usize, r: usize) -> Result<()> {
    if p == 0 || r == 0 || !r.is_multiple_of(p) {
        return Err(Error::NotDivisor { p, r });
    }
    Ok(())
}

/// `λ[i]`: component `c·p + j` of the result is component `c·p + ((j + i) mod p)`
/// of `λ` (0-based `j` here; the rotation is the same as the 1-based rule).
pub fn shift(lambda: &Multipartition, i: i64, p: usize) -> Result<Multipartition> {
    let r = lambda.rank();
    check_divides(p, r)?;
    let perm: Vec<usize> = (0..r)
        .map(|m| {
            let (c, j) = (m / p, m % p);
            c * p + (j as i64 + i).rem_euclid(p as i64) as usize + 1
        })
        .collect();
    lambda.permute(&perm)
}

/// `(𝔨_λ, 𝔡_λ)`: the least `m ≥ 1` with `λ[m] = λ`, and `p / 𝔨_λ`.
pub fn orbit_period(lambda: &Multipartition, p: usize) -> Result<(usize, usize)> {
    check_divides(p, lambda.rank())?;
    let period = (1..=p)
        .find(|&m| &shift(lambda, m as i64, p).expect("p divides r") == lambda)
        .expect("λ[p] = λ");
    Ok((period, p / period))
}

/// `λ[0], λ[1], …, λ[𝔨_λ − 1]`.
pub fn orbit(lambda: &Multipartition, p: usize) -> Result<Vec<Multipartition>> {
    let (period, _) = orbit_period(lambda, p)?;
    (0..period).map(|i| shift(lambda, i as i64, p)).collect()
}

/// A class `λ⟨j⟩` in the G(r,p,n) index set.
///
/// `rep` is the enumeration-minimal member of the shift orbit, `j` lies in
/// `0..𝔡_λ` (0-based; `λ⟨j⟩` here is `λ⟨j+1⟩` in 1-based numbering), and
/// `period` is `𝔨_λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub rep: Multipartition,
    pub j: usize,
    pub period: usize,
}

impl Label {
    pub fn d_lambda(&self, p: usize) -> usize {
        p / self.period
    }
}

/// Shift orbits of `𝒫_{n,r}`, each sorted, ordered by representative.
fn shift_orbits(n: usize, r: usize, p: usize) -> Result<Vec<Vec<Multipartition>>> {
    check_divides(p, r)?;
    let all = enumerate_multipartitions(n, r);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for lambda in all {
        if seen.contains(&lambda) {
            continue;
        }
        let mut members = orbit(&lambda, p)?;
        members.sort();
        seen.extend(members.iter().cloned());
        out.push(members);
    }
    Ok(out)
}

/// Labels contributed by one shift orbit. G(r,p,0) is the trivial group, so
/// for `n = 0` the single empty multipartition carries one label only.
fn orbit_labels(members: &[Multipartition], p: usize) -> impl Iterator<Item = Label> + '_ {
    let period = members.len();
    let count = if members[0].size() == 0 { 1 } else { p / period };
    (0..count).map(move |j| Label { rep: members[0].clone(), j, period })
}

/// The index set `Λ⁺`: one label per class of `𝒫_{n,r} × ℤ/pℤ` under the
/// shift-and-relabel relation. Ordered by `(rep, j)`.
pub fn index_set(n: usize, r: usize, p: usize) -> Result<Vec<Label>> {
    Ok(shift_orbits(n, r, p)?.iter().flat_map(|m| orbit_labels(m, p).collect::<Vec<_>>()).collect())
}

/// Parameters of G(r,1,n) whose Hecke parameters are `x_c·ξ^j`.
pub fn lift_params(gp: &GrpnParams) -> HeckeParamsG1 {
    let (r, p, d) = (gp.r as i64, gp.p as i64, gp.d() as i64);
    let mut k = Vec::with_capacity(gp.r - 1);
    for c in 0..d {
        for j in 0..p {
            if c == 0 && j == 0 {
                continue;
            }
            let k_c = if c == 0 { Rational::from_integer(0) } else { gp.k[c as usize - 1] };
            k.push(k_c + Rational::new(c, d) + Rational::new(j, p) - Rational::new(c * p + j, r));
        }
    }
    HeckeParamsG1::new(gp.r, gp.h, k).expect("r - 1 lifted values")
}

/// `λ ≈ μ`: `λ ∼_R μ[j]` for some `j`, under the lifted parameters.
pub fn approx_equivalent(lambda: &Multipartition, mu: &Multipartition, gp: &GrpnParams) -> Result<bool> {
    check_same_shape(lambda, mu)?;
    check_divides(gp.p, lambda.rank())?;
    if lambda.rank() != gp.r {
        return Err(Error::RankMismatch { left: lambda.rank(), right: gp.r });
    }
    let lifted = lift_params(gp);
    let target = residue_content(lambda, &lifted);
    for j in 0..gp.p {
        if residue_content(&shift(mu, j as i64, gp.p)?, &lifted) == target {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Per-orbit data attached to a G(r,p,n) report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitInfo {
    pub rep: Multipartition,
    pub members: Vec<Multipartition>,
    pub period: usize,
    pub d_lambda: usize,
    pub in_gamma: bool,
}

/// Blocks of the G(r,p,n) Hecke algebra on `Λ⁺`.
///
/// Labels whose representative lies in Γ are singleton blocks. All other
/// labels are grouped by the `≈`-class of their representative.
pub fn grpn_blocks(gp: &GrpnParams) -> Result<RpnReport> {
    let (n, r, p) = (gp.n, gp.r, gp.p);
    let lifted = lift_params(gp);
    let classes = content_classes(n, &lifted);
    let gamma = gamma_from_classes(&classes);
    let orbits = shift_orbits(n, r, p)?;

    // ≈-classes: residue classes glued along shift orbits.
    let mut slot: BTreeMap<&Multipartition, usize> = BTreeMap::new();
    for (ci, class) in classes.iter().enumerate() {
        for m in class {
            slot.insert(m, ci);
        }
    }
    let mut uf = UnionFind::new(classes.len());
    for members in &orbits {
        for m in &members[1..] {
            uf.union(slot[&members[0]], slot[m]);
        }
    }

    let in_gamma = |m: &Multipartition| gamma.binary_search(m).is_ok();
    let mut grouped: BTreeMap<usize, Vec<Label>> = BTreeMap::new();
    let mut blocks: Vec<Vec<Label>> = Vec::new();
    let mut info = Vec::with_capacity(orbits.len());
    for members in &orbits {
        let rep = &members[0];
        let period = members.len();
        let orbit_gamma = members.iter().filter(|m| in_gamma(m)).count();
        if orbit_gamma != 0 && orbit_gamma != members.len() {
            return Err(Error::Inconsistent(format!("Γ is not shift-stable on the orbit of {rep}")));
        }
        let labels = orbit_labels(members, p);
        if orbit_gamma > 0 {
            blocks.extend(labels.map(|l| vec![l]));
        } else {
            grouped.entry(uf.find(slot[rep])).or_default().extend(labels);
        }
        info.push(OrbitInfo {
            rep: rep.clone(),
            members: members.clone(),
            period,
            d_lambda: p / period,
            in_gamma: orbit_gamma > 0,
        });
    }
    // a Γ orbit must form its own ≈-class
    for members in orbits.iter().filter(|m| in_gamma(&m[0])) {
        let root = uf.find(slot[&members[0]]);
        if grouped.contains_key(&root) {
            return Err(Error::Inconsistent(format!("Γ orbit of {} is ≈-related to a non-Γ orbit", members[0])));
        }
    }
    blocks.extend(grouped.into_values());

    Ok(RpnReport {
        kind: BlockKind::GRPN,
        n,
        r,
        p: Some(p),
        d: Some(gp.d()),
        params: gp.clone(),
        lifted_params: Some(lifted),
        blocks: canonical_blocks(blocks),
        gamma: Some(gamma),
        orbits: Some(info),
        note: REPORT_NOTE.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftWitness {
    pub lambda: Multipartition,
    pub i: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftTranslationReport {
    pub pass: bool,
    pub checked: usize,
    pub regime: ResidueRegime,
    pub witnesses: Vec<ShiftWitness>,
}

fn translation_check(gp: &GrpnParams, lifted: &HeckeParamsG1) -> Result<ShiftTranslationReport> {
    let mut witnesses = Vec::new();
    let mut checked = 0;
    for lambda in enumerate_multipartitions(gp.n, gp.r) {
        let base = residue_content(&lambda, lifted);
        for i in 0..gp.p {
            checked += 1;
            let shifted: ResidueContent = residue_content(&shift(&lambda, i as i64, gp.p)?, lifted);
            let expect = base.rotate(-RationalAngle::from_ratio(i as i64, gp.p as i64));
            if shifted != expect {
                witnesses.push(ShiftWitness { lambda: lambda.clone(), i });
            }
        }
    }
    Ok(ShiftTranslationReport { pass: witnesses.is_empty(), checked, regime: lifted.regime(), witnesses })
}

/// Checks `content(λ[i]) = content(λ)` rotated by `−i/p`, for all `λ` and
/// `i`, when the lifted `q ≠ 1`.
pub fn verify_shift_translation(gp: &GrpnParams) -> Result<ShiftTranslationReport> {
    let lifted = lift_params(gp);
    if lifted.regime() != ResidueRegime::Circle {
        return Err(Error::Precondition("shift translation of angles needs q ≠ 1".into()));
    }
    translation_check(gp, &lifted)
}

/// The `q = 1` counterpart: the `Q`-coordinate of every residue rotates by `−i/p`.
pub fn verify_shift_translation_q1(gp: &GrpnParams) -> Result<ShiftTranslationReport> {
    let lifted = lift_params(gp);
    if lifted.regime() == ResidueRegime::Circle {
        return Err(Error::Precondition("the q = 1 translation check needs h ∈ ℤ".into()));
    }
    translation_check(gp, &lifted)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FullPeriodReport {
    pub pass: bool,
    /// Number of `λ ∉ Γ` with `𝔨_λ ≠ p` that were examined.
    pub checked: usize,
    /// Each `λ ∉ Γ` with `𝔨_λ ≠ p` lacking a residue partner of full period.
    pub witnesses: Vec<Multipartition>,
}

/// Every `λ ∉ Γ` with `𝔨_λ ≠ p` has some `μ ∼_R λ` with `𝔨_μ = p`.
pub fn verify_full_period_claim(gp: &GrpnParams) -> Result<FullPeriodReport> {
    let lifted = lift_params(gp);
    let mut witnesses = Vec::new();
    let mut checked = 0;
    for class in content_classes(gp.n, &lifted) {
        if class.len() == 1 {
            continue;
        }
        let periods = class.iter().map(|m| orbit_period(m, gp.p).map(|x| x.0)).collect::<Result<Vec<_>>>()?;
        let has_full = periods.contains(&gp.p);
        for (m, &k) in class.iter().zip(&periods) {
            if k != gp.p {
                checked += 1;
                if !has_full {
                    witnesses.push(m.clone());
                }
            }
        }
    }
    Ok(FullPeriodReport { pass: witnesses.is_empty(), checked, witnesses })
}
