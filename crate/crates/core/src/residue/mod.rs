//! Hecke parameters as exact angles, the residue of a node, and residue
//! equivalence of multipartitions.
//!
//! Parameters are `q = exp(2π√−1·h)` and
//! `Q_m = exp(2π√−1·(k_m + m/r))` for `m = 0..r−1` with `k_0 = 0`, so
//! `Q_0 = 1`. Because every `Q_m` is a root of unity none of them can vanish;
//! the third residue case is reached only when `q = 1` and two `Q`'s agree.

mod angle;

pub use angle::{
    format_rational, parse_rational, rational_string, rational_vec_string, Rational, RationalAngle,
};

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipartition::{diagram, Multipartition, Node};

/// Parameters `{h, k_1, …, k_{r−1}}` of a type G(r,1,n) Hecke algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct HeckeParamsG1 {
    r: usize,
    h: Rational,
    k: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    #[serde(with = "rational_string")]
    h: Rational,
    #[serde(with = "rational_vec_string")]
    k: Vec<Rational>,
}

impl TryFrom<RawParams> for HeckeParamsG1 {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        Ok(HeckeParamsG1 { r: raw.k.len() + 1, h: raw.h, k: raw.k })
    }
}

impl From<HeckeParamsG1> for RawParams {
    fn from(p: HeckeParamsG1) -> Self {
        RawParams { h: p.h, k: p.k }
    }
}

/// Which branch of the residue case split a parameter set uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidueRegime {
    Circle,
    PairQ1,
    Bare,
}

impl HeckeParamsG1 {
    /// `k` holds `k_1..k_{r−1}`; its length must be `r − 1`.
    pub fn new(r: usize, h: Rational, k: Vec<Rational>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParams("r must be positive".into()));
        }
        if k.len() != r - 1 {
            return Err(Error::InvalidParams(format!("expected {} k-values for r = {r}, got {}", r - 1, k.len())));
        }
        Ok(HeckeParamsG1 { r, h, k })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn h(&self) -> Rational {
        self.h
    }

    /// `k_1..k_{r−1}`.
    pub fn k(&self) -> &[Rational] {
        &self.k
    }

    /// `k_m` with `k_0 = 0`.
    pub fn k_at(&self, m: usize) -> Rational {
        if m == 0 {
            Rational::zero()
        } else {
            self.k[m - 1]
        }
    }

    pub fn q_angle(&self) -> RationalAngle {
        RationalAngle::new(self.h)
    }

    /// Angle of `Q_m`, `m = 0..r−1`.
    pub fn big_q_angle(&self, m: usize) -> RationalAngle {
        RationalAngle::new(self.k_at(m) + Rational::new(m as i64, self.r as i64))
    }

    pub fn big_q_angles(&self) -> Vec<RationalAngle> {
        (0..self.r).map(|m| self.big_q_angle(m)).collect()
    }

    pub fn regime(&self) -> ResidueRegime {
        if !self.q_angle().is_zero() {
            return ResidueRegime::Circle;
        }
        let mut qs = self.big_q_angles();
        qs.sort();
        if qs.windows(2).all(|w| w[0] != w[1]) {
            ResidueRegime::PairQ1
        } else {
            ResidueRegime::Bare
        }
    }
}

/// The residue of a node, one variant per branch of the case split.
///
/// Variant order (`Circle < PairQ1 < Bare`) followed by field order is the
/// canonical order used for residue contents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum ResidueValue {
    /// `q^{j−i} Q_{k−1}` when `q ≠ 1`.
    Circle { angle: RationalAngle },
    /// `(j − i, Q_{k−1})` when `q = 1` and the `Q`'s are pairwise distinct.
    PairQ1 { diag: i64, q_angle: RationalAngle },
    /// `Q_{k−1}` otherwise.
    Bare { q_angle: RationalAngle },
}

impl ResidueValue {
    /// The angle carrying the `Q`-coordinate (for `Circle`, the whole angle).
    pub fn angle(&self) -> RationalAngle {
        match *self {
            ResidueValue::Circle { angle } => angle,
            ResidueValue::PairQ1 { q_angle, .. } | ResidueValue::Bare { q_angle } => q_angle,
        }
    }

    /// Adds `t` to the angle coordinate, keeping any diagonal index.
    pub fn rotate(&self, t: RationalAngle) -> ResidueValue {
        match *self {
            ResidueValue::Circle { angle } => ResidueValue::Circle { angle: angle + t },
            ResidueValue::PairQ1 { diag, q_angle } => ResidueValue::PairQ1 { diag, q_angle: q_angle + t },
            ResidueValue::Bare { q_angle } => ResidueValue::Bare { q_angle: q_angle + t },
        }
    }
}

fn residue_in(x: &Node, params: &HeckeParamsG1, regime: ResidueRegime) -> ResidueValue {
    let q_k = params.big_q_angle(x.comp as usize - 1);
    match regime {
        ResidueRegime::Circle => {
            let angle = RationalAngle::new(params.h * x.content()) + q_k;
            ResidueValue::Circle { angle }
        }
        ResidueRegime::PairQ1 => ResidueValue::PairQ1 { diag: x.content(), q_angle: q_k },
        ResidueRegime::Bare => ResidueValue::Bare { q_angle: q_k },
    }
}

/// Residue of node `x`.
///
/// # Panics
///
/// If `x.comp` is not in `1..=r`.
pub fn residue(x: &Node, params: &HeckeParamsG1) -> ResidueValue {
    assert!(
        x.comp >= 1 && x.comp as usize <= params.r,
        "node component {} out of range 1..={}",
        x.comp,
        params.r
    );
    residue_in(x, params, params.regime())
}

/// Multiset of residues, as a sorted map from residue to positive count.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueContent(BTreeMap<ResidueValue, usize>);

impl ResidueContent {
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn count(&self, a: &ResidueValue) -> usize {
        self.0.get(a).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ResidueValue, &usize)> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rotates every residue's angle coordinate by `t`.
    pub fn rotate(&self, t: RationalAngle) -> ResidueContent {
        let mut out = BTreeMap::new();
        for (a, &c) in &self.0 {
            *out.entry(a.rotate(t)).or_insert(0) += c;
        }
        ResidueContent(out)
    }
}

impl FromIterator<ResidueValue> for ResidueContent {
    fn from_iter<I: IntoIterator<Item = ResidueValue>>(iter: I) -> Self {
        let mut map = BTreeMap::new();
        for a in iter {
            *map.entry(a).or_insert(0) += 1;
        }
        ResidueContent(map)
    }
}

/// The multiset `{res(x) : x ∈ [λ]}`.
pub fn residue_content(lambda: &Multipartition, params: &HeckeParamsG1) -> ResidueContent {
    assert_eq!(lambda.rank(), params.r, "multipartition rank does not match parameters");
    let regime = params.regime();
    diagram(lambda).iter().map(|x| residue_in(x, params, regime)).collect()
}

/// `λ ∼_R μ`: equal residue contents. Inputs must have equal rank and size.
pub fn residue_equivalent(lambda: &Multipartition, mu: &Multipartition, params: &HeckeParamsG1) -> Result<bool> {
    check_same_shape(lambda, mu)?;
    if lambda.rank() != params.r {
        return Err(Error::RankMismatch { left: lambda.rank(), right: params.r });
    }
    Ok(residue_content(lambda, params) == residue_content(mu, params))
}

pub(crate) fn check_same_shape(lambda: &Multipartition, mu: &Multipartition) -> Result<()> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch { left: lambda.rank(), right: mu.rank() });
    }
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    Ok(())
}

fn is_prime(m: i64) -> bool {
    m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| m % d != 0)
}

/// Parameters whose residues only collide when forced.
///
/// `h = 1/P_0` and `k_m = 1/P_m` with `P_0 < P_1 < …` the smallest primes
/// exceeding `2nr`. Two nodes then share a residue only if they sit in the
/// same component on the same diagonal, so the residue content determines
/// the multipartition.
pub fn generic_params(n: usize, r: usize) -> HeckeParamsG1 {
    assert!(r >= 1, "rank must be positive");
    let bound = (2 * n.max(1) * r) as i64;
    let primes: Vec<i64> = (bound + 1..).filter(|&m| is_prime(m)).take(r).collect();
    let h = Rational::new(1, primes[0]);
    let k = primes[1..].iter().map(|&p| Rational::new(1, p)).collect();
    HeckeParamsG1::new(r, h, k).expect("r - 1 k-values by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::{e_core, enumerate_multipartitions};

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::from_parts(parts.iter().map(|p| p.to_vec())).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn circle(n: i64, d: i64) -> ResidueValue {
        ResidueValue::Circle { angle: RationalAngle::from_ratio(n, d) }
    }

    #[test]
    fn residue_examples() {
        let p = HeckeParamsG1::new(1, rat(1, 2), vec![]).unwrap();
        assert_eq!(residue(&Node::new(1, 2, 1), &p), circle(1, 2));

        let p = HeckeParamsG1::new(3, rat(2, 7), vec![rat(1, 5), rat(-1, 4)]).unwrap();
        for k in 1..=3 {
            assert_eq!(
                residue(&Node::new(1, 1, k), &p),
                ResidueValue::Circle { angle: p.big_q_angle(k as usize - 1) }
            );
        }

        let p = HeckeParamsG1::new(2, rat(0, 1), vec![rat(1, 3)]).unwrap();
        assert_eq!(p.regime(), ResidueRegime::PairQ1);
        assert_eq!(
            residue(&Node::new(2, 1, 1), &p),
            ResidueValue::PairQ1 { diag: -1, q_angle: RationalAngle::zero() }
        );
    }

    #[test]
    fn bare_regime_when_q_is_one_and_qs_collide() {
        // Q_1 = exp(2π√−1(1/2 + 1/2)) = 1 = Q_0
        let p = HeckeParamsG1::new(2, rat(3, 1), vec![rat(1, 2)]).unwrap();
        assert_eq!(p.regime(), ResidueRegime::Bare);
        assert_eq!(
            residue(&Node::new(3, 1, 2), &p),
            ResidueValue::Bare { q_angle: RationalAngle::zero() }
        );
    }

    #[test]
    fn content_examples() {
        let p = HeckeParamsG1::new(1, rat(1, 2), vec![]).unwrap();
        assert!(residue_content(&mp(&[&[]]), &p).is_empty());
        let expect: ResidueContent = [circle(0, 1), circle(1, 2)].into_iter().collect();
        assert_eq!(residue_content(&mp(&[&[2]]), &p), expect);
        assert_eq!(residue_content(&mp(&[&[1, 1]]), &p), expect);
        assert_eq!(expect.total(), 2);
        assert_eq!(expect.count(&circle(1, 2)), 1);
    }

    #[test]
    fn equivalence_examples() {
        let half = HeckeParamsG1::new(1, rat(1, 2), vec![]).unwrap();
        let fine = HeckeParamsG1::new(1, rat(1, 101), vec![]).unwrap();
        let a = mp(&[&[2]]);
        let b = mp(&[&[1, 1]]);
        assert!(residue_equivalent(&a, &b, &half).unwrap());
        assert!(!residue_equivalent(&a, &b, &fine).unwrap());
        assert!(residue_equivalent(&a, &a, &fine).unwrap());
        assert_eq!(
            residue_equivalent(&a, &mp(&[&[1]]), &half),
            Err(Error::SizeMismatch { left: 2, right: 1 })
        );
        assert!(matches!(residue_equivalent(&a, &mp(&[&[2], &[]]), &half), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn generic_params_examples() {
        assert_eq!(generic_params(2, 1).h(), rat(1, 5));
        assert_eq!(generic_params(3, 1).h(), rat(1, 7));
        let g = generic_params(2, 2);
        assert_eq!((g.h(), g.k().to_vec()), (rat(1, 11), vec![rat(1, 13)]));
        assert_eq!(g.regime(), ResidueRegime::Circle);
    }

    #[test]
    fn generic_params_separate_everything() {
        for r in 1..=3 {
            for n in 0..=5 {
                let g = generic_params(n, r);
                let all = enumerate_multipartitions(n, r);
                let contents: std::collections::BTreeSet<_> = all.iter().map(|l| residue_content(l, &g)).collect();
                assert_eq!(contents.len(), all.len(), "n={n} r={r}");
            }
        }
    }

    fn sample_params() -> Vec<HeckeParamsG1> {
        let angles = [rat(0, 1), rat(1, 2), rat(1, 3), rat(2, 3), rat(1, 4)];
        let mut out = Vec::new();
        for &h in &angles {
            out.push(HeckeParamsG1::new(1, h, vec![]).unwrap());
            for &k in &angles {
                out.push(HeckeParamsG1::new(2, h, vec![k]).unwrap());
            }
        }
        out.push(HeckeParamsG1::new(3, rat(1, 2), vec![rat(1, 6), rat(1, 3)]).unwrap());
        out.push(HeckeParamsG1::new(3, rat(0, 1), vec![rat(2, 3), rat(1, 3)]).unwrap());
        out
    }

    #[test]
    fn residue_equivalence_is_an_equivalence_relation() {
        for p in sample_params() {
            for n in 0..=4 {
                let all = enumerate_multipartitions(n, p.r());
                let eq = |a: &Multipartition, b: &Multipartition| residue_equivalent(a, b, &p).unwrap();
                for a in &all {
                    assert!(eq(a, a));
                    for b in &all {
                        assert_eq!(eq(a, b), eq(b, a));
                        if !eq(a, b) {
                            continue;
                        }
                        for c in &all {
                            if eq(b, c) {
                                assert!(eq(a, c), "{a} {b} {c} under {p:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn regime_is_uniform_across_nodes() {
        for p in sample_params() {
            for lambda in enumerate_multipartitions(4, p.r()) {
                for x in diagram(&lambda) {
                    let v = residue(&x, &p);
                    let variant = match v {
                        ResidueValue::Circle { .. } => ResidueRegime::Circle,
                        ResidueValue::PairQ1 { .. } => ResidueRegime::PairQ1,
                        ResidueValue::Bare { .. } => ResidueRegime::Bare,
                    };
                    assert_eq!(variant, p.regime());
                }
            }
        }
    }

    #[test]
    fn column_step_is_h() {
        let p = HeckeParamsG1::new(2, rat(2, 9), vec![rat(1, 7)]).unwrap();
        for k in 1..=2 {
            for i in 1..5 {
                for j in 1..5 {
                    let upper = residue(&Node::new(i, j, k), &p).angle();
                    let lower = residue(&Node::new(i + 1, j, k), &p).angle();
                    assert_eq!(upper - lower, p.q_angle());
                }
            }
        }
    }

    #[test]
    fn level_one_classes_are_e_core_classes() {
        for e in [2i64, 3] {
            let p = HeckeParamsG1::new(1, rat(1, e), vec![]).unwrap();
            for n in 0..=6 {
                let all = enumerate_multipartitions(n, 1);
                for a in &all {
                    for b in &all {
                        let same_core = e_core(a.component(1), e as usize) == e_core(b.component(1), e as usize);
                        assert_eq!(residue_equivalent(a, b, &p).unwrap(), same_core, "{a} {b} e={e}");
                    }
                }
            }
        }
    }
}
