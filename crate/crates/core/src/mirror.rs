//! Mirror extensions. Given a normal subnet context and the spectrum
//! `ρ = Σ m_λ [λ]` of an extension of SU(N)_K supported on the exp set, the
//! mirror extension of the coset has spectrum `Σ m_λ [(1,λ)]`.
//!
//! For the level-rank context the labels `(1,λ)` are SU(M)_N weights and the
//! index is recomputed there. For diagonal cosets
//! `SU(N)_K ⊂ SU(N)_{K₁} × … × SU(N)_{K_l}` the labels are formal pairs
//! carrying `h ≡ −h_λ (mod 1)` and the coset central charge; the index is
//! carried over from the A side and flagged as such.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::levelrank::{exp_set_levelrank, verify_mirror_conjugation, ExpSet, LevelRankContext};
use crate::modular::{fusion_coefficient, quantum_dimension, BuildOptions, ModularData};
use crate::report::Report;
use crate::weights::{alcove_weights, central_charge, AffineWeight, WeightSet};
use crate::{frac, Error, Rational, Result, Spectrum};

/// Index comparisons across the mirror.
pub const INDEX_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubnetKind {
    LevelRank { n: u32, m: u32 },
    Diagonal { n: u32, levels: Vec<u32> },
}

/// Exp set of the diagonal coset `SU(N)_K ⊂ Π SU(N)_{K_i}`, `K = Σ K_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalExpSet {
    ambient: WeightSet,
    levels: Vec<u32>,
    members: Vec<AffineWeight>,
    coset_c: Rational,
    partner_h: Vec<Rational>,
}

impl DiagonalExpSet {
    pub fn new(n: u32, levels: &[u32]) -> Result<Self> {
        if levels.len() < 2 {
            return Err(Error::invalid("a diagonal coset needs at least two factor levels"));
        }
        if levels.contains(&0) {
            return Err(Error::invalid("factor levels must be positive"));
        }
        let k: u32 = levels.iter().sum();
        let ambient = alcove_weights(n, k)?;
        // One step per extra factor: SU(N)_{K_1+…+K_j} ⊂ SU(N)_{K_1+…+K_{j−1}} × SU(N)_{K_j}.
        let mut coset_c = Rational::from_integer(0);
        let mut acc = levels[0];
        for &kj in &levels[1..] {
            coset_c += central_charge(n, acc) + central_charge(n, kj) - central_charge(n, acc + kj);
            acc += kj;
        }
        let members: Vec<AffineWeight> = ambient.iter().filter(|w| w.in_root_lattice()).cloned().collect();
        let partner_h = members.iter().map(|w| frac(-w.conformal_weight().exact)).collect();
        Ok(DiagonalExpSet {
            ambient,
            levels: levels.to_vec(),
            members,
            coset_c,
            partner_h,
        })
    }

    pub fn rank(&self) -> u32 {
        self.ambient.rank()
    }

    pub fn level(&self) -> u32 {
        self.ambient.level()
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn ambient(&self) -> &WeightSet {
        &self.ambient
    }

    pub fn members(&self) -> &[AffineWeight] {
        &self.members
    }

    pub fn contains(&self, w: &AffineWeight) -> bool {
        self.members.binary_search(w).is_ok()
    }

    pub fn coset_central_charge(&self) -> Rational {
        self.coset_c
    }

    /// `h((1,λ)) mod 1` for a member `λ`.
    pub fn partner_h_mod1(&self, w: &AffineWeight) -> Option<Rational> {
        let i = self.members.binary_search(w).ok()?;
        Some(self.partner_h[i])
    }
}

#[derive(Debug, Clone)]
enum ExpData {
    LevelRank(ExpSet),
    Diagonal(DiagonalExpSet),
}

/// A normal subnet `A ⊂ B` of SU(N)_K with its exp set.
#[derive(Debug, Clone)]
pub struct NormalSubnetSpec {
    kind: SubnetKind,
    exp: ExpData,
}

impl NormalSubnetSpec {
    pub fn level_rank(n: u32, m: u32) -> Result<Self> {
        Ok(NormalSubnetSpec {
            kind: SubnetKind::LevelRank { n, m },
            exp: ExpData::LevelRank(exp_set_levelrank(n, m)?),
        })
    }

    pub fn diagonal(n: u32, levels: &[u32]) -> Result<Self> {
        Ok(NormalSubnetSpec {
            kind: SubnetKind::Diagonal {
                n,
                levels: levels.to_vec(),
            },
            exp: ExpData::Diagonal(DiagonalExpSet::new(n, levels)?),
        })
    }

    pub fn kind(&self) -> &SubnetKind {
        &self.kind
    }

    /// `(N, K)` of the A side.
    pub fn a_side(&self) -> (u32, u32) {
        match &self.exp {
            ExpData::LevelRank(e) => (e.rank(), e.level()),
            ExpData::Diagonal(d) => (d.rank(), d.level()),
        }
    }

    pub fn contains(&self, w: &AffineWeight) -> bool {
        match &self.exp {
            ExpData::LevelRank(e) => e.contains(w),
            ExpData::Diagonal(d) => d.contains(w),
        }
    }

    pub fn exp_members(&self) -> &[AffineWeight] {
        match &self.exp {
            ExpData::LevelRank(e) => e.members(),
            ExpData::Diagonal(d) => d.members(),
        }
    }

    pub fn level_rank_exp(&self) -> Option<&ExpSet> {
        match &self.exp {
            ExpData::LevelRank(e) => Some(e),
            ExpData::Diagonal(_) => None,
        }
    }

    pub fn diagonal_exp(&self) -> Option<&DiagonalExpSet> {
        match &self.exp {
            ExpData::Diagonal(d) => Some(d),
            ExpData::LevelRank(_) => None,
        }
    }

    /// The context with the roles of the two factors exchanged (level-rank only).
    pub fn swapped(&self) -> Option<Result<Self>> {
        match self.kind {
            SubnetKind::LevelRank { n, m } => Some(Self::level_rank(m, n)),
            SubnetKind::Diagonal { .. } => None,
        }
    }
}

/// Formal coset sector `(1, λ)`: the tensor product of factor vacua paired with `λ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CosetLabel {
    pub levels: Vec<u32>,
    pub weight: AffineWeight,
    pub h_mod1: Rational,
}

impl fmt::Display for CosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.weight.labels() {
            [x] => write!(f, "(1,{x})"),
            labels => write!(f, "(1,{labels:?})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum MirrorLabel {
    Weight(AffineWeight),
    Coset(CosetLabel),
}

impl fmt::Display for MirrorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MirrorLabel::Weight(w) => write!(f, "L({w})"),
            MirrorLabel::Coset(c) => c.fmt(f),
        }
    }
}

#[derive(Debug, Clone)]
pub struct MirrorSpectrum {
    pub context: NormalSubnetSpec,
    /// `(1,λ)` with multiplicity `m_λ`, in the canonical order of `λ`.
    pub entries: Vec<(MirrorLabel, u32)>,
    pub index: f64,
    /// The index was carried over from the A side rather than recomputed.
    pub index_assumed: bool,
    pub source_index: f64,
    pub source: Spectrum,
    pub warnings: Vec<String>,
}

impl MirrorSpectrum {
    /// The mirror as an SU(M)_N spectrum (level-rank context only).
    pub fn as_spectrum(&self) -> Option<Spectrum> {
        let SubnetKind::LevelRank { n, m } = self.context.kind else {
            return None;
        };
        let mut s = Spectrum::new(m, n);
        for (label, mult) in &self.entries {
            if let MirrorLabel::Weight(w) = label {
                s.add(w.clone(), *mult).ok()?;
            }
        }
        Some(s)
    }

    pub fn coset_central_charge(&self) -> Option<Rational> {
        self.context.diagonal_exp().map(DiagonalExpSet::coset_central_charge)
    }
}

impl fmt::Display for MirrorSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (label, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

/// `Σ m_λ d_λ` with `d` from the S matrix.
pub fn extension_index(rho: &Spectrum, md: &ModularData) -> Result<f64> {
    rho.iter()
        .map(|(w, m)| {
            md.index_of(w)
                .map(|i| f64::from(m) * md.dim(i))
                .ok_or_else(|| Error::invalid(format!("{w:?} is not in the SU({})_{} alcove", md.rank(), md.level())))
        })
        .sum()
}

/// `Σ m_λ d_λ` with `d` from the Weyl product formula.
pub fn extension_index_from_weights(rho: &Spectrum) -> f64 {
    rho.iter().map(|(w, m)| f64::from(m) * quantum_dimension(w)).sum()
}

fn check_hypotheses(spec: &NormalSubnetSpec, rho: &Spectrum) -> Result<()> {
    let (n, k) = spec.a_side();
    if rho.rank() != n || rho.level() != k {
        return Err(Error::invalid(format!(
            "spectrum lives on SU({})_{} but the context needs SU({n})_{k}",
            rho.rank(),
            rho.level()
        )));
    }
    if let Some(w) = rho.support().find(|w| !spec.contains(w)) {
        return Err(Error::HypothesisViolation(format!(
            "{w:?} = {w} is not in the exp set (box count {} is not divisible by {n})",
            w.box_count()
        )));
    }
    if let Some((w, m, mc)) = rho.conjugation_asymmetry() {
        return Err(Error::HypothesisViolation(format!(
            "m({w:?}) = {m} differs from its conjugate's multiplicity {mc}"
        )));
    }
    if rho.vacuum_mult() != 1 {
        return Err(Error::Irreducibility(format!(
            "vacuum multiplicity is {}, not 1",
            rho.vacuum_mult()
        )));
    }
    Ok(())
}

pub fn mirror_extension(spec: &NormalSubnetSpec, rho: &Spectrum) -> Result<MirrorSpectrum> {
    check_hypotheses(spec, rho)?;
    let source_index = extension_index_from_weights(rho);
    let mut entries = Vec::with_capacity(rho.len());
    let mut warnings = Vec::new();
    let (index, index_assumed) = match &spec.exp {
        ExpData::LevelRank(e) => {
            let mut index = 0.0;
            for (w, m) in rho.iter() {
                let p = e.partner(w).expect("member of exp").clone();
                index += f64::from(m) * quantum_dimension(&p);
                entries.push((MirrorLabel::Weight(p), m));
            }
            (index, false)
        }
        ExpData::Diagonal(d) => {
            for (w, m) in rho.iter() {
                let label = CosetLabel {
                    levels: d.levels().to_vec(),
                    weight: w.clone(),
                    h_mod1: d.partner_h_mod1(w).expect("member of exp"),
                };
                entries.push((MirrorLabel::Coset(label), m));
            }
            (source_index, true)
        }
    };
    let mut labels: Vec<&MirrorLabel> = entries.iter().map(|(l, _)| l).collect();
    labels.sort();
    if labels.windows(2).any(|p| p[0] == p[1]) {
        warnings.push(String::from("the same mirror label was produced twice"));
    }
    Ok(MirrorSpectrum {
        context: spec.clone(),
        entries,
        index,
        index_assumed,
        source_index,
        source: rho.clone(),
        warnings,
    })
}

/// Unitary minimal model parameter `m` with `c = 1 − 6/(m(m+1))`, if any.
pub fn minimal_model_parameter(c: Rational) -> Option<u32> {
    let one = Rational::from_integer(1);
    if c >= one || c <= Rational::from_integer(0) {
        return None;
    }
    let q = Rational::from_integer(6) / (one - c);
    if !q.is_integer() {
        return None;
    }
    let p = q.to_integer();
    let m = (libm::sqrt(p as f64) as i64).max(1);
    (m - 1..=m + 1).find(|&m| m >= 2 && m * (m + 1) == p).map(|m| m as u32)
}

/// `h_{r,s} = ((r(m+1) − s·m)² − 1) / (4m(m+1))`.
pub fn kac_weight(m: u32, r: u32, s: u32) -> Rational {
    let (m, r, s) = (i64::from(m), i64::from(r), i64::from(s));
    let x = r * (m + 1) - s * m;
    Rational::new(x * x - 1, 4 * m * (m + 1))
}

/// First `(r, s)` of the Kac table with `h_{r,s} ≡ h (mod 1)`.
pub fn kac_match(m: u32, h: Rational) -> Option<(u32, u32, Rational)> {
    let target = frac(h);
    for r in 1..m {
        for s in 1..=m {
            let k = kac_weight(m, r, s);
            if frac(k) == target {
                return Some((r, s, k));
            }
        }
    }
    None
}

/// Kac entry of `(1, λ)` for `SU(2)_K ⊂ SU(2)_1 × SU(2)_{K−1}`: the factor
/// vacuum gives `r = 1` and `λ` gives `s = λ₁ + 1`, with `m = K + 1`.
pub fn coset_kac_entry(d: &DiagonalExpSet, w: &AffineWeight) -> Option<(u32, u32)> {
    let mut levels = d.levels().to_vec();
    levels.sort_unstable();
    (d.rank() == 2 && levels.len() == 2 && levels[0] == 1).then(|| (1, w.labels()[0] + 1))
}

/// Hypotheses, index across the mirror, h-integrality of the pairs, and
/// either the ring isomorphism restricted to the support (level-rank) or the
/// coset central charge and Kac-table congruences (diagonal).
pub fn mirror_report(spec: &NormalSubnetSpec, rho: &Spectrum, opts: &BuildOptions) -> Result<Report> {
    let mirror = mirror_extension(spec, rho)?;
    let mut r = Report::new();
    r.push("support_in_exp", true, format!("{} weights in exp", rho.len()));
    r.push("conjugation_symmetric", true, "m_λ = m_λ̄");
    r.push("vacuum_multiplicity", true, "m_0 = 1");
    r.push(
        "single_labels",
        mirror.warnings.is_empty(),
        if mirror.warnings.is_empty() {
            String::from("every mirror label occurs once")
        } else {
            mirror.warnings.join("; ")
        },
    );
    match &spec.exp {
        ExpData::LevelRank(_) => {
            let ctx = LevelRankContext::new(spec.a_side().0, spec.a_side().1, opts)?;
            let a_idx = extension_index(rho, &ctx.a_side)?;
            let mirror_spec = mirror.as_spectrum().expect("level-rank mirror");
            let b_idx = extension_index(&mirror_spec, &ctx.b_side)?;
            r.push(
                "index_preserved",
                (a_idx - b_idx).abs() < INDEX_TOL,
                format!("ind = {a_idx:.10} on SU(N)_M, {b_idx:.10} on SU(M)_N"),
            );
            let bad: Vec<String> = rho
                .support()
                .zip(mirror_spec.support())
                .filter_map(|(w, _)| {
                    let p = ctx.exp.partner(w)?;
                    let s = w.conformal_weight().exact + p.conformal_weight().exact;
                    (!s.is_integer()).then(|| format!("{w:?}"))
                })
                .collect();
            r.push(
                "pair_h_integral",
                bad.is_empty(),
                if bad.is_empty() {
                    String::from("h(λ) + h(λ̃) ∈ ℤ on the support")
                } else {
                    bad.join(", ")
                },
            );
            r.extend(support_ring_isomorphism(&ctx, rho)?);
            let conj = verify_mirror_conjugation(&ctx);
            r.extend(conj);
        }
        ExpData::Diagonal(d) => {
            r.push(
                "index_preserved",
                true,
                format!("ind = {:.10}, carried to the coset side (assumed preserved)", mirror.index),
            );
            let c = d.coset_central_charge();
            r.push(
                "coset_central_charge",
                c > Rational::from_integer(0),
                format!("c = {c}"),
            );
            let bad: Vec<String> = mirror
                .entries
                .iter()
                .filter_map(|(l, _)| match l {
                    MirrorLabel::Coset(cl) => {
                        let s = cl.h_mod1 + cl.weight.conformal_weight().exact;
                        (!s.is_integer()).then(|| format!("{cl}"))
                    }
                    MirrorLabel::Weight(_) => None,
                })
                .collect();
            r.push(
                "pair_h_integral",
                bad.is_empty(),
                if bad.is_empty() {
                    String::from("h((1,λ)) + h(λ) ∈ ℤ on the support")
                } else {
                    bad.join(", ")
                },
            );
            if let Some(m) = minimal_model_parameter(c) {
                let mut details = Vec::new();
                let mut all = true;
                for (l, _) in &mirror.entries {
                    if let MirrorLabel::Coset(cl) = l {
                        let entry = match coset_kac_entry(d, &cl.weight) {
                            Some((rr, ss)) => {
                                let k = kac_weight(m, rr, ss);
                                (frac(k) == cl.h_mod1).then_some((rr, ss, k))
                            }
                            None => kac_match(m, cl.h_mod1),
                        };
                        match entry {
                            Some((rr, ss, k)) => details.push(format!("{cl}: h ≡ h_({rr},{ss}) = {k}")),
                            None => {
                                all = false;
                                details.push(format!("{cl}: h ≡ {} matches no Kac entry", cl.h_mod1));
                            }
                        }
                    }
                }
                r.push(
                    "kac_table",
                    all,
                    format!("c = 1 − 6/({m}·{}); {}", m + 1, details.join("; ")),
                );
            }
        }
    }
    Ok(r)
}

/// Fusion closure and coefficient matching for `λ, μ` in the support of `ρ`
/// and `ν` over the whole exp set.
fn support_ring_isomorphism(ctx: &LevelRankContext, rho: &Spectrum) -> Result<Report> {
    let idx = |w: &AffineWeight| -> (usize, usize) {
        let p = ctx.exp.partner(w).expect("member of exp");
        (ctx.a_side.index_of(w).unwrap(), ctx.b_side.index_of(p).unwrap())
    };
    let support: Vec<(usize, usize)> = rho.support().map(idx).collect();
    let exp: Vec<(usize, usize)> = ctx.exp.members().iter().map(idx).collect();
    let mut in_exp = vec![false; ctx.a_side.len()];
    for &(a, _) in &exp {
        in_exp[a] = true;
    }
    let mut mismatches = 0usize;
    let mut outside = 0usize;
    let mut checked = 0usize;
    for &(a, pa) in &support {
        for &(b, pb) in &support {
            for (c, &member) in in_exp.iter().enumerate() {
                if !member && fusion_coefficient(&ctx.a_side, a, b, c)? != 0 {
                    outside += 1;
                }
            }
            for &(c, pc) in &exp {
                checked += 1;
                if fusion_coefficient(&ctx.a_side, a, b, c)? != fusion_coefficient(&ctx.b_side, pa, pb, pc)? {
                    mismatches += 1;
                }
            }
        }
    }
    let mut r = Report::new();
    r.push(
        "support_fusion_closed",
        outside == 0,
        format!("{outside} products leave exp"),
    );
    r.push(
        "support_ring_isomorphism",
        mismatches == 0,
        format!("{checked} coefficients compared, {mismatches} differ"),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su2_10(labels: &[u32]) -> Spectrum {
        Spectrum::from_labels(2, 10, labels.iter().map(|&l| (vec![l], 1))).unwrap()
    }

    #[test]
    fn spin5_mirror_in_su10_level2() {
        let spec = NormalSubnetSpec::level_rank(2, 10).unwrap();
        let m = mirror_extension(&spec, &su2_10(&[0, 6])).unwrap();
        let s = m.as_spectrum().unwrap();
        assert_eq!(format!("{s}"), "L(2Λ0) + L(Λ3+Λ7)");
        assert!((m.index - (3.0 + libm::sqrt(3.0))).abs() < INDEX_TOL);
        assert!((m.source_index - m.index).abs() < INDEX_TOL);
        assert!(!m.index_assumed);
    }

    #[test]
    fn vacuum_only_mirror() {
        for spec in [
            NormalSubnetSpec::level_rank(3, 4).unwrap(),
            NormalSubnetSpec::diagonal(3, &[2, 2]).unwrap(),
        ] {
            let (n, k) = spec.a_side();
            let m = mirror_extension(&spec, &Spectrum::vacuum(n, k).unwrap()).unwrap();
            assert_eq!(m.entries.len(), 1);
            assert!((m.index - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn diagonal_a10_e6() {
        let spec = NormalSubnetSpec::diagonal(2, &[1, 9]).unwrap();
        let m = mirror_extension(&spec, &su2_10(&[0, 6])).unwrap();
        assert_eq!(m.coset_central_charge(), Some(Rational::new(21, 22)));
        assert_eq!(format!("{m}"), "(1,0) + (1,6)");
        for (l, _) in &m.entries {
            let MirrorLabel::Coset(c) = l else { panic!() };
            assert_eq!(c.h_mod1, Rational::from_integer(0));
        }
        assert!(m.index_assumed);
        assert_eq!(minimal_model_parameter(Rational::new(21, 22)), Some(11));
        assert_eq!(kac_weight(11, 1, 7), Rational::from_integer(8));
        let r = mirror_report(&spec, &su2_10(&[0, 6]), &BuildOptions::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.get("kac_table").unwrap().detail.contains("(1,6): h ≡ h_(1,7) = 8"));
    }

    #[test]
    fn diagonal_a28_e8_central_charge() {
        let d = DiagonalExpSet::new(2, &[1, 27]).unwrap();
        assert_eq!(d.coset_central_charge(), Rational::new(144, 145));
        assert_eq!(minimal_model_parameter(d.coset_central_charge()), Some(29));
        // Three factors iterate the two-factor step.
        let three = DiagonalExpSet::new(2, &[1, 1, 8]).unwrap();
        let expect = central_charge(2, 1) * Rational::from_integer(2) + central_charge(2, 8)
            - central_charge(2, 10);
        assert_eq!(three.coset_central_charge(), expect);
        assert!(DiagonalExpSet::new(2, &[10]).is_err());
        assert!(DiagonalExpSet::new(2, &[0, 10]).is_err());
    }

    #[test]
    fn hypothesis_errors() {
        let spec = NormalSubnetSpec::level_rank(2, 10).unwrap();
        let err = mirror_extension(&spec, &su2_10(&[0, 3])).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolation(ref s) if s.contains("[3]")), "{err}");
        let no_vac = su2_10(&[6]);
        assert!(matches!(mirror_extension(&spec, &no_vac), Err(Error::Irreducibility(_))));
        let doubled = Spectrum::from_labels(2, 10, [(vec![0], 2)]).unwrap();
        assert!(matches!(mirror_extension(&spec, &doubled), Err(Error::Irreducibility(_))));
        let asym = Spectrum::from_labels(3, 3, [(vec![0, 0], 1), (vec![3, 0], 1)]).unwrap();
        let spec3 = NormalSubnetSpec::level_rank(3, 3).unwrap();
        assert!(matches!(mirror_extension(&spec3, &asym), Err(Error::HypothesisViolation(_))));
        assert!(matches!(mirror_extension(&spec3, &su2_10(&[0])), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn mirror_of_mirror() {
        let spec = NormalSubnetSpec::level_rank(2, 10).unwrap();
        let back_spec = spec.swapped().unwrap().unwrap();
        for rho in [su2_10(&[0, 6]), su2_10(&[0, 4, 6, 10]), su2_10(&[0, 2, 8])] {
            let m = mirror_extension(&spec, &rho).unwrap();
            let back = mirror_extension(&back_spec, &m.as_spectrum().unwrap()).unwrap();
            assert_eq!(back.as_spectrum().unwrap(), rho);
        }
    }

    #[test]
    fn spin5_report_passes() {
        let spec = NormalSubnetSpec::level_rank(2, 10).unwrap();
        let r = mirror_report(&spec, &su2_10(&[0, 6]), &BuildOptions::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.get("hopf_conjugation").is_some());
    }
}
