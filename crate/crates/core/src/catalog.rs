//! Conformal inclusions SU(N)_K ⊂ H₁ with H₁ at level one: the six
//! exceptional cases, three infinite series instantiated up to a sector cap,
//! and the level-rank series which is handled by [`crate::levelrank`].
//!
//! Vacuum spectra are obtained by [`branching_search`] unless given
//! explicitly; either way a record is only served after validation.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::level1::Level1Algebra;
use crate::modinv::{
    branching_residual, branching_search, invariant_from_branching, verify_invariant,
    weight_one_dimension, COMMUTATION_TOL, DEFAULT_ENTRY_BOUND,
};
use crate::modular::{
    build_modular_data_with, global_dimension_from_weights, quantum_dimension, BuildOptions,
    ModularData,
};
use crate::report::Report;
use crate::weights::{alcove_size, alcove_weights, central_charge, AffineWeight};
use crate::{Error, Result, Spectrum};

/// Series instances are generated while the A-side alcove stays below this.
pub const SERIES_SECTOR_CAP: u128 = 500;
/// Tolerance for `μ_A / ind² = μ_H`.
pub const MU_RELATION_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    PaperGiven,
    SearchDerived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::PaperGiven => "paper-given",
            Provenance::SearchDerived => "search-derived",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "paper-given" => Ok(Provenance::PaperGiven),
            "search-derived" => Ok(Provenance::SearchDerived),
            _ => Err(Error::invalid(format!("unknown provenance {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Exceptional,
    /// SU(N)_{N−2} ⊂ SU(N(N−1)/2)₁, N ≥ 4.
    AntisymmetricSquare,
    /// SU(N)_{N+2} ⊂ SU(N(N+1)/2)₁.
    SymmetricSquare,
    /// SU(N)_N ⊂ Spin(N² − 1)₁.
    Adjoint,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Exceptional => "exceptional",
            Family::AntisymmetricSquare => "antisymmetric-square",
            Family::SymmetricSquare => "symmetric-square",
            Family::Adjoint => "adjoint",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "exceptional" => Ok(Family::Exceptional),
            "antisymmetric-square" => Ok(Family::AntisymmetricSquare),
            "symmetric-square" => Ok(Family::SymmetricSquare),
            "adjoint" => Ok(Family::Adjoint),
            _ => Err(Error::invalid(format!("unknown inclusion family {s:?}"))),
        }
    }

    /// A-side level for rank `n`, if `n` belongs to the series.
    pub fn level_for(self, n: u32) -> Option<u32> {
        match self {
            Family::Exceptional => None,
            Family::AntisymmetricSquare => (n >= 4).then(|| n - 2),
            Family::SymmetricSquare => (n >= 2).then(|| n + 2),
            Family::Adjoint => (n >= 2).then_some(n),
        }
    }

    pub fn target_for(self, n: u32) -> Option<Result<Level1Algebra>> {
        self.level_for(n)?;
        Some(match self {
            Family::Exceptional => return None,
            Family::AntisymmetricSquare => Level1Algebra::su(n * (n - 1) / 2),
            Family::SymmetricSquare => Level1Algebra::su(n * (n + 1) / 2),
            Family::Adjoint => Level1Algebra::spin(n * n - 1),
        })
    }
}

/// What is needed to derive a record.
#[derive(Debug, Clone, PartialEq)]
pub struct InclusionSpec {
    pub name: String,
    pub n: u32,
    pub k: u32,
    pub target: Level1Algebra,
    pub families: Vec<Family>,
    /// Vacuum spectrum stated up front; derivation must reproduce it.
    pub given_spectrum: Option<Spectrum>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InclusionRecord {
    pub name: String,
    pub n: u32,
    pub k: u32,
    pub target: Level1Algebra,
    pub families: Vec<Family>,
    /// The level K of the A side.
    pub dynkin_index: u32,
    pub vacuum_spectrum: Spectrum,
    /// Branching of every target sector, in the target's sector order.
    pub full_branching: Option<Vec<Spectrum>>,
    pub provenance: Provenance,
}

impl InclusionRecord {
    pub fn label(&self) -> String {
        format!("SU({})_{} ⊂ {}", self.n, self.k, self.target.display_name())
    }
}

/// Level-rank record `SU(N)_M × SU(M)_N ⊂ SU(NM)₁`; its vacuum branching is
/// the exp set of [`crate::levelrank::exp_set_levelrank`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LevelRankRecord {
    pub n: u32,
    pub m: u32,
}

impl LevelRankRecord {
    pub fn name(&self) -> String {
        format!("levelrank_{}_{}", self.n, self.m)
    }
}

pub fn record_name(n: u32, k: u32, target: &Level1Algebra) -> String {
    let t = target.name().trim_end_matches("_level1").to_ascii_lowercase();
    format!("su{n}_{k}_{t}")
}

fn spec(n: u32, k: u32, target: Level1Algebra, families: Vec<Family>) -> InclusionSpec {
    InclusionSpec {
        name: record_name(n, k, &target),
        n,
        k,
        target,
        families,
        given_spectrum: None,
    }
}

/// The inclusions served by the catalog, exceptional ones first.
pub fn builtin_specs() -> Result<Vec<InclusionSpec>> {
    let mut out = Vec::new();
    let mut spin5 = spec(2, 10, Level1Algebra::spin(5)?, vec![Family::Exceptional]);
    // L(0) + L(3) in spin notation, i.e. Dynkin label 6.
    spin5.given_spectrum = Some(Spectrum::from_labels(2, 10, [(vec![0], 1), (vec![6], 1)])?);
    out.push(spin5);
    out.push(spec(2, 28, Level1Algebra::g2(), vec![Family::Exceptional]));
    out.push(spec(
        3,
        5,
        Level1Algebra::su(6)?,
        vec![Family::Exceptional, Family::SymmetricSquare],
    ));
    out.push(spec(3, 9, Level1Algebra::e6(), vec![Family::Exceptional]));
    out.push(spec(3, 21, Level1Algebra::e7(), vec![Family::Exceptional]));
    out.push(spec(9, 1, Level1Algebra::e8(), vec![Family::Exceptional]));
    for family in [Family::AntisymmetricSquare, Family::SymmetricSquare, Family::Adjoint] {
        for n in 2u32.. {
            let Some(k) = family.level_for(n) else { continue };
            if alcove_size(n, k) > SERIES_SECTOR_CAP {
                break;
            }
            if out.iter().any(|s: &InclusionSpec| s.n == n && s.k == k) {
                continue;
            }
            let target = family.target_for(n).expect("n is in the series")?;
            out.push(spec(n, k, target, vec![family]));
        }
    }
    Ok(out)
}

/// Level-rank instances with both alcoves below the sector cap.
pub fn levelrank_records() -> Vec<LevelRankRecord> {
    let mut out = Vec::new();
    for n in 2..=8u32 {
        for m in 2..=30u32 {
            if alcove_size(n, m) <= SERIES_SECTOR_CAP && alcove_size(m, n) <= SERIES_SECTOR_CAP {
                out.push(LevelRankRecord { n, m });
            }
        }
    }
    out
}

/// Run the branching search for one spec. Exactly one candidate must
/// survive; a stated spectrum must agree with it.
pub fn derive_record(spec: &InclusionSpec, opts: &BuildOptions) -> Result<InclusionRecord> {
    let md = build_modular_data_with(spec.n, spec.k, opts)?;
    let mut found = branching_search(&md, &spec.target, DEFAULT_ENTRY_BOUND)?;
    if found.len() != 1 {
        return Err(Error::Search(format!(
            "{} vacuum rows fit {}; expected exactly one",
            found.len(),
            spec.name
        )));
    }
    let cand = found.swap_remove(0);
    let provenance = match &spec.given_spectrum {
        Some(given) if *given == cand.vacuum => Provenance::PaperGiven,
        Some(given) => {
            return Err(Error::Search(format!(
                "{}: search found {} but the stated spectrum is {}",
                spec.name, cand.vacuum, given
            )))
        }
        None => Provenance::SearchDerived,
    };
    Ok(InclusionRecord {
        name: spec.name.clone(),
        n: spec.n,
        k: spec.k,
        target: spec.target.clone(),
        families: spec.families.clone(),
        dynkin_index: spec.k,
        vacuum_spectrum: cand.vacuum,
        full_branching: cand.branching,
        provenance,
    })
}

/// Derive every builtin record.
pub fn builtin_inclusions(opts: &BuildOptions) -> Result<Vec<InclusionRecord>> {
    builtin_specs()?.iter().map(|s| derive_record(s, opts)).collect()
}

fn structural_checks(rec: &InclusionRecord, dims: &dyn Fn(&AffineWeight) -> f64, mu_a: f64) -> Report {
    let mut r = Report::new();
    let rho = &rec.vacuum_spectrum;
    let target = &rec.target;
    r.extend(target.verify());
    r.push(
        "alcove",
        rho.rank() == rec.n && rho.level() == rec.k && rec.dynkin_index == rec.k,
        format!("SU({})_{}, Dynkin index {}", rec.n, rec.k, rec.dynkin_index),
    );
    let ca = central_charge(rec.n, rec.k);
    r.push(
        "central_charge",
        ca == target.central_charge(),
        format!("c_A = {ca}, c_H = {}", target.central_charge()),
    );
    r.push(
        "vacuum_multiplicity",
        rho.vacuum_mult() == 1,
        format!("m_0 = {}", rho.vacuum_mult()),
    );
    let non_integral: Vec<String> = rho
        .support()
        .filter(|w| !w.conformal_weight().exact.is_integer())
        .map(|w| format!("{w:?}"))
        .collect();
    r.push(
        "integer_h",
        non_integral.is_empty(),
        if non_integral.is_empty() {
            format!("all {} members have integer h", rho.len())
        } else {
            non_integral.join(", ")
        },
    );
    r.push(
        "conjugation_symmetric",
        rho.conjugation_asymmetry().is_none(),
        match rho.conjugation_asymmetry() {
            None => String::from("m_λ = m_λ̄"),
            Some((w, m, mc)) => format!("m({w:?}) = {m} but its conjugate has {mc}"),
        },
    );
    let ind: f64 = rho.iter().map(|(w, m)| f64::from(m) * dims(w)).sum();
    let trivial = rho.is_vacuum_only();
    r.push(
        "index",
        ind.is_finite() && if trivial { (ind - 1.0).abs() < 1e-12 } else { ind > 1.0 },
        format!("ind = Σ m_λ d_λ = {ind:.10}"),
    );
    let ratio = mu_a / (ind * ind);
    let mu_h = target.global_dimension();
    r.push(
        "mu_relation",
        (ratio - mu_h).abs() < MU_RELATION_TOL * mu_h.max(1.0),
        format!("μ_A/ind² = {ratio:.10}, μ_H = {mu_h:.10}"),
    );
    let w1 = weight_one_dimension(rho);
    r.push(
        "weight_one_dimension",
        w1 == u64::from(target.lie_dimension()),
        format!("dim G + Σ_(h=1) m_λ dim λ = {w1}, dim H = {}", target.lie_dimension()),
    );
    r
}

/// Checks (a)–(e) against full modular data of the A side, plus central
/// charge, vacuum multiplicity and weight-one dimension.
pub fn validate_inclusion(rec: &InclusionRecord, md: &ModularData) -> Report {
    if md.rank() != rec.n || md.level() != rec.k {
        let mut r = Report::new();
        r.push(
            "alcove",
            false,
            format!("record is SU({})_{}, modular data is SU({})_{}", rec.n, rec.k, md.rank(), md.level()),
        );
        return r;
    }
    let dims = |w: &AffineWeight| md.index_of(w).map_or(f64::NAN, |i| md.dim(i));
    let mut r = structural_checks(rec, &dims, md.global_dimension());
    match &rec.full_branching {
        None => r.push("branching_invariant", true, "no full branching stored"),
        Some(b) => match invariant_from_branching(b, md.weights()) {
            Ok(z) => {
                let v = verify_invariant(&z, md);
                let res = branching_residual(md, &rec.target, b).unwrap_or(f64::INFINITY);
                r.push(
                    "branching_intertwines",
                    res < COMMUTATION_TOL,
                    format!("‖B S_A − S_H B‖_max = {res:.3e}"),
                );
                r.push(
                    "branching_invariant",
                    v.passed(),
                    v.checks.iter().map(|c| c.detail.as_str()).collect::<Vec<_>>().join("; "),
                );
            }
            Err(e) => r.push("branching_invariant", false, format!("{e}")),
        },
    }
    r
}

/// Same checks without an S matrix: quantum dimensions come from the Weyl
/// product formula and the branching invariant is not re-checked.
pub fn validate_inclusion_quick(rec: &InclusionRecord) -> Result<Report> {
    let ws = alcove_weights(rec.n, rec.k)?;
    let mu_a = global_dimension_from_weights(&ws);
    Ok(structural_checks(rec, &quantum_dimension, mu_a))
}

pub fn find<'a>(records: &'a [InclusionRecord], name: &str) -> Option<&'a InclusionRecord> {
    records.iter().find(|r| r.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> BuildOptions {
        BuildOptions::with_precision(53)
    }

    fn labels(s: &Spectrum) -> Vec<Vec<u32>> {
        s.support().map(|w| w.labels().to_vec()).collect()
    }

    #[test]
    fn series_instances_respect_the_cap() {
        let specs = builtin_specs().unwrap();
        let names: Vec<&str> = specs.iter().map(|s| s.name.as_str()).collect();
        assert_eq!(&names[..6], ["su2_10_b2", "su2_28_g2", "su3_5_a5", "su3_9_e6", "su3_21_e7", "su9_1_e8"]);
        for s in &specs {
            assert!(alcove_size(s.n, s.k) <= SERIES_SECTOR_CAP);
            for f in &s.families {
                if let Some(k) = f.level_for(s.n) {
                    assert_eq!(k, s.k, "{}", s.name);
                }
            }
        }
        let count = |f| specs.iter().filter(|s| s.families.contains(&f)).count();
        assert_eq!(count(Family::AntisymmetricSquare), 4); // N = 4..7
        assert_eq!(count(Family::SymmetricSquare), 4); // N = 2..5
        assert_eq!(count(Family::Adjoint), 5); // N = 2..6
    }

    #[test]
    fn spin5_record() {
        let spec = &builtin_specs().unwrap()[0];
        let rec = derive_record(spec, &opts()).unwrap();
        assert_eq!(rec.provenance, Provenance::PaperGiven);
        assert_eq!(labels(&rec.vacuum_spectrum), [vec![0], vec![6]]);
        assert_eq!(rec.target.name(), "B2_level1");
        let md = build_modular_data_with(2, 10, &BuildOptions::default()).unwrap();
        let r = validate_inclusion(&rec, &md);
        assert!(r.passed(), "{r:?}");
        assert!(r.get("branching_intertwines").unwrap().pass);
        let q = validate_inclusion_quick(&rec).unwrap();
        assert!(q.passed(), "{q:?}");
    }

    #[test]
    fn known_small_vacuum_spectra() {
        let specs = builtin_specs().unwrap();
        let get = |name: &str| {
            let s = specs.iter().find(|s| s.name == name).unwrap();
            derive_record(s, &opts()).unwrap()
        };
        let g2 = get("su2_28_g2");
        assert_eq!(labels(&g2.vacuum_spectrum), [vec![0], vec![10], vec![18], vec![28]]);
        let a5 = get("su3_5_a5");
        assert_eq!(labels(&a5.vacuum_spectrum), [vec![0, 0], vec![2, 2]]);
        let d4 = get("su3_3_d4");
        assert_eq!(labels(&d4.vacuum_spectrum), [vec![0, 0], vec![0, 3], vec![3, 0]]);
        let e8 = get("su9_1_e8");
        let support = labels(&e8.vacuum_spectrum);
        assert_eq!(support.len(), 3);
        assert_eq!(support[1], [0, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(support[2], [0, 0, 1, 0, 0, 0, 0, 0]);
        let trivial = get("su2_2_b1");
        assert!(trivial.vacuum_spectrum.is_vacuum_only());
        assert!(validate_inclusion_quick(&trivial).unwrap().passed());
    }

    #[test]
    fn validation_catches_a_broken_record() {
        let spec = &builtin_specs().unwrap()[0];
        let mut rec = derive_record(spec, &opts()).unwrap();
        // d(4) = d(6) at level 10, so label 8 is used to move the index.
        rec.vacuum_spectrum = Spectrum::from_labels(2, 10, [(vec![0], 1), (vec![8], 1)]).unwrap();
        rec.full_branching = None;
        let r = validate_inclusion_quick(&rec).unwrap();
        assert!(!r.get("integer_h").unwrap().pass);
        assert!(!r.get("mu_relation").unwrap().pass);
    }

    #[test]
    fn levelrank_records_are_capped() {
        let lr = levelrank_records();
        assert!(lr.contains(&LevelRankRecord { n: 2, m: 10 }));
        assert!(lr.contains(&LevelRankRecord { n: 2, m: 28 }));
        assert!(lr.iter().all(|r| alcove_size(r.m, r.n) <= SERIES_SECTOR_CAP));
    }

    #[test]
    fn provenance_and_family_names_round_trip() {
        for p in [Provenance::PaperGiven, Provenance::SearchDerived] {
            assert_eq!(Provenance::parse(p.as_str()).unwrap(), p);
        }
        for f in [Family::Exceptional, Family::AntisymmetricSquare, Family::SymmetricSquare, Family::Adjoint] {
            assert_eq!(Family::parse(f.as_str()).unwrap(), f);
        }
        assert!(Provenance::parse("guessed").is_err());
    }
}
