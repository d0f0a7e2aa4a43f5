//! Versioned JSON form of the inclusion catalog. The shipped file is
//! generated by `mirext catalog derive`; loading checks the stored target
//! data against the level-1 constructors and re-runs the quick validation.

use mirext_core::catalog::{
    builtin_inclusions, levelrank_records, validate_inclusion_quick, Family, InclusionRecord, LevelRankRecord,
    Provenance,
};
use mirext_core::level1::Level1Algebra;
use mirext_core::modular::BuildOptions;
use mirext_core::weights::alcove_size;
use mirext_core::{Error, Rational, Spectrum};
use serde::{Deserialize, Serialize};

use crate::files::{entries_of, spectrum_from_entries, LabelEntry};

pub const CATALOG_VERSION: u32 = 1;

/// Quantum dimensions in the file must agree with the constructors to this.
const DIM_TOL: f64 = 1e-9;

pub const SHIPPED_CATALOG: &str = include_str!("../data/catalog.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub version: u32,
    pub inclusions: Vec<InclusionEntry>,
    pub levelrank: Vec<LevelRankEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ASide {
    pub n: u32,
    pub k: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TargetEntry {
    pub name: String,
    pub dims: Vec<f64>,
    /// Exact rationals as `"p/q"` strings.
    pub h: Vec<String>,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InclusionEntry {
    pub name: String,
    pub a_side: ASide,
    pub target: TargetEntry,
    pub dynkin_index: u32,
    pub vacuum_spectrum: Vec<LabelEntry>,
    pub full_branching: Option<Vec<Vec<LabelEntry>>>,
    pub provenance: String,
    pub families: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRankEntry {
    pub name: String,
    pub n: u32,
    pub m: u32,
    pub a_sectors: u64,
    pub b_sectors: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    pub inclusions: Vec<InclusionRecord>,
    pub levelrank: Vec<LevelRankRecord>,
}

impl Catalog {
    pub fn find(&self, name: &str) -> Option<&InclusionRecord> {
        mirext_core::catalog::find(&self.inclusions, name)
    }
}

pub fn inclusion_entry(rec: &InclusionRecord) -> InclusionEntry {
    let t = &rec.target;
    InclusionEntry {
        name: rec.name.clone(),
        a_side: ASide { n: rec.n, k: rec.k },
        target: TargetEntry {
            name: t.name().to_string(),
            dims: t.quantum_dims().to_vec(),
            h: t.h_values().iter().map(ToString::to_string).collect(),
            c: t.central_charge().to_string(),
        },
        dynkin_index: rec.dynkin_index,
        vacuum_spectrum: entries_of(&rec.vacuum_spectrum),
        full_branching: rec
            .full_branching
            .as_ref()
            .map(|b| b.iter().map(entries_of).collect()),
        provenance: rec.provenance.as_str().to_string(),
        families: rec.families.iter().map(|f| f.as_str().to_string()).collect(),
    }
}

fn levelrank_entry(r: &LevelRankRecord) -> LevelRankEntry {
    LevelRankEntry {
        name: r.name(),
        n: r.n,
        m: r.m,
        a_sectors: alcove_size(r.n, r.m) as u64,
        b_sectors: alcove_size(r.m, r.n) as u64,
    }
}

pub fn to_file(inclusions: &[InclusionRecord], levelrank: &[LevelRankRecord]) -> CatalogFile {
    CatalogFile {
        version: CATALOG_VERSION,
        inclusions: inclusions.iter().map(inclusion_entry).collect(),
        levelrank: levelrank.iter().map(levelrank_entry).collect(),
    }
}

/// Derive every record from scratch.
pub fn derive_file(opts: &BuildOptions) -> mirext_core::Result<CatalogFile> {
    Ok(to_file(&builtin_inclusions(opts)?, &levelrank_records()))
}

pub fn render(file: &CatalogFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("serializable");
    s.push('\n');
    s
}

fn parse_rational(s: &str) -> mirext_core::Result<Rational> {
    s.parse()
        .map_err(|_| Error::InvalidArgument(format!("{s:?} is not a rational \"p/q\"")))
}

fn record_from_entry(e: &InclusionEntry) -> mirext_core::Result<InclusionRecord> {
    let bad = |what: String| Error::InvalidArgument(format!("catalog entry {}: {what}", e.name));
    let target = Level1Algebra::by_name(&e.target.name)?;
    let h = e
        .target
        .h
        .iter()
        .map(|s| parse_rational(s))
        .collect::<mirext_core::Result<Vec<_>>>()?;
    if h != target.h_values() {
        return Err(bad(format!("stored h values {:?} disagree with {}", e.target.h, target.name())));
    }
    if parse_rational(&e.target.c)? != target.central_charge() {
        return Err(bad(format!("stored c = {} disagrees with {}", e.target.c, target.name())));
    }
    let dims_ok = e.target.dims.len() == target.sector_count()
        && e.target.dims.iter().zip(target.quantum_dims()).all(|(a, b)| (a - b).abs() < DIM_TOL);
    if !dims_ok {
        return Err(bad(format!("stored dims disagree with {}", target.name())));
    }
    let (n, k) = (e.a_side.n, e.a_side.k);
    let full_branching = match &e.full_branching {
        None => None,
        Some(rows) => {
            if rows.len() != target.sector_count() {
                return Err(bad(format!("{} branching rows for {} sectors", rows.len(), target.sector_count())));
            }
            Some(
                rows.iter()
                    .map(|r| spectrum_from_entries(n, k, r))
                    .collect::<mirext_core::Result<Vec<Spectrum>>>()?,
            )
        }
    };
    Ok(InclusionRecord {
        name: e.name.clone(),
        n,
        k,
        target,
        families: e
            .families
            .iter()
            .map(|f| Family::parse(f))
            .collect::<mirext_core::Result<_>>()?,
        dynkin_index: e.dynkin_index,
        vacuum_spectrum: spectrum_from_entries(n, k, &e.vacuum_spectrum)?,
        full_branching,
        provenance: Provenance::parse(&e.provenance)?,
    })
}

/// Parse a catalog. Unless `trusted`, every record must pass
/// [`validate_inclusion_quick`].
pub fn parse(text: &str, trusted: bool) -> mirext_core::Result<Catalog> {
    let file: CatalogFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("catalog JSON: {e}")))?;
    if file.version != CATALOG_VERSION {
        return Err(Error::InvalidArgument(format!(
            "catalog version {} is not supported (expected {CATALOG_VERSION})",
            file.version
        )));
    }
    let inclusions = file
        .inclusions
        .iter()
        .map(record_from_entry)
        .collect::<mirext_core::Result<Vec<_>>>()?;
    if !trusted {
        for rec in &inclusions {
            let r = validate_inclusion_quick(rec)?;
            let first = r.failures().next().map(|c| format!("{}: {}", c.name, c.detail));
            if let Some(why) = first {
                return Err(Error::InvalidArgument(format!("catalog entry {} fails {why}", rec.name)));
            }
        }
    }
    let levelrank = file
        .levelrank
        .iter()
        .map(|l| LevelRankRecord { n: l.n, m: l.m })
        .collect();
    Ok(Catalog { inclusions, levelrank })
}

/// The catalog compiled into the binary, validated.
pub fn shipped() -> mirext_core::Result<Catalog> {
    parse(SHIPPED_CATALOG, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_catalog_loads_and_validates() {
        let cat = shipped().unwrap();
        assert_eq!(cat.inclusions.len(), 18);
        let spin5 = cat.find("su2_10_b2").unwrap();
        assert_eq!(spin5.provenance, Provenance::PaperGiven);
        assert_eq!(format!("{}", spin5.vacuum_spectrum), "L(10Λ0) + L(6Λ1)");
        assert!(spin5.full_branching.is_some());
        let g2 = cat.find("su2_28_g2").unwrap();
        let support: Vec<u32> = g2.vacuum_spectrum.support().map(|w| w.labels()[0]).collect();
        assert_eq!(support, [0, 10, 18, 28]);
        assert_eq!(g2.provenance, Provenance::SearchDerived);
    }

    #[test]
    fn shipped_catalog_matches_fresh_derivation() {
        let fresh = derive_file(&BuildOptions::with_precision(53)).unwrap();
        let stored: CatalogFile = serde_json::from_str(SHIPPED_CATALOG).unwrap();
        assert_eq!(stored.levelrank, fresh.levelrank);
        assert_eq!(stored.inclusions.len(), fresh.inclusions.len());
        for (a, b) in stored.inclusions.iter().zip(&fresh.inclusions) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.vacuum_spectrum, b.vacuum_spectrum, "{}", a.name);
            assert_eq!(a.full_branching, b.full_branching, "{}", a.name);
            assert_eq!(a.provenance, b.provenance, "{}", a.name);
            assert_eq!(a.target.h, b.target.h);
        }
    }

    #[test]
    fn tampered_entries_are_rejected() {
        let mut file: CatalogFile = serde_json::from_str(SHIPPED_CATALOG).unwrap();
        file.inclusions[0].vacuum_spectrum[1].labels = vec![8];
        assert!(parse(&render(&file), false).is_err());
        assert!(parse(&render(&file), true).is_ok());

        let mut file: CatalogFile = serde_json::from_str(SHIPPED_CATALOG).unwrap();
        file.inclusions[0].target.h[1] = "1/3".into();
        assert!(parse(&render(&file), true).is_err());

        let mut file: CatalogFile = serde_json::from_str(SHIPPED_CATALOG).unwrap();
        file.version = 99;
        assert!(parse(&render(&file), false).is_err());
    }
}
