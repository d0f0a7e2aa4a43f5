//! Spectrum and mass-matrix files. Weights are always written as full
//! Dynkin label arrays so a file never depends on positional conventions.

use std::fs;
use std::path::Path;

use mirext_core::modinv::MassMatrix;
use mirext_core::weights::alcove_weights;
use mirext_core::Spectrum;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelEntry {
    pub labels: Vec<u32>,
    pub mult: u32,
}

pub fn entries_of(s: &Spectrum) -> Vec<LabelEntry> {
    s.iter()
        .map(|(w, mult)| LabelEntry {
            labels: w.labels().to_vec(),
            mult,
        })
        .collect()
}

pub fn spectrum_from_entries(n: u32, k: u32, entries: &[LabelEntry]) -> mirext_core::Result<Spectrum> {
    Spectrum::from_labels(n, k, entries.iter().map(|e| (e.labels.clone(), e.mult)))
}

/// `{ "n": 2, "k": 10, "entries": [{"labels": [0], "mult": 1}, ...] }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumFile {
    pub n: u32,
    pub k: u32,
    pub entries: Vec<LabelEntry>,
}

impl SpectrumFile {
    pub fn from_spectrum(s: &Spectrum) -> Self {
        SpectrumFile {
            n: s.rank(),
            k: s.level(),
            entries: entries_of(s),
        }
    }

    pub fn to_spectrum(&self) -> mirext_core::Result<Spectrum> {
        spectrum_from_entries(self.n, self.k, &self.entries)
    }
}

/// `{ "n": 2, "k": 10, "matrix": [[...], ...] }`, rows in the canonical alcove order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassMatrixFile {
    pub n: u32,
    pub k: u32,
    pub matrix: Vec<Vec<u32>>,
}

impl MassMatrixFile {
    pub fn from_matrix(z: &MassMatrix) -> Self {
        MassMatrixFile {
            n: z.weights().rank(),
            k: z.weights().level(),
            matrix: z.rows(),
        }
    }

    pub fn to_matrix(&self) -> mirext_core::Result<MassMatrix> {
        MassMatrix::from_rows(alcove_weights(self.n, self.k)?, &self.matrix)
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_file_round_trip() {
        let text = r#"{"n":2,"k":10,"entries":[{"labels":[0],"mult":1},{"labels":[6],"mult":1}]}"#;
        let f: SpectrumFile = serde_json::from_str(text).unwrap();
        let s = f.to_spectrum().unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(SpectrumFile::from_spectrum(&s), f);
        assert_eq!(serde_json::to_string(&f).unwrap(), text);
    }

    #[test]
    fn rejects_bad_spectra() {
        let bad_level: SpectrumFile =
            serde_json::from_str(r#"{"n":2,"k":10,"entries":[{"labels":[11],"mult":1}]}"#).unwrap();
        assert!(bad_level.to_spectrum().is_err());
        let repeated: SpectrumFile = serde_json::from_str(
            r#"{"n":2,"k":10,"entries":[{"labels":[0],"mult":1},{"labels":[0],"mult":1}]}"#,
        )
        .unwrap();
        assert!(repeated.to_spectrum().is_err());
        assert!(serde_json::from_str::<SpectrumFile>(r#"{"n":2,"k":10,"entries":[],"x":1}"#).is_err());
    }

    #[test]
    fn mass_matrix_file_round_trip() {
        let z = MassMatrix::identity(alcove_weights(3, 2).unwrap());
        let f = MassMatrixFile::from_matrix(&z);
        assert_eq!(f.matrix.len(), 6);
        assert_eq!(f.to_matrix().unwrap(), z);
    }
}
