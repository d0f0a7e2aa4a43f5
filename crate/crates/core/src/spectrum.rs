use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::weights::AffineWeight;
use crate::{Error, Result};

/// Finite multiset `Σ m_λ [λ]` of SU(N)_K sectors with positive
/// multiplicities, ordered canonically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Spectrum {
    rank_n: u32,
    level_k: u32,
    entries: BTreeMap<AffineWeight, u32>,
}

impl Spectrum {
    pub fn new(rank_n: u32, level_k: u32) -> Self {
        Spectrum {
            rank_n,
            level_k,
            entries: BTreeMap::new(),
        }
    }

    pub fn vacuum(rank_n: u32, level_k: u32) -> Result<Self> {
        let mut s = Self::new(rank_n, level_k);
        s.add(AffineWeight::vacuum(rank_n, level_k)?, 1)?;
        Ok(s)
    }

    /// Build from `(labels, multiplicity)` pairs; repeated weights are an error.
    pub fn from_labels<I, L>(rank_n: u32, level_k: u32, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (L, u32)>,
        L: Into<Vec<u32>>,
    {
        let mut s = Self::new(rank_n, level_k);
        for (labels, mult) in entries {
            let w = AffineWeight::new(rank_n, level_k, labels.into())?;
            if s.entries.contains_key(&w) {
                return Err(Error::invalid(format!("weight {w:?} listed twice")));
            }
            s.add(w, mult)?;
        }
        Ok(s)
    }

    /// Add `mult` copies of `w`; zero multiplicities are rejected.
    pub fn add(&mut self, w: AffineWeight, mult: u32) -> Result<()> {
        if w.rank() != self.rank_n || w.level() != self.level_k {
            return Err(Error::invalid(format!(
                "weight {w:?} is not in the SU({})_{} alcove",
                self.rank_n, self.level_k
            )));
        }
        if mult == 0 {
            return Err(Error::invalid(format!("zero multiplicity for {w:?}")));
        }
        *self.entries.entry(w).or_insert(0) += mult;
        Ok(())
    }

    pub fn rank(&self) -> u32 {
        self.rank_n
    }

    pub fn level(&self) -> u32 {
        self.level_k
    }

    pub fn mult(&self, w: &AffineWeight) -> u32 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn vacuum_mult(&self) -> u32 {
        self.entries
            .iter()
            .find(|(w, _)| w.is_vacuum())
            .map_or(0, |(_, &m)| m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AffineWeight, u32)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn support(&self) -> impl Iterator<Item = &AffineWeight> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.values().map(|&m| u64::from(m)).sum()
    }

    pub fn is_vacuum_only(&self) -> bool {
        self.entries.len() == 1 && self.vacuum_mult() == 1
    }

    /// First weight with `m_λ ≠ m_λ̄`, if any.
    pub fn conjugation_asymmetry(&self) -> Option<(&AffineWeight, u32, u32)> {
        self.entries.iter().find_map(|(w, &m)| {
            let mc = self.mult(&w.conjugate());
            (m != mc).then_some((w, m, mc))
        })
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SU({})_{}", self.rank_n, self.level_k)?;
        f.debug_map()
            .entries(self.entries.iter().map(|(w, m)| (w.labels(), m)))
            .finish()
    }
}

impl fmt::Display for Spectrum {
    /// `L(2Λ0) + L(Λ3+Λ7)` style, multiplicities as prefixes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (w, &m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "L({w})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_renders() {
        let s = Spectrum::from_labels(10, 2, [(alloc::vec![0; 9], 1), (alloc::vec![0, 0, 1, 0, 0, 0, 1, 0, 0], 1)])
            .unwrap();
        assert_eq!(alloc::format!("{s}"), "L(2Λ0) + L(Λ3+Λ7)");
        assert_eq!(s.vacuum_mult(), 1);
        assert!(s.conjugation_asymmetry().is_none());
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(Spectrum::from_labels(2, 10, [(alloc::vec![11], 1)]).is_err());
        assert!(Spectrum::from_labels(2, 10, [(alloc::vec![2], 0)]).is_err());
        assert!(Spectrum::from_labels(2, 10, [(alloc::vec![2], 1), (alloc::vec![2], 1)]).is_err());
    }

    #[test]
    fn detects_conjugation_asymmetry() {
        let s = Spectrum::from_labels(3, 3, [(alloc::vec![0, 0], 1), (alloc::vec![3, 0], 1)]).unwrap();
        let (w, m, mc) = s.conjugation_asymmetry().unwrap();
        assert_eq!((w.labels(), m, mc), (&[3u32, 0][..], 1, 0));
    }
}
