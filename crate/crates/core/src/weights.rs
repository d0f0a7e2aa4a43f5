//! Level-K dominant weights of SU(N).
//!
//! A weight is stored by its finite Dynkin labels `(λ₁, …, λ_{N−1})`; the
//! affine label `a₀ = K − Σλᵢ` is always derived. Within one alcove the
//! canonical order is lexicographic on labels, which puts the vacuum first.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Rational, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight {
    rank_n: u32,
    level_k: u32,
    labels: Vec<u32>,
}

impl AffineWeight {
    pub fn new(rank_n: u32, level_k: u32, labels: Vec<u32>) -> Result<Self> {
        check_rank_level(rank_n, level_k)?;
        if labels.len() != rank_n as usize - 1 {
            return Err(Error::invalid(alloc::format!(
                "SU({rank_n}) weight needs {} labels, got {}",
                rank_n - 1,
                labels.len()
            )));
        }
        let total: u64 = labels.iter().map(|&l| u64::from(l)).sum();
        if total > u64::from(level_k) {
            return Err(Error::invalid(alloc::format!(
                "labels {labels:?} sum to {total} > level {level_k}"
            )));
        }
        Ok(AffineWeight {
            rank_n,
            level_k,
            labels,
        })
    }

    pub fn vacuum(rank_n: u32, level_k: u32) -> Result<Self> {
        Self::new(rank_n, level_k, vec![0; rank_n.saturating_sub(1) as usize])
    }

    /// Weight from affine labels `[a₀, a₁, …, a_{N−1}]`; the level is their sum.
    pub fn from_affine(affine: &[u32]) -> Result<Self> {
        let n = affine.len() as u32;
        let k: u32 = affine.iter().sum();
        Self::new(n, k, affine[1..].to_vec())
    }

    /// Column-reduced weight from Young diagram row lengths. Rows beyond the
    /// `N`-th are not allowed; rows must be weakly decreasing.
    pub fn from_rows(rank_n: u32, level_k: u32, rows: &[u32]) -> Result<Self> {
        let n = rank_n as usize;
        if rows.len() > n {
            return Err(Error::invalid(alloc::format!(
                "diagram with {} rows does not fit SU({rank_n})",
                rows.len()
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(alloc::format!(
                "rows {rows:?} are not a partition"
            )));
        }
        let mut padded = vec![0u32; n];
        padded[..rows.len()].copy_from_slice(rows);
        let full = padded[n - 1];
        let labels = (0..n - 1)
            .map(|i| (padded[i] - full) - (padded[i + 1] - full))
            .collect();
        Self::new(rank_n, level_k, labels)
    }

    pub fn rank(&self) -> u32 {
        self.rank_n
    }

    pub fn level(&self) -> u32 {
        self.level_k
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn zeroth_label(&self) -> u32 {
        self.level_k - self.labels.iter().sum::<u32>()
    }

    pub fn affine_labels(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.rank_n as usize);
        out.push(self.zeroth_label());
        out.extend_from_slice(&self.labels);
        out
    }

    pub fn is_vacuum(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// Young diagram row lengths `r_i = Σ_{j≥i} λ_j`, `N − 1` entries.
    pub fn rows(&self) -> Vec<u32> {
        let mut rows = vec![0u32; self.labels.len()];
        let mut acc = 0;
        for i in (0..self.labels.len()).rev() {
            acc += self.labels[i];
            rows[i] = acc;
        }
        rows
    }

    /// Strictly decreasing shifted exponents `ℓ_a = Σ_{i≥a}(λ_i + 1)`,
    /// `a = 1..N`, with `ℓ_N = 0`. All lie in `[0, K + N)`.
    pub fn shifted_exponents(&self) -> Vec<u32> {
        let n = self.rank_n as usize;
        let mut ell = vec![0u32; n];
        for a in (0..n - 1).rev() {
            ell[a] = ell[a + 1] + self.labels[a] + 1;
        }
        ell
    }

    pub fn box_count(&self) -> u64 {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (i as u64 + 1) * u64::from(l))
            .sum()
    }

    pub fn in_root_lattice(&self) -> bool {
        self.box_count() % u64::from(self.rank_n) == 0
    }

    pub fn conjugate(&self) -> Self {
        let mut labels = self.labels.clone();
        labels.reverse();
        AffineWeight {
            labels,
            ..self.clone()
        }
    }

    /// Rotate the affine labels by `t` positions: `a'_{(i+t) mod N} = a_i`.
    pub fn simple_current(&self, t: i64) -> Self {
        let n = self.rank_n as usize;
        let shift = t.rem_euclid(n as i64) as usize;
        let affine = self.affine_labels();
        let mut rotated = vec![0u32; n];
        for (i, &a) in affine.iter().enumerate() {
            rotated[(i + shift) % n] = a;
        }
        AffineWeight {
            labels: rotated[1..].to_vec(),
            ..self.clone()
        }
    }

    /// `(λ, λ + 2ρ)` scaled by `N`, an exact integer: the inverse Cartan
    /// matrix of A_{N−1} is `min(i,j) − ij/N`.
    fn casimir_times_n(&self) -> i64 {
        let n = i64::from(self.rank_n);
        let mut total = 0i64;
        for (i, &li) in self.labels.iter().enumerate() {
            if li == 0 {
                continue;
            }
            let i1 = i as i64 + 1;
            for (j, &lj) in self.labels.iter().enumerate() {
                let j1 = j as i64 + 1;
                let g = n * i1.min(j1) - i1 * j1;
                total += i64::from(li) * g * (i64::from(lj) + 2);
            }
        }
        total
    }

    pub fn conformal_weight(&self) -> ConformalWeight {
        let n = i64::from(self.rank_n);
        let k = i64::from(self.level_k);
        let exact = Rational::new(self.casimir_times_n(), 2 * n * (k + n));
        ConformalWeight {
            exact,
            value: ratio_to_f64(exact),
        }
    }
}

impl fmt::Debug for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SU({})_{}{:?}", self.rank_n, self.level_k, self.labels)
    }
}

impl fmt::Display for AffineWeight {
    /// `Λ3+Λ7` style, or `KΛ0` for the vacuum.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_vacuum() {
            return write!(f, "{}Λ0", self.level_k);
        }
        let mut first = true;
        for (i, &l) in self.labels.iter().enumerate() {
            if l == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if l == 1 {
                write!(f, "Λ{}", i + 1)?;
            } else {
                write!(f, "{}Λ{}", l, i + 1)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConformalWeight {
    pub exact: Rational,
    pub value: f64,
}

pub fn ratio_to_f64(q: Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

fn check_rank_level(n: u32, k: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(alloc::format!("rank N = {n} must be ≥ 2")));
    }
    if k < 1 {
        return Err(Error::invalid(alloc::format!("level K = {k} must be ≥ 1")));
    }
    Ok(())
}

/// The alcove `P⁺⁺ᴷ` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSet {
    rank_n: u32,
    level_k: u32,
    members: Vec<AffineWeight>,
}

impl WeightSet {
    pub fn rank(&self) -> u32 {
        self.rank_n
    }

    pub fn level(&self) -> u32 {
        self.level_k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[AffineWeight] {
        &self.members
    }

    pub fn iter(&self) -> core::slice::Iter<'_, AffineWeight> {
        self.members.iter()
    }

    pub fn get(&self, index: usize) -> Option<&AffineWeight> {
        self.members.get(index)
    }

    pub fn vacuum(&self) -> &AffineWeight {
        &self.members[0]
    }

    pub fn index_of(&self, w: &AffineWeight) -> Option<usize> {
        if w.rank_n != self.rank_n || w.level_k != self.level_k {
            return None;
        }
        self.members.binary_search(w).ok()
    }

    pub fn index_of_labels(&self, labels: &[u32]) -> Option<usize> {
        self.members
            .binary_search_by(|m| m.labels.as_slice().cmp(labels))
            .ok()
    }

    /// `perm[i]` is the index of the conjugate of member `i`.
    pub fn conjugation_permutation(&self) -> Vec<usize> {
        self.members
            .iter()
            .map(|w| self.index_of(&w.conjugate()).expect("alcove closed under conjugation"))
            .collect()
    }

    pub fn conformal_weights(&self) -> Vec<Rational> {
        self.members.iter().map(|w| w.conformal_weight().exact).collect()
    }
}

impl<'a> IntoIterator for &'a WeightSet {
    type Item = &'a AffineWeight;
    type IntoIter = core::slice::Iter<'a, AffineWeight>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// All label vectors with `Σλᵢ ≤ k`, lexicographically ordered.
pub fn alcove_weights(n: u32, k: u32) -> Result<WeightSet> {
    check_rank_level(n, k)?;
    let slots = n as usize - 1;
    let mut members = Vec::new();
    let mut current = vec![0u32; slots];
    fill(&mut current, 0, k, n, k, &mut members);
    Ok(WeightSet {
        rank_n: n,
        level_k: k,
        members,
    })
}

fn fill(
    current: &mut Vec<u32>,
    pos: usize,
    remaining: u32,
    n: u32,
    k: u32,
    out: &mut Vec<AffineWeight>,
) {
    if pos == current.len() {
        out.push(AffineWeight {
            rank_n: n,
            level_k: k,
            labels: current.clone(),
        });
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        fill(current, pos + 1, remaining - v, n, k, out);
    }
    current[pos] = 0;
}

/// `binomial(n − 1 + k, k)`, the alcove size, without enumerating it.
pub fn alcove_size(n: u32, k: u32) -> u128 {
    let (a, b) = (u128::from(n - 1 + k), u128::from(k.min(n - 1)));
    (0..b).fold(1u128, |acc, i| acc * (a - i) / (i + 1))
}

pub fn box_count(w: &AffineWeight) -> u64 {
    w.box_count()
}

pub fn in_root_lattice(w: &AffineWeight) -> bool {
    w.in_root_lattice()
}

pub fn conjugate(w: &AffineWeight) -> AffineWeight {
    w.conjugate()
}

pub fn simple_current(w: &AffineWeight, t: i64) -> AffineWeight {
    w.simple_current(t)
}

pub fn conformal_weight(w: &AffineWeight) -> ConformalWeight {
    w.conformal_weight()
}

/// `c = K(N² − 1)/(K + N)`.
pub fn central_charge(n: u32, k: u32) -> Rational {
    let (n, k) = (i64::from(n), i64::from(k));
    Rational::new(k * (n * n - 1), k + n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: u32, k: u32, labels: &[u32]) -> AffineWeight {
        AffineWeight::new(n, k, labels.to_vec()).unwrap()
    }

    // Independent route: (λ, λ+2ρ) from partition rows in the orthonormal basis.
    fn casimir_from_rows(wt: &AffineWeight) -> Rational {
        let n = i64::from(wt.rank());
        let mut rows: Vec<i64> = wt.rows().iter().map(|&r| i64::from(r)).collect();
        rows.push(0);
        let size: i64 = rows.iter().sum();
        let mut total = Rational::from_integer(0);
        for (i, &r) in rows.iter().enumerate() {
            total += Rational::from_integer(r * (r + n + 1 - 2 * (i as i64 + 1)));
        }
        total - Rational::new(size * size, n)
    }

    #[test]
    fn alcove_counts() {
        let su2 = alcove_weights(2, 10).unwrap();
        assert_eq!(su2.len(), 11);
        for (i, m) in su2.iter().enumerate() {
            assert_eq!(m.labels(), &[i as u32]);
        }
        assert_eq!(alcove_weights(10, 2).unwrap().len(), 55);
        assert_eq!(alcove_weights(3, 5).unwrap().len(), 21);
        assert_eq!(alcove_size(10, 2), 55);
        assert_eq!(alcove_size(3, 21), 253);
    }

    #[test]
    fn rejects_degenerate_rank_and_level() {
        assert!(matches!(alcove_weights(1, 3), Err(Error::InvalidArgument(_))));
        assert!(matches!(alcove_weights(3, 0), Err(Error::InvalidArgument(_))));
        assert!(AffineWeight::new(3, 2, vec![2, 1]).is_err());
        assert!(AffineWeight::new(3, 2, vec![1]).is_err());
    }

    #[test]
    fn vacuum_is_first() {
        let ws = alcove_weights(4, 3).unwrap();
        assert!(ws.vacuum().is_vacuum());
        assert_eq!(ws.index_of(&AffineWeight::vacuum(4, 3).unwrap()), Some(0));
    }

    #[test]
    fn box_counts_and_root_lattice() {
        assert_eq!(w(2, 10, &[0]).box_count(), 0);
        assert_eq!(w(2, 10, &[6]).box_count(), 6);
        assert_eq!(w(10, 2, &[0, 0, 1, 0, 0, 0, 1, 0, 0]).box_count(), 10);
        assert!(w(2, 10, &[0]).in_root_lattice());
        assert!(w(2, 10, &[6]).in_root_lattice());
        assert!(!w(2, 10, &[3]).in_root_lattice());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(w(2, 10, &[0]).conjugate(), w(2, 10, &[0]));
        let l37 = w(10, 2, &[0, 0, 1, 0, 0, 0, 1, 0, 0]);
        assert_eq!(l37.conjugate(), l37);
        assert_eq!(w(3, 1, &[1, 0]).conjugate(), w(3, 1, &[0, 1]));
    }

    #[test]
    fn simple_current_examples() {
        let l6 = w(10, 2, &[0, 0, 0, 0, 0, 1, 0, 0, 0]);
        assert_eq!(l6.simple_current(0), l6);
        assert_eq!(l6.simple_current(7), w(10, 2, &[0, 0, 1, 0, 0, 0, 1, 0, 0]));
        assert_eq!(w(2, 10, &[0]).simple_current(1), w(2, 10, &[10]));
        assert_eq!(l6.simple_current(-3), l6.simple_current(7));
    }

    #[test]
    fn conformal_weight_examples() {
        assert_eq!(w(2, 10, &[0]).conformal_weight().exact, Rational::from_integer(0));
        assert_eq!(w(2, 10, &[6]).conformal_weight().exact, Rational::from_integer(1));
        assert!((w(2, 10, &[6]).conformal_weight().value - 1.0).abs() < 1e-15);
        assert_eq!(w(2, 1, &[1]).conformal_weight().exact, Rational::new(1, 4));
        for n in 2..=8u32 {
            for k in 1..=5u32 {
                let mut labels = vec![0; n as usize - 1];
                labels[0] = 1;
                let expected = Rational::new(
                    i64::from(n * n - 1),
                    i64::from(2 * n * (k + n)),
                );
                assert_eq!(w(n, k, &labels).conformal_weight().exact, expected);
            }
        }
    }

    #[test]
    fn conformal_weight_matches_partition_route() {
        for (n, k) in [(2, 7), (3, 5), (4, 4), (5, 3), (10, 2)] {
            for m in alcove_weights(n, k).unwrap().iter() {
                let expected =
                    casimir_from_rows(m) / Rational::from_integer(2 * i64::from(k + n));
                assert_eq!(m.conformal_weight().exact, expected, "{m:?}");
            }
        }
    }

    #[test]
    fn central_charge_examples() {
        assert_eq!(central_charge(2, 1), Rational::from_integer(1));
        assert_eq!(central_charge(10, 2), Rational::new(33, 2));
        assert_eq!(central_charge(2, 10), Rational::new(5, 2));
    }

    #[test]
    fn rows_round_trip() {
        let ws = alcove_weights(5, 3).unwrap();
        for m in ws.iter() {
            assert_eq!(&AffineWeight::from_rows(5, 3, &m.rows()).unwrap(), m);
        }
        // Full columns are deleted.
        assert_eq!(
            AffineWeight::from_rows(3, 5, &[4, 2, 1]).unwrap(),
            w(3, 5, &[2, 1])
        );
    }

    #[test]
    fn display_uses_fundamental_weights() {
        assert_eq!(
            alloc::format!("{}", w(10, 2, &[0, 0, 1, 0, 0, 0, 1, 0, 0])),
            "Λ3+Λ7"
        );
        assert_eq!(alloc::format!("{}", w(10, 2, &[0; 9])), "2Λ0");
    }
}
