//! Modular invariants: verification of mass matrices, invariants built from
//! branching rules, and two searches. [`commutant_search`] enumerates all
//! bounded nonnegative integer matrices commuting with S and T;
//! [`branching_search`] finds the vacuum rows of conformal inclusions into a
//! level-1 target from the index and the positivity of `v·S`, which scales
//! to alcoves far beyond the commutant search.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::lattice::Echelon;
use crate::level1::Level1Algebra;
use crate::levelrank::sector_branching;
use crate::modular::{build_modular_data_with, weyl_dimension, BuildOptions, ModularData};
use crate::numeric::C64;
use crate::report::Report;
use crate::weights::WeightSet;
use crate::{frac, Error, Rational, Result, Spectrum};

/// Tolerance for `‖ZS − SZ‖_max`.
pub const COMMUTATION_TOL: f64 = 1e-8;
/// Largest alcove accepted by [`commutant_search`].
pub const COMMUTANT_SEARCH_LIMIT: usize = 64;
pub const DEFAULT_ENTRY_BOUND: u32 = 3;
/// Cap on raw integer points visited by a search before giving up.
pub const SEARCH_SOLUTION_LIMIT: usize = 100_000;

const MATCH_TOL: f64 = 1e-6;

/// Square nonnegative integer matrix indexed by an alcove.
#[derive(Clone, PartialEq, Eq)]
pub struct MassMatrix {
    weights: WeightSet,
    entries: Vec<u32>,
}

impl MassMatrix {
    pub fn new(weights: WeightSet, entries: Vec<u32>) -> Result<Self> {
        let n = weights.len();
        if entries.len() != n * n {
            return Err(Error::invalid(format!(
                "mass matrix has {} entries, expected {n}×{n}",
                entries.len()
            )));
        }
        Ok(MassMatrix { weights, entries })
    }

    pub fn from_rows(weights: WeightSet, rows: &[Vec<u32>]) -> Result<Self> {
        let n = weights.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid(format!("mass matrix must be {n}×{n}")));
        }
        Self::new(weights, rows.concat())
    }

    pub fn identity(weights: WeightSet) -> Self {
        let n = weights.len();
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        MassMatrix { weights, entries }
    }

    pub fn weights(&self) -> &WeightSet {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.len() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let n = self.len();
        self.entries[i * n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.len()).map(<[u32]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Row 0 as a spectrum: the candidate vacuum branching of an extension.
    pub fn vacuum_row(&self) -> Spectrum {
        let mut s = Spectrum::new(self.weights.rank(), self.weights.level());
        for (j, w) in self.weights.iter().enumerate() {
            let m = self.get(0, j);
            if m > 0 {
                s.add(w.clone(), m).expect("weight from the same alcove");
            }
        }
        s
    }

    /// A permutation invariant has exactly one 1 per row and column.
    pub fn is_permutation(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).map(|j| self.get(i, j)).sum::<u32>() == 1)
            && (0..n).all(|j| (0..n).map(|i| self.get(i, j)).sum::<u32>() == 1)
    }
}

/// Canonical order: lexicographic on row-major entries.
impl PartialOrd for MassMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MassMatrix {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.entries.cmp(&other.entries)
    }
}

impl core::fmt::Debug for MassMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Z[SU({})_{}]", self.weights.rank(), self.weights.level())?;
        f.debug_list().entries(self.rows()).finish()
    }
}

fn commutation_residual(z: &[u32], s: &[C64], n: usize) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mut acc = C64::ZERO;
            for k in 0..n {
                let a = z[i * n + k];
                if a != 0 {
                    acc += s[k * n + j].scale(f64::from(a));
                }
                let b = z[k * n + j];
                if b != 0 {
                    acc = acc - s[i * n + k].scale(f64::from(b));
                }
            }
            worst = worst.max(acc.abs());
        }
    }
    worst
}

fn t_violations(z: &[u32], h: &[Rational], n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if z[i * n + j] != 0 && !(h[i] - h[j]).is_integer() {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn verify_invariant(z: &MassMatrix, md: &ModularData) -> Report {
    let mut r = Report::new();
    let n = md.len();
    if z.weights() != md.weights() {
        r.push("dimensions", false, "mass matrix and modular data use different alcoves");
        return r;
    }
    r.push("vacuum_normalized", z.get(0, 0) == 1, format!("Z₀₀ = {}", z.get(0, 0)));
    let res = commutation_residual(&z.entries, md.s_matrix(), n);
    r.push(
        "s_commutation",
        res < COMMUTATION_TOL,
        format!("‖ZS − SZ‖_max = {res:.3e}"),
    );
    let bad = t_violations(&z.entries, md.h_values(), n);
    r.push(
        "t_commutation",
        bad.is_empty(),
        match bad.first() {
            None => String::from("h_λ ≡ h_μ (mod 1) on the support"),
            Some(&(i, j)) => format!(
                "Z[{:?}, {:?}] ≠ 0 but h differ by {} (mod 1); {} such entries",
                md.weights().members()[i],
                md.weights().members()[j],
                frac(md.h(i) - md.h(j)),
                bad.len()
            ),
        },
    );
    r
}

/// `Z = Σ_i b_i b_iᵀ` over the given branching vectors.
pub fn invariant_from_branching(branchings: &[Spectrum], ambient: &WeightSet) -> Result<MassMatrix> {
    if branchings.is_empty() {
        return Err(Error::invalid("no branching vectors given"));
    }
    if branchings[0].vacuum_mult() == 0 {
        return Err(Error::invalid("the first branching must contain the vacuum"));
    }
    let n = ambient.len();
    let mut z = vec![0u32; n * n];
    for b in branchings {
        if b.rank() != ambient.rank() || b.level() != ambient.level() {
            return Err(Error::invalid("branching over a different alcove"));
        }
        let idx: Vec<(usize, u32)> = b
            .iter()
            .map(|(w, m)| (ambient.index_of(w).expect("weight in alcove"), m))
            .collect();
        for &(i, a) in &idx {
            for &(j, c) in &idx {
                z[i * n + j] += a * c;
            }
        }
    }
    MassMatrix::new(ambient.clone(), z)
}

/// All `Z` with entries in `[0, entry_bound]`, `Z₀₀ = 1`, support on
/// `h_λ ≡ h_μ (mod 1)` and `ZS = SZ`, in canonical order.
pub fn commutant_search(md: &ModularData, entry_bound: u32) -> Result<Vec<MassMatrix>> {
    let n = md.len();
    if n > COMMUTANT_SEARCH_LIMIT {
        return Err(Error::Scale {
            sectors: n,
            limit: COMMUTANT_SEARCH_LIMIT,
        });
    }
    if entry_bound == 0 {
        return Err(Error::invalid("entry bound must be at least 1"));
    }
    let h = md.h_values();
    let mut var = vec![usize::MAX; n * n];
    let mut cells = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if (h[i] - h[j]).is_integer() {
                var[i * n + j] = cells.len();
                cells.push((i, j));
            }
        }
    }
    let u = cells.len();
    let s = md.s_matrix();
    let mut rows = Vec::with_capacity(2 * n * n + 1);
    let mut unit = vec![0.0; u];
    unit[var[0]] = 1.0;
    rows.push((unit, 1.0));
    // (ZS − SZ)_{αβ} = Σ_μ Z_{αμ} S_{μβ} − Σ_μ S_{αμ} Z_{μβ}
    for alpha in 0..n {
        for beta in 0..n {
            let mut re = vec![0.0; u];
            let mut im = vec![0.0; u];
            for mu in 0..n {
                let v = var[alpha * n + mu];
                if v != usize::MAX {
                    re[v] += s[mu * n + beta].re;
                    im[v] += s[mu * n + beta].im;
                }
                let v = var[mu * n + beta];
                if v != usize::MAX {
                    re[v] -= s[alpha * n + mu].re;
                    im[v] -= s[alpha * n + mu].im;
                }
            }
            rows.push((re, 0.0));
            rows.push((im, 0.0));
        }
    }
    let ech = Echelon::reduce(u, rows)?;
    let points = ech.bounded_integer_points(&vec![entry_bound; u], SEARCH_SOLUTION_LIMIT)?;
    let mut found = Vec::new();
    for p in points {
        let mut z = vec![0u32; n * n];
        for (v, &(i, j)) in cells.iter().enumerate() {
            z[i * n + j] = p[v];
        }
        if commutation_residual(&z, s, n) < COMMUTATION_TOL {
            found.push(MassMatrix::new(md.weights().clone(), z)?);
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

/// Weight-one dimension of an extension with the given vacuum branching:
/// `N² − 1` from the currents plus `Σ m_λ dim λ` over members with `h = 1`.
pub fn weight_one_dimension(vacuum: &Spectrum) -> u64 {
    let n = u64::from(vacuum.rank());
    let one = Rational::from_integer(1);
    n * n - 1
        + vacuum
            .iter()
            .filter(|(w, _)| w.conformal_weight().exact == one)
            .map(|(w, m)| u64::from(m) * weyl_dimension(w) as u64)
            .sum::<u64>()
}

/// A vacuum row found by [`branching_search`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionCandidate {
    pub vacuum: Spectrum,
    pub index: f64,
    /// Branching of every target sector, when `v·S` decomposes uniquely.
    pub branching: Option<Vec<Spectrum>>,
}

/// Vacuum rows `v` (with `v₀ = 1`, conjugation-symmetric, integer-h
/// support, entries ≤ `bound`) of a conformal inclusion into `target`.
///
/// Candidates satisfy `Σ v_λ d_λ = √(μ_A/μ_H)`, and `(v·S)_μ · √μ_H` must be
/// a nonnegative integer combination of the quantum dimensions of the target
/// sectors whose `h` agrees with `h_μ` mod 1 (the vacuum column being the
/// target vacuum alone). The weight-one space must also match the
/// dimension of the target Lie algebra.
pub fn branching_search(
    md: &ModularData,
    target: &Level1Algebra,
    bound: u32,
) -> Result<Vec<ExtensionCandidate>> {
    if md.central_charge() != target.central_charge() {
        return Err(Error::HypothesisViolation(format!(
            "central charges differ: SU({})_{} has {}, {} has {}",
            md.rank(),
            md.level(),
            md.central_charge(),
            target.display_name(),
            target.central_charge()
        )));
    }
    let mu_h = target.global_dimension();
    let index = libm::sqrt(md.global_dimension() / mu_h);

    // Conjugation orbits of nonvacuum integer-h weights, heaviest first.
    let mut items: Vec<(Vec<usize>, f64)> = Vec::new();
    for i in 1..md.len() {
        let c = md.conj(i);
        if c < i || !md.h(i).is_integer() {
            continue;
        }
        let orbit = if c == i { vec![i] } else { vec![i, c] };
        let weight = md.dim(i) * orbit.len() as f64;
        items.push((orbit, weight));
    }
    items.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut suffix = vec![0.0; items.len() + 1];
    for k in (0..items.len()).rev() {
        suffix[k] = suffix[k + 1] + items[k].1 * f64::from(bound);
    }

    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut chosen = vec![0u32; items.len()];
    knapsack(&items, &suffix, bound, 0, index - 1.0, &mut chosen, &mut rows)?;

    let mut out = Vec::new();
    for row in rows {
        let mut v = vec![0u32; md.len()];
        v[0] = 1;
        for (k, &m) in row.iter().enumerate() {
            for &i in &items[k].0 {
                v[i] = m;
            }
        }
        if let Some(cand) = test_vacuum_row(md, target, &v, index)? {
            out.push(cand);
        }
    }
    Ok(out)
}

fn knapsack(
    items: &[(Vec<usize>, f64)],
    suffix: &[f64],
    bound: u32,
    k: usize,
    remaining: f64,
    chosen: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) -> Result<()> {
    if remaining.abs() < MATCH_TOL {
        if out.len() == SEARCH_SOLUTION_LIMIT {
            return Err(Error::Search(format!(
                "more than {SEARCH_SOLUTION_LIMIT} vacuum rows match the index; lower the bound"
            )));
        }
        let mut row = chosen.clone();
        for x in row.iter_mut().skip(k) {
            *x = 0;
        }
        out.push(row);
        return Ok(());
    }
    if k == items.len() || remaining < 0.0 || suffix[k] < remaining - MATCH_TOL {
        return Ok(());
    }
    let w = items[k].1;
    for m in (0..=bound).rev() {
        let rest = remaining - w * f64::from(m);
        if rest < -MATCH_TOL {
            continue;
        }
        chosen[k] = m;
        knapsack(items, suffix, bound, k + 1, rest, chosen, out)?;
    }
    chosen[k] = 0;
    Ok(())
}

/// Nonnegative integer vectors `n` over `sectors` with `Σ d_i n_i = value`.
fn decompositions(value: f64, sectors: &[usize], dims: &[f64]) -> Vec<Vec<(usize, u32)>> {
    fn go(
        value: f64,
        sectors: &[usize],
        dims: &[f64],
        acc: &mut Vec<(usize, u32)>,
        out: &mut Vec<Vec<(usize, u32)>>,
    ) {
        if out.len() > 16 {
            return;
        }
        let Some((&first, rest)) = sectors.split_first() else {
            if value.abs() < MATCH_TOL {
                out.push(acc.clone());
            }
            return;
        };
        let d = dims[first];
        let mut n = 0u32;
        while value - d * f64::from(n) > -MATCH_TOL {
            if n > 0 {
                acc.push((first, n));
            }
            go(value - d * f64::from(n), rest, dims, acc, out);
            if n > 0 {
                acc.pop();
            }
            n += 1;
        }
    }
    let mut out = Vec::new();
    go(value, sectors, dims, &mut Vec::new(), &mut out);
    out
}

fn test_vacuum_row(
    md: &ModularData,
    target: &Level1Algebra,
    v: &[u32],
    index: f64,
) -> Result<Option<ExtensionCandidate>> {
    let n = md.len();
    let hs = target.h_values();
    let scale = libm::sqrt(target.global_dimension());
    let support: Vec<usize> = (0..n).filter(|&i| v[i] > 0).collect();
    let mut columns: Vec<Vec<(usize, u32)>> = Vec::with_capacity(n);
    let mut unique = true;
    for mu in 0..n {
        let mut u = C64::ZERO;
        for &l in &support {
            u += md.s(l, mu).scale(f64::from(v[l]));
        }
        let u = u.scale(scale);
        if u.im.abs() > MATCH_TOL || u.re < -MATCH_TOL {
            return Ok(None);
        }
        let sectors: Vec<usize> = (0..hs.len())
            .filter(|&i| (hs[i] - md.h(mu)).is_integer())
            .collect();
        let mut reps = decompositions(u.re, &sectors, target.quantum_dims());
        if mu == 0 {
            reps.retain(|r| r.as_slice() == [(0, 1)]);
        }
        match reps.len() {
            0 => return Ok(None),
            1 => columns.push(reps.swap_remove(0)),
            _ => {
                unique = false;
                columns.push(Vec::new());
            }
        }
    }
    let ws = md.weights();
    let mut vacuum = Spectrum::new(ws.rank(), ws.level());
    for &l in &support {
        vacuum.add(ws.members()[l].clone(), v[l])?;
    }
    if weight_one_dimension(&vacuum) != u64::from(target.lie_dimension()) {
        return Ok(None);
    }
    let branching = if unique {
        let mut b: Vec<Spectrum> = (0..hs.len()).map(|_| Spectrum::new(ws.rank(), ws.level())).collect();
        for (mu, col) in columns.iter().enumerate() {
            for &(i, m) in col {
                b[i].add(ws.members()[mu].clone(), m)?;
            }
        }
        if b[0] != vacuum || !branching_intertwines(md, target, &b) {
            return Ok(None);
        }
        Some(b)
    } else {
        None
    };
    Ok(Some(ExtensionCandidate {
        vacuum,
        index,
        branching,
    }))
}

/// `‖B S_A − S_H B‖_max < COMMUTATION_TOL`, with `B` the branching matrix.
pub fn branching_intertwines(md: &ModularData, target: &Level1Algebra, b: &[Spectrum]) -> bool {
    branching_residual(md, target, b).is_some_and(|r| r < COMMUTATION_TOL)
}

pub fn branching_residual(md: &ModularData, target: &Level1Algebra, b: &[Spectrum]) -> Option<f64> {
    let n = md.len();
    let t = target.sector_count();
    if b.len() != t {
        return None;
    }
    let mut mat = vec![0u32; t * n];
    for (i, spec) in b.iter().enumerate() {
        for (w, m) in spec.iter() {
            mat[i * n + md.index_of(w)?] = m;
        }
    }
    let mut worst = 0.0f64;
    for i in 0..t {
        for mu in 0..n {
            let mut acc = C64::ZERO;
            for l in 0..n {
                let m = mat[i * n + l];
                if m != 0 {
                    acc += md.s(l, mu).scale(f64::from(m));
                }
            }
            for j in 0..t {
                let m = mat[j * n + mu];
                if m != 0 {
                    acc = acc - target.s(i, j).scale(f64::from(m));
                }
            }
            worst = worst.max(acc.abs());
        }
    }
    Some(worst)
}

/// Level-rank invariant on SU(N)_M × SU(M)_N: `Z = Σ_a b_a b_aᵀ` over the NM
/// sectors of SU(NM)₁, checked against `S ⊗ S'` and the product twists.
pub fn verify_levelrank_invariant(n: u32, m: u32, opts: &BuildOptions) -> Result<Report> {
    let a = build_modular_data_with(n, m, opts)?;
    let b = build_modular_data_with(m, n, opts)?;
    let (na, nb) = (a.len(), b.len());
    let size = na * nb;
    let mut branches: Vec<Vec<usize>> = Vec::new();
    for sector in 0..n * m {
        let pairs = sector_branching(n, m, sector)?;
        let idx = pairs
            .iter()
            .map(|(x, y)| a.index_of(x).unwrap() * nb + b.index_of(y).unwrap())
            .collect();
        branches.push(idx);
    }
    let mut z = vec![0u32; size * size];
    for br in &branches {
        for &i in br {
            for &j in br {
                z[i * size + j] += 1;
            }
        }
    }
    let s: Vec<C64> = (0..size)
        .flat_map(|i| {
            let (a, b) = (&a, &b);
            (0..size).map(move |j| a.s(i / nb, j / nb) * b.s(i % nb, j % nb))
        })
        .collect();
    let h: Vec<Rational> = (0..size).map(|i| a.h(i / nb) + b.h(i % nb)).collect();
    let mut r = Report::new();
    let covered: usize = branches.iter().map(Vec::len).sum();
    let mut seen = vec![0u32; size];
    for br in &branches {
        for &i in br {
            seen[i] += 1;
        }
    }
    // Fixed points of the simple currents put one product sector into
    // several level-1 sectors, so only coverage is reported here.
    r.push(
        "levelrank_branching_nonempty",
        branches.iter().all(|b| !b.is_empty()),
        format!(
            "{covered} branching terms over {} level-1 sectors, {} product sectors reached",
            branches.len(),
            seen.iter().filter(|&&c| c > 0).count()
        ),
    );
    r.push("vacuum_normalized", z[0] == 1, format!("Z₀₀ = {}", z[0]));
    let res = commutation_residual(&z, &s, size);
    r.push(
        "s_commutation",
        res < COMMUTATION_TOL,
        format!("‖ZS − SZ‖_max = {res:.3e} on {size} product sectors"),
    );
    let bad = t_violations(&z, &h, size);
    r.push("t_commutation", bad.is_empty(), format!("{} h-incongruent entries", bad.len()));
    Ok(r)
}

/// Group invariants by their vacuum rows.
pub fn vacuum_rows(invariants: &[MassMatrix]) -> BTreeMap<Vec<u32>, usize> {
    let mut out = BTreeMap::new();
    for z in invariants {
        let row: Vec<u32> = (0..z.len()).map(|j| z.get(0, j)).collect();
        *out.entry(row).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::build_modular_data;
    use crate::weights::alcove_weights;

    fn su2(k: u32) -> ModularData {
        build_modular_data(2, k, 106).unwrap()
    }

    fn e6_matrix() -> MassMatrix {
        let ws = alcove_weights(2, 10).unwrap();
        let mut z = MassMatrix::new(ws, vec![0; 121]).unwrap();
        for block in [[0usize, 6], [3, 7], [4, 10]] {
            for &i in &block {
                for &j in &block {
                    z.set(i, j, 1);
                }
            }
        }
        z
    }

    #[test]
    fn identity_and_e6_are_invariants() {
        let md = su2(10);
        assert!(verify_invariant(&MassMatrix::identity(md.weights().clone()), &md).passed());
        let r = verify_invariant(&e6_matrix(), &md);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn incongruent_entry_fails_t() {
        let md = su2(10);
        let mut z = MassMatrix::identity(md.weights().clone());
        z.set(0, 1, 1);
        let r = verify_invariant(&z, &md);
        assert!(!r.get("t_commutation").unwrap().pass);
    }

    #[test]
    fn su2_level2_has_only_the_diagonal() {
        let found = commutant_search(&su2(2), 1).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].is_identity());
    }

    #[test]
    fn su2_level10_has_three_invariants() {
        let md = su2(10);
        let found = commutant_search(&md, DEFAULT_ENTRY_BOUND).unwrap();
        assert_eq!(found.len(), 3, "{found:?}");
        assert!(found.contains(&e6_matrix()));
        assert!(found.iter().any(MassMatrix::is_identity));
        for z in &found {
            assert!(verify_invariant(z, &md).passed());
            assert!(z.is_symmetric());
        }
    }

    #[test]
    fn spin5_branching_gives_e6() {
        let md = su2(10);
        let b2 = Level1Algebra::spin(5).unwrap();
        let found = branching_search(&md, &b2, DEFAULT_ENTRY_BOUND).unwrap();
        assert_eq!(found.len(), 1, "{found:?}");
        let cand = &found[0];
        let labels: Vec<u32> = cand.vacuum.support().map(|w| w.labels()[0]).collect();
        assert_eq!(labels, [0, 6]);
        assert!((cand.index - (3.0 + libm::sqrt(3.0))).abs() < 1e-10);
        let b = cand.branching.as_ref().unwrap();
        let z = invariant_from_branching(b, md.weights()).unwrap();
        assert_eq!(z, e6_matrix());
        let v: Vec<u32> = b[1].support().map(|w| w.labels()[0]).collect();
        assert_eq!(v, [4, 10]);
    }

    #[test]
    fn single_vacuum_branch_gives_unit_entry() {
        let ws = alcove_weights(2, 3).unwrap();
        let z = invariant_from_branching(&[Spectrum::vacuum(2, 3).unwrap()], &ws).unwrap();
        assert_eq!(z.get(0, 0), 1);
        assert_eq!(z.rows().concat().iter().sum::<u32>(), 1);
        assert!(invariant_from_branching(&[], &ws).is_err());
    }

    #[test]
    fn search_guard() {
        let md = build_modular_data(3, 10, 53).unwrap();
        assert!(matches!(commutant_search(&md, 2), Err(Error::Scale { .. })));
    }

    #[test]
    fn levelrank_product_invariant() {
        for (n, m) in [(2, 3), (2, 4), (3, 3)] {
            let r = verify_levelrank_invariant(n, m, &BuildOptions::default()).unwrap();
            assert!(r.passed(), "({n},{m}) {r:?}");
        }
    }

    #[test]
    fn decomposes_into_target_dimensions() {
        let dims = [1.0, 1.0, libm::sqrt(2.0)];
        assert_eq!(decompositions(1.0 + libm::sqrt(2.0), &[0, 2], &dims), vec![vec![(0, 1), (2, 1)]]);
        assert!(decompositions(0.5, &[0, 1, 2], &dims).is_empty());
        assert_eq!(decompositions(2.0, &[0, 1], &dims).len(), 3);
    }
}
