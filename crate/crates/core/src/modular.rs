//! S and T matrices of SU(N)_K, quantum dimensions and Verlinde fusion.
//!
//! Each S entry is a Kac-Peterson alternating sum, evaluated as an `N × N`
//! determinant of roots of unity of order `K + N` over the shifted exponents
//! of the two weights. When `K < N` the complementary `K × K` minor of the
//! same (unitary) Fourier matrix is used instead, which is the level-rank
//! identity at the level of minors. The matrix is normalised so that row 0
//! has unit norm and `S₀₀ > 0`; unitarity and the modular relations are then
//! checked at working precision.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::numeric::{determinant, Complex, DoubleDouble, MpFloat, Real, C64};
use crate::report::Report;
use crate::weights::{alcove_size, alcove_weights, central_charge, AffineWeight, WeightSet};
use crate::{Error, Rational, Result};

/// Working precision used when none is requested.
pub const DEFAULT_PRECISION_BITS: u32 = 106;
pub const MIN_PRECISION_BITS: u32 = 53;
pub const DEFAULT_MAX_SECTORS: usize = 5000;
/// Largest allowed distance of a raw Verlinde sum from an integer.
pub const FUSION_INTEGRALITY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub precision_bits: u32,
    pub max_sectors: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            precision_bits: DEFAULT_PRECISION_BITS,
            max_sectors: DEFAULT_MAX_SECTORS,
        }
    }
}

impl BuildOptions {
    pub fn with_precision(precision_bits: u32) -> Self {
        BuildOptions {
            precision_bits,
            ..Self::default()
        }
    }

    /// Tolerance `10^(−bits/8)` for the self-checks run at build time.
    pub fn tolerance(&self) -> f64 {
        libm::pow(10.0, -f64::from(self.precision_bits) / 8.0)
    }
}

/// Max-norm residuals of the modular relations, measured at working precision.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Residuals {
    /// `‖S S† − I‖`
    pub unitarity: f64,
    /// `‖S − Sᵀ‖`; zero because only the upper triangle is evaluated.
    pub symmetry: f64,
    /// `‖S² − C‖`
    pub charge_conjugation: f64,
    /// `‖S T S − C T̄ S̄ T̄‖`, equivalent to `(ST)³ = S²` given the other two.
    pub modular: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        self.unitarity
            .max(self.symmetry)
            .max(self.charge_conjugation)
            .max(self.modular)
    }
}

#[derive(Debug, Clone)]
pub struct ModularData {
    weights: WeightSet,
    s: Vec<C64>,
    t: Vec<C64>,
    h: Vec<Rational>,
    c: Rational,
    dims: Vec<f64>,
    conj: Vec<usize>,
    precision_bits: u32,
    residuals: Residuals,
}

impl ModularData {
    pub fn weights(&self) -> &WeightSet {
        &self.weights
    }

    pub fn rank(&self) -> u32 {
        self.weights.rank()
    }

    pub fn level(&self) -> u32 {
        self.weights.level()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn s(&self, i: usize, j: usize) -> C64 {
        self.s[i * self.len() + j]
    }

    pub fn s_matrix(&self) -> &[C64] {
        &self.s
    }

    pub fn t(&self, i: usize) -> C64 {
        self.t[i]
    }

    pub fn t_phases(&self) -> &[C64] {
        &self.t
    }

    pub fn h(&self, i: usize) -> Rational {
        self.h[i]
    }

    pub fn h_values(&self) -> &[Rational] {
        &self.h
    }

    pub fn central_charge(&self) -> Rational {
        self.c
    }

    pub fn dim(&self, i: usize) -> f64 {
        self.dims[i]
    }

    pub fn quantum_dims(&self) -> &[f64] {
        &self.dims
    }

    pub fn conj(&self, i: usize) -> usize {
        self.conj[i]
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn residuals(&self) -> Residuals {
        self.residuals
    }

    pub fn index_of(&self, w: &AffineWeight) -> Option<usize> {
        self.weights.index_of(w)
    }

    /// Hopf-link normalised entry `S_{ij}/S₀₀`.
    pub fn hopf(&self, i: usize, j: usize) -> C64 {
        self.s(i, j).scale(1.0 / self.s(0, 0).re)
    }

    pub fn global_dimension(&self) -> f64 {
        global_dimension(self)
    }
}

pub fn build_modular_data(n: u32, k: u32, precision_bits: u32) -> Result<ModularData> {
    build_modular_data_with(n, k, &BuildOptions::with_precision(precision_bits))
}

pub fn build_modular_data_with(n: u32, k: u32, opts: &BuildOptions) -> Result<ModularData> {
    if opts.precision_bits < MIN_PRECISION_BITS {
        return Err(Error::invalid(format!(
            "precision {} bits is below the minimum of {MIN_PRECISION_BITS}",
            opts.precision_bits
        )));
    }
    if n < 2 || k < 1 {
        // alcove_weights produces the argument error
        alcove_weights(n, k)?;
    }
    let size = alcove_size(n, k);
    if size > opts.max_sectors as u128 {
        return Err(Error::Scale {
            sectors: usize::try_from(size).unwrap_or(usize::MAX),
            limit: opts.max_sectors,
        });
    }
    let weights = alcove_weights(n, k)?;
    match opts.precision_bits {
        0..=53 => build_with::<f64>(weights, opts),
        54..=106 => build_with::<DoubleDouble>(weights, opts),
        _ => build_with::<MpFloat>(weights, opts),
    }
}

struct Exponents {
    /// Shifted exponents, descending (direct route) or the ascending
    /// complement in `0..L` (complement route).
    rows: Vec<u32>,
    total: u64,
    /// Parity of the sum of the exponent set.
    parity: bool,
}

fn build_with<R: Real>(weights: WeightSet, opts: &BuildOptions) -> Result<ModularData> {
    let prec = opts.precision_bits;
    let n_rank = weights.rank() as usize;
    let level = weights.level() as usize;
    let l = n_rank + level;
    let count = weights.len();
    let complement = level < n_rank;

    let exps: Vec<Exponents> = weights
        .iter()
        .map(|w| {
            let ell = w.shifted_exponents();
            let total: u64 = ell.iter().map(|&x| u64::from(x)).sum();
            let rows = if complement {
                let mut present = vec![false; l];
                for &x in &ell {
                    present[x as usize] = true;
                }
                (0..l as u32).filter(|&x| !present[x as usize]).collect()
            } else {
                ell
            };
            Exponents {
                rows,
                total,
                parity: total % 2 == 1,
            }
        })
        .collect();

    // zeta[j] = exp(2πi j/L); prefactor[j] = exp(2πi j/(N L)).
    let zeta: Vec<Complex<R>> = (0..l)
        .map(|j| Complex::root_of_unity(j as i64, l as i64, prec))
        .collect();
    let nl = (n_rank * l) as u64;
    let prefactor: Vec<Complex<R>> = (0..nl)
        .map(|j| Complex::root_of_unity(j as i64, nl as i64, prec))
        .collect();

    let dim = exps[0].rows.len();
    let mut raw: Vec<Complex<R>> = vec![Complex::zero(prec); count * count];
    for i in 0..count {
        for j in i..count {
            let (a, b) = (&exps[i], &exps[j]);
            let mut m = Vec::with_capacity(dim * dim);
            for &x in &a.rows {
                for &y in &b.rows {
                    let z = &zeta[((x as u64 * y as u64) % l as u64) as usize];
                    m.push(if complement { z.clone() } else { z.conj() });
                }
            }
            let mut entry = determinant(m, dim, prec)
                .mul(&prefactor[((a.total * b.total) % nl) as usize]);
            if complement && (a.parity ^ b.parity) {
                entry = entry.neg();
            }
            raw[j * count + i] = entry.clone();
            raw[i * count + j] = entry;
        }
    }

    // Normalise: unit row 0 and S₀₀ > 0.
    let mut norm_sq = R::from_i64(0, prec);
    for j in 0..count {
        norm_sq = norm_sq.add(&raw[j].norm_sqr());
    }
    let norm = norm_sq.sqrt();
    let s00 = raw[0].clone();
    let s00_abs = s00.abs();
    let denom = s00_abs.mul(&norm);
    let factor = Complex::new(s00.re.div(&denom), s00.im.neg().div(&denom));
    let s: Vec<Complex<R>> = raw.iter().map(|z| z.mul(&factor)).collect();

    let h = weights.conformal_weights();
    let c = central_charge(weights.rank(), weights.level());
    let t: Vec<Complex<R>> = h
        .iter()
        .map(|&hv| {
            let q = hv - c / Rational::from_integer(24);
            Complex::root_of_unity(*q.numer(), *q.denom(), prec)
        })
        .collect();
    let conj = weights.conjugation_permutation();

    let residuals = modular_residuals(&s, &t, &conj, count, prec);
    let tol = opts.tolerance();
    if residuals.max() > tol {
        return Err(Error::Precision {
            precision_bits: prec,
            detail: format!(
                "SU({})_{} modular relations off by {:.3e} (tolerance {:.1e})",
                weights.rank(),
                weights.level(),
                residuals.max(),
                tol
            ),
        });
    }

    let s0 = s[0].re.clone();
    let mut dims = Vec::with_capacity(count);
    for (j, entry) in s.iter().take(count).enumerate() {
        let d = entry.re.div(&s0).to_f64();
        if d.is_nan() || d <= 0.0 || entry.im.abs_f64() > tol {
            return Err(Error::Precision {
                precision_bits: prec,
                detail: format!("S₀{j} is not real positive"),
            });
        }
        dims.push(d);
    }

    Ok(ModularData {
        s: s.iter().map(Complex::to_c64).collect(),
        t: t.iter().map(Complex::to_c64).collect(),
        h,
        c,
        dims,
        conj,
        precision_bits: prec,
        residuals,
        weights,
    })
}

fn modular_residuals<R: Real>(
    s: &[Complex<R>],
    t: &[Complex<R>],
    conj: &[usize],
    count: usize,
    prec: u32,
) -> Residuals {
    let mut res = Residuals::default();
    let one = Complex::<R>::one(prec);
    let mut st_row: Vec<Complex<R>> = Vec::with_capacity(count);
    for i in 0..count {
        st_row.clear();
        st_row.extend((0..count).map(|k| s[i * count + k].mul(&t[k])));
        for j in i..count {
            let mut ssd = Complex::<R>::zero(prec);
            let mut ss = Complex::<R>::zero(prec);
            let mut sts = Complex::<R>::zero(prec);
            for k in 0..count {
                let skj = &s[k * count + j];
                ssd = ssd.add(&s[i * count + k].mul(&skj.conj()));
                ss = ss.add(&s[i * count + k].mul(skj));
                sts = sts.add(&st_row[k].mul(skj));
            }
            if i == j {
                ssd = ssd.sub(&one);
            }
            if conj[i] == j {
                ss = ss.sub(&one);
            }
            let rhs = t[i].mul(&s[conj[i] * count + j]).mul(&t[j]).conj();
            sts = sts.sub(&rhs);
            res.unitarity = res.unitarity.max(ssd.abs_f64());
            res.charge_conjugation = res.charge_conjugation.max(ss.abs_f64());
            res.modular = res.modular.max(sts.abs_f64());
        }
    }
    res
}

/// `Σ d_λ²`.
pub fn global_dimension(md: &ModularData) -> f64 {
    md.quantum_dims().iter().map(|d| d * d).sum()
}

/// Quantum dimension from the Weyl product formula
/// `Π_{a<b} sin(π(ℓ_a − ℓ_b)/L) / sin(π(b − a)/L)`; needs no S matrix.
pub fn quantum_dimension(w: &AffineWeight) -> f64 {
    let ell = w.shifted_exponents();
    let l = f64::from(w.rank() + w.level());
    let pi = core::f64::consts::PI;
    let mut d = 1.0;
    for a in 0..ell.len() {
        for b in a + 1..ell.len() {
            let num = libm::sin(pi * f64::from(ell[a] - ell[b]) / l);
            let den = libm::sin(pi * (b - a) as f64 / l);
            d *= num / den;
        }
    }
    d
}

/// Dimension of the finite SU(N) representation, `Π_{a<b} (ℓ_a − ℓ_b)/(b − a)`.
pub fn weyl_dimension(w: &AffineWeight) -> f64 {
    let ell = w.shifted_exponents();
    let mut d = 1.0;
    for a in 0..ell.len() {
        for b in a + 1..ell.len() {
            d *= f64::from(ell[a] - ell[b]) / (b - a) as f64;
        }
    }
    libm::round(d)
}

/// Global dimension from the product formula over the whole alcove.
pub fn global_dimension_from_weights(ws: &WeightSet) -> f64 {
    ws.iter()
        .map(|w| {
            let d = quantum_dimension(w);
            d * d
        })
        .sum()
}

/// Verlinde coefficients `N_{λμ}^ν`, indexed against the canonical ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTensor {
    weights: WeightSet,
    coefficients: Vec<u32>,
}

impl FusionTensor {
    fn zeros(weights: WeightSet) -> Self {
        let n = weights.len();
        FusionTensor {
            weights,
            coefficients: vec![0; n * n * n],
        }
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

    pub fn get(&self, a: usize, b: usize, c: usize) -> u32 {
        let n = self.len();
        self.coefficients[(a * n + b) * n + c]
    }

    fn set(&mut self, a: usize, b: usize, c: usize, v: u32) {
        let n = self.len();
        self.coefficients[(a * n + b) * n + c] = v;
    }

    /// `(ν, N_{λμ}^ν)` for all non-zero coefficients.
    pub fn product(&self, a: usize, b: usize) -> Vec<(usize, u32)> {
        (0..self.len())
            .filter_map(|c| {
                let v = self.get(a, b, c);
                (v != 0).then_some((c, v))
            })
            .collect()
    }

    /// Unit, Frobenius symmetry and the dimension relation
    /// `Σ_ν N_{λμ}^ν d_ν = d_λ d_μ`.
    pub fn verify(&self, dims: &[f64]) -> Report {
        let n = self.len();
        let conj = self.weights.conjugation_permutation();
        let mut unit = 0usize;
        let mut frobenius = 0usize;
        let mut dim_err = 0.0f64;
        for a in 0..n {
            for b in 0..n {
                if self.get(a, 0, b) != u32::from(a == b) {
                    unit += 1;
                }
                let mut lhs = 0.0;
                for c in 0..n {
                    let v = self.get(a, b, c);
                    if v != self.get(b, a, c) || v != self.get(conj[a], c, b) {
                        frobenius += 1;
                    }
                    lhs += f64::from(v) * dims[c];
                }
                dim_err = dim_err.max((lhs - dims[a] * dims[b]).abs());
            }
        }
        let mut r = Report::new();
        r.push("fusion_unit", unit == 0, format!("{unit} violations of N_λ0^ν = δ"));
        r.push(
            "fusion_frobenius",
            frobenius == 0,
            format!("{frobenius} violations of N_λμ^ν = N_μλ^ν = N_λ̄ν^μ"),
        );
        r.push(
            "fusion_dimensions",
            dim_err < 1e-8,
            format!("max |Σ N d − d d| = {dim_err:.3e}"),
        );
        r
    }

    /// Number of entries violating `Σ_x N_{λμ}^x N_{xν}^τ = Σ_y N_{μν}^y N_{λy}^τ`.
    pub fn associativity_violations(&self) -> usize {
        let n = self.len();
        let mut bad = 0;
        for a in 0..n {
            for b in 0..n {
                let ab = self.product(a, b);
                for c in 0..n {
                    let bc = self.product(b, c);
                    for d in 0..n {
                        let lhs: u32 = ab.iter().map(|&(x, m)| m * self.get(x, c, d)).sum();
                        let rhs: u32 = bc.iter().map(|&(y, m)| m * self.get(a, y, d)).sum();
                        if lhs != rhs {
                            bad += 1;
                        }
                    }
                }
            }
        }
        bad
    }
}

fn round_fusion(raw: C64, md: &ModularData, a: usize, b: usize, c: usize) -> Result<u32> {
    let rounded = libm::round(raw.re);
    let off = (raw.re - rounded).abs().max(raw.im.abs());
    if off > FUSION_INTEGRALITY_TOL || rounded < 0.0 {
        return Err(Error::Precision {
            precision_bits: md.precision_bits(),
            detail: format!(
                "Verlinde sum N[{a},{b}→{c}] = {:.9} is {off:.2e} from a non-negative integer",
                raw.re
            ),
        });
    }
    Ok(rounded as u32)
}

/// `N_{λμ}^ν = Σ_σ S_{λσ} S_{μσ} S̄_{νσ} / S_{0σ}` for all triples.
pub fn verlinde_fusion(md: &ModularData) -> Result<FusionTensor> {
    let n = md.len();
    let mut tensor = FusionTensor::zeros(md.weights().clone());
    let inv0: Vec<C64> = (0..n).map(|s| C64::ONE / md.s(0, s)).collect();
    let mut w = vec![C64::ZERO; n];
    for a in 0..n {
        for b in a..n {
            for (s, ws) in w.iter_mut().enumerate() {
                *ws = md.s(a, s) * md.s(b, s) * inv0[s];
            }
            for c in 0..n {
                let mut acc = C64::ZERO;
                for (s, ws) in w.iter().enumerate() {
                    acc += *ws * md.s(c, s).conj();
                }
                let v = round_fusion(acc, md, a, b, c)?;
                tensor.set(a, b, c, v);
                tensor.set(b, a, c, v);
            }
        }
    }
    Ok(tensor)
}

/// A single Verlinde coefficient, for alcoves too large for the full tensor.
pub fn fusion_coefficient(md: &ModularData, a: usize, b: usize, c: usize) -> Result<u32> {
    let mut acc = C64::ZERO;
    for s in 0..md.len() {
        acc += md.s(a, s) * md.s(b, s) * md.s(c, s).conj() / md.s(0, s);
    }
    round_fusion(acc, md, a, b, c)
}

/// Closed-form SU(2)_k fusion: `N_{ab}^c = 1` iff `|a − b| ≤ c ≤ min(a + b, 2k − a − b)`
/// and `a + b + c` is even (Dynkin labels).
pub fn fusion_oracle_su2(k: u32) -> Result<FusionTensor> {
    let ws = alcove_weights(2, k)?;
    let mut tensor = FusionTensor::zeros(ws);
    for a in 0..=k {
        for b in 0..=k {
            for c in 0..=k {
                let ok = a.abs_diff(b) <= c && c <= (a + b).min(2 * k - a - b) && (a + b + c) % 2 == 0;
                tensor.set(a as usize, b as usize, c as usize, u32::from(ok));
            }
        }
    }
    Ok(tensor)
}

/// `exp(2πi h)` for an exact rational conformal weight, in double precision.
pub fn twist(h: Rational) -> C64 {
    C64::root_of_unity(*h.numer(), *h.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }

    #[test]
    fn su2_level1_s_matrix() {
        let md = build_modular_data(2, 1, 106).unwrap();
        let r = 1.0 / sqrt(2.0);
        let expected = [[r, r], [r, -r]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((md.s(i, j).re - expected[i][j]).abs() < 1e-15);
                assert!(md.s(i, j).im.abs() < 1e-15);
            }
        }
        assert!((md.global_dimension() - 2.0).abs() < 1e-14);
    }

    // Closed-form SU(2)_k: S_{ab} = sqrt(2/(k+2)) sin((a+1)(b+1)π/(k+2)).
    fn su2_closed_form(k: u32, a: usize, b: usize) -> f64 {
        let l = f64::from(k + 2);
        sqrt(2.0 / l) * libm::sin(((a + 1) * (b + 1)) as f64 * core::f64::consts::PI / l)
    }

    #[test]
    fn su2_matches_closed_form_at_every_backend() {
        for bits in [53, 106, 128] {
            for k in [1, 2, 5, 10] {
                let md = build_modular_data(2, k, bits).unwrap();
                for a in 0..=k as usize {
                    for b in 0..=k as usize {
                        let e = su2_closed_form(k, a, b);
                        assert!((md.s(a, b).re - e).abs() < 1e-13, "bits {bits} k {k}");
                        assert!(md.s(a, b).im.abs() < 1e-13);
                    }
                }
            }
        }
    }

    #[test]
    fn su2_level10_dimensions() {
        let md = build_modular_data(2, 10, 106).unwrap();
        assert!((md.dim(6) - (2.0 + sqrt(3.0))).abs() < 1e-12);
        let mu = 48.0 + 24.0 * sqrt(3.0);
        assert!((global_dimension(&md) - mu).abs() < 1e-10);
        assert!((1.0 / (md.s(0, 0).re * md.s(0, 0).re) - mu).abs() < 1e-9);
        assert!(md.residuals().max() < 1e-25);
    }

    #[test]
    fn row_zero_positive_and_dims_match_product_formula() {
        for (n, k) in [(3, 2), (3, 5), (4, 3), (5, 2), (7, 1), (10, 2)] {
            let md = build_modular_data(n, k, 106).unwrap();
            for (j, w) in md.weights().iter().enumerate() {
                assert!(md.s(0, j).re > 0.0);
                assert!((md.dim(j) - quantum_dimension(w)).abs() < 1e-10, "{w:?}");
            }
            let global = global_dimension(&md);
            assert!(global >= md.len() as f64 - 1e-9);
            assert!((global - global_dimension_from_weights(md.weights())).abs() < 1e-8);
        }
    }

    #[test]
    fn complement_route_agrees_with_direct_route() {
        for (n, k) in [(3, 2), (4, 1), (5, 3), (6, 2)] {
            let md = build_modular_data(n, k, 106).unwrap();
            let forced = direct_only(n, k);
            for i in 0..md.len() {
                for j in 0..md.len() {
                    assert!((md.s(i, j) - forced[i * md.len() + j]).abs() < 1e-12, "SU({n})_{k}");
                }
            }
        }
    }

    // Direct N×N Kac-Peterson evaluation in f64, normalised the same way.
    fn direct_only(n: u32, k: u32) -> Vec<C64> {
        let ws = alcove_weights(n, k).unwrap();
        let l = (n + k) as i64;
        let count = ws.len();
        let mut raw = vec![C64::ZERO; count * count];
        for (i, a) in ws.iter().enumerate() {
            for (j, b) in ws.iter().enumerate() {
                let (ea, eb) = (a.shifted_exponents(), b.shifted_exponents());
                let mut m = Vec::new();
                for &x in &ea {
                    for &y in &eb {
                        m.push(Complex::<f64>::root_of_unity(-(i64::from(x) * i64::from(y)), l, 53));
                    }
                }
                let d = determinant(m, n as usize, 53).to_c64();
                let ta: i64 = ea.iter().map(|&x| i64::from(x)).sum();
                let tb: i64 = eb.iter().map(|&x| i64::from(x)).sum();
                raw[i * count + j] = d * C64::root_of_unity(ta * tb, i64::from(n) * l);
            }
        }
        let norm: f64 = sqrt((0..count).map(|j| raw[j].norm_sqr()).sum());
        let ph = raw[0].conj().scale(1.0 / (raw[0].abs() * norm));
        raw.iter().map(|&z| z * ph).collect()
    }

    #[test]
    fn rejects_low_precision_and_oversized_alcoves() {
        assert!(matches!(build_modular_data(2, 3, 32), Err(Error::InvalidArgument(_))));
        let opts = BuildOptions {
            precision_bits: 106,
            max_sectors: 50,
        };
        assert!(matches!(
            build_modular_data_with(10, 2, &opts),
            Err(Error::Scale { sectors: 55, limit: 50 })
        ));
    }

    #[test]
    fn verlinde_su2_level10_examples() {
        let md = build_modular_data(2, 10, 106).unwrap();
        let f = verlinde_fusion(&md).unwrap();
        let prod: Vec<usize> = f.product(6, 6).iter().map(|&(c, _)| c).collect();
        assert_eq!(prod, [0, 2, 4, 6, 8]);
        for mu in 0..md.len() {
            for nu in 0..md.len() {
                assert_eq!(f.get(0, mu, nu), u32::from(mu == nu));
            }
        }
        assert!(f.verify(md.quantum_dims()).passed());
    }

    #[test]
    fn verlinde_su3_level2_fundamental_square() {
        let md = build_modular_data(3, 2, 106).unwrap();
        let f = verlinde_fusion(&md).unwrap();
        let ws = md.weights();
        let fund = ws.index_of_labels(&[1, 0]).unwrap();
        let mut got: Vec<&[u32]> = f
            .product(fund, fund)
            .iter()
            .map(|&(c, m)| {
                assert_eq!(m, 1);
                ws.get(c).unwrap().labels()
            })
            .collect();
        got.sort();
        assert_eq!(got, [&[0u32, 1][..], &[2, 0][..]]);
    }

    #[test]
    fn oracle_small_levels() {
        let f1 = fusion_oracle_su2(1).unwrap();
        assert_eq!(f1.product(1, 1), [(0, 1)]);
        let f2 = fusion_oracle_su2(2).unwrap();
        assert_eq!(f2.product(1, 1), [(0, 1), (2, 1)]);
        let md = build_modular_data(2, 10, 106).unwrap();
        assert_eq!(verlinde_fusion(&md).unwrap(), fusion_oracle_su2(10).unwrap());
    }

    #[test]
    fn single_coefficient_matches_tensor() {
        let md = build_modular_data(3, 3, 106).unwrap();
        let f = verlinde_fusion(&md).unwrap();
        for a in 0..md.len() {
            for b in 0..md.len() {
                for c in 0..md.len() {
                    assert_eq!(fusion_coefficient(&md, a, b, c).unwrap(), f.get(a, b, c));
                }
            }
        }
    }

    #[test]
    fn associativity_su3_level3() {
        let md = build_modular_data(3, 3, 106).unwrap();
        assert_eq!(verlinde_fusion(&md).unwrap().associativity_violations(), 0);
    }

    #[test]
    fn tolerance_scales_with_precision() {
        assert!((BuildOptions::with_precision(128).tolerance() - 1e-16).abs() < 1e-30);
        assert!(BuildOptions::with_precision(53).tolerance() > 1e-7);
    }
}
