//! Level-rank pairing inside SU(NM)_1 ⊃ SU(N)_M × SU(M)_N.
//!
//! The vacuum of SU(NM)_1 branches as `Σ_{λ ∈ exp} (λ, λ̃)` where `exp` is
//! the set of root-lattice weights of SU(N)_M and `λ̃` is a simple-current
//! twist of the transposed diagram. The twist is the one making
//! `h(λ) + h(λ̃)` an integer; when several twists qualify (simple-current
//! fixed orbits of the transpose) the box-count rule `t ≡ −|λ|/N (mod M)`
//! decides, and the rule is cross-checked against every unique scan.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::modular::{build_modular_data_with, fusion_coefficient, BuildOptions, ModularData};
use crate::report::Report;
use crate::weights::{alcove_weights, AffineWeight, WeightSet};
use crate::{frac, Error, Rational, Result};

/// Tolerance for quantum-dimension and Hopf-link comparisons.
pub const PAIRING_TOL: f64 = 1e-8;

/// Transpose the Young diagram of an SU(N)_M weight, delete columns of
/// height M, and read the result as an SU(M)_N weight.
pub fn transpose(w: &AffineWeight) -> AffineWeight {
    let rows = w.rows();
    let width = rows.first().copied().unwrap_or(0);
    let columns: Vec<u32> = (0..width)
        .map(|j| rows.iter().filter(|&&r| r > j).count() as u32)
        .collect();
    AffineWeight::from_rows(w.level(), w.rank(), &columns)
        .expect("transposed diagram fits the dual alcove")
}

/// Outcome of the twist scan for one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub partner: AffineWeight,
    /// Distinct twists of the transpose with integral `h(λ) + h(λ̃)`.
    pub integral_candidates: usize,
    /// The box-count rule was needed to choose among several candidates.
    pub resolved_by_rule: bool,
}

fn rule_twist(w: &AffineWeight) -> i64 {
    let n = u64::from(w.rank());
    let boxes = w.box_count();
    debug_assert_eq!(boxes % n, 0);
    -((boxes / n) as i64)
}

/// The partner `(1, λ)` of a root-lattice weight `λ` of SU(N)_M, in SU(M)_N.
pub fn mirror_pair(w: &AffineWeight) -> Result<AffineWeight> {
    mirror_pair_detailed(w).map(|p| p.partner)
}

pub fn mirror_pair_detailed(w: &AffineWeight) -> Result<Pairing> {
    if w.rank() < 2 || w.level() < 2 {
        return Err(Error::invalid(format!(
            "level-rank pairing needs N, M ≥ 2, got SU({})_{}",
            w.rank(),
            w.level()
        )));
    }
    if !w.in_root_lattice() {
        return Err(Error::HypothesisViolation(format!(
            "{w:?} is not in the root lattice, so it does not occur in the vacuum branching"
        )));
    }
    let m = i64::from(w.level());
    let h = w.conformal_weight().exact;
    let tr = transpose(w);
    let mut candidates: Vec<AffineWeight> = (0..m)
        .map(|t| tr.simple_current(t))
        .filter(|c| (h + c.conformal_weight().exact).is_integer())
        .collect();
    candidates.sort();
    candidates.dedup();
    let by_rule = tr.simple_current(rule_twist(w));
    let ambiguity = |count| Error::PairingAmbiguity {
        weight: w.labels().to_vec(),
        candidates: count,
    };
    match candidates.len() {
        0 => Err(ambiguity(0)),
        1 if candidates[0] == by_rule => Ok(Pairing {
            partner: by_rule,
            integral_candidates: 1,
            resolved_by_rule: false,
        }),
        1 => Err(ambiguity(1)),
        count if candidates.contains(&by_rule) => Ok(Pairing {
            partner: by_rule,
            integral_candidates: count,
            resolved_by_rule: true,
        }),
        count => Err(ambiguity(count)),
    }
}

/// Weights of SU(N)_M occurring in sector `a` of SU(NM)_1, each paired with
/// its SU(M)_N partner `σ^{(a − |λ|)/N}(λᵗ)`; the pairs satisfy
/// `h(λ) + h(λ̃) ≡ a(NM − a)/(2NM) (mod 1)`, which is verified.
pub fn sector_branching(n: u32, m: u32, a: u32) -> Result<Vec<(AffineWeight, AffineWeight)>> {
    if n < 2 || m < 2 {
        return Err(Error::invalid("level-rank needs N, M ≥ 2"));
    }
    let nm = i64::from(n * m);
    let a = i64::from(a) % nm;
    let target = frac(Rational::new(a * (nm - a), 2 * nm));
    let mut out = Vec::new();
    for w in alcove_weights(n, m)?.iter() {
        let boxes = w.box_count() as i64;
        if (boxes - a).rem_euclid(i64::from(n)) != 0 {
            continue;
        }
        let t = (a - boxes).div_euclid(i64::from(n));
        let partner = transpose(w).simple_current(t);
        let total = w.conformal_weight().exact + partner.conformal_weight().exact;
        if frac(total) != target {
            return Err(Error::PairingAmbiguity {
                weight: w.labels().to_vec(),
                candidates: 0,
            });
        }
        out.push((w.clone(), partner));
    }
    Ok(out)
}

/// The exp set of SU(N)_M ⊂ SU(NM)_1 with its level-rank pairing.
#[derive(Debug, Clone)]
pub struct ExpSet {
    ambient: WeightSet,
    members: Vec<AffineWeight>,
    pairing: Vec<Pairing>,
}

impl ExpSet {
    pub fn rank(&self) -> u32 {
        self.ambient.rank()
    }

    pub fn level(&self) -> u32 {
        self.ambient.level()
    }

    pub fn ambient(&self) -> &WeightSet {
        &self.ambient
    }

    pub fn members(&self) -> &[AffineWeight] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &AffineWeight) -> bool {
        self.members.binary_search(w).is_ok()
    }

    pub fn partner(&self, w: &AffineWeight) -> Option<&AffineWeight> {
        let i = self.members.binary_search(w).ok()?;
        Some(&self.pairing[i].partner)
    }

    pub fn pairings(&self) -> &[Pairing] {
        &self.pairing
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&AffineWeight, &AffineWeight)> {
        self.members.iter().zip(self.pairing.iter().map(|p| &p.partner))
    }

    /// Members whose twist had to be chosen by the box-count rule.
    pub fn rule_resolved(&self) -> impl Iterator<Item = &AffineWeight> {
        self.members
            .iter()
            .zip(&self.pairing)
            .filter(|(_, p)| p.resolved_by_rule)
            .map(|(w, _)| w)
    }
}

pub fn exp_set_levelrank(n: u32, m: u32) -> Result<ExpSet> {
    if n < 2 || m < 2 {
        return Err(Error::invalid(format!(
            "level-rank exp set needs N, M ≥ 2 (got N = {n}, M = {m})"
        )));
    }
    let ambient = alcove_weights(n, m)?;
    let members: Vec<AffineWeight> = ambient.iter().filter(|w| w.in_root_lattice()).cloned().collect();
    let pairing = members.iter().map(mirror_pair_detailed).collect::<Result<Vec<_>>>()?;
    let mut seen: Vec<&AffineWeight> = pairing.iter().map(|p| &p.partner).collect();
    seen.sort();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::PairingAmbiguity {
            weight: Vec::new(),
            candidates: members.len(),
        });
    }
    Ok(ExpSet {
        ambient,
        members,
        pairing,
    })
}

/// An exp set together with modular data for both factors, built at the
/// same working precision.
#[derive(Debug, Clone)]
pub struct LevelRankContext {
    pub exp: ExpSet,
    /// SU(N)_M
    pub a_side: ModularData,
    /// SU(M)_N
    pub b_side: ModularData,
}

impl LevelRankContext {
    pub fn new(n: u32, m: u32, opts: &BuildOptions) -> Result<Self> {
        let exp = exp_set_levelrank(n, m)?;
        let a_side = build_modular_data_with(n, m, opts)?;
        let b_side = build_modular_data_with(m, n, opts)?;
        Ok(LevelRankContext { exp, a_side, b_side })
    }

    fn indices(&self) -> Vec<(usize, usize)> {
        self.exp
            .pairs()
            .map(|(w, p)| {
                (
                    self.a_side.index_of(w).expect("member of the alcove"),
                    self.b_side.index_of(p).expect("partner in the dual alcove"),
                )
            })
            .collect()
    }
}

fn list_offenders(offenders: &[String]) -> String {
    let shown: Vec<&str> = offenders.iter().take(5).map(String::as_str).collect();
    let mut s = shown.join("; ");
    if offenders.len() > 5 {
        s.push_str(&format!("; … {} more", offenders.len() - 5));
    }
    s
}

/// Closure of exp under fusion, equality of fusion coefficients across the
/// pairing, and preservation of quantum dimensions.
pub fn verify_ring_isomorphism(ctx: &LevelRankContext) -> Result<Report> {
    let idx = ctx.indices();
    let in_exp: Vec<bool> = ctx.a_side.weights().iter().map(|w| ctx.exp.contains(w)).collect();
    let mut closure = Vec::new();
    let mut mismatch = Vec::new();
    let mut checked = 0usize;
    for &(a, pa) in &idx {
        for &(b, pb) in &idx {
            for (c, &member) in in_exp.iter().enumerate() {
                if !member && fusion_coefficient(&ctx.a_side, a, b, c)? != 0 {
                    closure.push(format!("{a}⊗{b}∋{c}"));
                }
            }
            for &(c, pc) in &idx {
                let lhs = fusion_coefficient(&ctx.a_side, a, b, c)?;
                let rhs = fusion_coefficient(&ctx.b_side, pa, pb, pc)?;
                checked += 1;
                if lhs != rhs {
                    mismatch.push(format!("N[{a},{b};{c}] = {lhs} ≠ {rhs}"));
                }
            }
        }
    }
    let dim_err = idx
        .iter()
        .map(|&(a, pa)| (ctx.a_side.dim(a) - ctx.b_side.dim(pa)).abs())
        .fold(0.0, f64::max);

    let mut r = Report::new();
    r.push(
        "exp_closed_under_fusion",
        closure.is_empty(),
        if closure.is_empty() {
            format!("{} members, products stay in exp", idx.len())
        } else {
            list_offenders(&closure)
        },
    );
    r.push(
        "fusion_matches_across_pairing",
        mismatch.is_empty(),
        if mismatch.is_empty() {
            format!("{checked} triples agree")
        } else {
            list_offenders(&mismatch)
        },
    );
    r.push(
        "quantum_dimension_preserved",
        dim_err < PAIRING_TOL,
        format!("max |d(λ) − d(λ̃)| = {dim_err:.3e}"),
    );
    Ok(r)
}

/// Twist conjugation `θ(λ̃) = θ(λ)*` (exact) and Hopf-link conjugation
/// `S'_{λ̃μ̃}/S'_{00} = (S_{λμ}/S_{00})*` within [`PAIRING_TOL`].
pub fn verify_mirror_conjugation(ctx: &LevelRankContext) -> Report {
    let idx = ctx.indices();
    let twist_bad: Vec<String> = ctx
        .exp
        .pairs()
        .filter(|(w, p)| !(w.conformal_weight().exact + p.conformal_weight().exact).is_integer())
        .map(|(w, p)| format!("{w:?}↔{p:?}"))
        .collect();

    let mut hopf_err = 0.0f64;
    let mut phases = Vec::new();
    for &(a, pa) in &idx {
        for &(b, pb) in &idx {
            let x = ctx.a_side.hopf(a, b).conj();
            let y = ctx.b_side.hopf(pa, pb);
            hopf_err = hopf_err.max((y - x).abs());
            if x.abs() > 1e-6 {
                phases.push(y / x);
            }
        }
    }

    let mut r = Report::new();
    r.push(
        "twist_conjugation",
        twist_bad.is_empty(),
        if twist_bad.is_empty() {
            format!("h(λ) + h(λ̃) ∈ ℤ for all {} members", idx.len())
        } else {
            list_offenders(&twist_bad)
        },
    );
    let hopf_ok = hopf_err < PAIRING_TOL;
    r.push(
        "hopf_conjugation",
        hopf_ok,
        format!("max |S'/S'₀₀ − conj(S/S₀₀)| = {hopf_err:.3e}"),
    );
    if !hopf_ok {
        // Distinguish a global phase from a genuine mismatch.
        if let Some(&first) = phases.first() {
            let spread = phases.iter().map(|&p| (p - first).abs()).fold(0.0, f64::max);
            let unimodular = (first.abs() - 1.0).abs() < PAIRING_TOL;
            r.push(
                "hopf_global_phase",
                false,
                format!(
                    "ratio {:.12}{:+.12}i, spread {spread:.3e}, unimodular {unimodular}",
                    first.re, first.im
                ),
            );
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(n: u32, k: u32, labels: &[u32]) -> AffineWeight {
        AffineWeight::new(n, k, labels.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose(&w(2, 10, &[0])), w(10, 2, &[0; 9]));
        assert_eq!(transpose(&w(2, 10, &[6])), w(10, 2, &[0, 0, 0, 0, 0, 1, 0, 0, 0]));
        // rows (4,2) → rows (2,2,1,1)
        let t = transpose(&w(3, 5, &[2, 2]));
        assert_eq!(t, AffineWeight::from_rows(5, 3, &[2, 2, 1, 1]).unwrap());
        assert_eq!(t.labels(), &[0, 1, 0, 1]);
    }

    #[test]
    fn transpose_is_involutive_off_the_wall() {
        for (n, m) in [(2, 10), (3, 5), (4, 3), (3, 3)] {
            for x in alcove_weights(n, m).unwrap().iter() {
                let back = transpose(&transpose(x));
                if x.zeroth_label() > 0 {
                    assert_eq!(&back, x);
                } else {
                    // Weights on the a₀ = 0 wall lose their full first row;
                    // they come back up to a simple current.
                    assert!((0..i64::from(n)).any(|t| &back.simple_current(t) == x), "{x:?}");
                }
            }
        }
    }

    #[test]
    fn pairs_spin3_with_lambda3_plus_lambda7() {
        assert_eq!(mirror_pair(&w(2, 10, &[0])).unwrap(), w(10, 2, &[0; 9]));
        let p = mirror_pair_detailed(&w(2, 10, &[6])).unwrap();
        assert_eq!(p.partner, w(10, 2, &[0, 0, 1, 0, 0, 0, 1, 0, 0]));
        assert_eq!(p.integral_candidates, 1);
        assert!(!p.resolved_by_rule);
    }

    #[test]
    fn label_two_regression() {
        // Unique integral twist of Λ2 in SU(10)_2: affine support {0,2} → {9,1}.
        let p = mirror_pair_detailed(&w(2, 10, &[2])).unwrap();
        assert_eq!(p.partner, w(10, 2, &[1, 0, 0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(p.integral_candidates, 1);
    }

    #[test]
    fn fixed_orbits_are_resolved_by_rule() {
        // In SU(3)_3 the vacuum transposes to the vacuum, whose whole
        // simple-current orbit has integral h.
        let p = mirror_pair_detailed(&w(3, 3, &[0, 0])).unwrap();
        assert_eq!(p.partner, w(3, 3, &[0, 0]));
        assert_eq!(p.integral_candidates, 3);
        assert!(p.resolved_by_rule);
        assert_eq!(mirror_pair(&w(3, 3, &[3, 0])).unwrap(), w(3, 3, &[0, 3]));
        assert_eq!(mirror_pair(&w(3, 3, &[0, 3])).unwrap(), w(3, 3, &[3, 0]));
    }

    #[test]
    fn rejects_weights_outside_exp() {
        assert!(matches!(
            mirror_pair(&w(2, 10, &[3])),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(exp_set_levelrank(1, 4).is_err());
        assert!(exp_set_levelrank(3, 1).is_err());
    }

    #[test]
    fn exp_set_examples() {
        let e = exp_set_levelrank(2, 10).unwrap();
        let labels: Vec<u32> = e.members().iter().map(|x| x.labels()[0]).collect();
        assert_eq!(labels, [0, 2, 4, 6, 8, 10]);
        let e = exp_set_levelrank(3, 3).unwrap();
        for x in e.members() {
            assert_eq!((x.labels()[0] + 2 * x.labels()[1]) % 3, 0);
        }
        assert_eq!(e.len(), 4);
        assert!(e.members()[0].is_vacuum());
        assert!(e.partner(&e.members()[0]).unwrap().is_vacuum());
    }

    #[test]
    fn sector_branching_covers_alcove_once() {
        for (n, m) in [(2, 3), (2, 4), (3, 3), (3, 4)] {
            let mut total = 0;
            for a in 0..n * m {
                total += sector_branching(n, m, a).unwrap().len();
            }
            // Each SU(N)_M weight appears in M of the NM sectors.
            assert_eq!(total, alcove_weights(n, m).unwrap().len() * m as usize);
        }
        let vac = sector_branching(2, 10, 0).unwrap();
        let e = exp_set_levelrank(2, 10).unwrap();
        assert_eq!(vac.len(), e.len());
        for (x, p) in vac {
            assert_eq!(e.partner(&x), Some(&p));
        }
    }

    #[test]
    fn ring_isomorphism_and_conjugation_su2_level10() {
        let ctx = LevelRankContext::new(2, 10, &BuildOptions::default()).unwrap();
        let r = verify_ring_isomorphism(&ctx).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = verify_mirror_conjugation(&ctx);
        assert!(r.passed(), "{r:?}");
        let six = ctx.a_side.weights().index_of_labels(&[6]).unwrap();
        let partner = ctx.exp.partner(&w(2, 10, &[6])).unwrap();
        let p6 = ctx.b_side.index_of(partner).unwrap();
        let lhs = ctx.b_side.hopf(p6, p6);
        let rhs = ctx.a_side.hopf(six, six).conj();
        assert!((lhs - rhs).abs() < 1e-10);
        // vacuum row: both sides are quantum dimensions
        assert!((ctx.a_side.hopf(0, six).re - ctx.a_side.dim(six)).abs() < 1e-12);
    }

    #[test]
    fn pairing_commutes_with_conjugation() {
        for (n, m) in [(3, 3), (3, 5), (4, 3), (3, 4)] {
            let e = exp_set_levelrank(n, m).unwrap();
            for (x, p) in e.pairs() {
                assert_eq!(e.partner(&x.conjugate()), Some(&p.conjugate()), "{x:?}");
            }
        }
    }

    #[test]
    fn twist_rule_agrees_with_every_unique_scan() {
        for (n, m) in [(2, 10), (2, 7), (3, 5), (4, 3), (3, 4), (5, 2), (2, 28)] {
            let e = exp_set_levelrank(n, m).unwrap();
            // exp_set_levelrank errors if a unique scan disagreed with the rule.
            assert!(e.pairings().iter().all(|p| p.integral_candidates >= 1));
        }
        let _ = vec![0u8];
    }
}
