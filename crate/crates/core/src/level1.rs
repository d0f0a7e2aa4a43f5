//! Modular data of the level-1 targets of the conformal inclusions:
//! SU(m)₁, Spin(m)₁ and the exceptional G₂, E₆, E₇, E₈ at level one.
//! Each constant is checked against Σd² = 1/S₀₀², unitarity, S² = C and
//! (ST)³ = S² before it is used.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::numeric::C64;
use crate::report::Report;
use crate::weights::ratio_to_f64;
use crate::{frac, Error, Rational, Result};

/// Tolerance for checks on the double-precision constants.
pub const LEVEL1_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Level1Algebra {
    name: String,
    display: String,
    lie_dimension: u32,
    sectors: Vec<String>,
    dims: Vec<f64>,
    h: Vec<Rational>,
    c: Rational,
    s: Vec<C64>,
    conj: Vec<usize>,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

impl Level1Algebra {
    /// SU(m)₁: sector `a` has `h = a(m − a)/2m` and `S_ab = e^{2πi ab/m}/√m`.
    pub fn su(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::invalid(format!("SU({m})_1 needs m ≥ 2")));
        }
        let mi = i64::from(m);
        let norm = 1.0 / libm::sqrt(f64::from(m));
        let s = (0..mi)
            .flat_map(|a| (0..mi).map(move |b| C64::root_of_unity(a * b, mi).scale(norm)))
            .collect();
        Ok(Level1Algebra {
            name: format!("A{}_level1", m - 1),
            display: format!("SU({m})_1"),
            lie_dimension: m * m - 1,
            sectors: (0..m).map(|a| format!("Λ{a}")).collect(),
            dims: vec![1.0; m as usize],
            h: (0..mi).map(|a| q(a * (mi - a), 2 * mi)).collect(),
            c: Rational::from_integer(mi - 1),
            s,
            conj: (0..m as usize).map(|a| (m as usize - a) % m as usize).collect(),
        })
    }

    /// Spin(m)₁ for m ≥ 3: vacuum, vector and spinor sector(s).
    pub fn spin(m: u32) -> Result<Self> {
        if m < 3 {
            return Err(Error::invalid(format!("Spin({m})_1 needs m ≥ 3")));
        }
        let mi = i64::from(m);
        let c = q(mi, 2);
        if m % 2 == 1 {
            let r2 = libm::sqrt(2.0);
            let s = [1.0, 1.0, r2, 1.0, 1.0, -r2, r2, -r2, 0.0]
                .iter()
                .map(|&x| real(0.5 * x))
                .collect();
            return Ok(Level1Algebra {
                name: format!("B{}_level1", (m - 1) / 2),
                display: format!("Spin({m})_1"),
                lie_dimension: m * (m - 1) / 2,
                sectors: ["0", "v", "σ"].iter().map(|s| s.to_string()).collect(),
                dims: vec![1.0, 1.0, r2],
                h: vec![q(0, 1), q(1, 2), q(mi, 16)],
                c,
                s,
                conj: vec![0, 1, 2],
            });
        }
        // D_r with r = m/2; the spinor block carries ε = i^{−r}.
        let r = i64::from(m / 2);
        let eps = C64::root_of_unity(-r, 4);
        let one = real(1.0);
        let s = [
            one, one, one, one,
            one, one, -one, -one,
            one, -one, eps, -eps,
            one, -one, -eps, eps,
        ]
        .iter()
        .map(|&x| x.scale(0.5))
        .collect();
        let conj = if r % 2 == 0 { vec![0, 1, 2, 3] } else { vec![0, 1, 3, 2] };
        Ok(Level1Algebra {
            name: format!("D{r}_level1"),
            display: format!("Spin({m})_1"),
            lie_dimension: m * (m - 1) / 2,
            sectors: ["0", "v", "s", "c"].iter().map(|s| s.to_string()).collect(),
            dims: vec![1.0; 4],
            h: vec![q(0, 1), q(1, 2), q(mi, 16), q(mi, 16)],
            c,
            s,
            conj,
        })
    }

    pub fn g2() -> Self {
        let phi = (1.0 + libm::sqrt(5.0)) / 2.0;
        let norm = 1.0 / libm::sqrt(2.0 + phi);
        Level1Algebra {
            name: "G2_level1".into(),
            display: "(G2)_1".into(),
            lie_dimension: 14,
            sectors: vec!["0".into(), "7".into()],
            dims: vec![1.0, phi],
            h: vec![q(0, 1), q(2, 5)],
            c: q(14, 5),
            s: [1.0, phi, phi, -1.0].iter().map(|&x| real(x * norm)).collect(),
            conj: vec![0, 1],
        }
    }

    pub fn e6() -> Self {
        let norm = 1.0 / libm::sqrt(3.0);
        let w = |p| C64::root_of_unity(p, 3).scale(norm);
        Level1Algebra {
            name: "E6_level1".into(),
            display: "(E6)_1".into(),
            lie_dimension: 78,
            sectors: vec!["0".into(), "27".into(), "27̄".into()],
            dims: vec![1.0; 3],
            h: vec![q(0, 1), q(2, 3), q(2, 3)],
            c: Rational::from_integer(6),
            s: vec![w(0), w(0), w(0), w(0), w(-1), w(1), w(0), w(1), w(-1)],
            conj: vec![0, 2, 1],
        }
    }

    pub fn e7() -> Self {
        let r = 1.0 / libm::sqrt(2.0);
        Level1Algebra {
            name: "E7_level1".into(),
            display: "(E7)_1".into(),
            lie_dimension: 133,
            sectors: vec!["0".into(), "56".into()],
            dims: vec![1.0, 1.0],
            h: vec![q(0, 1), q(3, 4)],
            c: Rational::from_integer(7),
            s: vec![real(r), real(r), real(r), real(-r)],
            conj: vec![0, 1],
        }
    }

    pub fn e8() -> Self {
        Level1Algebra {
            name: "E8_level1".into(),
            display: "(E8)_1".into(),
            lie_dimension: 248,
            sectors: vec!["0".into()],
            dims: vec![1.0],
            h: vec![q(0, 1)],
            c: Rational::from_integer(8),
            s: vec![real(1.0)],
            conj: vec![0],
        }
    }

    /// Look up by catalog name: `A{r}_level1`, `B{r}_level1`, `D{r}_level1`,
    /// `G2_level1`, `E6_level1`, `E7_level1`, `E8_level1`.
    pub fn by_name(name: &str) -> Result<Self> {
        let unknown = || Error::invalid(format!("unknown level-1 algebra {name:?}"));
        let stem = name.strip_suffix("_level1").ok_or_else(unknown)?;
        match stem {
            "G2" => return Ok(Self::g2()),
            "E6" => return Ok(Self::e6()),
            "E7" => return Ok(Self::e7()),
            "E8" => return Ok(Self::e8()),
            _ => {}
        }
        let (family, rank) = stem.split_at(1);
        let r: u32 = rank.parse().map_err(|_| unknown())?;
        match family {
            "A" if r >= 1 => Self::su(r + 1),
            "B" if r >= 1 => Self::spin(2 * r + 1),
            "D" if r >= 2 => Self::spin(2 * r),
            _ => Err(unknown()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn display_name(&self) -> &str {
        &self.display
    }

    /// Dimension of the simple Lie algebra, i.e. of the weight-one space.
    pub fn lie_dimension(&self) -> u32 {
        self.lie_dimension
    }

    pub fn sector_names(&self) -> &[String] {
        &self.sectors
    }

    pub fn sector_count(&self) -> usize {
        self.dims.len()
    }

    pub fn quantum_dims(&self) -> &[f64] {
        &self.dims
    }

    pub fn h_values(&self) -> &[Rational] {
        &self.h
    }

    pub fn central_charge(&self) -> Rational {
        self.c
    }

    pub fn s(&self, i: usize, j: usize) -> C64 {
        self.s[i * self.dims.len() + j]
    }

    pub fn conj(&self, i: usize) -> usize {
        self.conj[i]
    }

    pub fn global_dimension(&self) -> f64 {
        self.dims.iter().map(|d| d * d).sum()
    }

    pub fn verify(&self) -> Report {
        let n = self.dims.len();
        let mut r = Report::new();
        let s00 = self.s(0, 0);
        let gd = self.global_dimension();
        let gd_err = (gd - 1.0 / s00.norm_sqr()).abs();
        r.push(
            "level1_global_dimension",
            gd_err < LEVEL1_TOL * gd && s00.re > 0.0,
            format!("Σd² = {gd:.12}, 1/S₀₀² off by {gd_err:.2e}"),
        );
        let dim_err = (0..n)
            .map(|j| (self.s(0, j) - real(self.dims[j] * s00.re)).abs())
            .fold(0.0, f64::max);
        r.push(
            "level1_quantum_dims",
            dim_err < LEVEL1_TOL && self.dims.iter().all(|&d| d >= 1.0 - LEVEL1_TOL),
            format!("max |S₀ⱼ − d_j S₀₀| = {dim_err:.2e}"),
        );
        r.push(
            "level1_vacuum_h",
            self.h[0] == Rational::from_integer(0),
            format!("h₀ = {}", self.h[0]),
        );
        let t: Vec<C64> = self
            .h
            .iter()
            .map(|&h| {
                let x = frac(h - self.c / Rational::from_integer(24));
                C64::root_of_unity(*x.numer(), *x.denom())
            })
            .collect();
        let (mut uni, mut cc, mut st) = (0.0f64, 0.0f64, 0.0f64);
        for i in 0..n {
            for j in 0..n {
                let (mut ssd, mut ss, mut sts) = (C64::ZERO, C64::ZERO, C64::ZERO);
                for k in 0..n {
                    ssd += self.s(i, k) * self.s(j, k).conj();
                    ss += self.s(i, k) * self.s(k, j);
                    sts += self.s(i, k) * t[k] * self.s(k, j);
                }
                let delta = |b: bool| real(if b { 1.0 } else { 0.0 });
                uni = uni.max((ssd - delta(i == j)).abs());
                cc = cc.max((ss - delta(self.conj[i] == j)).abs());
                let rhs = (t[i] * self.s(self.conj[i], j) * t[j]).conj();
                st = st.max((sts - rhs).abs());
            }
        }
        r.push("level1_unitarity", uni < LEVEL1_TOL, format!("‖SS† − I‖ = {uni:.2e}"));
        r.push("level1_charge_conjugation", cc < LEVEL1_TOL, format!("‖S² − C‖ = {cc:.2e}"));
        r.push("level1_modular", st < LEVEL1_TOL, format!("‖(ST)³ − S²‖ = {st:.2e}"));
        r.push(
            "level1_central_charge",
            self.c > Rational::from_integer(0),
            format!("c = {} ≈ {:.6}", self.c, ratio_to_f64(self.c)),
        );
        r
    }
}
