//! Closed forms and tabulated values checked against the general machinery.

use mirext_core::levelrank::{mirror_pair, mirror_pair_detailed, transpose};
use mirext_core::modular::{
    build_modular_data, build_modular_data_with, quantum_dimension, verlinde_fusion, weyl_dimension, BuildOptions,
};
use mirext_core::weights::{alcove_size, alcove_weights, central_charge};
use mirext_core::{AffineWeight, Rational};

fn w(n: u32, k: u32, labels: &[u32]) -> AffineWeight {
    AffineWeight::new(n, k, labels.to_vec()).unwrap()
}

#[test]
fn su2_s_matrix_closed_form() {
    // S_ab = √(2/(k+2)) sin(π(a+1)(b+1)/(k+2))
    for bits in [53, 106, 160] {
        for k in [1u32, 4, 10] {
            let md = build_modular_data(2, k, bits).unwrap();
            let kk = f64::from(k + 2);
            for a in 0..=k as usize {
                for b in 0..=k as usize {
                    let want = (2.0 / kk).sqrt() * (std::f64::consts::PI * ((a + 1) * (b + 1)) as f64 / kk).sin();
                    let got = md.s(a, b);
                    assert!((got.re - want).abs() < 1e-13 && got.im.abs() < 1e-13, "k={k} bits={bits} ({a},{b})");
                }
            }
        }
    }
}

#[test]
fn su_n_level_one_is_the_discrete_fourier_transform() {
    for n in [3u32, 4, 5] {
        let md = build_modular_data(n, 1, 106).unwrap();
        let scale = 1.0 / f64::from(n).sqrt();
        for a in 0..n as usize {
            for b in 0..n as usize {
                // Sector a is the fundamental weight Λ_a (vacuum for a = 0).
                let wa = md.weights().get(a).unwrap();
                let wb = md.weights().get(b).unwrap();
                let ia = wa.labels().iter().position(|&x| x == 1).map_or(0, |i| i + 1);
                let ib = wb.labels().iter().position(|&x| x == 1).map_or(0, |i| i + 1);
                let phase = 2.0 * std::f64::consts::PI * (ia * ib) as f64 / f64::from(n);
                let s = md.s(a, b);
                assert!((s.re - scale * phase.cos()).abs() < 1e-12, "n={n} ({ia},{ib})");
                assert!((s.im - scale * phase.sin()).abs() < 1e-12, "n={n} ({ia},{ib})");
            }
        }
    }
}

#[test]
fn alcove_sizes() {
    assert_eq!(alcove_size(2, 10), 11);
    assert_eq!(alcove_size(3, 5), 21);
    assert_eq!(alcove_size(10, 2), 55);
    assert_eq!(alcove_size(3, 21), 253);
    for (n, k) in [(2, 4), (3, 3), (4, 2), (5, 3)] {
        assert_eq!(alcove_weights(n, k).unwrap().len() as u128, alcove_size(n, k));
    }
}

#[test]
fn central_charges() {
    assert_eq!(central_charge(2, 10), Rational::new(5, 2));
    assert_eq!(central_charge(2, 28), Rational::new(14, 5));
    assert_eq!(central_charge(3, 9), Rational::from_integer(6));
    assert_eq!(central_charge(3, 21), Rational::from_integer(7));
    assert_eq!(central_charge(9, 1), Rational::from_integer(8));
    // Level-rank: c(N,M) + c(M,N) = c(NM,1) = NM − 1.
    for (n, m) in [(2, 10), (3, 5), (4, 4)] {
        assert_eq!(central_charge(n, m) + central_charge(m, n), Rational::from_integer(i64::from(n * m - 1)));
    }
}

#[test]
fn conformal_weights() {
    assert_eq!(w(2, 10, &[6]).conformal_weight().exact, Rational::from_integer(1));
    assert_eq!(w(2, 10, &[3]).conformal_weight().exact, Rational::new(5, 16));
    assert_eq!(w(10, 2, &[0, 0, 1, 0, 0, 0, 1, 0, 0]).conformal_weight().exact, Rational::from_integer(2));
    assert_eq!(w(3, 1, &[1, 0]).conformal_weight().exact, Rational::new(1, 3));
    assert_eq!(w(3, 5, &[2, 2]).conformal_weight().exact, Rational::from_integer(1));
}

#[test]
fn quantum_dimensions() {
    let s3 = 3f64.sqrt();
    assert!((quantum_dimension(&w(2, 10, &[6])) - (2.0 + s3)).abs() < 1e-12);
    assert!((quantum_dimension(&w(10, 2, &[0, 0, 1, 0, 0, 0, 1, 0, 0])) - (2.0 + s3)).abs() < 1e-12);
    // Simple currents have dimension one.
    assert!((quantum_dimension(&w(5, 3, &[0, 0, 0, 3])) - 1.0).abs() < 1e-12);
    let md = build_modular_data_with(3, 4, &BuildOptions::default()).unwrap();
    for (i, x) in md.weights().iter().enumerate() {
        assert!((md.dim(i) - quantum_dimension(x)).abs() < 1e-12);
    }
}

#[test]
fn weyl_dimensions() {
    assert_eq!(weyl_dimension(&w(3, 5, &[1, 1])), 8.0);
    assert_eq!(weyl_dimension(&w(4, 3, &[0, 1, 0])), 6.0);
    assert_eq!(weyl_dimension(&w(2, 28, &[10])), 11.0);
    assert_eq!(weyl_dimension(&w(5, 3, &[1, 0, 0, 1])), 24.0);
}

#[test]
fn su3_level2_fusion() {
    // 3 ⊗ 3 = 3̄ ⊕ 6 at level 2; 6 is a simple current, so 6 ⊗ 6̄ = 1;
    // 8 ⊗ 8 = 1 ⊕ 8 (Fibonacci).
    let md = build_modular_data(3, 2, 106).unwrap();
    let f = verlinde_fusion(&md).unwrap();
    let idx = |l: &[u32]| md.weights().index_of_labels(l).unwrap();
    let prod = |a: &[u32], b: &[u32]| {
        let mut p: Vec<usize> = f.product(idx(a), idx(b)).into_iter().map(|(c, _)| c).collect();
        p.sort();
        p
    };
    let mut want = vec![idx(&[0, 1]), idx(&[2, 0])];
    want.sort();
    assert_eq!(prod(&[1, 0], &[1, 0]), want);
    assert_eq!(prod(&[2, 0], &[0, 2]), vec![idx(&[0, 0])]);
    let mut want = vec![idx(&[0, 0]), idx(&[1, 1])];
    want.sort();
    assert_eq!(prod(&[1, 1], &[1, 1]), want);
}

#[test]
fn level_rank_partners() {
    assert_eq!(mirror_pair(&w(2, 10, &[6])).unwrap(), w(10, 2, &[0, 0, 1, 0, 0, 0, 1, 0, 0]));
    assert_eq!(mirror_pair(&w(2, 10, &[0])).unwrap(), w(10, 2, &[0; 9]));
    // The (3,3) vacuum has three integral twists and needs the box-count rule.
    let p = mirror_pair_detailed(&w(3, 3, &[0, 0])).unwrap();
    assert_eq!(p.integral_candidates, 3);
    assert!(p.resolved_by_rule);
    assert!(p.partner.is_vacuum());
    assert!(mirror_pair(&w(2, 10, &[3])).is_err());
}

#[test]
fn transpose_of_young_diagrams() {
    // Rows (2,1) of SU(3)_4 transpose to rows (2,1) in SU(4)_3; one row of
    // three boxes becomes a column of three.
    let a = w(3, 4, &[1, 1]);
    assert_eq!(transpose(&a).labels(), &[1, 1, 0]);
    let b = AffineWeight::from_rows(3, 4, &[3, 0, 0]).unwrap();
    assert_eq!(transpose(&b).rows(), vec![1, 1, 1]);
}
