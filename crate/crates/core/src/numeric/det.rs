use alloc::vec::Vec;

use super::{Complex, Real};

/// Determinant of a dense row-major `n × n` complex matrix by Gaussian
/// elimination with partial pivoting. The matrix is consumed as scratch.
pub fn determinant<R: Real>(mut a: Vec<Complex<R>>, n: usize, prec: u32) -> Complex<R> {
    debug_assert_eq!(a.len(), n * n);
    match n {
        0 => return Complex::one(prec),
        1 => return a.swap_remove(0),
        2 => return a[0].mul(&a[3]).sub(&a[1].mul(&a[2])),
        _ => {}
    }
    let mut det = Complex::one(prec);
    let mut negate = false;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r, &s| {
                a[r * n + col]
                    .abs_f64()
                    .total_cmp(&a[s * n + col].abs_f64())
            })
            .expect("non-empty pivot range");
        if a[pivot * n + col].abs_f64() == 0.0 {
            return Complex::zero(prec);
        }
        if pivot != col {
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
            }
            negate = !negate;
        }
        let diag = a[col * n + col].clone();
        det = det.mul(&diag);
        for r in col + 1..n {
            let factor = a[r * n + col].div(&diag);
            for j in col + 1..n {
                let update = factor.mul(&a[col * n + j]);
                a[r * n + j] = a[r * n + j].sub(&update);
            }
        }
    }
    if negate {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::DoubleDouble;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn small_determinants() {
        let m = alloc::vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)];
        let d = determinant(m, 2, 53);
        assert!((d.re + 2.0).abs() < 1e-15 && d.im.abs() < 1e-15);

        // Permutation matrix needing a pivot swap.
        let m = alloc::vec![
            c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0),
            c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0),
            c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0),
        ];
        let d = determinant(m, 3, 53);
        assert!((d.re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn vandermonde_of_roots_of_unity() {
        // |det DFT_n| = n^{n/2}
        for n in 3..7usize {
            let mut m = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    m.push(Complex::<DoubleDouble>::root_of_unity((a * b) as i64, n as i64, 106));
                }
            }
            let d = determinant(m, n, 106);
            let expected = libm::pow(n as f64, n as f64 / 2.0);
            assert!((d.abs_f64() - expected).abs() < 1e-12 * expected, "n = {n}");
        }
    }
}
