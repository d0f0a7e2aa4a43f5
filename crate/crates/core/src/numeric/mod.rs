//! Scalar backends for the modular-data builder.
//!
//! The requested working precision selects the backend: plain `f64` up to
//! 53 bits, [`DoubleDouble`] up to 106 bits, and [`MpFloat`] (arbitrary
//! precision) beyond that.

mod dd;
mod det;
mod mp;

pub use dd::DoubleDouble;
pub use det::determinant;
pub use mp::MpFloat;

use core::fmt::Debug;

/// Real scalar with explicit-method arithmetic. Values carry their own
/// precision, so constructors take the target precision in bits.
pub trait Real: Clone + Debug {
    fn from_f64(x: f64, prec: u32) -> Self;
    fn from_i64(x: i64, prec: u32) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn to_f64(&self) -> f64;
    /// `(cos 2πp/q, sin 2πp/q)`.
    fn cos_sin_turns(p: i64, q: i64, prec: u32) -> (Self, Self);

    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Real for f64 {
    fn from_f64(x: f64, _: u32) -> Self {
        x
    }
    fn from_i64(x: i64, _: u32) -> Self {
        x as f64
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sqrt(&self) -> Self {
        libm::sqrt(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn cos_sin_turns(p: i64, q: i64, _: u32) -> (Self, Self) {
        let (j, num, den) = octant_reduce(p, q);
        let x = core::f64::consts::FRAC_PI_2 * num as f64 / den as f64;
        rotate_quadrant(j, libm::cos(x), libm::sin(x))
    }
}

/// Reduce the angle `2πp/q` to `j·π/2 + (π/2)·num/den` with
/// `|num/den| ≤ 1/2`; returns `(j mod 4, num, den)`.
pub(crate) fn octant_reduce(p: i64, q: i64) -> (u8, i128, i128) {
    assert!(q != 0, "zero denominator in angle");
    let (p, q) = if q < 0 { (-i128::from(p), -i128::from(q)) } else { (i128::from(p), i128::from(q)) };
    // 2πp/q = (π/2)·(4p/q); round 4p/q to the nearest integer j.
    let four_p = 4 * p;
    let j = (2 * four_p + q).div_euclid(2 * q);
    let num = four_p - j * q;
    (j.rem_euclid(4) as u8, num, q)
}

pub(crate) fn rotate_quadrant<R: Real>(j: u8, c: R, s: R) -> (R, R) {
    match j {
        0 => (c, s),
        1 => (s.neg(), c),
        2 => (c.neg(), s.neg()),
        _ => (s, c.neg()),
    }
}

#[derive(Clone, Debug)]
pub struct Complex<R> {
    pub re: R,
    pub im: R,
}

impl<R: Real> Complex<R> {
    pub fn new(re: R, im: R) -> Self {
        Complex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Complex::new(R::from_i64(0, prec), R::from_i64(0, prec))
    }

    pub fn one(prec: u32) -> Self {
        Complex::new(R::from_i64(1, prec), R::from_i64(0, prec))
    }

    /// `exp(2πi p/q)`.
    pub fn root_of_unity(p: i64, q: i64, prec: u32) -> Self {
        let (c, s) = R::cos_sin_turns(p, q, prec);
        Complex::new(c, s)
    }

    pub fn add(&self, o: &Self) -> Self {
        Complex::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Complex::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Complex::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }

    pub fn scale(&self, r: &R) -> Self {
        Complex::new(self.re.mul(r), self.im.mul(r))
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), self.im.neg())
    }

    pub fn neg(&self) -> Self {
        Complex::new(self.re.neg(), self.im.neg())
    }

    pub fn norm_sqr(&self) -> R {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.norm_sqr();
        let num = self.mul(&o.conj());
        Complex::new(num.re.div(&d), num.im.div(&d))
    }

    pub fn abs_f64(&self) -> f64 {
        libm::hypot(self.re.to_f64(), self.im.to_f64())
    }

    /// `|self|` at working precision.
    pub fn abs(&self) -> R {
        self.norm_sqr().sqrt()
    }

    pub fn to_c64(&self) -> C64 {
        C64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// Double-precision complex number used for stored modular data.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
    pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }

    pub fn conj(self) -> Self {
        C64::new(self.re, -self.im)
    }

    pub fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn scale(self, r: f64) -> Self {
        C64::new(self.re * r, self.im * r)
    }

    /// `exp(2πi p/q)` in double precision.
    pub fn root_of_unity(p: i64, q: i64) -> Self {
        let (c, s) = <f64 as Real>::cos_sin_turns(p, q, 53);
        C64::new(c, s)
    }
}

impl core::ops::Add for C64 {
    type Output = C64;
    fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
}

impl core::ops::AddAssign for C64 {
    fn add_assign(&mut self, o: C64) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl core::ops::Sub for C64 {
    type Output = C64;
    fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
}

impl core::ops::Mul for C64 {
    type Output = C64;
    fn mul(self, o: C64) -> C64 {
        C64::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl core::ops::Div for C64 {
    type Output = C64;
    fn div(self, o: C64) -> C64 {
        let d = o.norm_sqr();
        let n = self * o.conj();
        C64::new(n.re / d, n.im / d)
    }
}

impl core::ops::Neg for C64 {
    type Output = C64;
    fn neg(self) -> C64 {
        C64::new(-self.re, -self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octant_reduction_is_exact() {
        for q in 1..40i64 {
            for p in -50..50i64 {
                let (j, num, den) = octant_reduce(p, q);
                // (π/2)(j + num/den) ≡ 2πp/q (mod 2π)
                let lhs = (i128::from(j) * den + num) * i128::from(q);
                let rhs = 4 * i128::from(p) * den;
                assert_eq!((lhs - rhs).rem_euclid(4 * den * i128::from(q)), 0);
                assert!(2 * num.abs() <= den);
            }
        }
    }

    #[test]
    fn f64_roots_of_unity() {
        let (c, s) = <f64 as Real>::cos_sin_turns(1, 12, 53);
        assert!((c - libm::sqrt(3.0) / 2.0).abs() < 1e-15);
        assert!((s - 0.5).abs() < 1e-15);
        let (c, s) = <f64 as Real>::cos_sin_turns(-3, 4, 53);
        assert!(c.abs() < 1e-15 && (s - 1.0).abs() < 1e-15);
    }
}
