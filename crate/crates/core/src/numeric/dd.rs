//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64` with
//! `|lo| ≤ ulp(hi)/2`, giving about 106 bits of significand.

use super::{octant_reduce, rotate_quadrant, Real};

#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1

const PI_2: DoubleDouble = DoubleDouble {
    hi: core::f64::consts::FRAC_PI_2,
    lo: 6.123_233_995_736_766e-17,
};

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };

    pub const fn new(hi: f64, lo: f64) -> Self {
        DoubleDouble { hi, lo }
    }

    #[inline]
    fn dd_add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DoubleDouble { hi, lo }
    }

    #[inline]
    fn dd_mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * b.lo + self.lo * b.hi));
        DoubleDouble { hi, lo }
    }

    #[inline]
    fn dd_neg(self) -> Self {
        DoubleDouble::new(-self.hi, -self.lo)
    }

    fn dd_div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self.dd_add(b.dd_mul(DoubleDouble::new(q1, 0.0)).dd_neg());
        let q2 = r.hi / b.hi;
        let r = r.dd_add(b.dd_mul(DoubleDouble::new(q2, 0.0)).dd_neg());
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DoubleDouble { hi, lo }.dd_add(DoubleDouble::new(q3, 0.0))
    }

    fn dd_sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return DoubleDouble::ZERO;
        }
        let x = 1.0 / libm::sqrt(self.hi);
        let ax = DoubleDouble::new(self.hi * x, 0.0);
        let resid = self.dd_add(ax.dd_mul(ax).dd_neg());
        ax.dd_add(DoubleDouble::new(resid.hi * (x * 0.5), 0.0))
    }

    fn from_ratio(num: i128, den: i128) -> Self {
        // |num|, |den| stay far below 2^53 for all angles used here.
        DoubleDouble::new(num as f64, 0.0).dd_div(DoubleDouble::new(den as f64, 0.0))
    }

    /// Taylor series for `(cos x, sin x)`, intended for `|x| ≤ π/4`.
    fn cos_sin_small(x: Self) -> (Self, Self) {
        let x2 = x.dd_mul(x);
        let eps = 1e-34;
        let mut term = x;
        let mut sin = x;
        let mut k = 1.0;
        while term.hi.abs() > eps {
            term = term.dd_mul(x2).dd_neg().dd_div(DoubleDouble::new((k + 1.0) * (k + 2.0), 0.0));
            sin = sin.dd_add(term);
            k += 2.0;
        }
        let mut term = DoubleDouble::ONE;
        let mut cos = DoubleDouble::ONE;
        let mut k = 0.0;
        loop {
            term = term.dd_mul(x2).dd_neg().dd_div(DoubleDouble::new((k + 1.0) * (k + 2.0), 0.0));
            cos = cos.dd_add(term);
            k += 2.0;
            if term.hi.abs() <= eps {
                break;
            }
        }
        (cos, sin)
    }
}

impl Real for DoubleDouble {
    fn from_f64(x: f64, _: u32) -> Self {
        DoubleDouble::new(x, 0.0)
    }
    fn from_i64(x: i64, _: u32) -> Self {
        let hi = x as f64;
        DoubleDouble::new(hi, (x - hi as i64) as f64)
    }
    fn add(&self, o: &Self) -> Self {
        self.dd_add(*o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.dd_add(o.dd_neg())
    }
    fn mul(&self, o: &Self) -> Self {
        self.dd_mul(*o)
    }
    fn div(&self, o: &Self) -> Self {
        self.dd_div(*o)
    }
    fn neg(&self) -> Self {
        self.dd_neg()
    }
    fn sqrt(&self) -> Self {
        self.dd_sqrt()
    }
    fn to_f64(&self) -> f64 {
        self.hi + self.lo
    }
    fn cos_sin_turns(p: i64, q: i64, _: u32) -> (Self, Self) {
        let (j, num, den) = octant_reduce(p, q);
        let x = PI_2.dd_mul(Self::from_ratio(num, den));
        let (c, s) = Self::cos_sin_small(x);
        rotate_quadrant(j, c, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd(x: f64) -> DoubleDouble {
        DoubleDouble::new(x, 0.0)
    }

    #[test]
    fn sqrt_two_squares_back() {
        let r = dd(2.0).sqrt();
        let back = r.mul(&r).sub(&dd(2.0));
        assert!(back.to_f64().abs() < 1e-30);
    }

    #[test]
    fn division_recovers_thirds() {
        let third = dd(1.0).div(&dd(3.0));
        let err = third.mul(&dd(3.0)).sub(&dd(1.0));
        assert!(err.to_f64().abs() < 1e-31);
    }

    #[test]
    fn roots_of_unity_are_unit_and_multiplicative() {
        for q in [5i64, 7, 12, 30, 97] {
            let (c1, s1) = DoubleDouble::cos_sin_turns(1, q, 106);
            let norm = c1.mul(&c1).add(&s1.mul(&s1)).sub(&dd(1.0));
            assert!(norm.to_f64().abs() < 1e-30, "q = {q}");
            // cos(2·θ) = 2cos²θ − 1
            let (c2, _) = DoubleDouble::cos_sin_turns(2, q, 106);
            let dbl = c1.mul(&c1).mul(&dd(2.0)).sub(&dd(1.0)).sub(&c2);
            assert!(dbl.to_f64().abs() < 1e-30, "q = {q}");
        }
    }

    #[test]
    fn sin_of_twelfth_turn() {
        // sin(π/6) = 1/2 exactly.
        let (_, s) = DoubleDouble::cos_sin_turns(1, 12, 106);
        assert!(s.sub(&dd(0.5)).to_f64().abs() < 1e-31);
        // cos(−5π/3) = 1/2 from a different octant.
        let (c, _) = DoubleDouble::cos_sin_turns(-5, 6, 106);
        assert!(c.sub(&dd(0.5)).to_f64().abs() < 1e-31);
    }
}
