//! Arbitrary-precision backend over `astro-float`.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};

use super::{octant_reduce, rotate_quadrant, Real};

const RM: RoundingMode = RoundingMode::ToEven;

/// A `BigFloat` tagged with its working precision in bits. Binary operations
/// run at the larger of the two operand precisions.
#[derive(Clone, Debug)]
pub struct MpFloat {
    value: BigFloat,
    prec: usize,
}

impl MpFloat {
    fn wrap(value: BigFloat, prec: usize) -> Self {
        MpFloat { value, prec }
    }

    fn p(&self, o: &Self) -> usize {
        self.prec.max(o.prec)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    fn consts() -> Consts {
        Consts::new().expect("constant cache allocation")
    }
}

impl Real for MpFloat {
    fn from_f64(x: f64, prec: u32) -> Self {
        Self::wrap(BigFloat::from_f64(x, prec as usize), prec as usize)
    }

    fn from_i64(x: i64, prec: u32) -> Self {
        Self::wrap(BigFloat::from_i64(x, prec as usize), prec as usize)
    }

    fn add(&self, o: &Self) -> Self {
        let p = self.p(o);
        Self::wrap(self.value.add(&o.value, p, RM), p)
    }

    fn sub(&self, o: &Self) -> Self {
        let p = self.p(o);
        Self::wrap(self.value.sub(&o.value, p, RM), p)
    }

    fn mul(&self, o: &Self) -> Self {
        let p = self.p(o);
        Self::wrap(self.value.mul(&o.value, p, RM), p)
    }

    fn div(&self, o: &Self) -> Self {
        let p = self.p(o);
        Self::wrap(self.value.div(&o.value, p, RM), p)
    }

    fn neg(&self) -> Self {
        Self::wrap(self.value.neg(), self.prec)
    }

    fn sqrt(&self) -> Self {
        if self.value.is_zero() {
            return self.clone();
        }
        Self::wrap(self.value.sqrt(self.prec, RM), self.prec)
    }

    fn to_f64(&self) -> f64 {
        let Some((words, _, sign, exp, _)) = self.value.as_raw_parts() else {
            return f64::NAN;
        };
        if words.iter().all(|&w| w == 0) {
            return 0.0;
        }
        // value = 0.m × 2^exp with the most significant word last.
        let len = words.len() as i32;
        let mut acc = 0.0f64;
        for (i, &w) in words.iter().enumerate().rev().take(2) {
            acc += libm::ldexp(w as f64, 64 * (i as i32 - len));
        }
        let v = libm::ldexp(acc, exp);
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }

    fn cos_sin_turns(p: i64, q: i64, prec: u32) -> (Self, Self) {
        let work = prec as usize + 32;
        let mut cc = Self::consts();
        let (j, num, den) = octant_reduce(p, q);
        let half_pi = cc.pi(work, RM).div(&BigFloat::from_i64(2, work), work, RM);
        let x = half_pi
            .mul(&BigFloat::from_i128(num, work), work, RM)
            .div(&BigFloat::from_i128(den, work), work, RM);
        let c = x.cos(work, RM, &mut cc);
        let s = x.sin(work, RM, &mut cc);
        let p = prec as usize;
        let round = |v: BigFloat| Self::wrap(v.add(&BigFloat::from_i64(0, p), p, RM), p);
        rotate_quadrant(j, round(c), round(s))
    }
}
