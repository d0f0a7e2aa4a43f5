//! Nonnegative integer points of a real linear system, by reduced row
//! echelon form followed by a bounded depth-first walk over free variables.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Entries below this (relative to the row scale, floored at 1) are treated as zero.
const PIVOT_TOL: f64 = 1e-9;
/// Distance from an integer accepted for pivot variables.
pub const INTEGRALITY_TOL: f64 = 1e-6;

/// Reduced row echelon form of `A x = b`: each pivot variable is
/// `rhs − Σ coeffs[f]·x_f` over the free variables.
#[derive(Debug, Clone)]
pub struct Echelon {
    cols: usize,
    pivots: Vec<Pivot>,
    free: Vec<usize>,
}

#[derive(Debug, Clone)]
struct Pivot {
    col: usize,
    row: Vec<f64>,
    rhs: f64,
}

impl Echelon {
    /// Eliminate the rows one at a time; an inconsistent row is an error.
    pub fn reduce<I>(cols: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<f64>, f64)>,
    {
        let mut pivots: Vec<Pivot> = Vec::new();
        for (mut row, mut rhs) in rows {
            debug_assert_eq!(row.len(), cols);
            let scale = row.iter().fold(rhs.abs(), |m, x| m.max(x.abs()));
            if scale == 0.0 {
                continue;
            }
            for p in &pivots {
                let f = row[p.col];
                if f != 0.0 {
                    for (x, y) in row.iter_mut().zip(&p.row) {
                        *x -= f * y;
                    }
                    rhs -= f * p.rhs;
                }
            }
            let (col, lead) = row
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
                .map(|(c, &v)| (c, v))
                .unwrap_or((0, 0.0));
            if lead.abs() <= PIVOT_TOL * scale.max(1.0) {
                if rhs.abs() > 1e-7 * scale.max(1.0) {
                    return Err(Error::Search(format!(
                        "linear system is inconsistent (residual {:.3e})",
                        rhs
                    )));
                }
                continue;
            }
            for x in row.iter_mut() {
                *x /= lead;
            }
            rhs /= lead;
            row[col] = 1.0;
            for x in row.iter_mut() {
                if x.abs() < 1e-13 {
                    *x = 0.0;
                }
            }
            for p in pivots.iter_mut() {
                let f = p.row[col];
                if f != 0.0 {
                    for (x, y) in p.row.iter_mut().zip(&row) {
                        *x -= f * y;
                    }
                    p.rhs -= f * rhs;
                    p.row[col] = 0.0;
                }
            }
            pivots.push(Pivot { col, row, rhs });
        }
        let mut is_pivot = vec![false; cols];
        for p in &pivots {
            is_pivot[p.col] = true;
        }
        let free = (0..cols).filter(|&c| !is_pivot[c]).collect();
        Ok(Echelon { cols, pivots, free })
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_variables(&self) -> &[usize] {
        &self.free
    }

    /// All integer points with `0 ≤ x_j ≤ upper[j]`, in lexicographic order of
    /// the free variables. More than `limit` points is an error.
    pub fn bounded_integer_points(&self, upper: &[u32], limit: usize) -> Result<Vec<Vec<u32>>> {
        if upper.len() != self.cols {
            return Err(Error::invalid("bound vector does not match the system width"));
        }
        let nf = self.free.len();
        // coef[p][d]: coefficient of the d-th free variable in pivot row p.
        let coef: Vec<Vec<f64>> = self
            .pivots
            .iter()
            .map(|p| self.free.iter().map(|&f| p.row[f]).collect())
            .collect();
        // Range of −Σ_{e ≥ d} coef·x_e still reachable by the unassigned free variables.
        let mut lo = vec![vec![0.0; nf + 1]; self.pivots.len()];
        let mut hi = vec![vec![0.0; nf + 1]; self.pivots.len()];
        for (p, c) in coef.iter().enumerate() {
            for d in (0..nf).rev() {
                let span = -c[d] * f64::from(upper[self.free[d]]);
                lo[p][d] = lo[p][d + 1] + span.min(0.0);
                hi[p][d] = hi[p][d + 1] + span.max(0.0);
            }
        }
        let mut walk = Walk {
            ech: self,
            upper,
            coef: &coef,
            lo: &lo,
            hi: &hi,
            partial: self.pivots.iter().map(|p| p.rhs).collect(),
            assigned: vec![0; nf],
            out: Vec::new(),
            limit,
        };
        walk.descend(0)?;
        Ok(walk.out)
    }
}

struct Walk<'a> {
    ech: &'a Echelon,
    upper: &'a [u32],
    coef: &'a [Vec<f64>],
    lo: &'a [Vec<f64>],
    hi: &'a [Vec<f64>],
    partial: Vec<f64>,
    assigned: Vec<u32>,
    out: Vec<Vec<u32>>,
    limit: usize,
}

impl Walk<'_> {
    fn feasible(&self, depth: usize) -> bool {
        self.ech.pivots.iter().enumerate().all(|(p, piv)| {
            let ub = f64::from(self.upper[piv.col]);
            let min = self.partial[p] + self.lo[p][depth];
            let max = self.partial[p] + self.hi[p][depth];
            max >= -INTEGRALITY_TOL && min <= ub + INTEGRALITY_TOL
        })
    }

    fn descend(&mut self, depth: usize) -> Result<()> {
        if !self.feasible(depth) {
            return Ok(());
        }
        if depth == self.assigned.len() {
            return self.emit();
        }
        let var = self.ech.free[depth];
        for v in 0..=self.upper[var] {
            let x = f64::from(v);
            for (p, c) in self.coef.iter().enumerate() {
                self.partial[p] -= c[depth] * x;
            }
            self.assigned[depth] = v;
            let r = self.descend(depth + 1);
            for (p, c) in self.coef.iter().enumerate() {
                self.partial[p] += c[depth] * x;
            }
            r?;
        }
        Ok(())
    }

    fn emit(&mut self) -> Result<()> {
        let mut x = vec![0u32; self.ech.cols];
        for (d, &f) in self.ech.free.iter().enumerate() {
            x[f] = self.assigned[d];
        }
        for (p, piv) in self.ech.pivots.iter().enumerate() {
            let v = self.partial[p];
            let r = libm::round(v);
            if (v - r).abs() > INTEGRALITY_TOL || r < 0.0 || r > f64::from(self.upper[piv.col]) {
                return Ok(());
            }
            x[piv.col] = r as u32;
        }
        if self.out.len() == self.limit {
            return Err(Error::Search(format!(
                "more than {} integer solutions; tighten the bound",
                self.limit
            )));
        }
        self.out.push(x);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_points() {
        // x + y + z = 2 over nonnegative integers: 6 points.
        let e = Echelon::reduce(3, [(vec![1.0, 1.0, 1.0], 2.0)]).unwrap();
        assert_eq!(e.rank(), 1);
        let pts = e.bounded_integer_points(&[5, 5, 5], 100).unwrap();
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|p| p.iter().sum::<u32>() == 2));
    }

    #[test]
    fn fractional_pivots_are_rejected() {
        // 2x = y, y ≤ 3: (0,0), (1,2)
        let e = Echelon::reduce(2, [(vec![2.0, -1.0], 0.0)]).unwrap();
        let pts = e.bounded_integer_points(&[3, 3], 10).unwrap();
        let mut pts = pts;
        pts.sort();
        assert_eq!(pts, vec![vec![0, 0], vec![1, 2]]);
    }

    #[test]
    fn redundant_and_inconsistent_rows() {
        let e = Echelon::reduce(
            2,
            [(vec![1.0, 1.0], 1.0), (vec![2.0, 2.0], 2.0), (vec![0.0, 0.0], 0.0)],
        )
        .unwrap();
        assert_eq!(e.rank(), 1);
        assert!(Echelon::reduce(2, [(vec![1.0, 1.0], 1.0), (vec![1.0, 1.0], 2.0)]).is_err());
    }

    #[test]
    fn solution_limit_is_enforced() {
        let e = Echelon::reduce(3, core::iter::empty()).unwrap();
        assert!(e.bounded_integer_points(&[3, 3, 3], 10).is_err());
        assert_eq!(e.bounded_integer_points(&[1, 1, 1], 10).unwrap().len(), 8);
    }

    #[test]
    fn matches_brute_force() {
        // x0 − x1 + x2 = 1, x1 + x3 = 2 with x ≤ 2
        let rows = [(vec![1.0, -1.0, 1.0, 0.0], 1.0), (vec![0.0, 1.0, 0.0, 1.0], 2.0)];
        let e = Echelon::reduce(4, rows.clone()).unwrap();
        let mut got = e.bounded_integer_points(&[2; 4], 100).unwrap();
        got.sort();
        let mut want = Vec::new();
        for a in 0..3u32 {
            for b in 0..3u32 {
                for c in 0..3u32 {
                    for d in 0..3u32 {
                        let x = [a, b, c, d];
                        if rows.iter().all(|(r, s)| {
                            r.iter().zip(&x).map(|(u, &v)| u * f64::from(v)).sum::<f64>() == *s
                        }) {
                            want.push(x.to_vec());
                        }
                    }
                }
            }
        }
        assert_eq!(got, want);
    }
}
