//! Numerical engine for mirror extensions of SU(N)_K conformal nets.
//!
//! Everything here is a pure function over immutable values, built on `alloc`
//! only. The crate covers:
//!
//! - [`weights`]: level-K alcoves of SU(N), conjugation, simple currents,
//!   exact conformal weights and central charges.
//! - [`modular`]: Kac-Peterson S and T matrices at configurable precision,
//!   quantum dimensions, global dimension and Verlinde fusion.
//! - [`levelrank`]: the SU(N)_M x SU(M)_N ⊂ SU(NM)_1 pairing and its
//!   ring-isomorphism and conjugation checks.
//! - [`modinv`]: modular invariants, commutant search and conformal-inclusion
//!   branching search.
//! - [`level1`] and [`catalog`]: level-1 target data and the conformal
//!   inclusion inventory with validation.
//! - [`mirror`]: mirror spectra and indices for level-rank and diagonal
//!   normal subnets.
//!
//! File formats, the CLI and the shipped catalog live in the `mirext` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod error;
pub mod lattice;
pub mod level1;
pub mod levelrank;
pub mod mirror;
pub mod modinv;
pub mod modular;
pub mod numeric;
pub mod report;
pub mod spectrum;
pub mod weights;

pub use error::{Error, Result};
pub use report::{Check, Report};
pub use spectrum::Spectrum;
pub use weights::{AffineWeight, WeightSet};

/// Exact rational used for conformal weights and central charges.
pub type Rational = num_rational::Ratio<i64>;

/// Fractional part of `q` in `[0, 1)`.
pub fn frac(q: Rational) -> Rational {
    q - q.floor()
}
