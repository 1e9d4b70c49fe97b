//! Exact root counting for univariate polynomials with rational and
//! Gaussian-rational coefficients.
//!
//! - [`fourier`]: Budan-Fourier bounds, Descartes' rule of signs and the
//!   Descartes roots test. Fast, exact up to an even excess.
//! - [`sturm`]: classical and extended signed remainder sequences; exact
//!   counts of distinct roots and of roots with multiplicity.
//! - [`complex`]: root counts in the upper half-plane, half-planes and balls.
//! - [`oracle`]: polynomials built from known roots, for testing.

pub mod complex;
pub mod corpus;
pub mod error;
pub mod format;
pub mod fourier;
pub mod number;
pub mod oracle;
pub mod poly;
pub mod signvar;
pub mod sturm;

pub use complex::{proots_ball, proots_half_plane, proots_upper, Ball, HalfPlane};
pub use error::{Error, Result};
pub use fourier::{budan_fourier_bound, descartes_roots_test, descartes_sign, ParityBound};
pub use number::{ExtReal, Field, GaussRat, Rat};
pub use poly::{CPoly, Poly, RPoly};
pub use signvar::{sign_at, var, var_at, var_diff, Sign};
pub use sturm::{count_distinct_real, count_real_mult, smods, smods_ext};
