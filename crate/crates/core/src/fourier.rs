//! Over-approximations of real root counts: Budan-Fourier on Fourier
//! sequences, Descartes' rule of signs, and the Descartes roots test on a
//! bounded interval via a Möbius/Taylor-shift transform.
//!
//! Every bound here exceeds the true count (with multiplicity) by an even
//! number. The intervals differ by method: Budan-Fourier counts on `(a, b]`,
//! the roots test on the open `(a, b)`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::number::{ExtReal, Rat};
use crate::poly::{Poly, RPoly};
use crate::signvar::{check_interval, var, var_diff};

/// An upper bound on a root count whose excess over the true count is even.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct ParityBound {
    pub bound: usize,
}

impl ParityBound {
    pub fn new(bound: usize) -> Self {
        ParityBound { bound }
    }

    /// A bound of 0 or 1 is the exact count.
    pub fn is_exact(&self) -> bool {
        self.bound <= 1
    }

    /// Whether `count` is compatible with this bound.
    pub fn admits(&self, count: usize) -> bool {
        count <= self.bound && (self.bound - count).is_multiple_of(2)
    }
}

/// The Fourier sequence `[p, p', p'', ..., p^(n)]` of length `deg p + 1`.
pub fn pders(p: &RPoly) -> Result<Vec<RPoly>> {
    let n = p.degree_nonzero()?;
    let mut out = Vec::with_capacity(n + 1);
    let mut cur = p.clone();
    for _ in 0..=n {
        let next = cur.pderiv();
        out.push(cur);
        cur = next;
    }
    Ok(out)
}

fn changes_der(p: &RPoly, a: &ExtReal, b: &ExtReal) -> Result<i64> {
    check_interval(a, b)?;
    var_diff(&pders(p)?, a, b)
}

/// Variation drop of the Fourier sequence between finite `a < b`.
pub fn changes_itv_der(a: &Rat, b: &Rat, p: &RPoly) -> Result<i64> {
    changes_der(p, &ExtReal::Finite(a.clone()), &ExtReal::Finite(b.clone()))
}

/// Variation drop of the Fourier sequence over `(−∞, a]`.
pub fn changes_le_der(a: &Rat, p: &RPoly) -> Result<i64> {
    changes_der(p, &ExtReal::NegInf, &ExtReal::Finite(a.clone()))
}

/// Variation drop of the Fourier sequence over `(b, +∞)`.
pub fn changes_gt_der(b: &Rat, p: &RPoly) -> Result<i64> {
    changes_der(p, &ExtReal::Finite(b.clone()), &ExtReal::PosInf)
}

/// Variation drop of the Fourier sequence over the whole real line; equals `deg p`.
pub fn changes_r_der(p: &RPoly) -> Result<i64> {
    changes_der(p, &ExtReal::NegInf, &ExtReal::PosInf)
}

/// Budan-Fourier bound on the roots of `p` in `(a, b]` (open at an infinite end).
pub fn budan_fourier_bound(p: &RPoly, a: &ExtReal, b: &ExtReal) -> Result<ParityBound> {
    let v = changes_der(p, a, b)?;
    let bound = usize::try_from(v).map_err(|_| Error::InternalNegative(v))?;
    Ok(ParityBound::new(bound))
}

/// Descartes' rule of signs: bound on the positive roots of `p`.
pub fn descartes_sign(p: &RPoly) -> Result<ParityBound> {
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    Ok(ParityBound::new(var(p.coeffs())))
}

/// `(1 + x)^n · p((b + a·x) / (1 + x))`: maps the roots of `p` in `(a, b)`
/// one-to-one onto the positive roots of the result.
pub fn interval_transform(a: &Rat, b: &Rat, p: &RPoly) -> RPoly {
    let num = Poly::linear(b.clone(), a.clone());
    let den = Poly::linear(Rat::one(), Rat::one());
    p.fcompose(&num, &den)
}

/// Descartes roots test: bound on the roots of `p` in the open interval `(a, b)`.
pub fn descartes_roots_test(a: &Rat, b: &Rat, p: &RPoly) -> Result<ParityBound> {
    if a >= b {
        return Err(Error::BadInterval);
    }
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    Ok(ParityBound::new(var(interval_transform(a, b, p).coeffs())))
}
