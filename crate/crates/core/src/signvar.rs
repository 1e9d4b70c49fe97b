//! Sign variations of number sequences and of polynomial sequences evaluated
//! on the extended real line.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::number::{rat_poly_sign_at, rat_sign, ExtReal, Rat};
use crate::poly::RPoly;

/// A sign in {−1, 0, +1}.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(q: &Rat) -> Sign {
        Sign::from_i8(rat_sign(q))
    }

    pub fn from_i8(s: i8) -> Sign {
        match s.signum() {
            -1 => Sign::Neg,
            0 => Sign::Zero,
            _ => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    pub fn flip(self) -> Sign {
        Sign::from_i8(-self.as_i8())
    }
}

/// Counts strict sign changes in `signs` after dropping zeros.
pub fn var_signs<I: IntoIterator<Item = Sign>>(signs: I) -> usize {
    let mut last = Sign::Zero;
    let mut changes = 0;
    for s in signs {
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Sign variations of a list of rationals, zeros dropped.
pub fn var(xs: &[Rat]) -> usize {
    var_signs(xs.iter().map(Sign::of))
}

/// Sign of `p` at a point of the extended real line. At ±∞ the sign is read
/// off the leading coefficient and the parity of the degree.
pub fn sign_at(p: &RPoly, x: &ExtReal) -> Sign {
    let Some(lead) = p.lead_coeff() else {
        return Sign::Zero;
    };
    match x {
        ExtReal::Finite(q) => Sign::from_i8(rat_poly_sign_at(p.coeffs(), q)),
        ExtReal::PosInf => Sign::of(lead),
        ExtReal::NegInf => {
            let s = Sign::of(lead);
            if p.degree().unwrap_or(0) % 2 == 1 {
                s.flip()
            } else {
                s
            }
        }
    }
}

/// Sign variations of `ps` evaluated at `x`.
pub fn var_at(ps: &[RPoly], x: &ExtReal) -> usize {
    var_signs(ps.iter().map(|p| sign_at(p, x)))
}

/// `var_at(ps, a) − var_at(ps, b)`; may be negative.
pub fn var_diff(ps: &[RPoly], a: &ExtReal, b: &ExtReal) -> Result<i64> {
    check_interval(a, b)?;
    Ok(var_at(ps, a) as i64 - var_at(ps, b) as i64)
}

pub(crate) fn check_interval(a: &ExtReal, b: &ExtReal) -> Result<()> {
    if a < b {
        Ok(())
    } else {
        Err(Error::BadInterval)
    }
}

/// Errors with `RootAtEndpoint` if `p` vanishes at a finite endpoint.
pub(crate) fn check_endpoint(p: &RPoly, x: &ExtReal) -> Result<()> {
    match x {
        ExtReal::Finite(q) if p.eval(q).is_zero() => Err(Error::RootAtEndpoint(x.to_string())),
        _ => Ok(()),
    }
}
