//! Signed remainder sequences and exact real root counting.
//!
//! The classical sequence counts distinct roots; the extended sequence,
//! which restarts from the derivative whenever a division is exact, counts
//! roots with multiplicity.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::number::{clear_denominators, ExtReal, Rat};
use crate::poly::{Poly, RPoly};
use crate::signvar::{check_endpoint, check_interval, var_diff};

fn debug_check_decreasing(seq: &[RPoly]) {
    if cfg!(debug_assertions) {
        for w in seq.windows(2).skip(1) {
            debug_assert!(
                w[1].degree() < w[0].degree(),
                "remainder sequence degrees must strictly decrease"
            );
        }
    }
}

/// Integer-coefficient positive multiple of `p` with unit content.
fn primitive(p: RPoly) -> RPoly {
    if p.is_zero() {
        return p;
    }
    let (nums, _) = clear_denominators(p.coeffs());
    let content = nums.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    Poly::new(
        nums.into_iter()
            .map(|c| Rat::from_integer(c / &content))
            .collect(),
    )
}

fn remainder_sequence(p: &RPoly, q: &RPoly, extended: bool, reduce: bool) -> Vec<RPoly> {
    let norm = |p: RPoly| if reduce { primitive(p) } else { p };
    let mut out = Vec::new();
    let (mut p, mut q) = (norm(p.clone()), norm(q.clone()));
    while !p.is_zero() {
        let next = if q.is_zero() {
            RPoly::zero()
        } else {
            let r = p.rem(&q).expect("divisor checked nonzero");
            if extended && r.is_zero() {
                norm(q.pderiv())
            } else {
                norm(-r)
            }
        };
        out.push(p);
        p = q;
        q = next;
    }
    debug_check_decreasing(&out);
    out
}

/// Signed remainder sequence `[p, q, −(p mod q), ...]`, ending at the last
/// nonzero element. Empty when `p` is zero.
pub fn smods(p: &RPoly, q: &RPoly) -> Vec<RPoly> {
    remainder_sequence(p, q, false, false)
}

/// Extended signed remainder sequence: like [`smods`], but when a division
/// is exact the sequence continues with the derivative of the divisor.
pub fn smods_ext(p: &RPoly, q: &RPoly) -> Vec<RPoly> {
    remainder_sequence(p, q, true, false)
}

/// Each element a positive multiple of the matching [`smods`] element, so
/// sign variations agree; coefficients stay small integers.
pub fn smods_primitive(p: &RPoly, q: &RPoly) -> Vec<RPoly> {
    remainder_sequence(p, q, false, true)
}

/// [`smods_ext`] counterpart of [`smods_primitive`].
pub fn smods_ext_primitive(p: &RPoly, q: &RPoly) -> Vec<RPoly> {
    remainder_sequence(p, q, true, true)
}

fn fin(q: &Rat) -> ExtReal {
    ExtReal::Finite(q.clone())
}

pub fn changes_itv_smods(a: &Rat, b: &Rat, p: &RPoly, q: &RPoly) -> Result<i64> {
    check_interval(&fin(a), &fin(b))?;
    var_diff(&smods_primitive(p, q), &fin(a), &fin(b))
}

/// Variation drop of `smods(p, q)` from −∞ to +∞.
pub fn changes_r_smods(p: &RPoly, q: &RPoly) -> i64 {
    var_diff(&smods_primitive(p, q), &ExtReal::NegInf, &ExtReal::PosInf).expect("−∞ < +∞")
}

pub fn changes_itv_smods_ext(a: &Rat, b: &Rat, p: &RPoly, q: &RPoly) -> Result<i64> {
    check_interval(&fin(a), &fin(b))?;
    var_diff(&smods_ext_primitive(p, q), &fin(a), &fin(b))
}

/// Variation drop of `smods_ext(p, q)` from −∞ to +∞.
pub fn changes_r_smods_ext(p: &RPoly, q: &RPoly) -> i64 {
    var_diff(
        &smods_ext_primitive(p, q),
        &ExtReal::NegInf,
        &ExtReal::PosInf,
    )
    .expect("−∞ < +∞")
}

fn check_count_args(p: &RPoly, a: &ExtReal, b: &ExtReal) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    check_interval(a, b)?;
    check_endpoint(p, a)?;
    check_endpoint(p, b)
}

fn to_count(v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::InternalNegative(v))
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
pub fn count_distinct_real(p: &RPoly, a: &ExtReal, b: &ExtReal) -> Result<usize> {
    check_count_args(p, a, b)?;
    to_count(var_diff(&smods_primitive(p, &p.pderiv()), a, b)?)
}

/// Number of real roots of `p` in the open interval `(a, b)`, counted with
/// multiplicity.
pub fn count_real_mult(p: &RPoly, a: &ExtReal, b: &ExtReal) -> Result<usize> {
    check_count_args(p, a, b)?;
    to_count(var_diff(&smods_ext_primitive(p, &p.pderiv()), a, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{rat_frac, rat_int};
    use crate::poly::Poly;

    fn rp(cs: &[i64]) -> RPoly {
        Poly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    fn fin_i(n: i64) -> ExtReal {
        ExtReal::Finite(rat_int(n))
    }

    #[test]
    fn smods_examples() {
        assert_eq!(
            smods(&rp(&[-1, 0, 1]), &rp(&[0, 2])),
            vec![rp(&[-1, 0, 1]), rp(&[0, 2]), rp(&[1])]
        );
        assert!(smods(&RPoly::zero(), &rp(&[1, 1])).is_empty());
        assert_eq!(smods(&rp(&[3, 1]), &RPoly::zero()), vec![rp(&[3, 1])]);
    }

    #[test]
    fn smods_ext_examples() {
        assert_eq!(
            smods_ext(&rp(&[1, -2, 1]), &rp(&[-2, 2])),
            vec![rp(&[1, -2, 1]), rp(&[-2, 2]), rp(&[2])]
        );
        assert_eq!(
            smods_ext(&rp(&[-1, 0, 1]), &rp(&[0, 2])),
            vec![rp(&[-1, 0, 1]), rp(&[0, 2]), rp(&[1])]
        );
    }

    #[test]
    fn changes_smods_examples() {
        let (m2, two) = (rat_int(-2), rat_int(2));
        assert_eq!(
            changes_itv_smods(&m2, &two, &rp(&[-1, 0, 1]), &rp(&[0, 2])).unwrap(),
            2
        );
        assert_eq!(changes_r_smods(&RPoly::x(), &rp(&[1])), 1);
        assert_eq!(
            changes_itv_smods(&m2, &two, &rp(&[3]), &rp(&[-5])).unwrap(),
            0
        );
        assert_eq!(
            changes_itv_smods(&two, &m2, &rp(&[3]), &rp(&[-5])),
            Err(Error::BadInterval)
        );
    }

    #[test]
    fn distinct_examples() {
        let p = rp(&[2, -3, 1]);
        assert_eq!(count_distinct_real(&p, &fin_i(0), &fin_i(3)).unwrap(), 2);
        let cube = RPoly::linear_factor(&rat_frac(1, 2)).pow(3);
        assert_eq!(count_distinct_real(&cube, &fin_i(0), &fin_i(1)).unwrap(), 1);
        let x2p1 = rp(&[1, 0, 1]);
        assert_eq!(
            count_distinct_real(&x2p1, &ExtReal::NegInf, &ExtReal::PosInf).unwrap(),
            0
        );
    }

    #[test]
    fn mult_examples() {
        let sq = rp(&[1, -2, 1]);
        assert_eq!(count_real_mult(&sq, &fin_i(0), &fin_i(2)).unwrap(), 2);
        let p = &RPoly::linear_factor(&rat_frac(1, 2)).pow(3) * &rp(&[-3, 1]);
        assert_eq!(count_real_mult(&p, &fin_i(0), &fin_i(1)).unwrap(), 3);
        assert_eq!(
            count_real_mult(&p, &ExtReal::NegInf, &ExtReal::PosInf).unwrap(),
            4
        );
        assert_eq!(
            count_real_mult(&rp(&[1, 0, 1]), &ExtReal::NegInf, &ExtReal::PosInf).unwrap(),
            0
        );
    }

    #[test]
    fn count_errors() {
        let sq = rp(&[1, -2, 1]);
        assert_eq!(
            count_real_mult(&RPoly::zero(), &fin_i(0), &fin_i(1)),
            Err(Error::ZeroPoly)
        );
        assert_eq!(
            count_real_mult(&sq, &fin_i(2), &fin_i(0)),
            Err(Error::BadInterval)
        );
        assert!(matches!(
            count_real_mult(&sq, &fin_i(1), &fin_i(3)),
            Err(Error::RootAtEndpoint(_))
        ));
        assert!(matches!(
            count_distinct_real(&sq, &fin_i(-1), &fin_i(1)),
            Err(Error::RootAtEndpoint(_))
        ));
    }
}
