//! Complex root counting (with multiplicity) in the upper half-plane, in an
//! arbitrary open half-plane, and in an open ball.
//!
//! The upper half-plane count combines the Cauchy index of `Im P / Re P`
//! over the real line, computed as a sign-variation drop of the remainder
//! sequence of `(Re P, Im P)`, with the number of real roots of `P`, which
//! are exactly the real roots of `gcd(Re P, Im P)` and are counted with the
//! extended sequence. Balls and half-planes are reduced to the upper
//! half-plane by exact substitutions.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::number::{Field, GaussRat, Rat};
use crate::poly::{CPoly, Poly, RPoly};
use crate::sturm::{changes_r_smods, changes_r_smods_ext};

/// The open disc `{ z : |z − center| < radius }`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ball {
    pub center: GaussRat,
    pub radius: Rat,
}

impl Ball {
    pub fn new(center: GaussRat, radius: Rat) -> Self {
        Ball { center, radius }
    }

    pub fn contains(&self, z: &GaussRat) -> bool {
        self.radius.is_positive()
            && z.sub_ref(&self.center).norm_sqr() < &self.radius * &self.radius
    }
}

/// The open half-plane `{ z : Im((z − anchor) / direction) > 0 }`, i.e. the
/// points strictly to the left of the line through `anchor` along `direction`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfPlane {
    pub anchor: GaussRat,
    pub direction: GaussRat,
}

impl HalfPlane {
    pub fn new(anchor: GaussRat, direction: GaussRat) -> Result<Self> {
        if direction.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(HalfPlane { anchor, direction })
    }

    pub fn upper() -> Self {
        HalfPlane {
            anchor: GaussRat::zero(),
            direction: GaussRat::one(),
        }
    }

    pub fn contains(&self, z: &GaussRat) -> bool {
        // Im((z − a)·conj(d)) has the sign of Im((z − a)/d)
        let w = z.sub_ref(&self.anchor).mul_ref(&self.direction.conj());
        w.im.is_positive()
    }
}

fn check_even_nonneg(v: i64) -> Result<usize> {
    if v < 0 {
        return Err(Error::InternalNegative(v));
    }
    if v % 2 != 0 {
        return Err(Error::InternalParity(v));
    }
    Ok((v / 2) as usize)
}

/// `gcd(Re p, Im p)` for the monic normalization of a nonzero `p`. Its real
/// roots are the real roots of `p`, with the same multiplicities.
pub fn real_axis_gcd(p: &CPoly) -> Result<RPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let pm = p.monic();
    pm.im_poly().gcd(&pm.re_poly())
}

/// Number of real roots of `p`, with multiplicity.
pub fn proots_real_axis(p: &CPoly) -> Result<usize> {
    let g = real_axis_gcd(p)?;
    let v = changes_r_smods_ext(&g, &g.pderiv());
    usize::try_from(v).map_err(|_| Error::InternalNegative(v))
}

/// Number of roots of `p` with strictly positive imaginary part, with multiplicity.
pub fn proots_upper(p: &CPoly) -> Result<usize> {
    let deg = p.degree_nonzero()? as i64;
    let pm = p.monic();
    let (pr, pi) = (pm.re_poly(), pm.im_poly());
    let g = pi.gcd(&pr)?;
    let on_axis = changes_r_smods_ext(&g, &g.pderiv());
    let cindex = changes_r_smods(&pr, &pi);
    check_even_nonneg(deg - on_axis - cindex)
}

/// `q(x) = p(center + radius·x)` followed by the Cayley-type substitution
/// `x ↦ (i − x)/(i + x)`, which sends the upper half-plane onto the unit disc.
pub fn ball_to_upper(p: &CPoly, center: &GaussRat, radius: &Rat) -> CPoly {
    let shifted = p.pcompose(&Poly::linear(
        center.clone(),
        GaussRat::from(radius.clone()),
    ));
    let i = GaussRat::i();
    let num = Poly::linear(i.clone(), -GaussRat::one());
    let den = Poly::linear(i, GaussRat::one());
    shifted.fcompose(&num, &den)
}

/// Number of roots of `p` in the open ball `|z − center| < radius`, with
/// multiplicity. A nonpositive radius gives 0 without inspecting `p`.
pub fn proots_ball(p: &CPoly, center: &GaussRat, radius: &Rat) -> Result<usize> {
    if !radius.is_positive() {
        return Ok(0);
    }
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    proots_upper(&ball_to_upper(p, center, radius))
}

/// Number of roots of `p` in the open half-plane `h`, with multiplicity.
pub fn proots_half_plane(p: &CPoly, h: &HalfPlane) -> Result<usize> {
    if h.direction.is_zero() {
        return Err(Error::ZeroDirection);
    }
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let pulled = p.pcompose(&Poly::linear(h.anchor.clone(), h.direction.clone()));
    proots_upper(&pulled)
}
