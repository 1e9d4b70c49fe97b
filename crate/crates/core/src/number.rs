//! Coefficient fields: canonical rationals and Gaussian rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always kept reduced with a positive denominator.
pub type Rat = BigRational;

/// Exact field operations needed by the polynomial routines.
///
/// The by-reference methods exist so that hot loops (remainder sequences,
/// Taylor shifts) avoid cloning big integers for every product.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    /// Panics on division by zero, like the underlying rational type.
    fn div_ref(&self, other: &Self) -> Self;
    fn from_rat(r: Rat) -> Self;

    /// Remainder of `p` modulo a nonzero `q` (lowest-first, normalized), when
    /// the field has a faster route than generic long division.
    fn poly_rem(_p: &[Self], _q: &[Self]) -> Option<Vec<Self>> {
        None
    }
}

impl Field for Rat {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn poly_rem(p: &[Self], q: &[Self]) -> Option<Vec<Self>> {
        Some(rat_poly_rem(p, q))
    }
}

/// Integer numerators over a common denominator: `coeffs = nums / den`.
pub(crate) fn clear_denominators(coeffs: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

/// `p mod q` over the rationals, computed by integer pseudo-division and a
/// single exact rescaling. The result is the same rational remainder as long
/// division, but each coefficient is reduced once instead of after every step.
fn rat_poly_rem(p: &[Rat], q: &[Rat]) -> Vec<Rat> {
    let dq = q.len() - 1;
    if p.len() <= dq {
        return p.to_vec();
    }
    let (mut r, p_den) = clear_denominators(p);
    // q's scale does not affect the remainder; drop its content too
    let (mut qi, _) = clear_denominators(q);
    let content = qi.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !content.is_one() {
        for c in qi.iter_mut() {
            *c /= &content;
        }
    }
    let lc = qi[dq].clone();
    let mut scale = BigInt::one();
    for k in (0..p.len() - dq).rev() {
        let top = std::mem::take(&mut r[k + dq]);
        if top.is_zero() {
            continue;
        }
        // r ← lc·r − top·x^k·q on the still-live prefix
        if !lc.is_one() {
            for c in r[..k + dq].iter_mut() {
                *c *= &lc;
            }
            scale *= &lc;
        }
        for (j, d) in qi[..dq].iter().enumerate() {
            r[k + j] -= &top * d;
        }
    }
    r.truncate(dq);
    let den = p_den * scale;
    let mut out: Vec<Rat> = r.into_iter().map(|n| Rat::new(n, den.clone())).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Sign of `Σ coeffs[k]·x^k`, evaluated in integers after clearing all
/// denominators once. Agrees with the sign of Horner evaluation.
pub fn rat_poly_sign_at(coeffs: &[Rat], x: &Rat) -> i8 {
    let Some(c0) = coeffs.first() else {
        return 0;
    };
    if x.is_zero() {
        return rat_sign(c0);
    }
    // x = n/d: d^deg · L · p(x) = Σ (L·c_k) n^k d^(deg−k), with L, d > 0
    let (nums, _) = clear_denominators(coeffs);
    let (n, d) = (x.numer(), x.denom());
    let deg = nums.len() - 1;
    let mut dpows = Vec::with_capacity(deg + 1);
    let mut dpow = BigInt::one();
    for _ in 0..=deg {
        dpows.push(dpow.clone());
        dpow *= d;
    }
    let mut acc = BigInt::zero();
    for (k, c) in nums.iter().enumerate().rev() {
        acc = acc * n + c * &dpows[deg - k];
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Sign of a rational as -1, 0 or +1.
pub fn rat_sign(q: &Rat) -> i8 {
    match q.numer().sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"` or `"n/d"`. Denominators must be strictly positive; the value
/// is reduced after parsing.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Rat::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if !d.is_positive() {
                return Err(Error::Parse(format!(
                    "denominator must be positive in {s:?}"
                )));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rat(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRat::new(rat_int(re), rat_int(im))
    }

    pub fn i() -> Self {
        GaussRat::new(Rat::zero(), Rat::one())
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        GaussRat::new(&self.re / &n, -(&self.im / &n))
    }
}

impl From<Rat> for GaussRat {
    fn from(re: Rat) -> Self {
        GaussRat::new(re, Rat::zero())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), rat_sign(&self.im)) {
            (_, 0) => write!(f, "{}", self.re),
            (true, _) => write!(f, "{}i", self.im),
            (false, s) if s < 0 => write!(f, "{}-{}i", self.re, -self.im.clone()),
            _ => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        self.mul_ref(&o)
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, o: GaussRat) -> GaussRat {
        self.div_ref(&o)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::new(Rat::one(), Rat::zero())
    }
}

impl Field for GaussRat {
    fn add_ref(&self, o: &Self) -> Self {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::from(&self.re * &o.re);
        }
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn div_ref(&self, o: &Self) -> Self {
        if o.im.is_zero() {
            assert!(!o.re.is_zero(), "division by zero Gaussian rational");
            return GaussRat::new(&self.re / &o.re, &self.im / &o.re);
        }
        self.mul_ref(&o.inv())
    }
    fn from_rat(r: Rat) -> Self {
        GaussRat::from(r)
    }
}

/// A point of the extended real line.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum ExtReal {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl ExtReal {
    fn rank(&self) -> u8 {
        match self {
            ExtReal::NegInf => 0,
            ExtReal::Finite(_) => 1,
            ExtReal::PosInf => 2,
        }
    }

    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtReal::Finite(q) => Some(q),
            _ => None,
        }
    }
}

impl From<Rat> for ExtReal {
    fn from(q: Rat) -> Self {
        ExtReal::Finite(q)
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::Finite(q) => f.write_str(&format_rat(q)),
            ExtReal::PosInf => f.write_str("+inf"),
        }
    }
}

/// Parses a rational or one of `-inf`, `inf`, `+inf`.
pub fn parse_ext_real(s: &str) -> Result<ExtReal, Error> {
    match s.trim() {
        "-inf" | "-oo" => Ok(ExtReal::NegInf),
        "inf" | "+inf" | "oo" | "+oo" => Ok(ExtReal::PosInf),
        other => parse_rat(other).map(ExtReal::Finite),
    }
}
