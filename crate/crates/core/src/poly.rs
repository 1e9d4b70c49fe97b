//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored lowest degree first and never carry trailing
//! zeros, so the zero polynomial is the empty vector and equality of
//! polynomials is equality of coefficient vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::number::{Field, GaussRat, Rat};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

pub type RPoly = Poly<Rat>;
pub type CPoly = Poly<GaussRat>;

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![F::zero(), F::one()],
        }
    }

    /// `c0 + c1·x`.
    pub fn linear(c0: F, c1: F) -> Self {
        Self::new(vec![c0, c1])
    }

    /// `x − root`.
    pub fn linear_factor(root: &F) -> Self {
        Self::linear(-root.clone(), F::one())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial that must be nonzero.
    pub fn degree_nonzero(&self) -> Result<usize> {
        self.degree().ok_or(Error::ZeroPoly)
    }

    pub fn lead_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.lead_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = F::one().div_ref(lc);
                self.scale(&inv)
            }
        }
    }

    /// Formal derivative.
    pub fn pderiv(&self) -> Self {
        let mut k = F::zero();
        let coeffs = self
            .coeffs
            .iter()
            .skip(1)
            .map(|c| {
                k = k.add_ref(&F::one());
                c.mul_ref(&k)
            })
            .collect();
        Self::new(coeffs)
    }

    /// Euclidean division: `self = quot·divisor + rem` with `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dq = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let dp = match self.degree() {
            Some(d) if d >= dq => d,
            _ => return Ok((Self::zero(), self.clone())),
        };
        let lc = &divisor.coeffs[dq];
        let unit_lead = lc.is_one();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let top = &rem[k + dq];
            if top.is_zero() {
                continue;
            }
            let c = if unit_lead {
                top.clone()
            } else {
                top.div_ref(lc)
            };
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub_ref(&c.mul_ref(d));
            }
            quot[k] = c;
        }
        rem.truncate(dq);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        match F::poly_rem(&self.coeffs, &divisor.coeffs) {
            Some(r) => Ok(Poly { coeffs: r }),
            None => self.div_rem(divisor).map(|(_, r)| r),
        }
    }

    /// Remainder by plain long division, bypassing any field-specific route.
    pub fn rem_generic(&self, divisor: &Self) -> Result<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// True when `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Self) -> Result<bool> {
        Ok(self.rem(divisor)?.is_zero())
    }

    /// Multiplicity of `a` as a root: the largest `k` with `(x − a)^k | self`.
    pub fn order(&self, a: &F) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPoly);
        }
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            // synthetic division by (x − a)
            let n = cur.coeffs.len();
            let mut quot = vec![F::zero(); n.saturating_sub(1)];
            let mut acc = F::zero();
            for i in (0..n).rev() {
                acc = acc.mul_ref(a).add_ref(&cur.coeffs[i]);
                if i > 0 {
                    quot[i - 1] = acc.clone();
                }
            }
            if n <= 1 || !acc.is_zero() {
                return Ok(k);
            }
            k += 1;
            cur = Self::new(quot);
        }
    }

    /// `x ↦ self(q(x))`.
    pub fn pcompose(&self, q: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * q) + &Self::constant(c.clone())
        })
    }

    /// Composition with the rational function `q1/q2`, cleared of denominators:
    /// the polynomial `q2^n · self(q1/q2)` where `n = deg self`.
    ///
    /// Coefficients are consumed from the leading one down to the constant
    /// term, threading the pair `(r1, r2)` from `(0, 1)` through
    /// `r1 ← r2·a + q1·r1`, `r2 ← q2·r2`.
    pub fn fcompose(&self, q1: &Self, q2: &Self) -> Self {
        let mut r1 = Self::zero();
        let mut r2 = Self::one();
        for a in self.coeffs.iter().rev() {
            r1 = &r2.scale(a) + &(q1 * &r1);
            r2 = q2 * &r2;
        }
        r1
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl RPoly {
    /// Embeds a real polynomial into the complex ones.
    pub fn to_complex(&self) -> CPoly {
        self.map(|c| GaussRat::from(c.clone()))
    }
}

impl CPoly {
    /// Coefficient-wise real part.
    pub fn re_poly(&self) -> RPoly {
        self.map(|c| c.re.clone())
    }

    /// Coefficient-wise imaginary part.
    pub fn im_poly(&self) -> RPoly {
        self.map(|c| c.im.clone())
    }

    /// Polynomial with conjugated coefficients; its roots are the conjugates.
    pub fn conj(&self) -> CPoly {
        self.map(GaussRat::conj)
    }
}

impl<'a, F: Field> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, o: &Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add_ref(d);
        }
        Poly::new(coeffs)
    }
}

impl<'a, F: Field> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, o: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), o.coeffs.get(k)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(coeffs)
    }
}

impl<'a, F: Field> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, o: &Poly<F>) -> Poly<F> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(coeffs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, o: Poly<F>) -> Poly<F> {
        &self + &o
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, o: Poly<F>) -> Poly<F> {
        &self - &o
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, o: Poly<F>) -> Poly<F> {
        &self * &o
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}
