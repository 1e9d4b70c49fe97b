//! JSON text format for polynomials and coefficients.
//!
//! A polynomial is `{"coeffs": [c0, c1, ...]}`, lowest degree first. A real
//! coefficient is a string `"n"` or `"n/d"` with `d > 0`; a complex one is
//! `{"re": "n/d", "im": "n/d"}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::number::{format_rat, parse_rat, GaussRat, Rat};
use crate::poly::{CPoly, Poly, RPoly};

/// A parsed polynomial: real when every coefficient is a plain rational.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyPoly {
    Real(RPoly),
    Complex(CPoly),
}

impl AnyPoly {
    pub fn to_complex(&self) -> CPoly {
        match self {
            AnyPoly::Real(p) => p.to_complex(),
            AnyPoly::Complex(p) => p.clone(),
        }
    }

    /// The real polynomial, if every coefficient is real.
    pub fn to_real(&self) -> Option<RPoly> {
        match self {
            AnyPoly::Real(p) => Some(p.clone()),
            AnyPoly::Complex(p) if p.im_poly().is_zero() => Some(p.re_poly()),
            AnyPoly::Complex(_) => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            AnyPoly::Real(p) => p.degree(),
            AnyPoly::Complex(p) => p.degree(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyPoly::Real(p) => rpoly_to_json(p),
            AnyPoly::Complex(p) => cpoly_to_json(p),
        }
    }
}

pub fn gauss_to_json(z: &GaussRat) -> Value {
    json!({"re": format_rat(&z.re), "im": format_rat(&z.im)})
}

fn gauss_from_value(v: &Value) -> Result<GaussRat> {
    let part = |key: &str| -> Result<Rat> {
        match v.get(key) {
            Some(Value::String(s)) => parse_rat(s),
            Some(Value::Number(n)) => parse_rat(&n.to_string()),
            None => Ok(Rat::default()),
            Some(other) => Err(Error::Parse(format!("bad {key} part {other}"))),
        }
    };
    Ok(GaussRat::new(part("re")?, part("im")?))
}

enum Coeff {
    Real(Rat),
    Complex(GaussRat),
}

fn coeff_from_value(v: &Value) -> Result<Coeff> {
    match v {
        Value::String(s) => parse_rat(s).map(Coeff::Real),
        // bare JSON integers are accepted for convenience
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rat(&n.to_string()).map(Coeff::Real),
        Value::Object(_) => gauss_from_value(v).map(Coeff::Complex),
        other => Err(Error::Parse(format!("bad coefficient {other}"))),
    }
}

/// Parses a coefficient array (the value of `"coeffs"`).
pub fn poly_from_coeff_array(v: &Value) -> Result<AnyPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("coefficients must be a JSON array".into()))?;
    let coeffs = arr
        .iter()
        .map(coeff_from_value)
        .collect::<Result<Vec<_>>>()?;
    if coeffs.iter().all(|c| matches!(c, Coeff::Real(_))) {
        let cs = coeffs
            .into_iter()
            .map(|c| match c {
                Coeff::Real(r) => r,
                Coeff::Complex(_) => unreachable!(),
            })
            .collect();
        return Ok(AnyPoly::Real(Poly::new(cs)));
    }
    let cs = coeffs
        .into_iter()
        .map(|c| match c {
            Coeff::Real(r) => GaussRat::from(r),
            Coeff::Complex(z) => z,
        })
        .collect();
    Ok(AnyPoly::Complex(Poly::new(cs)))
}

/// Parses `{"coeffs": [...]}`.
pub fn poly_from_json(v: &Value) -> Result<AnyPoly> {
    let coeffs = v
        .get("coeffs")
        .ok_or_else(|| Error::Parse("missing \"coeffs\" field".into()))?;
    poly_from_coeff_array(coeffs)
}

/// Parses either a full polynomial object or a bare coefficient array.
pub fn parse_poly(text: &str) -> Result<AnyPoly> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    if v.is_array() {
        poly_from_coeff_array(&v)
    } else {
        poly_from_json(&v)
    }
}

pub fn rpoly_to_json(p: &RPoly) -> Value {
    json!({"coeffs": p.coeffs().iter().map(format_rat).collect::<Vec<_>>()})
}

pub fn cpoly_to_json(p: &CPoly) -> Value {
    json!({"coeffs": p.coeffs().iter().map(gauss_to_json).collect::<Vec<_>>()})
}

/// Serde adapter storing a [`Rat`] as its canonical string.
pub mod rat_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        format_rat(q).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(D::Error::custom)
    }
}

/// Serde adapter storing a [`GaussRat`] as `{"re": .., "im": ..}`.
pub mod gauss_object {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Repr {
        #[serde(with = "rat_string")]
        re: Rat,
        #[serde(with = "rat_string")]
        im: Rat,
    }

    pub fn serialize<S: Serializer>(z: &GaussRat, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            re: z.re.clone(),
            im: z.im.clone(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<GaussRat, D::Error> {
        let r = Repr::deserialize(d)?;
        Ok(GaussRat::new(r.re, r.im))
    }
}
