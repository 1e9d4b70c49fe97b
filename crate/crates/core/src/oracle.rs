//! Constructive ground truth: polynomials built from chosen roots, so every
//! count is known exactly without any numeric root finding.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Ball, HalfPlane};
use crate::error::{Error, Result};
use crate::format::{gauss_object, rat_string};
use crate::number::{ExtReal, Field, GaussRat, Rat};
use crate::poly::{CPoly, Poly, RPoly};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RealRoot {
    #[serde(with = "rat_string")]
    pub value: Rat,
    pub multiplicity: u32,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComplexRoot {
    #[serde(with = "gauss_object")]
    pub value: GaussRat,
    pub multiplicity: u32,
}

/// The irreducible factor `x² + b·x + c` with `b² − 4c < 0`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Quadratic {
    #[serde(with = "rat_string")]
    pub b: Rat,
    #[serde(with = "rat_string")]
    pub c: Rat,
    pub multiplicity: u32,
}

impl Quadratic {
    pub fn new(b: Rat, c: Rat, multiplicity: u32) -> Self {
        let q = Quadratic { b, c, multiplicity };
        assert!(
            q.discriminant().is_negative(),
            "quadratic factor must be irreducible"
        );
        q
    }

    pub fn discriminant(&self) -> Rat {
        &self.b * &self.b - Rat::from_integer(BigInt::from(4)) * &self.c
    }

    pub fn poly(&self) -> RPoly {
        Poly::new(vec![self.c.clone(), self.b.clone(), Rat::one()])
    }

    /// Real part of both roots.
    fn root_re(&self) -> Rat {
        -&self.b / Rat::from_integer(BigInt::from(2))
    }

    /// Square of the (positive) imaginary part of the upper root.
    fn root_im_sq(&self) -> Rat {
        -self.discriminant() / Rat::from_integer(BigInt::from(4))
    }
}

/// A polynomial described by its roots.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RootSpec {
    #[serde(default)]
    pub real_roots: Vec<RealRoot>,
    #[serde(default)]
    pub complex_roots: Vec<ComplexRoot>,
    #[serde(default)]
    pub quadratics: Vec<Quadratic>,
    #[serde(with = "rat_string")]
    pub scalar: Rat,
}

impl Default for RootSpec {
    fn default() -> Self {
        RootSpec {
            real_roots: Vec::new(),
            complex_roots: Vec::new(),
            quadratics: Vec::new(),
            scalar: Rat::one(),
        }
    }
}

impl RootSpec {
    pub fn with_real_roots(roots: &[(Rat, u32)]) -> Self {
        RootSpec {
            real_roots: roots
                .iter()
                .map(|(value, multiplicity)| RealRoot {
                    value: value.clone(),
                    multiplicity: *multiplicity,
                })
                .collect(),
            ..Default::default()
        }
    }

    pub fn with_complex_roots(roots: &[(GaussRat, u32)]) -> Self {
        RootSpec {
            complex_roots: roots
                .iter()
                .map(|(value, multiplicity)| ComplexRoot {
                    value: value.clone(),
                    multiplicity: *multiplicity,
                })
                .collect(),
            ..Default::default()
        }
    }

    pub fn degree(&self) -> usize {
        let lin: u32 = self.real_roots.iter().map(|r| r.multiplicity).sum::<u32>()
            + self
                .complex_roots
                .iter()
                .map(|r| r.multiplicity)
                .sum::<u32>();
        let quad: u32 = self.quadratics.iter().map(|q| q.multiplicity).sum();
        (lin + 2 * quad) as usize
    }

    /// True when every root is real (no quadratics, no non-real linear roots).
    pub fn all_real(&self) -> bool {
        self.quadratics.is_empty() && self.complex_roots.iter().all(|r| r.value.is_real())
    }

    /// Every linear root with its multiplicity, real roots embedded.
    pub fn linear_roots(&self) -> Vec<(GaussRat, u32)> {
        self.real_roots
            .iter()
            .map(|r| (GaussRat::from(r.value.clone()), r.multiplicity))
            .chain(
                self.complex_roots
                    .iter()
                    .map(|r| (r.value.clone(), r.multiplicity)),
            )
            .collect()
    }

    /// Real roots with multiplicity, including real entries of `complex_roots`.
    pub fn real_root_list(&self) -> Vec<(Rat, u32)> {
        self.linear_roots()
            .into_iter()
            .filter(|(z, _)| z.is_real())
            .map(|(z, m)| (z.re, m))
            .collect()
    }
}

/// The real polynomial `scalar · Π (x − r)^m · Π (x² + b x + c)^m`.
pub fn build_rpoly(spec: &RootSpec) -> Result<RPoly> {
    if spec.complex_roots.iter().any(|r| !r.value.is_real()) {
        return Err(Error::NonRealSpec);
    }
    let mut p = RPoly::constant(spec.scalar.clone());
    for (r, m) in spec.real_root_list() {
        p = &p * &RPoly::linear_factor(&r).pow(m);
    }
    for q in &spec.quadratics {
        p = &p * &q.poly().pow(q.multiplicity);
    }
    Ok(p)
}

/// The complex polynomial with the listed roots (quadratic factors included).
pub fn build_cpoly(spec: &RootSpec) -> CPoly {
    let mut p = CPoly::constant(GaussRat::from(spec.scalar.clone()));
    for (z, m) in spec.linear_roots() {
        p = &p * &CPoly::linear_factor(&z).pow(m);
    }
    for q in &spec.quadratics {
        p = &p * &q.poly().to_complex().pow(q.multiplicity);
    }
    p
}

/// Ground-truth count of real roots in `(lo, hi)` or `(lo, hi]`.
pub fn true_count_real(
    spec: &RootSpec,
    lo: &ExtReal,
    hi: &ExtReal,
    closed_right: bool,
    with_multiplicity: bool,
) -> usize {
    spec.real_root_list()
        .into_iter()
        .filter(|(r, _)| {
            let x = ExtReal::Finite(r.clone());
            &x > lo && (&x < hi || (closed_right && &x == hi))
        })
        .map(|(_, m)| if with_multiplicity { m as usize } else { 1 })
        .sum()
}

/// A region of the complex plane for ground-truth counting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Region {
    Upper,
    RealAxis,
    Ball(Ball),
    HalfPlane(HalfPlane),
}

/// Sign of `u + v·√t` for rationals `u`, `v` and `t ≥ 0`.
fn sign_surd(u: &Rat, v: &Rat, t: &Rat) -> i8 {
    let su = u.signum();
    let sv = if t.is_zero() { Rat::zero() } else { v.signum() };
    if sv.is_zero() {
        return crate::number::rat_sign(u);
    }
    if su.is_zero() || su == sv {
        return crate::number::rat_sign(&sv);
    }
    // opposite signs: compare u² with v²·t
    let lhs = u * u;
    let rhs = v * v * t;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => crate::number::rat_sign(u),
        std::cmp::Ordering::Less => crate::number::rat_sign(&sv),
    }
}

/// Whether the root `re + σ·i·√im_sq` of a quadratic factor (σ = ±1) lies in `region`.
fn quadratic_root_in(region: &Region, re: &Rat, im_sq: &Rat, sigma: i64) -> bool {
    let sigma = Rat::from_integer(BigInt::from(sigma));
    match region {
        Region::Upper => sigma.is_positive(),
        Region::RealAxis => false,
        Region::HalfPlane(h) => {
            // Im((z − a)·conj(d)) = σ·s·d.re − (re − a.re)·d.im − a.im·d.re
            let (a, d) = (&h.anchor, &h.direction);
            let u = -((re - &a.re) * &d.im) - &a.im * &d.re;
            let v = &sigma * &d.re;
            sign_surd(&u, &v, im_sq) > 0
        }
        Region::Ball(b) => {
            if !b.radius.is_positive() {
                return false;
            }
            // |z − c|² − r² = (re − c.re)² + s² − 2σ·s·c.im + c.im² − r²
            let c = &b.center;
            let dx = re - &c.re;
            let u = &dx * &dx + im_sq + &c.im * &c.im - &b.radius * &b.radius;
            let v = -(Rat::from_integer(BigInt::from(2)) * &sigma * &c.im);
            sign_surd(&u, &v, im_sq) < 0
        }
    }
}

fn linear_root_in(region: &Region, z: &GaussRat) -> bool {
    match region {
        Region::Upper => z.im.is_positive(),
        Region::RealAxis => z.im.is_zero(),
        Region::Ball(b) => b.contains(z),
        Region::HalfPlane(h) => h.contains(z),
    }
}

/// Ground-truth number of roots (with multiplicity) strictly inside `region`.
pub fn true_count_region(spec: &RootSpec, region: &Region) -> usize {
    let lin: usize = spec
        .linear_roots()
        .iter()
        .filter(|(z, _)| linear_root_in(region, z))
        .map(|(_, m)| *m as usize)
        .sum();
    let quad: usize = spec
        .quadratics
        .iter()
        .map(|q| {
            let (re, im_sq) = (q.root_re(), q.root_im_sq());
            let hits = [1, -1]
                .into_iter()
                .filter(|&s| quadratic_root_in(region, &re, &im_sq, s))
                .count();
            hits * q.multiplicity as usize
        })
        .sum();
    lin + quad
}

/// Knobs for [`random_spec_with`].
#[derive(Clone, Debug)]
pub struct SpecConfig {
    pub max_degree: usize,
    pub coeff_bits: u32,
    pub max_multiplicity: u32,
    /// Allow irreducible real quadratic factors.
    pub quadratics: bool,
    /// Draw non-real Gaussian-rational roots (the result is then complex).
    pub complex_roots: bool,
}

impl SpecConfig {
    pub fn new(max_degree: usize, coeff_bits: u32) -> Self {
        SpecConfig {
            max_degree,
            coeff_bits,
            max_multiplicity: 3,
            quadratics: true,
            complex_roots: false,
        }
    }
}

/// Random rational with numerator and denominator bounded by `2^bits − 1`.
pub fn random_rat(rng: &mut impl Rng, bits: u32) -> Rat {
    let hi = (1i64 << bits.clamp(1, 62)) - 1;
    let n = rng.gen_range(-hi..=hi);
    let d = rng.gen_range(1..=hi);
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn random_nonzero_rat(rng: &mut impl Rng, bits: u32) -> Rat {
    loop {
        let q = random_rat(rng, bits);
        if !q.is_zero() {
            return q;
        }
    }
}

fn add_root<T: PartialEq + Clone>(roots: &mut Vec<(T, u32)>, value: T, m: u32) {
    match roots.iter_mut().find(|(v, _)| *v == value) {
        Some((_, mult)) => *mult += m,
        None => roots.push((value, m)),
    }
}

/// Deterministic pseudo-random root specification.
pub fn random_spec_with(seed: u64, cfg: &SpecConfig) -> RootSpec {
    assert!(cfg.max_degree >= 1, "max_degree must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.gen_range(1..=cfg.max_degree);
    let mut reals: Vec<(Rat, u32)> = Vec::new();
    let mut complexes: Vec<(GaussRat, u32)> = Vec::new();
    let mut quads: Vec<Quadratic> = Vec::new();
    let mut deg = 0;
    while deg < target {
        let remaining = target - deg;
        let m = rng.gen_range(1..=cfg.max_multiplicity.max(1).min(remaining as u32));
        let roll = rng.gen_range(0..10);
        if cfg.quadratics && roll < 2 && remaining >= 2 {
            let qm = m.min((remaining / 2) as u32).max(1);
            let b = random_rat(&mut rng, cfg.coeff_bits);
            let e = random_nonzero_rat(&mut rng, cfg.coeff_bits).abs();
            let c = &b * &b / Rat::from_integer(BigInt::from(4)) + e;
            quads.push(Quadratic::new(b, c, qm));
            deg += 2 * qm as usize;
        } else if cfg.complex_roots && roll >= 4 {
            let z = GaussRat::new(
                random_rat(&mut rng, cfg.coeff_bits),
                random_rat(&mut rng, cfg.coeff_bits),
            );
            add_root(&mut complexes, z, m);
            deg += m as usize;
        } else {
            add_root(&mut reals, random_rat(&mut rng, cfg.coeff_bits), m);
            deg += m as usize;
        }
    }
    let mut spec = RootSpec::with_real_roots(&reals);
    spec.complex_roots = RootSpec::with_complex_roots(&complexes).complex_roots;
    spec.quadratics = quads;
    spec.scalar = random_nonzero_rat(&mut rng, cfg.coeff_bits);
    spec
}

/// Real roots and irreducible quadratics, multiplicities up to 3.
pub fn random_spec(seed: u64, max_degree: usize, coeff_bits: u32) -> RootSpec {
    random_spec_with(seed, &SpecConfig::new(max_degree, coeff_bits))
}

/// Ensures the spec's real part describes a real polynomial: merges real
/// entries of `complex_roots` into `real_roots`.
pub fn canonicalize(spec: &RootSpec) -> RootSpec {
    let mut reals: Vec<(Rat, u32)> = Vec::new();
    let mut complexes: Vec<(GaussRat, u32)> = Vec::new();
    for (z, m) in spec.linear_roots() {
        if z.is_real() {
            add_root(&mut reals, z.re, m);
        } else {
            add_root(&mut complexes, z, m);
        }
    }
    let mut out = RootSpec::with_real_roots(&reals);
    out.complex_roots = RootSpec::with_complex_roots(&complexes).complex_roots;
    out.quadratics = spec.quadratics.clone();
    out.scalar = spec.scalar.clone();
    out
}

/// A point that is not a root of `spec`, found by nudging `x` upward.
pub fn avoid_roots(spec: &RootSpec, x: Rat, step: &Rat) -> Rat {
    let roots = spec.real_root_list();
    let mut x = x;
    while roots.iter().any(|(r, _)| *r == x) {
        x = x.add_ref(step);
    }
    x
}
