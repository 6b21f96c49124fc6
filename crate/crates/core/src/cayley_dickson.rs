//! The Cayley-Dickson ladder: reals, complexes, quaternions, octonions,
//! sedenions (levels 0 through 4).
//!
//! Doubling convention:
//!
//! ```text
//! (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
//! conj((a, b)) = (conj(a), -b)
//! ```
//!
//! The basis is `u_0 = e` (the unit) and `u_1 .. u_{2^level - 1}`. The
//! imaginary unit `u_k` maps to slot `k` of a `(2^level - 1)`-vector.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::Rational;
use crate::sampling::Sampler;
use crate::table::{Entry, ProductTable};
use crate::vector::Vector;

pub const MAX_LEVEL: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CDElement {
    level: u32,
    coefficients: Vec<Rational>,
}

impl CDElement {
    pub fn new(level: u32, coefficients: Vec<Rational>) -> Result<Self, Error> {
        if coefficients.len() != 1usize << level {
            return Err(Error::BadCoefficientCount {
                level,
                len: coefficients.len(),
            });
        }
        Ok(CDElement { level, coefficients })
    }

    pub fn zero(level: u32) -> Self {
        CDElement {
            level,
            coefficients: vec![Rational::zero(); 1 << level],
        }
    }

    pub fn unit(level: u32) -> Self {
        Self::basis(level, 0)
    }

    /// `u_k`, with `u_0` the unit.
    pub fn basis(level: u32, k: usize) -> Self {
        let mut x = Self::zero(level);
        x.coefficients[k] = Rational::one();
        x
    }

    /// Embeds a `(2^level - 1)`-vector as a purely imaginary element.
    pub fn from_imaginary(level: u32, v: &Vector) -> Result<Self, Error> {
        let expected = (1usize << level) - 1;
        if v.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: v.dim(),
            });
        }
        let mut coefficients = Vec::with_capacity(expected + 1);
        coefficients.push(Rational::zero());
        coefficients.extend(v.components().iter().cloned());
        Ok(CDElement { level, coefficients })
    }

    /// The imaginary part as a vector over `u_1 ..`; `None` at level 0.
    pub fn imaginary_part(&self) -> Option<Vector> {
        Vector::new(self.coefficients[1..].to_vec()).ok()
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of the unit `e`.
    pub fn real(&self) -> &Rational {
        &self.coefficients[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Rational::is_zero)
    }

    pub fn mul(&self, other: &CDElement) -> Result<CDElement, Error> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        Ok(CDElement {
            level: self.level,
            coefficients: mul_slices(&self.coefficients, &other.coefficients),
        })
    }

    pub fn conjugate(&self) -> CDElement {
        let mut coefficients: Vec<Rational> = self.coefficients.iter().map(|c| -c).collect();
        coefficients[0] = self.coefficients[0].clone();
        CDElement {
            level: self.level,
            coefficients,
        }
    }

    /// Sum of squared coefficients.
    pub fn norm_sq(&self) -> Rational {
        self.coefficients.iter().map(Rational::square).sum()
    }

    pub fn add(&self, other: &CDElement) -> Result<CDElement, Error> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &CDElement) -> Result<CDElement, Error> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> CDElement {
        CDElement {
            level: self.level,
            coefficients: self.coefficients.iter().map(|c| s * c).collect(),
        }
    }

    fn zip_with(&self, other: &CDElement, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<CDElement, Error> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        Ok(CDElement {
            level: self.level,
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// `(xy - yx) / 2`.
    pub fn half_commutator(&self, other: &CDElement) -> Result<CDElement, Error> {
        let xy = self.mul(other)?;
        let yx = other.mul(self)?;
        Ok(CDElement {
            level: self.level,
            coefficients: xy
                .coefficients
                .iter()
                .zip(&yx.coefficients)
                .map(|(a, b)| (a - b).div_int(2))
                .collect(),
        })
    }

    pub fn random(level: u32, sampler: &mut Sampler) -> CDElement {
        CDElement {
            level,
            coefficients: (0..1usize << level).map(|_| sampler.rational()).collect(),
        }
    }
}

fn conj_slice(x: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = x.iter().map(|c| -c).collect();
    out[0] = x[0].clone();
    out
}

fn add_slices(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub_slices(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn mul_slices(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    if x.iter().all(Rational::is_zero) || y.iter().all(Rational::is_zero) {
        return vec![Rational::zero(); x.len()];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let mut out = sub_slices(&mul_slices(a, c), &mul_slices(&conj_slice(d), b));
    out.extend(add_slices(&mul_slices(d, a), &mul_slices(b, &conj_slice(c))));
    out
}

pub fn cd_mul(x: &CDElement, y: &CDElement) -> Result<CDElement, Error> {
    x.mul(y)
}

pub fn conjugate(x: &CDElement) -> CDElement {
    x.conjugate()
}

pub fn cd_norm_sq(x: &CDElement) -> Rational {
    x.norm_sq()
}

/// The 7D product `x x y = (xy - yx)/2` on imaginary octonions.
pub fn commutator_cross(x: &CDElement, y: &CDElement) -> Result<Vector, Error> {
    for z in [x, y] {
        if z.level != 3 {
            return Err(Error::LevelMismatch(3, z.level));
        }
        if !z.real().is_zero() {
            return Err(Error::NotImaginary(z.real().to_string()));
        }
    }
    let h = x.half_commutator(y)?;
    debug_assert!(h.real().is_zero());
    Ok(h.imaginary_part().expect("level 3 has imaginary units"))
}

/// Tabulates the half-commutator on imaginary units at `level` (1..=4),
/// giving a product on `Q^(2^level - 1)`.
pub fn commutator_table(level: u32) -> Result<ProductTable, Error> {
    if level == 0 || level > MAX_LEVEL {
        return Err(Error::UnsupportedLevel(level));
    }
    let dim = (1usize << level) - 1;
    let mut entries = Vec::new();
    for i in 1..=dim {
        for j in 1..=dim {
            let h = CDElement::basis(level, i).half_commutator(&CDElement::basis(level, j))?;
            if !h.real().is_zero() {
                return Err(Error::NotImaginary(h.real().to_string()));
            }
            for (k, c) in h.coefficients.iter().enumerate().skip(1) {
                if !c.is_zero() {
                    entries.push(Entry::new(i, j, k, c.clone()));
                }
            }
        }
    }
    ProductTable::new(dim, &entries)
}

/// The 7D product derived from the octonions.
pub fn derived_table() -> ProductTable {
    commutator_table(3).expect("octonion commutator table is consistent")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormWitness {
    pub x: CDElement,
    pub y: CDElement,
    /// `|xy|^2`
    pub norm_of_product: Rational,
    /// `|x|^2 |y|^2`
    pub product_of_norms: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurwitzReport {
    pub level: u32,
    pub samples_checked: usize,
    /// Norm multiplicativity held on everything that was checked.
    pub multiplicative: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<NormWitness>,
}

fn norm_witness(x: &CDElement, y: &CDElement) -> Option<NormWitness> {
    let lhs = x.mul(y).expect("levels agree").norm_sq();
    let rhs = x.norm_sq() * y.norm_sq();
    (lhs != rhs).then(|| NormWitness {
        x: x.clone(),
        y: y.clone(),
        norm_of_product: lhs,
        product_of_norms: rhs,
    })
}

/// Pairs `(u_a + s u_b, u_c + t u_d)`, `a < b`, `c < d`, in lexicographic
/// order, all plus signs first; returns the first pair that breaks norm
/// multiplicativity.
pub fn search_norm_violation(level: u32) -> Option<NormWitness> {
    let size = 1usize << level;
    let two_term = |a: usize, b: usize, sign: i64| {
        let mut x = CDElement::basis(level, a);
        x.coefficients[b] = Rational::from(sign);
        x
    };
    for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        for a in 0..size {
            for b in (a + 1)..size {
                let x = two_term(a, b, s);
                for c in 0..size {
                    for d in (c + 1)..size {
                        if let Some(w) = norm_witness(&x, &two_term(c, d, t)) {
                            return Some(w);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Levels 0-3: checks `|xy|^2 = |x|^2 |y|^2` on `samples` seeded random pairs.
/// Level 4: searches two-term basis sums for a violating pair.
pub fn hurwitz_boundary_check(level: u32, samples: usize, seed: u64) -> Result<HurwitzReport, Error> {
    if level > MAX_LEVEL {
        return Err(Error::UnsupportedLevel(level));
    }
    if level == MAX_LEVEL {
        let witness = search_norm_violation(level);
        return Ok(HurwitzReport {
            level,
            samples_checked: 0,
            multiplicative: witness.is_none(),
            witness,
        });
    }
    let mut sampler = Sampler::new(seed);
    for n in 0..samples {
        let x = CDElement::random(level, &mut sampler);
        let y = CDElement::random(level, &mut sampler);
        if let Some(w) = norm_witness(&x, &y) {
            return Ok(HurwitzReport {
                level,
                samples_checked: n + 1,
                multiplicative: false,
                witness: Some(w),
            });
        }
    }
    Ok(HurwitzReport {
        level,
        samples_checked: samples,
        multiplicative: true,
        witness: None,
    })
}
