//! Dense vectors over the rationals with the Euclidean inner product.
//!
//! Public indices are 1-based (`e_1..e_n`).

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    components: Vec<Rational>,
}

impl Vector {
    pub fn new(components: Vec<Rational>) -> Result<Self, Error> {
        if components.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Vector { components })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self, Error> {
        Vector::new(values.iter().map(|&v| Rational::from(v)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "vector dimension must be positive");
        Vector {
            components: vec![Rational::zero(); dim],
        }
    }

    /// The unit vector `e_i`, `1 <= i <= n`.
    pub fn basis(n: usize, i: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, dim: n });
        }
        let mut v = Vector::zero(n);
        v.components[i - 1] = Rational::one();
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    /// Component `i`, 1-based.
    pub fn get(&self, i: usize) -> Option<&Rational> {
        i.checked_sub(1).and_then(|idx| self.components.get(idx))
    }

    pub fn components(&self) -> &[Rational] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Rational> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Rational::is_zero)
    }

    fn check_dim(&self, other: &Vector) -> Result<(), Error> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn dot(&self, other: &Vector) -> Result<Rational, Error> {
        self.check_dim(other)?;
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn norm_sq(&self) -> Rational {
        self.components.iter().map(Rational::square).sum()
    }

    /// `s * self + other`.
    pub fn axpy(&self, s: &Rational, other: &Vector) -> Result<Vector, Error> {
        self.check_dim(other)?;
        Ok(Vector {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| s * a + b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector {
            components: self.components.iter().map(|a| s * a).collect(),
        }
    }

    pub(crate) fn add_scaled_basis(&mut self, i: usize, s: &Rational) {
        self.components[i - 1] += s;
    }
}

/// `a . b`; errors on dimension mismatch.
pub fn dot(a: &Vector, b: &Vector) -> Result<Rational, Error> {
    a.dot(b)
}

pub fn norm_sq(a: &Vector) -> Rational {
    a.norm_sq()
}

pub fn basis(n: usize, i: usize) -> Result<Vector, Error> {
    Vector::basis(n, i)
}

pub fn axpy(s: &Rational, a: &Vector, b: &Vector) -> Result<Vector, Error> {
    a.axpy(s, b)
}

// Operator impls panic on a dimension mismatch; fallible callers use `axpy`.
impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        self.axpy(&Rational::one(), rhs).expect("vector dimension mismatch")
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        rhs.axpy(&Rational::from(-1), self)
            .expect("vector dimension mismatch")
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scale(&Rational::from(-1))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, c) in self.components.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.components.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let components = Vec::<Rational>::deserialize(deserializer)?;
        Vector::new(components).map_err(serde::de::Error::custom)
    }
}

/// Parses the JSON interchange form, e.g. `["1","-2/3","0"]`.
pub fn parse_vector(json: &str) -> Result<Vector, Error> {
    serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))
}
