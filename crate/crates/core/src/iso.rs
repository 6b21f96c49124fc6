//! Signed-permutation equivalence between product tables.
//!
//! A signed permutation `s` acts on the basis by `s(e_i) = sign_i e_{perm_i}`.
//! It is an isomorphism from table `a` to table `b` when
//! `s(x) x_b s(y) = s(x x_a y)` for all basis pairs, i.e.
//! `sign_i sign_j b[perm_i, perm_j, perm_k] = sign_k a[i, j, k]`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::Rational;
use crate::table::{Entry, ProductTable};
use crate::vector::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedPermutation {
    /// 1-based images: `e_i` goes to slot `perm[i-1]`.
    pub perm: Vec<usize>,
    /// Each entry is `1` or `-1`.
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self, Error> {
        let n = perm.len();
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if signs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::Schema(format!("{perm:?} is not a permutation of 1..={n}")));
            }
            seen[p - 1] = true;
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::Schema(format!("signs must be 1 or -1, got {signs:?}")));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (1..=n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, Error> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, c) in v.components().iter().enumerate() {
            out[self.perm[i] - 1] = c * &Rational::from(i64::from(self.signs[i]));
        }
        Vector::new(out)
    }

    /// The table `b` for which `self` is an isomorphism from `t` to `b`.
    pub fn transport(&self, t: &ProductTable) -> Result<ProductTable, Error> {
        if t.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: t.dim(),
            });
        }
        let entries: Vec<Entry> = t
            .nonzero()
            .iter()
            .map(|(i, j, k, c)| {
                let s = i64::from(self.signs[i - 1] * self.signs[j - 1] * self.signs[k - 1]);
                Entry::new(
                    self.perm[i - 1],
                    self.perm[j - 1],
                    self.perm[k - 1],
                    c * &Rational::from(s),
                )
            })
            .collect();
        ProductTable::new(t.dim(), &entries)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm={:?} signs={:?}", self.perm, self.signs)
    }
}

/// Dense `n^3` view of a table for the inner search loop.
struct Dense {
    n: usize,
    values: Vec<Rational>,
    support: Vec<(usize, usize, usize)>,
}

impl Dense {
    fn new(t: &ProductTable) -> Self {
        let n = t.dim();
        let mut values = vec![Rational::zero(); n * n * n];
        let mut support = Vec::new();
        for (i, j, k, c) in t.nonzero() {
            values[((i - 1) * n + (j - 1)) * n + (k - 1)] = c.clone();
            support.push((i - 1, j - 1, k - 1));
        }
        Dense { n, values, support }
    }

    fn at(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.values[(i * self.n + j) * self.n + k]
    }
}

fn support_matches(a: &Dense, b: &Dense, p: &[usize]) -> bool {
    a.support.len() == b.support.len()
        && a.support
            .iter()
            .all(|&(i, j, k)| !b.at(p[i], p[j], p[k]).is_zero())
}

fn signs_match(a: &Dense, b: &Dense, p: &[usize], s: &[i64]) -> bool {
    // support sizes agree, so checking a's support covers every triple
    a.support.iter().all(|&(i, j, k)| {
        let lhs = b.at(p[i], p[j], p[k]);
        let rhs = a.at(i, j, k);
        if s[i] * s[j] * s[k] == 1 {
            lhs == rhs
        } else {
            *lhs == -rhs
        }
    })
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Searches permutations starting with `first` (0-based) in lexicographic
/// order, and for each the sign vectors in lexicographic order with `+1 < -1`.
fn search_from(a: &Dense, b: &Dense, first: usize) -> Option<(Vec<usize>, Vec<i64>)> {
    let n = a.n;
    let mut p: Vec<usize> = std::iter::once(first).chain((0..n).filter(|&x| x != first)).collect();
    loop {
        if support_matches(a, b, &p) {
            for mask in 0u32..(1 << n) {
                let s: Vec<i64> = (0..n)
                    .map(|idx| if mask >> (n - 1 - idx) & 1 == 1 { -1 } else { 1 })
                    .collect();
                if signs_match(a, b, &p, &s) {
                    return Some((p, s));
                }
            }
        }
        if !next_permutation(&mut p[1..]) {
            return None;
        }
    }
}

/// Lexicographically first signed permutation carrying `a` onto `b`, by
/// exhaustive search over all `n! 2^n` candidates. Any dimension.
pub fn find_signed_iso(a: &ProductTable, b: &ProductTable) -> Result<Option<SignedPermutation>, Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let (da, db) = (Dense::new(a), Dense::new(b));
    let per_first: Vec<Option<(Vec<usize>, Vec<i64>)>> =
        (0..a.dim()).into_par_iter().map(|f| search_from(&da, &db, f)).collect();
    Ok(per_first.into_iter().flatten().next().map(|(p, s)| SignedPermutation {
        perm: p.into_iter().map(|x| x + 1).collect(),
        signs: s.into_iter().map(|x| x as i8).collect(),
    }))
}

/// [`find_signed_iso`] restricted to 7D tables.
pub fn find_iso(a: &ProductTable, b: &ProductTable) -> Result<Option<SignedPermutation>, Error> {
    for t in [a, b] {
        if t.dim() != 7 {
            return Err(Error::DimensionMismatch {
                expected: 7,
                found: t.dim(),
            });
        }
    }
    find_signed_iso(a, b)
}

/// Number of unordered basis pairs `i < j` on which
/// `s(e_i) x_b s(e_j) = s(e_i x_a e_j)` holds, evaluated with vector arithmetic.
pub fn verify_iso(a: &ProductTable, b: &ProductTable, s: &SignedPermutation) -> Result<usize, Error> {
    let n = a.dim();
    if b.dim() != n || s.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if b.dim() != n { b.dim() } else { s.dim() },
        });
    }
    let mut verified = 0;
    for i in 1..=n {
        for j in (i + 1)..=n {
            let ei = Vector::basis(n, i)?;
            let ej = Vector::basis(n, j)?;
            let lhs = b.cross(&s.apply(&ei)?, &s.apply(&ej)?)?;
            let rhs = s.apply(&a.cross(&ei, &ej)?)?;
            if lhs == rhs {
                verified += 1;
            }
        }
    }
    Ok(verified)
}
