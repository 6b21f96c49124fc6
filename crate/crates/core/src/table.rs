//! Bilinear products given by structure constants `e_i x e_j = sum_k c_ijk e_k`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::Rational;
use crate::vector::Vector;

/// The seven independent components of the canonical 7D product, each equal to 1.
pub const CROSS7_COMPONENTS: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (2, 4, 6),
    (4, 3, 5),
    (6, 5, 1),
    (5, 7, 2),
    (7, 1, 4),
    (3, 6, 7),
];

pub const CROSS3_COMPONENTS: [(usize, usize, usize); 1] = [(1, 2, 3)];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Canonical {
    Cross3,
    Cross7,
}

/// One structure constant `c_ijk` with 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Rational,
}

impl Entry {
    pub fn new(i: usize, j: usize, k: usize, c: impl Into<Rational>) -> Self {
        Entry { i, j, k, c: c.into() }
    }
}

/// An anticommutative bilinear product on `Q^n`.
///
/// Only nonzero constants are stored; both orientations `c_ijk` and
/// `c_jik = -c_ijk` are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTable {
    dim: usize,
    constants: BTreeMap<(usize, usize, usize), Rational>,
    // (i, j, k, c) in lexicographic order, mirrors `constants`
    entries: Vec<(usize, usize, usize, Rational)>,
}

impl ProductTable {
    /// Builds a table, completing `c_jik = -c_ijk` where only one orientation is given.
    ///
    /// Rejects out-of-range indices and entries that contradict each other,
    /// directly or through antisymmetry (which also forces `c_iik = 0`).
    pub fn new(dim: usize, entries: &[Entry]) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut given: HashMap<(usize, usize, usize), Rational> = HashMap::new();
        let contradiction = |(i, j, k): (usize, usize, usize), existing: &Rational, given: &Rational| {
            Error::Contradiction {
                i,
                j,
                k,
                existing: existing.to_string(),
                given: given.to_string(),
            }
        };
        for e in entries {
            for index in [e.i, e.j, e.k] {
                if index == 0 || index > dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            let key = (e.i, e.j, e.k);
            if e.i == e.j && !e.c.is_zero() {
                return Err(contradiction(key, &Rational::zero(), &e.c));
            }
            if let Some(existing) = given.get(&key) {
                if *existing != e.c {
                    return Err(contradiction(key, existing, &e.c));
                }
            }
            let mirror = (e.j, e.i, e.k);
            let negated = -&e.c;
            if let Some(existing) = given.get(&mirror) {
                if *existing != negated {
                    return Err(contradiction(mirror, existing, &negated));
                }
            }
            given.insert(key, e.c.clone());
            given.insert(mirror, negated);
        }
        let constants: BTreeMap<_, _> = given.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self::from_constants(dim, constants))
    }

    fn from_constants(dim: usize, constants: BTreeMap<(usize, usize, usize), Rational>) -> Self {
        let entries = constants
            .iter()
            .map(|(&(i, j, k), c)| (i, j, k, c.clone()))
            .collect();
        ProductTable {
            dim,
            constants,
            entries,
        }
    }

    /// The all-zero product in dimension `dim`.
    pub fn zero(dim: usize) -> Result<Self, Error> {
        Self::new(dim, &[])
    }

    /// Builds a totally antisymmetric table from one representative per orbit:
    /// every permutation of `(i, j, k)` receives `sign(perm) * c`.
    pub fn totally_antisymmetric(dim: usize, components: &[Entry]) -> Result<Self, Error> {
        let mut expanded = Vec::with_capacity(components.len() * 3);
        for e in components {
            let (i, j, k) = (e.i, e.j, e.k);
            // even permutations; the odd ones follow from first-pair antisymmetry
            expanded.push(Entry::new(i, j, k, e.c.clone()));
            expanded.push(Entry::new(j, k, i, e.c.clone()));
            expanded.push(Entry::new(k, i, j, e.c.clone()));
        }
        Self::new(dim, &expanded)
    }

    pub fn canonical(kind: Canonical) -> Self {
        let (dim, comps): (usize, &[(usize, usize, usize)]) = match kind {
            Canonical::Cross3 => (3, &CROSS3_COMPONENTS),
            Canonical::Cross7 => (7, &CROSS7_COMPONENTS),
        };
        let entries: Vec<Entry> = comps.iter().map(|&(i, j, k)| Entry::new(i, j, k, 1)).collect();
        Self::totally_antisymmetric(dim, &entries).expect("canonical table is consistent")
    }

    pub fn cross3() -> Self {
        Self::canonical(Canonical::Cross3)
    }

    pub fn cross7() -> Self {
        Self::canonical(Canonical::Cross7)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c_ijk`, zero when absent.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Result<Rational, Error> {
        for index in [i, j, k] {
            if index == 0 || index > self.dim {
                return Err(Error::IndexOutOfRange { index, dim: self.dim });
            }
        }
        Ok(self.constant(i, j, k))
    }

    pub(crate) fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.constants
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub(crate) fn constant_ref(&self, i: usize, j: usize, k: usize) -> Option<&Rational> {
        self.constants.get(&(i, j, k))
    }

    /// All nonzero constants `(i, j, k, c)` in lexicographic order.
    pub fn nonzero(&self) -> &[(usize, usize, usize, Rational)] {
        &self.entries
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    pub fn is_totally_antisymmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|(i, j, k, c)| self.constant(*j, *k, *i) == *c && self.constant(*i, *k, *j) == -c)
    }

    /// The bilinear product `a x b`.
    pub fn cross(&self, a: &Vector, b: &Vector) -> Result<Vector, Error> {
        for v in [a, b] {
            if v.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.dim(),
                });
            }
        }
        let (ac, bc) = (a.components(), b.components());
        let mut out = Vector::zero(self.dim);
        for (i, j, k, c) in &self.entries {
            let (x, y) = (&ac[i - 1], &bc[j - 1]);
            if x.is_zero() || y.is_zero() {
                continue;
            }
            out.add_scaled_basis(*k, &(c * x * y));
        }
        Ok(out)
    }

    /// `e_i x e_j` without allocation of the basis vectors.
    pub fn cross_basis(&self, i: usize, j: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for k in 1..=self.dim {
            if let Some(c) = self.constant_ref(i, j, k) {
                out.add_scaled_basis(k, c);
            }
        }
        out
    }

    pub fn to_file(&self) -> TableFile {
        TableFile {
            dimension: self.dim,
            entries: self
                .entries
                .iter()
                .filter(|(i, j, _, _)| i < j)
                .map(|(i, j, k, c)| EntryRecord {
                    i: *i,
                    j: *j,
                    k: *k,
                    c: c.clone(),
                })
                .collect(),
        }
    }

    /// Canonical JSON form: keys `dimension, entries`; one orientation (`i < j`)
    /// per component, sorted by `(i, j, k)`; pretty-printed with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn from_json(json: &str) -> Result<Self, Error> {
        let file: TableFile = serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))?;
        file.into_table()
    }
}

/// Free-function form of [`ProductTable::new`].
pub fn make_table(dim: usize, entries: &[Entry]) -> Result<ProductTable, Error> {
    ProductTable::new(dim, entries)
}

pub fn canonical_table(kind: Canonical) -> ProductTable {
    ProductTable::canonical(kind)
}

pub fn cross(t: &ProductTable, a: &Vector, b: &Vector) -> Result<Vector, Error> {
    t.cross(a, b)
}

pub fn structure_constant(t: &ProductTable, i: usize, j: usize, k: usize) -> Result<Rational, Error> {
    t.structure_constant(i, j, k)
}

/// On-disk table schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub dimension: usize,
    pub entries: Vec<EntryRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryRecord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Rational,
}

impl TableFile {
    pub fn into_table(self) -> Result<ProductTable, Error> {
        let entries: Vec<Entry> = self
            .entries
            .into_iter()
            .map(|e| Entry::new(e.i, e.j, e.k, e.c))
            .collect();
        ProductTable::new(self.dimension, &entries)
    }
}
