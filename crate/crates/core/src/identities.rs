//! The ternary product `{a,b,c}`, the rank-4 tensor it induces, and exact
//! checkers for the vector-product identities.
//!
//! Checks never raise on a failed identity; they return an [`IdentityReport`]
//! carrying the offending input and both evaluated sides.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::Rational;
use crate::table::ProductTable;
use crate::vector::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityId {
    /// `a x a = 0`
    Eq1,
    /// `(a x b).a = (a x b).b = 0`
    Eq2,
    /// `|a x b|^2 = |a|^2 |b|^2 - (a.b)^2`
    Eq4,
    /// `a x (b x a) = |a|^2 b - (a.b) a`
    Eq5,
    Eq7,
    Eq8,
    Eq9,
    Eq10,
    /// `2 a x {b,c,d} = {a,b,c x d} + {a,c,d x b} + {a,d,b x c}`
    Eq12,
    Eq13,
    /// `sum_k c_ijk c_kmn = g_ijmn + d_im d_jn - d_in d_jm`
    Eq15,
    Obstruction,
}

impl IdentityId {
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Eq1 => "eq1",
            IdentityId::Eq2 => "eq2",
            IdentityId::Eq4 => "eq4",
            IdentityId::Eq5 => "eq5",
            IdentityId::Eq7 => "eq7",
            IdentityId::Eq8 => "eq8",
            IdentityId::Eq9 => "eq9",
            IdentityId::Eq10 => "eq10",
            IdentityId::Eq12 => "eq12",
            IdentityId::Eq13 => "eq13",
            IdentityId::Eq15 => "eq15",
            IdentityId::Obstruction => "obstruction",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Violated,
}

/// One side of an identity: a scalar or a vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Scalar(Rational),
    Vector(Vector),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Vector(v) => write!(f, "{v}"),
        }
    }
}

impl From<Rational> for Value {
    fn from(s: Rational) -> Self {
        Value::Scalar(s)
    }
}

impl From<Vector> for Value {
    fn from(v: Vector) -> Self {
        Value::Vector(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inputs: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indices: Option<Vec<usize>>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl IdentityReport {
    pub fn holds(identity: IdentityId) -> Self {
        IdentityReport {
            identity,
            status: Status::Holds,
            witness: None,
        }
    }

    pub fn violated(identity: IdentityId, witness: Witness) -> Self {
        IdentityReport {
            identity,
            status: Status::Violated,
            witness: Some(witness),
        }
    }

    /// Compares two sides, recording a witness when they differ.
    pub fn compare(
        identity: IdentityId,
        inputs: &[&Vector],
        lhs: impl Into<Value>,
        rhs: impl Into<Value>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        if lhs == rhs {
            Self::holds(identity)
        } else {
            Self::violated(
                identity,
                Witness {
                    inputs: inputs.iter().map(|v| (*v).clone()).collect(),
                    indices: None,
                    lhs,
                    rhs,
                },
            )
        }
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.status, &self.witness) {
            (Status::Holds, _) | (_, None) => write!(f, "{:<12} holds", self.identity.name()),
            (Status::Violated, Some(w)) => {
                write!(f, "{:<12} VIOLATED", self.identity.name())?;
                if !w.inputs.is_empty() {
                    write!(f, " inputs=[")?;
                    for (n, v) in w.inputs.iter().enumerate() {
                        if n > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{v}")?;
                    }
                    write!(f, "]")?;
                }
                if let Some(ix) = &w.indices {
                    write!(f, " indices={ix:?}")?;
                }
                write!(f, " lhs={} rhs={}", w.lhs, w.rhs)
            }
        }
    }
}

fn check_dims(t: &ProductTable, vs: &[&Vector]) -> Result<(), Error> {
    for v in vs {
        if v.dim() != t.dim() {
            return Err(Error::DimensionMismatch {
                expected: t.dim(),
                found: v.dim(),
            });
        }
    }
    Ok(())
}

fn basis_vectors(n: usize) -> Vec<Vector> {
    (1..=n).map(|i| Vector::basis(n, i).expect("index in range")).collect()
}

/// `{a,b,c} = a x (b x c) - b (a.c) + c (a.b)`.
pub fn ternary(t: &ProductTable, a: &Vector, b: &Vector, c: &Vector) -> Result<Vector, Error> {
    check_dims(t, &[a, b, c])?;
    let mut out = t.cross(a, &t.cross(b, c)?)?;
    out = b.axpy(&-a.dot(c)?, &out)?;
    out = c.axpy(&a.dot(b)?, &out)?;
    Ok(out)
}

/// `{e_i, e_j, e_k}`.
pub fn ternary_basis(t: &ProductTable, i: usize, j: usize, k: usize) -> Vector {
    let n = t.dim();
    let ej_ek = t.cross_basis(j, k);
    let mut out = t.cross(&Vector::basis(n, i).expect("index in range"), &ej_ek).expect("dims");
    if i == k {
        out.add_scaled_basis(j, &Rational::from(-1));
    }
    if i == j {
        out.add_scaled_basis(k, &Rational::one());
    }
    out
}

/// `g_ijmn = e_i . {e_j, e_m, e_n}`, nonzero values only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryTensor {
    dim: usize,
    values: BTreeMap<(usize, usize, usize, usize), Rational>,
}

impl TernaryTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, m: usize, n: usize) -> Rational {
        self.values
            .get(&(i, j, m, n))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize, usize), &Rational)> {
        self.values.iter().map(|(k, v)| (*k, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Checks that every transposition of two index slots negates `g`,
    /// over all `n^4` quadruples.
    pub fn is_totally_antisymmetric(&self) -> bool {
        let n = self.dim;
        let quads = (1..=n).flat_map(move |i| {
            (1..=n).flat_map(move |j| (1..=n).flat_map(move |m| (1..=n).map(move |l| [i, j, m, l])))
        });
        for q in quads {
            let v = self.get(q[0], q[1], q[2], q[3]);
            for a in 0..4 {
                for b in (a + 1)..4 {
                    let mut s = q;
                    s.swap(a, b);
                    if self.get(s[0], s[1], s[2], s[3]) != -&v {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// One representative per orbit of four distinct indices: the
    /// lexicographically first ordering whose value is positive.
    pub fn independent_components(&self) -> Vec<((usize, usize, usize, usize), Rational)> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for (&(i, j, m, n), v) in &self.values {
            let mut key = [i, j, m, n];
            key.sort_unstable();
            if !seen.insert(key) {
                continue;
            }
            let mut best: Option<((usize, usize, usize, usize), Rational)> = None;
            for p in permutations4(key) {
                let val = self.get(p[0], p[1], p[2], p[3]);
                if val.is_negative() || val.is_zero() {
                    continue;
                }
                let tuple = (p[0], p[1], p[2], p[3]);
                if best.as_ref().is_none_or(|(b, _)| tuple < *b) {
                    best = Some((tuple, val));
                }
            }
            // no positive ordering: fall back to the sorted key
            out.push(best.unwrap_or(((key[0], key[1], key[2], key[3]), v.clone())));
        }
        out.sort();
        out
    }
}

fn permutations4(a: [usize; 4]) -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for x in 0..4 {
        for y in 0..4 {
            for z in 0..4 {
                for w in 0..4 {
                    if x != y && x != z && x != w && y != z && y != w && z != w {
                        out.push([a[x], a[y], a[z], a[w]]);
                    }
                }
            }
        }
    }
    out
}

pub fn g_tensor(t: &ProductTable) -> TernaryTensor {
    let n = t.dim();
    let triples: Vec<(usize, usize, usize)> = (1..=n)
        .flat_map(|j| (1..=n).flat_map(move |m| (1..=n).map(move |l| (j, m, l))))
        .collect();
    let values = triples
        .par_iter()
        .flat_map_iter(|&(j, m, l)| {
            let v = ternary_basis(t, j, m, l);
            v.into_components()
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| ((i + 1, j, m, l), c))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    TernaryTensor { dim: n, values }
}

/// Axioms `a x a = 0`, orthogonality, and the Lagrange identity (the
/// all-pairs form of the norm axiom) on every sample pair.
///
/// Returns one report per identity; the first failing sample is the witness.
pub fn check_axioms(t: &ProductTable, samples: &[(Vector, Vector)]) -> Result<Vec<IdentityReport>, Error> {
    let mut eq1 = IdentityReport::holds(IdentityId::Eq1);
    let mut eq2 = IdentityReport::holds(IdentityId::Eq2);
    let mut eq4 = IdentityReport::holds(IdentityId::Eq4);
    for (a, b) in samples {
        check_dims(t, &[a, b])?;
        if eq1.is_holds() {
            for v in [a, b] {
                let r = IdentityReport::compare(IdentityId::Eq1, &[v], t.cross(v, v)?, Vector::zero(t.dim()));
                if !r.is_holds() {
                    eq1 = r;
                    break;
                }
            }
        }
        let ab = t.cross(a, b)?;
        if eq2.is_holds() {
            for v in [a, b] {
                let r = IdentityReport::compare(IdentityId::Eq2, &[a, b], ab.dot(v)?, Rational::zero());
                if !r.is_holds() {
                    eq2 = r;
                    break;
                }
            }
        }
        if eq4.is_holds() {
            let rhs = a.norm_sq() * b.norm_sq() - a.dot(b)?.square();
            eq4 = IdentityReport::compare(IdentityId::Eq4, &[a, b], ab.norm_sq(), rhs);
        }
    }
    Ok(vec![eq1, eq2, eq4])
}

pub fn check_eq5(t: &ProductTable, a: &Vector, b: &Vector) -> Result<IdentityReport, Error> {
    check_dims(t, &[a, b])?;
    let lhs = t.cross(a, &t.cross(b, a)?)?;
    let rhs = a.axpy(&-a.dot(b)?, &b.scale(&a.norm_sq()))?;
    Ok(IdentityReport::compare(IdentityId::Eq5, &[a, b], lhs, rhs))
}

pub fn check_eq12(
    t: &ProductTable,
    a: &Vector,
    b: &Vector,
    c: &Vector,
    d: &Vector,
) -> Result<IdentityReport, Error> {
    check_dims(t, &[a, b, c, d])?;
    let lhs = t.cross(a, &ternary(t, b, c, d)?)?.scale(&Rational::from(2));
    let rhs = &(&ternary(t, a, b, &t.cross(c, d)?)? + &ternary(t, a, c, &t.cross(d, b)?)?)
        + &ternary(t, a, d, &t.cross(b, c)?)?;
    Ok(IdentityReport::compare(IdentityId::Eq12, &[a, b, c, d], lhs, rhs))
}

fn n_of(t: &ProductTable) -> i64 {
    t.dim() as i64
}

/// `(sum_i (e_i x a).(e_i x b), (n-1) a.b)`
pub fn basis_sum_eq7(t: &ProductTable, a: &Vector, b: &Vector) -> Result<(Rational, Rational), Error> {
    check_dims(t, &[a, b])?;
    let mut sum = Rational::zero();
    for e in basis_vectors(t.dim()) {
        sum += t.cross(&e, a)?.dot(&t.cross(&e, b)?)?;
    }
    let closed = Rational::from(n_of(t) - 1) * a.dot(b)?;
    Ok((sum, closed))
}

/// `(sum_i {e_i,a,b}.{e_i,c,d}, (n-5)(a x b).(c x d) + 2(a.c)(b.d) - 2(a.d)(b.c))`
pub fn basis_sum_eq8(
    t: &ProductTable,
    a: &Vector,
    b: &Vector,
    c: &Vector,
    d: &Vector,
) -> Result<(Rational, Rational), Error> {
    check_dims(t, &[a, b, c, d])?;
    let mut sum = Rational::zero();
    for e in basis_vectors(t.dim()) {
        sum += ternary(t, &e, a, b)?.dot(&ternary(t, &e, c, d)?)?;
    }
    let n = n_of(t);
    let closed = Rational::from(n - 5) * t.cross(a, b)?.dot(&t.cross(c, d)?)?
        + Rational::from(2) * a.dot(c)? * b.dot(d)?
        - Rational::from(2) * a.dot(d)? * b.dot(c)?;
    Ok((sum, closed))
}

/// `(sum_ij {e_i,e_j,a}.{e_i,e_j,b}, (n-1)(n-3) a.b)`
pub fn basis_sum_eq9(t: &ProductTable, a: &Vector, b: &Vector) -> Result<(Rational, Rational), Error> {
    check_dims(t, &[a, b])?;
    let es = basis_vectors(t.dim());
    let mut sum = Rational::zero();
    for ei in &es {
        for ej in &es {
            sum += ternary(t, ei, ej, a)?.dot(&ternary(t, ei, ej, b)?)?;
        }
    }
    let n = n_of(t);
    let closed = Rational::from((n - 1) * (n - 3)) * a.dot(b)?;
    Ok((sum, closed))
}

/// `(sum_ijk |{e_i,e_j,e_k}|^2, n(n-1)(n-3))`
pub fn basis_sum_eq10(t: &ProductTable) -> (Rational, Rational) {
    let n = t.dim();
    let sum = (1..=n)
        .into_par_iter()
        .map(|i| {
            let mut s = Rational::zero();
            for j in 1..=n {
                for k in 1..=n {
                    s += ternary_basis(t, i, j, k).norm_sq();
                }
            }
            s
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum();
    let n = n as i64;
    (sum, Rational::from(n * (n - 1) * (n - 3)))
}

/// `(sum_ij {e_i,e_j,a}.{e_i, e_j x b, c}, -(n-3)(n-6) a.(b x c))`
pub fn basis_sum_eq13(
    t: &ProductTable,
    a: &Vector,
    b: &Vector,
    c: &Vector,
) -> Result<(Rational, Rational), Error> {
    check_dims(t, &[a, b, c])?;
    let es = basis_vectors(t.dim());
    let mut sum = Rational::zero();
    for ei in &es {
        for ej in &es {
            let ejb = t.cross(ej, b)?;
            sum += ternary(t, ei, ej, a)?.dot(&ternary(t, ei, &ejb, c)?)?;
        }
    }
    let n = n_of(t);
    let closed = Rational::from(-(n - 3) * (n - 6)) * a.dot(&t.cross(b, c)?)?;
    Ok((sum, closed))
}

/// Wraps a `(direct sum, closed form)` pair as a report.
pub fn pair_report(identity: IdentityId, inputs: &[&Vector], pair: (Rational, Rational)) -> IdentityReport {
    IdentityReport::compare(identity, inputs, pair.0, pair.1)
}

/// Both sides of the dimension obstruction, summed over basis quadruples,
/// next to their closed forms in `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub dimension: usize,
    pub lhs_sum: Rational,
    pub rhs_sum: Rational,
    pub lhs_closed: Rational,
    pub rhs_closed: Rational,
    pub poly: Rational,
}

impl ObstructionReport {
    /// Sums agree with each other and with their closed forms.
    pub fn consistent(&self) -> bool {
        self.lhs_sum == self.rhs_sum && self.lhs_sum == self.lhs_closed && self.rhs_sum == self.rhs_closed
    }

    pub fn to_report(&self) -> IdentityReport {
        if self.consistent() {
            return IdentityReport::holds(IdentityId::Obstruction);
        }
        // report the first mismatching pair
        let (lhs, rhs) = if self.lhs_sum != self.rhs_sum {
            (&self.lhs_sum, &self.rhs_sum)
        } else if self.lhs_sum != self.lhs_closed {
            (&self.lhs_sum, &self.lhs_closed)
        } else {
            (&self.rhs_sum, &self.rhs_closed)
        };
        IdentityReport::violated(
            IdentityId::Obstruction,
            Witness {
                inputs: Vec::new(),
                indices: None,
                lhs: Value::Scalar(lhs.clone()),
                rhs: Value::Scalar(rhs.clone()),
            },
        )
    }
}

pub fn obstruction_report(t: &ProductTable) -> ObstructionReport {
    let n = t.dim();
    let es = basis_vectors(n);
    let crosses: Vec<Vec<Vector>> = (1..=n)
        .map(|k| (1..=n).map(|l| t.cross_basis(k, l)).collect())
        .collect();
    let tern = |a: &Vector, b: &Vector, c: &Vector| ternary(t, a, b, c).expect("dims agree");

    let (lhs_sum, rhs_sum) = (1..=n)
        .into_par_iter()
        .map(|i| {
            let ei = &es[i - 1];
            let mut lhs = Rational::zero();
            let mut rhs = Rational::zero();
            for j in 1..=n {
                let ej = &es[j - 1];
                for k in 1..=n {
                    let ek = &es[k - 1];
                    for l in 1..=n {
                        let el = &es[l - 1];
                        let inner = ternary_basis(t, j, k, l);
                        lhs += t.cross(ei, &inner).expect("dims agree").norm_sq();
                        let x_kl = &crosses[k - 1][l - 1];
                        let x_lj = &crosses[l - 1][j - 1];
                        let x_jk = &crosses[j - 1][k - 1];
                        let v = &(&tern(ei, ej, x_kl) + &tern(ei, ek, x_lj)) + &tern(ei, el, x_jk);
                        rhs += v.norm_sq();
                    }
                }
            }
            (lhs, rhs)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((Rational::zero(), Rational::zero()), |(a, b), (x, y)| (a + x, b + y));

    let m = n as i64;
    ObstructionReport {
        dimension: n,
        lhs_sum: Rational::from(4) * lhs_sum,
        rhs_sum,
        lhs_closed: Rational::from(4 * m * (m - 1) * (m - 1) * (m - 3)),
        rhs_closed: Rational::from(3 * m * (m - 1) * (m - 3) * (3 * m - 13)),
        poly: Rational::from(5 * m * (m - 1) * (m - 3) * (m - 7)),
    }
}

/// A basis triple whose ternary product is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eq6Counterexample {
    pub indices: (usize, usize, usize),
    pub value: Vector,
}

/// First basis triple, in lexicographic order, with `{e_i,e_j,e_k} != 0`.
pub fn find_eq6_counterexample(t: &ProductTable) -> Option<Eq6Counterexample> {
    let n = t.dim();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let v = ternary_basis(t, i, j, k);
                if !v.is_zero() {
                    return Some(Eq6Counterexample {
                        indices: (i, j, k),
                        value: v,
                    });
                }
            }
        }
    }
    None
}

/// The contraction identity over every index quadruple.
pub fn check_eq15(t: &ProductTable, g: &TernaryTensor) -> Result<IdentityReport, Error> {
    if g.dim() != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: t.dim(),
            found: g.dim(),
        });
    }
    let n = t.dim();
    for i in 1..=n {
        for j in 1..=n {
            for m in 1..=n {
                for l in 1..=n {
                    let mut lhs = Rational::zero();
                    for k in 1..=n {
                        if let (Some(x), Some(y)) = (t.constant_ref(i, j, k), t.constant_ref(k, m, l)) {
                            lhs += x * y;
                        }
                    }
                    let delta = i64::from(i == m && j == l) - i64::from(i == l && j == m);
                    let rhs = g.get(i, j, m, l) + Rational::from(delta);
                    if lhs != rhs {
                        return Ok(IdentityReport::violated(
                            IdentityId::Eq15,
                            Witness {
                                inputs: Vec::new(),
                                indices: Some(vec![i, j, m, l]),
                                lhs: Value::Scalar(lhs),
                                rhs: Value::Scalar(rhs),
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(IdentityReport::holds(IdentityId::Eq15))
}
