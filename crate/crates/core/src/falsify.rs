//! Falsification sweep: generates candidate products in dimensions where no
//! vector product exists and records an exact certificate of failure for each.

use serde::{Deserialize, Serialize};

use crate::identities::{basis_sum_eq10, check_axioms, obstruction_report, pair_report, IdentityId, IdentityReport};
use crate::sampling::Sampler;
use crate::suite::axiom_samples;
use crate::table::{Entry, ProductTable, TableFile};

pub const SWEEP_DIMENSIONS: [usize; 4] = [2, 4, 5, 6];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub dimension: usize,
    pub label: String,
    pub table: TableFile,
    /// First failed check among axioms, the eq10 basis sum, and the obstruction.
    pub certificate: Option<IdentityReport>,
}

impl Candidate {
    pub fn rejected(&self) -> bool {
        self.certificate.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub seed: u64,
    pub per_dimension: usize,
    pub candidates: Vec<Candidate>,
}

impl SweepReport {
    pub fn all_rejected(&self) -> bool {
        self.candidates.iter().all(Candidate::rejected)
    }
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Candidate tables for dimension `n`, `count` of them.
///
/// With `n >= 3`: every single-triple embedding of the 3D product, then
/// random totally antisymmetric tables with constants in `{-1, 0, 1}`.
/// With `n < 3` total antisymmetry forces zero, so the candidates are
/// first-pair antisymmetric tables with random rational constants.
pub fn candidates(n: usize, count: usize, sampler: &mut Sampler) -> Vec<(String, ProductTable)> {
    let mut out = Vec::with_capacity(count);
    let ts = triples(n);
    if ts.is_empty() {
        while out.len() < count {
            let mut entries = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    for k in 1..=n {
                        entries.push(Entry::new(i, j, k, sampler.rational()));
                    }
                }
            }
            let t = ProductTable::new(n, &entries).expect("one orientation per pair");
            out.push((format!("random-pair-{}", out.len()), t));
        }
        return out;
    }
    for &(i, j, k) in &ts {
        if out.len() == count {
            break;
        }
        let t = ProductTable::totally_antisymmetric(n, &[Entry::new(i, j, k, 1)]).expect("distinct indices");
        out.push((format!("epsilon-{i}{j}{k}"), t));
    }
    while out.len() < count {
        let entries: Vec<Entry> = ts
            .iter()
            .filter_map(|&(i, j, k)| match sampler.int(-1, 1) {
                0 => None,
                s => Some(Entry::new(i, j, k, s)),
            })
            .collect();
        let t = ProductTable::totally_antisymmetric(n, &entries).expect("distinct indices");
        out.push((format!("random-antisym-{}", out.len()), t));
    }
    out
}

/// The first failing check for `t`, or `None` if it passes everything.
pub fn certify(t: &ProductTable, samples: usize, sampler: &mut Sampler) -> Option<IdentityReport> {
    let pairs = axiom_samples(t.dim(), samples, sampler);
    let axioms = check_axioms(t, &pairs).expect("samples match table dimension");
    if let Some(r) = axioms.into_iter().find(|r| !r.is_holds()) {
        return Some(r);
    }
    let eq10 = pair_report(IdentityId::Eq10, &[], basis_sum_eq10(t));
    if !eq10.is_holds() {
        return Some(eq10);
    }
    let ob = obstruction_report(t).to_report();
    (!ob.is_holds()).then_some(ob)
}

pub fn sweep(dims: &[usize], per_dimension: usize, samples: usize, seed: u64) -> SweepReport {
    let mut sampler = Sampler::new(seed);
    let mut out = Vec::new();
    for &n in dims {
        for (label, t) in candidates(n, per_dimension, &mut sampler) {
            let certificate = certify(&t, samples, &mut sampler);
            out.push(Candidate {
                dimension: n,
                label,
                table: t.to_file(),
                certificate,
            });
        }
    }
    SweepReport {
        seed,
        per_dimension,
        candidates: out,
    }
}
