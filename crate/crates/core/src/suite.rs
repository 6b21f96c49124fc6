//! Runs every identity check against one table.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::identities::{
    basis_sum_eq10, basis_sum_eq13, basis_sum_eq7, basis_sum_eq8, basis_sum_eq9, check_axioms, check_eq12,
    check_eq15, check_eq5, find_eq6_counterexample, g_tensor, obstruction_report, pair_report, Eq6Counterexample,
    IdentityId, IdentityReport, ObstructionReport,
};
use crate::sampling::Sampler;
use crate::table::ProductTable;
use crate::vector::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub dimension: usize,
    pub samples: usize,
    pub seed: u64,
    pub reports: Vec<IdentityReport>,
    pub obstruction: ObstructionReport,
    /// First basis triple with nonzero ternary product; informational.
    pub eq6_counterexample: Option<Eq6Counterexample>,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.reports.iter().all(IdentityReport::is_holds)
    }

    pub fn get(&self, id: IdentityId) -> Option<&IdentityReport> {
        self.reports.iter().find(|r| r.identity == id)
    }
}

/// Keeps the first violation seen for an identity.
fn fold(slot: &mut IdentityReport, next: IdentityReport) {
    if slot.is_holds() && !next.is_holds() {
        *slot = next;
    }
}

/// Every basis pair `(e_i, e_j)`, then `samples` seeded random pairs.
pub fn axiom_samples(dim: usize, samples: usize, sampler: &mut Sampler) -> Vec<(Vector, Vector)> {
    let mut out = Vec::with_capacity(dim * dim + samples);
    for i in 1..=dim {
        for j in 1..=dim {
            out.push((
                Vector::basis(dim, i).expect("in range"),
                Vector::basis(dim, j).expect("in range"),
            ));
        }
    }
    out.extend(sampler.pairs(dim, samples));
    out
}

/// Axioms, the quadratic and ternary identities on seeded random inputs,
/// the basis-sum closed forms, the contraction identity, and the
/// obstruction certificate.
pub fn verify_table(t: &ProductTable, samples: usize, seed: u64) -> Result<SuiteReport, Error> {
    let n = t.dim();
    let mut sampler = Sampler::new(seed);
    let mut reports = check_axioms(t, &axiom_samples(n, samples, &mut sampler))?;

    let mut eq5 = IdentityReport::holds(IdentityId::Eq5);
    let mut eq12 = IdentityReport::holds(IdentityId::Eq12);
    let mut eq7 = IdentityReport::holds(IdentityId::Eq7);
    let mut eq8 = IdentityReport::holds(IdentityId::Eq8);
    let mut eq9 = IdentityReport::holds(IdentityId::Eq9);
    let mut eq13 = IdentityReport::holds(IdentityId::Eq13);
    for _ in 0..samples {
        let [a, b, c, d] = sampler.vectors::<4>(n);
        fold(&mut eq5, check_eq5(t, &a, &b)?);
        fold(&mut eq12, check_eq12(t, &a, &b, &c, &d)?);
        fold(&mut eq7, pair_report(IdentityId::Eq7, &[&a, &b], basis_sum_eq7(t, &a, &b)?));
        fold(
            &mut eq8,
            pair_report(IdentityId::Eq8, &[&a, &b, &c, &d], basis_sum_eq8(t, &a, &b, &c, &d)?),
        );
        fold(&mut eq9, pair_report(IdentityId::Eq9, &[&a, &b], basis_sum_eq9(t, &a, &b)?));
        fold(
            &mut eq13,
            pair_report(IdentityId::Eq13, &[&a, &b, &c], basis_sum_eq13(t, &a, &b, &c)?),
        );
    }
    reports.extend([eq5, eq12, eq7, eq8, eq9]);
    reports.push(pair_report(IdentityId::Eq10, &[], basis_sum_eq10(t)));
    reports.push(eq13);
    reports.push(check_eq15(t, &g_tensor(t))?);
    let obstruction = obstruction_report(t);
    reports.push(obstruction.to_report());

    Ok(SuiteReport {
        dimension: n,
        samples,
        seed,
        reports,
        obstruction,
        eq6_counterexample: find_eq6_counterexample(t),
    })
}
