//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails. All comparisons are exact.

use std::collections::BTreeSet;
use std::process::{Command as Proc, ExitCode};

use clap::Parser;
use xprod::cayley_dickson::{derived_table, hurwitz_boundary_check};
use xprod::falsify::{sweep, SWEEP_DIMENSIONS};
use xprod::identities::{
    basis_sum_eq10, basis_sum_eq13, basis_sum_eq7, basis_sum_eq8, basis_sum_eq9, check_axioms, check_eq12,
    check_eq15, check_eq5, find_eq6_counterexample, g_tensor, obstruction_report, ternary,
};
use xprod::iso::{find_iso, verify_iso};
use xprod::table::CROSS7_COMPONENTS;
use xprod::{ProductTable, Sampler, Status, Vector};
use xprod_cli::{run, Cli};

const SAMPLES: usize = 50;
const SEED: u64 = 20_260_101;
const SWEEP_PER_DIM: usize = 100;

const G_COMPONENTS: [(usize, usize, usize, usize); 7] = [
    (1, 2, 5, 4),
    (1, 2, 6, 7),
    (1, 3, 6, 4),
    (1, 3, 7, 5),
    (2, 3, 4, 7),
    (2, 3, 6, 5),
    (4, 5, 7, 6),
];

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(n: usize, i: usize) -> Vector {
    Vector::basis(n, i).unwrap()
}

fn ac1_table_fidelity() -> Check {
    let t = ProductTable::cross7();
    for (i, j, k) in CROSS7_COMPONENTS {
        let c = t.structure_constant(i, j, k).unwrap();
        ensure(c == 1, || format!("f_{i}{j}{k} = {c}, expected 1"))?;
    }
    ensure(t.nonzero_count() == 42, || format!("{} nonzero entries, expected 42", t.nonzero_count()))?;
    // every nonzero entry belongs to the orbit of a listed component
    let orbits: BTreeSet<[usize; 3]> = CROSS7_COMPONENTS
        .iter()
        .map(|&(i, j, k)| {
            let mut s = [i, j, k];
            s.sort_unstable();
            s
        })
        .collect();
    for (i, j, k, c) in t.nonzero() {
        let mut s = [*i, *j, *k];
        s.sort_unstable();
        ensure(orbits.contains(&s), || format!("unexpected component f_{i}{j}{k}"))?;
        ensure(c.is_one() || (-c).is_one(), || format!("f_{i}{j}{k} = {c}"))?;
    }
    ensure(t.is_totally_antisymmetric(), || "not totally antisymmetric".into())
}

fn ac2_axioms(t: &ProductTable, seed: u64) -> Check {
    let pairs = Sampler::new(seed).pairs(t.dim(), SAMPLES);
    for r in check_axioms(t, &pairs).map_err(|e| e.to_string())? {
        ensure(r.is_holds(), || format!("dim {}: {r}", t.dim()))?;
    }
    Ok(())
}

fn ac3_identities(t: &ProductTable, seed: u64) -> Check {
    let mut s = Sampler::new(seed);
    for _ in 0..SAMPLES {
        let [a, b, c, d] = s.vectors::<4>(t.dim());
        let r = check_eq5(t, &a, &b).unwrap();
        ensure(r.is_holds(), || format!("dim {}: {r}", t.dim()))?;
        let r = check_eq12(t, &a, &b, &c, &d).unwrap();
        ensure(r.is_holds(), || format!("dim {}: {r}", t.dim()))?;
    }
    Ok(())
}

fn ac4_basis_sums(t: &ProductTable, seed: u64, eq10: (i64, i64)) -> Check {
    let mut s = Sampler::new(seed);
    let n = t.dim();
    for _ in 0..SAMPLES {
        let [a, b, c, d] = s.vectors::<4>(n);
        let pairs = [
            ("eq7", basis_sum_eq7(t, &a, &b).unwrap()),
            ("eq8", basis_sum_eq8(t, &a, &b, &c, &d).unwrap()),
            ("eq9", basis_sum_eq9(t, &a, &b).unwrap()),
            ("eq13", basis_sum_eq13(t, &a, &b, &c).unwrap()),
        ];
        for (name, (l, r)) in pairs {
            ensure(l == r, || format!("dim {n} {name}: {l} != {r}"))?;
        }
    }
    let (l, r) = basis_sum_eq10(t);
    ensure(l == eq10.0 && r == eq10.1, || format!("dim {n} eq10 = ({l}, {r}), expected {eq10:?}"))
}

fn ac5_obstruction() -> Check {
    let r = obstruction_report(&ProductTable::cross7());
    let n = 7i64;
    let lhs_closed = 4 * n * (n - 1) * (n - 1) * (n - 3);
    let rhs_closed = 3 * n * (n - 1) * (n - 3) * (3 * n - 13);
    ensure(lhs_closed == 4032 && rhs_closed == 4032, || "closed forms at n=7".into())?;
    ensure(
        r.lhs_sum == 4032 && r.rhs_sum == 4032 && r.lhs_closed == lhs_closed && r.rhs_closed == rhs_closed,
        || format!("cross7 obstruction {r:?}"),
    )?;
    ensure(r.poly == 0, || format!("cross7 poly = {}", r.poly))?;
    let r3 = obstruction_report(&ProductTable::cross3());
    ensure(
        [&r3.lhs_sum, &r3.rhs_sum, &r3.lhs_closed, &r3.rhs_closed, &r3.poly]
            .iter()
            .all(|v| v.is_zero()),
        || format!("cross3 obstruction {r3:?}"),
    )
}

fn ac6_eq6(seed: u64) -> Check {
    let hit = find_eq6_counterexample(&ProductTable::cross7()).ok_or("no counterexample for cross7")?;
    ensure(hit.indices == (1, 2, 4) && hit.value == e(7, 5), || format!("{hit:?}"))?;
    ensure(find_eq6_counterexample(&ProductTable::cross3()).is_none(), || "cross3 has a counterexample".into())?;
    let t3 = ProductTable::cross3();
    let mut s = Sampler::new(seed);
    for _ in 0..SAMPLES {
        let [a, b, c] = s.vectors::<3>(3);
        ensure(ternary(&t3, &a, &b, &c).unwrap().is_zero(), || format!("{{{a},{b},{c}}} != 0"))?;
    }
    Ok(())
}

/// Shared g-tensor checks; `listed` additionally pins the seven named components.
fn g_checks(t: &ProductTable, listed: bool) -> Check {
    let g = g_tensor(t);
    ensure(g.is_totally_antisymmetric(), || "g not totally antisymmetric".into())?;
    ensure(g.nonzero_count() == 168, || format!("{} nonzero g entries", g.nonzero_count()))?;
    let indep = g.independent_components();
    ensure(indep.len() == 7, || format!("{} independent components", indep.len()))?;
    ensure(indep.iter().all(|(_, v)| v.is_one()), || format!("{indep:?}"))?;
    if listed {
        for (i, j, m, n) in G_COMPONENTS {
            let v = g.get(i, j, m, n);
            ensure(v == 1, || format!("g_{i}{j}{m}{n} = {v}"))?;
        }
        let keys: Vec<_> = indep.iter().map(|(k, _)| *k).collect();
        ensure(keys == G_COMPONENTS.to_vec(), || format!("independent set {keys:?}"))?;
    }
    let r = check_eq15(t, &g).map_err(|e| e.to_string())?;
    ensure(r.is_holds(), || r.to_string())
}

fn ac7_g_tensor() -> Check {
    g_checks(&ProductTable::cross7(), true)?;
    let g3 = g_tensor(&ProductTable::cross3());
    ensure(g3.is_zero(), || "cross3 g nonzero".into())?;
    let r = check_eq15(&ProductTable::cross3(), &g3).unwrap();
    ensure(r.is_holds(), || r.to_string())
}

fn ac8_octonion_derivation() -> Check {
    let d = derived_table();
    let n = d.dim();
    ensure(n == 7 && d.nonzero_count() == 42, || "derived table shape".into())?;
    ac2_axioms(&d, SEED)?;
    ac3_identities(&d, SEED + 1)?;
    ac4_basis_sums(&d, SEED + 2, (168, 168))?;
    let r = obstruction_report(&d);
    ensure(r.lhs_sum == 4032 && r.rhs_sum == 4032 && r.poly == 0, || format!("{r:?}"))?;
    let hit = find_eq6_counterexample(&d).ok_or("no eq6 counterexample")?;
    ensure(!hit.value.is_zero(), || "zero witness".into())?;
    g_checks(&d, false)?;

    let s = find_iso(&d, &ProductTable::cross7())
        .map_err(|e| e.to_string())?
        .ok_or("no signed permutation found")?;
    let verified = verify_iso(&d, &ProductTable::cross7(), &s).unwrap();
    ensure(verified == 21, || format!("verified on {verified}/21 pairs"))?;
    // the transported table is exactly the canonical one, so every pinned
    // value of criteria 6-7 carries over
    let moved = s.transport(&d).unwrap();
    ensure(moved == ProductTable::cross7(), || "transport mismatch".into())
}

fn ac9_hurwitz(seed: u64) -> Check {
    for level in 0..=3 {
        let r = hurwitz_boundary_check(level, SAMPLES, seed).unwrap();
        ensure(r.multiplicative && r.samples_checked == SAMPLES, || format!("level {level}: {r:?}"))?;
    }
    let r = hurwitz_boundary_check(4, SAMPLES, seed).unwrap();
    let w = r.witness.ok_or("no sedenion witness")?;
    let lhs = w.x.mul(&w.y).unwrap().norm_sq();
    let rhs = w.x.norm_sq() * w.y.norm_sq();
    ensure(lhs != rhs && lhs == w.norm_of_product && rhs == w.product_of_norms, || {
        format!("witness sides {lhs} vs {rhs}")
    })
}

fn ac10_falsification(seed: u64) -> Check {
    let report = sweep(&SWEEP_DIMENSIONS, SWEEP_PER_DIM, SAMPLES, seed);
    for n in SWEEP_DIMENSIONS {
        let count = report.candidates.iter().filter(|c| c.dimension == n).count();
        ensure(count >= 100, || format!("only {count} candidates in dimension {n}"))?;
        let m = n as i64;
        ensure(m * (m - 1) * (m - 3) * (m - 7) != 0, || format!("n={n} satisfies the obstruction"))?;
    }
    for c in &report.candidates {
        let cert = c.certificate.as_ref().ok_or_else(|| format!("{} n={} not rejected", c.label, c.dimension))?;
        let w = cert.witness.as_ref().ok_or("certificate without witness")?;
        ensure(cert.status == Status::Violated && w.lhs != w.rhs, || format!("bad certificate {cert}"))?;
    }
    for n in [1i64, 3, 7] {
        ensure(n * (n - 1) * (n - 3) * (n - 7) == 0, || format!("n={n}"))?;
    }
    Ok(())
}

fn cli(args: &[&str]) -> (i32, String) {
    let cli = Cli::try_parse_from(std::iter::once("xprod").chain(args.iter().copied())).unwrap();
    let o = run(&cli);
    (o.code, o.output)
}

fn ac11_determinism() -> Check {
    for args in [
        &["verify", "--table", "cross7", "--samples", "50", "--seed", "9"][..],
        &["verify", "--table", "octonion-derived", "--samples", "10", "--seed", "9", "--json"],
        &["falsify", "--candidates", "10", "--samples", "5", "--seed", "4", "--json"],
        &["cd-check", "--level", "3", "--seed", "5", "--json"],
        &["g-tensor", "--table", "cross7"],
    ] {
        let first = cli(args);
        let second = cli(args);
        ensure(first == second, || format!("nondeterministic output for {args:?}"))?;
    }
    // separate processes
    let bin = env!("CARGO_BIN_EXE_xprod");
    let run_bin = || Proc::new(bin).args(["verify", "--samples", "20", "--seed", "3"]).output().unwrap();
    let (a, b) = (run_bin(), run_bin());
    ensure(a.status.code() == Some(0) && a.stdout == b.stdout, || "binary output differs".into())?;

    for name in ["cross3", "cross7", "octonion-derived"] {
        let (code, json) = cli(&["emit-table", "--table", name]);
        ensure(code == 0, || format!("emit-table {name} exit {code}"))?;
        let parsed = ProductTable::from_json(&json).map_err(|e| e.to_string())?;
        ensure(parsed.to_json() == json, || format!("{name}: emit/parse/emit not a fixed point"))?;
        ensure(parsed == xprod_cli::load_table(name).unwrap(), || format!("{name}: round trip changed table"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let c3 = ProductTable::cross3();
    let c7 = ProductTable::cross7();
    let criteria: Vec<Criterion> = vec![
        ("AC1  table fidelity", Box::new(ac1_table_fidelity)),
        (
            "AC2  axiom suite (cross3, cross7)",
            Box::new(|| ac2_axioms(&c3, SEED).and(ac2_axioms(&c7, SEED))),
        ),
        (
            "AC3  eq5 and eq12 (cross3, cross7)",
            Box::new(|| ac3_identities(&c3, SEED).and(ac3_identities(&c7, SEED))),
        ),
        (
            "AC4  basis-sum closed forms",
            Box::new(|| ac4_basis_sums(&c3, SEED, (0, 0)).and(ac4_basis_sums(&c7, SEED, (168, 168)))),
        ),
        ("AC5  obstruction certificate", Box::new(ac5_obstruction)),
        ("AC6  triple-product expansion fails in 7D", Box::new(|| ac6_eq6(SEED))),
        ("AC7  g tensor and contraction identity", Box::new(ac7_g_tensor)),
        ("AC8  octonion derivation and isomorphism", Box::new(ac8_octonion_derivation)),
        ("AC9  Hurwitz boundary", Box::new(|| ac9_hurwitz(SEED))),
        ("AC10 falsification sweep", Box::new(|| ac10_falsification(SEED))),
        ("AC11 determinism and round trip", Box::new(ac11_determinism)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = std::time::Instant::now();
        match check() {
            Ok(()) => println!("PASS  {name}  ({:.2?})", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
