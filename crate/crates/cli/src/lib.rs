//! Command-line front end for `xprod`.
//!
//! [`run`] does all the work and returns the exit code with the rendered
//! output, so the binary is a thin wrapper and tests can drive commands
//! in-process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use xprod::cayley_dickson::{derived_table, hurwitz_boundary_check, MAX_LEVEL};
use xprod::falsify::{sweep, SWEEP_DIMENSIONS};
use xprod::identities::{g_tensor, obstruction_report};
use xprod::iso::{find_signed_iso, verify_iso, SignedPermutation};
use xprod::vector::parse_vector;
use xprod::{Error, ProductTable, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const BUILTINS: [&str; 3] = ["cross3", "cross7", "octonion-derived"];

#[derive(Debug, Parser)]
#[command(name = "xprod", version, about = "Exact construction and verification of vector products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Builtin table (cross3, cross7, octonion-derived) or path to a table JSON file.
    #[arg(long, global = true, default_value = "cross7")]
    pub table: String,

    /// Number of seeded random samples per identity.
    #[arg(long, global = true, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Write the table in canonical JSON.
    EmitTable,
    /// Evaluate a x b for two JSON vectors, e.g. '["1","0","0"]'.
    Cross { a: String, b: String },
    /// Run every identity check; exit 1 if any is violated.
    Verify,
    /// Print the dimension-obstruction sums and closed forms.
    Obstruction,
    /// Print the nonzero components of the rank-4 ternary tensor.
    GTensor {
        /// Only one positive representative per set of four indices.
        #[arg(long)]
        independent: bool,
    },
    /// Search for a signed permutation carrying --table onto --target.
    Iso {
        #[arg(long, default_value = "cross7")]
        target: String,
    },
    /// Check norm multiplicativity at a Cayley-Dickson level (0..=4).
    CdCheck {
        #[arg(long)]
        level: u32,
    },
    /// Certify that candidate products in dimensions 2, 4, 5, 6 all fail.
    Falsify {
        /// Candidate tables per dimension.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        candidates: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
    pub error: Option<String>,
}

impl Outcome {
    fn ok(code: i32, output: String) -> Self {
        Outcome {
            code,
            output,
            error: None,
        }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        Outcome {
            code,
            output: String::new(),
            error: Some(message.into()),
        }
    }
}

/// Resolves a builtin name or reads a table file.
pub fn load_table(source: &str) -> Result<ProductTable, String> {
    match source {
        "cross3" => Ok(ProductTable::cross3()),
        "cross7" => Ok(ProductTable::cross7()),
        "octonion-derived" => Ok(derived_table()),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read table {path}: {e}"))?;
            ProductTable::from_json(&text).map_err(|e| format!("{path}: {e}"))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn describe(source: &str, t: &ProductTable) -> String {
    format!("table: {source} (dimension {})\n", t.dim())
}

pub fn run(cli: &Cli) -> Outcome {
    let samples = cli.samples as usize;
    let table = match &cli.command {
        Command::CdCheck { .. } | Command::Falsify { .. } => None,
        _ => match load_table(&cli.table) {
            Ok(t) => Some(t),
            Err(e) => return Outcome::fail(EXIT_USAGE, e),
        },
    };
    let table = || table.as_ref().expect("table loaded for this command");

    match &cli.command {
        Command::EmitTable => Outcome::ok(EXIT_OK, table().to_json()),
        Command::Cross { a, b } => cross(cli, table(), a, b),
        Command::Verify => verify(cli, table(), samples),
        Command::Obstruction => obstruction(cli, table()),
        Command::GTensor { independent } => g_components(cli, table(), *independent),
        Command::Iso { target } => iso(cli, table(), target),
        Command::CdCheck { level } => cd_check(cli, *level, samples),
        Command::Falsify { candidates } => falsify(cli, *candidates as usize, samples),
    }
}

fn cross(cli: &Cli, t: &ProductTable, a: &str, b: &str) -> Outcome {
    let parse = |s: &str| parse_vector(s).map_err(|e| format!("bad vector {s:?}: {e}"));
    let (a, b) = match (parse(a), parse(b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Outcome::fail(EXIT_USAGE, e),
    };
    match t.cross(&a, &b) {
        Ok(v) if cli.json => Outcome::ok(EXIT_OK, format!("{}\n", serde_json::to_string(&v).expect("vector"))),
        Ok(v) => Outcome::ok(EXIT_OK, format!("{v}\n")),
        Err(e @ Error::DimensionMismatch { .. }) => Outcome::fail(EXIT_USAGE, e.to_string()),
        Err(e) => Outcome::fail(EXIT_INTERNAL, e.to_string()),
    }
}

fn verify(cli: &Cli, t: &ProductTable, samples: usize) -> Outcome {
    let report = match xprod::verify_table(t, samples, cli.seed) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_INTERNAL, format!("internal error: {e}")),
    };
    let code = if report.all_hold() { EXIT_OK } else { EXIT_VIOLATED };
    if cli.json {
        return Outcome::ok(code, to_json(&report));
    }
    let mut out = describe(&cli.table, t);
    let _ = writeln!(out, "samples: {}, seed: {}", report.samples, report.seed);
    for r in &report.reports {
        let _ = writeln!(out, "{r}");
    }
    match &report.eq6_counterexample {
        Some(c) => {
            let (i, j, k) = c.indices;
            let _ = writeln!(out, "triple-product expansion fails: {{e{i},e{j},e{k}}} = {}", c.value);
        }
        None => {
            let _ = writeln!(out, "triple-product expansion holds on all basis triples");
        }
    }
    let violated = report.reports.iter().filter(|r| !r.is_holds()).count();
    if violated == 0 {
        let _ = writeln!(out, "result: all {} identities hold", report.reports.len());
    } else {
        let _ = writeln!(out, "result: {violated} of {} identities violated", report.reports.len());
    }
    Outcome::ok(code, out)
}

fn obstruction(cli: &Cli, t: &ProductTable) -> Outcome {
    let r = obstruction_report(t);
    let code = if r.consistent() { EXIT_OK } else { EXIT_VIOLATED };
    if cli.json {
        return Outcome::ok(code, to_json(&r));
    }
    let mut out = describe(&cli.table, t);
    let _ = writeln!(out, "lhs_sum:    {}", r.lhs_sum);
    let _ = writeln!(out, "rhs_sum:    {}", r.rhs_sum);
    let _ = writeln!(out, "lhs_closed: {}  (4n(n-1)^2(n-3))", r.lhs_closed);
    let _ = writeln!(out, "rhs_closed: {}  (3n(n-1)(n-3)(3n-13))", r.rhs_closed);
    let _ = writeln!(out, "poly:       {}  (5n(n-1)(n-3)(n-7))", r.poly);
    let _ = writeln!(out, "status: {}", if r.consistent() { "consistent" } else { "violated" });
    Outcome::ok(code, out)
}

#[derive(Serialize)]
struct GComponent {
    i: usize,
    j: usize,
    m: usize,
    n: usize,
    g: Rational,
}

fn g_components(cli: &Cli, t: &ProductTable, independent: bool) -> Outcome {
    let g = g_tensor(t);
    let comps: Vec<GComponent> = if independent {
        g.independent_components()
            .into_iter()
            .map(|((i, j, m, n), g)| GComponent { i, j, m, n, g })
            .collect()
    } else {
        g.nonzero()
            .map(|((i, j, m, n), g)| GComponent {
                i,
                j,
                m,
                n,
                g: g.clone(),
            })
            .collect()
    };
    if cli.json {
        return Outcome::ok(EXIT_OK, to_json(&comps));
    }
    let mut out = String::new();
    for c in &comps {
        let _ = writeln!(out, "g({},{},{},{}) = {}", c.i, c.j, c.m, c.n, c.g);
    }
    Outcome::ok(EXIT_OK, out)
}

#[derive(Serialize)]
struct IsoOutput {
    iso: Option<SignedPermutation>,
    verified_pairs: usize,
    total_pairs: usize,
}

fn iso(cli: &Cli, t: &ProductTable, target: &str) -> Outcome {
    let other = match load_table(target) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    if t.dim() != other.dim() {
        return Outcome::fail(
            EXIT_USAGE,
            format!("dimension mismatch: {} vs {}", t.dim(), other.dim()),
        );
    }
    let n = t.dim();
    let found = match find_signed_iso(t, &other) {
        Ok(f) => f,
        Err(e) => return Outcome::fail(EXIT_INTERNAL, e.to_string()),
    };
    let verified = match &found {
        Some(s) => match verify_iso(t, &other, s) {
            Ok(v) => v,
            Err(e) => return Outcome::fail(EXIT_INTERNAL, e.to_string()),
        },
        None => 0,
    };
    let total = n * (n - 1) / 2;
    if found.is_some() && verified != total {
        return Outcome::fail(EXIT_INTERNAL, format!("isomorphism verified on only {verified}/{total} pairs"));
    }
    let code = if found.is_some() { EXIT_OK } else { EXIT_VIOLATED };
    let result = IsoOutput {
        iso: found,
        verified_pairs: verified,
        total_pairs: total,
    };
    if cli.json {
        return Outcome::ok(code, to_json(&result));
    }
    let out = match &result.iso {
        Some(s) => format!(
            "{}\nverified basis pairs: {verified}/{total}\n",
            serde_json::to_string(s).expect("permutation")
        ),
        None => format!("no signed permutation maps {} onto {target}\n", cli.table),
    };
    Outcome::ok(code, out)
}

fn cd_check(cli: &Cli, level: u32, samples: usize) -> Outcome {
    let r = match hurwitz_boundary_check(level, samples, cli.seed) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
    };
    // below the sedenions the norm must multiply; at level 4 a witness must exist
    let expected = if level < MAX_LEVEL { r.multiplicative } else { r.witness.is_some() };
    let code = if expected { EXIT_OK } else { EXIT_VIOLATED };
    if cli.json {
        return Outcome::ok(code, to_json(&r));
    }
    let mut out = format!("level: {level} (dimension {})\n", 1u32 << level);
    if level < MAX_LEVEL {
        let _ = writeln!(out, "samples checked: {}", r.samples_checked);
    }
    let _ = writeln!(out, "norm multiplicative: {}", if r.multiplicative { "yes" } else { "no" });
    if let Some(w) = &r.witness {
        let fmt = |c: &[Rational]| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        let _ = writeln!(out, "witness x: ({})", fmt(w.x.coefficients()));
        let _ = writeln!(out, "witness y: ({})", fmt(w.y.coefficients()));
        let _ = writeln!(out, "|xy|^2 = {}, |x|^2 |y|^2 = {}", w.norm_of_product, w.product_of_norms);
    }
    Outcome::ok(code, out)
}

fn falsify(cli: &Cli, per_dimension: usize, samples: usize) -> Outcome {
    let report = sweep(&SWEEP_DIMENSIONS, per_dimension, samples, cli.seed);
    let code = if report.all_rejected() { EXIT_OK } else { EXIT_VIOLATED };
    if cli.json {
        return Outcome::ok(code, to_json(&report));
    }
    let mut out = String::new();
    for c in &report.candidates {
        match &c.certificate {
            Some(r) => {
                let _ = writeln!(out, "n={} {}: rejected, {r}", c.dimension, c.label);
            }
            None => {
                let _ = writeln!(out, "n={} {}: NOT REJECTED", c.dimension, c.label);
            }
        }
    }
    for n in SWEEP_DIMENSIONS {
        let all: Vec<_> = report.candidates.iter().filter(|c| c.dimension == n).collect();
        let rejected = all.iter().filter(|c| c.rejected()).count();
        let _ = writeln!(out, "dimension {n}: {rejected}/{} candidates rejected", all.len());
    }
    Outcome::ok(code, out)
}
