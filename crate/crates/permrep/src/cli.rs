//! Command-line front end: character tables, multiplicity tables,
//! canonical factorization, verification suites, and asymptotic reports.
//!
//! Every command assembles a structured output document and then renders
//! it as human-readable text (default), JSON (`--json`), or CSV
//! (`--csv`). Output is deterministic: identical inputs produce
//! byte-identical output.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::asymptotics::AsymptoticReport;
use crate::binary::{canonicalize, parse_matrix_file};
use crate::characters::{kronecker_gamma, CharTable};
use crate::colored::{canonicalize_signed, parse_colored_file, project, t_tilde};
use crate::error::{Error, Result};
use crate::multiplicity::{
    alpha_mult, alpha_mult_h_direct, alpha_mult_h_paths, alpha_mult_x_lr, alpha_mult_x_restriction,
    beta_mult, AlphaTable, BetaTable, Family,
};
use crate::partition::{partitions_of, Partition};
use crate::verify::{run_suite, VerificationResult, DEFAULT_BUDGET};

/// Version of the output-document layout; kept in the schema file.
pub const SCHEMA_VERSION: &str = "1.0.0";

/// Largest degree `chartable` accepts unless `--cap` raises it.
const DEFAULT_CHARTABLE_CAP: usize = 12;

/// Exact permutation representations of symmetric groups on matrix orbit
/// families: tables, factorization, verification, and statistics.
#[derive(Parser, Debug)]
#[command(name = "permrep", version, about)]
pub struct Cli {
    /// Emit a JSON output document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Emit CSV rows instead of text (table-producing commands only).
    #[arg(long, global = true, conflicts_with = "json")]
    pub csv: bool,

    /// Refuse to enumerate any set larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_name = "N")]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Command,
}

/// The available subcommands.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the exact character table of the symmetric group S_n.
    Chartable {
        /// Degree n.
        n: usize,
        /// Largest degree the command accepts.
        #[arg(long, default_value_t = DEFAULT_CHARTABLE_CAP)]
        cap: usize,
    },

    /// Irreducible multiplicity tables for a matrix family.
    Multiplicity {
        /// Family: H (staircase orbit), X (signed permutations),
        /// B (all signed permutations), or Y (r-colored permutations).
        family: String,
        /// Matrix size n.
        n: usize,
        /// Family parameter k (ignored by family B).
        #[arg(default_value_t = 0)]
        k: usize,
        /// Number of colors for family Y.
        #[arg(long)]
        r: Option<usize>,
        /// Single-entry mode: a partition of n as comma-joined parts.
        #[arg(long)]
        lambda: Option<String>,
        /// Second partition for a single two-sided entry.
        #[arg(long, requires = "lambda")]
        mu: Option<String>,
        /// Recompute entries along independent routes and report agreement.
        #[arg(long)]
        verify_routes: bool,
    },

    /// Factor a matrix file through its family representative.
    Canonicalize {
        /// A binary matrix file ("n k" header plus a 0/1 grid) or a
        /// colored permutation file ("n r k" header plus a permutation
        /// line and a colors line).
        file: PathBuf,
    },

    /// Run a brute-force verification suite.
    Verify {
        /// Suite: orbit-sizes, orbit-chars, decomposition, identities,
        /// closed-forms, or all.
        suite: String,
        /// Largest degree the suite covers.
        n_max: usize,
    },

    /// Exact norm and angle statistics for a family's conjugation
    /// character.
    Asymptotics {
        /// Family: H, X, B, or Y.
        family: String,
        /// Degree n; with --series the lone positional is read as k instead.
        n: Option<usize>,
        /// Family parameter k.
        #[arg(default_value_t = 0)]
        k: usize,
        /// Number of colors for family Y.
        #[arg(long)]
        r: Option<usize>,
        /// Degree range for a series report, e.g. 4..30.
        #[arg(long, value_name = "LO..HI")]
        series: Option<String>,
        /// Include per-partition multiplicity ratios.
        #[arg(long)]
        ratios: bool,
    },
}

/// A structured command result, ready to render in any output mode.
#[derive(Debug)]
pub struct OutputDocument {
    /// The subcommand that produced this document.
    pub command: String,
    /// Echo of the effective parameters.
    pub parameters: Value,
    /// Command-specific payload.
    pub results: Value,
}

impl OutputDocument {
    /// The complete JSON form, including the schema version.
    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
        })
    }
}

/// Output format selected by the global flags.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mode {
    Human,
    Json,
    Csv,
}

/// Parses the process arguments, runs the command, prints the output,
/// and maps the outcome to an exit code: 0 for success, 1 for a
/// verification suite that found failures, 2 for usage or input errors.
pub fn main_entry() -> ExitCode {
    run(Cli::parse())
}

/// Runs an already-parsed invocation. See [`main_entry`] for the exit
/// code contract.
pub fn run(cli: Cli) -> ExitCode {
    let mode = if cli.json {
        Mode::Json
    } else if cli.csv {
        Mode::Csv
    } else {
        Mode::Human
    };
    let command_name = command_name(&cli.command);
    if mode == Mode::Csv && command_name == "canonicalize" {
        eprintln!("error: canonicalize has no CSV form; use --json or the default text output");
        return ExitCode::from(2);
    }
    match execute(&cli) {
        Ok(doc) => {
            print!("{}", render(&doc, mode));
            if doc.command == "verify" && doc.results["pass"] == Value::Bool(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            if mode == Mode::Json {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command_name,
                    "parameters": Value::Object(Default::default()),
                    "error": { "kind": error_kind(&err), "message": err.to_string() },
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                );
            } else {
                eprintln!("error: {err}");
            }
            ExitCode::from(2)
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Chartable { .. } => "chartable",
        Command::Multiplicity { .. } => "multiplicity",
        Command::Canonicalize { .. } => "canonicalize",
        Command::Verify { .. } => "verify",
        Command::Asymptotics { .. } => "asymptotics",
    }
}

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::Parse(_) => "parse",
        Error::NotInFamily { .. } => "not-in-family",
        Error::BudgetExceeded { .. } => "budget-exceeded",
        Error::Unsupported(_) => "unsupported",
        Error::Io(_) => "io",
    }
}

fn execute(cli: &Cli) -> Result<OutputDocument> {
    match &cli.command {
        Command::Chartable { n, cap } => cmd_chartable(*n, *cap),
        Command::Multiplicity {
            family,
            n,
            k,
            r,
            lambda,
            mu,
            verify_routes,
        } => cmd_multiplicity(
            family,
            *n,
            *k,
            *r,
            lambda.as_deref(),
            mu.as_deref(),
            *verify_routes,
        ),
        Command::Canonicalize { file } => cmd_canonicalize(file),
        Command::Verify { suite, n_max } => cmd_verify(suite, *n_max, cli.budget),
        Command::Asymptotics {
            family,
            n,
            k,
            r,
            series,
            ratios,
        } => cmd_asymptotics(family, *n, *k, *r, series.as_deref(), *ratios),
    }
}

/// Parses a family letter, enforcing that `--r` appears exactly for `Y`.
fn parse_family(text: &str, r: Option<usize>) -> Result<Family> {
    let family = match text {
        "H" | "h" => Family::H,
        "X" | "x" => Family::X,
        "B" | "b" | "Bn" | "bn" => Family::Bn,
        "Y" | "y" => {
            let r = r.ok_or_else(|| {
                Error::Unsupported("family Y requires --r (the number of colors)".to_string())
            })?;
            if r < 2 {
                return Err(Error::Unsupported(
                    "family Y needs at least 2 colors".to_string(),
                ));
            }
            return Ok(Family::Y(r));
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown family '{other}'; valid families are H, X, B, Y"
            )))
        }
    };
    if r.is_some() {
        return Err(Error::Unsupported(
            "--r applies to family Y only".to_string(),
        ));
    }
    Ok(family)
}

/// The single-letter form used in parameter echoes.
fn family_letter(family: Family) -> &'static str {
    match family {
        Family::H => "H",
        Family::X => "X",
        Family::Bn => "B",
        Family::Y(_) => "Y",
    }
}

/// Parses a partition of `n` given as comma-joined parts.
fn parse_partition(text: &str, n: usize) -> Result<Partition> {
    let mut parts = Vec::new();
    for piece in text.split(',') {
        let part: usize = piece
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad partition part '{piece}' in '{text}'")))?;
        if part == 0 {
            return Err(Error::Parse(format!(
                "partition parts must be positive: '{text}'"
            )));
        }
        parts.push(part);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parse(format!(
            "partition parts must be weakly decreasing: '{text}'"
        )));
    }
    if parts.iter().sum::<usize>() != n {
        return Err(Error::Parse(format!(
            "partition '{text}' does not sum to {n}"
        )));
    }
    Ok(Partition::new(parts))
}

/// Parses a degree range written as `lo..hi` (inclusive).
fn parse_range(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad range '{text}'; expected LO..HI, e.g. 4..30"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Renders an exact rational to `sig` significant decimal digits,
/// rounding half away from zero; switches to scientific notation outside
/// a comfortable plain-decimal window.
fn decimal_string(q: &BigRational, sig: u32) -> String {
    assert!(sig >= 1, "need at least one digit");
    if q.is_zero() {
        return "0".to_string();
    }
    let a = q.numer().abs();
    let b = q.denom().abs();
    let digit_count = |x: &BigInt| x.to_string().len() as i64;
    let pow10 = |p: i64| BigInt::from(10).pow(u32::try_from(p).expect("small exponent"));
    // floor(log10(a/b)): the digit-count difference, corrected down once
    // when 10^e exceeds the value.
    let mut e = digit_count(&a) - digit_count(&b);
    let ten_pow_le = |e: i64| {
        if e >= 0 {
            a >= &b * pow10(e)
        } else {
            &a * pow10(-e) >= b
        }
    };
    if !ten_pow_le(e) {
        e -= 1;
    }
    let shift = sig as i64 - 1 - e;
    let (num, den) = if shift >= 0 {
        (&a * pow10(shift), b.clone())
    } else {
        (a.clone(), &b * pow10(-shift))
    };
    let mut scaled = (BigInt::from(2) * num + &den) / (BigInt::from(2) * den);
    if digit_count(&scaled) > sig as i64 {
        scaled /= BigInt::from(10);
        e += 1;
    }
    let digits = scaled.to_string();
    debug_assert_eq!(digits.len(), sig as usize);
    let body = if e >= sig as i64 || e < -4 {
        format!("{}.{}e{}", &digits[..1], &digits[1..], e)
    } else if e >= 0 {
        let point = (e + 1) as usize;
        if point >= digits.len() {
            digits
        } else {
            format!("{}.{}", &digits[..point], &digits[point..])
        }
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    };
    if q.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

/// JSON form of an exact rational: the exact value plus a 6-significant-
/// digit decimal rendering.
fn quantity(q: &BigRational) -> Value {
    json!({ "exact": q.to_string(), "decimal": decimal_string(q, 6) })
}

/// Builds the character table document.
pub fn cmd_chartable(n: usize, cap: usize) -> Result<OutputDocument> {
    if n == 0 || n > cap {
        return Err(Error::Unsupported(format!(
            "chartable degree must be between 1 and {cap} (got {n})"
        )));
    }
    let table = CharTable::for_n(n);
    let rows_order = partitions_of(n);
    let mut class_order = partitions_of(n);
    class_order.reverse();
    let rows: Vec<Value> = rows_order
        .iter()
        .map(|lambda| {
            Value::Array(
                class_order
                    .iter()
                    .map(|mu| Value::String(table.chi(lambda, mu).to_string()))
                    .collect(),
            )
        })
        .collect();
    Ok(OutputDocument {
        command: "chartable".to_string(),
        parameters: json!({ "n": n, "cap": cap }),
        results: json!({
            "n": n,
            "partitions": strings(&rows_order),
            "classes": strings(&class_order),
            "rows": rows,
            "orthogonality_ok": table.orthogonality_ok(),
        }),
    })
}

fn strings(partitions: &[Partition]) -> Vec<String> {
    partitions.iter().map(|p| p.to_string()).collect()
}

/// Whether each family's independent per-entry routes reproduce the
/// table entry.
fn family_routes_agree(
    family: Family,
    lambda: &Partition,
    mu: &Partition,
    k: usize,
    entry: &BigInt,
) -> bool {
    match family {
        Family::H => {
            alpha_mult_h_direct(lambda, mu, k) == *entry
                && alpha_mult_h_paths(lambda, mu, k) == *entry
        }
        Family::X => {
            alpha_mult_x_lr(lambda, mu, k) == *entry
                && alpha_mult_x_restriction(lambda, mu, k) == *entry
        }
        Family::Bn => {
            let n = lambda.sum();
            let lr: BigInt = (0..=n).map(|j| alpha_mult_x_lr(lambda, mu, j)).sum();
            let restriction: BigInt = (0..=n)
                .map(|j| alpha_mult_x_restriction(lambda, mu, j))
                .sum();
            lr == *entry && restriction == *entry
        }
        // The class-average route is the only per-entry route for Y; the
        // table-level contraction check still applies.
        Family::Y(_) => true,
    }
}

/// Whether contracting the two-sided table against triple coefficients
/// reproduces the diagonal vector.
fn gamma_contraction_agrees(alpha: &AlphaTable, beta: &BetaTable, n: usize) -> bool {
    let lambdas = partitions_of(n);
    for lambda in &lambdas {
        let mut total = BigInt::zero();
        for mu in &lambdas {
            for nu in &lambdas {
                let entry = alpha.entry(mu, nu);
                if entry.is_zero() {
                    continue;
                }
                total += entry * kronecker_gamma(mu, nu, lambda);
            }
        }
        if total != *beta.entry(lambda) {
            return false;
        }
    }
    true
}

/// Builds a multiplicity document: a single entry when `lambda` is given,
/// the full two-sided table plus the diagonal vector otherwise.
pub fn cmd_multiplicity(
    family_text: &str,
    n: usize,
    k: usize,
    r: Option<usize>,
    lambda: Option<&str>,
    mu: Option<&str>,
    verify_routes: bool,
) -> Result<OutputDocument> {
    let family = parse_family(family_text, r)?;
    if n == 0 {
        return Err(Error::Unsupported(
            "the degree must be at least 1".to_string(),
        ));
    }
    if family.uses_k() && k > n {
        return Err(Error::Unsupported(format!("k = {k} exceeds n = {n}")));
    }
    let mut parameters = json!({ "family": family_letter(family), "n": n, "k": k });
    if let Family::Y(colors) = family {
        parameters["r"] = json!(colors);
    }
    if let Some(lambda_text) = lambda {
        let lambda = parse_partition(lambda_text, n)?;
        parameters["lambda"] = json!(lambda.to_string());
        let mut results = json!({
            "family": family_letter(family), "n": n, "k": k,
            "lambda": lambda.to_string(),
        });
        if let Family::Y(colors) = family {
            results["r"] = json!(colors);
        }
        let value = match mu {
            Some(mu_text) => {
                let mu = parse_partition(mu_text, n)?;
                parameters["mu"] = json!(mu.to_string());
                results["mu"] = json!(mu.to_string());
                let value = alpha_mult(family, &lambda, &mu, k);
                if verify_routes {
                    results["route_agreement"] =
                        json!(family_routes_agree(family, &lambda, &mu, k, &value));
                }
                value
            }
            None => beta_mult(family, &lambda, k),
        };
        results["multiplicity"] = json!(value.to_string());
        return Ok(OutputDocument {
            command: "multiplicity".to_string(),
            parameters,
            results,
        });
    }
    let partitions = partitions_of(n);
    let alpha = AlphaTable::build(family, n, k);
    let beta = BetaTable::build(family, n, k);
    let alpha_rows: Vec<Value> = partitions
        .iter()
        .map(|lambda| {
            Value::Array(
                partitions
                    .iter()
                    .map(|mu| Value::String(alpha.entry(lambda, mu).to_string()))
                    .collect(),
            )
        })
        .collect();
    let beta_vector: Vec<String> = partitions
        .iter()
        .map(|lambda| beta.entry(lambda).to_string())
        .collect();
    let mut results = json!({
        "family": family_letter(family), "n": n, "k": k,
        "partitions": strings(&partitions),
        "alpha": alpha_rows,
        "beta": beta_vector,
        "alpha_dimension_ok": alpha.dimension_identity_ok(),
        "beta_dimension_ok": beta.dimension_identity_ok(),
    });
    if let Family::Y(colors) = family {
        results["r"] = json!(colors);
    }
    if verify_routes {
        let per_entry = partitions.iter().all(|lambda| {
            partitions
                .iter()
                .all(|mu| family_routes_agree(family, lambda, mu, k, alpha.entry(lambda, mu)))
        });
        results["route_agreement"] = json!(per_entry && gamma_contraction_agrees(&alpha, &beta, n));
    }
    Ok(OutputDocument {
        command: "multiplicity".to_string(),
        parameters,
        results,
    })
}

/// Factors the matrix in `file` through its family representative.
pub fn cmd_canonicalize(file: &PathBuf) -> Result<OutputDocument> {
    let text = fs::read_to_string(file)?;
    let parameters = json!({ "file": file.display().to_string() });
    let header_tokens = text
        .lines()
        .find(|line| !line.trim().is_empty())
        .map(|line| line.split_whitespace().count())
        .unwrap_or(0);
    let results = match header_tokens {
        2 => {
            let (matrix, k) = parse_matrix_file(&text)?;
            let factorization = canonicalize(&matrix, k)?;
            let reconstruction_ok = factorization.reconstruct() == matrix;
            let t = factorization.pi.compose(&factorization.sigma);
            let lifted = t_tilde(&matrix, k)?;
            json!({
                "format": "binary",
                "family": "H",
                "n": matrix.n(),
                "k": k,
                "pi": factorization.pi.to_string(),
                "sigma": factorization.sigma.to_string(),
                "reconstruction_ok": reconstruction_ok,
                "t_map": t.to_string(),
                "t_tilde": {
                    "perm": lifted.perm().to_string(),
                    "colors": join_spaced(lifted.colors()),
                },
            })
        }
        3 => {
            let (colored, k) = parse_colored_file(&text)?;
            let factorization = canonicalize_signed(&colored, k)?;
            let reconstruction_ok = factorization.reconstruct() == colored;
            json!({
                "format": "colored",
                "family": "X",
                "n": colored.n(),
                "r": colored.r(),
                "k": k,
                "pi": factorization.pi.to_string(),
                "sigma": factorization.sigma.to_string(),
                "reconstruction_ok": reconstruction_ok,
                "project": project(&colored).to_string(),
            })
        }
        _ => {
            return Err(Error::Parse(
                "matrix file header must be 'n k' (binary) or 'n r k' (colored)".to_string(),
            ))
        }
    };
    Ok(OutputDocument {
        command: "canonicalize".to_string(),
        parameters,
        results,
    })
}

fn join_spaced(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn verification_run_json(run: &VerificationResult) -> Value {
    json!({
        "suite": run.suite,
        "family": run.family.map(|f| f.to_string()),
        "n": run.n,
        "k": run.k,
        "checks_run": run.checks_run,
        "pass": run.pass(),
        "failures": run.failures.iter().map(|f| json!({
            "input": f.input,
            "expected": f.expected,
            "actual": f.actual,
        })).collect::<Vec<_>>(),
    })
}

/// Runs a verification suite and wraps its results.
pub fn cmd_verify(suite: &str, n_max: usize, budget: u64) -> Result<OutputDocument> {
    let runs = run_suite(suite, n_max, budget)?;
    let pass = runs.iter().all(VerificationResult::pass);
    let total_checks: u64 = runs.iter().map(|r| r.checks_run).sum();
    Ok(OutputDocument {
        command: "verify".to_string(),
        parameters: json!({ "suite": suite, "n_max": n_max, "budget": budget }),
        results: json!({
            "suite": suite,
            "n_max": n_max,
            "budget": budget,
            "pass": pass,
            "total_checks": total_checks,
            "runs": runs.iter().map(verification_run_json).collect::<Vec<_>>(),
        }),
    })
}

fn report_point_json(report: &AsymptoticReport) -> Value {
    let mut point = json!({
        "family": family_letter(report.family),
        "n": report.n,
        "k": report.k,
        "sum_inverse_class_sizes": quantity(&report.sum_inverse_class_sizes),
        "f": quantity(&report.f_value),
        "norm_squared": quantity(&report.norm_squared),
        "cosine_squared": quantity(&report.cosine_squared),
        "sandwich_ok": report.sandwich_ok,
    });
    if let Family::Y(colors) = report.family {
        point["r"] = json!(colors);
    }
    if let Some(rows) = &report.per_lambda {
        point["per_lambda"] = Value::Array(
            rows.iter()
                .map(|row| {
                    json!({
                        "lambda": row.lambda.to_string(),
                        "ratio": quantity(&row.ratio),
                        "balance": quantity(&row.balance),
                    })
                })
                .collect(),
        );
    }
    point
}

/// Builds a single-degree or series asymptotics document.
pub fn cmd_asymptotics(
    family_text: &str,
    n: Option<usize>,
    k: usize,
    r: Option<usize>,
    series: Option<&str>,
    ratios: bool,
) -> Result<OutputDocument> {
    let family = parse_family(family_text, r)?;
    let mut parameters = json!({ "family": family_letter(family), "k": k });
    if let Family::Y(colors) = family {
        parameters["r"] = json!(colors);
    }
    let results = match (n, series) {
        (Some(_), Some(_)) if k != 0 => {
            return Err(Error::Unsupported(
                "give a single degree or --series, not both".to_string(),
            ))
        }
        (None, None) => {
            return Err(Error::Unsupported(
                "give a degree (e.g. 'asymptotics H 6 2') or --series LO..HI".to_string(),
            ))
        }
        (Some(n), None) => {
            if n == 0 {
                return Err(Error::Unsupported(
                    "the degree must be at least 1".to_string(),
                ));
            }
            if family.uses_k() && k > n {
                return Err(Error::Unsupported(format!("k = {k} exceeds n = {n}")));
            }
            parameters["n"] = json!(n);
            report_point_json(&AsymptoticReport::build(family, n, k, ratios))
        }
        (series_k, Some(range_text)) => {
            // Degrees come from the range, so a lone positional is k.
            let k = series_k.unwrap_or(k);
            parameters["k"] = json!(k);
            if ratios {
                return Err(Error::Unsupported(
                    "--ratios applies to single-degree reports only".to_string(),
                ));
            }
            let (lo, hi) = parse_range(range_text)?;
            if family.uses_k() && k > lo {
                return Err(Error::Unsupported(format!(
                    "k = {k} exceeds the smallest degree {lo} in the series"
                )));
            }
            parameters["series"] = json!(format!("{lo}..{hi}"));
            let points: Vec<Value> = (lo..=hi)
                .map(|degree| report_point_json(&AsymptoticReport::build(family, degree, k, false)))
                .collect();
            json!({
                "family": family_letter(family),
                "k": k,
                "from": lo,
                "to": hi,
                "points": points,
            })
        }
    };
    Ok(OutputDocument {
        command: "asymptotics".to_string(),
        parameters,
        results,
    })
}

fn render(doc: &OutputDocument, mode: Mode) -> String {
    match mode {
        Mode::Json => {
            let mut text =
                serde_json::to_string_pretty(&doc.to_json()).expect("serializable document");
            text.push('\n');
            text
        }
        Mode::Csv => render_csv(doc),
        Mode::Human => render_human(doc),
    }
}

/// Quotes a CSV field when it contains a delimiter, quote, or newline.
fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}

fn str_of(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn quantity_fields(value: &Value) -> (String, String) {
    (str_of(&value["exact"]), str_of(&value["decimal"]))
}

fn render_csv(doc: &OutputDocument) -> String {
    let results = &doc.results;
    let mut out = String::new();
    match doc.command.as_str() {
        "chartable" => {
            let mut header = vec!["lambda".to_string()];
            for class in results["classes"].as_array().expect("classes") {
                header.push(str_of(class));
            }
            out.push_str(&csv_line(&header));
            let partitions = results["partitions"].as_array().expect("partitions");
            let rows = results["rows"].as_array().expect("rows");
            for (lambda, row) in partitions.iter().zip(rows) {
                let mut fields = vec![str_of(lambda)];
                fields.extend(row.as_array().expect("row").iter().map(str_of));
                out.push_str(&csv_line(&fields));
            }
        }
        "multiplicity" => {
            out.push_str(&csv_line(&[
                "table".into(),
                "lambda".into(),
                "mu".into(),
                "value".into(),
            ]));
            if let Some(value) = results.get("multiplicity") {
                let kind = if results.get("mu").is_some() {
                    "alpha"
                } else {
                    "beta"
                };
                out.push_str(&csv_line(&[
                    kind.to_string(),
                    str_of(&results["lambda"]),
                    results.get("mu").map(str_of).unwrap_or_default(),
                    str_of(value),
                ]));
            } else {
                let partitions = results["partitions"].as_array().expect("partitions");
                let alpha = results["alpha"].as_array().expect("alpha");
                for (lambda, row) in partitions.iter().zip(alpha) {
                    for (mu, value) in partitions.iter().zip(row.as_array().expect("row")) {
                        out.push_str(&csv_line(&[
                            "alpha".to_string(),
                            str_of(lambda),
                            str_of(mu),
                            str_of(value),
                        ]));
                    }
                }
                let beta = results["beta"].as_array().expect("beta");
                for (lambda, value) in partitions.iter().zip(beta) {
                    out.push_str(&csv_line(&[
                        "beta".to_string(),
                        str_of(lambda),
                        String::new(),
                        str_of(value),
                    ]));
                }
            }
        }
        "verify" => {
            out.push_str(&csv_line(&[
                "suite".into(),
                "family".into(),
                "n".into(),
                "k".into(),
                "checks_run".into(),
                "pass".into(),
            ]));
            for run in results["runs"].as_array().expect("runs") {
                out.push_str(&csv_line(&[
                    str_of(&run["suite"]),
                    str_of(&run["family"]),
                    str_of(&run["n"]),
                    str_of(&run["k"]),
                    str_of(&run["checks_run"]),
                    str_of(&run["pass"]),
                ]));
            }
        }
        "asymptotics" => {
            out.push_str(&csv_line(&[
                "n".into(),
                "k".into(),
                "family".into(),
                "sum_inverse_class_sizes".into(),
                "sum_decimal".into(),
                "f".into(),
                "f_decimal".into(),
                "norm_squared".into(),
                "norm_decimal".into(),
                "cosine_squared".into(),
                "cosine_decimal".into(),
                "sandwich_ok".into(),
            ]));
            let empty = Vec::new();
            let points: Vec<&Value> = match results.get("points") {
                Some(list) => list.as_array().unwrap_or(&empty).iter().collect(),
                None => vec![results],
            };
            for point in points {
                let (sum_e, sum_d) = quantity_fields(&point["sum_inverse_class_sizes"]);
                let (f_e, f_d) = quantity_fields(&point["f"]);
                let (norm_e, norm_d) = quantity_fields(&point["norm_squared"]);
                let (cos_e, cos_d) = quantity_fields(&point["cosine_squared"]);
                out.push_str(&csv_line(&[
                    str_of(&point["n"]),
                    str_of(&point["k"]),
                    str_of(&point["family"]),
                    sum_e,
                    sum_d,
                    f_e,
                    f_d,
                    norm_e,
                    norm_d,
                    cos_e,
                    cos_d,
                    str_of(&point["sandwich_ok"]),
                ]));
            }
        }
        other => panic!("no CSV rendering for command '{other}'"),
    }
    out
}

/// Pads `rows` into aligned columns: first column left-aligned, the rest
/// right-aligned.
fn aligned(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i == 0 {
                write!(line, "{:<width$}", cell, width = widths[0]).expect("write");
            } else {
                write!(line, "  {:>width$}", cell, width = widths[i]).expect("write");
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn human_quantity(value: &Value) -> String {
    let (exact, decimal) = quantity_fields(value);
    if exact == decimal {
        exact
    } else {
        format!("{exact} ({decimal})")
    }
}

fn ok_or_failed(flag: &Value) -> &'static str {
    if flag == &Value::Bool(true) {
        "ok"
    } else {
        "FAILED"
    }
}

fn render_human(doc: &OutputDocument) -> String {
    let results = &doc.results;
    let mut out = String::new();
    match doc.command.as_str() {
        "chartable" => {
            let n = &results["n"];
            writeln!(out, "character table of S_{n}").expect("write");
            let mut rows = Vec::new();
            let mut header = vec!["lambda".to_string()];
            header.extend(
                results["classes"]
                    .as_array()
                    .expect("classes")
                    .iter()
                    .map(str_of),
            );
            rows.push(header);
            let partitions = results["partitions"].as_array().expect("partitions");
            let table_rows = results["rows"].as_array().expect("rows");
            for (lambda, row) in partitions.iter().zip(table_rows) {
                let mut cells = vec![str_of(lambda)];
                cells.extend(row.as_array().expect("row").iter().map(str_of));
                rows.push(cells);
            }
            out.push_str(&aligned(&rows));
            writeln!(
                out,
                "orthogonality: {}",
                ok_or_failed(&results["orthogonality_ok"])
            )
            .expect("write");
        }
        "multiplicity" => {
            let family = str_of(&results["family"]);
            let n = &results["n"];
            let k = &results["k"];
            if let Some(value) = results.get("multiplicity") {
                match results.get("mu") {
                    Some(mu) => writeln!(
                        out,
                        "m(({}),({})) = {} for family {family} (n={n}, k={k})",
                        str_of(&results["lambda"]),
                        str_of(mu),
                        str_of(value),
                    )
                    .expect("write"),
                    None => writeln!(
                        out,
                        "m(({}), diagonal) = {} for family {family} (n={n}, k={k})",
                        str_of(&results["lambda"]),
                        str_of(value),
                    )
                    .expect("write"),
                }
            } else {
                writeln!(
                    out,
                    "multiplicity tables for family {family} (n={n}, k={k})"
                )
                .expect("write");
                let partitions = results["partitions"].as_array().expect("partitions");
                let alpha = results["alpha"].as_array().expect("alpha");
                let beta = results["beta"].as_array().expect("beta");
                let mut rows = Vec::new();
                let mut header = vec!["lambda \\ mu".to_string()];
                header.extend(partitions.iter().map(str_of));
                header.push("| diagonal".to_string());
                rows.push(header);
                for ((lambda, row), diag) in partitions.iter().zip(alpha).zip(beta) {
                    let mut cells = vec![str_of(lambda)];
                    cells.extend(row.as_array().expect("row").iter().map(str_of));
                    cells.push(format!("| {}", str_of(diag)));
                    rows.push(cells);
                }
                out.push_str(&aligned(&rows));
                writeln!(
                    out,
                    "dimension identities: two-sided {}, diagonal {}",
                    ok_or_failed(&results["alpha_dimension_ok"]),
                    ok_or_failed(&results["beta_dimension_ok"]),
                )
                .expect("write");
            }
            if let Some(flag) = results.get("route_agreement") {
                writeln!(
                    out,
                    "independent routes: {}",
                    if flag == &Value::Bool(true) {
                        "agree"
                    } else {
                        "DISAGREE"
                    }
                )
                .expect("write");
            }
        }
        "canonicalize" => {
            let family = str_of(&results["family"]);
            let n = &results["n"];
            let k = &results["k"];
            match str_of(&results["format"]).as_str() {
                "binary" => {
                    writeln!(
                        out,
                        "binary matrix: member of family {family} (n={n}, k={k})"
                    )
                    .expect("write");
                }
                _ => {
                    writeln!(
                        out,
                        "colored permutation (r={}): member of family {family} (n={n}, k={k})",
                        str_of(&results["r"]),
                    )
                    .expect("write");
                }
            }
            writeln!(out, "pi:    {}", str_of(&results["pi"])).expect("write");
            writeln!(out, "sigma: {}", str_of(&results["sigma"])).expect("write");
            writeln!(
                out,
                "reconstruction: {}",
                ok_or_failed(&results["reconstruction_ok"])
            )
            .expect("write");
            if let Some(t) = results.get("t_map") {
                writeln!(out, "t_map: {}", str_of(t)).expect("write");
                writeln!(
                    out,
                    "t_tilde: perm {} with colors {}",
                    str_of(&results["t_tilde"]["perm"]),
                    str_of(&results["t_tilde"]["colors"]),
                )
                .expect("write");
            }
            if let Some(p) = results.get("project") {
                writeln!(out, "projection: {}", str_of(p)).expect("write");
            }
        }
        "verify" => {
            writeln!(
                out,
                "verification suite '{}' up to n = {} (budget {})",
                str_of(&results["suite"]),
                results["n_max"],
                results["budget"],
            )
            .expect("write");
            for run in results["runs"].as_array().expect("runs") {
                let family = str_of(&run["family"]);
                let family_text = if family.is_empty() {
                    String::new()
                } else {
                    format!(" {family}")
                };
                let k_text = match &run["k"] {
                    Value::Null => String::new(),
                    value => format!(" k={value}"),
                };
                writeln!(
                    out,
                    "{}{} n={}{}: {} checks, {}",
                    str_of(&run["suite"]),
                    family_text,
                    run["n"],
                    k_text,
                    run["checks_run"],
                    if run["pass"] == Value::Bool(true) {
                        "pass"
                    } else {
                        "FAIL"
                    },
                )
                .expect("write");
                for failure in run["failures"].as_array().expect("failures") {
                    writeln!(
                        out,
                        "  {}: expected {}, got {}",
                        str_of(&failure["input"]),
                        str_of(&failure["expected"]),
                        str_of(&failure["actual"]),
                    )
                    .expect("write");
                }
            }
            writeln!(
                out,
                "result: {} ({} checks)",
                if results["pass"] == Value::Bool(true) {
                    "pass"
                } else {
                    "FAIL"
                },
                results["total_checks"],
            )
            .expect("write");
        }
        "asymptotics" => {
            let empty = Vec::new();
            let points: Vec<&Value> = match results.get("points") {
                Some(list) => list.as_array().unwrap_or(&empty).iter().collect(),
                None => vec![results],
            };
            for point in points {
                let family = str_of(&point["family"]);
                writeln!(
                    out,
                    "asymptotics for family {family} (n={}, k={})",
                    point["n"], point["k"],
                )
                .expect("write");
                writeln!(
                    out,
                    "  sum of inverse class sizes: {}",
                    human_quantity(&point["sum_inverse_class_sizes"]),
                )
                .expect("write");
                writeln!(out, "  f (norm^2 / n!): {}", human_quantity(&point["f"])).expect("write");
                writeln!(
                    out,
                    "  norm squared: {}",
                    human_quantity(&point["norm_squared"])
                )
                .expect("write");
                writeln!(
                    out,
                    "  cosine squared vs regular: {}",
                    human_quantity(&point["cosine_squared"]),
                )
                .expect("write");
                writeln!(
                    out,
                    "  sandwich bounds: {}",
                    ok_or_failed(&point["sandwich_ok"])
                )
                .expect("write");
                if let Some(rows) = point.get("per_lambda") {
                    writeln!(out, "  per-partition ratios:").expect("write");
                    for row in rows.as_array().expect("per_lambda") {
                        writeln!(
                            out,
                            "    lambda {}: ratio {}, balance {}",
                            str_of(&row["lambda"]),
                            human_quantity(&row["ratio"]),
                            human_quantity(&row["balance"]),
                        )
                        .expect("write");
                    }
                }
            }
        }
        other => panic!("no text rendering for command '{other}'"),
    }
    out
}
