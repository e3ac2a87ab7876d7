//! Command-line front end: compute family values, print theorem matrices,
//! run the verification suite, emit coefficient tables.
//!
//! Exit codes: 0 on success (flags count as success unless
//! `--strict-flags`), 1 on verification failure, 2 on usage errors.
//! Output is deterministic: re-running a command is bit-identical, which
//! is also why timings never go to stdout.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand};
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::exact::{Int, LaurentPoly, UniPoly};
use crate::families::{
    self, default_method, BuiltMatrix, DetVariant, FamilyId, FamilyValue, Method, TriangleId,
};
use crate::hessenberg::HessMatrix;
use crate::verify::{self, CheckId, Report, Status};

#[derive(Parser)]
#[command(
    name = "altrun",
    about = "Exact combinatorial polynomial families: compute, cross-verify, tabulate",
    disable_version_flag = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one family value by a chosen route
    Compute {
        /// Family id: A, Andre, EulerNum, R, S, T, B, F or D
        #[arg(long)]
        family: String,
        /// Index within the family
        #[arg(long)]
        n: usize,
        /// Route: recurrence, diff_recurrence, triangle, grammar,
        /// determinant[:variant], enumeration, explicit,
        /// andre_substitution or bona_from_r (default: per family)
        #[arg(long)]
        method: Option<String>,
        /// Output format: text, json or csv
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print a determinant representation and its value
    Det {
        /// Matrix variant, e.g. eulerian_thm, sr_thm_b_r, kit93
        #[arg(long)]
        variant: String,
        /// Theorem parameter (matrix order follows the theorem)
        #[arg(long)]
        n: usize,
        /// Output format: text, json or csv
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run identity checks and report pass/fail/flag per check
    Verify {
        /// Comma-separated check names, `crossmethod[:FAMILY]`, or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        /// Bound override applied to every selected check
        #[arg(long)]
        max_n: Option<usize>,
        /// Output format: text, json or csv
        #[arg(long, default_value = "text")]
        format: String,
        /// Treat flagged checks as failures
        #[arg(long)]
        strict_flags: bool,
    },
    /// Emit a coefficient table (triangles for R and T)
    Table {
        /// Family id (univariate families only)
        #[arg(long)]
        family: String,
        /// Largest row index
        #[arg(long)]
        rows: usize,
        /// Output format: text, json or csv
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_format(s: &str) -> Result<Format, String> {
    match s.to_ascii_lowercase().as_str() {
        "text" => Ok(Format::Text),
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        other => Err(format!("unknown format '{other}' (expected text, json or csv)")),
    }
}

/// Entry point used by the binary and by tests; returns the process exit
/// code instead of exiting.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help as an "error" that should exit 0.
            if e.use_stderr() {
                eprint!("{e}");
                return 2;
            }
            print!("{e}");
            return 0;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Compute {
            family,
            n,
            method,
            format,
        } => {
            let format = parse_format(&format)?;
            let family = FamilyId::parse(&family).ok_or(format!("unknown family '{family}'"))?;
            let method = match method {
                Some(name) => Method::parse(&name, family)
                    .ok_or(format!("unknown method '{name}' for family {family}"))?,
                None => default_method(family, n),
            };
            let value = families::family(family, n, &method).map_err(|e| e.to_string())?;
            emit_compute(family, n, &method, &value, format);
            Ok(0)
        }
        Command::Det { variant, n, format } => {
            let format = parse_format(&format)?;
            let variant =
                DetVariant::parse(&variant).ok_or(format!("unknown variant '{variant}'"))?;
            let matrix = families::build_matrix(variant, n).map_err(|e| e.to_string())?;
            emit_det(variant, n, &matrix, format);
            Ok(0)
        }
        Command::Verify {
            suite,
            max_n,
            format,
            strict_flags,
        } => {
            let format = parse_format(&format)?;
            let mut selection = Vec::new();
            for token in suite.split(',') {
                let ids = CheckId::parse_selection(token).map_err(|e| e.to_string())?;
                for id in ids {
                    if !selection.contains(&id) {
                        selection.push(id);
                    }
                }
            }
            let mut bounds = BTreeMap::new();
            if let Some(bound) = max_n {
                for id in &selection {
                    bounds.insert(*id, bound);
                }
            }
            let report = verify::run_suite(&selection, &bounds);
            emit_report(&report, format);
            if report.has_fail() || (strict_flags && report.has_flag()) {
                Ok(1)
            } else {
                Ok(0)
            }
        }
        Command::Table {
            family,
            rows,
            format,
        } => {
            let format = parse_format(&format)?;
            let family = FamilyId::parse(&family).ok_or(format!("unknown family '{family}'"))?;
            let entries = table_entries(family, rows)?;
            emit_table(family, &entries, format);
            Ok(0)
        }
    }
}

// ---------------------------------------------------------------------------
// JSON helpers
// ---------------------------------------------------------------------------

/// Integers within exact binary64 range stay JSON numbers; anything larger
/// becomes a decimal string so float-based consumers cannot corrupt it.
fn json_int(c: &Int) -> Value {
    let safe = Int::from((1i64 << 53) - 1);
    if c.abs() <= safe {
        Value::from(c.to_i64().expect("within i64 range"))
    } else {
        Value::from(c.to_string())
    }
}

fn json_coeffs(p: &UniPoly) -> Value {
    Value::from(p.coeffs().iter().map(json_int).collect::<Vec<Value>>())
}

/// Bivariate terms as `{xexp, yexp, coeff}` objects, ordered by exponents.
fn json_terms(p: &LaurentPoly) -> Value {
    Value::from(
        sorted_terms(p)
            .into_iter()
            .map(|(xe, ye, c)| json!({ "xexp": xe, "yexp": ye, "coeff": json_int(&c) }))
            .collect::<Vec<Value>>(),
    )
}

fn sorted_terms(p: &LaurentPoly) -> Vec<(i32, i32, Int)> {
    let mut terms: Vec<(i32, i32, Int)> = p
        .terms()
        .map(|(m, c)| (m.exponent("x"), m.exponent("y"), c.clone()))
        .collect();
    terms.sort();
    terms
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

fn value_label(family: FamilyId, n: usize) -> String {
    match family {
        FamilyId::A => format!("A_{n}(x)"),
        FamilyId::Andre => format!("E_{n}(x,y)"),
        FamilyId::EulerNum => format!("E_{n}"),
        FamilyId::R => format!("R_{n}(x)"),
        FamilyId::S => format!("S_{n}(x)"),
        FamilyId::T => format!("T_{n}(x)"),
        FamilyId::B => format!("B_{n}(x)"),
        FamilyId::F => format!("F_{n}(x)"),
        FamilyId::D => format!("d_{n}"),
    }
}

fn emit_compute(family: FamilyId, n: usize, method: &Method, value: &FamilyValue, format: Format) {
    match format {
        Format::Text => println!("{} = {value}", value_label(family, n)),
        Format::Json => {
            let payload = match value {
                FamilyValue::Uni(p) => json!({
                    "family": family.name(),
                    "n": n,
                    "method": method.name(),
                    "coeffs": json_coeffs(p),
                }),
                FamilyValue::Biv(p) => json!({
                    "family": family.name(),
                    "n": n,
                    "method": method.name(),
                    "terms": json_terms(p),
                }),
            };
            println!("{payload}");
        }
        Format::Csv => match value {
            FamilyValue::Uni(p) => {
                println!("k,coeff");
                for (k, c) in p.coeffs().iter().enumerate() {
                    println!("{k},{c}");
                }
            }
            FamilyValue::Biv(p) => {
                println!("xexp,yexp,coeff");
                for (xe, ye, c) in sorted_terms(p) {
                    println!("{xe},{ye},{c}");
                }
            }
        },
    }
}

// ---------------------------------------------------------------------------
// det
// ---------------------------------------------------------------------------

fn matrix_strings<T>(m: &HessMatrix<T>) -> Vec<Vec<String>>
where
    T: crate::hessenberg::RingElem + std::fmt::Display,
{
    m.rows()
        .iter()
        .map(|row| row.iter().map(|e| e.to_string()).collect())
        .collect()
}

fn emit_det(variant: DetVariant, n: usize, matrix: &BuiltMatrix, format: Format) {
    let (rows, det_text, det_json, det_key) = match matrix {
        BuiltMatrix::Uni(m) => {
            let det = m.det_recursive();
            (
                matrix_strings(m),
                det.to_string(),
                json_coeffs(&det),
                "det_coeffs",
            )
        }
        BuiltMatrix::Biv(m) => {
            let det = m.det_recursive();
            (
                matrix_strings(m),
                det.to_string(),
                json_terms(&det),
                "det_terms",
            )
        }
    };
    match format {
        Format::Text => {
            println!("{} at n = {n} (order {})", variant.name(), matrix.order());
            let widths: Vec<usize> = (0..matrix.order())
                .map(|j| rows.iter().map(|r| r[j].len()).max().unwrap_or(0))
                .collect();
            for row in &rows {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect();
                println!("[ {} ]", cells.join(" | "));
            }
            println!("det = {det_text}");
        }
        Format::Json => {
            let payload = json!({
                "variant": variant.name(),
                "n": n,
                "order": matrix.order(),
                "entries": rows,
                det_key: det_json,
            });
            println!("{payload}");
        }
        Format::Csv => {
            println!("row,col,value");
            for (i, row) in rows.iter().enumerate() {
                for (j, cell) in row.iter().enumerate() {
                    println!("{i},{j},{}", csv_escape(cell));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn emit_report(report: &Report, format: Format) {
    match format {
        Format::Text => {
            for c in &report.checks {
                let status = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Flag => "FLAG",
                };
                let mut line = format!("{status}  {:24} cases {}..={}", c.id.name(), c.lo, c.hi);
                if let Some(note) = &c.note {
                    line.push_str(&format!("  [{note}]"));
                }
                println!("{line}");
                if let Some(ce) = &c.counterexample {
                    println!("      first counterexample at n = {}", ce.n);
                    println!("      lhs: {}", ce.lhs);
                    println!("      rhs: {}", ce.rhs);
                }
            }
            let (pass, fail, flag) = report.counts();
            println!("{pass} passed, {fail} failed, {flag} flagged");
        }
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id.name(),
                        "statement": c.id.statement(),
                        "lo": c.lo,
                        "hi": c.hi,
                        "status": c.status.to_string(),
                        "counterexample": c.counterexample.as_ref().map(|ce| {
                            json!({ "n": ce.n, "lhs": ce.lhs, "rhs": ce.rhs })
                        }),
                        "note": c.note,
                    })
                })
                .collect();
            let (pass, fail, flag) = report.counts();
            let payload = json!({
                "checks": checks,
                "summary": { "pass": pass, "fail": fail, "flag": flag },
            });
            println!("{payload}");
        }
        Format::Csv => {
            println!("check,status,lo,hi,detail");
            for c in &report.checks {
                let detail = c
                    .counterexample
                    .as_ref()
                    .map(|ce| format!("n={}: {} != {}", ce.n, ce.lhs, ce.rhs))
                    .or_else(|| c.note.clone())
                    .unwrap_or_default();
                println!(
                    "{},{},{},{},{}",
                    c.id.name(),
                    c.status,
                    c.lo,
                    c.hi,
                    csv_escape(&detail)
                );
            }
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn table_entries(family: FamilyId, rows: usize) -> Result<Vec<(usize, usize, Int)>, String> {
    let mut out = Vec::new();
    match family {
        FamilyId::R | FamilyId::T => {
            let id = if family == FamilyId::R {
                TriangleId::R
            } else {
                TriangleId::T
            };
            for (i, row) in families::triangle_rows(id, rows).iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    out.push((i + 1, k, v.clone()));
                }
            }
        }
        FamilyId::Andre => {
            return Err("table covers univariate families; use compute --family Andre".to_owned())
        }
        _ => {
            for n in 0..=rows {
                let method = default_method(family, n);
                match families::family_uni(family, n, &method) {
                    Ok(p) => {
                        if p.is_zero() {
                            out.push((n, 0, Int::zero()));
                        }
                        for (k, c) in p.coeffs().iter().enumerate() {
                            out.push((n, k, c.clone()));
                        }
                    }
                    // Rows below the family's first defined index are skipped.
                    Err(families::FamilyError::UnsupportedOrder { .. }) => continue,
                    Err(e) => return Err(e.to_string()),
                }
            }
        }
    }
    Ok(out)
}

fn emit_table(family: FamilyId, entries: &[(usize, usize, Int)], format: Format) {
    match format {
        Format::Text => {
            println!("family {family}: one line per n, coefficients by ascending k");
            let mut current = usize::MAX;
            let mut line = String::new();
            for (n, _, v) in entries {
                if *n != current {
                    if !line.is_empty() {
                        println!("{line}");
                    }
                    current = *n;
                    line = format!("n={n}:");
                }
                line.push_str(&format!(" {v}"));
            }
            if !line.is_empty() {
                println!("{line}");
            }
        }
        Format::Json => {
            let rows: Vec<Value> = entries
                .iter()
                .map(|(n, k, v)| json!({ "n": n, "k": k, "value": json_int(v) }))
                .collect();
            println!("{}", json!({ "family": family.name(), "entries": rows }));
        }
        Format::Csv => {
            println!("n,k,value");
            for (n, k, v) in entries {
                println!("{n},{k},{v}");
            }
        }
    }
}
