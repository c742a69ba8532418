//! Command-line front end: sequence emission, eta-quotient expansion and
//! batch verification.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error (bad arguments,
//! unknown check id).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::bfile::write_bfile;
use crate::qproducts::{eta_expand_mod, EtaQuotientSpec};
use crate::report::{Orders, ReportDocument, RunError};
use crate::verifier::sequences::SequenceName;
use crate::verifier::{self, registry, Status, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qcrank", version, about = "Exact q-series, crank-parity sequences and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Bfile,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print terms 0..=limit of a, C, ce, co or p.
    Seq {
        name: SequenceName,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        limit: i64,
        /// Reduce modulo this number (at least 2).
        #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(2..))]
        modulus: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Bfile)]
        format: Format,
    },
    /// Expand an eta quotient such as `1:-3,2:2` or `1:20,2:-8;qshift=-8`.
    Eta {
        spec: String,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        order: i64,
        #[arg(long = "mod", value_parser = clap::value_parser!(u64).range(2..))]
        modulus: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Bfile)]
        format: Format,
    },
    /// Run catalogue checks.
    Verify {
        /// Check id; repeatable.
        #[arg(long = "check", value_name = "ID")]
        checks: Vec<String>,
        /// Run every registered check.
        #[arg(long, conflicts_with = "checks")]
        all: bool,
        /// Run every selected check at this order instead of its default.
        #[arg(long)]
        order: Option<i64>,
        /// Write a JSON report here (also on failure or unknown ids).
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        /// List registered checks and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Serialize)]
struct Term {
    n: i64,
    value: String,
}

#[derive(Serialize)]
struct SequenceJson<'a> {
    sequence: &'a str,
    modulus: Option<u64>,
    terms: Vec<Term>,
}

#[derive(Serialize)]
struct EtaJson<'a> {
    spec: &'a str,
    order: i64,
    modulus: Option<u64>,
    terms: Vec<Term>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Seq { name, limit, modulus, format } => cmd_seq(name, limit, modulus, format, out, err),
        Command::Eta { spec, order, modulus, format } => cmd_eta(&spec, order, modulus, format, out, err),
        Command::Verify { checks, all, order, report, jobs, list } => {
            if list {
                cmd_list(out)
            } else {
                let ids: Vec<String> = if all { registry().iter().map(|c| c.id.to_string()).collect() } else { checks };
                if ids.is_empty() {
                    let _ = writeln!(err, "error: give --check ID (repeatable), --all or --list");
                    return EXIT_USAGE;
                }
                let jobs = jobs.map_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()), |j| j as usize);
                cmd_verify(&ids, order, report, jobs, out, err)
            }
        }
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_FAIL
    })
}

type CmdResult = std::io::Result<i32>;

fn emit(terms: Vec<(i64, BigInt)>, format: Format, json: impl FnOnce(Vec<Term>) -> String, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Bfile => out.write_all(write_bfile(terms.iter().map(|(n, v)| (*n, v))).as_bytes()),
        Format::Csv => {
            writeln!(out, "n,value")?;
            terms.iter().try_for_each(|(n, v)| writeln!(out, "{n},{v}"))
        }
        Format::Json => {
            let terms = terms.into_iter().map(|(n, v)| Term { n, value: v.to_string() }).collect();
            writeln!(out, "{}", json(terms))
        }
    }
}

fn cmd_seq(name: SequenceName, limit: i64, modulus: Option<u64>, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let values = match name.terms(limit, modulus) {
        Ok(v) => v,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let terms = (0..).zip(values).collect();
    emit(terms, format, |terms| to_json(&SequenceJson { sequence: name.name(), modulus, terms }), out)?;
    Ok(EXIT_OK)
}

fn cmd_eta(text: &str, order: i64, modulus: Option<u64>, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let spec: EtaQuotientSpec = match text.parse() {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: invalid eta quotient `{text}`: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let series = match eta_expand_mod(&spec, order, modulus.map(BigInt::from).as_ref()) {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    // start at q^0, or earlier when the quotient has a pole
    let start = series.valuation().min(0);
    let terms = (start..).zip(series.coefficients_from(start)).collect();
    emit(terms, format, |terms| to_json(&EtaJson { spec: text, order, modulus, terms }), out)?;
    Ok(EXIT_OK)
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn cmd_list(out: &mut dyn Write) -> CmdResult {
    for c in registry() {
        let modulus = c.modulus.map_or_else(|| "exact".to_string(), |m| format!("mod {m}"));
        writeln!(out, "{:<22} N={:<6} {:<7} {}", c.id, c.default_order, modulus, c.description)?;
    }
    Ok(EXIT_OK)
}

fn is_usage_error(e: &VerifyError) -> bool {
    matches!(e, VerifyError::UnknownCheck(_) | VerifyError::OrderTooSmall { .. } | VerifyError::InvalidJobs(_))
}

fn cmd_verify(
    ids: &[String],
    order: Option<i64>,
    report: Option<PathBuf>,
    jobs: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let start = Instant::now();
    let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
    let outcomes = match verifier::run_checks(&refs, order, jobs) {
        Ok(o) => o,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };

    let mut results = Vec::new();
    let mut errors = Vec::new();
    let mut code = EXIT_OK;
    for (id, outcome) in ids.iter().zip(outcomes) {
        match outcome {
            Ok(r) => {
                match (&r.status, &r.first_failure) {
                    (Status::Fail, Some(f)) => {
                        let clause = f.clause.as_deref().map(|c| format!(" [{c}]")).unwrap_or_default();
                        writeln!(out, "FAIL {} N={}{clause}: at {} expected {}, got {}", r.id, r.order_used, f.index, f.expected, f.actual)?;
                    }
                    (status, _) => writeln!(out, "{status} {} N={} ({:.1} ms)", r.id, r.order_used, r.runtime_ms)?,
                }
                if let Some(note) = &r.note {
                    writeln!(out, "     note: {note}")?;
                }
                if r.status == Status::Fail {
                    code = code.max(EXIT_FAIL);
                }
                results.push(r);
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                code = if is_usage_error(&e) { EXIT_USAGE } else { code.max(EXIT_FAIL) };
                errors.push(RunError { id: id.clone(), message: e.to_string() });
            }
        }
    }

    let defaults: BTreeMap<String, i64> =
        ids.iter().filter_map(|id| verifier::find(id).map(|c| (id.clone(), c.default_order))).collect();
    let doc = ReportDocument::new(Orders { override_order: order, defaults }, results, errors, start.elapsed().as_secs_f64() * 1e3);
    let passed = doc.checks.iter().filter(|c| c.status == Status::Pass).count();
    writeln!(out, "{passed}/{} checks passed, overall {} ({:.0} ms)", ids.len(), doc.overall, doc.total_runtime_ms)?;
    if let Some(path) = report {
        if let Err(e) = doc.write(&path) {
            writeln!(err, "error: cannot write report {}: {e}", path.display())?;
            return Ok(code.max(EXIT_FAIL));
        }
    }
    Ok(code)
}
