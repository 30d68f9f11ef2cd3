//! Command-line front end. The binary only forwards `argv` to [`run`].
//!
//! Exit statuses: 0 on success, 1 on a failed verification or internal error,
//! 2 on malformed arguments.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::classify::classify;
use crate::error::Error;
use crate::extremal::{
    max_order_closed, max_order_search, min_genus_closed, min_genus_search, MaxOrderVariant, MinGenusVariant,
};
use crate::oracle::{self, DEFAULT_BOUND};
use crate::report::{EnumerationRow, ExtremalComparison, Format, OutputRecord, Payload};
use crate::signature::{Family, QuotientType, ALL_FAMILIES, CLI_IDS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bordered-actions", version, about = "Cyclic actions on bordered surfaces")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the actions with a given quotient orbifold and order.
    Classify(ClassifyArgs),
    /// Enumerate orbits of smooth maps by brute force.
    Orbits(QuotientArgs),
    /// List every action of order N on a surface of algebraic genus at most min(N, max-genus).
    Enumerate(EnumerateArgs),
    /// Minimum algebraic genus for a given order.
    MinGenus(MinGenusArgs),
    /// Maximum order for a given algebraic genus.
    MaxOrder(MaxOrderArgs),
    /// Compare the brute-force orbit counts with the closed forms.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    /// One of d6, ann2, mb2, d12, d14, mb1, d21, ann1, d3-22m, d3-23m, d2c-2m, d2c-3m.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(CLI_IDS))]
    pub quotient: String,
    #[arg(long = "N", short = 'N')]
    pub order: u64,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub quotient: QuotientArgs,
    /// Keep only surfaces with this many boundary components.
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long, conflicts_with = "non_orientable")]
    pub orientable: bool,
    #[arg(long)]
    pub non_orientable: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long = "N", short = 'N')]
    pub order: u64,
    #[arg(long)]
    pub max_genus: Option<u64>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct Method {
    #[arg(long)]
    pub closed: bool,
    #[arg(long)]
    pub search: bool,
    #[arg(long)]
    pub both: bool,
}

impl Method {
    fn wants(&self) -> (bool, bool) {
        if self.both {
            (true, true)
        } else if self.search {
            (false, true)
        } else {
            (true, false)
        }
    }
}

#[derive(Debug, Args)]
pub struct MinGenusArgs {
    #[arg(long = "N", short = 'N')]
    pub order: u64,
    /// p, p+, p-, p++ or p+-.
    #[arg(long, default_value = "p", value_parser = |s: &str| s.parse::<MinGenusVariant>().map_err(|e| e.to_string()))]
    pub variant: MinGenusVariant,
    #[command(flatten)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct MaxOrderArgs {
    #[arg(long)]
    pub p: u64,
    /// N, N+, N-, N++ or N+-.
    #[arg(long, default_value = "N", value_parser = |s: &str| s.parse::<MaxOrderVariant>().map_err(|e| e.to_string()))]
    pub variant: MaxOrderVariant,
    #[command(flatten)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 24)]
    pub n_max: u64,
    /// Comma-separated family ids; defaults to all ten.
    #[arg(long, value_delimiter = ',', value_parser = parse_family)]
    pub types: Vec<Family>,
    /// Worker threads for the sweep; 0 picks the number of cores.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

fn parse_family(s: &str) -> Result<Family, String> {
    ALL_FAMILIES
        .into_iter()
        .find(|f| f.id() == s)
        .ok_or_else(|| format!("unknown family {s:?}"))
}

/// Errors caused by the request rather than by the program.
fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidQuotient(_)
            | Error::InvalidArgument(_)
            | Error::InvalidSignature(_)
            | Error::SignatureSyntax { .. }
            | Error::UndefinedVariant { .. }
            | Error::BoundExceeded { .. }
            | Error::Unknown { .. }
    )
}

/// Output of one invocation: what to print and the exit status.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

fn quotient_of(a: &QuotientArgs) -> crate::Result<QuotientType> {
    QuotientType::from_id(&a.quotient, a.m, a.n)
}

fn quotient_params(a: &QuotientArgs) -> BTreeMap<String, serde_json::Value> {
    let mut p = BTreeMap::new();
    p.insert("quotient".into(), json!(a.quotient));
    p.insert("N".into(), json!(a.order));
    if let Some(m) = a.m {
        p.insert("m".into(), json!(m));
    }
    if let Some(n) = a.n {
        p.insert("n".into(), json!(n));
    }
    p
}

fn execute(cli: &Cli) -> crate::Result<(OutputRecord, bool)> {
    Ok(match &cli.command {
        Command::Classify(a) => {
            let q = quotient_of(&a.quotient)?;
            let orientable = match (a.orientable, a.non_orientable) {
                (true, _) => Some(true),
                (_, true) => Some(false),
                _ => None,
            };
            let r = classify(q, a.quotient.order)?.filtered(a.k, orientable);
            let mut p = quotient_params(&a.quotient);
            p.insert("k".into(), json!(a.k));
            p.insert("orientable".into(), json!(orientable));
            (OutputRecord::new("classify", p, Payload::Classification(r)), true)
        }
        Command::Orbits(a) => {
            let q = quotient_of(a)?;
            let r = oracle::orbits(q, a.order)?;
            (OutputRecord::new("orbits", quotient_params(a), Payload::Orbits(r)), true)
        }
        Command::Enumerate(a) => {
            if a.order < 2 {
                return Err(Error::InvalidArgument("N must be at least 2".into()));
            }
            let cap = a.max_genus.map_or(a.order, |g| g.min(a.order));
            let mut rows = Vec::new();
            for f in ALL_FAMILIES {
                for q in f.instances_dividing(a.order) {
                    let r = classify(q, a.order)?;
                    for ((surface, action), classes) in r.by_surface() {
                        if surface.algebraic_genus <= cap {
                            rows.push(EnumerationRow { quotient: q, surface, action, classes });
                        }
                    }
                }
            }
            rows.sort();
            let mut p = BTreeMap::new();
            p.insert("N".into(), json!(a.order));
            p.insert("max_genus".into(), json!(a.max_genus));
            (OutputRecord::new("enumerate", p, Payload::Enumeration(rows)), true)
        }
        Command::MinGenus(a) => {
            let (c, s) = a.method.wants();
            let closed = c.then(|| min_genus_closed(a.order, a.variant)).transpose()?;
            let search = s.then(|| min_genus_search(a.order, a.variant)).transpose()?;
            let mut p = BTreeMap::new();
            p.insert("N".into(), json!(a.order));
            p.insert("variant".into(), json!(a.variant));
            extremal_record("min-genus", p, closed, search)
        }
        Command::MaxOrder(a) => {
            let (c, s) = a.method.wants();
            let closed = c.then(|| max_order_closed(a.p, a.variant)).transpose()?;
            let search = s.then(|| max_order_search(a.p, a.variant)).transpose()?;
            let mut p = BTreeMap::new();
            p.insert("p".into(), json!(a.p));
            p.insert("variant".into(), json!(a.variant));
            extremal_record("max-order", p, closed, search)
        }
        Command::Verify(a) => {
            if a.n_max > DEFAULT_BOUND {
                return Err(Error::BoundExceeded { order: a.n_max, bound: DEFAULT_BOUND });
            }
            let families = if a.types.is_empty() { ALL_FAMILIES.to_vec() } else { a.types.clone() };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(a.jobs)
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            let report = pool.install(|| oracle::cross_check(&families, a.n_max))?;
            let passed = report.passed();
            let mut p = BTreeMap::new();
            p.insert("n_max".into(), json!(a.n_max));
            p.insert("types".into(), json!(families));
            p.insert("jobs".into(), json!(a.jobs));
            (OutputRecord::new("verify", p, Payload::Verification(report)), passed)
        }
    })
}

fn extremal_record(
    command: &str,
    params: BTreeMap<String, serde_json::Value>,
    closed: Option<crate::extremal::ExtremalAnswer>,
    search: Option<crate::extremal::ExtremalAnswer>,
) -> (OutputRecord, bool) {
    let agree = match (&closed, &search) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let ok = agree.unwrap_or(true);
    let payload = Payload::Extremal(ExtremalComparison { closed, search, agree });
    (OutputRecord::new(command, params, payload), ok)
}

/// Parses `args` (including the program name) and runs the command without touching
/// the process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, status }
            } else {
                Outcome { stdout: text, stderr: String::new(), status }
            };
        }
    };
    let result = panic::catch_unwind(AssertUnwindSafe(|| execute(&cli)));
    match result {
        Ok(Ok((record, ok))) => {
            let mut stderr = String::new();
            if !ok {
                if let Payload::Verification(r) = &record.result {
                    if let Some(p) = r.mismatches().next() {
                        stderr = format!(
                            "first counterexample: {} at N = {}: {}\n",
                            p.quotient,
                            p.order,
                            p.counterexample.clone().unwrap_or_default()
                        );
                    }
                }
            }
            Outcome {
                stdout: record.render(cli.format),
                stderr,
                status: if ok { EXIT_OK } else { EXIT_FAILURE },
            }
        }
        Ok(Err(e)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            status: if is_usage_error(&e) { EXIT_USAGE } else { EXIT_FAILURE },
        },
        Err(_) => Outcome {
            stdout: String::new(),
            stderr: "error: internal assertion failed\n".into(),
            status: EXIT_FAILURE,
        },
    }
}

/// Runs with the process arguments, prints, and returns the exit status.
pub fn main_with_args() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", out.stderr);
    out.status
}
