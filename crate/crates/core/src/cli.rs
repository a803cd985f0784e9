//! Command-line front end. [`run`] takes the argument list and two writers
//! and returns the process exit code.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde::Serialize;

use crate::count::{count_decomposables, is_composite};
use crate::ffpoly::{tame_decompose, FqPoly, PrimeField};
use crate::oracle::{exhaustive_decomposables, oracle_count_union, DEFAULT_BUDGET};
use crate::refine::{normalize, refine_pair};
use crate::relgraph::{build_graph, scc_chain, to_dot};
use crate::{Error, OrderedFactorization, QPolynomial};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

const TAME_MESSAGE: &str = "tame case requires characteristic coprime to n";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleChoice {
    Exhaustive,
    Compositions,
    Both,
}

#[derive(Debug, Parser)]
#[command(
    name = "tamecount",
    version,
    about = "Count decomposable polynomials over finite fields"
)]
struct Args {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Oracle enumeration budget.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u128,
    /// Prime field for the polynomial demos.
    #[arg(long, default_value_t = 5, global = true)]
    prime: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// #D_n(F_q) as a polynomial in q.
    Count {
        n: u64,
        /// Also evaluate at this q (repeatable).
        #[arg(long)]
        eval: Vec<u64>,
    },
    /// One row per composite n in [min, max].
    Table {
        #[arg(long, default_value_t = 1)]
        min: u64,
        #[arg(long, default_value_t = 50)]
        max: u64,
    },
    /// Compare the symbolic count with brute force over F_q.
    Verify {
        n: u64,
        q: u64,
        #[arg(long, value_enum, default_value = "compositions")]
        oracle: OracleChoice,
    },
    /// Relation graph of a normalized factorization set.
    Graph {
        n: u64,
        /// Semicolon-separated sequences, e.g. "12,420;14,360".
        #[arg(short = 'D', long = "sequences")]
        sequences: String,
        #[arg(long)]
        dot: bool,
    },
    /// Refine two ordered factorizations against each other.
    Refine { d: String, e: String },
    /// Tame decomposition of a polynomial over F_prime.
    Decompose {
        poly: String,
        /// Degree of the left factor.
        #[arg(short = 'd')]
        d: usize,
    },
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub n: u64,
    pub polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluations: Option<BTreeMap<String, String>>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match e {
            Error::WildCharacteristic { .. } => TAME_MESSAGE.to_string(),
            other => other.to_string(),
        };
        Failure {
            code: EXIT_USAGE,
            message,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    let s = serde_json::to_string(value).expect("records serialize");
    writeln!(out, "{s}")
}

fn record(n: u64, poly: &QPolynomial, evals: &[u64]) -> OutputRecord {
    OutputRecord {
        n,
        polynomial: poly.to_string(),
        evaluations: (!evals.is_empty()).then(|| {
            evals
                .iter()
                .map(|&q| (q.to_string(), poly.eval_u64(q).to_string()))
                .collect()
        }),
    }
}

fn cmd_count(args: &Args, out: &mut dyn Write, n: u64, evals: &[u64]) -> Outcome {
    if n < 1 {
        return Err(usage("n must be at least 1"));
    }
    if let Some(&q) = evals.iter().find(|&&q| q < 2 || q.gcd(&n) != 1) {
        return Err(usage(if q < 2 {
            format!("q = {q} must be at least 2")
        } else {
            format!("{TAME_MESSAGE} (q = {q}, n = {n})")
        }));
    }
    let poly = count_decomposables(n);
    match args.format {
        Format::Json => json_line(out, &record(n, &poly, evals))?,
        Format::Csv => {
            writeln!(out, "n,q,value")?;
            if evals.is_empty() {
                writeln!(out, "{n},,\"{poly}\"")?;
            }
            for &q in evals {
                writeln!(out, "{n},{q},{}", poly.eval_u64(q))?;
            }
        }
        Format::Text => {
            if evals.is_empty() {
                writeln!(out, "{poly}")?;
            }
            for &q in evals {
                writeln!(out, "{}", poly.eval_u64(q))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_table(args: &Args, out: &mut dyn Write, min: u64, max: u64) -> Outcome {
    if min < 1 || min > max {
        return Err(usage(format!("need 1 <= min <= max, got {min} and {max}")));
    }
    let rows: Vec<OutputRecord> = (min..=max)
        .filter(|&n| is_composite(n))
        .map(|n| record(n, &count_decomposables(n), &[]))
        .collect();
    match args.format {
        Format::Json => json_line(out, &rows)?,
        Format::Csv => {
            writeln!(out, "n,count")?;
            for r in &rows {
                writeln!(out, "{},\"{}\"", r.n, r.polynomial)?;
            }
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.n.to_string().len()).max().unwrap_or(1);
            for r in &rows {
                writeln!(out, "{:>width$}  {}", r.n, r.polynomial)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyReport {
    n: u64,
    q: u64,
    symbolic: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    exhaustive: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    compositions: Option<String>,
    pass: bool,
}

fn cmd_verify(args: &Args, out: &mut dyn Write, n: u64, q: u64, oracle: OracleChoice) -> Outcome {
    let field = PrimeField::new(q)?;
    if n < 2 {
        return Err(usage("n must be at least 2"));
    }
    if n % q == 0 {
        return Err(usage(format!("{TAME_MESSAGE} (q = {q}, n = {n})")));
    }
    let symbolic = count_decomposables(n).eval_u64(q).to_string();
    let mut report = VerifyReport {
        n,
        q,
        symbolic: symbolic.clone(),
        exhaustive: None,
        compositions: None,
        pass: true,
    };
    if matches!(oracle, OracleChoice::Exhaustive | OracleChoice::Both) {
        report.exhaustive = Some(exhaustive_decomposables(n as usize, field, args.budget)?.to_string());
    }
    if matches!(oracle, OracleChoice::Compositions | OracleChoice::Both) {
        report.compositions = Some(oracle_count_union(n as usize, field, args.budget)?.to_string());
    }
    report.pass = [&report.exhaustive, &report.compositions]
        .iter()
        .all(|v| v.as_ref().is_none_or(|v| *v == symbolic));
    match args.format {
        Format::Json => json_line(out, &report)?,
        Format::Csv => {
            writeln!(out, "n,q,symbolic,exhaustive,compositions,pass")?;
            writeln!(
                out,
                "{n},{q},{symbolic},{},{},{}",
                report.exhaustive.as_deref().unwrap_or(""),
                report.compositions.as_deref().unwrap_or(""),
                report.pass
            )?;
        }
        Format::Text => {
            writeln!(out, "n = {n}, q = {q}")?;
            writeln!(out, "symbolic     {symbolic}")?;
            if let Some(v) = &report.exhaustive {
                writeln!(out, "exhaustive   {v}")?;
            }
            if let Some(v) = &report.compositions {
                writeln!(out, "compositions {v}")?;
            }
            writeln!(out, "{}", if report.pass { "PASS" } else { "FAIL" })?;
        }
    }
    Ok(if report.pass { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Serialize)]
struct GraphReport {
    members: Vec<String>,
    vertices: Vec<(usize, u64)>,
    edges: Vec<(usize, usize)>,
    components: Vec<Vec<usize>>,
}

fn cmd_graph(args: &Args, out: &mut dyn Write, n: u64, sequences: &str, dot: bool) -> Outcome {
    let mut set = Vec::new();
    let mut offset = 0;
    for chunk in sequences.split(';') {
        let f = OrderedFactorization::parse_for(n, chunk.trim()).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse {
                pos: pos + offset + (chunk.len() - chunk.trim_start().len()),
                msg,
            },
            other => other,
        })?;
        set.push(f);
        offset += chunk.len() + 1;
    }
    let normalized = normalize(&set)?;
    let g = build_graph(&normalized);
    if dot {
        write!(out, "{}", to_dot(&g))?;
        return Ok(EXIT_OK);
    }
    let chain = scc_chain(&g);
    let report = GraphReport {
        members: normalized.members.iter().map(|m| m.to_string()).collect(),
        vertices: g.vertices.iter().map(|v| (v.id, v.value)).collect(),
        edges: g.edges.iter().copied().collect(),
        components: chain.components.iter().map(|c| c.ids()).collect(),
    };
    match args.format {
        Format::Json => json_line(out, &report)?,
        _ => {
            writeln!(out, "members: {}", report.members.join("; "))?;
            let comps: Vec<String> = chain
                .components
                .iter()
                .map(|c| {
                    let vals: Vec<String> = c.vertices.iter().map(|v| format!("{}#{}", v.value, v.id)).collect();
                    format!("{{{}}}", vals.join(", "))
                })
                .collect();
            writeln!(out, "chain: {}", comps.join(" <- "))?;
            for &(u, v) in &g.edges {
                if g.precedes(v, u) {
                    if u < v {
                        writeln!(out, "{}#{u} <-> {}#{v}", g.value(u), g.value(v))?;
                    }
                } else {
                    writeln!(out, "{}#{u} <- {}#{v}", g.value(u), g.value(v))?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_refine(args: &Args, out: &mut dyn Write, d: &str, e: &str) -> Outcome {
    let d: OrderedFactorization = d.parse()?;
    let e: OrderedFactorization = e.parse().map_err(|err| match err {
        Error::Parse { pos, msg } => Error::Parse {
            pos,
            msg: format!("second sequence: {msg}"),
        },
        other => other,
    })?;
    let (a, b) = refine_pair(&d, &e)?;
    match args.format {
        Format::Json => json_line(out, &[a.parts(), b.parts()])?,
        _ => {
            writeln!(out, "{a}")?;
            writeln!(out, "{b}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_decompose(args: &Args, out: &mut dyn Write, poly: &str, d: usize) -> Outcome {
    let field = PrimeField::new(args.prime)?;
    let f = FqPoly::parse(field, poly)?;
    match tame_decompose(&f, d)? {
        Some((g, h)) => {
            if args.format == Format::Json {
                json_line(out, &BTreeMap::from([("g", g.to_string()), ("h", h.to_string())]))?;
            } else {
                writeln!(out, "g = {g}")?;
                writeln!(out, "h = {h}")?;
            }
        }
        None => {
            if args.format == Format::Json {
                writeln!(out, "null")?;
            } else {
                writeln!(out, "no decomposition with deg g = {d}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let outcome = match &args.command {
        Command::Count { n, eval } => cmd_count(&args, out, *n, eval),
        Command::Table { min, max } => cmd_table(&args, out, *min, *max),
        Command::Verify { n, q, oracle } => cmd_verify(&args, out, *n, *q, *oracle),
        Command::Graph { n, sequences, dot } => cmd_graph(&args, out, *n, sequences, *dot),
        Command::Refine { d, e } => cmd_refine(&args, out, d, e),
        Command::Decompose { poly, d } => cmd_decompose(&args, out, poly, *d),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
