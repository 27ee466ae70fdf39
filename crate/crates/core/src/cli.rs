//! Command-line front end. Every subcommand is a library function returning
//! its output, so tests can drive the CLI without spawning a process.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{binomial, enumerate_compositions, enumerate_signatures, multinomial};
use crate::complexes::build_inverted_koszul;
use crate::error::{Error, Result};
use crate::export::write_complex;
use crate::multilinear::t_dim;
use crate::scalar::FieldSpec;
use crate::verify::{
    bar_comparison, equivariance_check, euler_identity, ext_dims, hilbert_identity,
    koszul_exactness, spectral_pages, square_zero, sym_dim, verify_exactness, Verdict,
};
use crate::with_field;

pub const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "invkoszul", version, about = "Exact construction and verification of the inverted Koszul complex")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print dim T_t^p for each p with its composition breakdown.
    Dims(Common),
    /// Run checks and emit a JSON report.
    Verify(VerifyArgs),
    /// Write matrices, basis listings and a manifest under OUT/t<t>/.
    Export(ExportArgs),
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Dimension of V.
    #[arg(long)]
    pub n: usize,
    /// Degree, either a single value or an inclusive range `a..b`.
    #[arg(long, value_parser = parse_t_range)]
    pub t: TRange,
    /// Refuse to run when Σ_t Σ_p dim T_t^p exceeds this.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u128,
}

#[derive(Debug, Args, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// q, f2, f3, f5 or f7.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    pub field: FieldSpec,
    /// Comma-separated subset of: square-zero, exactness, euler, hilbert,
    /// equivariance, spectral, bar, ext, koszul.
    #[arg(long, value_delimiter = ',', default_value = "square-zero,exactness,euler")]
    pub checks: Vec<Check>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random trials for equivariance, and Laplace samples for bar.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    /// Also write the report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct ExportArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value = "q", value_parser = parse_field)]
    pub field: FieldSpec,
    #[arg(long)]
    pub out: PathBuf,
}

/// Inclusive range of degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TRange {
    pub start: usize,
    pub end: usize,
}

impl TRange {
    pub fn values(&self) -> Vec<usize> {
        (self.start..=self.end).collect()
    }
}

pub fn parse_t_range(s: &str) -> std::result::Result<TRange, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("bad degree `{x}`: {e}"));
    let (start, end) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if start == 0 {
        return Err("t must be at least 1".into());
    }
    if end < start {
        return Err(format!("empty range {s}"));
    }
    Ok(TRange { start, end })
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    FieldSpec::parse(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    SquareZero,
    Exactness,
    Euler,
    Hilbert,
    Equivariance,
    Spectral,
    Bar,
    Ext,
    Koszul,
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::SquareZero => "square-zero",
            Check::Exactness => "exactness",
            Check::Euler => "euler",
            Check::Hilbert => "hilbert",
            Check::Equivariance => "equivariance",
            Check::Spectral => "spectral",
            Check::Bar => "bar",
            Check::Ext => "ext",
            Check::Koszul => "koszul",
        }
    }
}

fn validate(common: &Common) -> Result<()> {
    if common.n == 0 || common.n > 64 {
        return Err(Error::OutOfRange {
            what: "n",
            value: common.n as i64,
            range: "1..=64".into(),
        });
    }
    if common.t.start == 0 {
        return Err(Error::Usage("t must be at least 1".into()));
    }
    let total: u128 = common
        .t
        .values()
        .iter()
        .flat_map(|&t| (1..=t).map(move |p| t_dim(common.n, t, p)))
        .sum();
    if total > common.cap {
        return Err(Error::CapExceeded {
            total,
            cap: common.cap,
        });
    }
    Ok(())
}

/// Text table of `dim T_t^p`, e.g. `p = 3: dim 12 = 3 × (2·2·1)`.
pub fn cmd_dims(common: &Common) -> Result<String> {
    validate(common)?;
    let n = common.n;
    let mut out = String::new();
    for t in common.t.values() {
        writeln!(out, "n = {n}, t = {t}").unwrap();
        for p in 1..=t {
            let dim = t_dim(n, t, p);
            let comps = enumerate_compositions(t, p, n).len();
            let terms: Vec<String> = enumerate_signatures(t, p, n)
                .iter()
                .map(|sig| {
                    let factors: Vec<String> = sig
                        .counts()
                        .iter()
                        .enumerate()
                        .flat_map(|(k, &l)| std::iter::repeat_n(binomial(n, k + 1).to_string(), l))
                        .collect();
                    format!("{} × ({})", multinomial(sig), factors.join("·"))
                })
                .collect();
            if terms.is_empty() {
                writeln!(out, "  p = {p}: dim 0").unwrap();
            } else {
                writeln!(
                    out,
                    "  p = {p}: dim {dim} = {}  [{comps} composition{}]",
                    terms.join(" + "),
                    if comps == 1 { "" } else { "s" }
                )
                .unwrap();
            }
        }
        writeln!(out, "  S^{t}: dim {}", sym_dim(n, t)).unwrap();
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: Value,
    pub status: String,
    pub details: Value,
    pub elapsed_ms: u128,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == "PASS"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub n: usize,
    pub t_values: Vec<usize>,
    pub field: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub tool_version: String,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

fn verdict(r: Result<impl Verdict>) -> (bool, Value) {
    match r {
        Ok(v) => (v.passed(), v.details()),
        Err(e) => (false, json!({ "error": e.to_string() })),
    }
}

fn run_check(check: Check, n: usize, t: usize, args: &VerifyArgs) -> (bool, Value) {
    let field = args.field;
    let (seed, trials) = (args.seed, args.trials);
    let trivial = |reason: &str| (true, json!({ "trivial": reason }));
    with_field!(field, F => match check {
        Check::SquareZero => verdict(square_zero::<F>(n, t)),
        Check::Exactness => verdict(verify_exactness::<F>(n, t)),
        Check::Euler => verdict(Ok(euler_identity(n, t, None))),
        Check::Hilbert => verdict(Ok(hilbert_identity(n, t, None))),
        Check::Equivariance => verdict(equivariance_check::<F>(n, t, trials, seed)),
        Check::Spectral if t < 2 => trivial("the filtration has a single level for t = 1"),
        Check::Spectral => verdict(spectral_pages::<F>(n, t)),
        Check::Bar if t < 2 => trivial("no differential between T_1 terms"),
        Check::Bar => verdict(bar_comparison::<F>(n, t, trials, seed)),
        Check::Ext => verdict(ext_dims::<F>(n, t)),
        Check::Koszul => verdict(koszul_exactness::<F>(n, t)),
    })
}

/// Runs every requested check for every `t` in the range.
pub fn cmd_verify(args: &VerifyArgs) -> Result<Report> {
    validate(&args.common)?;
    let n = args.common.n;
    let mut checks = Vec::new();
    for t in args.common.t.values() {
        for &check in &args.checks {
            let start = Instant::now();
            let (ok, details) = run_check(check, n, t, args);
            let mut params = json!({ "n": n, "t": t, "field": args.field.token() });
            match check {
                Check::Equivariance => params["trials"] = json!(args.trials),
                Check::Bar => params["samples"] = json!(args.trials),
                Check::Hilbert => params["max_degree"] = json!(t),
                _ => {}
            }
            if matches!(check, Check::Equivariance | Check::Bar) {
                params["seed"] = json!(args.seed);
            }
            checks.push(CheckResult {
                name: check.name().to_string(),
                params,
                status: if ok { "PASS" } else { "FAIL" }.to_string(),
                details,
                elapsed_ms: start.elapsed().as_millis(),
            });
        }
    }
    let report = Report {
        n,
        t_values: args.common.t.values(),
        field: args.field.token(),
        seed: args.seed,
        checks,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    };
    if let Some(path) = &args.out {
        let text = serde_json::to_string_pretty(&report).expect("serializable");
        std::fs::write(path, text + "\n").map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(report)
}

/// Writes each complex `T_t^• → S^t` under `out/t<t>/`.
pub fn cmd_export(args: &ExportArgs) -> Result<Vec<PathBuf>> {
    validate(&args.common)?;
    let n = args.common.n;
    let mut written = Vec::new();
    for t in args.common.t.values() {
        let dir = args.out.join(format!("t{t}"));
        let files = with_field!(args.field, F => {
            let complex = build_inverted_koszul::<F>(n, t, true)?;
            write_complex(&dir, &complex)?
        });
        written.extend(files);
    }
    Ok(written)
}

/// Parses `argv`, runs the subcommand and returns `(exit code, stdout)`.
/// Exit codes: `0` success, `1` some check failed, `2` usage or
/// precondition error.
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                (0, text, String::new())
            } else {
                (2, String::new(), text)
            };
        }
    };
    let result = match &cli.command {
        Command::Dims(common) => cmd_dims(common).map(|s| (0, s)),
        Command::Verify(args) => cmd_verify(args).map(|r| {
            let code = if r.all_passed() { 0 } else { 1 };
            (code, serde_json::to_string_pretty(&r).expect("serializable") + "\n")
        }),
        Command::Export(args) => cmd_export(args).map(|paths| {
            let listing: String = paths
                .iter()
                .map(|p| format!("{}\n", p.display()))
                .collect();
            (0, listing)
        }),
    };
    match result {
        Ok((code, out)) => (code, out, String::new()),
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}
