//! Command-line front end: argument parsing, command dispatch, JSON-lines
//! output and the stderr summary table.
//!
//! [`run`] is the whole program minus process exit, so tests can drive it
//! in-process.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use skein_mcg::json::MatrixJson;
use skein_mcg::mcg::{
    rescaled_scalar, rescaled_scalar_check, verify_birman_in, verify_power_scalar,
};
use skein_mcg::order::{
    certify, group_closure, verify_certificate, CertificateJson, CertifyOptions, ClosureResult,
    DEFAULT_CLOSURE_CAP,
};
use skein_mcg::pipeline::{explore_m5, p5_root, reproduce};
use skein_mcg::scalar::canonical_root_for_m;
use skein_mcg::skein::catalan;
use skein_mcg::{BraidWord, Error, RingSelector, RootOfUnityChoice, SkeinModule, SkeinParams};

pub mod table;

use table::Table;

pub const EXIT_OK: i32 = 0;
/// A check ran and failed.
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_INFINITE: i32 = 10;
pub const EXIT_INCONCLUSIVE: i32 = 20;

pub const DIM_SCHEMA: &str = "skein-mcg/dim/v1";
pub const CERTIFY_SCHEMA: &str = "skein-mcg/certify/v1";
pub const POWER_SCHEMA: &str = "skein-mcg/power-check/v1";
pub const RESCALE_SCHEMA: &str = "skein-mcg/rescale-check/v1";
pub const CLOSURE_SCHEMA: &str = "skein-mcg/closure/v1";
pub const SUMMARY_SCHEMA: &str = "skein-mcg/summary/v1";

#[derive(Debug, Parser)]
#[command(
    name = "skein-mcg",
    version,
    about = "Exact skein representations of braid and mapping class groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of the skein module on the given number of points.
    Dim(DimArgs),
    /// Matrix of a braid word.
    Matrix(MatrixArgs),
    /// Certify finite or infinite projective order of a braid word.
    Certify(CertifyArgs),
    /// Check that both Birman relators act as the expected scalars.
    VerifyBirman(BirmanArgs),
    /// Check that m-th powers of all half-twists are scalar.
    CheckPower(PowerArgs),
    /// Sign of the rescaled power scalar for odd m.
    RescaleCheck(PowerArgs),
    /// Projective closure of the group generated by all half-twists.
    Closure(ClosureArgs),
    /// Run the infinite-index table over a range of m and point counts.
    Reproduce(ReproduceArgs),
    /// Certify short words in B_6 at a P_5 root.
    #[command(name = "explore-m5")]
    ExploreM5(ExploreArgs),
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Write JSON lines here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct RingArg {
    /// Evaluate at A = zeta_N^j.
    #[arg(long, value_name = "N:j")]
    pub root: Option<RootOfUnityChoice>,
    /// Work over Z[A, A^-1].
    #[arg(long)]
    pub symbolic: bool,
}

#[derive(Debug, Args)]
pub struct DimArgs {
    #[arg(long)]
    pub points: usize,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[arg(long)]
    pub points: usize,
    /// Whitespace-separated signed generator indices; negative means inverse.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub word: String,
    #[command(flatten)]
    pub ring: RingArg,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long)]
    pub points: usize,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub word: String,
    #[arg(long, value_name = "N:j")]
    pub root: RootOfUnityChoice,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct BirmanArgs {
    #[arg(long)]
    pub points: usize,
    #[command(flatten)]
    pub ring: RingArg,
    /// Allow symbolic checks above 2n = 6 (slow).
    #[arg(long)]
    pub large_symbolic: bool,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[arg(long)]
    pub points: usize,
    #[arg(long)]
    pub m: i64,
    /// Defaults to the canonical P_m root.
    #[arg(long, value_name = "N:j")]
    pub root: Option<RootOfUnityChoice>,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    #[arg(long, default_value_t = 4)]
    pub points: usize,
    #[arg(long, value_name = "N:j")]
    pub root: RootOfUnityChoice,
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
    pub cap: usize,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// A single m or an inclusive range `a..b`.
    #[arg(long, default_value = "6..12", value_parser = parse_m_range)]
    pub m: RangeInclusive<i64>,
    #[arg(long, value_delimiter = ',', default_value = "4,6")]
    pub points: Vec<usize>,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct ExploreArgs {
    #[arg(long, default_value_t = 3)]
    pub max_len: usize,
    /// Maximum number of words to certify.
    #[arg(long, default_value_t = 1000)]
    pub cap: usize,
    #[command(flatten)]
    pub out: OutArg,
}

/// `"7"`, `"6..12"` or `"6..=12"`, both ends inclusive.
pub fn parse_m_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("bad m value {t:?}"))
    };
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let m = num(s)?;
            m..=m
        }
    };
    if range.is_empty() {
        return Err(format!("empty m range {s:?}"));
    }
    Ok(range)
}

/// Where JSON lines and the summary go.
struct Output<'a> {
    lines: Box<dyn Write + 'a>,
    err: &'a mut dyn Write,
}

impl<'a> Output<'a> {
    fn new(out: &OutArg, stdout: &'a mut dyn Write, err: &'a mut dyn Write) -> io::Result<Self> {
        let lines: Box<dyn Write + 'a> = match &out.out {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(stdout),
        };
        Ok(Self { lines, err })
    }

    fn record<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer(&mut self.lines, value)?;
        writeln!(self.lines)
    }

    fn summary(&mut self, table: &Table) -> io::Result<()> {
        write!(self.err, "{table}")
    }

    fn finish(mut self) -> io::Result<()> {
        self.lines.flush()
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parse `args` (including the program name) and run the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILED
        }
    }
}

fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Dim(a) => cmd_dim(a, stdout, stderr),
        Command::Matrix(a) => cmd_matrix(a, stdout, stderr),
        Command::Certify(a) => cmd_certify(a, stdout, stderr),
        Command::VerifyBirman(a) => cmd_verify_birman(a, stdout, stderr),
        Command::CheckPower(a) => cmd_check_power(a, stdout, stderr),
        Command::RescaleCheck(a) => cmd_rescale_check(a, stdout, stderr),
        Command::Closure(a) => cmd_closure(a, stdout, stderr),
        Command::Reproduce(a) => cmd_reproduce(a, stdout, stderr),
        Command::ExploreM5(a) => cmd_explore_m5(a, stdout, stderr),
    }
}

fn half_points(points: usize) -> Result<usize, Failure> {
    if points == 0 || points % 2 != 0 {
        return Err(Failure::Usage(format!(
            "--points must be a positive even number, got {points}"
        )));
    }
    Ok(points / 2)
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

#[derive(Serialize)]
struct DimRecord {
    schema: &'static str,
    points: usize,
    dim: u64,
}

fn cmd_dim(a: DimArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let n = half_points(a.points)?;
    let dim = catalan(n as u64);
    let mut out = Output::new(&a.out, stdout, stderr)?;
    out.record(&DimRecord {
        schema: DIM_SCHEMA,
        points: a.points,
        dim,
    })?;
    let mut t = Table::new(["points", "dim"]);
    t.row([a.points.to_string(), dim.to_string()]);
    out.summary(&t)?;
    out.finish()?;
    Ok(EXIT_OK)
}

fn ring_of(r: &RingArg) -> Result<RingSelector, Failure> {
    match (r.root, r.symbolic) {
        (Some(c), false) => Ok(RingSelector::root(c)),
        (None, true) => Ok(RingSelector::Symbolic),
        _ => Err(Failure::Usage(
            "choose exactly one of --root N:j or --symbolic".into(),
        )),
    }
}

fn cmd_matrix(a: MatrixArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let n = half_points(a.points)?;
    let ring = ring_of(&a.ring)?;
    let word = BraidWord::parse(n, &a.word)?;
    let module = SkeinModule::new(n)?;
    let json = match ring.choice() {
        None => {
            let m = module.word_matrix(&SkeinParams::symbolic(), &word)?;
            MatrixJson::new(&word, ring, module.basis(), &m)
        }
        Some(c) => {
            let m = module.word_matrix(&SkeinParams::at_root(c), &word)?;
            MatrixJson::new(&word, ring, module.basis(), &m)
        }
    };
    let mut out = Output::new(&a.out, stdout, stderr)?;
    out.record(&json)?;
    let mut t = Table::new(["row", "entries"]);
    for (i, r) in json.entries.iter().enumerate() {
        t.row([(i + 1).to_string(), r.join("  |  ")]);
    }
    out.summary(&t)?;
    out.finish()?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CertifyRecord {
    #[serde(rename = "command_schema")]
    command_schema: &'static str,
    points: usize,
    word: Vec<i32>,
    root: String,
    #[serde(flatten)]
    certificate: CertificateJson,
}

fn verdict_exit(verdict: &str) -> i32 {
    match verdict {
        "finite" => EXIT_OK,
        "infinite" => EXIT_INFINITE,
        _ => EXIT_INCONCLUSIVE,
    }
}

fn cmd_certify(a: CertifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let n = half_points(a.points)?;
    let word = BraidWord::parse(n, &a.word)?;
    let module = SkeinModule::new(n)?;
    let g = module.word_matrix(&SkeinParams::at_root(a.root), &word)?;
    let cert = certify(&g, &CertifyOptions::default())?;
    verify_certificate(&g, &cert)?;
    let json = cert.to_json();
    let mut out = Output::new(&a.out, stdout, stderr)?;
    let mut t = Table::new(["points", "word", "root", "verdict", "detail"]);
    let detail = match (&json.order, &json.witness, &json.reason) {
        (Some(o), _, _) => format!("order {o}"),
        (_, Some(w), _) => w.kind.clone(),
        (_, _, Some(r)) => r.clone(),
        _ => String::new(),
    };
    t.row([
        a.points.to_string(),
        word.to_string(),
        a.root.to_string(),
        json.verdict.clone(),
        detail,
    ]);
    let code = verdict_exit(&json.verdict);
    out.record(&CertifyRecord {
        command_schema: CERTIFY_SCHEMA,
        points: a.points,
        word: word.letters().to_vec(),
        root: a.root.to_string(),
        certificate: json,
    })?;
    out.summary(&t)?;
    out.finish()?;
    Ok(code)
}

fn cmd_verify_birman(a: BirmanArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let n = half_points(a.points)?;
    let ring = ring_of(&a.ring)?;
    let (r1, r2) = verify_birman_in(n, ring, a.large_symbolic)?;
    let mut out = Output::new(&a.out, stdout, stderr)?;
    let mut t = Table::new([
        "relator", "points", "ring", "length", "scalar", "expected", "pass",
    ]);
    for r in [&r1, &r2] {
        out.record(r)?;
        t.row([
            r.relator.to_string(),
            a.points.to_string(),
            r.ring.to_string(),
            r.word_length.to_string(),
            r.scalar.clone().unwrap_or_else(|| "(not scalar)".into()),
            r.expected_scalar.clone(),
            yes_no(r.pass),
        ]);
    }
    out.summary(&t)?;
    out.finish()?;
    Ok(if r1.pass && r2.pass {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn root_or_canonical(
    root: Option<RootOfUnityChoice>,
    m: i64,
) -> Result<RootOfUnityChoice, Failure> {
    match root {
        Some(r) => Ok(r),
        None => Ok(canonical_root_for_m(m)?),
    }
}

fn positive_m(m: i64) -> Result<u64, Failure> {
    u64::try_from(m)
        .ok()
        .filter(|&m| m > 0)
        .ok_or_else(|| Failure::Usage(format!("--m must be positive, got {m}")))
}

#[derive(Serialize)]
struct PowerRecord {
    schema: &'static str,
    points: usize,
    m: u64,
    root: String,
    holds: bool,
    scalar: String,
    per_generator: Vec<Option<String>>,
}

fn cmd_check_power(a: PowerArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let n = half_points(a.points)?;
    let m = positive_m(a.m)?;
    let root = root_or_canonical(a.root, a.m)?;
    let rep = verify_power_scalar(n, m, root)?;
    let rec = PowerRecord {
        schema: POWER_SCHEMA,
        points: a.points,
        m,
        root: root.to_string(),
        holds: rep.holds,
        scalar: rep.scalar.to_string(),
        per_generator: rep
            .per_generator
            .iter()
            .map(|s| s.as_ref().map(ToString::to_string))
            .collect(),
    };
    let mut out = Output::new(&a.out, stdout, stderr)?;
    out.record(&rec)?;
    let mut t = Table::new(["points", "m", "root", "A^-m", "all scalar"]);
    t.row([
        a.points.to_string(),
        m.to_string(),
        rec.root.clone(),
        rec.scalar.clone(),
        yes_no(rec.holds),
    ]);
    out.summary(&t)?;
    out.finish()?;
    Ok(if rec.holds { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct RescaleRecord {
    schema: &'static str,
    points: usize,
    m: u64,
    root: String,
    scalar: String,
    /// `±1` for odd `m`; absent for even `m`, where no sign is claimed.
    sign: Option<i8>,
    expected: Option<i8>,
    pass: Option<bool>,
}

fn cmd_rescale_check(a: PowerArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let n = half_points(a.points)?;
    let m = positive_m(a.m)?;
    let root = root_or_canonical(a.root, a.m)?;
    let scalar = rescaled_scalar(n, m, root);
    let (sign, expected) = if m % 2 == 1 {
        let expected: i8 = if n % 2 == 1 { 1 } else { -1 };
        (Some(rescaled_scalar_check(n, m, root)?), Some(expected))
    } else {
        (None, None)
    };
    let pass = sign.zip(expected).map(|(s, e)| s == e);
    let rec = RescaleRecord {
        schema: RESCALE_SCHEMA,
        points: a.points,
        m,
        root: root.to_string(),
        scalar: scalar.to_string(),
        sign,
        expected,
        pass,
    };
    let mut out = Output::new(&a.out, stdout, stderr)?;
    out.record(&rec)?;
    let show = |v: Option<i8>| v.map_or("-".to_string(), |v| v.to_string());
    let mut t = Table::new(["points", "m", "root", "scalar", "sign", "expected"]);
    t.row([
        a.points.to_string(),
        m.to_string(),
        rec.root.clone(),
        rec.scalar.clone(),
        show(sign),
        show(expected),
    ]);
    out.summary(&t)?;
    out.finish()?;
    Ok(if pass == Some(false) {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

#[derive(Serialize)]
struct ClosureRecord {
    schema: &'static str,
    points: usize,
    root: String,
    cap: usize,
    result: &'static str,
    order: Option<usize>,
}

fn cmd_closure(a: ClosureArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let n = half_points(a.points)?;
    if a.cap == 0 {
        return Err(Failure::Usage("--cap must be positive".into()));
    }
    let module = SkeinModule::new(n)?;
    let params = SkeinParams::at_root(a.root);
    let gens = (1..2 * n)
        .map(|i| module.generator_matrix(&params, i, 1))
        .collect::<skein_mcg::Result<Vec<_>>>()?;
    let (result, order, code) = match group_closure(&gens, a.cap)? {
        ClosureResult::Finite { order } => ("finite", Some(order), EXIT_OK),
        ClosureResult::CapExceeded { .. } => ("cap_exceeded", None, EXIT_INCONCLUSIVE),
    };
    let rec = ClosureRecord {
        schema: CLOSURE_SCHEMA,
        points: a.points,
        root: a.root.to_string(),
        cap: a.cap,
        result,
        order,
    };
    let mut out = Output::new(&a.out, stdout, stderr)?;
    out.record(&rec)?;
    let mut t = Table::new(["points", "root", "cap", "result", "order"]);
    t.row([
        a.points.to_string(),
        rec.root.clone(),
        a.cap.to_string(),
        result.to_string(),
        order.map_or("-".into(), |o| o.to_string()),
    ]);
    out.summary(&t)?;
    out.finish()?;
    Ok(code)
}

#[derive(Serialize)]
struct Summary {
    schema: &'static str,
    command: &'static str,
    rows: usize,
    passed: usize,
    pass: bool,
}

fn cmd_reproduce(a: ReproduceArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let rows = reproduce(a.m.clone(), &a.points)?;
    let mut out = Output::new(&a.out, stdout, stderr)?;
    let mut t = Table::new([
        "m", "points", "root", "P_m(A)=0", "R1", "R2", "sigma^m", "witness", "full", "pass",
    ]);
    for r in &rows {
        out.record(r)?;
        t.row([
            r.m.to_string(),
            r.points.to_string(),
            r.root.clone(),
            yes_no(r.pm_root),
            yes_no(r.r1_pass),
            yes_no(r.r2_pass),
            r.power_scalar.clone(),
            r.witness
                .clone()
                .unwrap_or_else(|| r.certificate.verdict.clone()),
            r.full_verdict.clone().unwrap_or_else(|| "-".into()),
            yes_no(r.pass),
        ]);
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    let pass = passed == rows.len();
    out.record(&Summary {
        schema: SUMMARY_SCHEMA,
        command: "reproduce",
        rows: rows.len(),
        passed,
        pass,
    })?;
    out.summary(&t)?;
    writeln!(out.err, "{passed}/{} rows pass", rows.len())?;
    out.finish()?;
    Ok(if pass { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct ExploreSummaryRecord {
    schema: &'static str,
    command: &'static str,
    root: String,
    max_len: usize,
    cap: usize,
    #[serde(flatten)]
    summary: skein_mcg::pipeline::ExploreSummary,
}

fn cmd_explore_m5(a: ExploreArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let mut out = Output::new(&a.out, stdout, stderr)?;
    let mut hits = Table::new(["word", "verdict", "witness"]);
    let mut write_err = None;
    let summary = explore_m5(a.max_len, a.cap, |rec| {
        if let Err(e) = out.record(rec) {
            write_err.get_or_insert(e);
        }
        if rec.verdict != "finite" {
            hits.row([
                rec.word.clone(),
                rec.verdict.clone(),
                rec.witness.clone().unwrap_or_default(),
            ]);
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    out.record(&ExploreSummaryRecord {
        schema: SUMMARY_SCHEMA,
        command: "explore-m5",
        root: p5_root().to_string(),
        max_len: a.max_len,
        cap: a.cap,
        summary: summary.clone(),
    })?;
    writeln!(
        out.err,
        "explore-m5 at A = zeta_{}: {} words, {} finite, {} infinite, {} inconclusive{}",
        p5_root(),
        summary.examined,
        summary.finite,
        summary.infinite,
        summary.inconclusive,
        if summary.truncated {
            " (word budget reached)"
        } else {
            ""
        }
    )?;
    if !hits.is_empty() {
        out.summary(&hits)?;
    }
    out.finish()?;
    Ok(EXIT_OK)
}
