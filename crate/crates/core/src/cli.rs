//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 invalid input.
//! Payloads go to stdout as JSON (or CSV for `verify --format csv`);
//! diagnostics go to stderr. Big integers are always decimal strings.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::adic::{self, complexity_report, TheoremCheck};
use crate::constructions::{self, Family, QuaternarySequence};
use crate::correlation::{full_profile, ideal_shape, is_balanced};
use crate::error::Error;
use crate::gf2seq::{self, Gf2Poly};
use crate::numtheory::{self, odd_primes};
use crate::seqfile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(message: impl std::fmt::Display) -> Self {
        CommandResult {
            exit_code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "quatseq",
    version,
    about = "Build and analyze balanced quaternary sequences with ideal autocorrelation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct a g1, g2 or g3 sequence and write it as a sequence file.
    Gen(GenArgs),
    /// Autocorrelation profile, balance and 4-adic complexity of a sequence file.
    Analyze(AnalyzeArgs),
    /// Compare computed gcds with the closed-form predictions, or run the lemma oracles.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    G1,
    G2,
    G3,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::G1 => Family::G1,
            FamilyArg::G2 => Family::G2,
            FamilyArg::G3 => Family::G3,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Odd prime for g1 (p = 1 mod 4) or g2 (p = 3 mod 4).
    #[arg(long)]
    p: Option<u64>,
    /// Degree for g3; the first primitive polynomial is used unless --poly is given.
    #[arg(long)]
    n: Option<u32>,
    /// Primitive polynomial for g3 as exponents, e.g. "4,1,0".
    #[arg(long)]
    poly: Option<String>,
    /// Binary sequence file (ideal autocorrelation, period 2^n - 1) for g3.
    #[arg(long)]
    binary: Option<PathBuf>,
    /// Where to write the sequence file.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[arg(long)]
    profile: bool,
    #[arg(long)]
    balance: bool,
    #[arg(long)]
    complexity: bool,
    /// Alphabet size used to parse the file and count symbols (2 or 4).
    #[arg(long, default_value_t = 4)]
    alphabet: u8,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    /// Inclusive parameter range, e.g. "5..541".
    #[arg(long)]
    sweep: Option<String>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Run the lemma oracles instead of a theorem check.
    #[arg(long)]
    lemmas: bool,
    #[arg(long, default_value_t = 199)]
    max_p: u64,
    #[arg(long, default_value_t = 10)]
    max_n: u32,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    exit_code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandResult::ok(text)
            };
        }
    };
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
    };
    outcome.unwrap_or_else(CommandResult::invalid)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn cmd_gen(args: GenArgs) -> Result<CommandResult, Error> {
    let family = Family::from(args.family);
    let (seq, params) = match family {
        Family::G1 | Family::G2 => {
            if args.n.is_some() || args.poly.is_some() || args.binary.is_some() {
                return Err(Error::InvalidParameter(format!(
                    "{family} takes --p only"
                )));
            }
            let p = args
                .p
                .ok_or_else(|| Error::InvalidParameter(format!("{family} needs --p")))?;
            (constructions::build(family, p)?, json!({ "p": p }))
        }
        _ => {
            if args.p.is_some() {
                return Err(Error::InvalidParameter("g3 takes --n, --poly or --binary".into()));
            }
            gen_g3(&args)?
        }
    };

    let digits = seqfile::digit_string(seq.digits());
    if let Some(path) = &args.output {
        let comment = format!("family={family} params={params} period={}", seq.period());
        seqfile::write_sequence_file(path, seq.digits(), &[comment])?;
    }
    let payload = json!({
        "family": family.name(),
        "period": seq.period(),
        "params": params,
        "output": args.output.as_ref().map(|p| p.display().to_string()),
        "digits": digits,
    });
    Ok(CommandResult::ok(pretty(&payload)))
}

fn gen_g3(args: &GenArgs) -> Result<(QuaternarySequence, Value), Error> {
    if let Some(path) = &args.binary {
        if args.n.is_some() || args.poly.is_some() {
            return Err(Error::InvalidParameter(
                "--binary cannot be combined with --n or --poly".into(),
            ));
        }
        let bits = seqfile::read_sequence_file(path, 2)?;
        let s = gf2seq::BinarySequence::new(bits)?;
        let seq = constructions::build_g3(&s)?;
        return Ok((seq, json!({ "binary": path.display().to_string() })));
    }
    let poly = match (&args.poly, args.n) {
        (Some(text), n) => {
            let poly: Gf2Poly = text.parse()?;
            if let Some(n) = n {
                if poly.degree() != n {
                    return Err(Error::InvalidParameter(format!(
                        "--poly {poly} has degree {}, not {n}",
                        poly.degree()
                    )));
                }
            }
            poly
        }
        (None, Some(n)) if n >= 2 => gf2seq::first_primitive_poly(n)?,
        (None, Some(n)) => {
            return Err(Error::InvalidParameter(format!("g3 needs n >= 2, got {n}")))
        }
        (None, None) => {
            return Err(Error::InvalidParameter(
                "g3 needs --n, --poly or --binary".into(),
            ))
        }
    };
    let s = gf2seq::msequence(&poly)?;
    let seq = constructions::build_g3(&s)?;
    Ok((
        seq,
        json!({ "n": poly.degree(), "poly": poly.to_string() }),
    ))
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<CommandResult, Error> {
    if args.alphabet != 2 && args.alphabet != 4 {
        return Err(Error::InvalidParameter(format!(
            "--alphabet must be 2 or 4, got {}",
            args.alphabet
        )));
    }
    let digits = seqfile::read_sequence_file(&args.input, args.alphabet)?;
    let seq = QuaternarySequence::external(digits)?;
    let all = !(args.profile || args.balance || args.complexity);

    let mut payload = serde_json::Map::new();
    payload.insert("period".into(), json!(seq.period()));
    if all || args.profile {
        let profile = full_profile(&seq);
        let shape = ideal_shape(&profile);
        payload.insert("profile".into(), serde_json::to_value(&profile).expect("profile"));
        payload.insert("ideal_quaternary".into(), json!(shape.is_some()));
        payload.insert("ideal_shape".into(), json!(shape));
    }
    if all || args.balance {
        let balance = is_balanced(seq.digits(), args.alphabet)?;
        payload.insert(
            "balance".into(),
            json!({
                "alphabet": args.alphabet,
                "balanced": balance.balanced,
                "counts": balance.counts,
            }),
        );
    }
    if all || args.complexity {
        let report = complexity_report(&seq);
        payload.insert("complexity".into(), serde_json::to_value(&report).expect("report"));
    }
    Ok(CommandResult::ok(pretty(&Value::Object(payload))))
}

/// One line of `verify` output; identical in JSON and CSV.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub family: String,
    pub param: u64,
    pub period: usize,
    pub predicted_gcd: String,
    pub computed_gcd: String,
    pub pass: bool,
}

impl From<&TheoremCheck> for VerifyRow {
    fn from(c: &TheoremCheck) -> Self {
        VerifyRow {
            family: c.prediction.family.name().to_string(),
            param: c.prediction.param,
            period: c.prediction.period,
            predicted_gcd: c.prediction.predicted_gcd.to_string(),
            computed_gcd: c.computed_gcd.to_string(),
            pass: c.passed(),
        }
    }
}

fn parse_range(text: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::InvalidParameter(format!("bad sweep range {text:?}, expected LO..HI"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(Error::InvalidParameter(format!(
            "empty sweep range {lo}..{hi}"
        )));
    }
    Ok((lo, hi))
}

fn cmd_verify(args: VerifyArgs) -> Result<CommandResult, Error> {
    if args.jobs == 0 {
        return Err(Error::InvalidParameter("--jobs must be at least 1".into()));
    }
    if args.lemmas {
        if args.family.is_some() || args.sweep.is_some() || args.p.is_some() || args.n.is_some() {
            return Err(Error::InvalidParameter(
                "--lemmas cannot be combined with a theorem check".into(),
            ));
        }
        if matches!(args.format, Format::Csv) {
            return Err(Error::InvalidParameter("--lemmas reports JSON only".into()));
        }
        return verify_lemmas(args.max_p, args.max_n);
    }

    let family = Family::from(
        args.family
            .ok_or_else(|| Error::InvalidParameter("verify needs --family or --lemmas".into()))?,
    );
    let single = match family {
        Family::G3 => {
            if args.p.is_some() {
                return Err(Error::InvalidParameter("g3 takes --n, not --p".into()));
            }
            args.n
        }
        _ => {
            if args.n.is_some() {
                return Err(Error::InvalidParameter(format!("{family} takes --p, not --n")));
            }
            args.p
        }
    };
    let params = match (single, &args.sweep) {
        (Some(v), None) => vec![v],
        (None, Some(range)) => {
            let (lo, hi) = parse_range(range)?;
            let params = adic::sweep_params(family, lo, hi);
            if params.is_empty() {
                return Err(Error::InvalidParameter(format!(
                    "no valid {family} parameters in {lo}..{hi}"
                )));
            }
            params
        }
        (Some(_), Some(_)) => {
            return Err(Error::InvalidParameter(
                "give either a single parameter or --sweep".into(),
            ))
        }
        (None, None) => {
            return Err(Error::InvalidParameter(
                "give a parameter (--p / --n) or --sweep".into(),
            ))
        }
    };

    let checks = adic::sweep(family, &params, args.jobs)?;
    let rows: Vec<VerifyRow> = checks.iter().map(VerifyRow::from).collect();
    let all_pass = rows.iter().all(|r| r.pass);

    let stdout = match args.format {
        Format::Json => pretty(&json!({
            "family": family.name(),
            "rows": rows,
            "all_pass": all_pass,
        })),
        Format::Csv => rows_to_csv(&rows)?,
    };
    let failed: Vec<String> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} {}: predicted {}, computed {}", r.family, r.param, r.predicted_gcd, r.computed_gcd))
        .collect();
    Ok(CommandResult {
        exit_code: if all_pass { EXIT_OK } else { EXIT_FAILED },
        stdout,
        stderr: failed.iter().map(|l| format!("FAIL {l}\n")).collect(),
    })
}

pub fn rows_to_csv(rows: &[VerifyRow]) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    let mut text = String::from_utf8(bytes).expect("csv output is utf-8");
    if rows.is_empty() {
        text.push_str("family,param,period,predicted_gcd,computed_gcd,pass\n");
    }
    Ok(text)
}

fn verify_lemmas(max_p: u64, max_n: u32) -> Result<CommandResult, Error> {
    if max_p < 3 {
        return Err(Error::InvalidParameter(format!("--max-p must be at least 3, got {max_p}")));
    }
    if !(2..=gf2seq::MAX_DEGREE.min(20)).contains(&max_n) {
        return Err(Error::InvalidParameter(format!(
            "--max-n must be in 2..=20, got {max_n}"
        )));
    }
    let mut all_pass = true;
    let lemma_rows: Vec<Value> = odd_primes(3, max_p)
        .map(|p| {
            let l2 = numtheory::check_lemma2(p).holds;
            let l3 = numtheory::check_lemma3(p.get()).unwrap_or(false);
            let l4 = numtheory::check_lemma4(p).holds;
            let pass = l2 && l3 && l4;
            all_pass &= pass;
            json!({ "p": p.get(), "lemma2": l2, "lemma3": l3, "lemma4": l4, "pass": pass })
        })
        .collect();
    let mseq_rows = (2..=max_n)
        .map(|n| {
            let poly = gf2seq::first_primitive_poly(n)?;
            let s = gf2seq::msequence(&poly)?;
            let weight = gf2seq::weight(&s);
            let ideal = gf2seq::is_ideal_autocorrelation_binary(&s);
            let pass = weight == 1 << (n - 1) && ideal;
            all_pass &= pass;
            Ok(json!({
                "n": n,
                "poly": poly.to_string(),
                "period": s.period(),
                "weight": weight,
                "expected_weight": 1u64 << (n - 1),
                "ideal": ideal,
                "pass": pass,
            }))
        })
        .collect::<Result<Vec<_>, Error>>()?;

    let payload = json!({
        "lemmas": lemma_rows,
        "msequences": mseq_rows,
        "all_pass": all_pass,
    });
    Ok(CommandResult {
        exit_code: if all_pass { EXIT_OK } else { EXIT_FAILED },
        stdout: pretty(&payload),
        stderr: String::new(),
    })
}
