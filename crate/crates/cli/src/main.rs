//! `rootcount`: count real and complex roots of polynomials exactly.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 precondition violation
//! (zero polynomial, root at an endpoint, convention mismatch, ...),
//! 4 internal invariant breach.

mod bench;
mod gen;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rootcount::format::{parse_poly, AnyPoly};
use rootcount::number::{parse_ext_real, parse_rat, ExtReal};
use rootcount::{
    budan_fourier_bound, count_distinct_real, count_real_mult, descartes_roots_test, proots_ball,
    proots_half_plane, proots_upper, Error, GaussRat, HalfPlane,
};

use report::{Exactness, Report, Unknown};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError {
            code: 2,
            msg: msg.into(),
        }
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        CliError {
            code: 3,
            msg: msg.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_internal() {
            4
        } else if e.is_precondition() {
            3
        } else {
            2
        };
        CliError {
            code,
            msg: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "rootcount",
    version,
    about = "Exact root counting for rational polynomials"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count or bound real roots in an interval.
    Real(RealArgs),
    /// Count complex roots in the upper half-plane, a ball or a half-plane.
    Complex(ComplexArgs),
    /// Run every method over a corpus and write timings as CSV.
    Bench(BenchArgs),
    /// Generate random polynomials with known roots.
    Gen(GenArgs),
}

#[derive(Args)]
struct PolyInput {
    /// Coefficients as JSON, lowest degree first, e.g. '["1/4","-1","1"]'.
    #[arg(long, conflicts_with = "poly")]
    coeffs: Option<String>,
    /// File holding {"coeffs": [...]}.
    #[arg(long)]
    poly: Option<PathBuf>,
}

impl PolyInput {
    fn load(&self) -> CliResult<AnyPoly> {
        let text = match (&self.coeffs, &self.poly) {
            (Some(c), _) => c.clone(),
            (None, Some(path)) => fs::read_to_string(path)
                .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?,
            (None, None) => return Err(CliError::parse("one of --coeffs or --poly is required")),
        };
        Ok(parse_poly(&text)?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RealMethod {
    /// Distinct roots in (a, b), classical Sturm sequence.
    Sturm,
    /// Roots with multiplicity in (a, b), extended Sturm sequence.
    SturmExt,
    /// Budan-Fourier bound on (a, b]; requires --closed-right.
    Fourier,
    /// Descartes roots test bound on (a, b); finite endpoints only.
    Descartes,
}

impl RealMethod {
    fn name(self) -> &'static str {
        match self {
            RealMethod::Sturm => "sturm",
            RealMethod::SturmExt => "sturm-ext",
            RealMethod::Fourier => "fourier",
            RealMethod::Descartes => "descartes",
        }
    }
}

#[derive(Args)]
struct RealArgs {
    #[arg(long, value_enum)]
    method: RealMethod,
    #[command(flatten)]
    input: PolyInput,
    /// Interval endpoints "a,b"; rationals, or -inf / +inf.
    #[arg(long, allow_hyphen_values = true)]
    interval: String,
    /// Use the half-open interval (a, b] instead of (a, b).
    #[arg(long)]
    closed_right: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegionKind {
    Upper,
    Ball,
    HalfPlane,
}

#[derive(Args)]
struct ComplexArgs {
    #[arg(value_enum)]
    region: RegionKind,
    #[command(flatten)]
    input: PolyInput,
    /// Ball center "re,im".
    #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
    center: String,
    /// Ball radius.
    #[arg(long, allow_hyphen_values = true)]
    radius: Option<String>,
    /// Point on the half-plane's boundary line, "re,im".
    #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
    anchor: String,
    /// Boundary direction "re,im"; the region lies to its left.
    #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
    direction: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
pub struct BenchArgs {
    /// Directory of polynomial JSON files; the built-in corpus when omitted.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// CSV output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Skip the remainder-sequence methods (sturm, sturm-ext).
    #[arg(long)]
    pub skip_sturm: bool,
}

#[derive(Args)]
pub struct GenArgs {
    /// Seed; falls back to $ROOTCOUNT_SEED, then 0.
    #[arg(long, env = "ROOTCOUNT_SEED")]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 8)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 8)]
    pub coeff_bits: u32,
    /// Include non-real Gaussian-rational roots (complex coefficients).
    #[arg(long)]
    pub complex: bool,
    #[arg(long)]
    pub out: PathBuf,
}

fn split_pair(s: &str, what: &str) -> CliResult<(String, String)> {
    s.split_once(',')
        .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
        .ok_or_else(|| {
            CliError::parse(format!(
                "{what} must be two comma-separated values, got {s:?}"
            ))
        })
}

fn parse_gauss(s: &str, what: &str) -> CliResult<GaussRat> {
    let (re, im) = split_pair(s, what)?;
    Ok(GaussRat::new(parse_rat(&re)?, parse_rat(&im)?))
}

fn bracket(a: &ExtReal, b: &ExtReal, closed_right: bool) -> String {
    let close = if closed_right && matches!(b, ExtReal::Finite(_)) {
        ']'
    } else {
        ')'
    };
    format!("({a}, {b}{close}")
}

fn run_real(args: &RealArgs) -> CliResult<Report> {
    let poly = args.input.load()?;
    let (a, b) = split_pair(&args.interval, "--interval")?;
    let (a, b) = (parse_ext_real(&a)?, parse_ext_real(&b)?);
    let p = poly
        .to_real()
        .ok_or_else(|| CliError::precondition("real methods need real coefficients"))?;
    let method = args.method;
    match (method, args.closed_right) {
        (RealMethod::Fourier, false) => {
            return Err(CliError::precondition(
                "fourier bounds roots on (a, b]; pass --closed-right",
            ))
        }
        (RealMethod::Fourier, true) => {}
        (_, true) => {
            return Err(CliError::precondition(format!(
                "{} counts on the open interval (a, b); drop --closed-right",
                method.name()
            )))
        }
        _ => {}
    }
    let (result, exact) = match method {
        RealMethod::Sturm => (count_distinct_real(&p, &a, &b)?, Exactness::Known(true)),
        RealMethod::SturmExt => (count_real_mult(&p, &a, &b)?, Exactness::Known(true)),
        RealMethod::Fourier | RealMethod::Descartes => {
            let pb = if method == RealMethod::Fourier {
                budan_fourier_bound(&p, &a, &b)?
            } else {
                match (&a, &b) {
                    (ExtReal::Finite(a), ExtReal::Finite(b)) => descartes_roots_test(a, b, &p)?,
                    _ => {
                        return Err(CliError::precondition(
                            "descartes needs finite interval endpoints",
                        ))
                    }
                }
            };
            let exact = if pb.is_exact() {
                Exactness::Known(true)
            } else {
                Exactness::Unknown(Unknown::Unknown)
            };
            (pb.bound, exact)
        }
    };
    Ok(Report {
        method: method.name().to_string(),
        interval: bracket(&a, &b, args.closed_right),
        convention: if args.closed_right {
            "closed-right"
        } else {
            "open"
        }
        .to_string(),
        result: result as u64,
        exact,
    })
}

fn run_complex(args: &ComplexArgs) -> CliResult<Report> {
    let p = args.input.load()?.to_complex();
    let (method, region, result) = match args.region {
        RegionKind::Upper => ("upper", "{z : Im z > 0}".to_string(), proots_upper(&p)?),
        RegionKind::Ball => {
            let center = parse_gauss(&args.center, "--center")?;
            let radius = args
                .radius
                .as_deref()
                .ok_or_else(|| CliError::parse("ball needs --radius"))?;
            let radius = parse_rat(radius)?;
            let region = format!("{{z : |z - ({center})| < {radius}}}");
            ("ball", region, proots_ball(&p, &center, &radius)?)
        }
        RegionKind::HalfPlane => {
            let anchor = parse_gauss(&args.anchor, "--anchor")?;
            let direction = parse_gauss(&args.direction, "--direction")?;
            let region = format!("{{z : Im((z - ({anchor})) / ({direction})) > 0}}");
            let h = HalfPlane::new(anchor, direction)?;
            ("half-plane", region, proots_half_plane(&p, &h)?)
        }
    };
    Ok(Report {
        method: method.to_string(),
        interval: region,
        convention: "open".to_string(),
        result: result as u64,
        exact: Exactness::Known(true),
    })
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{}", report.to_text());
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.cmd {
        Command::Real(args) => emit(&run_real(&args)?, args.json),
        Command::Complex(args) => emit(&run_complex(&args)?, args.json),
        Command::Bench(args) => bench::run(&args)?,
        Command::Gen(args) => gen::run(&args)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
