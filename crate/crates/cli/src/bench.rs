use std::fs;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use rootcount::corpus::{self, CorpusEntry};
use rootcount::number::{rat_int, ExtReal};
use rootcount::{
    budan_fourier_bound, count_distinct_real, count_real_mult, descartes_roots_test, proots_ball,
    proots_upper, Error, GaussRat,
};

use crate::{BenchArgs, CliError, CliResult};

/// Every method, in output order.
pub const METHODS: [&str; 6] = [
    "ball",
    "descartes",
    "fourier",
    "sturm",
    "sturm-ext",
    "upper",
];

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub polynomial: String,
    pub method: &'static str,
    pub result: String,
    pub seconds: f64,
}

fn error_code(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZeroPoly => "DivisionByZeroPoly",
        Error::BothZero => "BothZero",
        Error::ZeroPoly => "ZeroPoly",
        Error::BadInterval => "BadInterval",
        Error::RootAtEndpoint(_) => "RootAtEndpoint",
        Error::ZeroDirection => "ZeroDirection",
        Error::InternalNegative(_) => "InternalNegative",
        Error::InternalParity(_) => "InternalParity",
        Error::NonRealSpec => "NonRealSpec",
        Error::Parse(_) => "Parse",
    }
}

/// Real methods run over (0, 1), or (0, 1] for Budan-Fourier; complex
/// methods count the upper half-plane and the open unit disc.
fn evaluate(entry: &CorpusEntry, method: &'static str, skip_sturm: bool) -> Row {
    let (zero, one) = (rat_int(0), rat_int(1));
    let (a, b) = (ExtReal::Finite(zero.clone()), ExtReal::Finite(one.clone()));
    let real = entry.poly.to_real();
    let start = Instant::now();
    let outcome: Option<Result<usize, Error>> = match method {
        "upper" => Some(proots_upper(&entry.poly.to_complex())),
        "ball" => Some(proots_ball(
            &entry.poly.to_complex(),
            &GaussRat::default(),
            &one,
        )),
        "sturm" | "sturm-ext" if skip_sturm => None,
        _ => real.as_ref().map(|p| match method {
            "sturm" => count_distinct_real(p, &a, &b),
            "sturm-ext" => count_real_mult(p, &a, &b),
            "fourier" => budan_fourier_bound(p, &a, &b).map(|pb| pb.bound),
            "descartes" => descartes_roots_test(&zero, &one, p).map(|pb| pb.bound),
            _ => unreachable!("unknown method {method}"),
        }),
    };
    let seconds = start.elapsed().as_secs_f64();
    let result = match outcome {
        None if skip_sturm && method.starts_with("sturm") => "skipped".to_string(),
        None => "n/a".to_string(),
        Some(Ok(n)) => n.to_string(),
        Some(Err(e)) => format!("error:{}", error_code(&e)),
    };
    Row {
        polynomial: entry.id.clone(),
        method,
        result,
        seconds,
    }
}

/// One row per corpus entry and method, sorted by (polynomial, method).
pub fn bench_rows(entries: &[CorpusEntry], skip_sturm: bool) -> Vec<Row> {
    let jobs: Vec<(&CorpusEntry, &'static str)> = entries
        .iter()
        .flat_map(|e| METHODS.iter().map(move |m| (e, *m)))
        .collect();
    let mut rows: Vec<Row> = jobs
        .into_par_iter()
        .map(|(e, m)| evaluate(e, m, skip_sturm))
        .collect();
    rows.sort_by(|x, y| (&x.polynomial, x.method).cmp(&(&y.polynomial, y.method)));
    rows
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut out = String::from("polynomial,method,result,seconds\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{:.6}\n",
            r.polynomial, r.method, r.result, r.seconds
        ));
    }
    out
}

fn seconds_of(rows: &[Row], id: &str, method: &str) -> Option<f64> {
    rows.iter()
        .find(|r| r.polynomial == id && r.method == method)
        .filter(|r| r.result != "n/a" && r.result != "skipped")
        .map(|r| r.seconds)
}

/// Whether remainder-sequence methods were slower than variation methods,
/// per real polynomial. Informational only.
pub fn ordering_summary(rows: &[Row]) -> Vec<String> {
    let mut ids: Vec<&str> = rows.iter().map(|r| r.polynomial.as_str()).collect();
    ids.dedup();
    ids.into_iter()
        .filter_map(|id| {
            let slow = seconds_of(rows, id, "sturm")?.min(seconds_of(rows, id, "sturm-ext")?);
            let fast = seconds_of(rows, id, "fourier")?.max(seconds_of(rows, id, "descartes")?);
            let verdict = if slow > fast { "slower" } else { "NOT slower" };
            Some(format!(
                "{id}: remainder-sequence methods {verdict} than variation methods ({slow:.4}s vs {fast:.4}s)"
            ))
        })
        .collect()
}

pub fn run(args: &BenchArgs) -> CliResult<()> {
    let entries = match &args.corpus {
        Some(dir) => corpus::load_dir(dir)?,
        None => corpus::builtin(),
    };
    let rows = bench_rows(&entries, args.skip_sturm);
    let csv = to_csv(&rows);
    match &args.out {
        Some(path) => fs::write(path, csv)
            .map_err(|e| CliError::parse(format!("cannot write {}: {e}", path.display())))?,
        None => {
            std::io::stdout()
                .write_all(csv.as_bytes())
                .map_err(|e| CliError::parse(e.to_string()))?;
        }
    }
    for line in ordering_summary(&rows) {
        eprintln!("{line}");
    }
    Ok(())
}
