mod args;
mod render;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;

use args::{AlphaArgs, Cli, Command, GcdArgs, PresentArgs, VerifyArgs};
use m0chow_core::ideal::lucas::{binomial_gcd, lucas_prediction, prime_power_base};
use m0chow_core::paths::PathRegistry;
use m0chow_core::relations::{compute_relation, RelationSet};
use m0chow_core::verify::{CheckParams, CheckRegistry};
use m0chow_core::Error;
use render::{GcdRow, Presentation};

/// Failure modes, by exit code.
enum Failure {
    /// Exit 2.
    Input(String),
    /// Exit 1.
    Internal(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EvenDegree(_) | Error::IndexError(_) | Error::DomainError(_) => Failure::Input(e.to_string()),
            other => Failure::Internal(other.into()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.into())
    }
}

/// Rendered output and whether every check passed.
struct Output {
    text: String,
    passed: bool,
}

fn present(a: &PresentArgs, cli: &Cli) -> Result<Output, Failure> {
    let ds = a.d.odd_values().map_err(Failure::Input)?;
    let reg = PathRegistry::default();
    let cells: Vec<(u32, u32)> = a.r.values().into_iter().flat_map(|r| ds.iter().map(move |&d| (r, d))).collect();
    let sets = cells
        .par_iter()
        .map(|&(r, d)| {
            if a.full {
                RelationSet::full(&reg, r, d, !a.no_check)
            } else {
                RelationSet::reduced(&reg, r, d, !a.no_check)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let docs: Vec<Presentation> = sets.into_iter().map(|set| Presentation { set, full: a.full }).collect();
    Ok(Output { text: render::presentations(&docs, cli.format), passed: true })
}

fn alpha(a: &AlphaArgs, cli: &Cli) -> Result<Output, Failure> {
    let ds = a.d.odd_values().map_err(Failure::Input)?;
    let mut jobs = Vec::new();
    for r in a.r.values() {
        for &d in &ds {
            for i in a.i.values() {
                for k in a.k.values() {
                    if i >= 1 && i <= d && k <= i {
                        jobs.push((i, k, r, d));
                    }
                }
            }
        }
    }
    if jobs.is_empty() {
        return Err(Failure::Input("no (i, k, d) with 1 <= i <= d and 0 <= k <= i in the given ranges".into()));
    }
    let reg = PathRegistry::default();
    let rels = jobs
        .par_iter()
        .map(|&(i, k, r, d)| compute_relation(&reg, i, k, r, d, !a.no_check).map(|rel| (r, d, rel)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Output { text: render::alphas(&rels, cli.format), passed: true })
}

fn verify(a: &VerifyArgs, cli: &Cli) -> Result<Output, Failure> {
    let params = CheckParams {
        r: a.r.values(),
        d: a.d.odd_values().map_err(Failure::Input)?,
        i: a.i.values().into_iter().filter(|&i| i >= 1).collect(),
        weak: a.weak,
    };
    let registry = CheckRegistry::default();
    let check = registry
        .get(a.kind.name())
        .ok_or_else(|| Failure::Input(format!("unknown check {}", a.kind.name())))?;
    let report = check.run(&params)?;
    Ok(Output { text: render::check_report(&report, cli.format), passed: report.passed })
}

fn gcd(a: &GcdArgs, cli: &Cli) -> Result<Output, Failure> {
    let rows = a
        .i
        .values()
        .into_iter()
        .map(|i| {
            let gcd = binomial_gcd(i)?;
            let base = prime_power_base(i);
            Ok(GcdRow { i, consistent: gcd == lucas_prediction(i), gcd, prime: base })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let passed = rows.iter().all(|r| r.consistent);
    Ok(Output { text: render::gcd_rows(&rows, cli.format), passed })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Internal(e.into()))?;
    }
    match &cli.command {
        Command::Present(a) => present(a, cli),
        Command::Alpha(a) => alpha(a, cli),
        Command::Verify(a) => verify(a, cli),
        Command::GcdBinomials(a) => gcd(a, cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => std::fs::write(path, &out.text)?,
            None => std::io::stdout().write_all(out.text.as_bytes())?,
        }
        Ok(out.passed)
    });
    if cli.timing {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
