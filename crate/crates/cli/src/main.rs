//! `kneser`: exact Kneser-transversal computations from the command line.
//!
//! Every run prints one JSON document on stdout and a short summary on
//! stderr.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use kneser_core::om::BasisOrder;
use serde::Serialize;

use report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "kneser", version, about = "Kneser transversals with exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Leave the timings field out, making output byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timings: bool,

    /// Sign-string order of chirotope files: lex or paper_table.
    #[arg(long, global = true, default_value = "lex", value_parser = parse_order)]
    basis_order: BasisOrder,

    /// Worker threads for parallel subcommands.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

fn parse_order(s: &str) -> Result<BasisOrder, String> {
    s.parse().map_err(|e: kneser_core::KneserError| e.to_string())
}

/// The point configuration or chirotope a command works on.
#[derive(Args, Debug, Clone, Serialize)]
pub struct Source {
    /// Point configuration JSON: {"d": 3, "points": [["1", "-2/3", "0"], ...]}.
    #[arg(long, conflicts_with = "db")]
    pub config: Option<PathBuf>,
    /// Chirotope database, one sign string per line.
    #[arg(long)]
    pub db: Option<PathBuf>,
    /// 1-based record of --db.
    #[arg(long, default_value_t = 1)]
    pub index: usize,
    /// Rank of the --db chirotopes.
    #[arg(long, default_value_t = 4)]
    pub rank: usize,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Problem {
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Codimension of the transversal flats.
    #[arg(long, default_value_t = 2)]
    pub lambda: usize,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Chirotope of a configuration (or a database record) as a sign string.
    Chirotope(Source),
    /// Circuits and cocircuits.
    Circuits(Source),
    /// All transversals, with a status saying whether the list is exhaustive.
    Decide(Problem),
    /// Transversals spanned by configuration points.
    Complete(Problem),
    /// Non-complete transversals (lambda = 2, n = d + 2(k - 2), general position).
    Noncomplete(Problem),
    /// Complete / type-alpha classification of a transversal flat.
    Classify {
        #[command(flatten)]
        problem: Problem,
        /// Flat JSON: {"base": [...], "directions": [[...], ...]}.
        #[arg(long)]
        flat: PathBuf,
    },
    /// Whether a flat meets the hull of every k-subset.
    Verify {
        #[command(flatten)]
        problem: Problem,
        #[arg(long)]
        flat: PathBuf,
    },
    /// Seeded general-position perturbation of a configuration.
    Perturb {
        #[arg(long)]
        config: PathBuf,
        /// Coordinate displacement bound, as P/Q.
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        seed: u64,
    },
    /// Decision before and after repeated perturbation.
    Stability {
        #[command(flatten)]
        problem: Problem,
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        trials: usize,
        /// Trial i uses seed + i.
        #[arg(long)]
        seed: u64,
    },
    /// Known bounds on m(k, d, lambda).
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        lambda: usize,
        /// Point count for the k-set bound.
        #[arg(long)]
        n: Option<usize>,
        /// Constant of the asymptotic lower bound, as P/Q.
        #[arg(long)]
        c: Option<String>,
    },
    /// Points (t, t^2, ..., t^d) for t = 1..n.
    MomentCurve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Built-in configurations: figure2, figure4, hexagon, ot742.
    Fixtures {
        /// Omit to list them all.
        #[arg(long)]
        name: Option<String>,
    },
    /// Rank-4, 7-element records with a complete transversal line.
    ScanDb7 {
        #[arg(long)]
        db: PathBuf,
        /// Only test uniform records.
        #[arg(long)]
        uniform: bool,
    },
    /// Rank-4, 8-element records carrying the three-cocircuit pattern.
    ScanDb8 {
        #[arg(long)]
        db: PathBuf,
        /// Half-open 1-based record range A:B.
        #[arg(long, value_parser = parse_range)]
        range: Option<(usize, usize)>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Records between checkpoint writes.
        #[arg(long)]
        chunk: Option<usize>,
        /// 7-element database used to identify the deletions.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Identify deletions up to relabeling only, not reorientation.
        #[arg(long)]
        strict: bool,
        /// Stop after this many records (the checkpoint allows resuming).
        #[arg(long)]
        stop_after: Option<usize>,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or("expected A:B")?;
    let a = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let ctx = commands::Context { order: cli.basis_order, workers: cli.workers };
    let (name, inputs, seed) = commands::describe(&cli.command, &ctx);
    let mut report = RunReport::new(name, inputs, seed);
    let code = match commands::run(&cli.command, &ctx) {
        Ok(out) => {
            eprintln!("{name}: {}", out.summary);
            report.results = Some(out.results);
            0
        }
        Err(e) => {
            eprintln!("{name}: {e}");
            report.set_error(&e);
            e.exit_code()
        }
    };
    if !cli.no_timings {
        report.set_elapsed(start.elapsed());
    }
    // a closed stdout (e.g. piped into head) is not an error of the run
    let _ = writeln!(std::io::stdout().lock(), "{}", report.to_json());
    ExitCode::from(code)
}
