//! Command-line surface: argument definitions and the three subcommands.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use eapdtw_core::kernels::{dtw_traced, KernelTrace};
use eapdtw_core::search::{similarity_search, BestSoFar, SearchConfig, SearchReport};
use eapdtw_core::{Algorithm, Band, DtwOutcome, Series, Threshold};
use rayon::prelude::*;

use crate::io::load_series;
use crate::stats::emit_stats;
use crate::synth::random_walk;
use crate::trace::write_trace_csv;

/// Window ratios accepted without `--allow-any-ratio`.
pub const RATIO_GRID: [f64; 5] = [0.1, 0.2, 0.3, 0.4, 0.5];

const INDEXING_NOTE: &str = "\
Indexing: search locations are 0-based offsets into the reference series; \
trace rows and columns are 1-based DTW matrix coordinates (row 1, col 1 is the \
first sample pair).";

#[derive(Debug, Parser)]
#[command(
    name = "eapdtw",
    version,
    about = "Exact DTW subsequence search with pruned, early-abandoning kernels"
)]
#[command(after_help = INDEXING_NOTE)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find the subsequence of the reference closest to the query under
    /// windowed DTW (location is 0-based).
    #[command(after_help = INDEXING_NOTE)]
    Search(SearchArgs),
    /// Run one kernel on two series and write every evaluated cell as CSV
    /// (rows and columns are 1-based).
    #[command(after_help = INDEXING_NOTE)]
    Trace(TraceArgs),
    /// Run a grid of searches, one statistics file per grid point.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Reference series: whitespace-separated reals.
    #[arg(long)]
    pub data: PathBuf,
    /// Query series; only its first `--query-len` samples are used.
    #[arg(long)]
    pub query: PathBuf,
    #[arg(long)]
    pub query_len: usize,
    /// Warping window as a fraction of the query length.
    #[arg(long)]
    pub window_ratio: f64,
    #[arg(long, value_parser = parse_algorithm)]
    pub algo: Algorithm,
    /// Skip the lower-bound cascade.
    #[arg(long)]
    pub no_lb: bool,
    /// Do not tighten the kernel threshold with cumulative lower bounds.
    #[arg(long)]
    pub no_tighten: bool,
    /// Write a JSON statistics object to this path.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// Accepted for script compatibility; file inputs make the search
    /// deterministic, so it has no effect.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Accept window ratios outside 0.1, 0.2, 0.3, 0.4, 0.5.
    #[arg(long)]
    pub allow_any_ratio: bool,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(long)]
    pub a: PathBuf,
    #[arg(long)]
    pub b: PathBuf,
    /// Threshold, a non-negative real or `inf`.
    #[arg(long)]
    pub ub: f64,
    #[arg(long, value_parser = parse_algorithm)]
    pub algo: Algorithm,
    /// CSV destination (`row,col,value,kind`).
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Query prefix lengths.
    #[arg(long, value_delimiter = ',', default_value = "128,256,512,1024")]
    pub grid_lengths: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3,0.4,0.5")]
    pub grid_ratios: Vec<f64>,
    #[arg(long, value_delimiter = ',', value_parser = parse_algorithm, default_value = "full,lp,eap")]
    pub algos: Vec<Algorithm>,
    /// Directory receiving one JSON file per grid point.
    #[arg(long)]
    pub stats_dir: PathBuf,
    /// Generate a random-walk reference of this length (the query is a
    /// second walk from the next seed).
    #[arg(long, conflicts_with_all = ["data", "query"])]
    pub synthetic: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, requires = "query")]
    pub data: Option<PathBuf>,
    #[arg(long, requires = "data")]
    pub query: Option<PathBuf>,
    #[arg(long)]
    pub no_lb: bool,
    #[arg(long)]
    pub no_tighten: bool,
    #[arg(long)]
    pub allow_any_ratio: bool,
}

fn parse_algorithm(name: &str) -> Result<Algorithm, String> {
    Algorithm::from_name(name).ok_or_else(|| format!("unknown algorithm {name:?} (expected full, lp or eap)"))
}

fn check_ratio(ratio: f64, allow_any: bool) -> Result<(), String> {
    if allow_any || RATIO_GRID.iter().any(|g| (g - ratio).abs() < 1e-12) {
        Ok(())
    } else {
        Err(format!(
            "window ratio {ratio} is outside the supported grid {RATIO_GRID:?} (pass --allow-any-ratio to override)"
        ))
    }
}

impl Cli {
    /// Flag checks clap cannot express; failures are usage errors.
    pub fn validate(&self) -> Result<(), String> {
        match &self.command {
            Command::Search(args) => check_ratio(args.window_ratio, args.allow_any_ratio),
            Command::Bench(args) => {
                for &r in &args.grid_ratios {
                    check_ratio(r, args.allow_any_ratio)?;
                }
                if args.synthetic.is_none() && args.data.is_none() {
                    return Err("bench needs --synthetic <length> or --data/--query".into());
                }
                Ok(())
            }
            Command::Trace(_) => Ok(()),
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Search(args) => run_search(args, out),
        Command::Trace(args) => run_trace(args, out),
        Command::Bench(args) => run_bench(args, out),
    }
}

fn config(m: usize, ratio: f64, algo: Algorithm, no_lb: bool, no_tighten: bool) -> SearchConfig {
    let mut cfg = SearchConfig::new(m, ratio, algo);
    if no_lb {
        cfg = cfg.without_lower_bounds();
    }
    if no_tighten {
        cfg = cfg.without_tightening();
    }
    cfg
}

fn timed_search(reference: &Series, query: &Series, cfg: &SearchConfig) -> Result<(BestSoFar, SearchReport)> {
    let start = Instant::now();
    let (best, mut report) = similarity_search(reference, query, cfg)?;
    report.elapsed = start.elapsed();
    Ok((best, report))
}

fn print_result(out: &mut dyn Write, best: &BestSoFar, report: &SearchReport) -> std::io::Result<()> {
    writeln!(out, "Location: {}", best.location)?;
    writeln!(out, "Distance: {}", best.distance())?;
    writeln!(out, "Distance_sq: {}", best.distance_sq)?;
    writeln!(out, "Candidates: {}", report.candidates_total)?;
    writeln!(out, "Pruned by LB_Kim: {}", report.pruned_kim)?;
    writeln!(out, "Pruned by LB_Keogh EQ: {}", report.pruned_keogh_eq)?;
    writeln!(out, "Pruned by LB_Keogh EC: {}", report.pruned_keogh_ec)?;
    writeln!(out, "DTW calls: {}", report.dtw_calls)?;
    writeln!(out, "DTW abandoned: {}", report.dtw_abandoned)?;
    writeln!(out, "DP cells: {}", report.dp_cells_evaluated)?;
    writeln!(out, "Elapsed: {:.6} s", report.elapsed.as_secs_f64())
}

fn run_search(args: &SearchArgs, out: &mut dyn Write) -> Result<()> {
    let reference = load_series(&args.data)?;
    let query = load_series(&args.query)?;
    if args.query_len > query.len() {
        bail!(
            "--query-len {} exceeds the {} samples in {}",
            args.query_len,
            query.len(),
            args.query.display()
        );
    }
    let cfg = config(
        args.query_len,
        args.window_ratio,
        args.algo,
        args.no_lb,
        args.no_tighten,
    );
    let (best, report) = timed_search(&reference, &query, &cfg)?;
    print_result(out, &best, &report)?;
    if let Some(path) = &args.stats {
        emit_stats(&best, &report, path).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn run_trace(args: &TraceArgs, out: &mut dyn Write) -> Result<()> {
    let a = load_series(&args.a)?;
    let b = load_series(&args.b)?;
    let ub = Threshold::new(args.ub)?;
    let mut trace = KernelTrace::with_matrix();
    let outcome = dtw_traced(args.algo, &a, &b, Band::Unbounded, ub, None, &mut trace)?;
    let file = File::create(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    write_trace_csv(BufWriter::new(file), trace.events())?;
    match outcome {
        DtwOutcome::Distance(d) => writeln!(out, "Distance_sq: {d}")?,
        DtwOutcome::Pruned => writeln!(out, "Pruned")?,
    }
    writeln!(out, "Cells: {}", trace.cells_evaluated)?;
    Ok(())
}

/// File name of a grid point's statistics.
pub fn stats_file_name(algo: Algorithm, m: usize, ratio: f64) -> String {
    format!("{}-m{m}-w{ratio}.json", algo.name())
}

fn run_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<()> {
    let longest = args.grid_lengths.iter().copied().max().unwrap_or(0);
    let (reference, query) = match (&args.synthetic, &args.data, &args.query) {
        (Some(len), _, _) => (
            Series::new(random_walk(*len, args.seed))?,
            Series::new(random_walk(longest.max(1), args.seed.wrapping_add(1)))?,
        ),
        (None, Some(data), Some(query)) => (load_series(data)?, load_series(query)?),
        _ => bail!("bench needs --synthetic <length> or --data/--query"),
    };
    if longest > query.len() {
        bail!("grid length {longest} exceeds the query length {}", query.len());
    }
    fs::create_dir_all(&args.stats_dir).with_context(|| format!("creating {}", args.stats_dir.display()))?;

    let mut points = Vec::new();
    for &m in &args.grid_lengths {
        for &ratio in &args.grid_ratios {
            for &algo in &args.algos {
                points.push((m, ratio, algo));
            }
        }
    }
    type PointResult = Result<(usize, f64, Algorithm, BestSoFar, SearchReport)>;
    let results: Vec<PointResult> = points
        .par_iter()
        .map(|&(m, ratio, algo)| {
            let cfg = config(m, ratio, algo, args.no_lb, args.no_tighten);
            let (best, report) = timed_search(&reference, &query, &cfg)?;
            let path = args.stats_dir.join(stats_file_name(algo, m, ratio));
            emit_stats(&best, &report, &path).with_context(|| format!("writing {}", path.display()))?;
            Ok((m, ratio, algo, best, report))
        })
        .collect();

    for result in results {
        let (m, ratio, algo, best, report) = result?;
        writeln!(
            out,
            "{:>4} m={m:<5} w={ratio:<4} location={} distance_sq={} dtw_calls={} cells={} {:.3}s",
            algo.name(),
            best.location,
            best.distance_sq,
            report.dtw_calls,
            report.dp_cells_evaluated,
            report.elapsed.as_secs_f64()
        )?;
    }
    writeln!(out, "statistics written to {}", display(&args.stats_dir))?;
    Ok(())
}

fn display(p: &Path) -> String {
    p.display().to_string()
}
