use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use cuspzeros_cli::cuspzeros::delta::WeightPair;
use cuspzeros_cli::eval::{cmd_eval, Method};
use cuspzeros_cli::output::{emit, render};
use cuspzeros_cli::plotdata::{phi_data, regimes_data, zeros_data};
use cuspzeros_cli::scan::{cmd_scan, scan_pairs, summarize, PairResult, ReportRow, MAX_WEIGHT};
use cuspzeros_cli::table::{diffs, table_cells, wide_csv};
use cuspzeros_cli::{parse_point, Format, RunConfig, WeightRange};

#[derive(Parser)]
#[command(name = "cuspzeros", version, about = "Zeros of E_k E_l - E_{k+l} on the boundary of the fundamental domain")]
struct Cli {
    /// truncation target of the lattice sums
    #[arg(long, global = true, default_value_t = 1e-14)]
    eps: f64,
    /// scan grid points per unit of total weight
    #[arg(long, global = true, default_value_t = 16)]
    oversample: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// output file (stdout when omitted)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotKind {
    Phi,
    Zeros,
    Regimes,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate E_k and G_k at a point
    Eval {
        #[arg(long)]
        k: u32,
        /// e.g. i, rho, 0.5+3i
        #[arg(long)]
        z: String,
        #[arg(long, value_enum, default_value_t = Method::Lattice)]
        method: Method,
    },
    /// Reproduce table 1 (A), 2 (B) or 3 (A - N')
    Table { which: u8 },
    /// Audit every pair in the given weight ranges
    Scan {
        #[arg(long, default_value = "14..100")]
        l: WeightRange,
        #[arg(long, default_value = "14..100")]
        k: WeightRange,
        #[arg(long, default_value_t = MAX_WEIGHT)]
        max_weight: u32,
        /// skip the interior zero hunt
        #[arg(long)]
        no_interior: bool,
    },
    /// Audit one pair
    Audit {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
    },
    /// Data series for plotting
    Plotdata {
        #[arg(value_enum)]
        kind: PlotKind,
        #[arg(long, default_value_t = 56)]
        k: u32,
        #[arg(long, default_value_t = 20)]
        l: u32,
        #[arg(long, default_value_t = 0.5)]
        x: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
}

fn write_results(results: &[PairResult], cfg: &RunConfig) -> Result<()> {
    let bytes = match cfg.format {
        Format::Json => render(results, Format::Json)?,
        Format::Csv => render(&results.iter().map(ReportRow::from).collect::<Vec<_>>(), Format::Csv)?,
    };
    emit(&bytes, cfg.out.as_deref())
}

fn run(cli: Cli) -> Result<bool> {
    let cfg = RunConfig { eps: cli.eps, oversample: cli.oversample, format: cli.format, out: cli.out, jobs: cli.jobs };
    cfg.validate()?;
    match cli.command {
        Command::Eval { k, z, method } => {
            let (x, y) = parse_point(&z)?;
            let o = cmd_eval(k, x, y, method, cfg.eps)?;
            emit(&render(&o.rows, cfg.format)?, cfg.out.as_deref())?;
            if o.rows.len() > 1 {
                eprintln!("max pairwise deviation of G: {:e}", o.max_deviation);
            }
            Ok(true)
        }
        Command::Table { which } => {
            let cells = table_cells(which, &cfg)?;
            let bytes = match cfg.format {
                Format::Csv => wide_csv(&cells)?,
                Format::Json => render(&cells, Format::Json)?,
            };
            emit(&bytes, cfg.out.as_deref())?;
            let d = diffs(&cells);
            for c in &d {
                eprintln!("table {} (l={}, k={}): computed {}, published {}", c.table, c.l, c.k, c.value, c.expected);
            }
            Ok(d.is_empty())
        }
        Command::Scan { l, k, max_weight, no_interior } => {
            let pairs = scan_pairs(l, k, max_weight);
            let results = cmd_scan(&pairs, &cfg, !no_interior)?;
            write_results(&results, &cfg)?;
            let s = summarize(&results);
            eprintln!(
                "{} pairs: {} errors, {} valence failures, {} stabilised mismatches, {} interior findings, {} reported findings",
                s.pairs, s.errors, s.valence_failures, s.stabilized_mismatches, s.interior_findings, s.reported_findings
            );
            Ok(!s.failed())
        }
        Command::Audit { k, l } => {
            let wp = WeightPair::new(k, l)?;
            let results = cmd_scan(&[wp], &cfg, true)?;
            write_results(&results, &cfg)?;
            Ok(!summarize(&results).failed())
        }
        Command::Plotdata { kind, k, l, x, points } => {
            let bytes = match kind {
                PlotKind::Phi => render(&phi_data(points.max(2))?, cfg.format)?,
                PlotKind::Zeros => render(&zeros_data(WeightPair::new(k, l)?, &cfg.scan_config())?, cfg.format)?,
                PlotKind::Regimes => render(&regimes_data(k, x, points.max(2))?, cfg.format)?,
            };
            emit(&bytes, cfg.out.as_deref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
