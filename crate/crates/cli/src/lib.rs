//! Command-line front end for the `penergy` library.

pub mod commands;
pub mod ingest;
pub mod output;
pub mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use penergy::bounds::Grid;
use penergy::graph::Family;

pub use ingest::{ingest_graph6, IngestOptions, Ingested, LineError};
pub use output::Report;
pub use spec::GraphSpec;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VIOLATION: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const NOT_CONVERGED: i32 = 3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Integral,
    Both,
}

#[derive(Debug, Parser)]
#[command(
    name = "penergy",
    version,
    about = "Graph p-energies, integral formulas and bound checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write data to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Absolute quadrature tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Worker threads for `gen` and `verify` (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// p-energy from the adjacency spectrum.
    Energy {
        graph: GraphSpec,
        #[arg(long)]
        p: f64,
    },
    /// p-energy (0 < p < 2) by numerical integration.
    EnergyIntegral {
        graph: GraphSpec,
        #[arg(long)]
        p: f64,
    },
    /// E_p(G1) - E_p(G2), directly and by the difference integrals.
    Compare {
        g1: GraphSpec,
        g2: GraphSpec,
        #[arg(long)]
        p: f64,
        /// Even radix for p > 2 (default: the smallest even integer above p).
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Every applicable spectral bound on one connected graph.
    Bounds {
        graph: GraphSpec,
        /// Exponents: p > 2 for the upper bounds, 1 <= p <= 2 for the
        /// bipartite lower bound (default: 2.5,3,4 and 1,1.5,2).
        #[arg(long, value_delimiter = ',')]
        p: Vec<f64>,
    },
    /// |f(ix)| >= x^(n-2) (x^2 + n - 1) over a grid and at x = 0.
    Claim {
        graph: GraphSpec,
        #[arg(long)]
        grid: Option<Grid>,
    },
    /// min over the grid of |psi_1(ix)| - |psi_2(ix)|.
    Probe16 {
        g1: GraphSpec,
        g2: GraphSpec,
        #[arg(long, default_value_t = 4)]
        r: u32,
        #[arg(long)]
        grid: Option<Grid>,
    },
    /// All connected graphs of order n as graph6 lines.
    Gen {
        #[arg(long)]
        n: usize,
    },
    /// Checks that the target family minimizes E_p over a corpus.
    Verify {
        /// Order of the generated corpus, or the required order of --in.
        #[arg(long)]
        n: Option<usize>,
        /// graph6 corpus instead of the generated one.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        p: Vec<f64>,
        #[arg(long, default_value = "star")]
        target: Family,
        #[arg(long)]
        skip_bad_lines: bool,
    },
    /// Samples of the weighted log-ratio integrand as `z,integrand`.
    Integrand {
        g1: GraphSpec,
        g2: GraphSpec,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        grid: Option<Grid>,
    },
}

/// Parses `args` (including the program name), runs the command and writes
/// its report. Returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
        }
    };
    match execute(&cli) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("penergy: {e}");
            exit::USAGE
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(CliError::Usage(format!(
            "--tol must be positive, got {}",
            cli.tol
        )));
    }
    if cli.jobs == Some(0) {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    if let Command::Gen { n } = cli.command {
        let mut sink = output::sink(cli.out.as_deref())?;
        commands::gen(n, cli.jobs, &mut sink)?;
        sink.flush()?;
        return Ok(exit::OK);
    }
    let report = commands::dispatch(cli)?;
    let format = cli.format.unwrap_or(match cli.command {
        Command::Integrand { .. } => Format::Csv,
        _ => Format::Json,
    });
    let mut sink = output::sink(cli.out.as_deref())?;
    report.write(format, &mut sink)?;
    sink.flush()?;
    Ok(report.status())
}
