//! `feedrag` -- how much of a portfolio annual fees consume, exactly and
//! approximately.
//!
//! Subcommands: `loss` (single-point report), `trajectory` (year-by-year
//! simulation from a returns CSV), `sweep` (accuracy region maps over an
//! `(eps, r)` grid), `figures` (regenerate the standard data files).
//!
//! Exit codes: 0 success, 1 domain or parse error, 2 usage or I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

use commands::RangeSpec;

#[derive(Parser)]
#[command(
    name = "feedrag",
    version,
    about = "Compounded investment losses to annual fees: exact values, quick estimates, accuracy maps",
    after_help = "All rates are decimal fractions per year: write 1% as 0.01, never as 1."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the exact loss and every estimate for one (r, eps, years) point
    Loss {
        /// Annual return as a fraction (0.10 = 10%/yr)
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
        /// Annual fee as a fraction (0.01 = 1%/yr)
        #[arg(long, allow_negative_numbers = true)]
        eps: f64,
        /// Number of compounding years
        #[arg(long)]
        years: u32,
    },
    /// Simulate with-fee and no-fee portfolios over a returns CSV
    Trajectory {
        /// Input CSV with a `year,return` header
        #[arg(long)]
        returns: PathBuf,
        /// Annual fee as a fraction
        #[arg(long, allow_negative_numbers = true)]
        eps: f64,
        /// Starting portfolio value
        #[arg(long, default_value_t = 100_000.0, allow_negative_numbers = true)]
        principal: f64,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Map where the n*eps estimate stays within tolerance, one CSV + SVG per
    /// (years, threshold) pair
    Sweep {
        /// Horizons to map, comma separated
        #[arg(long, value_delimiter = ',', default_values_t = vec![10u32, 30, 50])]
        n_list: Vec<u32>,
        /// Relative-error thresholds, comma separated
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.10, 0.25, 0.50])]
        theta_list: Vec<f64>,
        /// Fee axis as start:stop:steps
        #[arg(long, default_value = "0.0005:0.02:40")]
        eps_range: RangeSpec,
        /// Return axis as start:stop:steps
        #[arg(long, default_value = "0:0.15:31")]
        r_range: RangeSpec,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
    /// Regenerate the standard figure data files
    Figures {
        /// Directory of historical `year,return` CSVs (optional)
        #[arg(long)]
        data_dir: Option<PathBuf>,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Loss { r, eps, years } => commands::loss(r, eps, years),
        Command::Trajectory {
            returns,
            eps,
            principal,
            out,
        } => commands::trajectory(&returns, eps, principal, &out),
        Command::Sweep {
            n_list,
            theta_list,
            eps_range,
            r_range,
            out,
        } => commands::sweep(&n_list, &theta_list, &eps_range, &r_range, &out),
        Command::Figures { data_dir, out } => commands::figures(data_dir.as_deref(), &out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(commands::CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(commands::CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
