//! Implementations of the four subcommands.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use feedrag::accuracy::{
    analytic_boundary, analytic_error_estimate, classify_region, relative_error, sweep_error_grid,
};
use feedrag::data::{
    emit_grid_csv, emit_region_svg, emit_trajectory_csv, parse_returns_csv, plausibility_warnings,
    run_trajectory,
};
use feedrag::loss::LossReport;
use feedrag::{Horizon, Money, Rate, ReturnSeries};

/// Figure-style defaults: $100k principal and a 1% annual fee.
const DEFAULT_PRINCIPAL: f64 = 100_000.0;
const FIGURE_FEE: f64 = 0.01;
const FIGURE_RETURN: f64 = 0.10;
const FIGURE_YEARS: u32 = 100;

pub enum CliError {
    /// Model or data error: exit code 1.
    Domain(feedrag::Error),
    /// Filesystem error: exit code 2.
    Io(std::io::Error),
}

impl From<feedrag::Error> for CliError {
    fn from(e: feedrag::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// An axis given as `start:stop:steps`, expanded to `steps` evenly spaced
/// points including both endpoints (`steps = 1` yields just `start`).
#[derive(Debug, Clone, PartialEq)]
pub struct RangeSpec {
    start: f64,
    stop: f64,
    steps: usize,
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("`{s}` is not of the form start:stop:steps"));
        }
        let start: f64 = parts[0]
            .parse()
            .map_err(|_| format!("`{}` is not a number", parts[0]))?;
        let stop: f64 = parts[1]
            .parse()
            .map_err(|_| format!("`{}` is not a number", parts[1]))?;
        let steps: usize = parts[2]
            .parse()
            .map_err(|_| format!("`{}` is not a step count", parts[2]))?;
        if !start.is_finite() || !stop.is_finite() {
            return Err(format!("`{s}` has non-finite endpoints"));
        }
        if steps < 1 {
            return Err("steps must be at least 1".to_string());
        }
        if stop < start {
            return Err(format!("stop {stop} is below start {start}"));
        }
        Ok(RangeSpec { start, stop, steps })
    }
}

impl fmt::Display for RangeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.steps)
    }
}

impl RangeSpec {
    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        (0..self.steps)
            .map(|i| self.start + (self.stop - self.start) * i as f64 / (self.steps - 1) as f64)
            .collect()
    }
}

fn rates(values: &[f64]) -> Result<Vec<Rate>, feedrag::Error> {
    values.iter().map(|&v| Rate::new(v)).collect()
}

/// The 1-means-100% trap: a rate flag above 1 is almost always a percent
/// typed as a fraction.
fn warn_fraction_convention(flag: &str, value: f64) {
    if value > 1.0 {
        eprintln!(
            "warning: --{flag} {value} is above 1.0 -- rates are decimal fractions \
             (1% is 0.01, not 1); interpreting literally"
        );
    }
}

fn percent_line(label: &str, fraction: f64) -> String {
    format!(
        "{label:<22} {:>8.2}%   (fraction {fraction:.10})",
        fraction * 100.0
    )
}

pub fn loss(r: f64, eps: f64, years: u32) -> Result<(), CliError> {
    warn_fraction_convention("r", r);
    warn_fraction_convention("eps", eps);
    let r = Rate::new(r)?;
    let eps = Rate::new(eps)?;
    let n = Horizon(years);

    let report = LossReport::constant(r, eps, n)?;
    println!(
        "fee drag at r={}, eps={}, years={}",
        r.value(),
        eps.value(),
        years
    );
    println!("{}", percent_line("true loss", report.true_loss));
    println!("{}", percent_line("first-order n*eps", report.first_order));
    println!("{}", percent_line("second-order", report.second_order));
    println!(
        "{}",
        percent_line("improved n*eps*(1-r)", report.improved_first_order)
    );
    match relative_error(r, eps, n) {
        Ok(err) => println!("{}", percent_line("relative error", err)),
        Err(feedrag::Error::RelativeErrorUndefined { .. }) => {
            println!("{:<22} undefined (true loss is zero)", "relative error");
        }
        Err(e) => return Err(e.into()),
    }
    if years >= 1 {
        println!(
            "{}",
            percent_line("analytic estimate", analytic_error_estimate(r, eps, n))
        );
    } else {
        println!(
            "{:<22} undefined (needs at least one year)",
            "analytic estimate"
        );
    }
    Ok(())
}

pub fn trajectory(
    returns_path: &Path,
    eps: f64,
    principal: f64,
    out_path: &Path,
) -> Result<(), CliError> {
    warn_fraction_convention("eps", eps);
    let text = fs::read_to_string(returns_path)?;
    let series = parse_returns_csv(&text)?;
    for warning in plausibility_warnings(&series) {
        eprintln!("warning: {warning}");
    }

    let fee = Rate::new(eps)?;
    let points = run_trajectory(Money::new(principal)?, &series, fee)?;
    fs::write(out_path, emit_trajectory_csv(&points)?)?;

    let last = points.last().expect("trajectory is never empty");
    println!("wrote {} ({} points)", out_path.display(), points.len());
    println!("final value without fee: {:.2}", last.value_no_fee.amount());
    println!(
        "final value with fee:    {:.2}",
        last.value_with_fee.amount()
    );
    println!(
        "dollar loss:             {:.2}",
        last.value_no_fee.amount() - last.value_with_fee.amount()
    );
    println!("{}", percent_line("loss", last.loss_fraction));
    println!(
        "{}",
        percent_line("first-order prediction", last.l1_prediction)
    );
    Ok(())
}

/// Writes one CSV + SVG pair per (n, theta) into `out_dir`, named
/// `<prefix>_N<n>_theta<theta>.{csv,svg}`. Returns the file names written.
fn write_sweep_files(
    prefix: &str,
    n_list: &[u32],
    theta_list: &[f64],
    eps_axis: &[Rate],
    r_axis: &[Rate],
    out_dir: &Path,
) -> Result<Vec<String>, CliError> {
    let mut written = Vec::new();
    for &n in n_list {
        let grid = sweep_error_grid(eps_axis, r_axis, Horizon(n))?;
        for &theta in theta_list {
            let mask = classify_region(&grid, theta);
            let boundary = analytic_boundary(Horizon(n), theta, eps_axis);
            let stem = format!("{prefix}_N{n}_theta{theta}");
            let csv_name = format!("{stem}.csv");
            let svg_name = format!("{stem}.svg");
            fs::write(
                out_dir.join(&csv_name),
                emit_grid_csv(&grid, &mask, &boundary)?,
            )?;
            fs::write(
                out_dir.join(&svg_name),
                emit_region_svg(&grid, &mask, &boundary)?,
            )?;
            written.push(csv_name);
            written.push(svg_name);
        }
    }
    Ok(written)
}

pub fn sweep(
    n_list: &[u32],
    theta_list: &[f64],
    eps_range: &RangeSpec,
    r_range: &RangeSpec,
    out_dir: &Path,
) -> Result<(), CliError> {
    fs::create_dir_all(out_dir)?;
    let eps_axis = rates(&eps_range.points())?;
    let r_axis = rates(&r_range.points())?;
    let written = write_sweep_files("grid", n_list, theta_list, &eps_axis, &r_axis, out_dir)?;
    println!("wrote {} files to {}", written.len(), out_dir.display());
    for name in written {
        println!("  {name}");
    }
    Ok(())
}

pub fn figures(data_dir: Option<&Path>, out_dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(out_dir)?;

    // Constant-rate century run: the estimate crosses 100% predicted loss
    // while the exact loss saturates.
    let series = ReturnSeries::constant(Rate::new(FIGURE_RETURN)?, FIGURE_YEARS);
    let points = run_trajectory(
        Money::new(DEFAULT_PRINCIPAL)?,
        &series,
        Rate::new(FIGURE_FEE)?,
    )?;
    let fig2 = out_dir.join("fig2_trajectory.csv");
    fs::write(&fig2, emit_trajectory_csv(&points)?)?;
    println!("wrote {}", fig2.display());

    // Default accuracy maps.
    let eps_axis = rates(&RangeSpec::from_str("0.0005:0.02:40").unwrap().points())?;
    let r_axis = rates(&RangeSpec::from_str("0:0.15:31").unwrap().points())?;
    let written = write_sweep_files(
        "fig3_grid",
        &[10, 30, 50],
        &[0.10, 0.25, 0.50],
        &eps_axis,
        &r_axis,
        out_dir,
    )?;
    println!(
        "wrote {} fig3 files to {}",
        written.len(),
        out_dir.display()
    );

    // Historical trajectories, one per supplied CSV.
    let mut csv_paths = Vec::new();
    if let Some(dir) = data_dir {
        if dir.is_dir() {
            for entry in fs::read_dir(dir)? {
                let path = entry?.path();
                if path.extension().is_some_and(|ext| ext == "csv") {
                    csv_paths.push(path);
                }
            }
            csv_paths.sort();
        }
    }
    if csv_paths.is_empty() {
        println!(
            "note: no historical return CSVs supplied; market-data trajectories \
             need user-provided `year,return` files (pass --data-dir)"
        );
        return Ok(());
    }
    for path in csv_paths {
        let text = fs::read_to_string(&path)?;
        let series = parse_returns_csv(&text)?;
        for warning in plausibility_warnings(&series) {
            eprintln!("warning: {}: {warning}", path.display());
        }
        let points = run_trajectory(
            Money::new(DEFAULT_PRINCIPAL)?,
            &series,
            Rate::new(FIGURE_FEE)?,
        )?;
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "data".to_string());
        let out = out_dir.join(format!("fig1_{stem}_trajectory.csv"));
        fs::write(&out, emit_trajectory_csv(&points)?)?;
        println!("wrote {}", out.display());
    }
    Ok(())
}
