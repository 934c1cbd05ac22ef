//! Error type shared across the crate.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate: domain violations in the
/// compounding model, undefined accuracy metrics, and CSV parse failures.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A rate was NaN or infinite.
    #[error("rate must be a finite number, got {value}")]
    NonFiniteRate { value: f64 },

    /// A monetary amount was negative, NaN, or infinite.
    #[error("monetary amount must be finite and non-negative, got {value}")]
    InvalidMoney { value: f64 },

    /// The gross annual growth factor 1 + r must stay positive for the
    /// portfolio value to stay positive.
    #[error("gross annual rate 1 + r must be positive, got r = {rate}")]
    GrossRateNotPositive { rate: f64 },

    /// A single year of a return series would wipe out the portfolio once
    /// the fee is subtracted.
    #[error("year {label}: net gross rate 1 + {ret} - {fee} is not positive")]
    NetRateNotPositive { label: String, ret: f64, fee: f64 },

    /// A return series with no entries cannot be simulated.
    #[error("return series is empty")]
    EmptySeries,

    /// Year labels in a return series must be unique.
    #[error("duplicate year label `{label}`")]
    DuplicateYear { label: String },

    /// Relative error is |approx - true| / true, which is undefined when the
    /// true loss is zero (no fee or no compounding years).
    #[error("relative error undefined: true loss is zero at eps = {eps}, years = {years}")]
    RelativeErrorUndefined { eps: f64, years: u32 },

    /// A grid axis was empty.
    #[error("{axis} axis must not be empty")]
    EmptyAxis { axis: &'static str },

    /// Grid axes must be strictly increasing.
    #[error("{axis} axis must be strictly increasing (violated at index {index})")]
    AxisNotIncreasing { axis: &'static str, index: usize },

    /// A per-cell failure during a grid sweep, tagged with the coordinates
    /// of the offending cell.
    #[error("grid cell (r = {r}, eps = {eps}): {source}")]
    GridCell {
        r: f64,
        eps: f64,
        #[source]
        source: Box<Error>,
    },

    /// Grid and mask passed to an emitter do not share axes and threshold
    /// provenance.
    #[error("grid and mask axes do not match")]
    AxisMismatch,

    /// Malformed CSV content; `line` is 1-based.
    #[error("line {line}: {reason}")]
    CsvParse { line: usize, reason: String },

    /// The returns CSV had a header but no data rows.
    #[error("no data rows")]
    NoDataRows,

    /// A parsed annual return implies a non-positive gross rate.
    #[error(
        "line {line}: year {label} has return {value}, gross rate 1 + return must be positive"
    )]
    ReturnOutOfDomain {
        line: usize,
        label: String,
        value: f64,
    },

    /// Trajectory emission needs at least one point.
    #[error("trajectory has no points")]
    EmptyTrajectory,

    /// Trajectory simulation needs a positive starting value.
    #[error("principal must be positive, got {value}")]
    NonPositivePrincipal { value: f64 },
}
