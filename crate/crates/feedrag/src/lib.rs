//! How much of a portfolio do recurring annual fees actually consume?
//!
//! This crate compounds two portfolios side by side -- one paying an annual
//! fee out of its return, one paying nothing -- and compares the exact
//! fractional loss against quick closed-form estimates, the headline one
//! being `n * eps` (fee times years). It also maps where in `(fee, return,
//! years)` space those estimates stay within a chosen relative-error
//! tolerance.
//!
//! * [`model`] -- rates, horizons, return series, and the compounding engine.
//! * [`loss`] -- exact losses and the first/second-order estimates.
//! * [`accuracy`] -- relative error, its closed-form estimate, grid sweeps,
//!   and acceptability region masks.
//! * [`data`] -- returns-CSV ingestion, trajectory runs, and plot-ready
//!   CSV/SVG output.
//!
//! All rates are decimal fractions per year (0.01 means 1%/yr), horizons are
//! whole years, and everything is plain `f64`.
//!
//! ```
//! use feedrag::accuracy::relative_error;
//! use feedrag::loss::{first_order_loss, true_loss_constant};
//! use feedrag::{Horizon, Rate};
//!
//! let r = Rate::new(0.10)?;
//! let eps = Rate::new(0.01)?;
//! let n = Horizon(30);
//!
//! let exact = true_loss_constant(r, eps, n)?;
//! let quick = first_order_loss(eps, n);
//! assert!((quick - 0.30).abs() < 1e-12);
//! assert!(exact < quick && exact > 0.23);
//! assert!(relative_error(r, eps, n)? < 0.26);
//! # Ok::<(), feedrag::Error>(())
//! ```

pub mod accuracy;
pub mod data;
pub mod error;
pub mod loss;
pub mod model;

pub use error::{Error, Result};
pub use model::{Horizon, Money, Rate, ReturnSeries, SeriesEntry};
