//! Accuracy analysis for the `n * eps` loss estimate.
//!
//! The relative error `|estimate - true| / true` is computed numerically
//! against the exact loss, estimated analytically as `r + (n-1)*eps/2`, and
//! mapped over `(eps, r)` grids to classify where the estimate is usable at
//! a given tolerance.

use crate::error::{Error, Result};
use crate::loss::{first_order_loss, true_loss_constant};
use crate::model::{Horizon, Rate};

/// Relative error of the first-order estimate against the exact loss:
/// `|n*eps - true_loss| / true_loss`.
///
/// Undefined when the true loss is zero, i.e. at `eps = 0` or `n = 0`.
pub fn relative_error(r: Rate, eps: Rate, n: Horizon) -> Result<f64> {
    if eps.value() <= 0.0 || n.years() == 0 {
        return Err(Error::RelativeErrorUndefined {
            eps: eps.value(),
            years: n.years(),
        });
    }
    let true_loss = true_loss_constant(r, eps, n)?;
    let estimate = first_order_loss(eps, n);
    Ok((estimate - true_loss).abs() / true_loss)
}

/// Closed-form estimate of the relative error: `r + (n-1)*eps/2`.
///
/// Comes from replacing the exact loss with its second-order form, where the
/// first-order terms cancel in the numerator but dominate the denominator.
/// The `r` term here is what the improved `n*eps*(1-r)` estimate removes.
pub fn analytic_error_estimate(r: Rate, eps: Rate, n: Horizon) -> f64 {
    r.value() + (f64::from(n.years()) - 1.0) * eps.value() / 2.0
}

/// Relative-error values over a rectangular `(eps, r)` grid at fixed `n`.
///
/// `values` is row-major: one row per `r_axis` entry, one column per
/// `eps_axis` entry.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorGrid {
    eps_axis: Vec<Rate>,
    r_axis: Vec<Rate>,
    n: Horizon,
    values: Vec<f64>,
}

impl ErrorGrid {
    pub fn eps_axis(&self) -> &[Rate] {
        &self.eps_axis
    }

    pub fn r_axis(&self) -> &[Rate] {
        &self.r_axis
    }

    pub fn n(&self) -> Horizon {
        self.n
    }

    /// Value at row `i` (over `r_axis`) and column `j` (over `eps_axis`).
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.eps_axis.len() + j]
    }
}

/// Boolean acceptability classification of an [`ErrorGrid`] at a threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionMask {
    eps_axis: Vec<Rate>,
    r_axis: Vec<Rate>,
    n: Horizon,
    threshold: f64,
    cells: Vec<bool>,
}

impl RegionMask {
    pub fn eps_axis(&self) -> &[Rate] {
        &self.eps_axis
    }

    pub fn r_axis(&self) -> &[Rate] {
        &self.r_axis
    }

    pub fn n(&self) -> Horizon {
        self.n
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    /// Cell at row `i` (over `r_axis`) and column `j` (over `eps_axis`):
    /// `true` means the estimate is acceptable there.
    pub fn cell(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.eps_axis.len() + j]
    }

    pub fn accepted_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Whether every accepted cell of `self` is also accepted in `other`.
    /// Both masks must share axes.
    pub fn is_subset_of(&self, other: &RegionMask) -> bool {
        self.eps_axis == other.eps_axis
            && self.r_axis == other.r_axis
            && self.cells.iter().zip(&other.cells).all(|(a, b)| !a || *b)
    }
}

fn validate_axis(axis: &[Rate], name: &'static str) -> Result<()> {
    if axis.is_empty() {
        return Err(Error::EmptyAxis { axis: name });
    }
    for (index, pair) in axis.windows(2).enumerate() {
        if pair[1].value() <= pair[0].value() {
            return Err(Error::AxisNotIncreasing {
                axis: name,
                index: index + 1,
            });
        }
    }
    Ok(())
}

/// Evaluates [`relative_error`] at every grid point.
///
/// Cells are filled in deterministic row-major order; each cell is a pure
/// function of its coordinates, so the output never depends on evaluation
/// order. A failing cell aborts the sweep with its coordinates attached.
pub fn sweep_error_grid(eps_axis: &[Rate], r_axis: &[Rate], n: Horizon) -> Result<ErrorGrid> {
    validate_axis(eps_axis, "eps")?;
    validate_axis(r_axis, "r")?;
    let mut values = Vec::with_capacity(eps_axis.len() * r_axis.len());
    for &r in r_axis {
        for &eps in eps_axis {
            let value = relative_error(r, eps, n).map_err(|source| Error::GridCell {
                r: r.value(),
                eps: eps.value(),
                source: Box::new(source),
            })?;
            values.push(value);
        }
    }
    Ok(ErrorGrid {
        eps_axis: eps_axis.to_vec(),
        r_axis: r_axis.to_vec(),
        n,
        values,
    })
}

/// Classifies each grid cell as acceptable when its error is at or below
/// `theta` (inclusive).
pub fn classify_region(grid: &ErrorGrid, theta: f64) -> RegionMask {
    RegionMask {
        eps_axis: grid.eps_axis.clone(),
        r_axis: grid.r_axis.clone(),
        n: grid.n,
        threshold: theta,
        cells: grid.values.iter().map(|&v| v <= theta).collect(),
    }
}

/// A point on the analytic acceptability boundary in the `(eps, r)` plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    pub eps: f64,
    pub r: f64,
}

/// The curve where the analytic error estimate equals `theta`:
/// `r = theta - (n-1)*eps/2` evaluated at each `eps_axis` value. Points that
/// would fall below `r = 0` are omitted.
pub fn analytic_boundary(n: Horizon, theta: f64, eps_axis: &[Rate]) -> Vec<BoundaryPoint> {
    eps_axis
        .iter()
        .filter_map(|&eps| {
            let r = theta - (f64::from(n.years()) - 1.0) * eps.value() / 2.0;
            (r >= 0.0).then_some(BoundaryPoint {
                eps: eps.value(),
                r,
            })
        })
        .collect()
}
