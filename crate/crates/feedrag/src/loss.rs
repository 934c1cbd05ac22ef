//! True fractional loss to fees and its closed-form estimates.
//!
//! The exact loss compares two portfolios compounding side by side, one
//! paying an annual fee `eps` out of its return and one paying nothing:
//!
//! ```text
//! true_loss = 1 - ((1 + r - eps) / (1 + r))^n
//! ```
//!
//! The estimates trade accuracy for hand-computability:
//!
//! * first order: `n * eps`
//! * second order: `n*eps/(1+r) - n*(n-1)/2 * eps^2/(1+r)^2`
//! * improved first order: `n * eps * (1 - r)`

use crate::error::{Error, Result};
use crate::model::{compound_series, Horizon, Rate, ReturnSeries};

/// Exact fractional loss to an annual fee in the constant-rate model.
///
/// Evaluated as `-expm1(n * ln1p(-eps/(1+r)))`, which is the same quantity
/// as `1 - ((1+r-eps)/(1+r))^n` but keeps full relative precision when the
/// loss is tiny. Negative `eps` is allowed and yields a negative value: the
/// signed "loss" of a return *increase*, i.e. a gain.
pub fn true_loss_constant(r: Rate, eps: Rate, n: Horizon) -> Result<f64> {
    if r.gross() <= 0.0 {
        return Err(Error::GrossRateNotPositive { rate: r.value() });
    }
    let net = r.value() - eps.value();
    if 1.0 + net <= 0.0 {
        return Err(Error::GrossRateNotPositive { rate: net });
    }
    let fee_share = eps.value() / r.gross();
    Ok(match n.years() {
        0 => 0.0,
        // One year of drag is exactly the fee's share of the gross factor.
        1 => fee_share,
        years => -f64::exp_m1(f64::from(years) * f64::ln_1p(-fee_share)),
    })
}

/// Exact fractional loss to an annual fee for a historical return series:
/// `1 - compound_series(series, eps) / compound_series(series, 0)`.
pub fn true_loss_series(series: &ReturnSeries, eps: Rate) -> Result<f64> {
    let with_fee = compound_series(series, eps)?;
    let no_fee = compound_series(series, Rate::new(0.0)?)?;
    Ok(1.0 - with_fee / no_fee)
}

/// First-order loss estimate `n * eps`.
///
/// Unbounded: for `n * eps > 1` it predicts losing more than everything,
/// while the true loss saturates below 100%. That divergence is deliberate
/// and left unclamped so accuracy analysis can expose it.
pub fn first_order_loss(eps: Rate, n: Horizon) -> f64 {
    f64::from(n.years()) * eps.value()
}

/// Second-order loss estimate, the first-order term plus the leading
/// curvature correction:
/// `n*eps/(1+r) - n*(n-1)/2 * eps^2/(1+r)^2`.
pub fn second_order_loss(r: Rate, eps: Rate, n: Horizon) -> Result<f64> {
    if r.gross() <= 0.0 {
        return Err(Error::GrossRateNotPositive { rate: r.value() });
    }
    let years = f64::from(n.years());
    let fee_share = eps.value() / r.gross();
    Ok(years * fee_share - 0.5 * years * (years - 1.0) * fee_share * fee_share)
}

/// Improved first-order estimate `n * eps * (1 - r)`, still a two-factor
/// mental calculation but with lower relative error than `n * eps`.
pub fn improved_first_order_loss(r: Rate, eps: Rate, n: Horizon) -> f64 {
    f64::from(n.years()) * eps.value() * (1.0 - r.value())
}

/// First-order estimate of the fractional value *gained* from a return
/// increase of `eps`: numerically the same `n * eps`, read with the opposite
/// sign convention. Underestimates the true gain, where `n * eps`
/// overestimates the true loss.
pub fn first_order_gain(eps: Rate, n: Horizon) -> f64 {
    first_order_loss(eps, n)
}

/// The exact loss and every estimate for one `(r, eps, n)` point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossReport {
    pub r: Rate,
    pub eps: Rate,
    pub n: Horizon,
    pub true_loss: f64,
    pub first_order: f64,
    pub second_order: f64,
    pub improved_first_order: f64,
}

impl LossReport {
    pub fn constant(r: Rate, eps: Rate, n: Horizon) -> Result<Self> {
        Ok(LossReport {
            r,
            eps,
            n,
            true_loss: true_loss_constant(r, eps, n)?,
            first_order: first_order_loss(eps, n),
            second_order: second_order_loss(r, eps, n)?,
            improved_first_order: improved_first_order_loss(r, eps, n),
        })
    }
}
