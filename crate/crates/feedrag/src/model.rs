//! Domain types and the exact compounding engine.
//!
//! Rates are dimensionless per-year fractions (0.01 means 1%/yr), never
//! percent points. Compounding is annual only; fees are subtracted from each
//! year's return (net rate r - eps), not applied multiplicatively.

use crate::error::{Error, Result};

/// A dimensionless per-year fractional rate, e.g. `0.10` for 10%/yr.
///
/// Used for both annual returns and annual fees. Construction only requires
/// finiteness; the positivity of the gross factor `1 + value` is checked at
/// the point of use, because a fee of 0.02 is a fine `Rate` even though a
/// *return* of -1.02 is not.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Rate(f64);

impl Rate {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Rate(value))
        } else {
            Err(Error::NonFiniteRate { value })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The gross annual growth factor `1 + value`.
    pub fn gross(self) -> f64 {
        1.0 + self.0
    }
}

/// A whole number of compounding years. Fractional years are not a thing in
/// this model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Horizon(pub u32);

impl Horizon {
    pub fn years(self) -> u32 {
        self.0
    }
}

/// A non-negative amount in currency units. Carried as floating point; this
/// is an analytical tool, not an accounting ledger.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Money(f64);

impl Money {
    pub fn new(amount: f64) -> Result<Self> {
        if amount.is_finite() && amount >= 0.0 {
            Ok(Money(amount))
        } else {
            Err(Error::InvalidMoney { value: amount })
        }
    }

    pub fn amount(self) -> f64 {
        self.0
    }

    /// Internal constructor for values already known to be valid
    /// (e.g. products of positive gross factors).
    pub(crate) fn from_valid(amount: f64) -> Self {
        debug_assert!(amount.is_finite() && amount >= 0.0);
        Money(amount)
    }
}

/// One year of a return series: a label (typically the calendar year) and
/// the annual fractional return.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesEntry {
    pub label: String,
    pub ret: Rate,
}

/// An ordered list of labelled annual returns.
///
/// Labels must be unique; order is whatever the caller supplied (file order
/// for parsed CSVs). The series may be empty at construction, but simulation
/// rejects empty input.
#[derive(Debug, Clone, PartialEq)]
pub struct ReturnSeries {
    entries: Vec<SeriesEntry>,
}

impl ReturnSeries {
    pub fn new(entries: Vec<SeriesEntry>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for entry in &entries {
            if !seen.insert(entry.label.as_str()) {
                return Err(Error::DuplicateYear {
                    label: entry.label.clone(),
                });
            }
        }
        Ok(ReturnSeries { entries })
    }

    /// Builds a series from `(label, return)` pairs.
    pub fn from_pairs<I, S>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
    {
        let entries = pairs
            .into_iter()
            .map(|(label, ret)| {
                Ok(SeriesEntry {
                    label: label.into(),
                    ret: Rate::new(ret)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ReturnSeries::new(entries)
    }

    /// A constant-rate series of `years` entries labelled "1", "2", ...
    /// Handy for synthetic scenarios and for checking the constant-rate
    /// closed form against the series path.
    pub fn constant(rate: Rate, years: u32) -> Self {
        let entries = (1..=years)
            .map(|y| SeriesEntry {
                label: y.to_string(),
                ret: rate,
            })
            .collect();
        ReturnSeries { entries }
    }

    pub fn entries(&self) -> &[SeriesEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Growth multiplier after `n` years at constant annual rate `r`:
/// `(1 + r)^n`.
pub fn compound_constant(r: Rate, n: Horizon) -> Result<f64> {
    if r.gross() <= 0.0 {
        return Err(Error::GrossRateNotPositive { rate: r.value() });
    }
    Ok(r.gross().powi(n.years() as i32))
}

/// Growth multiplier for a return series with an annual fee subtracted from
/// each year's return: the product of `1 + ret_i - fee` over all entries.
///
/// A zero fee gives the raw no-fee multiplier. Fails, naming the year, if
/// any single year's net gross rate would be non-positive.
pub fn compound_series(series: &ReturnSeries, fee: Rate) -> Result<f64> {
    if series.is_empty() {
        return Err(Error::EmptySeries);
    }
    let mut multiplier = 1.0;
    for entry in series.entries() {
        let net_gross = 1.0 + entry.ret.value() - fee.value();
        if net_gross <= 0.0 {
            return Err(Error::NetRateNotPositive {
                label: entry.label.clone(),
                ret: entry.ret.value(),
                fee: fee.value(),
            });
        }
        multiplier *= net_gross;
    }
    Ok(multiplier)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rate(v: f64) -> Rate {
        Rate::new(v).unwrap()
    }

    #[test]
    fn rate_rejects_non_finite() {
        assert!(Rate::new(f64::NAN).is_err());
        assert!(Rate::new(f64::INFINITY).is_err());
        assert!(Rate::new(-0.99).is_ok());
    }

    #[test]
    fn money_rejects_negative() {
        assert!(Money::new(-1.0).is_err());
        assert!(Money::new(f64::NAN).is_err());
        assert_eq!(Money::new(0.0).unwrap().amount(), 0.0);
    }

    #[test]
    fn series_rejects_duplicate_labels() {
        let err = ReturnSeries::from_pairs([("1991", 0.1), ("1991", 0.2)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateYear { label } if label == "1991"));
    }

    #[test]
    fn compound_constant_zero_rate_is_identity() {
        assert_eq!(compound_constant(rate(0.0), Horizon(30)).unwrap(), 1.0);
    }

    #[test]
    fn compound_constant_zero_horizon_is_identity() {
        assert_eq!(compound_constant(rate(0.10), Horizon(0)).unwrap(), 1.0);
    }

    #[test]
    fn compound_constant_matches_iterative_oracle() {
        // 30-step iterative multiplication gives 17.449402268886445.
        let got = compound_constant(rate(0.10), Horizon(30)).unwrap();
        assert!((got - 17.4494).abs() < 1e-3, "got {got}");
        let mut oracle = 1.0;
        for _ in 0..30 {
            oracle *= 1.10;
        }
        assert!(
            (got - oracle).abs() / oracle < 1e-12,
            "closed form {got} vs oracle {oracle}"
        );
    }

    #[test]
    fn compound_constant_rejects_non_positive_gross() {
        assert!(compound_constant(rate(-1.5), Horizon(10)).is_err());
        assert!(compound_constant(rate(-1.0), Horizon(10)).is_err());
    }

    #[test]
    fn compound_series_constant_matches_constant() {
        let series = ReturnSeries::constant(rate(0.10), 3);
        let got = compound_series(&series, rate(0.0)).unwrap();
        assert!((got - 1.331).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn compound_series_hand_products() {
        let series = ReturnSeries::from_pairs([("1", 0.05), ("2", -0.03)]).unwrap();
        let no_fee = compound_series(&series, rate(0.0)).unwrap();
        assert!((no_fee - 1.0185).abs() < 1e-12, "got {no_fee}");
        let with_fee = compound_series(&series, rate(0.01)).unwrap();
        assert!((with_fee - 0.9984).abs() < 1e-5, "got {with_fee}");
    }

    #[test]
    fn compound_series_names_offending_year() {
        let series = ReturnSeries::from_pairs([("1990", 0.05), ("1991", -0.995)]).unwrap();
        let err = compound_series(&series, rate(0.01)).unwrap_err();
        assert!(matches!(err, Error::NetRateNotPositive { ref label, .. } if label == "1991"));
        assert!(err.to_string().contains("1991"));
    }

    #[test]
    fn compound_series_rejects_empty() {
        let series = ReturnSeries::new(vec![]).unwrap();
        assert!(matches!(
            compound_series(&series, rate(0.0)),
            Err(Error::EmptySeries)
        ));
    }
}
