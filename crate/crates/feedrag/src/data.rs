//! Returns-CSV ingestion, with-fee/without-fee trajectories, and plot-ready
//! serialization of trajectories, error grids, and region maps.
//!
//! Input CSV schema: a `year,return` header, then one `<label>,<fraction>`
//! row per year. Returns are decimal fractions (0.0762 = 7.62%), `#` lines
//! are comments, LF and CRLF both work. All emitted numbers use `.` as the
//! decimal separator regardless of locale and print with full round-trip
//! precision.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::accuracy::{BoundaryPoint, ErrorGrid, RegionMask};
use crate::error::{Error, Result};
use crate::model::{Money, Rate, ReturnSeries, SeriesEntry};

/// One year of a side-by-side portfolio simulation.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryPoint {
    pub year_index: usize,
    pub year_label: String,
    pub value_no_fee: Money,
    pub value_with_fee: Money,
    /// Realized fractional loss so far: `1 - value_with_fee / value_no_fee`.
    pub loss_fraction: f64,
    /// The first-order prediction at this point: `year_index * fee`.
    pub l1_prediction: f64,
}

/// Parses a returns CSV (see the module docs for the schema).
///
/// Rows are returned in file order. Fails with a 1-based line number for
/// malformed rows, with the year label for returns at or below -1 (the
/// portfolio would be wiped out), and on duplicate year labels.
pub fn parse_returns_csv(text: &str) -> Result<ReturnSeries> {
    let mut entries: Vec<SeriesEntry> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut header_seen = false;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if !header_seen {
            if content != "year,return" {
                return Err(Error::CsvParse {
                    line,
                    reason: format!("expected header `year,return`, found `{content}`"),
                });
            }
            header_seen = true;
            continue;
        }

        let (label, value) = content.split_once(',').ok_or_else(|| Error::CsvParse {
            line,
            reason: "expected `<year>,<return>`".to_string(),
        })?;
        let label = label.trim();
        if label.is_empty() {
            return Err(Error::CsvParse {
                line,
                reason: "empty year label".to_string(),
            });
        }
        let ret: f64 = value.trim().parse().map_err(|_| Error::CsvParse {
            line,
            reason: format!("`{}` is not a number", value.trim()),
        })?;
        if !ret.is_finite() {
            return Err(Error::CsvParse {
                line,
                reason: format!("return `{ret}` is not finite"),
            });
        }
        if ret <= -1.0 {
            return Err(Error::ReturnOutOfDomain {
                line,
                label: label.to_string(),
                value: ret,
            });
        }
        if !seen.insert(label.to_string()) {
            return Err(Error::DuplicateYear {
                label: label.to_string(),
            });
        }
        entries.push(SeriesEntry {
            label: label.to_string(),
            ret: Rate::new(ret)?,
        });
    }

    if !header_seen {
        return Err(Error::CsvParse {
            line: 1,
            reason: "missing `year,return` header".to_string(),
        });
    }
    if entries.is_empty() {
        return Err(Error::NoDataRows);
    }
    ReturnSeries::new(entries)
}

/// Serializes a return series back to the input CSV schema.
pub fn emit_returns_csv(series: &ReturnSeries) -> String {
    let mut out = String::from("year,return\n");
    for entry in series.entries() {
        let _ = writeln!(out, "{},{}", entry.label, entry.ret.value());
    }
    out
}

/// Flags returns that look like percent points typed as fractions.
///
/// A +305% year is legal but implausible; the caller decides whether to
/// surface these as warnings. The parse itself never rejects them.
pub fn plausibility_warnings(series: &ReturnSeries) -> Vec<String> {
    series
        .entries()
        .iter()
        .filter(|e| e.ret.value() > 1.0)
        .map(|e| {
            format!(
                "year {}: return {} is above 1.0 -- returns are decimal fractions \
                 (0.30 means 30%), not percent points",
                e.label,
                e.ret.value()
            )
        })
        .collect()
}

/// Runs the two portfolios through the series: point 0 is the principal in
/// both, point k holds both values after k years, the realized loss, and the
/// `k * fee` prediction.
pub fn run_trajectory(
    principal: Money,
    series: &ReturnSeries,
    fee: Rate,
) -> Result<Vec<TrajectoryPoint>> {
    if principal.amount() <= 0.0 {
        return Err(Error::NonPositivePrincipal {
            value: principal.amount(),
        });
    }
    if series.is_empty() {
        return Err(Error::EmptySeries);
    }

    let mut points = Vec::with_capacity(series.len() + 1);
    points.push(TrajectoryPoint {
        year_index: 0,
        year_label: "start".to_string(),
        value_no_fee: principal,
        value_with_fee: principal,
        loss_fraction: 0.0,
        l1_prediction: 0.0,
    });

    let mut no_fee = principal.amount();
    let mut with_fee = principal.amount();
    for (k, entry) in series.entries().iter().enumerate() {
        let net_gross = 1.0 + entry.ret.value() - fee.value();
        if net_gross <= 0.0 {
            return Err(Error::NetRateNotPositive {
                label: entry.label.clone(),
                ret: entry.ret.value(),
                fee: fee.value(),
            });
        }
        no_fee *= entry.ret.gross();
        with_fee *= net_gross;
        points.push(TrajectoryPoint {
            year_index: k + 1,
            year_label: entry.label.clone(),
            value_no_fee: Money::from_valid(no_fee),
            value_with_fee: Money::from_valid(with_fee),
            loss_fraction: 1.0 - with_fee / no_fee,
            l1_prediction: (k + 1) as f64 * fee.value(),
        });
    }
    Ok(points)
}

/// Serializes a trajectory to CSV, one row per point, full precision.
pub fn emit_trajectory_csv(points: &[TrajectoryPoint]) -> Result<String> {
    if points.is_empty() {
        return Err(Error::EmptyTrajectory);
    }
    let mut out = String::from(
        "year_index,year_label,value_no_fee,value_with_fee,loss_fraction,l1_prediction\n",
    );
    for p in points {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            p.year_index,
            p.year_label,
            p.value_no_fee.amount(),
            p.value_with_fee.amount(),
            p.loss_fraction,
            p.l1_prediction
        );
    }
    Ok(out)
}

fn check_shared_axes(grid: &ErrorGrid, mask: &RegionMask) -> Result<()> {
    if grid.eps_axis() != mask.eps_axis() || grid.r_axis() != mask.r_axis() || grid.n() != mask.n()
    {
        return Err(Error::AxisMismatch);
    }
    Ok(())
}

/// Looks up the boundary r at a given eps; boundary points come from the
/// same axis values, so exact comparison is the right match.
fn boundary_r_at(boundary: &[BoundaryPoint], eps: f64) -> Option<f64> {
    boundary
        .iter()
        .find(|p| p.eps.to_bits() == eps.to_bits())
        .map(|p| p.r)
}

/// Serializes a grid, its mask, and the analytic boundary in long format:
/// `n,eps,r,error,acceptable,boundary_r`, one row per cell, row-major.
/// `boundary_r` is empty where the boundary clips below r = 0.
pub fn emit_grid_csv(
    grid: &ErrorGrid,
    mask: &RegionMask,
    boundary: &[BoundaryPoint],
) -> Result<String> {
    check_shared_axes(grid, mask)?;
    let mut out = String::from("n,eps,r,error,acceptable,boundary_r\n");
    for (i, r) in grid.r_axis().iter().enumerate() {
        for (j, eps) in grid.eps_axis().iter().enumerate() {
            let boundary_r = boundary_r_at(boundary, eps.value())
                .map(|r| r.to_string())
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                grid.n().years(),
                eps.value(),
                r.value(),
                grid.value(i, j),
                mask.cell(i, j),
                boundary_r
            );
        }
    }
    Ok(out)
}

// SVG layout constants. Plot coordinates are fixed to two decimals so the
// output is byte-stable.
const SVG_WIDTH: f64 = 560.0;
const SVG_HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 55.0;

/// Half-widths of the cells around each axis value: midpoints between
/// neighbours, edge cells extended by the adjacent half-gap. A one-point
/// axis gets a nominal half-width so its cell is visible.
fn cell_edges(axis: &[Rate]) -> Vec<(f64, f64)> {
    let vals: Vec<f64> = axis.iter().map(|r| r.value()).collect();
    if vals.len() == 1 {
        let half = 0.05 * vals[0].abs().max(0.01);
        return vec![(vals[0] - half, vals[0] + half)];
    }
    (0..vals.len())
        .map(|i| {
            let lo = if i == 0 {
                vals[0] - (vals[1] - vals[0]) / 2.0
            } else {
                (vals[i - 1] + vals[i]) / 2.0
            };
            let hi = if i == vals.len() - 1 {
                vals[i] + (vals[i] - vals[i - 1]) / 2.0
            } else {
                (vals[i] + vals[i + 1]) / 2.0
            };
            (lo, hi)
        })
        .collect()
}

/// Renders the region map as a standalone SVG: grey rectangles for the
/// acceptable cells, a black polyline for the analytic boundary, and red
/// reference markers at (eps 1%, r 10%) and (eps 0.5%, r 10%) when those
/// fall inside the plotted domain.
pub fn emit_region_svg(
    grid: &ErrorGrid,
    mask: &RegionMask,
    boundary: &[BoundaryPoint],
) -> Result<String> {
    check_shared_axes(grid, mask)?;

    let eps_edges = cell_edges(grid.eps_axis());
    let r_edges = cell_edges(grid.r_axis());
    let (x_lo, x_hi) = (eps_edges[0].0, eps_edges[eps_edges.len() - 1].1);
    let (y_lo, y_hi) = (r_edges[0].0, r_edges[r_edges.len() - 1].1);

    let plot_w = SVG_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = SVG_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |eps: f64| MARGIN_LEFT + (eps - x_lo) / (x_hi - x_lo) * plot_w;
    // r grows upward, SVG y grows downward.
    let py = |r: f64| MARGIN_TOP + (y_hi - r) / (y_hi - y_lo) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="20" font-family="monospace" font-size="14">acceptable region: N={} threshold={}</text>"#,
        MARGIN_LEFT,
        grid.n().years(),
        mask.threshold()
    );

    // Acceptable cells.
    for (i, re) in r_edges.iter().enumerate() {
        for (j, ee) in eps_edges.iter().enumerate() {
            if mask.cell(i, j) {
                let _ = writeln!(
                    svg,
                    r##"<rect class="cell" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="#c0c0c0"/>"##,
                    px(ee.0),
                    py(re.1),
                    px(ee.1) - px(ee.0),
                    py(re.0) - py(re.1)
                );
            }
        }
    }

    // Analytic boundary, restricted to the plotted r span.
    let visible: Vec<&BoundaryPoint> = boundary
        .iter()
        .filter(|p| p.r >= y_lo && p.r <= y_hi && p.eps >= x_lo && p.eps <= x_hi)
        .collect();
    if visible.len() >= 2 {
        let pts: Vec<String> = visible
            .iter()
            .map(|p| format!("{:.2},{:.2}", px(p.eps), py(p.r)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline class="boundary" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            pts.join(" ")
        );
    }

    // Typical-investor reference markers.
    let square = (0.01, 0.10);
    if square.0 >= x_lo && square.0 <= x_hi && square.1 >= y_lo && square.1 <= y_hi {
        let _ = writeln!(
            svg,
            r#"<rect class="marker" x="{:.2}" y="{:.2}" width="8" height="8" fill="red"/>"#,
            px(square.0) - 4.0,
            py(square.1) - 4.0
        );
    }
    let circle = (0.005, 0.10);
    if circle.0 >= x_lo && circle.0 <= x_hi && circle.1 >= y_lo && circle.1 <= y_hi {
        let _ = writeln!(
            svg,
            r#"<circle class="marker" cx="{:.2}" cy="{:.2}" r="4" fill="red"/>"#,
            px(circle.0),
            py(circle.1)
        );
    }

    // Frame and axis annotations.
    let _ = writeln!(
        svg,
        r#"<rect class="frame" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        MARGIN_LEFT, MARGIN_TOP, plot_w, plot_h
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12">{}</text>"#,
        MARGIN_LEFT,
        SVG_HEIGHT - MARGIN_BOTTOM + 16.0,
        x_lo
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12" text-anchor="end">{}</text>"#,
        SVG_WIDTH - MARGIN_RIGHT,
        SVG_HEIGHT - MARGIN_BOTTOM + 16.0,
        x_hi
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12" text-anchor="middle">annual fee eps (fraction)</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        SVG_HEIGHT - MARGIN_BOTTOM + 34.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12" text-anchor="end">{}</text>"#,
        MARGIN_LEFT - 6.0,
        SVG_HEIGHT - MARGIN_BOTTOM,
        y_lo
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12" text-anchor="end">{}</text>"#,
        MARGIN_LEFT - 6.0,
        MARGIN_TOP + 10.0,
        y_hi
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12" text-anchor="middle" transform="rotate(-90 14 {:.2})">annual return r (fraction)</text>"#,
        14.0,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::accuracy::{analytic_boundary, classify_region, sweep_error_grid};
    use crate::model::Horizon;

    fn rate(v: f64) -> Rate {
        Rate::new(v).unwrap()
    }

    fn rates(vs: &[f64]) -> Vec<Rate> {
        vs.iter().map(|&v| rate(v)).collect()
    }

    #[test]
    fn parse_two_rows() {
        let series = parse_returns_csv("year,return\n1991,0.3047\n1992,0.0762\n").unwrap();
        assert_eq!(series.len(), 2);
        assert_eq!(series.entries()[0].label, "1991");
        assert_eq!(series.entries()[0].ret.value(), 0.3047);
        assert_eq!(series.entries()[1].label, "1992");
        assert_eq!(series.entries()[1].ret.value(), 0.0762);
    }

    #[test]
    fn parse_rejects_wipeout_return() {
        let err = parse_returns_csv("year,return\n1991,-1.5\n").unwrap_err();
        assert!(matches!(err, Error::ReturnOutOfDomain { line: 2, .. }));
        // Exactly -1 zeroes the gross rate; also out.
        assert!(parse_returns_csv("year,return\n1991,-1.0\n").is_err());
    }

    #[test]
    fn parse_rejects_empty_body() {
        assert!(matches!(
            parse_returns_csv("year,return\n"),
            Err(Error::NoDataRows)
        ));
    }

    #[test]
    fn parse_rejects_missing_header() {
        let err = parse_returns_csv("1991,0.3\n").unwrap_err();
        assert!(matches!(err, Error::CsvParse { line: 1, .. }));
    }

    #[test]
    fn parse_reports_line_numbers_for_bad_rows() {
        let err = parse_returns_csv("year,return\n1991,0.3\nnot a row\n").unwrap_err();
        assert!(matches!(err, Error::CsvParse { line: 3, .. }));
        let err = parse_returns_csv("year,return\n1991,abc\n").unwrap_err();
        match err {
            Error::CsvParse { line, reason } => {
                assert_eq!(line, 2);
                assert!(reason.contains("abc"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_duplicate_labels() {
        let err = parse_returns_csv("year,return\n1991,0.1\n1991,0.2\n").unwrap_err();
        assert!(matches!(err, Error::DuplicateYear { label } if label == "1991"));
    }

    #[test]
    fn parse_skips_comments_blank_lines_and_crlf() {
        let text = "# source: synthetic\r\nyear,return\r\n\r\n1991,0.10\r\n# midway note\r\n1992,-0.05\r\n";
        let series = parse_returns_csv(text).unwrap();
        assert_eq!(series.len(), 2);
        assert_eq!(series.entries()[1].ret.value(), -0.05);
    }

    #[test]
    fn plausibility_flags_percent_like_values() {
        let series = parse_returns_csv("year,return\n1991,30.47\n1992,0.08\n").unwrap();
        let warnings = plausibility_warnings(&series);
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains("1991"));
        assert!(warnings[0].contains("30.47"));
    }

    #[test]
    fn returns_roundtrip_is_exact() {
        let series =
            parse_returns_csv("year,return\n1991,0.3047\n1992,-0.030499999999\n1993,1e-4\n")
                .unwrap();
        let emitted = emit_returns_csv(&series);
        let reparsed = parse_returns_csv(&emitted).unwrap();
        assert_eq!(series, reparsed);
    }

    #[test]
    fn trajectory_constant_thirty_years() {
        let series = ReturnSeries::constant(rate(0.10), 30);
        let points = run_trajectory(Money::new(100_000.0).unwrap(), &series, rate(0.01)).unwrap();
        assert_eq!(points.len(), 31);
        let last = points.last().unwrap();
        // 100000 * 1.1^30 = 1744940.23; loss oracle 0.23964854126903182.
        assert!((last.value_no_fee.amount() - 1_744_940.0).abs() < 100.0);
        assert!((last.loss_fraction - 0.23958).abs() < 1e-4);
        assert!((last.l1_prediction - 0.30).abs() < 1e-12);
    }

    #[test]
    fn trajectory_zero_fee_tracks_exactly() {
        let series = ReturnSeries::from_pairs([("1", 0.07), ("2", -0.02)]).unwrap();
        let points = run_trajectory(Money::new(100_000.0).unwrap(), &series, rate(0.0)).unwrap();
        for p in &points {
            assert_eq!(p.value_no_fee, p.value_with_fee);
            assert_eq!(p.loss_fraction, 0.0);
        }
    }

    #[test]
    fn trajectory_short_series_matches_series_loss() {
        let series = ReturnSeries::from_pairs([("1", 0.05), ("2", -0.03)]).unwrap();
        let points = run_trajectory(Money::new(100_000.0).unwrap(), &series, rate(0.01)).unwrap();
        assert_eq!(points.len(), 3);
        let expected = crate::loss::true_loss_series(&series, rate(0.01)).unwrap();
        let got = points.last().unwrap().loss_fraction;
        assert!((got - expected).abs() < 1e-12);
        assert!((got - 0.01966).abs() < 1e-4);
    }

    #[test]
    fn trajectory_rejects_bad_inputs() {
        let series = ReturnSeries::constant(rate(0.10), 5);
        assert!(matches!(
            run_trajectory(Money::new(0.0).unwrap(), &series, rate(0.01)),
            Err(Error::NonPositivePrincipal { .. })
        ));
        let empty = ReturnSeries::new(vec![]).unwrap();
        assert!(matches!(
            run_trajectory(Money::new(1.0).unwrap(), &empty, rate(0.01)),
            Err(Error::EmptySeries)
        ));
    }

    #[test]
    fn trajectory_csv_single_point_row() {
        let point = TrajectoryPoint {
            year_index: 0,
            year_label: "start".to_string(),
            value_no_fee: Money::new(100_000.0).unwrap(),
            value_with_fee: Money::new(100_000.0).unwrap(),
            loss_fraction: 0.0,
            l1_prediction: 0.0,
        };
        let csv = emit_trajectory_csv(&[point]).unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "year_index,year_label,value_no_fee,value_with_fee,loss_fraction,l1_prediction"
        );
        assert_eq!(lines.next().unwrap(), "0,start,100000,100000,0,0");
    }

    #[test]
    fn trajectory_csv_rejects_empty() {
        assert!(matches!(
            emit_trajectory_csv(&[]),
            Err(Error::EmptyTrajectory)
        ));
    }

    #[test]
    fn trajectory_csv_century_run_shows_saturation() {
        let series = ReturnSeries::constant(rate(0.10), 100);
        let points = run_trajectory(Money::new(100_000.0).unwrap(), &series, rate(0.01)).unwrap();
        let csv = emit_trajectory_csv(&points).unwrap();
        assert_eq!(csv.lines().count(), 102, "header plus 101 points");
        let last = points.last().unwrap();
        assert!(last.loss_fraction < 1.0);
        assert!(last.l1_prediction >= 1.0);
    }

    #[test]
    fn trajectory_csv_roundtrips_values() {
        let series = ReturnSeries::from_pairs([("1991", 0.3047), ("1992", 0.0762)]).unwrap();
        let points = run_trajectory(Money::new(100_000.0).unwrap(), &series, rate(0.01)).unwrap();
        let csv = emit_trajectory_csv(&points).unwrap();
        for (row, p) in csv.lines().skip(1).zip(&points) {
            let fields: Vec<&str> = row.split(',').collect();
            assert_eq!(fields[0].parse::<usize>().unwrap(), p.year_index);
            assert_eq!(fields[1], p.year_label);
            assert!((fields[2].parse::<f64>().unwrap() - p.value_no_fee.amount()).abs() < 1e-10);
            assert!((fields[3].parse::<f64>().unwrap() - p.value_with_fee.amount()).abs() < 1e-10);
            assert!((fields[4].parse::<f64>().unwrap() - p.loss_fraction).abs() < 1e-10);
            assert!((fields[5].parse::<f64>().unwrap() - p.l1_prediction).abs() < 1e-10);
        }
    }

    #[test]
    fn grid_csv_headline_cell() {
        let grid = sweep_error_grid(&rates(&[0.01]), &rates(&[0.10]), Horizon(30)).unwrap();
        let mask = classify_region(&grid, 0.25);
        let boundary = analytic_boundary(Horizon(30), 0.25, grid.eps_axis());
        let csv = emit_grid_csv(&grid, &mask, &boundary).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "n,eps,r,error,acceptable,boundary_r");
        let fields: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(fields[0], "30");
        assert_eq!(fields[1].parse::<f64>().unwrap(), 0.01);
        assert_eq!(fields[2].parse::<f64>().unwrap(), 0.10);
        assert!((fields[3].parse::<f64>().unwrap() - 0.2522).abs() < 1e-3);
        assert_eq!(fields[4], "false");
        assert!((fields[5].parse::<f64>().unwrap() - 0.105).abs() < 1e-12);
    }

    #[test]
    fn grid_csv_empty_boundary_field_when_clipped() {
        // At eps = 0.02, N = 30, theta = 0.25 the boundary r is negative.
        let grid = sweep_error_grid(&rates(&[0.02]), &rates(&[0.10]), Horizon(30)).unwrap();
        let mask = classify_region(&grid, 0.25);
        let boundary = analytic_boundary(Horizon(30), 0.25, grid.eps_axis());
        assert!(boundary.is_empty());
        let csv = emit_grid_csv(&grid, &mask, &boundary).unwrap();
        let row = csv.lines().nth(1).unwrap();
        assert!(
            row.ends_with(','),
            "boundary_r field should be empty: {row}"
        );
    }

    #[test]
    fn grid_csv_row_count_matches_cells() {
        let grid = sweep_error_grid(
            &rates(&[0.005, 0.01, 0.015]),
            &rates(&[0.0, 0.05, 0.10, 0.15]),
            Horizon(10),
        )
        .unwrap();
        let mask = classify_region(&grid, 0.25);
        let csv = emit_grid_csv(&grid, &mask, &[]).unwrap();
        assert_eq!(csv.lines().count(), 1 + 3 * 4);
    }

    #[test]
    fn grid_csv_rejects_mismatched_axes() {
        let grid = sweep_error_grid(&rates(&[0.01]), &rates(&[0.10]), Horizon(30)).unwrap();
        let other = sweep_error_grid(&rates(&[0.02]), &rates(&[0.10]), Horizon(30)).unwrap();
        let mask = classify_region(&other, 0.25);
        assert!(matches!(
            emit_grid_csv(&grid, &mask, &[]),
            Err(Error::AxisMismatch)
        ));
        assert!(matches!(
            emit_region_svg(&grid, &mask, &[]),
            Err(Error::AxisMismatch)
        ));
    }

    #[test]
    fn svg_cell_count_follows_mask() {
        let grid = sweep_error_grid(
            &rates(&[0.005, 0.01, 0.015]),
            &rates(&[0.0, 0.05, 0.10]),
            Horizon(30),
        )
        .unwrap();

        let none = classify_region(&grid, -1.0);
        assert_eq!(none.accepted_count(), 0);
        let svg = emit_region_svg(&grid, &none, &[]).unwrap();
        assert_eq!(svg.matches(r#"class="cell""#).count(), 0);

        let all = classify_region(&grid, 10.0);
        assert_eq!(all.accepted_count(), 9);
        let svg = emit_region_svg(&grid, &all, &[]).unwrap();
        assert_eq!(svg.matches(r#"class="cell""#).count(), 9);
    }

    #[test]
    fn svg_is_deterministic() {
        let grid = sweep_error_grid(
            &rates(&[0.005, 0.01, 0.015]),
            &rates(&[0.0, 0.05, 0.10]),
            Horizon(30),
        )
        .unwrap();
        let mask = classify_region(&grid, 0.25);
        let boundary = analytic_boundary(Horizon(30), 0.25, grid.eps_axis());
        let first = emit_region_svg(&grid, &mask, &boundary).unwrap();
        let second = emit_region_svg(&grid, &mask, &boundary).unwrap();
        assert_eq!(first, second);
        assert!(first.starts_with("<svg"));
        assert!(first.trim_end().ends_with("</svg>"));
    }
}
