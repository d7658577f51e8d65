//! Reference vectors: a fixed grid of points where at least two methods
//! apply, and the rows written for each of them.

use crate::error::{Error, Result};
use crate::evaluator::{cross_check_with, EvalConfig, Regime};
use crate::reference::Phi1Params;
use crate::scalar::{c, re, C64};

/// One grid point (parameters and arguments).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub p: Phi1Params,
    pub x: C64,
    pub y: C64,
}

/// A grid point with its value from a convergent method.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorRow {
    pub point: GridPoint,
    pub value: C64,
    pub method: Regime,
    pub err_est: f64,
    /// Largest pairwise difference between the methods that were compared.
    pub max_delta: f64,
}

fn pt(a: C64, b: C64, cc: C64, x: C64, y: C64) -> GridPoint {
    GridPoint {
        p: Phi1Params { a, b, c: cc },
        x,
        y,
    }
}

/// The default 50-point overlap grid, in a fixed order:
///
/// * 10 points inside the Taylor disc (Taylor against series-2f1),
/// * 10 points in the cut plane beyond it (series-2f1 against the Euler
///   integral),
/// * 10 points with large negative x (large-x and eta-x against the
///   convergent methods),
/// * 10 points with large y off the positive axis (large-y against the
///   Euler integral),
/// * 10 points near x = 1 (the connection formula against series-2f1).
pub fn overlap_grid() -> Vec<GridPoint> {
    let mut g = Vec::with_capacity(50);
    let params = [
        (re(0.5), re(1.0), re(1.5)),
        (re(0.25), re(0.75), re(1.7)),
        (c(0.5, 0.3), re(1.2), c(2.1, -0.2)),
        (re(1.5), re(-0.6), re(2.25)),
        (c(0.3, -0.1), c(0.7, 0.2), re(1.35)),
    ];
    for (i, &(a, b, cc)) in params.iter().enumerate() {
        let s = i as f64;
        g.push(pt(
            a,
            b,
            cc,
            c((3.0 - s) / 10.0, 0.2),
            c((8.0 + 3.0 * s) / 10.0, -0.5),
        ));
        g.push(pt(a, b, cc, c(-0.6, s / 10.0), re(2.0 - s)));
    }
    for (i, &(a, b, cc)) in params.iter().enumerate() {
        let s = i as f64;
        g.push(pt(a, b, cc, re(-1.5 - s), c(1.0, 0.5 * s)));
        g.push(pt(a, b, cc, c(2.0 + 0.5 * s, 1.5), re(-1.0 - s)));
    }
    for (i, &(a, b, cc)) in params.iter().enumerate() {
        let s = i as f64;
        g.push(pt(a, b, cc, re(-20.0 - 10.0 * s), re(0.5)));
        g.push(pt(a, b, cc, c(-30.0, 5.0 * s), c(0.2, (0.0 - s) / 10.0)));
    }
    for (i, &(a, b, cc)) in params.iter().enumerate() {
        let s = i as f64;
        g.push(pt(a, b, cc, re(0.3), re(-30.0 - 5.0 * s)));
        g.push(pt(a, b, cc, c(-0.4, s / 10.0), c(0.0, 35.0 + 5.0 * s)));
    }
    for (i, &(a, b, cc)) in params.iter().enumerate() {
        let s = i as f64;
        g.push(pt(a, b, cc, re((900.0 + 15.0 * s) / 1000.0), re(0.5)));
        g.push(pt(a, b, cc, c(1.05, 0.1), c((-10.0 + 4.0 * s) / 10.0, 0.3)));
    }
    g
}

/// Cross-checks one point and keeps the convergent value.
pub fn vector_row(point: GridPoint, cfg: &EvalConfig) -> Result<VectorRow> {
    let r = cross_check_with(point.p, point.x, point.y, cfg)?;
    if !r.regime.is_convergent() {
        return Err(Error::Unsupported {
            reason: "no convergent method applies".into(),
            nearest: r.regime.tag().into(),
        });
    }
    let max_delta = r
        .agreement_matrix
        .as_ref()
        .map(|m| m.max_delta())
        .unwrap_or(0.0);
    Ok(VectorRow {
        point,
        value: r.value,
        method: r.regime,
        err_est: r.abs_error_estimate,
        max_delta,
    })
}
