//! Reference-vector CSV files.

use std::path::Path;

use humbert::evaluator::{EvalConfig, Regime};
use humbert::vectors::{overlap_grid, vector_row, GridPoint, VectorRow};
use humbert::{Phi1Params, C64};
use rayon::prelude::*;
use serde::Deserialize;

use crate::error::CliError;
use crate::number::fmt17;

pub const HEADER: [&str; 14] = [
    "a_re", "a_im", "b_re", "b_im", "c_re", "c_im", "x_re", "x_im", "y_re", "y_im", "value_re",
    "value_im", "method", "err_est",
];

/// One line of a vector file.
#[derive(Debug, Clone, Deserialize)]
pub struct StoredRow {
    pub a_re: f64,
    pub a_im: f64,
    pub b_re: f64,
    pub b_im: f64,
    pub c_re: f64,
    pub c_im: f64,
    pub x_re: f64,
    pub x_im: f64,
    pub y_re: f64,
    pub y_im: f64,
    pub value_re: f64,
    pub value_im: f64,
    pub method: String,
    pub err_est: f64,
}

/// Input columns only, for user-supplied grids.
#[derive(Debug, Clone, Deserialize)]
struct InputRow {
    a_re: f64,
    a_im: f64,
    b_re: f64,
    b_im: f64,
    c_re: f64,
    c_im: f64,
    x_re: f64,
    x_im: f64,
    y_re: f64,
    y_im: f64,
}

impl StoredRow {
    pub fn point(&self) -> GridPoint {
        GridPoint {
            p: Phi1Params {
                a: C64::new(self.a_re, self.a_im),
                b: C64::new(self.b_re, self.b_im),
                c: C64::new(self.c_re, self.c_im),
            },
            x: C64::new(self.x_re, self.x_im),
            y: C64::new(self.y_re, self.y_im),
        }
    }

    pub fn value(&self) -> C64 {
        C64::new(self.value_re, self.value_im)
    }
}

fn io_err(path: &Path) -> impl FnOnce(csv::Error) -> CliError + '_ {
    move |e| CliError::Internal(format!("{}: {e}", path.display()))
}

/// The grid named by `spec`: `default`, `empty`, or a CSV path.
pub fn load_grid(spec: &str) -> Result<Vec<GridPoint>, CliError> {
    match spec {
        "default" => Ok(overlap_grid()),
        "empty" => Ok(Vec::new()),
        path => {
            let path = Path::new(path);
            let mut r = csv::Reader::from_path(path).map_err(io_err(path))?;
            r.deserialize::<InputRow>()
                .map(|row| {
                    let row = row.map_err(io_err(path))?;
                    let p = Phi1Params::new(
                        C64::new(row.a_re, row.a_im),
                        C64::new(row.b_re, row.b_im),
                        C64::new(row.c_re, row.c_im),
                    )?;
                    Ok(GridPoint {
                        p,
                        x: C64::new(row.x_re, row.x_im),
                        y: C64::new(row.y_re, row.y_im),
                    })
                })
                .collect()
        }
    }
}

/// Cross-checks every point in parallel; rows keep the grid order.
pub fn compute_rows(grid: &[GridPoint], cfg: &EvalConfig) -> Result<Vec<VectorRow>, CliError> {
    grid.par_iter()
        .enumerate()
        .map(|(i, &pt)| {
            vector_row(pt, cfg).map_err(|e| match CliError::from(e) {
                CliError::Domain {
                    message,
                    applicable,
                } => CliError::Domain {
                    message: format!("grid point {i}: {message}"),
                    applicable,
                },
                other => other,
            })
        })
        .collect()
}

pub fn to_csv(rows: &[VectorRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for r in rows {
        let GridPoint { p, x, y } = r.point;
        let mut rec: Vec<String> = [p.a, p.b, p.c, x, y, r.value]
            .iter()
            .flat_map(|z| [fmt17(z.re), fmt17(z.im)])
            .collect();
        rec.push(r.method.tag().to_string());
        rec.push(fmt17(r.err_est));
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 CSV")
}

pub fn read_stored(path: &Path) -> Result<Vec<StoredRow>, CliError> {
    let mut r = csv::Reader::from_path(path).map_err(io_err(path))?;
    let header = r.headers().map_err(io_err(path))?;
    if header.iter().ne(HEADER.iter().copied()) {
        return Err(CliError::Usage(format!(
            "{}: expected header {}",
            path.display(),
            HEADER.join(",")
        )));
    }
    let rows = r
        .deserialize::<StoredRow>()
        .collect::<Result<Vec<_>, _>>()
        .map_err(io_err(path))?;
    for (i, row) in rows.iter().enumerate() {
        if row.method.parse::<Regime>().is_err() {
            return Err(CliError::Usage(format!(
                "{}: row {i} has unknown method {:?}",
                path.display(),
                row.method
            )));
        }
    }
    Ok(rows)
}
