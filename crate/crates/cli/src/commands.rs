//! One function per subcommand.

use std::path::Path;

use humbert::applications::{
    glauber_c0, glauber_equilibrium_limit, glauber_zero_temperature, prabhakar_apply,
    prabhakar_minus_asym, prabhakar_minus_power, prabhakar_plus_asym, prabhakar_plus_power,
    sum_power_expansion, GlauberPoint, PrabhakarParams, Side,
};
use humbert::evaluator::{applicable_regimes, cross_check_with, evaluate_with, EvalConfig};
use humbert::saran::{fm_laplace, fm_series, FmParams};
use humbert::scalar::{c, cpow, re};
use humbert::{Phi1Params, C64};
use rayon::prelude::*;

use crate::cli::{
    CheckArgs, Command, FmArgs, FmMethod, GlauberArgs, JobSpec, PointArgs, PrabhakarArgs, SideArg,
    TableArgs, VectorsArgs,
};
use crate::error::{CliError, EXIT_DOMAIN, EXIT_INTERNAL};
use crate::grid;
use crate::output::{Field, Format, Output, Table};

/// Ulps of the stored value that a recomputation may differ by regardless of
/// its error estimate; summation order alone moves the last few bits.
const ROUNDING_FLOOR: f64 = 64.0 * f64::EPSILON;

/// What a command produced and the exit status it asks for.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

pub fn execute(job: JobSpec) -> Result<Outcome, CliError> {
    let JobSpec {
        command,
        format,
        config,
        out,
    } = job;
    let render = |o: Output, default: Format, code: i32| Outcome {
        text: o.render(format.unwrap_or(default)),
        code,
    };
    let outcome = match command {
        Command::Eval(a) => render(eval(&a, &config)?, Format::Json, 0),
        Command::Table(a) => {
            let (o, failures) = table(&a, &config)?;
            render(o, Format::Csv, if failures > 0 { EXIT_DOMAIN } else { 0 })
        }
        Command::Check(a) => match &a.from_file {
            Some(path) => {
                let (o, passed) = check_file(path, &config)?;
                render(o, Format::Text, if passed { 0 } else { EXIT_INTERNAL })
            }
            None => render(check(&a, &config)?, Format::Json, 0),
        },
        Command::Glauber(a) => render(glauber(&a)?, Format::Json, 0),
        Command::Prabhakar(a) => render(prabhakar(&a, &config)?, Format::Json, 0),
        Command::Fm(a) => render(fm(&a)?, Format::Json, 0),
        Command::Vectors(a) => {
            if matches!(format, Some(f) if f != Format::Csv) {
                return Err(CliError::Usage("vectors only writes CSV".into()));
            }
            Outcome {
                text: vectors(&a, &config)?,
                code: 0,
            }
        }
    };
    match out {
        Some(path) => {
            std::fs::write(&path, &outcome.text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Outcome {
                text: String::new(),
                code: outcome.code,
            })
        }
        None => Ok(outcome),
    }
}

fn regime_tags(p: Phi1Params, x: C64, y: C64, cfg: &EvalConfig) -> Vec<&'static str> {
    applicable_regimes(p, x, y, &cfg.thresholds)
        .into_iter()
        .map(|r| r.tag())
        .collect()
}

fn eval(a: &PointArgs, cfg: &EvalConfig) -> Result<Output, CliError> {
    let (p, x, y) = a.point()?;
    let r = evaluate_with(p, x, y, cfg)
        .map_err(|e| CliError::from(e).with_regimes(regime_tags(p, x, y, cfg)))?;
    Ok(Output::default()
        .field("value_re", r.value.re)
        .field("value_im", r.value.im)
        .field("regime", r.regime.tag())
        .field("err_est", r.abs_error_estimate))
}

fn table(a: &TableArgs, cfg: &EvalConfig) -> Result<(Output, usize), CliError> {
    if a.steps == 0 {
        return Err(CliError::Usage("--steps must be at least 1".into()));
    }
    let p = a.params.params()?;
    let (x0, y0) = (a.x_from, a.y_from);
    let (x1, y1) = (a.x_to.unwrap_or(x0), a.y_to.unwrap_or(y0));
    let n = a.steps;
    let points: Vec<(C64, C64)> = (0..n)
        .map(|i| {
            let t = if n == 1 {
                0.0
            } else {
                i as f64 / (n - 1) as f64
            };
            (x0 + (x1 - x0) * t, y0 + (y1 - y0) * t)
        })
        .collect();
    let results: Vec<_> = points
        .par_iter()
        .map(|&(x, y)| evaluate_with(p, x, y, cfg))
        .collect();
    let mut t = Table::new(
        "rows",
        &[
            "i", "x_re", "x_im", "y_re", "y_im", "value_re", "value_im", "regime", "err_est",
            "status",
        ],
    );
    let mut failures = 0;
    for (i, (&(x, y), r)) in points.iter().zip(results).enumerate() {
        let mut row: Vec<Field> =
            vec![i.into(), x.re.into(), x.im.into(), y.re.into(), y.im.into()];
        match r {
            Ok(r) => row.extend([
                r.value.re.into(),
                r.value.im.into(),
                r.regime.tag().into(),
                r.abs_error_estimate.into(),
                "ok".into(),
            ]),
            Err(e) => {
                failures += 1;
                row.extend([
                    Field::Null,
                    Field::Null,
                    Field::Null,
                    Field::Null,
                    e.to_string().into(),
                ]);
            }
        }
        t.push(row);
    }
    Ok((
        Output::default()
            .field("points", n)
            .field("failures", failures)
            .table(t),
        failures,
    ))
}

fn check(a: &CheckArgs, cfg: &EvalConfig) -> Result<Output, CliError> {
    let (p, x, y) = a.point.point()?;
    let r = cross_check_with(p, x, y, cfg)
        .map_err(|e| CliError::from(e).with_regimes(regime_tags(p, x, y, cfg)))?;
    let m = r
        .agreement_matrix
        .ok_or_else(|| CliError::Internal("cross-check returned no agreement matrix".into()))?;
    let mut methods = Table::new("methods", &["regime", "value_re", "value_im", "err_est"]);
    for v in &m.values {
        methods.push(vec![
            v.regime.tag().into(),
            v.value.re.into(),
            v.value.im.into(),
            v.abs_error_estimate.into(),
        ]);
    }
    let mut deltas = Table::new("deltas", &["first", "second", "abs_delta"]);
    for d in &m.deltas {
        deltas.push(vec![
            d.first.tag().into(),
            d.second.tag().into(),
            d.abs_delta.into(),
        ]);
    }
    Ok(Output::default()
        .field("value_re", r.value.re)
        .field("value_im", r.value.im)
        .field("regime", r.regime.tag())
        .field("err_est", r.abs_error_estimate)
        .field("max_delta", m.max_delta())
        .table(methods)
        .table(deltas))
}

/// Recomputes every stored row and compares it with the stored value.
/// A row passes when the two differ by at most twice the stored error
/// estimate plus a rounding floor of 64 ulps of the stored value.
fn check_file(path: &Path, cfg: &EvalConfig) -> Result<(Output, bool), CliError> {
    let stored = grid::read_stored(path)?;
    let points: Vec<_> = stored.iter().map(|s| s.point()).collect();
    let fresh = grid::compute_rows(&points, cfg)?;
    let mut t = Table::new(
        "results",
        &[
            "row",
            "method",
            "value_re",
            "value_im",
            "delta",
            "err_est",
            "matrix_max_delta",
            "ok",
        ],
    );
    let (mut max_delta, mut max_matrix, mut passed) = (0.0f64, 0.0f64, true);
    for (i, (s, f)) in stored.iter().zip(&fresh).enumerate() {
        let delta = (f.value - s.value()).norm();
        let ok = delta <= 2.0 * s.err_est + ROUNDING_FLOOR * s.value().norm();
        passed &= ok;
        max_delta = max_delta.max(delta);
        max_matrix = max_matrix.max(f.max_delta);
        t.push(vec![
            i.into(),
            s.method.as_str().into(),
            f.value.re.into(),
            f.value.im.into(),
            delta.into(),
            s.err_est.into(),
            f.max_delta.into(),
            ok.into(),
        ]);
    }
    let out = Output::default()
        .field("rows", stored.len())
        .field("max_delta", max_delta)
        .field("max_matrix_delta", max_matrix)
        .field("passed", passed)
        .table(t);
    Ok((out, passed))
}

fn glauber(a: &GlauberArgs) -> Result<Output, CliError> {
    let pt = GlauberPoint::new(a.s, a.tau, a.mu)?;
    let value = glauber_c0(pt)?;
    let (tau_eq, limit) = if a.mu > 0.0 {
        let tau_eq = pt.tau_eq();
        (
            Some(tau_eq),
            Some(glauber_equilibrium_limit(a.tau / tau_eq)),
        )
    } else {
        (None, None)
    };
    Ok(Output::default()
        .field("value", value)
        .field("x", pt.x())
        .field("y", pt.y())
        .field("zero_temperature", glauber_zero_temperature(a.s, a.tau))
        .field("tau_eq", tau_eq)
        .field("equilibrium_limit", limit))
}

fn prabhakar(a: &PrabhakarArgs, cfg: &EvalConfig) -> Result<Output, CliError> {
    let pp = PrabhakarParams::new(a.alpha, a.beta, a.gamma, a.lambda, a.b_end.unwrap_or(a.x))?;
    let coeffs = if a.coeffs.is_empty() {
        vec![re(1.0)]
    } else {
        a.coeffs.clone()
    };
    let rho = a.rho;
    let f = |t: f64| -> C64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(k, &ak)| ak * cpow(re(t), re(rho + k as f64)))
            .sum()
    };
    let sides: &[Side] = match a.side {
        SideArg::Plus => &[Side::Plus],
        SideArg::Minus => &[Side::Minus],
        SideArg::Both => &[Side::Plus, Side::Minus],
    };
    let mut t = Table::new(
        "sides",
        &[
            "side",
            "closed_re",
            "closed_im",
            "quadrature_re",
            "quadrature_im",
            "quadrature_err",
            "asymptotic_re",
            "asymptotic_im",
        ],
    );
    for &side in sides {
        let mut closed = c(0.0, 0.0);
        for (k, &ak) in coeffs.iter().enumerate() {
            let r = re(rho + k as f64);
            closed += ak
                * match side {
                    Side::Plus => prabhakar_plus_power(pp, r, a.x)?,
                    Side::Minus => prabhakar_minus_power(pp, r, a.x)?,
                };
        }
        let quad = prabhakar_apply(pp, f, rho, a.x, side)?;
        let asym = match cfg.order {
            Some(order) => {
                let terms = match side {
                    Side::Plus => prabhakar_plus_asym(pp, re(rho), &coeffs, order)?,
                    Side::Minus => prabhakar_minus_asym(pp, re(rho), &coeffs, order)?,
                };
                Some(sum_power_expansion(&terms, a.x))
            }
            None => None,
        };
        t.push(vec![
            match side {
                Side::Plus => "plus",
                Side::Minus => "minus",
            }
            .into(),
            closed.re.into(),
            closed.im.into(),
            quad.value.re.into(),
            quad.value.im.into(),
            quad.abs_error_estimate.into(),
            asym.map(|z| z.re).into(),
            asym.map(|z| z.im).into(),
        ]);
    }
    Ok(Output::default().field("x", a.x).field("rho", rho).table(t))
}

fn fm(a: &FmArgs) -> Result<Output, CliError> {
    let q = FmParams::new(a.alpha1, a.alpha2, a.beta1, a.beta2, a.gamma1, a.gamma2)?;
    let (x, y, z) = (a.x, a.y, a.z);
    let series_ok = z.norm() < 1.0 && z.norm() < (re(1.0) - x).norm();
    let use_series = match a.method {
        FmMethod::Series => true,
        FmMethod::Laplace => false,
        FmMethod::Auto => series_ok,
    };
    let (r, method) = if use_series {
        (fm_series(q, x, y, z, 1e-15, 10_000)?, "series")
    } else {
        (fm_laplace(q, x, y, z)?, "laplace")
    };
    Ok(Output::default()
        .field("value_re", r.value.re)
        .field("value_im", r.value.im)
        .field("method", method)
        .field("err_est", r.abs_error_estimate))
}

fn vectors(a: &VectorsArgs, cfg: &EvalConfig) -> Result<String, CliError> {
    let points = grid::load_grid(&a.grid)?;
    let rows = grid::compute_rows(&points, cfg)?;
    Ok(grid::to_csv(&rows))
}
