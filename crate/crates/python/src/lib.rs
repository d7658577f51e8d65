//! Python bindings for `humbert`.
//!
//! Complex arguments accept anything Python converts to `complex`; results
//! come back as `complex`. Errors caused by the arguments raise
//! `DomainError` (a `ValueError`); numerical breakdowns raise
//! `ArithmeticError`.

use std::cell::RefCell;

use humbert::applications::{self, GlauberPoint, PrabhakarParams as CorePrabhakar, Side};
use humbert::evaluator::{self, EvalConfig, EvalReport as CoreReport, Regime};
use humbert::reference;
use humbert::saran::{self, FmParams};
use humbert::{Phi1Params as CoreParams, C64};
use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

create_exception!(humbert_py, DomainError, PyValueError);

fn to_py(e: humbert::Error) -> PyErr {
    if e.is_domain() {
        DomainError::new_err(e.to_string())
    } else {
        PyArithmeticError::new_err(e.to_string())
    }
}

/// Parameters (a, b, c) of Φ₁.
#[pyclass(frozen, skip_from_py_object, name = "Phi1Params")]
#[derive(Clone, Copy)]
struct Phi1Params {
    inner: CoreParams,
}

#[pymethods]
impl Phi1Params {
    #[new]
    fn new(a: C64, b: C64, c: C64) -> PyResult<Self> {
        Ok(Phi1Params {
            inner: CoreParams::new(a, b, c).map_err(to_py)?,
        })
    }

    #[getter]
    fn a(&self) -> C64 {
        self.inner.a
    }

    #[getter]
    fn b(&self) -> C64 {
        self.inner.b
    }

    #[getter]
    fn c(&self) -> C64 {
        self.inner.c
    }

    fn __repr__(&self) -> String {
        let CoreParams { a, b, c } = self.inner;
        format!("Phi1Params(a={a}, b={b}, c={c})")
    }
}

/// Result of `evaluate` or `cross_check`.
#[pyclass(frozen, name = "EvalReport")]
struct EvalReport {
    #[pyo3(get)]
    value: C64,
    #[pyo3(get)]
    regime: String,
    #[pyo3(get)]
    err_est: f64,
    /// (regime, value, err_est) per compared method; empty for `evaluate`.
    #[pyo3(get)]
    methods: Vec<(String, C64, f64)>,
    /// Largest pairwise difference, or None for `evaluate`.
    #[pyo3(get)]
    max_delta: Option<f64>,
}

impl From<CoreReport> for EvalReport {
    fn from(r: CoreReport) -> Self {
        let (methods, max_delta) = match &r.agreement_matrix {
            Some(m) => (
                m.values
                    .iter()
                    .map(|v| (v.regime.tag().to_string(), v.value, v.abs_error_estimate))
                    .collect(),
                Some(m.max_delta()),
            ),
            None => (Vec::new(), None),
        };
        EvalReport {
            value: r.value,
            regime: r.regime.tag().to_string(),
            err_est: r.abs_error_estimate,
            methods,
            max_delta,
        }
    }
}

#[pymethods]
impl EvalReport {
    fn __repr__(&self) -> String {
        format!(
            "EvalReport(value={}, regime={:?}, err_est={:e})",
            self.value, self.regime, self.err_est
        )
    }
}

fn config(tol: f64, order: Option<usize>, regime: Option<&str>) -> PyResult<EvalConfig> {
    let regime = regime
        .map(|s| s.parse::<Regime>().map_err(to_py))
        .transpose()?;
    Ok(EvalConfig {
        tol,
        order,
        regime,
        ..EvalConfig::default()
    })
}

/// Φ₁[a, b; c; x, y] through the dispatching evaluator.
#[pyfunction]
#[pyo3(signature = (p, x, y, tol = 1e-12, order = None, regime = None))]
fn evaluate(
    p: &Phi1Params,
    x: C64,
    y: C64,
    tol: f64,
    order: Option<usize>,
    regime: Option<&str>,
) -> PyResult<EvalReport> {
    let cfg = config(tol, order, regime)?;
    evaluator::evaluate_with(p.inner, x, y, &cfg)
        .map(Into::into)
        .map_err(to_py)
}

/// Evaluates every applicable method and reports their differences.
#[pyfunction]
#[pyo3(signature = (p, x, y, tol = 1e-12))]
fn cross_check(p: &Phi1Params, x: C64, y: C64, tol: f64) -> PyResult<EvalReport> {
    evaluator::cross_check_with(p.inner, x, y, &config(tol, None, None)?)
        .map(Into::into)
        .map_err(to_py)
}

/// Tags of the methods whose hypotheses hold at (x, y).
#[pyfunction]
fn applicable_regimes(p: &Phi1Params, x: C64, y: C64) -> Vec<&'static str> {
    evaluator::applicable_regimes(p.inner, x, y, &Default::default())
        .into_iter()
        .map(|r| r.tag())
        .collect()
}

/// The double series, for |x| < 1.
#[pyfunction]
#[pyo3(signature = (p, x, y, tol = 1e-15))]
fn phi1_taylor(p: &Phi1Params, x: C64, y: C64, tol: f64) -> PyResult<C64> {
    reference::phi1_taylor(p.inner, x, y, tol, 200_000)
        .map(|r| r.value)
        .map_err(to_py)
}

/// The Euler integral, for Re c > Re a > 0.
#[pyfunction]
fn phi1_euler_integral(p: &Phi1Params, x: C64, y: C64) -> PyResult<C64> {
    reference::phi1_euler_integral(p.inner, x, y)
        .map(|r| r.value)
        .map_err(to_py)
}

#[pyfunction]
fn glauber_c0(s: f64, tau: f64, mu: f64) -> PyResult<f64> {
    let pt = GlauberPoint::new(s, tau, mu).map_err(to_py)?;
    applications::glauber_c0(pt).map_err(to_py)
}

#[pyfunction]
fn glauber_zero_temperature(s: f64, tau: f64) -> f64 {
    applications::glauber_zero_temperature(s, tau)
}

/// Parameters of the Prabhakar-type operators on (0, b_end].
#[pyclass(frozen, skip_from_py_object, name = "PrabhakarParams")]
#[derive(Clone, Copy)]
struct PrabhakarParams {
    inner: CorePrabhakar,
}

#[pymethods]
impl PrabhakarParams {
    #[new]
    fn new(alpha: C64, beta: C64, gamma: C64, lambda_: C64, b_end: f64) -> PyResult<Self> {
        Ok(PrabhakarParams {
            inner: CorePrabhakar::new(alpha, beta, gamma, lambda_, b_end).map_err(to_py)?,
        })
    }
}

fn side(name: &str) -> PyResult<Side> {
    match name {
        "plus" => Ok(Side::Plus),
        "minus" => Ok(Side::Minus),
        _ => Err(PyValueError::new_err(format!(
            "side must be \"plus\" or \"minus\", got {name:?}"
        ))),
    }
}

/// Closed form of the operator applied to t^rho.
#[pyfunction]
#[pyo3(signature = (pp, rho, x, side = "plus"))]
fn prabhakar_power(pp: &PrabhakarParams, rho: C64, x: f64, side: &str) -> PyResult<C64> {
    match self::side(side)? {
        Side::Plus => applications::prabhakar_plus_power(pp.inner, rho, x),
        Side::Minus => applications::prabhakar_minus_power(pp.inner, rho, x),
    }
    .map_err(to_py)
}

/// The operator applied to a Python callable by quadrature. `f_exponent`
/// declares f(t) = O(t^f_exponent) at the origin.
#[pyfunction]
#[pyo3(signature = (pp, f, f_exponent, x, side = "plus"))]
fn prabhakar_apply(
    pp: &PrabhakarParams,
    f: &Bound<'_, PyAny>,
    f_exponent: f64,
    x: f64,
    side: &str,
) -> PyResult<(C64, f64)> {
    let side = self::side(side)?;
    let failure: RefCell<Option<PyErr>> = RefCell::new(None);
    let call = |t: f64| -> C64 {
        if failure.borrow().is_some() {
            return C64::new(0.0, 0.0);
        }
        match f.call1((t,)).and_then(|v| v.extract::<C64>()) {
            Ok(v) => v,
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                C64::new(0.0, 0.0)
            }
        }
    };
    let r = applications::prabhakar_apply(pp.inner, call, f_exponent, x, side);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let r = r.map_err(to_py)?;
    Ok((r.value, r.abs_error_estimate))
}

/// Saran's F_M by its single series in z.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
fn fm_series(
    alpha1: C64,
    alpha2: C64,
    beta1: C64,
    beta2: C64,
    gamma1: C64,
    gamma2: C64,
    x: C64,
    y: C64,
    z: C64,
) -> PyResult<C64> {
    let q = FmParams::new(alpha1, alpha2, beta1, beta2, gamma1, gamma2).map_err(to_py)?;
    saran::fm_series(q, x, y, z, 1e-15, 10_000)
        .map(|r| r.value)
        .map_err(to_py)
}

/// Saran's F_M by its Laplace-type integral.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
fn fm_laplace(
    alpha1: C64,
    alpha2: C64,
    beta1: C64,
    beta2: C64,
    gamma1: C64,
    gamma2: C64,
    x: C64,
    y: C64,
    z: C64,
) -> PyResult<C64> {
    let q = FmParams::new(alpha1, alpha2, beta1, beta2, gamma1, gamma2).map_err(to_py)?;
    saran::fm_laplace(q, x, y, z)
        .map(|r| r.value)
        .map_err(to_py)
}

#[pymodule]
fn humbert_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DomainError", m.py().get_type::<DomainError>())?;
    m.add_class::<Phi1Params>()?;
    m.add_class::<EvalReport>()?;
    m.add_class::<PrabhakarParams>()?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(cross_check, m)?)?;
    m.add_function(wrap_pyfunction!(applicable_regimes, m)?)?;
    m.add_function(wrap_pyfunction!(phi1_taylor, m)?)?;
    m.add_function(wrap_pyfunction!(phi1_euler_integral, m)?)?;
    m.add_function(wrap_pyfunction!(glauber_c0, m)?)?;
    m.add_function(wrap_pyfunction!(glauber_zero_temperature, m)?)?;
    m.add_function(wrap_pyfunction!(prabhakar_power, m)?)?;
    m.add_function(wrap_pyfunction!(prabhakar_apply, m)?)?;
    m.add_function(wrap_pyfunction!(fm_series, m)?)?;
    m.add_function(wrap_pyfunction!(fm_laplace, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_by_kind() {
        Python::initialize();
        Python::attach(|py| {
            let e = to_py(humbert::Error::NonFinite("x"));
            assert!(e.is_instance_of::<PyArithmeticError>(py));
            let e = to_py(
                CoreParams::new(C64::new(1.0, 0.0), C64::new(1.0, 0.0), C64::new(-1.0, 0.0))
                    .unwrap_err(),
            );
            assert!(e.is_instance_of::<PyValueError>(py));
        });
    }

    #[test]
    fn report_carries_the_matrix() {
        let p = CoreParams::real(0.5, 1.0, 1.5).unwrap();
        let r: EvalReport = evaluator::cross_check(p, C64::new(-20.0, 0.0), C64::new(0.5, 0.0))
            .unwrap()
            .into();
        assert!(r.methods.len() >= 2);
        assert!(r.max_delta.unwrap() <= 1e-7);
        let e: EvalReport = evaluator::evaluate(p, C64::new(0.3, 0.0), C64::new(0.2, 0.0), 1e-12)
            .unwrap()
            .into();
        assert_eq!(e.regime, "series-2f1");
        assert!(e.methods.is_empty() && e.max_delta.is_none());
    }
}
