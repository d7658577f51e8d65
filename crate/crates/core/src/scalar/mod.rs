//! Complex special-function primitives used by every other module:
//! log-gamma, digamma, Pochhammer symbols, truncated generalized
//! hypergeometric series, the Gauss and Kummer functions, Kummer's U,
//! the complementary error function and adaptive quadrature.

mod erfc;
mod gamma;
mod hyper;
mod kummer_u;
mod pochhammer;
pub mod quad;

pub use erfc::erfc;
pub use gamma::{digamma, gamma, gamma_ratio, log_gamma, rgamma, EULER_GAMMA};
pub(crate) use hyper::within;
pub use hyper::{hyp1f1, hyp1f1_regularized, hyp1f1_tol, hyp2f1, hyp2f1_tol, pfq, INNER_TOL};
pub use kummer_u::{kummer_u, kummer_u_rotated};
pub use pochhammer::{pochhammer, pochhammer_signed};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// The universal value type.
pub type C64 = Complex64;

/// Default relative tolerance for series and quadrature.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Default cap on the number of series terms.
pub const DEFAULT_MAX_TERMS: usize = 10_000;

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Outcome of a truncated series or quadrature.
///
/// `abs_error_estimate` is an estimate, not a bound. `converged` is set
/// when the estimate fell below `tol * max(|value|, tiny)` before the term
/// or refinement budget ran out, so the tolerance is relative to the
/// magnitude of the result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: C64,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    pub converged: bool,
}

impl SeriesResult {
    pub fn exact(value: C64, terms_used: usize) -> Self {
        SeriesResult {
            value,
            abs_error_estimate: 0.0,
            terms_used,
            converged: true,
        }
    }

    /// Multiplies value and error estimate by a prefactor.
    pub fn scale(self, factor: C64) -> Self {
        SeriesResult {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.norm(),
            ..self
        }
    }

    pub fn relative_error_estimate(&self) -> f64 {
        let m = self.value.norm();
        if m > 0.0 {
            self.abs_error_estimate / m
        } else {
            self.abs_error_estimate
        }
    }

    pub(crate) fn check_finite(self, func: &'static str) -> Result<Self> {
        if is_finite(self.value) && self.abs_error_estimate.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite(func))
        }
    }
}

#[inline]
pub fn is_finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub(crate) fn finite(z: C64, func: &'static str) -> Result<C64> {
    if is_finite(z) {
        Ok(z)
    } else {
        Err(Error::NonFinite(func))
    }
}

/// Returns `Some(n)` when `z` equals the integer `-n` (n ≥ 0).
pub fn nonpositive_integer(z: C64) -> Option<u64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() && z.re > -1e15 {
        Some((-z.re) as u64)
    } else {
        None
    }
}

/// Returns `Some(n)` when `z` is exactly the integer `n`.
pub fn as_integer(z: C64) -> Option<i64> {
    if z.im == 0.0 && z.re == z.re.round() && z.re.abs() < 1e15 {
        Some(z.re as i64)
    } else {
        None
    }
}

/// Distance from `z` to the nearest integer (complex distance).
pub fn distance_to_integer(z: C64) -> f64 {
    (z - re(z.re.round())).norm()
}

/// Principal power `base^exponent`, with `0^0 = 1`.
pub fn cpow(base: C64, exponent: C64) -> C64 {
    if base == C64::new(0.0, 0.0) {
        if exponent == C64::new(0.0, 0.0) {
            return re(1.0);
        }
        return re(0.0);
    }
    (exponent * base.ln()).exp()
}

/// Integer power by repeated squaring (exact sign handling for negative bases).
pub fn ipow(base: C64, n: u32) -> C64 {
    base.powu(n)
}
