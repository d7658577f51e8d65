//! Saran's triple hypergeometric function
//!
//! ```text
//! F_M = Σ_{m,n,p} (α₁)_m (α₂)_{n+p} (β₁)_{m+p} (β₂)_n / ((γ₁)_m (γ₂)_{n+p}) xᵐ/m! yⁿ/n! zᵖ/p!
//! ```
//!
//! through its single-series continuation in products of two ₂F₁ and its
//! Laplace integral over ₁F₁ · Φ₁.

use crate::error::{Error, Result};
use crate::evaluator::{evaluate, Regime};
use crate::reference::{check_cut, Phi1Params};
use crate::scalar::quad::{integrate_interval, QuadOptions};
use crate::scalar::{gamma, hyp1f1, hyp2f1, nonpositive_integer, re, within, SeriesResult, C64};

const QUIET_TERMS: usize = 3;

/// Parameters α₁, α₂, β₁, β₂; γ₁, γ₂ of F_M.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FmParams {
    pub alpha1: C64,
    pub alpha2: C64,
    pub beta1: C64,
    pub beta2: C64,
    pub gamma1: C64,
    pub gamma2: C64,
}

impl FmParams {
    /// Validates γ₁, γ₂ ∉ ℤ≤0.
    pub fn new(
        alpha1: C64,
        alpha2: C64,
        beta1: C64,
        beta2: C64,
        gamma1: C64,
        gamma2: C64,
    ) -> Result<Self> {
        for (name, g) in [("gamma1", gamma1), ("gamma2", gamma2)] {
            if nonpositive_integer(g).is_some() {
                return Err(Error::param_pole(
                    "FmParams",
                    format!("{name} = {g} is a non-positive integer"),
                ));
            }
        }
        Ok(FmParams {
            alpha1,
            alpha2,
            beta1,
            beta2,
            gamma1,
            gamma2,
        })
    }

    pub fn real(a1: f64, a2: f64, b1: f64, b2: f64, g1: f64, g2: f64) -> Result<Self> {
        Self::new(re(a1), re(a2), re(b1), re(b2), re(g1), re(g2))
    }
}

/// F_M = Σ_n (α₂)_n(β₁)_n/(γ₂)_n ₂F₁[α₁, β₁+n; γ₁; x] ₂F₁[α₂+n, β₂; γ₂+n; y] zⁿ/n!.
///
/// The series converges for |z| < 1 and |z| < |1−x|; both ₂F₁ are
/// continued to the cut plane, so x, y ∉ [1, ∞) is the only other
/// restriction.
pub fn fm_series(
    q: FmParams,
    x: C64,
    y: C64,
    z: C64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    const F: &str = "fm_series";
    if z.norm() >= 1.0 || z.norm() >= (re(1.0) - x).norm() {
        return Err(Error::domain(
            F,
            format!("requires |z| < 1 and |z| < |1 − x|, got z = {z}, x = {x}"),
        ));
    }
    check_cut(F, x)?;
    check_cut(F, y)?;
    let FmParams {
        alpha1,
        alpha2,
        beta1,
        beta2,
        gamma1,
        gamma2,
    } = q;
    let mut coef = re(1.0);
    let mut sum = re(0.0);
    let mut inner_err = 0.0;
    let mut max_term = 0.0f64;
    let mut max_partial = 0.0f64;
    let mut quiet = 0;
    let mut n = 0usize;
    let mut last = 0.0;
    while coef != re(0.0) {
        let nf = n as f64;
        let f1 = hyp2f1(alpha1, beta1 + nf, gamma1, x)?;
        let f2 = hyp2f1(alpha2 + nf, beta2, gamma2 + nf, y)?;
        let t = coef * f1.value * f2.value;
        inner_err += coef.norm()
            * (f1.abs_error_estimate * f2.value.norm() + f2.abs_error_estimate * f1.value.norm());
        last = t.norm();
        if !last.is_finite() {
            return Err(Error::NonFinite(F));
        }
        sum += t;
        max_term = max_term.max(last);
        max_partial = max_partial.max(sum.norm());
        n += 1;
        if last <= tol * max_partial {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                break;
            }
        } else {
            quiet = 0;
        }
        if n >= max_terms {
            return Ok(SeriesResult {
                value: sum,
                abs_error_estimate: last + inner_err + 2.0 * f64::EPSILON * max_term,
                terms_used: n,
                converged: false,
            });
        }
        coef *= (alpha2 + nf) * (beta1 + nf) / (gamma2 + nf) * z / (nf + 1.0);
    }
    let err = if coef == re(0.0) { 0.0 } else { last } + inner_err + 2.0 * f64::EPSILON * max_term;
    SeriesResult {
        value: sum,
        abs_error_estimate: err,
        terms_used: n,
        converged: within(err, sum, tol),
    }
    .check_finite(F)
}

/// F_M = 1/Γ(β₁) ∫₀^∞ e^{−t} t^{β₁−1} ₁F₁[α₁; γ₁; xt] Φ₁[α₂, β₂; γ₂; y, zt] dt,
/// for Re β₁ > 0 and Re(x + z) < 1.
///
/// The integrand decays like e^{−(1 − Re(x+z)) t} times a power of t. The
/// range is cut at the point where that envelope drops below 1e-16 of the
/// integral, and doubled until the piece beyond the cut is negligible.
/// Φ₁ values come from [`evaluate`].
pub fn fm_laplace(q: FmParams, x: C64, y: C64, z: C64) -> Result<SeriesResult> {
    fm_laplace_tol(q, x, y, z, 1e-11)
}

pub fn fm_laplace_tol(q: FmParams, x: C64, y: C64, z: C64, tol: f64) -> Result<SeriesResult> {
    const F: &str = "fm_laplace";
    let FmParams {
        alpha1,
        alpha2,
        beta1,
        beta2,
        gamma1,
        gamma2,
    } = q;
    if beta1.re <= 0.0 {
        return Err(Error::domain(F, "requires Re(beta1) > 0"));
    }
    let decay = 1.0 - (x + z).re;
    if decay <= 0.0 {
        return Err(Error::Divergent {
            func: F,
            reason: format!("Re(x + z) = {} must be < 1", (x + z).re),
        });
    }
    check_cut(F, y)?;
    let p = Phi1Params::new(alpha2, beta2, gamma2)?;
    let pre = gamma(beta1)?.inv();

    let integrand = |t: f64, t_from_0: f64| -> Result<C64> {
        let f = hyp1f1(alpha1, gamma1, x * t)?.value;
        let phi = evaluate(p, y, z * t, tol)?;
        let lg = -t + (beta1 - 1.0) * t_from_0.ln();
        Ok(lg.exp() * f * phi.value)
    };
    let piece = |lo: f64, hi: f64| -> Result<SeriesResult> {
        let mut failure = None;
        let r = integrate_interval(
            |t, from_lo, _| {
                let t0 = if lo == 0.0 { from_lo } else { t };
                match integrand(t, t0) {
                    Ok(v) => v,
                    Err(e) => {
                        failure.get_or_insert(e);
                        re(0.0)
                    }
                }
            },
            lo,
            hi,
            QuadOptions {
                tol,
                max_level: 10,
                min_level: 4,
            },
        );
        match failure {
            Some(e) => Err(e),
            None => Ok(r),
        }
    };

    // e^{−decay·T} T^{|Re β₁| + |α₁| + |α₂| + 1} < 1e-16 by a few Newton-free
    // fixed-point steps.
    let power = beta1.re.abs() + alpha1.norm() + alpha2.norm() + 1.0;
    let mut cut = 40.0 / decay;
    for _ in 0..4 {
        cut = (36.8 + power * cut.max(1.0).ln()) / decay;
    }
    let mut total = piece(0.0, cut)?;
    for _ in 0..6 {
        let tail = piece(cut, 2.0 * cut)?;
        total.value += tail.value;
        total.abs_error_estimate += tail.abs_error_estimate;
        total.terms_used += tail.terms_used;
        cut *= 2.0;
        if tail.value.norm() <= 1e-16 * total.value.norm() {
            break;
        }
    }
    let mut out = total.scale(pre);
    out.converged = within(out.abs_error_estimate, out.value, tol.max(1e-10));
    out.check_finite(F)
}

/// Regimes used for Φ₁ along the Laplace path; exposed for diagnostics.
pub fn fm_laplace_regimes(q: FmParams, y: C64, z: C64, t: &[f64]) -> Result<Vec<Regime>> {
    let p = Phi1Params::new(q.alpha2, q.beta2, q.gamma2)?;
    t.iter()
        .map(|&t| Ok(evaluate(p, y, z * t, 1e-12)?.regime))
        .collect()
}
