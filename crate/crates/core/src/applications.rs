//! Two uses of Φ₁ outside pure function theory.
//!
//! * The scaling form of the two-time spin correlation of the quenched
//!   one-dimensional Glauber–Ising chain,
//!   `C₀ = (2/π) √x e^{−y/x} Φ₁[½, 1; 3/2; −x, −y]` with `x = 2s/τ` and
//!   `y = μ²s`.
//! * Fractional integral operators with Φ₁ kernels,
//!
//! ```text
//! (A⁺f)(x) = ∫₀ˣ (x−t)^{γ−1}/Γ(γ) Φ₁[α, β; γ; 1 − x/t, λ(x−t)] f(t) dt
//! (A⁻f)(x) = ∫₀ˣ (x−t)^{γ−1}/Γ(γ) Φ₁[α, β; γ; 1 − t/x, λ(x−t)] f(t) dt
//! ```
//!
//! their closed forms on powers, and their expansions at the origin.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::evaluator::evaluate;
use crate::reference::{phi1_connection_from_gap, Phi1Params};
use crate::scalar::quad::{tanh_sinh, QuadOptions};
use crate::scalar::{
    as_integer, cpow, erfc, gamma_ratio, pfq, pochhammer, re, rgamma, SeriesResult, C64,
};

/// Tolerance handed to the Φ₁ evaluator inside quadratures.
const KERNEL_TOL: f64 = 1e-13;
/// Distance to x = 1 below which the A⁻ kernel uses the connection formula.
const NEAR_ONE: f64 = 0.25;
/// Quadrature nodes closer than this (relative to x/2) to the origin are
/// dropped; the cut-off is raised further when the A⁻ kernel grows faster
/// than 1/t there. The dropped piece is about cut-off^{e+1} of the integral
/// for an integrand envelope t^e.
const TINY_NODE: f64 = 1e-250;

/// Waiting time `s`, time difference `τ` and inverse correlation length `μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlauberPoint {
    pub s: f64,
    pub tau: f64,
    pub mu: f64,
}

impl GlauberPoint {
    pub fn new(s: f64, tau: f64, mu: f64) -> Result<Self> {
        if !(s > 0.0 && s.is_finite() && tau > 0.0 && tau.is_finite()) {
            return Err(Error::domain("GlauberPoint", "s and tau must be positive"));
        }
        if !(mu >= 0.0 && mu.is_finite()) {
            return Err(Error::domain("GlauberPoint", "mu must be non-negative"));
        }
        Ok(GlauberPoint { s, tau, mu })
    }

    /// x = 2s/τ.
    pub fn x(&self) -> f64 {
        2.0 * self.s / self.tau
    }

    /// y = μ²s.
    pub fn y(&self) -> f64 {
        self.mu * self.mu * self.s
    }

    /// Equilibration time τ_eq = 2/μ², infinite at μ = 0.
    pub fn tau_eq(&self) -> f64 {
        2.0 / (self.mu * self.mu)
    }
}

/// The correlation C₀(s, τ) at inverse correlation length μ.
pub fn glauber_c0(pt: GlauberPoint) -> Result<f64> {
    let pt = GlauberPoint::new(pt.s, pt.tau, pt.mu)?;
    let (x, y) = (pt.x(), pt.y());
    let p = Phi1Params::real(0.5, 1.0, 1.5)?;
    let phi = evaluate(p, re(-x), re(-y), KERNEL_TOL)?.value;
    // e^{−μ²τ/2} = e^{−y/x}
    Ok(2.0 / PI * x.sqrt() * (-y / x).exp() * phi.re)
}

/// (2/π) arctan √(2s/τ).
pub fn glauber_zero_temperature(s: f64, tau: f64) -> f64 {
    2.0 / PI * (2.0 * s / tau).sqrt().atan()
}

/// erfc(√(τ/τ_eq)), the large-s limit of C₀.
pub fn glauber_equilibrium_limit(tau_over_taueq: f64) -> f64 {
    erfc(re(tau_over_taueq.sqrt())).re
}

/// Parameters of A± on the interval (0, b_end].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrabhakarParams {
    pub alpha: C64,
    pub beta: C64,
    pub gamma_: C64,
    pub lambda_: C64,
    pub b_end: f64,
}

impl PrabhakarParams {
    pub fn new(alpha: C64, beta: C64, gamma_: C64, lambda_: C64, b_end: f64) -> Result<Self> {
        if gamma_.re <= 0.0 {
            return Err(Error::domain("PrabhakarParams", "requires Re(gamma) > 0"));
        }
        if b_end.is_nan() || b_end <= 0.0 {
            return Err(Error::domain("PrabhakarParams", "requires b_end > 0"));
        }
        Ok(PrabhakarParams {
            alpha,
            beta,
            gamma_,
            lambda_,
            b_end,
        })
    }

    fn kernel_params(&self) -> Result<Phi1Params> {
        Phi1Params::new(self.alpha, self.beta, self.gamma_)
    }

    fn check_x(&self, func: &'static str, x: f64) -> Result<()> {
        if self.gamma_.re <= 0.0 {
            return Err(Error::domain(func, "requires Re(gamma) > 0"));
        }
        if !(x > 0.0 && x <= self.b_end) {
            return Err(Error::domain(
                func,
                format!("x = {x} must lie in (0, {}]", self.b_end),
            ));
        }
        Ok(())
    }
}

/// Which operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

fn plus_prefactor(pp: &PrabhakarParams, rho: C64) -> Result<C64> {
    let (a, b, g) = (pp.alpha, pp.beta, pp.gamma_);
    gamma_ratio(
        &[rho + a + 1.0, rho + b + 1.0],
        &[rho + g + 1.0, rho + a + b + 1.0],
    )
}

fn minus_prefactor(pp: &PrabhakarParams, rho: C64) -> Result<C64> {
    let (a, b, g) = (pp.alpha, pp.beta, pp.gamma_);
    gamma_ratio(
        &[rho + 1.0, rho + g - a - b + 1.0],
        &[rho + g - a + 1.0, rho + g - b + 1.0],
    )
}

fn plus_rho_ok(pp: &PrabhakarParams, rho: C64) -> bool {
    rho.re > -pp.alpha.re.min(pp.beta.re) - 1.0
}

fn minus_rho_ok(pp: &PrabhakarParams, rho: C64) -> bool {
    rho.re > (pp.alpha + pp.beta - pp.gamma_).re.max(0.0) - 1.0
}

/// (A⁺t^ρ)(x) = Γ(ρ+α+1)Γ(ρ+β+1)/(Γ(ρ+γ+1)Γ(ρ+α+β+1)) x^{ρ+γ}
/// ₂F₂[α, ρ+α+1; ρ+γ+1, ρ+α+β+1; λx].
pub fn prabhakar_plus_power(pp: PrabhakarParams, rho: C64, x: f64) -> Result<C64> {
    const F: &str = "prabhakar_plus_power";
    pp.check_x(F, x)?;
    if !plus_rho_ok(&pp, rho) {
        return Err(Error::domain(
            F,
            "requires Re(rho) > -min(Re alpha, Re beta) - 1",
        ));
    }
    let (a, b, g) = (pp.alpha, pp.beta, pp.gamma_);
    let pre = plus_prefactor(&pp, rho)?;
    let f = pfq(
        &[a, rho + a + 1.0],
        &[rho + g + 1.0, rho + a + b + 1.0],
        pp.lambda_ * x,
        1e-16,
        10_000,
    )?;
    Ok(pre * cpow(re(x), rho + g) * f.value)
}

/// (A⁻t^ρ)(x) = Γ(ρ+1)Γ(ρ+γ−α−β+1)/(Γ(ρ+γ−α+1)Γ(ρ+γ−β+1)) x^{ρ+γ}
/// ₁F₁[α; ρ+γ−β+1; λx].
pub fn prabhakar_minus_power(pp: PrabhakarParams, rho: C64, x: f64) -> Result<C64> {
    const F: &str = "prabhakar_minus_power";
    pp.check_x(F, x)?;
    if !minus_rho_ok(&pp, rho) {
        return Err(Error::domain(
            F,
            "requires Re(rho) > max(Re(alpha + beta - gamma), 0) - 1",
        ));
    }
    let (a, b, g) = (pp.alpha, pp.beta, pp.gamma_);
    let pre = minus_prefactor(&pp, rho)?;
    let f = pfq(&[a], &[rho + g - b + 1.0], pp.lambda_ * x, 1e-16, 10_000)?;
    Ok(pre * cpow(re(x), rho + g) * f.value)
}

/// Exponent e of the algebraic envelope t^e of the A± integrand at t → 0
/// for an input behaving like t^{f_exponent}.
fn origin_exponent(pp: &PrabhakarParams, f_exponent: f64, side: Side) -> f64 {
    match side {
        Side::Plus => f_exponent + pp.alpha.re.min(pp.beta.re),
        Side::Minus => f_exponent + (pp.gamma_ - pp.alpha - pp.beta).re.min(0.0),
    }
}

/// (A±f)(x) by quadrature.
///
/// `f_exponent` is the caller's declaration that f(t) = O(t^{f_exponent})
/// at the origin. The integral is split at x/2; on (0, x/2] the variable is
/// t = (x/2)u and on [x/2, x) it is t = x − (x/2)v, so that the factor
/// (x−t)^{γ−1} is formed from an exact v. Kernel values come from the Φ₁
/// evaluator, except that the A⁻ kernel near t = 0 is computed from the
/// connection formula at x = 1 with 1 − t/x passed exactly. Integrands
/// whose envelope at 0 is not integrable are rejected, and singular
/// envelopes get a deeper refinement budget.
pub fn prabhakar_apply<F>(
    pp: PrabhakarParams,
    f: F,
    f_exponent: f64,
    x: f64,
    side: Side,
) -> Result<SeriesResult>
where
    F: Fn(f64) -> C64,
{
    const FN: &str = "prabhakar_apply";
    pp.check_x(FN, x)?;
    let e0 = origin_exponent(&pp, f_exponent, side);
    if e0 <= -1.0 {
        return Err(Error::Divergent {
            func: FN,
            reason: format!("integrand behaves like t^{e0} at the origin"),
        });
    }
    let p = pp.kernel_params()?;
    let rg = rgamma(pp.gamma_)?;
    let g1 = pp.gamma_ - 1.0;
    let half = 0.5 * x;
    let budget = |singular: bool| QuadOptions {
        tol: 1e-11,
        max_level: if singular { 12 } else { 10 },
        min_level: 4,
    };

    // keep (u/2)^{Re(c−a−b)} finite on the minus side
    let blowup = match side {
        Side::Plus => 0.0,
        Side::Minus => -(p.c - p.a - p.b).re.min(0.0),
    };
    let tiny = TINY_NODE.max(10f64.powf(-300.0 / blowup.max(1.0)));

    let mut failure: Option<Error> = None;
    // Near t = 0 on the minus side the kernel argument approaches 1 and is
    // handed over as its distance to 1, so that the connection formula
    // sees it at full precision.
    let connect = as_integer(p.c - p.a - p.b).is_none();
    // `arg` is the first Φ₁ argument, `to_one` = 1 − arg when known
    // exactly, `gap` = x − t.
    let mut kernel = |arg: f64, to_one: Option<f64>, gap: f64, t: f64| -> C64 {
        if failure.is_some() {
            return re(0.0);
        }
        let y = pp.lambda_ * gap;
        let phi = match to_one {
            Some(w) if connect && w < NEAR_ONE => {
                phi1_connection_from_gap(p, re(w), y, KERNEL_TOL, 20_000).map(|r| r.value)
            }
            _ => evaluate(p, re(arg), y, KERNEL_TOL).map(|r| r.value),
        };
        match phi {
            Ok(phi) => cpow(re(gap), g1) * rg * phi * f(t),
            Err(e) => {
                failure = Some(e);
                re(0.0)
            }
        }
    };

    let left = tanh_sinh(
        |u, _| {
            if u < tiny {
                return re(0.0);
            }
            let t = half * u;
            let gap = x - t;
            let v = match side {
                Side::Plus => kernel(1.0 - 2.0 / u, None, gap, t),
                Side::Minus => {
                    // the clamp only matters when c − a − b is an integer
                    let w = 0.5 * u;
                    let arg = (1.0 - w).min(1.0 - 0.5 * f64::EPSILON);
                    kernel(arg, Some(w), gap, t)
                }
            };
            v * half
        },
        budget(e0 < 0.0),
    );
    let right = tanh_sinh(
        |v, _| {
            let gap = half * v;
            let t = x - gap;
            let arg = match side {
                Side::Plus => -gap / t,
                Side::Minus => 0.5 * v,
            };
            kernel(arg, None, gap, t) * half
        },
        budget(g1.re < 0.0),
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let value = left.value + right.value;
    let err = left.abs_error_estimate + right.abs_error_estimate;
    SeriesResult {
        value,
        abs_error_estimate: err,
        terms_used: left.terms_used + right.terms_used,
        converged: left.converged && right.converged,
    }
    .check_finite(FN)
}

fn check_coeffs(func: &'static str, a_coeffs: &[C64]) -> Result<()> {
    if a_coeffs.is_empty() {
        return Err(Error::domain(func, "a_coeffs must not be empty"));
    }
    Ok(())
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |a, k| a * k as f64)
}

/// Expansion of (A⁺f)(x) at x → 0 for f(t) = Σ_k a_k t^{ρ+k}:
/// pairs (ρ+γ+n, G σ_n) for n = 0..=order, with
/// G = Γ(ρ+α+1)Γ(ρ+β+1)/(Γ(ρ+γ+1)Γ(ρ+α+β+1)) and
///
/// ```text
/// σ_n = (ρ+α+1)_n / ((ρ+γ+1)_n (ρ+α+β+1)_n)
///       Σ_{k=0}^{n} a_k (ρ+β+1)_k (α)_{n−k} λ^{n−k}/(n−k)!
/// ```
///
/// Coefficients a_k beyond the supplied list are taken as zero, so
/// σ₀ = a₀.
pub fn prabhakar_plus_asym(
    pp: PrabhakarParams,
    rho: C64,
    a_coeffs: &[C64],
    order: usize,
) -> Result<Vec<(C64, C64)>> {
    const F: &str = "prabhakar_plus_asym";
    check_coeffs(F, a_coeffs)?;
    if !plus_rho_ok(&pp, rho) {
        return Err(Error::domain(
            F,
            "requires Re(rho) > -min(Re alpha, Re beta) - 1",
        ));
    }
    let (a, b, g, l) = (pp.alpha, pp.beta, pp.gamma_, pp.lambda_);
    if as_integer(a - b).is_some() {
        return Err(Error::param_pole(F, "alpha - beta is an integer"));
    }
    let pre = plus_prefactor(&pp, rho)?;
    (0..=order)
        .map(|n| {
            let mut s = re(0.0);
            for (k, &ak) in a_coeffs.iter().enumerate().take(n + 1) {
                let j = n - k;
                s += ak
                    * pochhammer(rho + b + 1.0, k as u64)
                    * pochhammer(a, j as u64)
                    * l.powu(j as u32)
                    / factorial(j);
            }
            let sigma = s * pochhammer(rho + a + 1.0, n as u64)
                / (pochhammer(rho + g + 1.0, n as u64) * pochhammer(rho + a + b + 1.0, n as u64));
            Ok((rho + g + n as f64, pre * sigma))
        })
        .collect()
}

/// Expansion of (A⁻f)(x) at x → 0, pairs (ρ+γ+n, G τ_n) with
/// G = Γ(ρ+1)Γ(ρ+γ−α−β+1)/(Γ(ρ+γ−α+1)Γ(ρ+γ−β+1)) and
///
/// ```text
/// τ_n = 1/(ρ+γ−β+1)_n Σ_{k=0}^{n} a_k (ρ+1)_k (ρ+γ−α−β+1)_k/(ρ+γ−α+1)_k
///       (α)_{n−k} λ^{n−k}/(n−k)!
/// ```
pub fn prabhakar_minus_asym(
    pp: PrabhakarParams,
    rho: C64,
    a_coeffs: &[C64],
    order: usize,
) -> Result<Vec<(C64, C64)>> {
    const F: &str = "prabhakar_minus_asym";
    check_coeffs(F, a_coeffs)?;
    if !minus_rho_ok(&pp, rho) {
        return Err(Error::domain(
            F,
            "requires Re(rho) > max(Re(alpha + beta - gamma), 0) - 1",
        ));
    }
    let (a, b, g, l) = (pp.alpha, pp.beta, pp.gamma_, pp.lambda_);
    if as_integer(a + b - g).is_some() {
        return Err(Error::param_pole(F, "alpha + beta - gamma is an integer"));
    }
    let pre = minus_prefactor(&pp, rho)?;
    (0..=order)
        .map(|n| {
            let mut s = re(0.0);
            for (k, &ak) in a_coeffs.iter().enumerate().take(n + 1) {
                let j = n - k;
                let k = k as u64;
                s += ak * pochhammer(rho + 1.0, k) * pochhammer(rho + g - a - b + 1.0, k)
                    / pochhammer(rho + g - a + 1.0, k)
                    * pochhammer(a, j as u64)
                    * l.powu(j as u32)
                    / factorial(j);
            }
            let tau = s / pochhammer(rho + g - b + 1.0, n as u64);
            Ok((rho + g + n as f64, pre * tau))
        })
        .collect()
}

/// Σ coefficient · x^{exponent} over an expansion from
/// [`prabhakar_plus_asym`] or [`prabhakar_minus_asym`].
pub fn sum_power_expansion(terms: &[(C64, C64)], x: f64) -> C64 {
    terms.iter().map(|&(e, c)| c * cpow(re(x), e)).sum()
}

/// Where the kernel estimate applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelSide {
    /// Φ₁(x, y) for x ∈ [0, 1).
    NearOne,
    /// Φ₁(−x, y) for x ≥ 0.
    LargeNegative,
}

/// Envelope of |Φ₁| with unit constant.
///
/// * `NearOne`: (1 − x)^{min(0, Re(c−a−b))} for x ∈ [0, 1), requires
///   a+b−c ∉ ℤ.
/// * `LargeNegative`: 1 for x ≤ 1 and x^{−min(Re a, Re b)} beyond, for
///   Φ₁(−x, y) with x ≥ 0; requires a−b ∉ ℤ.
pub fn phi1_kernel_bound(p: Phi1Params, x_arg: f64, side: KernelSide) -> Result<f64> {
    const F: &str = "phi1_kernel_bound";
    match side {
        KernelSide::NearOne => {
            if as_integer(p.a + p.b - p.c).is_some() {
                return Err(Error::param_pole(F, "a + b - c is an integer"));
            }
            if !(0.0..1.0).contains(&x_arg) {
                return Err(Error::domain(F, "near-one bound needs x in [0, 1)"));
            }
            Ok((1.0 - x_arg).powf((p.c - p.a - p.b).re.min(0.0)))
        }
        KernelSide::LargeNegative => {
            if as_integer(p.a - p.b).is_some() {
                return Err(Error::param_pole(F, "a - b is an integer"));
            }
            if !(x_arg >= 0.0 && x_arg.is_finite()) {
                return Err(Error::domain(F, "large-negative bound needs x >= 0"));
            }
            if x_arg <= 1.0 {
                Ok(1.0)
            } else {
                Ok(x_arg.powf(-p.a.re.min(p.b.re)))
            }
        }
    }
}

/// The constant C = max |Φ₁| / envelope over the sample points, at fixed
/// second argument `y`. Sample points are interpreted as in
/// [`phi1_kernel_bound`].
pub fn fit_kernel_constant(p: Phi1Params, y: C64, side: KernelSide, xs: &[f64]) -> Result<f64> {
    let mut c = 0.0f64;
    for &x in xs {
        let env = phi1_kernel_bound(p, x, side)?;
        let arg = match side {
            KernelSide::NearOne => x,
            KernelSide::LargeNegative => -x,
        };
        let v = evaluate(p, re(arg), y, KERNEL_TOL)?.value.norm();
        c = c.max(v / env);
    }
    Ok(c)
}
