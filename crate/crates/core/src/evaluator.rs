//! Single entry point for Φ₁: picks a representation for the point,
//! evaluates it and reports the method with an error estimate. Also runs
//! every applicable method side by side for cross-checking.
//!
//! Dispatch order:
//!
//! 1. exact reductions when a ∈ ℤ≤0 or a − c ∈ ℤ≥0;
//! 2. `series-2f1` inside |x| ≤ `series_x`, |y| ≤ `series_y`;
//! 3. for |x| > `large_x`: the joint regimes when also |y| > `large_y`,
//!    then `eta-x` / `large-x`;
//! 4. for |y| > `large_y`: `eta-y` when |xy| ≤ `eta`, then the large-y
//!    family (right, left or the two-family form off the real axis);
//! 5. for |1 − x| < `near_one`: `connection-x1`, or `series-2f1` followed by
//!    `x-to-1-log` when c = a + b;
//! 6. `series-2f1` anywhere in the cut plane with |y| ≤ `large_y`, then
//!    `euler-integral` when Re c > Re a > 0.
//!
//! Candidates are tried in that order. The first whose relative error
//! estimate meets the tolerance is returned; otherwise the most accurate
//! successful candidate is.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::asymptotic::{
    eta_large_x_expansion, eta_large_y_expansion, joint_beta_expansion, joint_imaginary_expansion,
    joint_lambda_expansion, joint_lambda_two_family_expansion, large_x_expansion,
    large_y_left_expansion, large_y_right_expansion, large_y_two_family_expansion,
    optimal_truncation, phi1_x_to_1_log, AsymptoticExpansion, AsymptoticOptions, EtaDirection,
};
use crate::error::{Error, Result};
use crate::reference::{
    check_cut, euler_integral_tol, phi1_at_one, phi1_near_x1_connection_tol, phi1_reduction_cm,
    phi1_reduction_negm, phi1_series_2f1, phi1_taylor, Phi1Params,
};
use crate::scalar::{
    as_integer, distance_to_integer, gamma_ratio, nonpositive_integer, re, SeriesResult, C64,
    DEFAULT_MAX_TERMS,
};

/// Highest order built for the divergent expansions before optimal
/// truncation.
const DIVERGENT_MAX_ORDER: usize = 40;
/// Order schedule for the convergent large-x and eta-x series. Beyond
/// about 70 the Pochhammer ratios in their coefficients overflow.
const CONVERGENT_ORDERS: [usize; 3] = [24, 48, 64];
/// A method enters a cross-check only if its own relative error estimate
/// is below this.
const CROSS_CHECK_ACCEPT: f64 = 1e-8;

/// Evaluation method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    Taylor,
    Series2F1,
    EulerIntegral,
    ConnectionX1,
    LargeX,
    LargeYLeft,
    LargeYRight,
    ImaginaryY,
    JointBeta,
    JointLambda,
    EtaX,
    EtaY,
    XTo1Log,
    Reduction,
}

impl Regime {
    pub const ALL: [Regime; 14] = [
        Regime::Taylor,
        Regime::Series2F1,
        Regime::EulerIntegral,
        Regime::ConnectionX1,
        Regime::LargeX,
        Regime::LargeYLeft,
        Regime::LargeYRight,
        Regime::ImaginaryY,
        Regime::JointBeta,
        Regime::JointLambda,
        Regime::EtaX,
        Regime::EtaY,
        Regime::XTo1Log,
        Regime::Reduction,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Regime::Taylor => "taylor",
            Regime::Series2F1 => "series-2f1",
            Regime::EulerIntegral => "euler-integral",
            Regime::ConnectionX1 => "connection-x1",
            Regime::LargeX => "large-x",
            Regime::LargeYLeft => "large-y-left",
            Regime::LargeYRight => "large-y-right",
            Regime::ImaginaryY => "imaginary-y",
            Regime::JointBeta => "joint-beta",
            Regime::JointLambda => "joint-lambda",
            Regime::EtaX => "eta-x",
            Regime::EtaY => "eta-y",
            Regime::XTo1Log => "x-to-1-log",
            Regime::Reduction => "reduction",
        }
    }

    /// Methods whose value converges to Φ₁ as more work is spent.
    pub fn is_convergent(self) -> bool {
        matches!(
            self,
            Regime::Taylor
                | Regime::Series2F1
                | Regime::EulerIntegral
                | Regime::ConnectionX1
                | Regime::Reduction
        )
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Regime::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| Error::domain("Regime", format!("unknown regime tag {s:?}")))
    }
}

/// Crossover points between representations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    /// |x| bound of the series-2f1 box.
    pub series_x: f64,
    /// |y| bound of the series-2f1 box.
    pub series_y: f64,
    /// |x| above which the large-x regimes are tried.
    pub large_x: f64,
    /// |y| above which the large-y regimes are tried.
    pub large_y: f64,
    /// |1 − x| below which the x = 1 connection is tried.
    pub near_one: f64,
    /// |xy| below which the fixed-η regimes are preferred.
    pub eta: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            series_x: 0.8,
            series_y: 20.0,
            large_x: 5.0,
            large_y: 25.0,
            near_one: 0.25,
            eta: 5.0,
        }
    }
}

impl Thresholds {
    pub const KEYS: [&'static str; 6] = [
        "series_x", "series_y", "large_x", "large_y", "near_one", "eta",
    ];

    /// Sets one threshold by name.
    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::domain(
                "Thresholds",
                format!("{key} must be positive and finite, got {value}"),
            ));
        }
        let slot = match key {
            "series_x" => &mut self.series_x,
            "series_y" => &mut self.series_y,
            "large_x" => &mut self.large_x,
            "large_y" => &mut self.large_y,
            "near_one" => &mut self.near_one,
            "eta" => &mut self.eta,
            _ => {
                return Err(Error::domain(
                    "Thresholds",
                    format!(
                        "unknown key {key:?}; expected one of {}",
                        Self::KEYS.join(", ")
                    ),
                ))
            }
        };
        *slot = value;
        Ok(())
    }

    /// Defaults overridden by `key = value` lines. Blank lines and lines
    /// starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut t = Thresholds::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::domain("Thresholds", format!("line {}: expected key=value", i + 1))
            })?;
            let value: f64 = value.trim().parse().map_err(|_| {
                Error::domain(
                    "Thresholds",
                    format!("line {}: {:?} is not a number", i + 1, value.trim()),
                )
            })?;
            t.set(key.trim(), value)?;
        }
        Ok(t)
    }
}

/// Settings for [`evaluate_with`] and [`cross_check_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Relative tolerance requested from the chosen method.
    pub tol: f64,
    pub max_terms: usize,
    pub thresholds: Thresholds,
    /// Fixed truncation order for expansions; `None` truncates optimally.
    pub order: Option<usize>,
    /// Use this method instead of dispatching.
    pub regime: Option<Regime>,
    pub asymptotic: AsymptoticOptions,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            tol: 1e-12,
            max_terms: DEFAULT_MAX_TERMS,
            thresholds: Thresholds::default(),
            order: None,
            regime: None,
            asymptotic: AsymptoticOptions::default(),
        }
    }
}

impl EvalConfig {
    pub fn with_tol(tol: f64) -> Self {
        EvalConfig {
            tol,
            ..Default::default()
        }
    }
}

/// One method's value inside a cross-check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeValue {
    pub regime: Regime,
    pub value: C64,
    pub abs_error_estimate: f64,
}

/// |value(first) − value(second)|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Agreement {
    pub first: Regime,
    pub second: Regime,
    pub abs_delta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AgreementMatrix {
    pub values: Vec<RegimeValue>,
    pub deltas: Vec<Agreement>,
}

impl AgreementMatrix {
    fn from_values(values: Vec<RegimeValue>) -> Self {
        let mut deltas = Vec::new();
        for (i, u) in values.iter().enumerate() {
            for v in &values[i + 1..] {
                deltas.push(Agreement {
                    first: u.regime,
                    second: v.regime,
                    abs_delta: (u.value - v.value).norm(),
                });
            }
        }
        AgreementMatrix { values, deltas }
    }

    pub fn max_delta(&self) -> f64 {
        self.deltas.iter().map(|d| d.abs_delta).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub value: C64,
    pub regime: Regime,
    /// Estimate, not a bound.
    pub abs_error_estimate: f64,
    /// Present only for cross-checks.
    pub agreement_matrix: Option<AgreementMatrix>,
}

impl EvalReport {
    pub fn relative_error_estimate(&self) -> f64 {
        self.abs_error_estimate / self.value.norm().max(f64::MIN_POSITIVE)
    }
}

/// Evaluates Φ₁[a, b; c; x, y] with the default thresholds.
pub fn evaluate(p: Phi1Params, x: C64, y: C64, tol: f64) -> Result<EvalReport> {
    evaluate_with(p, x, y, &EvalConfig::with_tol(tol))
}

pub fn evaluate_with(p: Phi1Params, x: C64, y: C64, cfg: &EvalConfig) -> Result<EvalReport> {
    if cfg.tol.is_nan() || cfg.tol <= 0.0 {
        return Err(Error::domain("evaluate", "tol must be positive"));
    }
    if let Some(r) = cfg.regime {
        return evaluate_regime(p, x, y, r, cfg);
    }
    let candidates = dispatch_order(p, x, y, &cfg.thresholds);
    let mut best: Option<EvalReport> = None;
    let mut first_err: Option<Error> = None;
    for r in &candidates {
        match run(*r, p, x, y, cfg, false) {
            Ok(rep) => {
                if rep.relative_error_estimate() <= cfg.tol {
                    return Ok(rep);
                }
                let better = best
                    .as_ref()
                    .is_none_or(|b| rep.relative_error_estimate() < b.relative_error_estimate());
                if better {
                    best = Some(rep);
                }
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    if let Some(b) = best {
        return Ok(b);
    }
    let nearest = candidates
        .first()
        .map(|r| r.tag().to_string())
        .unwrap_or_else(|| "none".into());
    Err(Error::Unsupported {
        reason: first_err.map_or_else(|| "no candidate regime".into(), |e| e.to_string()),
        nearest,
    })
}

/// Evaluates with one specific method. The one-sided large-y and
/// joint-λ forms are used exactly as requested, without the automatic
/// switch to two families.
pub fn evaluate_regime(
    p: Phi1Params,
    x: C64,
    y: C64,
    regime: Regime,
    cfg: &EvalConfig,
) -> Result<EvalReport> {
    run(regime, p, x, y, cfg, true)
}

/// Candidate methods for a point, in the order [`evaluate`] tries them.
pub fn dispatch_order(p: Phi1Params, x: C64, y: C64, th: &Thresholds) -> Vec<Regime> {
    let mut v = Vec::new();
    if reduction_applies(p) {
        v.push(Regime::Reduction);
    }
    let (ax, ay) = (x.norm(), y.norm());
    let small_eta = (x * y).norm() <= th.eta;
    if ax <= th.series_x && ay <= th.series_y {
        v.push(Regime::Series2F1);
    }
    if ax > th.large_x {
        if ay > th.large_y {
            if x.im == 0.0 && x.re < 0.0 {
                v.push(Regime::JointLambda);
            }
            v.push(Regime::JointBeta);
        }
        if small_eta {
            v.extend([Regime::EtaX, Regime::LargeX]);
        } else {
            v.extend([Regime::LargeX, Regime::EtaX]);
        }
    }
    if ay > th.large_y {
        if small_eta {
            v.push(Regime::EtaY);
        }
        v.push(large_y_tag(y));
    }
    if (re(1.0) - x).norm() < th.near_one {
        if distance_to_integer(p.c - p.a - p.b) > 1e-12 {
            v.push(Regime::ConnectionX1);
        } else {
            v.push(Regime::Series2F1);
            if (p.c - p.a - p.b).norm() <= 1e-12 {
                v.push(Regime::XTo1Log);
            }
        }
    }
    if ay <= th.large_y {
        v.push(Regime::Series2F1);
    }
    if p.c.re > p.a.re && p.a.re > 0.0 {
        v.push(Regime::EulerIntegral);
    }
    let mut seen = Vec::new();
    v.retain(|r| {
        if seen.contains(r) {
            false
        } else {
            seen.push(*r);
            true
        }
    });
    v
}

/// Every method whose hypotheses the point satisfies; the x → 1
/// logarithmic model is left out because its remainder is not quantified.
pub fn applicable_regimes(p: Phi1Params, x: C64, y: C64, th: &Thresholds) -> Vec<Regime> {
    let mut v = Vec::new();
    if x.im == 0.0 && x.re >= 1.0 {
        // Φ₁ is not single-valued on the cut; only the x = 1 connection
        // value is defined there.
        if x.re == 1.0 && (p.c - p.a - p.b).re > 0.0 {
            v.push(Regime::ConnectionX1);
        }
        return v;
    }
    let (ax, ay) = (x.norm(), y.norm());
    if reduction_applies(p) {
        v.push(Regime::Reduction);
    }
    if ax <= th.series_x {
        v.push(Regime::Taylor);
    }
    if ay <= th.large_y {
        v.push(Regime::Series2F1);
    }
    if p.c.re > p.a.re && p.a.re > 0.0 {
        v.push(Regime::EulerIntegral);
    }
    if (re(1.0) - x).norm() < 2.0 * th.near_one && distance_to_integer(p.c - p.a - p.b) > 1e-12 {
        v.push(Regime::ConnectionX1);
    }
    if ax > th.large_x {
        v.extend([Regime::LargeX, Regime::EtaX]);
    }
    if ay > th.large_y {
        v.push(large_y_tag(y));
        if (x * y).norm() <= th.eta {
            v.push(Regime::EtaY);
        }
        if ax > th.large_x {
            if x.im == 0.0 && x.re < 0.0 {
                v.push(Regime::JointLambda);
            }
            v.push(Regime::JointBeta);
        }
    }
    v
}

/// Evaluates every applicable method and reports their pairwise deltas.
pub fn cross_check(p: Phi1Params, x: C64, y: C64) -> Result<EvalReport> {
    cross_check_with(p, x, y, &EvalConfig::default())
}

/// Methods that fail, or whose own relative error estimate exceeds 1e-8,
/// are left out of the matrix. The returned value comes from the most
/// accurate convergent method when one is present.
pub fn cross_check_with(p: Phi1Params, x: C64, y: C64, cfg: &EvalConfig) -> Result<EvalReport> {
    let mut values = Vec::new();
    for r in applicable_regimes(p, x, y, &cfg.thresholds) {
        if let Ok(rep) = run(r, p, x, y, cfg, false) {
            if rep.relative_error_estimate() <= CROSS_CHECK_ACCEPT {
                values.push(RegimeValue {
                    regime: rep.regime,
                    value: rep.value,
                    abs_error_estimate: rep.abs_error_estimate,
                });
            }
        }
    }
    if values.len() < 2 {
        let which = values
            .first()
            .map(|v| v.regime.tag())
            .unwrap_or("no regime");
        return Err(Error::domain(
            "cross_check",
            format!("needs at least two methods, only {which} applies"),
        ));
    }
    let pick = values
        .iter()
        .filter(|v| v.regime.is_convergent())
        .min_by(|u, v| u.abs_error_estimate.total_cmp(&v.abs_error_estimate))
        .or_else(|| {
            values
                .iter()
                .min_by(|u, v| u.abs_error_estimate.total_cmp(&v.abs_error_estimate))
        })
        .copied()
        .expect("at least two values");
    Ok(EvalReport {
        value: pick.value,
        regime: pick.regime,
        abs_error_estimate: pick.abs_error_estimate,
        agreement_matrix: Some(AgreementMatrix::from_values(values)),
    })
}

fn reduction_applies(p: Phi1Params) -> bool {
    nonpositive_integer(p.a).is_some() || as_integer(p.a - p.c).is_some_and(|m| m >= 0)
}

fn large_y_tag(y: C64) -> Regime {
    if y.im == 0.0 {
        if y.re > 0.0 {
            Regime::LargeYRight
        } else {
            Regime::LargeYLeft
        }
    } else {
        Regime::ImaginaryY
    }
}

fn report(regime: Regime, value: C64, abs_error_estimate: f64) -> Result<EvalReport> {
    if !(value.re.is_finite() && value.im.is_finite() && abs_error_estimate.is_finite()) {
        return Err(Error::NonFinite("evaluate"));
    }
    Ok(EvalReport {
        value,
        regime,
        abs_error_estimate: abs_error_estimate.max(0.0),
        agreement_matrix: None,
    })
}

fn from_series(regime: Regime, r: SeriesResult) -> Result<EvalReport> {
    report(regime, r.value, r.abs_error_estimate)
}

/// Size of the algebraic family Γ(c)/Γ(c−a) (−y)^{−a} dropped by the
/// one-sided forms on the positive real axis.
fn algebraic_family_size(p: Phi1Params, y: C64) -> Result<f64> {
    let g = gamma_ratio(&[p.c], &[p.c - p.a])?;
    Ok(g.norm() * y.norm().powf(-p.a.re) * (PI * p.a.im.abs()).exp())
}

/// Size of the exponential family Γ(c)/Γ(a) e^y y^{a−c} (1−x)^{−b}
/// dropped by the one-sided forms on the negative real axis.
fn exponential_family_size(p: Phi1Params, x: C64, y: C64) -> Result<f64> {
    let g = gamma_ratio(&[p.c], &[p.a])?;
    let omx = re(1.0) - x;
    let log = y.re + (p.a - p.c).re * y.norm().ln() - p.b.re * omx.norm().ln()
        + PI * ((p.a - p.c).im.abs() + p.b.im.abs());
    Ok(g.norm() * log.exp())
}

/// Sums each term group up to its own smallest term. The error estimate
/// is the first omitted term of every group plus rounding.
fn sum_optimally(e: &AsymptoticExpansion) -> (C64, f64) {
    let mut value = re(0.0);
    let mut err = 0.0;
    let mut mass = 0.0;
    for g in &e.terms {
        let moduli: Vec<f64> = (0..g.coefficients.len())
            .map(|k| g.term(k).map_or(0.0, |t| t.norm()))
            .collect();
        let idx = optimal_truncation(&moduli);
        for k in 0..=idx {
            let t = g.term(k).unwrap_or_default();
            value += t;
            mass += t.norm();
        }
        err += moduli.get(idx + 1).copied().unwrap_or(moduli[idx]);
    }
    (value, err + 4.0 * f64::EPSILON * mass)
}

/// Plain partial sum through `order`; the error estimate is the next
/// index's combined modulus (the expansion must be built to order + 1).
fn sum_to(e: &AsymptoticExpansion, order: usize) -> (C64, f64) {
    let t = e.partial_sum(order);
    let moduli = e.term_moduli();
    let mass: f64 = moduli.iter().take(order + 1).sum();
    let next = moduli
        .get(order + 1)
        .copied()
        .unwrap_or(t.last_term_modulus);
    (t.value, next + 4.0 * f64::EPSILON * mass)
}

fn divergent(
    cfg: &EvalConfig,
    build: impl Fn(usize) -> Result<AsymptoticExpansion>,
) -> Result<(C64, f64)> {
    match cfg.order {
        Some(n) => Ok(sum_to(&build(n + 1)?, n)),
        None => Ok(sum_optimally(&build(DIVERGENT_MAX_ORDER)?)),
    }
}

/// Convergent series in 1/x: the order is raised until the last term is
/// below the tolerance.
fn convergent(
    cfg: &EvalConfig,
    min_order: usize,
    build: impl Fn(usize) -> Result<AsymptoticExpansion>,
) -> Result<(C64, f64)> {
    if let Some(n) = cfg.order {
        return Ok(sum_to(&build(n.max(min_order) + 1)?, n.max(min_order)));
    }
    let mut out = (re(0.0), f64::INFINITY);
    for order in CONVERGENT_ORDERS {
        let order = order.max(min_order);
        let e = build(order)?;
        let t = e.partial_sum(order);
        let mass: f64 = e.term_moduli().iter().sum();
        out = (t.value, t.last_term_modulus + 4.0 * f64::EPSILON * mass);
        if t.last_term_modulus <= cfg.tol * t.value.norm() {
            break;
        }
    }
    Ok(out)
}

fn order_floor(bounds: &[C64]) -> usize {
    bounds
        .iter()
        .map(|z| z.norm().ceil() as usize)
        .max()
        .unwrap_or(0)
}

fn run(
    regime: Regime,
    p: Phi1Params,
    x: C64,
    y: C64,
    cfg: &EvalConfig,
    strict: bool,
) -> Result<EvalReport> {
    let Phi1Params { a, b, c } = p;
    let opts = &cfg.asymptotic;
    match regime {
        Regime::Taylor => from_series(regime, phi1_taylor(p, x, y, cfg.tol, cfg.max_terms)?),
        Regime::Series2F1 => from_series(regime, phi1_series_2f1(p, x, y, cfg.tol, cfg.max_terms)?),
        Regime::EulerIntegral => from_series(regime, euler_integral_tol(p, x, y, cfg.tol)?),
        Regime::ConnectionX1 => {
            let r = if x == re(1.0) {
                phi1_at_one(p, y)?
            } else {
                phi1_near_x1_connection_tol(p, x, y, cfg.tol, cfg.max_terms)?
            };
            from_series(regime, r)
        }
        Regime::Reduction => {
            check_cut("evaluate", x)?;
            let r = if let Some(m) = nonpositive_integer(a) {
                phi1_reduction_negm(m, b, c, x, y)?
            } else if let Some(m) = as_integer(a - c).filter(|m| *m >= 0) {
                phi1_reduction_cm(m as u64, b, c, x, y)?
            } else {
                return Err(Error::domain(
                    "evaluate",
                    "reduction needs a ∈ ℤ≤0 or a − c ∈ ℤ≥0",
                ));
            };
            from_series(regime, r)
        }
        Regime::XTo1Log => {
            if (c - a - b).norm() > 1e-12 {
                return Err(Error::domain("evaluate", "x-to-1-log needs c = a + b"));
            }
            let rho = re(1.0) - x;
            let v = phi1_x_to_1_log(a, b, y, rho)?;
            // Order of magnitude of the omitted O(ρ log ρ) term.
            let g = gamma_ratio(&[a + b], &[a, b])?.norm();
            let err = g * y.norm().exp() * rho.norm() * (1.0 + rho.norm().ln().abs());
            report(regime, v, err)
        }
        Regime::LargeX => {
            let floor = order_floor(&[a, b]);
            let (v, e) = convergent(cfg, floor, |n| large_x_expansion(p, x, y, n))?;
            report(regime, v, e)
        }
        Regime::EtaX => {
            let eta = x * y;
            let floor = order_floor(&[a, b]);
            let (v, e) = convergent(cfg, floor, |n| eta_large_x_expansion(p, x, eta, n))?;
            report(regime, v, e)
        }
        Regime::EtaY => {
            let eta = x * y;
            let right = y.im == 0.0 && y.re > 0.0;
            let dir = if right {
                EtaDirection::Right
            } else {
                EtaDirection::Left
            };
            let (v, mut e) = divergent(cfg, |n| eta_large_y_expansion(p, y, eta, n, dir, opts))?;
            if right {
                e += algebraic_family_size(p, y)?;
            }
            report(regime, v, e)
        }
        Regime::LargeYRight | Regime::LargeYLeft | Regime::ImaginaryY => {
            large_y(regime, p, x, y, cfg, strict)
        }
        Regime::JointLambda => joint_lambda(p, x, y, cfg, strict),
        Regime::JointBeta => {
            let (v, e) = divergent(cfg, |n| joint_beta_expansion(p, x, y, n, None, None, opts))?;
            report(regime, v, e)
        }
    }
}

fn large_y(
    regime: Regime,
    p: Phi1Params,
    x: C64,
    y: C64,
    cfg: &EvalConfig,
    strict: bool,
) -> Result<EvalReport> {
    let opts = &cfg.asymptotic;
    if strict {
        let (v, e) = match regime {
            Regime::LargeYRight => divergent(cfg, |n| large_y_right_expansion(p, x, y, n, opts))?,
            Regime::LargeYLeft => divergent(cfg, |n| large_y_left_expansion(p, x, y, n, opts))?,
            _ => divergent(cfg, |n| large_y_two_family_expansion(p, x, y, n))?,
        };
        return report(regime, v, e);
    }
    if y.im == 0.0 {
        return if y.re > 0.0 {
            let (v, e) = divergent(cfg, |n| large_y_right_expansion(p, x, y, n, opts))?;
            report(Regime::LargeYRight, v, e + algebraic_family_size(p, y)?)
        } else {
            let (v, e) = divergent(cfg, |n| large_y_left_expansion(p, x, y, n, opts))?;
            report(Regime::LargeYLeft, v, e + exponential_family_size(p, x, y)?)
        };
    }
    // Off the real axis both families are kept unless one is below
    // rounding level relative to the other.
    let alg = algebraic_family_size(p, y)?;
    let expo = exponential_family_size(p, x, y)?;
    if alg < f64::EPSILON * expo * 1e-2 && y.re > 0.0 {
        if let Ok((v, e)) = divergent(cfg, |n| large_y_right_expansion(p, x, y, n, opts)) {
            return report(Regime::LargeYRight, v, e + alg);
        }
    }
    if expo < f64::EPSILON * alg * 1e-2 && y.re < 0.0 {
        if let Ok((v, e)) = divergent(cfg, |n| large_y_left_expansion(p, x, y, n, opts)) {
            return report(Regime::LargeYLeft, v, e + expo);
        }
    }
    let (v, e) = divergent(cfg, |n| large_y_two_family_expansion(p, x, y, n))?;
    report(Regime::ImaginaryY, v, e)
}

/// Φ₁ at x = −X (X > 0) with y = λX.
fn joint_lambda(
    p: Phi1Params,
    x: C64,
    y: C64,
    cfg: &EvalConfig,
    strict: bool,
) -> Result<EvalReport> {
    const F: &str = "evaluate";
    if !(x.im == 0.0 && x.re < 0.0) {
        return Err(Error::domain(
            F,
            "joint-lambda needs x on the negative real axis",
        ));
    }
    let opts = &cfg.asymptotic;
    let big = -x.re;
    let lambda = y / big;
    let r = Regime::JointLambda;
    if y.im == 0.0 {
        if y.re > 0.0 {
            let (v, e) = divergent(cfg, |n| joint_lambda_expansion(p, big, lambda, 1, n, opts))?;
            let extra = if strict {
                0.0
            } else {
                algebraic_family_size(p, y)?
            };
            return report(r, v, e + extra);
        }
        let (v, e) = divergent(cfg, |n| {
            joint_lambda_expansion(p, big, -lambda, -1, n, opts)
        })?;
        let extra = if strict {
            0.0
        } else {
            exponential_family_size(p, x, y)?
        };
        return report(r, v, e + extra);
    }
    let (v, e) = if y.re == 0.0 {
        divergent(cfg, |n| joint_imaginary_expansion(p, big, lambda.im, n))?
    } else {
        divergent(cfg, |n| {
            joint_lambda_two_family_expansion(p, big, lambda, n, opts)
        })?
    };
    report(r, v, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c, hyp1f1};

    fn p(a: f64, b: f64, cc: f64) -> Phi1Params {
        Phi1Params::real(a, b, cc).unwrap()
    }

    #[test]
    fn small_point_uses_series_and_matches_taylor() {
        let pr = p(0.5, 1.0, 1.5);
        let r = evaluate(pr, re(0.3), re(0.2), 1e-13).unwrap();
        assert_eq!(r.regime, Regime::Series2F1);
        let t = phi1_taylor(pr, re(0.3), re(0.2), 1e-15, 10_000).unwrap();
        assert!((r.value - t.value).norm() < 1e-13);
    }

    #[test]
    fn dispatch_examples() {
        let pr = p(0.5, 1.0, 1.5);
        let r = evaluate(pr, re(-40.0), re(1.0), 1e-12).unwrap();
        assert_eq!(r.regime, Regime::LargeX);
        // c = a + b here, so the connection formula does not apply
        let r = evaluate(pr, re(0.999), re(0.5), 1e-12).unwrap();
        assert_eq!(r.regime, Regime::Series2F1);
        let r = evaluate(p(0.5, 1.0, 1.75), re(0.999), re(0.5), 1e-12).unwrap();
        assert_eq!(r.regime, Regime::ConnectionX1);
    }

    #[test]
    fn reductions_come_first() {
        let r = evaluate(p(-3.0, 0.7, 1.5), re(-40.0), re(30.0), 1e-12).unwrap();
        assert_eq!(r.regime, Regime::Reduction);
        let r = evaluate(p(2.5, 0.7, 0.5), re(0.2), re(0.1), 1e-12).unwrap();
        assert_eq!(r.regime, Regime::Reduction);
    }

    #[test]
    fn dispatch_is_deterministic() {
        let pr = p(0.5, 1.0, 1.5);
        for (x, y) in [(c(-7.0, 1.0), c(2.0, 0.0)), (re(0.3), c(0.0, 40.0))] {
            let a = evaluate(pr, x, y, 1e-12).unwrap();
            let b = evaluate(pr, x, y, 1e-12).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn cross_check_large_x_overlap() {
        let pr = p(0.5, 1.0, 1.5);
        let r = cross_check(pr, re(-20.0), re(0.5)).unwrap();
        let m = r.agreement_matrix.unwrap();
        let d = m
            .deltas
            .iter()
            .find(|d| {
                let pair = [d.first, d.second];
                pair.contains(&Regime::LargeX) && pair.contains(&Regime::Series2F1)
            })
            .unwrap();
        assert!(d.abs_delta <= 1e-7, "{}", d.abs_delta);
        assert!(r.regime.is_convergent());
    }

    #[test]
    fn cross_check_taylor_and_series_at_y_zero() {
        let pr = p(0.5, 1.0, 1.5);
        let m = cross_check(pr, re(0.3), re(0.0))
            .unwrap()
            .agreement_matrix
            .unwrap();
        let d = m
            .deltas
            .iter()
            .find(|d| d.first == Regime::Taylor && d.second == Regime::Series2F1)
            .unwrap();
        assert!(d.abs_delta <= 1e-12);
    }

    #[test]
    fn x_zero_is_kummer() {
        let pr = p(0.5, 1.0, 1.5);
        for y in [re(0.7), re(-3.0), c(2.0, 1.0)] {
            let r = evaluate(pr, re(0.0), y, 1e-13).unwrap();
            let f = hyp1f1(pr.a, pr.c, y).unwrap().value;
            assert!((r.value - f).norm() < 1e-12 * f.norm().max(1.0));
        }
    }

    #[test]
    fn large_y_family_by_sector() {
        let pr = p(0.5, 1.0, 1.5);
        let x = re(0.3);
        let r = evaluate(pr, x, re(40.0), 1e-10).unwrap();
        assert_eq!(r.regime, Regime::LargeYRight);
        let r = evaluate(pr, x, re(-40.0), 1e-10).unwrap();
        assert_eq!(r.regime, Regime::LargeYLeft);
        let y = c(10.0, 40.0);
        let r = evaluate(pr, x, y, 1e-10).unwrap();
        assert_eq!(r.regime, Regime::ImaginaryY);
        let o = euler_integral_tol(pr, x, y, 1e-13).unwrap().value;
        assert!((r.value - o).norm() < 1e-8 * o.norm());
    }

    #[test]
    fn joint_dispatch() {
        let pr = p(0.5, 1.0, 1.5);
        let x = re(-50.0);
        let y = re(40.0);
        let r = evaluate(pr, x, y, 1e-9).unwrap();
        assert_eq!(r.regime, Regime::JointLambda);
        let o = phi1_series_2f1(pr, x, y, 1e-15, 20_000).unwrap().value;
        assert!(
            (r.value - o).norm() < 1e-8 * o.norm(),
            "{}",
            (r.value - o).norm() / o.norm()
        );
    }

    #[test]
    fn forced_regime_is_honoured() {
        let pr = p(0.5, 1.0, 1.5);
        let cfg = EvalConfig {
            regime: Some(Regime::EulerIntegral),
            ..Default::default()
        };
        let r = evaluate_with(pr, re(0.3), re(0.2), &cfg).unwrap();
        assert_eq!(r.regime, Regime::EulerIntegral);
    }

    #[test]
    fn thresholds_parse_and_reject() {
        let t = Thresholds::parse("# comment\nlarge_x = 7\n\nseries_y=10\n").unwrap();
        assert_eq!(t.large_x, 7.0);
        assert_eq!(t.series_y, 10.0);
        assert_eq!(t.near_one, 0.25);
        assert!(Thresholds::parse("bogus = 1").is_err());
        assert!(Thresholds::parse("large_x = -1").is_err());
        assert!(Thresholds::parse("large_x 1").is_err());
    }

    #[test]
    fn regime_tags_round_trip() {
        for r in Regime::ALL {
            assert_eq!(r.tag().parse::<Regime>().unwrap(), r);
        }
        assert!("nope".parse::<Regime>().is_err());
    }

    #[test]
    fn cut_is_unsupported() {
        let e = evaluate(p(0.5, 1.0, 1.5), re(2.0), re(0.1), 1e-12).unwrap_err();
        assert!(matches!(e, Error::Unsupported { .. }));
    }

    #[test]
    fn cross_check_needs_two_methods() {
        // Re c < Re a rules out the integral and large y leaves only large-y-right.
        let pr = p(2.5, 1.0, 1.25);
        assert!(cross_check(pr, re(-0.9), re(60.0)).is_err());
    }
}
