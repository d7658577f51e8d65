//! Regimes where x and y grow together: fixed β = −y/x, fixed λ = y/x on
//! the negative x axis, and its purely imaginary variant.

use std::f64::consts::{FRAC_PI_2, PI};

use super::coeffs::{coeff_a1_lambda, coeff_a2_lambda, coeff_a_k};
use super::large::prefactor;
use super::{
    arg_abs, AsymptoticExpansion, AsymptoticOptions, LargeVariable, TermGroup, TruncatedValue,
};
use crate::error::{Error, Result};
use crate::reference::{check_cut, Phi1Params};
use crate::scalar::{as_integer, nonpositive_integer, pfq, pochhammer, re, C64};

/// Below this real part of (x−1)y/x the exponentially small families of the
/// three-family form are kept even in the real direction: e^{−36} is under
/// double-precision resolution.
const SINGLE_FAMILY_MIN: f64 = 36.0;
/// Required distance of the fractional parts in the w condition from 0.
const FRACTION_EPS: f64 = 0.05;

/// Form of the fixed-β expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JointBetaForm {
    /// Only the e^y family; valid when (x−1)y/x → +∞.
    SingleFamily,
    /// The e^y family plus the two e^{−β}(1−x)^{−a} families.
    ThreeFamily,
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

fn frac(v: f64) -> f64 {
    v - v.floor()
}

fn w_ok(p: Phi1Params, w: f64) -> bool {
    let Phi1Params { a, b, .. } = p;
    let lower = 1.0 + (a - b).re.max((re(1.0) - b).re);
    w > 0.0
        && w > lower
        && frac(w - (a - b).re) > FRACTION_EPS
        && frac(w + b.re - 1.0) > FRACTION_EPS
}

/// Default w: 1.5 + max{Re(a−b), Re(1−b)}, raised by 0.25 until both
/// fractional-part conditions hold.
pub fn default_w(p: Phi1Params) -> f64 {
    let Phi1Params { a, b, .. } = p;
    let mut w = 1.5 + (a - b).re.max((re(1.0) - b).re);
    for _ in 0..8 {
        if w_ok(p, w) {
            break;
        }
        w += 0.25;
    }
    w
}

fn single_family_ok(p: Phi1Params) -> bool {
    let Phi1Params { a, b, c } = p;
    nonpositive_integer(c).is_none()
        && nonpositive_integer(c - b).is_none()
        && as_integer(b).is_none()
        && as_integer(a - b).is_none()
}

fn three_family_ok(p: Phi1Params) -> bool {
    single_family_ok(p) && as_integer(p.a).is_none()
}

/// The point b − a + k nearest to (x−1)y/x, if closer than `radius`.
fn excluded_point(p: Phi1Params, q: C64, radius: f64) -> Option<C64> {
    let shifted = q - (p.b - p.a);
    let nearest = shifted.re.round();
    if (shifted - re(nearest)).norm() < radius {
        Some(p.b - p.a + nearest)
    } else {
        None
    }
}

fn a3_group(p: Phi1Params, x: C64, y: C64, beta: C64, order: usize) -> Result<TermGroup> {
    let Phi1Params { a, b, c } = p;
    let omx = re(1.0) - x;
    let log_part = (a - c) * beta.ln() + (a - b - c) * omx.ln() + y;
    let pre = prefactor(&[c], &[a], log_part)?;
    let coefficients = (0..=order)
        .map(|k| coeff_a_k(k, p, beta))
        .collect::<Result<Vec<_>>>()?;
    Ok(TermGroup {
        prefactor: pre,
        scale: "beta^(a-c) (1-x)^(a-b-c-k) e^y".into(),
        step: omx.inv(),
        coefficients,
    })
}

/// Fixed-β expansion (β = −y/x) of Φ₁ as x, y → ∞.
///
/// `form = None` picks the single-family form when (x−1)y/x lies within
/// π/2 − δ of the positive axis with real part at least 36, and the
/// three-family form otherwise, unless (x−1)y/x is inside an exclusion disk
/// around b − a + k and the single-family form is admissible. `w = None` uses [`default_w`]. The
/// two e^{−β} families are summed to M = ⌊w + Re(b−a)⌋; the e^y family to
/// `order`.
pub fn joint_beta_expansion(
    p: Phi1Params,
    x: C64,
    y: C64,
    order: usize,
    w: Option<f64>,
    form: Option<JointBetaForm>,
    opts: &AsymptoticOptions,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_joint_beta";
    let Phi1Params { a, b, c } = p;
    if x == re(0.0) {
        return Err(Error::domain(F, "x must be nonzero"));
    }
    check_cut(F, x)?;
    let beta = -y / x;
    opts.check_annulus(F, "beta", beta)?;
    let q = (x - 1.0) * y / x;
    let real_directed = q != re(0.0) && arg_abs(q) <= FRAC_PI_2 - opts.delta;

    let excluded = excluded_point(p, q, opts.exclusion_radius);
    let form = match form {
        Some(f) => f,
        None if real_directed && q.re >= SINGLE_FAMILY_MIN && single_family_ok(p) => {
            JointBetaForm::SingleFamily
        }
        None if three_family_ok(p) && excluded.is_none() => JointBetaForm::ThreeFamily,
        None if real_directed && single_family_ok(p) => JointBetaForm::SingleFamily,
        None if three_family_ok(p) => JointBetaForm::ThreeFamily,
        None => {
            return Err(Error::domain(
                F,
                "parameters or direction satisfy neither fixed-β form",
            ))
        }
    };

    match form {
        JointBetaForm::SingleFamily => {
            if !single_family_ok(p) {
                return Err(Error::domain(
                    F,
                    "single-family form needs c, c−b ∉ ℤ≤0 and b, a−b ∉ ℤ",
                ));
            }
            if !real_directed {
                return Err(Error::domain(
                    F,
                    format!(
                        "single-family form needs |arg((x-1)y/x)| <= pi/2 - {}",
                        opts.delta
                    ),
                ));
            }
            AsymptoticExpansion::new(
                vec![a3_group(p, x, y, beta, order)?],
                "(x-1)y/x -> +inf, |arg(1-x)| < pi, beta fixed",
                LargeVariable::Joint,
            )
        }
        JointBetaForm::ThreeFamily => {
            if !three_family_ok(p) {
                return Err(Error::domain(
                    F,
                    "three-family form needs c, c−b ∉ ℤ≤0 and a, b, a−b ∉ ℤ",
                ));
            }
            if q == re(0.0) || arg_abs(q) >= PI {
                return Err(Error::domain(F, "requires |arg((x-1)y/x)| < pi"));
            }
            if let Some(point) = excluded {
                return Err(Error::ExclusionZone {
                    func: F,
                    point,
                    radius: opts.exclusion_radius,
                });
            }
            let w = match w {
                Some(w) if w_ok(p, w) => w,
                Some(w) => {
                    return Err(Error::domain(
                        F,
                        format!("w = {w} violates the lower bound or fractional-part conditions"),
                    ))
                }
                None => default_w(p),
            };
            let m_float = (w + (b - a).re).floor();
            if m_float < 1.0 {
                return Err(Error::domain(
                    F,
                    "M = floor(w + Re(b − a)) must be at least 1",
                ));
            }
            let m = m_float as usize;
            let omx = re(1.0) - x;
            let lomx = omx.ln();

            let pre1 = prefactor(&[c, b - a], &[b, c - a], -beta - a * lomx)?;
            let mut c1 = Vec::with_capacity(m + 1);
            for k in 0..=m {
                let kf = k as f64;
                let w = pochhammer(a, k as u64) * pochhammer(c - b, k as u64)
                    / (pochhammer(a - b + 1.0, k as u64) * factorial(k));
                let f = pfq(
                    &[re(1.0) - b, c - b + kf],
                    &[c - b, a - b + 1.0 + kf],
                    beta,
                    1e-16,
                    10_000,
                )?;
                c1.push(w * f.value);
            }

            let mb = -beta;
            let pre2 = prefactor(
                &[c, a - b],
                &[a, c - a],
                (b - a) * mb.ln() - beta - a * lomx,
            )?;
            let mut c2 = Vec::with_capacity(m + 1);
            for k in 0..=m {
                let kf = k as f64;
                let w =
                    pochhammer(a - b, k as u64) * pochhammer(a - c + 1.0, k as u64) / factorial(k);
                let f = pfq(
                    &[c - a, re(1.0) - a - kf],
                    &[c - a - kf, b - a + 1.0 - kf],
                    beta,
                    1e-16,
                    10_000,
                )?;
                c2.push(w * f.value);
            }

            AsymptoticExpansion::new(
                vec![
                    TermGroup {
                        prefactor: pre1,
                        scale: "e^(-beta) (1-x)^(-a-k)".into(),
                        step: omx.inv(),
                        coefficients: c1,
                    },
                    TermGroup {
                        prefactor: pre2,
                        scale: "(-beta)^(b-a-k) e^(-beta) (1-x)^(-a-k)".into(),
                        step: (mb * omx).inv(),
                        coefficients: c2,
                    },
                    a3_group(p, x, y, beta, order)?,
                ],
                "x, y -> inf, |arg(1-x)| < pi, |arg((x-1)y/x)| < pi, beta fixed",
                LargeVariable::Joint,
            )
        }
    }
}

/// Fixed-β expansion with automatic form and default w.
pub fn expand_joint_beta(
    p: Phi1Params,
    x: C64,
    y: C64,
    order: usize,
    w: Option<f64>,
) -> Result<TruncatedValue> {
    expand_joint_beta_opts(p, x, y, order, w, None, &AsymptoticOptions::default())
}

/// As [`expand_joint_beta`] with an explicit form and options. The e^{−β}
/// families are always summed through M; `order` applies to the e^y family.
pub fn expand_joint_beta_opts(
    p: Phi1Params,
    x: C64,
    y: C64,
    order: usize,
    w: Option<f64>,
    form: Option<JointBetaForm>,
    opts: &AsymptoticOptions,
) -> Result<TruncatedValue> {
    let e = joint_beta_expansion(p, x, y, order, w, form, opts)?;
    let mut t = e.partial_sum(e.max_order());
    t.terms_used = order + 1;
    Ok(t)
}

fn check_joint_params(func: &'static str, p: Phi1Params, x: f64) -> Result<()> {
    if !(p.c.re > p.a.re && p.a.re > 0.0) {
        return Err(Error::domain(func, "requires Re(c) > Re(a) > 0"));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(func, "x must be positive and finite"));
    }
    Ok(())
}

fn a1_group(p: Phi1Params, x: f64, lambda: C64, order: usize) -> Result<TermGroup> {
    // Γ(c)/Γ(a) x^{−b} e^y Σ a_k⁽¹⁾(λ) y^{a−c−k},  y = λx
    let Phi1Params { a, b, c } = p;
    let y = lambda * x;
    let pre = prefactor(&[c], &[a], -b * x.ln() + y + (a - c) * y.ln())?;
    let coefficients = (0..=order).map(|k| coeff_a1_lambda(k, p, lambda)).collect();
    Ok(TermGroup {
        prefactor: pre,
        scale: "x^(-b) e^y y^(a-c-k)".into(),
        step: y.inv(),
        coefficients,
    })
}

fn a2_group(p: Phi1Params, x: f64, lambda: C64, order: usize) -> Result<TermGroup> {
    // Γ(c)/Γ(c−a) Σ a_k⁽²⁾(λ) x^{−a−k}
    let Phi1Params { a, c, .. } = p;
    let pre = prefactor(&[c], &[c - a], -a * x.ln())?;
    let coefficients = (0..=order)
        .map(|k| coeff_a2_lambda(k, p, lambda))
        .collect::<Result<Vec<_>>>()?;
    Ok(TermGroup {
        prefactor: pre,
        scale: "x^(-a-k)".into(),
        step: re(1.0 / x),
        coefficients,
    })
}

/// Expansion of Φ₁[a, b; c; −x, ±λx] as x → +∞ with λ fixed in the sector
/// |arg λ| ≤ π/2 − δ. `sign_y = +1` gives the e^y family, `−1` the
/// Kummer-U family.
pub fn joint_lambda_expansion(
    p: Phi1Params,
    x: f64,
    lambda: C64,
    sign_y: i32,
    order: usize,
    opts: &AsymptoticOptions,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_joint_lambda";
    check_joint_params(F, p, x)?;
    opts.check_annulus(F, "lambda", lambda)?;
    if arg_abs(lambda) > FRAC_PI_2 - opts.delta {
        return Err(Error::domain(
            F,
            format!("requires |arg(lambda)| <= pi/2 - {}", opts.delta),
        ));
    }
    let group = match sign_y {
        1 => a1_group(p, x, lambda, order)?,
        -1 => a2_group(p, x, lambda, order)?,
        _ => return Err(Error::domain(F, "sign_y must be +1 or -1")),
    };
    AsymptoticExpansion::new(
        vec![group],
        format!("x -> +inf, |arg(lambda)| <= pi/2 - {}", opts.delta),
        LargeVariable::Joint,
    )
}

pub fn expand_joint_lambda(
    p: Phi1Params,
    x: f64,
    lambda: C64,
    sign_y: i32,
    order: usize,
) -> Result<TruncatedValue> {
    expand_joint_lambda_opts(p, x, lambda, sign_y, order, &AsymptoticOptions::default())
}

pub fn expand_joint_lambda_opts(
    p: Phi1Params,
    x: f64,
    lambda: C64,
    sign_y: i32,
    order: usize,
    opts: &AsymptoticOptions,
) -> Result<TruncatedValue> {
    Ok(joint_lambda_expansion(p, x, lambda, sign_y, order, opts)?.partial_sum(order))
}

/// Expansion of Φ₁[a, b; c; −x, iλx] as x → +∞ for real λ ≠ 0: the
/// oscillatory a_k⁽¹⁾(iλ) family plus the algebraic a_k⁽²⁾(−iλ) family.
pub fn joint_imaginary_expansion(
    p: Phi1Params,
    x: f64,
    lambda: f64,
    order: usize,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_joint_imaginary";
    check_joint_params(F, p, x)?;
    if lambda == 0.0 || !lambda.is_finite() {
        return Err(Error::domain(F, "λ must be finite and nonzero"));
    }
    let il = C64::new(0.0, lambda);
    AsymptoticExpansion::new(
        vec![a1_group(p, x, il, order)?, a2_group(p, x, -il, order)?],
        "x -> +inf, y = i*lambda*x",
        LargeVariable::Joint,
    )
}

pub fn expand_joint_imaginary(
    p: Phi1Params,
    x: f64,
    lambda: f64,
    order: usize,
) -> Result<TruncatedValue> {
    Ok(joint_imaginary_expansion(p, x, lambda, order)?.partial_sum(order))
}

/// Expansion of Φ₁[a, b; c; −x, λx] as x → +∞ for complex λ off the real
/// axis: the a_k⁽¹⁾(λ) family plus the a_k⁽²⁾(−λ) family. On the imaginary
/// axis this is [`joint_imaginary_expansion`].
pub fn joint_lambda_two_family_expansion(
    p: Phi1Params,
    x: f64,
    lambda: C64,
    order: usize,
    opts: &AsymptoticOptions,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_joint_lambda_two_family";
    check_joint_params(F, p, x)?;
    opts.check_annulus(F, "lambda", lambda)?;
    if lambda.im == 0.0 {
        return Err(Error::domain(F, "λ must not be real"));
    }
    AsymptoticExpansion::new(
        vec![
            a1_group(p, x, lambda, order)?,
            a2_group(p, x, -lambda, order)?,
        ],
        "x -> +inf, y = lambda*x, 0 < |arg(lambda)| < pi",
        LargeVariable::Joint,
    )
}
