//! Regimes where one variable is large and the other small with the
//! product η = xy fixed.

use std::f64::consts::{FRAC_PI_2, PI};

use super::coeffs::{coeff_b1, coeff_b2, coeff_c1, coeff_c2};
use super::large::prefactor;
use super::{
    arg_abs, AsymptoticExpansion, AsymptoticOptions, LargeVariable, TermGroup, TruncatedValue,
};
use crate::error::{Error, Result};
use crate::reference::{check_cut, Phi1Params};
use crate::scalar::{as_integer, nonpositive_integer, re, C64};

/// Direction of the large-y limit with η fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaDirection {
    /// y → ∞ with |arg(−y)| < π: algebraic and exponential families.
    Left,
    /// y → +∞: the exponential family alone.
    Right,
}

fn check_order(func: &'static str, order: usize, bounds: &[C64]) -> Result<()> {
    let need = bounds.iter().map(|z| z.norm()).fold(1.0, f64::max);
    if ((order + 1) as f64) < need {
        return Err(Error::domain(
            func,
            format!("order + 1 = {} must be at least {need}", order + 1),
        ));
    }
    Ok(())
}

/// Φ₁(x, η/x) for x → ∞ with |arg(−x)| < π:
/// Γ(c)Γ(b−a)/(Γ(b)Γ(c−a)) (−x)^{−a} Σ b_k⁽¹⁾(η) x^{−k}
/// + Γ(c)Γ(a−b)/(Γ(a)Γ(c−b)) (−x)^{−b} Σ b_k⁽²⁾(η) x^{−k}.
pub fn eta_large_x_expansion(
    p: Phi1Params,
    x: C64,
    eta: C64,
    order: usize,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_eta_large_x";
    let Phi1Params { a, b, c } = p;
    if as_integer(a - b).is_some() {
        return Err(Error::domain(F, "a − b must not be an integer"));
    }
    if x == re(0.0) {
        return Err(Error::domain(F, "x must be nonzero"));
    }
    check_cut(F, x)?;
    check_order(F, order, &[a, b])?;
    let lmx = (-x).ln();
    let step = x.inv();
    let pre1 = prefactor(&[c, b - a], &[b, c - a], -a * lmx)?;
    let pre2 = prefactor(&[c, a - b], &[a, c - b], -b * lmx)?;
    let c1 = (0..=order)
        .map(|k| coeff_b1(k, p, eta))
        .collect::<Result<Vec<_>>>()?;
    let c2 = (0..=order)
        .map(|k| coeff_b2(k, p, eta))
        .collect::<Result<Vec<_>>>()?;
    AsymptoticExpansion::new(
        vec![
            TermGroup {
                prefactor: pre1,
                scale: "(-x)^(-a) x^(-k)".into(),
                step,
                coefficients: c1,
            },
            TermGroup {
                prefactor: pre2,
                scale: "(-x)^(-b) x^(-k)".into(),
                step,
                coefficients: c2,
            },
        ],
        "x -> inf, |arg(-x)| < pi, eta = xy fixed",
        LargeVariable::Eta,
    )
}

pub fn expand_eta_large_x(p: Phi1Params, x: C64, eta: C64, order: usize) -> Result<TruncatedValue> {
    Ok(eta_large_x_expansion(p, x, eta, order)?.partial_sum(order))
}

/// Φ₁(η/y, y) for y → ∞. The left direction keeps both families and
/// requires y to stay outside the disks of radius `opts.exclusion_radius`
/// around a + ℓ, ℓ ∈ ℤ≥0.
pub fn eta_large_y_expansion(
    p: Phi1Params,
    y: C64,
    eta: C64,
    order: usize,
    direction: EtaDirection,
    opts: &AsymptoticOptions,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_eta_large_y";
    let Phi1Params { a, c, .. } = p;
    if nonpositive_integer(a).is_some() || nonpositive_integer(c - a).is_some() {
        return Err(Error::domain(
            F,
            "a and c − a must not be non-positive integers",
        ));
    }
    if y == re(0.0) {
        return Err(Error::domain(F, "y must be nonzero"));
    }
    check_cut(F, eta / y)?;
    check_order(F, order, &[a, a - c])?;

    let exp_group = TermGroup {
        prefactor: prefactor(&[c], &[a], (a - c) * y.ln() + y)?,
        scale: "y^(a-c-k) e^y".into(),
        step: y.inv(),
        coefficients: (0..=order)
            .map(|k| coeff_c2(k, p, eta))
            .collect::<Result<Vec<_>>>()?,
    };

    match direction {
        EtaDirection::Right => {
            if arg_abs(y) > FRAC_PI_2 - opts.delta {
                return Err(Error::domain(
                    F,
                    format!("right direction requires |arg(y)| <= pi/2 - {}", opts.delta),
                ));
            }
            AsymptoticExpansion::new(
                vec![exp_group],
                "y -> +inf, eta = xy fixed",
                LargeVariable::Eta,
            )
        }
        EtaDirection::Left => {
            let my = -y;
            if arg_abs(my) >= PI {
                return Err(Error::domain(F, "left direction requires |arg(-y)| < pi"));
            }
            let shifted = y - a;
            let l = shifted.re.round().max(0.0);
            if (shifted - re(l)).norm() < opts.exclusion_radius {
                return Err(Error::ExclusionZone {
                    func: F,
                    point: a + l,
                    radius: opts.exclusion_radius,
                });
            }
            let alg_group = TermGroup {
                prefactor: prefactor(&[c], &[c - a], -a * my.ln())?,
                scale: "(-y)^(-a) y^(-k)".into(),
                step: y.inv(),
                coefficients: (0..=order).map(|k| coeff_c1(k, p, eta)).collect(),
            };
            AsymptoticExpansion::new(
                vec![alg_group, exp_group],
                "y -> inf, |arg(-y)| < pi, eta = xy fixed",
                LargeVariable::Eta,
            )
        }
    }
}

pub fn expand_eta_large_y(
    p: Phi1Params,
    y: C64,
    eta: C64,
    order: usize,
    direction: EtaDirection,
) -> Result<TruncatedValue> {
    expand_eta_large_y_opts(p, y, eta, order, direction, &AsymptoticOptions::default())
}

pub fn expand_eta_large_y_opts(
    p: Phi1Params,
    y: C64,
    eta: C64,
    order: usize,
    direction: EtaDirection,
    opts: &AsymptoticOptions,
) -> Result<TruncatedValue> {
    Ok(eta_large_y_expansion(p, y, eta, order, direction, opts)?.partial_sum(order))
}
