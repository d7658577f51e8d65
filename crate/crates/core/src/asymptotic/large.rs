//! Regimes with one large variable: x → ∞ with y fixed, and y → ∞ with x
//! fixed (left, right, imaginary and shifted-imaginary directions).

use std::f64::consts::FRAC_PI_2;

use super::coeffs::{kdf_11_1_scaled, lagrange_g};
use super::{
    arg_abs, AsymptoticExpansion, AsymptoticOptions, LargeVariable, TermGroup, TruncatedValue,
};
use crate::error::{Error, Result};
use crate::reference::{check_cut, Phi1Params};
use crate::scalar::{
    as_integer, gamma_ratio, hyp1f1_regularized, nonpositive_integer, pochhammer, re, C64,
};

/// Γ-ratio times exp(log_part); an exact zero ratio short-circuits so that
/// an overflowing exponential cannot turn 0·∞ into NaN.
pub(crate) fn prefactor(num: &[C64], den: &[C64], log_part: C64) -> Result<C64> {
    let g = gamma_ratio(num, den)?;
    if g == re(0.0) {
        return Ok(g);
    }
    Ok(g * log_part.exp())
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

fn require_noninteger(func: &'static str, what: &str, z: C64) -> Result<()> {
    if as_integer(z).is_some() {
        return Err(Error::domain(
            func,
            format!("{what} = {z} must not be an integer"),
        ));
    }
    Ok(())
}

/// Two families in powers of 1/x for |x| > 1, |arg(−x)| < π:
///
/// Γ(c)Γ(b−a)/(Γ(b)Γ(c−a)) (−x)^{−a} Σ_k (a)_k/((a−b+1)_k k!) P_k(y) x^{−k}
/// + Γ(c)Γ(a−b)/Γ(a) (−x)^{−b} Σ_k (b)_k/((b−a+1)_k k!) (−1)^k 𝐌(a−b−k, c−b−k, y) x^{−k},
///
/// with P_k(y) = (a−c+1)_k ₁F₁[−k; c−a−k; y] summed as a polynomial and
/// 𝐌 the regularized ₁F₁. Both forms stay finite when c−a or c−b is a
/// non-positive integer.
pub fn large_x_expansion(
    p: Phi1Params,
    x: C64,
    y: C64,
    order: usize,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_large_x";
    let Phi1Params { a, b, c } = p;
    require_noninteger(F, "a − b", a - b)?;
    if x.norm() <= 1.0 {
        return Err(Error::domain(
            F,
            format!("requires |x| > 1, got |x| = {}", x.norm()),
        ));
    }
    check_cut(F, x)?;
    let mx = -x;
    let lmx = mx.ln();
    let step = x.inv();

    let pre1 = prefactor(&[c, b - a], &[b, c - a], -a * lmx)?;
    let mut c1 = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let kf = k as f64;
        // P_k(y) = Σ_n (−k)_n (a−c+1)_{k−n} (−y)^n / n!
        let mut pk = re(0.0);
        for n in 0..=k {
            pk += pochhammer(re(-kf), n as u64)
                * pochhammer(a - c + 1.0, (k - n) as u64)
                * (-y).powu(n as u32)
                / factorial(n);
        }
        c1.push(pochhammer(a, k as u64) / pochhammer(a - b + 1.0, k as u64) / factorial(k) * pk);
    }

    let pre2 = prefactor(&[c, a - b], &[a], -b * lmx)?;
    let mut c2 = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let kf = k as f64;
        let w = pochhammer(b, k as u64) / pochhammer(b - a + 1.0, k as u64) / factorial(k);
        if w == re(0.0) {
            c2.push(w);
            continue;
        }
        let m = hyp1f1_regularized(a - b - kf, c - b - kf, y)?.value;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        c2.push(w * m * sign);
    }

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
        "|x| > 1, |arg(-x)| < pi, y fixed",
        LargeVariable::X,
    )
}

/// Partial sum of [`large_x_expansion`] through `order`.
pub fn expand_large_x(p: Phi1Params, x: C64, y: C64, order: usize) -> Result<TruncatedValue> {
    Ok(large_x_expansion(p, x, y, order)?.partial_sum(order))
}

fn left_groups(p: Phi1Params, x: C64, my: C64, order: usize) -> Result<TermGroup> {
    // Γ(c)/Γ(c−a) Σ_n (a)_n g_n^{(a−c+1, b)}(1, x) (−y)^{−a−n}
    let Phi1Params { a, b, c } = p;
    let pre = prefactor(&[c], &[c - a], -a * my.ln())?;
    let coefficients = (0..=order)
        .map(|n| pochhammer(a, n as u64) * lagrange_g(n, a - c + 1.0, b, re(1.0), x))
        .collect();
    Ok(TermGroup {
        prefactor: pre,
        scale: "(-y)^(-a-n)".into(),
        step: my.inv(),
        coefficients,
    })
}

fn right_group(p: Phi1Params, x: C64, y: C64, order: usize) -> Result<TermGroup> {
    // Γ(c)/Γ(a) e^y (1−x)^{−b} Σ_n (c−a)_n g_n^{(1−a, b)}(1, x/(x−1)) y^{a−c−n}
    let Phi1Params { a, b, c } = p;
    let one_minus_x = re(1.0) - x;
    let log_part = y + (a - c) * y.ln() - b * one_minus_x.ln();
    let pre = prefactor(&[c], &[a], log_part)?;
    let q = x / (x - 1.0);
    let coefficients = (0..=order)
        .map(|n| pochhammer(c - a, n as u64) * lagrange_g(n, re(1.0) - a, b, re(1.0), q))
        .collect();
    Ok(TermGroup {
        prefactor: pre,
        scale: "e^y (1-x)^(-b) y^(a-c-n)".into(),
        step: y.inv(),
        coefficients,
    })
}

/// Algebraic expansion for y → ∞ with |arg(−y)| ≤ π/2 − δ.
pub fn large_y_left_expansion(
    p: Phi1Params,
    x: C64,
    y: C64,
    order: usize,
    opts: &AsymptoticOptions,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_large_y_left";
    check_cut(F, x)?;
    if nonpositive_integer(p.c - p.a).is_some() {
        return Err(Error::domain(F, "c − a must not be a non-positive integer"));
    }
    let my = -y;
    if y == re(0.0) || arg_abs(my) > FRAC_PI_2 - opts.delta {
        return Err(Error::domain(
            F,
            format!("requires |arg(-y)| <= pi/2 - {}", opts.delta),
        ));
    }
    AsymptoticExpansion::new(
        vec![left_groups(p, x, my, order)?],
        format!("|arg(-y)| <= pi/2 - {}", opts.delta),
        LargeVariable::Y,
    )
}

pub fn expand_large_y_left(p: Phi1Params, x: C64, y: C64, order: usize) -> Result<TruncatedValue> {
    expand_large_y_left_opts(p, x, y, order, &AsymptoticOptions::default())
}

pub fn expand_large_y_left_opts(
    p: Phi1Params,
    x: C64,
    y: C64,
    order: usize,
    opts: &AsymptoticOptions,
) -> Result<TruncatedValue> {
    Ok(large_y_left_expansion(p, x, y, order, opts)?.partial_sum(order))
}

/// Exponential expansion for y → ∞ with |arg y| ≤ π/2 − δ.
pub fn large_y_right_expansion(
    p: Phi1Params,
    x: C64,
    y: C64,
    order: usize,
    opts: &AsymptoticOptions,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_large_y_right";
    check_cut(F, x)?;
    if nonpositive_integer(p.a).is_some() {
        return Err(Error::domain(F, "a must not be a non-positive integer"));
    }
    if y == re(0.0) || arg_abs(y) > FRAC_PI_2 - opts.delta {
        return Err(Error::domain(
            F,
            format!("requires |arg(y)| <= pi/2 - {}", opts.delta),
        ));
    }
    AsymptoticExpansion::new(
        vec![right_group(p, x, y, order)?],
        format!("|arg(y)| <= pi/2 - {}", opts.delta),
        LargeVariable::Y,
    )
}

pub fn expand_large_y_right(p: Phi1Params, x: C64, y: C64, order: usize) -> Result<TruncatedValue> {
    expand_large_y_right_opts(p, x, y, order, &AsymptoticOptions::default())
}

pub fn expand_large_y_right_opts(
    p: Phi1Params,
    x: C64,
    y: C64,
    order: usize,
    opts: &AsymptoticOptions,
) -> Result<TruncatedValue> {
    Ok(large_y_right_expansion(p, x, y, order, opts)?.partial_sum(order))
}

fn check_imaginary_params(func: &'static str, p: Phi1Params, lambda: f64) -> Result<()> {
    if !(p.c.re > p.a.re && p.a.re > 0.0) {
        return Err(Error::domain(func, "requires Re(c) > Re(a) > 0"));
    }
    if lambda == 0.0 || !lambda.is_finite() {
        return Err(Error::domain(func, "λ must be finite and nonzero"));
    }
    Ok(())
}

/// Both families at y = iλ: the algebraic one in (−iλ)^{−a−n} and the
/// oscillatory one in e^{iλ}(iλ)^{a−c−n}.
pub fn imaginary_y_expansion(
    p: Phi1Params,
    x: C64,
    lambda: f64,
    order: usize,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_imaginary_y";
    check_imaginary_params(F, p, lambda)?;
    check_cut(F, x)?;
    let iy = C64::new(0.0, lambda);
    AsymptoticExpansion::new(
        vec![
            left_groups(p, x, -iy, order)?,
            right_group(p, x, iy, order)?,
        ],
        "y = i*lambda, |lambda| large",
        LargeVariable::Y,
    )
}

pub fn expand_imaginary_y(
    p: Phi1Params,
    x: C64,
    lambda: f64,
    order: usize,
) -> Result<TruncatedValue> {
    Ok(imaginary_y_expansion(p, x, lambda, order)?.partial_sum(order))
}

/// Both families at a general complex y off the real axis:
/// the algebraic one in (−y)^{−a−n} and the exponential one in
/// e^y y^{a−c−n}, with principal branches. On the real axis one family
/// sits on a Stokes line and the one-sided expansions apply instead.
pub fn large_y_two_family_expansion(
    p: Phi1Params,
    x: C64,
    y: C64,
    order: usize,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_large_y_two_family";
    check_cut(F, x)?;
    if nonpositive_integer(p.a).is_some() || nonpositive_integer(p.c - p.a).is_some() {
        return Err(Error::domain(
            F,
            "a and c − a must not be non-positive integers",
        ));
    }
    if y.im == 0.0 {
        return Err(Error::domain(F, "y must not be real"));
    }
    AsymptoticExpansion::new(
        vec![left_groups(p, x, -y, order)?, right_group(p, x, y, order)?],
        "y -> inf, 0 < |arg(y)| < pi",
        LargeVariable::Y,
    )
}

pub fn expand_large_y_two_family(
    p: Phi1Params,
    x: C64,
    y: C64,
    order: usize,
) -> Result<TruncatedValue> {
    Ok(large_y_two_family_expansion(p, x, y, order)?.partial_sum(order))
}

/// Expansion at y = y₀ + iλ for large real λ, with Kampé de Fériet
/// coefficients in y₀.
pub fn shifted_imaginary_y_expansion(
    p: Phi1Params,
    x: C64,
    y0: C64,
    lambda: f64,
    order: usize,
) -> Result<AsymptoticExpansion> {
    const F: &str = "expand_shifted_imaginary_y";
    check_imaginary_params(F, p, lambda)?;
    check_cut(F, x)?;
    let Phi1Params { a, b, c } = p;
    let il = C64::new(0.0, lambda);

    let pre1 = prefactor(&[c], &[c - a], -a * (-il).ln())?;
    let c1 = (0..=order)
        .map(|n| pochhammer(a, n as u64) * kdf_11_1_scaled(n, a - c + 1.0, b, re(-1.0), -x, y0))
        .collect();

    let log2 = y0 + il + (a - c) * il.ln() - b * (re(1.0) - x).ln();
    let pre2 = prefactor(&[c], &[a], log2)?;
    let q = x / (x - 1.0);
    let c2 = (0..=order)
        .map(|n| {
            pochhammer(c - a, n as u64) * kdf_11_1_scaled(n, re(1.0) - a, b, re(-1.0), -q, -y0)
        })
        .collect();

    AsymptoticExpansion::new(
        vec![
            TermGroup {
                prefactor: pre1,
                scale: "(-i*lambda)^(-a-n)".into(),
                step: (-il).inv(),
                coefficients: c1,
            },
            TermGroup {
                prefactor: pre2,
                scale: "e^(y0+i*lambda) (1-x)^(-b) (i*lambda)^(a-c-n)".into(),
                step: il.inv(),
                coefficients: c2,
            },
        ],
        "y = y0 + i*lambda, |lambda| large, |arg(1-x)| < pi",
        LargeVariable::Y,
    )
}

pub fn expand_shifted_imaginary_y(
    p: Phi1Params,
    x: C64,
    y0: C64,
    lambda: f64,
    order: usize,
) -> Result<TruncatedValue> {
    Ok(shifted_imaginary_y_expansion(p, x, y0, lambda, order)?.partial_sum(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{phi1_euler_integral, phi1_series_2f1};
    use crate::scalar::{c, gamma, hyp1f1, hyp2f1};

    fn p(a: f64, b: f64, cc: f64) -> Phi1Params {
        Phi1Params::real(a, b, cc).unwrap()
    }

    fn oracle(pr: Phi1Params, x: C64, y: C64) -> C64 {
        phi1_series_2f1(pr, x, y, 1e-15, 20_000).unwrap().value
    }

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn large_x_at_y_zero_is_gauss_connection() {
        // Φ₁(x, 0) = ₂F₁(a, b; c; x), evaluated by the library's own
        // continuation to |x| > 1.
        let pr = p(0.5, 1.0, 1.5);
        for &x in &[-3.0, -10.0] {
            let v = expand_large_x(pr, re(x), re(0.0), 40).unwrap().value;
            let f = hyp2f1(pr.a, pr.b, pr.c, re(x)).unwrap().value;
            assert!(rel(v, f) < 1e-12, "x={x}");
        }
    }

    #[test]
    fn large_x_matches_series() {
        let pr = p(0.5, 1.0, 1.5);
        let v = expand_large_x(pr, re(-20.0), re(0.5), 8).unwrap().value;
        assert!(rel(v, oracle(pr, re(-20.0), re(0.5))) < 1e-8);
    }

    #[test]
    fn large_x_error_decreases_with_order() {
        let pr = p(0.5, 1.0, 1.5);
        let x = re(-50.0);
        let exact = oracle(pr, x, re(1.0));
        let mut prev = f64::INFINITY;
        for order in 2..=8 {
            let e = (expand_large_x(pr, x, re(1.0), order).unwrap().value - exact).norm();
            assert!(e < prev, "order {order}");
            prev = e;
        }
    }

    #[test]
    fn large_x_rejects_bad_input() {
        assert!(expand_large_x(p(0.5, 1.5, 2.0), re(-20.0), re(0.5), 4).is_err());
        assert!(expand_large_x(p(0.5, 1.0, 1.5), re(-0.5), re(0.5), 4).is_err());
        assert!(expand_large_x(p(0.5, 1.0, 1.5), re(20.0), re(0.5), 4).is_err());
    }

    #[test]
    fn large_x_with_c_minus_a_integer() {
        // c = a: Φ₁ = (1−x)^{−b} e^y exactly.
        let pr = Phi1Params::new(c(0.5, 0.1), re(0.3), c(0.5, 0.1)).unwrap();
        let (x, y) = (re(-30.0), re(0.7));
        let v = expand_large_x(pr, x, y, 30).unwrap().value;
        let exact = (re(1.0) - x).powc(-pr.b) * y.exp();
        assert!(rel(v, exact) < 1e-12);
    }

    #[test]
    fn large_y_left_leading_term_and_x_zero() {
        let pr = p(0.5, 1.0, 1.5);
        let y = re(-40.0);
        let lead = expand_large_y_left(pr, re(0.3), y, 0).unwrap().value;
        let g = gamma(pr.c).unwrap() / gamma(pr.c - pr.a).unwrap();
        assert!(rel(lead, g * (-y).powc(-pr.a)) < 1e-14);
        // x = 0: Φ₁ = ₁F₁(a; c; y), whose algebraic expansion is the same sum
        let v = expand_large_y_left(pr, re(0.0), y, 6).unwrap().value;
        let f = hyp1f1(pr.a, pr.c, y).unwrap().value;
        assert!(rel(v, f) < 1e-7);
    }

    #[test]
    fn large_y_left_matches_series() {
        let pr = p(0.5, 1.0, 1.5);
        let v = expand_large_y_left(pr, re(0.3), re(-40.0), 6)
            .unwrap()
            .value;
        assert!(rel(v, oracle(pr, re(0.3), re(-40.0))) < 1e-7);
    }

    #[test]
    fn large_y_sector_checks() {
        let pr = p(0.5, 1.0, 1.5);
        assert!(expand_large_y_left(pr, re(0.3), re(40.0), 3).is_err());
        assert!(expand_large_y_right(pr, re(0.3), re(-40.0), 3).is_err());
        assert!(expand_large_y_left(pr, re(0.3), c(0.0, 40.0), 3).is_err());
    }

    #[test]
    fn large_y_right_leading_and_series() {
        let pr = p(0.5, 1.0, 1.5);
        let (x, y) = (re(0.3), re(35.0));
        let lead = expand_large_y_right(pr, x, y, 0).unwrap().value;
        let g = gamma(pr.c).unwrap() / gamma(pr.a).unwrap();
        let formula = g * (re(1.0) - x).powc(-pr.b) * y.powc(pr.a - pr.c) * y.exp();
        assert!(rel(lead, formula) < 1e-13);
        let v = expand_large_y_right(pr, x, y, 6).unwrap().value;
        assert!(rel(v, oracle(pr, x, y)) < 1e-7);
    }

    #[test]
    fn large_y_right_x_zero_is_kummer_growth() {
        let pr = p(0.5, 1.0, 1.5);
        let y = re(45.0);
        let v = expand_large_y_right(pr, re(0.0), y, 8).unwrap().value;
        let f = hyp1f1(pr.a, pr.c, y).unwrap().value;
        assert!(rel(v, f) < 1e-8);
    }

    #[test]
    fn imaginary_axis_matches_integral() {
        let pr = p(0.5, 1.0, 1.5);
        let (x, lam) = (re(0.4), 60.0);
        let exact = phi1_euler_integral(pr, x, c(0.0, lam)).unwrap().value;
        let v = expand_imaginary_y(pr, x, lam, 5).unwrap().value;
        assert!((v - exact).norm() < 1e-6);
        // leading pair
        let lead = expand_imaginary_y(pr, x, lam, 0).unwrap().value;
        let il = c(0.0, lam);
        let g1 = gamma(pr.c).unwrap() / gamma(pr.c - pr.a).unwrap();
        let g2 = gamma(pr.c).unwrap() / gamma(pr.a).unwrap();
        let formula = g1 * (-il).powc(-pr.a)
            + g2 * (re(1.0) - x).powc(-pr.b) * il.powc(pr.a - pr.c) * il.exp();
        assert!(rel(lead, formula) < 1e-13);
    }

    #[test]
    fn imaginary_axis_x_zero_matches_kummer() {
        let pr = p(0.5, 1.0, 1.5);
        let lam = -50.0;
        let v = expand_imaginary_y(pr, re(0.0), lam, 6).unwrap().value;
        let f = hyp1f1(pr.a, pr.c, c(0.0, lam)).unwrap().value;
        assert!((v - f).norm() < 1e-7);
    }

    #[test]
    fn shifted_reduces_to_imaginary_at_zero_shift() {
        let pr = p(0.5, 1.0, 1.5);
        let a = imaginary_y_expansion(pr, re(0.3), 60.0, 4).unwrap();
        let b = shifted_imaginary_y_expansion(pr, re(0.3), re(0.0), 60.0, 4).unwrap();
        for k in 0..=4 {
            assert!((a.term(k) - b.term(k)).norm() <= 1e-14 * a.term(k).norm());
        }
        for g in &b.terms {
            assert_eq!(g.coefficients[0], re(1.0));
        }
    }

    #[test]
    fn shifted_matches_integral() {
        let pr = p(0.5, 1.0, 1.5);
        let x = re(0.3);
        let exact = phi1_euler_integral(pr, x, c(1.0, 60.0)).unwrap().value;
        let v = expand_shifted_imaginary_y(pr, x, re(1.0), 60.0, 4)
            .unwrap()
            .value;
        assert!((v - exact).norm() < 1e-5 * exact.norm().max(1.0));
    }

    #[test]
    fn two_family_matches_imaginary_axis_form() {
        let pr = p(0.5, 1.0, 1.5);
        let a = imaginary_y_expansion(pr, re(0.3), -45.0, 5).unwrap();
        let b = large_y_two_family_expansion(pr, re(0.3), c(0.0, -45.0), 5).unwrap();
        for k in 0..=5 {
            assert!((a.term(k) - b.term(k)).norm() <= 1e-14 * a.term(k).norm());
        }
    }

    #[test]
    fn two_family_off_axis_matches_integral() {
        let pr = p(0.5, 1.0, 1.5);
        let x = re(0.3);
        for y in [c(20.0, 25.0), c(-28.0, 12.0), c(5.0, -40.0)] {
            let exact = phi1_euler_integral(pr, x, y).unwrap().value;
            let v = large_y_two_family_expansion(pr, x, y, 12)
                .unwrap()
                .optimally_truncated()
                .value;
            assert!(rel(v, exact) < 1e-7, "y = {y}: {}", rel(v, exact));
        }
        assert!(large_y_two_family_expansion(pr, x, re(30.0), 3).is_err());
    }
}
