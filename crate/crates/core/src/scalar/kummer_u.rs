//! Kummer's confluent hypergeometric function of the second kind.

use std::f64::consts::{FRAC_PI_2, PI};

use super::quad::{integrate_semi_infinite, QuadOptions};
use super::{log_gamma, re, C64};
use crate::error::{Error, Result};

/// U(a, b, z) from U = Γ(a)^{-1} ∫₀^∞ e^{−zt} t^{a−1} (1+t)^{b−a−1} dt.
///
/// Requires Re(a) > 0 and |arg z| < π/2.
pub fn kummer_u(a: C64, b: C64, z: C64) -> Result<C64> {
    if z == re(0.0) || z.arg().abs() >= FRAC_PI_2 {
        return Err(Error::domain(
            "kummer_u",
            format!("argument {z} outside |arg z| < π/2"),
        ));
    }
    u_integral(a, b, z, "kummer_u")
}

/// U(a, b, z) for |arg z| < π, integrating along the ray on which zt is
/// real and positive. Requires Re(a) > 0.
pub fn kummer_u_rotated(a: C64, b: C64, z: C64) -> Result<C64> {
    if z == re(0.0) || z.arg().abs() >= PI {
        return Err(Error::domain(
            "kummer_u_rotated",
            format!("argument {z} outside |arg z| < π"),
        ));
    }
    u_integral(a, b, z, "kummer_u_rotated")
}

fn ln_1p(w: C64) -> C64 {
    if w.norm() < 1e-4 {
        w - w * w / 2.0 + w * w * w / 3.0 - w * w * w * w / 4.0
    } else {
        (re(1.0) + w).ln()
    }
}

fn u_integral(a: C64, b: C64, z: C64, func: &'static str) -> Result<C64> {
    if a.re <= 0.0 {
        return Err(Error::domain(
            func,
            format!("requires Re(a) > 0, got a = {a}"),
        ));
    }
    let r = z.norm();
    let phi = -z.arg();
    let rot = C64::from_polar(1.0 / r, phi);
    let e = b - a - 1.0;
    let am1 = a - 1.0;
    let res = integrate_semi_infinite(
        |s, _| {
            if s == 0.0 {
                return re(0.0);
            }
            let lg = re(-s) + am1 * s.ln() + e * ln_1p(rot * s);
            if lg.re < -745.0 {
                re(0.0)
            } else {
                lg.exp()
            }
        },
        QuadOptions::with_tol(1e-13),
    );
    let pre = (C64::i() * phi * a - a * r.ln() - log_gamma(a)?).exp();
    let v = res.value * pre;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(func))
    }
}
