//! Complementary error function.

use std::f64::consts::PI;

use super::{re, C64};

/// erfc(z) for complex z.
///
/// The Taylor series of erf is used for Re z < 0.5 and a continued fraction
/// for Re z ≥ 0.5; negative real parts go through erfc(−z) = 2 − erfc(z).
pub fn erfc(z: C64) -> C64 {
    if z.re < 0.0 {
        return re(2.0) - erfc(-z);
    }
    if z.re < 0.5 {
        return re(1.0) - erf_series(z);
    }
    erfc_continued_fraction(z)
}

fn erf_series(z: C64) -> C64 {
    // erf z = 2/√π Σ (−1)^n z^{2n+1} / (n! (2n+1))
    let z2 = z * z;
    let mut term = z; // (−1)^n z^{2n+1}/n!
    let mut sum = z;
    for n in 1..2000 {
        let nf = n as f64;
        term *= -z2 / nf;
        let t = term / (2.0 * nf + 1.0);
        sum += t;
        if t.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    sum * (2.0 / PI.sqrt())
}

fn erfc_continued_fraction(z: C64) -> C64 {
    // erfc z = e^{−z²}/√π · 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + …)))),
    // evaluated with the modified Lentz algorithm.
    let tiny = 1e-300;
    let mut f = z;
    let mut c = z;
    let mut d = re(0.0);
    for j in 1..20_000 {
        let aj = j as f64 / 2.0;
        d = z + d * aj;
        if d.norm() < tiny {
            d = re(tiny);
        }
        c = z + c.inv() * aj;
        if c.norm() < tiny {
            c = re(tiny);
        }
        d = d.inv();
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            break;
        }
    }
    (-z * z).exp() / (f * PI.sqrt())
}
