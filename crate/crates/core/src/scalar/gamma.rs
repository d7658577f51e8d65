//! Gamma, log-gamma and digamma for complex arguments.

use std::f64::consts::PI;

use super::{finite, nonpositive_integer, re, C64};
use crate::error::{Error, Result};

/// Euler–Mascheroni constant, γ = −ψ(1).
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

// Lanczos approximation, g = 671/128, 14 terms.
const LANCZOS_G: f64 = 5.242_187_5;
#[allow(clippy::excessive_precision)]
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn log_gamma_lanczos(z: C64) -> C64 {
    // valid for Re(z) >= 0.5
    let t = z + LANCZOS_G;
    let mut ser = re(LANCZOS_C0);
    for (j, &cj) in LANCZOS_COEF.iter().enumerate() {
        ser += cj / (z + (j + 1) as f64);
    }
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + ser.ln() - z.ln()
}

/// Principal branch of log Γ(z).
///
/// For Re(z) < 0.5 the value is obtained from the upward recurrence
/// log Γ(z) = log Γ(z+n) − Σ log(z+k), which preserves the principal
/// branch; far to the left the reflection formula is used instead.
pub fn log_gamma(z: C64) -> Result<C64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::Pole {
            func: "log_gamma",
            z,
        });
    }
    if z.re >= 0.5 {
        return finite(log_gamma_lanczos(z), "log_gamma");
    }
    if z.re > -60.0 {
        let n = (0.5 - z.re).ceil() as usize;
        let mut acc = re(0.0);
        for k in 0..n {
            acc += (z + k as f64).ln();
        }
        return finite(log_gamma_lanczos(z + n as f64) - acc, "log_gamma");
    }
    // log Γ(z) = log π − log sin(πz) − log Γ(1−z)
    let v = re(PI.ln()) - log_sin_pi(z) - log_gamma_lanczos(re(1.0) - z);
    finite(v, "log_gamma")
}

/// log sin(πz), stable for large |Im z|.
fn log_sin_pi(z: C64) -> C64 {
    let w = z * PI;
    if w.im.abs() < 20.0 {
        return w.sin().ln();
    }
    let i = C64::i();
    if w.im > 0.0 {
        // sin w = e^{-iw}(1 - e^{2iw}) / (2i)
        -i * w + (re(1.0) - (re(2.0) * i * w).exp()).ln() - (re(2.0) * i).ln()
    } else {
        // sin w = e^{iw}(1 - e^{-2iw}) / (2i)
        i * w + (re(1.0) - (re(-2.0) * i * w).exp()).ln() - (re(2.0) * i).ln()
    }
}

/// Γ(z).
pub fn gamma(z: C64) -> Result<C64> {
    if z.im == 0.0 && z.re > 0.0 && z.re < 171.0 && z.re == z.re.round() {
        let mut f = 1.0;
        for k in 2..(z.re as u64) {
            f *= k as f64;
        }
        return Ok(re(f));
    }
    let v = log_gamma(z)?.exp();
    finite(v, "gamma")
}

/// 1/Γ(z); zero at the poles of Γ.
pub fn rgamma(z: C64) -> Result<C64> {
    if nonpositive_integer(z).is_some() {
        return Ok(re(0.0));
    }
    finite((-log_gamma(z)?).exp(), "rgamma")
}

/// Π Γ(num) / Π Γ(den).
///
/// A pole in the denominator makes the ratio vanish; a pole in the
/// numerator is an error.
pub fn gamma_ratio(num: &[C64], den: &[C64]) -> Result<C64> {
    for &d in den {
        if nonpositive_integer(d).is_some() {
            for &n in num {
                if nonpositive_integer(n).is_some() {
                    return Err(Error::Pole {
                        func: "gamma_ratio",
                        z: n,
                    });
                }
            }
            return Ok(re(0.0));
        }
    }
    let mut acc = re(0.0);
    for &n in num {
        acc += log_gamma(n)?;
    }
    for &d in den {
        acc -= log_gamma(d)?;
    }
    finite(acc.exp(), "gamma_ratio")
}

// B_{2k} / (2k) for k = 1..=10
const DIGAMMA_ASYMPTOTIC: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
    -174611.0 / 6600.0,
];

/// cot(πz), stable for large |Im z|.
fn cot_pi(z: C64) -> C64 {
    let w = z * PI;
    let i = C64::i();
    if w.im > 0.0 {
        let q = (re(2.0) * i * w).exp();
        i * (q + 1.0) / (q - 1.0)
    } else {
        let q = (re(-2.0) * i * w).exp();
        i * (re(1.0) + q) / (re(1.0) - q)
    }
}

/// Digamma function ψ(z) = Γ'(z)/Γ(z).
pub fn digamma(z: C64) -> Result<C64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::Pole { func: "digamma", z });
    }
    if z.re < 0.5 {
        // ψ(z) = ψ(1−z) − π cot(πz)
        let v = digamma_right(re(1.0) - z) - cot_pi(z) * PI;
        return finite(v, "digamma");
    }
    finite(digamma_right(z), "digamma")
}

fn digamma_right(mut z: C64) -> C64 {
    let mut shift = re(0.0);
    while z.norm() < 15.0 {
        shift -= z.inv();
        z += 1.0;
    }
    let zi2 = (z * z).inv();
    let mut pw = zi2;
    let mut tail = re(0.0);
    for &b in DIGAMMA_ASYMPTOTIC.iter() {
        tail += pw * b;
        pw *= zi2;
    }
    z.ln() - z.inv() * 0.5 - tail + shift
}
