use std::f64::consts::PI;

use super::coeffs::kdf_01_21;
use crate::error::{Error, Result};
use crate::scalar::{digamma, gamma_ratio, nonpositive_integer, C64, EULER_GAMMA};

/// Limit model of Φ₁[a, b; a+b; 1−ρ, y] as ρ → 0:
///
/// −Γ(a+b)/(Γ(a)Γ(b)) { e^y (2γ + ψ(a) + ψ(b) + log ρ) + (y/a) F(y, y) },
///
/// where F(u, v) = Σ_{m,n} (a)_n/(a+1)_n uᵐ vⁿ/(m+n+1)!. The o(1)
/// remainder is not included.
pub fn phi1_x_to_1_log(a: C64, b: C64, y: C64, rho: C64) -> Result<C64> {
    const F: &str = "phi1_x_to_1_log";
    for z in [a, b] {
        if nonpositive_integer(z).is_some() {
            return Err(Error::Pole { func: F, z });
        }
    }
    if nonpositive_integer(a + b).is_some() {
        return Err(Error::Pole { func: F, z: a + b });
    }
    if rho == C64::new(0.0, 0.0) || rho.arg().abs() >= PI {
        return Err(Error::domain(F, "requires ρ ≠ 0 and |arg ρ| < π"));
    }
    let g = gamma_ratio(&[a + b], &[a, b])?;
    let bracket = 2.0 * EULER_GAMMA + digamma(a)? + digamma(b)? + rho.ln();
    let f = kdf_01_21(a, y, y, 1e-16, 100_000)?;
    if !f.converged {
        return Err(Error::NonFinite(F));
    }
    Ok(-g * (y.exp() * bracket + y / a * f.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{phi1_series_2f1, Phi1Params};
    use crate::scalar::{hyp2f1, re};

    #[test]
    fn y_zero_is_gauss_log_limit() {
        let (a, b) = (re(0.5), re(0.75));
        let rho = re(1e-3);
        let v = phi1_x_to_1_log(a, b, re(0.0), rho).unwrap();
        let g = gamma_ratio(&[a + b], &[a, b]).unwrap();
        let expected =
            -g * (2.0 * EULER_GAMMA + digamma(a).unwrap() + digamma(b).unwrap() + rho.ln());
        assert!((v - expected).norm() < 1e-14 * expected.norm());
        // and the model approaches ₂F₁(a, b; a+b; 1−ρ)
        let f = hyp2f1(a, b, a + b, re(1.0) - rho).unwrap().value;
        assert!((v - f).norm() < 1e-2);
    }

    #[test]
    fn deviation_decreases_towards_one() {
        let (a, b, y) = (re(0.5), re(0.75), re(0.6));
        let p = Phi1Params::new(a, b, a + b).unwrap();
        let mut prev = f64::INFINITY;
        for k in 2..=4 {
            let rho = 10f64.powi(-k);
            let exact = phi1_series_2f1(p, re(1.0 - rho), y, 1e-15, 20_000)
                .unwrap()
                .value;
            let model = phi1_x_to_1_log(a, b, y, re(rho)).unwrap();
            let d = (exact - model).norm();
            assert!(d < prev, "rho=1e-{k}: {d}");
            prev = d;
        }
    }

    #[test]
    fn only_log_term_depends_on_rho() {
        let (a, b, y) = (re(0.5), re(0.75), re(0.6));
        let m1 = phi1_x_to_1_log(a, b, y, re(1e-2)).unwrap();
        let m2 = phi1_x_to_1_log(a, b, y, re(1e-5)).unwrap();
        let g = gamma_ratio(&[a + b], &[a, b]).unwrap();
        let diff = -g * y.exp() * (1e3f64).ln();
        assert!((m1 - m2 - diff).norm() < 1e-13);
    }

    #[test]
    fn poles_rejected() {
        assert!(phi1_x_to_1_log(re(0.0), re(0.5), re(0.1), re(0.1)).is_err());
        assert!(phi1_x_to_1_log(re(0.5), re(-2.0), re(0.1), re(0.1)).is_err());
        assert!(phi1_x_to_1_log(re(0.5), re(0.5), re(0.1), re(-0.1)).is_err());
    }
}
