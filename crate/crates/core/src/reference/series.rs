use super::{check_cut, kummer_transform, Phi1Params, Psi1Params};
use crate::error::{Error, Result};
use crate::scalar::quad::{tanh_sinh, QuadOptions};
use crate::scalar::within;
use crate::scalar::{gamma_ratio, hyp2f1, nonpositive_integer, re, SeriesResult, C64};

/// Number of consecutive negligible terms required before a double or
/// outer series is truncated.
const QUIET_TERMS: usize = 3;

/// Φ₁ by its defining double series, summed along diagonals k = m + n.
///
/// Requires |x| < 1. The error estimate is the modulus of the first
/// omitted diagonal.
pub fn phi1_taylor(
    p: Phi1Params,
    x: C64,
    y: C64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    if x.norm() >= 1.0 {
        return Err(Error::domain(
            "phi1_taylor",
            format!("double series requires |x| < 1, got |x| = {}", x.norm()),
        ));
    }
    let Phi1Params { a, b, c } = p;
    // u_m = (b)_m x^m / m!, v_n = y^n / n!
    let mut u = vec![re(1.0)];
    let mut v = vec![re(1.0)];
    let mut pre = re(1.0); // (a)_k / (c)_k
    let size = a.norm() + b.norm() + c.norm() + 1.0;
    let n_safe = (y.norm() + size * x.norm() / (1.0 - x.norm()) + (-c.re).max(0.0)) as usize;
    diagonal_sum(tol, max_terms, n_safe, |k| {
        if k > 0 {
            let kf = (k - 1) as f64;
            pre *= (a + kf) / (c + kf);
            let m = u.len() - 1;
            u.push(u[m] * (b + m as f64) * x / (m as f64 + 1.0));
            v.push(v[m] * y / (m as f64 + 1.0));
        }
        let mut inner = re(0.0);
        let mut mag = 0.0;
        for m in 0..=k {
            let t = u[m] * v[k - m];
            inner += t;
            mag += t.norm();
        }
        (pre * inner, pre.norm() * mag, pre == re(0.0) && k > 0)
    })
}

/// Ψ₁ by its defining double series, summed along diagonals.
///
/// Each diagonal is written as (a)_k/k! Σ_m C(k,m) (b)_m/(c)_m x^m
/// y^{k−m}/(c′)_{k−m} so that no factor grows factorially.
pub fn psi1_series(
    q: Psi1Params,
    x: C64,
    y: C64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    if x.norm() >= 1.0 {
        return Err(Error::domain(
            "psi1_series",
            format!("double series requires |x| < 1, got |x| = {}", x.norm()),
        ));
    }
    let Psi1Params { a, b, c, c_prime } = q;
    let mut u = vec![re(1.0)];
    let mut v = vec![re(1.0)];
    let mut pre = re(1.0); // (a)_k / k!
    let size = a.norm() + b.norm() + c.norm() + c_prime.norm() + 1.0;
    let n_safe =
        (y.norm() + size * x.norm() / (1.0 - x.norm()) + (-c.re).max(0.0) + (-c_prime.re).max(0.0))
            as usize;
    diagonal_sum(tol, max_terms, n_safe, |k| {
        if k > 0 {
            let kf = (k - 1) as f64;
            pre *= (a + kf) / (kf + 1.0);
            let m = u.len() - 1;
            let mf = m as f64;
            u.push(u[m] * (b + mf) / (c + mf) * x);
            v.push(v[m] / (c_prime + mf) * y);
        }
        let mut inner = re(0.0);
        let mut mag = 0.0;
        let mut binom = 1.0f64;
        for m in 0..=k {
            let t = u[m] * v[k - m] * binom;
            inner += t;
            mag += t.norm();
            binom *= (k - m) as f64 / (m as f64 + 1.0);
        }
        (pre * inner, pre.norm() * mag, pre == re(0.0) && k > 0)
    })
}

/// Sums `diag(k)` for k = 0, 1, … until the series has passed `n_safe`
/// and [`QUIET_TERMS`] consecutive diagonals are negligible. `diag`
/// returns (value, sum of moduli of its constituents, terminated).
/// Accumulated rounding in a sum of `k` diagonals whose largest one has
/// magnitude `peak`.
fn roundoff(peak: f64, k: usize) -> f64 {
    f64::EPSILON * peak * ((k + 1) as f64).sqrt()
}

fn diagonal_sum<F>(tol: f64, max_terms: usize, n_safe: usize, mut diag: F) -> Result<SeriesResult>
where
    F: FnMut(usize) -> (C64, f64, bool),
{
    let mut sum = re(0.0);
    let mut quiet = 0;
    let mut peak = 0.0f64;
    let mut k = 0usize;
    loop {
        let (d, mag, done) = diag(k);
        if done {
            return SeriesResult {
                value: sum,
                abs_error_estimate: roundoff(peak, k),
                terms_used: k,
                converged: true,
            }
            .check_finite("diagonal series");
        }
        let dn = d.norm();
        if !dn.is_finite() {
            return Err(Error::NonFinite("diagonal series"));
        }
        if k >= n_safe.max(1) && within(dn, sum, tol) {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                let err = dn + roundoff(peak, k);
                return SeriesResult {
                    value: sum,
                    abs_error_estimate: err,
                    terms_used: k,
                    converged: within(err, sum, tol),
                }
                .check_finite("diagonal series");
            }
        } else {
            quiet = 0;
        }
        if k >= max_terms {
            return SeriesResult {
                value: sum,
                abs_error_estimate: dn,
                terms_used: k,
                converged: false,
            }
            .check_finite("diagonal series");
        }
        sum += d;
        peak = peak.max(mag);
        k += 1;
    }
}

/// Φ₁ = Σ_n (a)_n/(c)_n ₂F₁[a+n, b; c+n; x] yⁿ/n!, valid on the whole
/// cut plane x ∉ [1, ∞).
///
/// When Re(y) < −1 the Kummer-type transformation is applied first so that
/// the outer series has no cancellation from e^{y}. Summation stops after
/// three consecutive terms below tol times the running maximum partial sum.
/// The error estimate adds the rounding error implied by the largest term
/// and the propagated inner ₂F₁ estimates.
pub fn phi1_series_2f1(
    p: Phi1Params,
    x: C64,
    y: C64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    check_cut("phi1_series_2f1", x)?;
    if y.re < -1.0 {
        let (pt, xt, yt, pre) = kummer_transform(p, x, y)?;
        let r = series_2f1_direct(pt, xt, yt, tol, max_terms)?;
        return r.scale(pre).check_finite("phi1_series_2f1");
    }
    series_2f1_direct(p, x, y, tol, max_terms)
}

fn series_2f1_direct(
    p: Phi1Params,
    x: C64,
    y: C64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    let Phi1Params { a, b, c } = p;
    let n_safe = y.norm() as usize + 1;
    let mut coef = re(1.0);
    let mut sum = re(0.0);
    let mut max_partial = 0.0f64;
    let mut max_term = 0.0f64;
    let mut inner_err = 0.0f64;
    let mut quiet = 0;
    let mut n = 0usize;
    loop {
        if coef == re(0.0) {
            // a ∈ ℤ≤0: the outer series terminates.
            break;
        }
        let nf = n as f64;
        let f = hyp2f1(a + nf, b, c + nf, x)?;
        let t = coef * f.value;
        inner_err += coef.norm() * f.abs_error_estimate;
        let tn = t.norm();
        if !tn.is_finite() {
            return Err(Error::NonFinite("phi1_series_2f1"));
        }
        sum += t;
        max_term = max_term.max(tn);
        max_partial = max_partial.max(sum.norm());
        n += 1;
        if n > n_safe && tn < tol * max_partial {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                break;
            }
        } else {
            quiet = 0;
        }
        if n >= max_terms {
            let err = tn + inner_err + f64::EPSILON * max_term * 2.0;
            return Ok(SeriesResult {
                value: sum,
                abs_error_estimate: err,
                terms_used: n,
                converged: false,
            });
        }
        coef *= (a + nf) / (c + nf) * y / (nf + 1.0);
    }
    // First omitted term, or zero when the series terminated.
    let next = if coef == re(0.0) {
        0.0
    } else {
        let nf = n as f64;
        (coef * hyp2f1(a + nf, b, c + nf, x)?.value).norm()
    };
    let err = next + inner_err + f64::EPSILON * max_term * 2.0;
    SeriesResult {
        value: sum,
        abs_error_estimate: err,
        terms_used: n,
        converged: within(err, sum, tol),
    }
    .check_finite("phi1_series_2f1")
}

/// Φ₁ from the Euler integral
/// Γ(c)/(Γ(a)Γ(c−a)) ∫₀¹ t^{a−1}(1−t)^{c−a−1}(1−xt)^{−b}e^{yt} dt.
///
/// Requires Re(c) > Re(a) > 0. The endpoint singularities are absorbed by
/// double-exponential quadrature; e^{max(Re y, 0)} is factored out of the
/// integrand to avoid overflow.
pub fn phi1_euler_integral(p: Phi1Params, x: C64, y: C64) -> Result<SeriesResult> {
    euler_integral_tol(p, x, y, 1e-12)
}

pub(crate) fn euler_integral_tol(p: Phi1Params, x: C64, y: C64, tol: f64) -> Result<SeriesResult> {
    let Phi1Params { a, b, c } = p;
    if !(c.re > a.re && a.re > 0.0) {
        return Err(Error::domain(
            "phi1_euler_integral",
            format!("requires Re(c) > Re(a) > 0, got a = {a}, c = {c}"),
        ));
    }
    check_cut("phi1_euler_integral", x)?;
    if nonpositive_integer(c - a).is_some() {
        return Err(Error::param_pole("phi1_euler_integral", "c − a ∈ ℤ≤0"));
    }
    // With h(t) = (1−xt)^{−b} e^{yt}, the linear interpolant
    // h(0)(1−t) + h(1)t integrates in closed form against the Beta weight,
    // to h(0)(c−a)/c + h(1)a/c after normalisation. The remainder vanishes
    // at both ends, which keeps the quadrature accurate when Re(a) or
    // Re(c−a) is close to 0.
    let shift = y.re.max(0.0);
    let am1 = a - 1.0;
    let cam1 = c - a - 1.0;
    let h0 = (-shift).exp();
    let h1 = (-b * (re(1.0) - x).ln() + y - shift).exp();
    let r = tanh_sinh(
        |t, tc| {
            let h = (-b * (re(1.0) - x * t).ln() + y * t - shift).exp();
            let rest = h - h0 * tc - h1 * t;
            if rest == re(0.0) {
                return rest;
            }
            let lg = am1 * t.ln() + cam1 * tc.ln() + rest.ln();
            if lg.re < -745.0 {
                re(0.0)
            } else {
                lg.exp()
            }
        },
        QuadOptions {
            tol,
            max_level: 12,
            min_level: 4,
        },
    );
    let pre = gamma_ratio(&[c], &[a, c - a])?;
    let ends = (c - a) / c * h0 + a / c * h1;
    let mut out = r.scale(pre);
    out.value += ends;
    let out = out.scale(re(shift).exp());
    let mut out = out;
    out.converged = within(out.abs_error_estimate, out.value, 1e-10) && r.converged;
    out.check_finite("phi1_euler_integral")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c, hyp1f1};
    use std::f64::consts::PI;

    fn params() -> Phi1Params {
        Phi1Params::real(0.5, 1.0, 1.5).unwrap()
    }

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).norm() / b.norm()
    }

    /// Row-major summation of the double series: for each m the inner sum
    /// over n is a ₁F₁-type series summed until negligible.
    fn phi1_row_major(p: Phi1Params, x: C64, y: C64) -> C64 {
        let mut total = re(0.0);
        let mut row = re(1.0); // (a)_m (b)_m/(c)_m x^m/m!
        for m in 0..400 {
            let mf = m as f64;
            let mut t = row;
            let mut s = re(0.0);
            for n in 0..400 {
                s += t;
                let nf = n as f64;
                t *= (p.a + mf + nf) / (p.c + mf + nf) * y / (nf + 1.0);
                if t.norm() < 1e-18 * s.norm() && n > 5 {
                    break;
                }
            }
            total += s;
            if row.norm() < 1e-18 * total.norm() && m > 5 {
                break;
            }
            row *= (p.a + mf) * (p.b + mf) / (p.c + mf) * x / (mf + 1.0);
        }
        total
    }

    #[test]
    fn taylor_collapses() {
        let p = Phi1Params::new(c(0.3, 0.1), re(0.7), re(1.9)).unwrap();
        let y = c(0.4, -0.3);
        let r = phi1_taylor(p, re(0.0), y, 1e-14, 1000).unwrap();
        assert!(rel(r.value, hyp1f1(p.a, p.c, y).unwrap().value) < 1e-14);
        let x = c(0.2, 0.5);
        let r = phi1_taylor(p, x, re(0.0), 1e-14, 1000).unwrap();
        assert!(rel(r.value, hyp2f1(p.a, p.b, p.c, x).unwrap().value) < 1e-13);
    }

    #[test]
    fn taylor_matches_row_major() {
        let x = re(0.3);
        let y = re(0.2);
        let v = phi1_taylor(params(), x, y, 1e-14, 1000).unwrap();
        let oracle = phi1_row_major(params(), x, y);
        assert!(rel(v.value, oracle) < 1e-14);
        assert!(v.converged);
    }

    #[test]
    fn taylor_rejects_outside_disc() {
        assert!(phi1_taylor(params(), re(1.2), re(0.0), 1e-12, 100).is_err());
    }

    #[test]
    fn series_matches_taylor() {
        let x = re(0.3);
        let y = re(0.2);
        let a = phi1_series_2f1(params(), x, y, 1e-14, 1000).unwrap().value;
        let b = phi1_taylor(params(), x, y, 1e-14, 1000).unwrap().value;
        assert!(rel(a, b) < 1e-13);
    }

    #[test]
    fn series_b_zero() {
        let p = Phi1Params::real(0.5, 0.0, 1.5).unwrap();
        let r = phi1_series_2f1(p, re(-3.0), re(1.0), 1e-14, 1000).unwrap();
        assert!(rel(r.value, hyp1f1(re(0.5), re(1.5), re(1.0)).unwrap().value) < 1e-14);
    }

    #[test]
    fn series_matches_euler_integral_beyond_unit_disc() {
        let r1 = phi1_series_2f1(params(), re(-3.0), re(1.0), 1e-14, 1000).unwrap();
        let r2 = phi1_euler_integral(params(), re(-3.0), re(1.0)).unwrap();
        assert!(rel(r1.value, r2.value) < 1e-11);
        let r1 = phi1_series_2f1(params(), re(0.5), re(2.0), 1e-14, 1000).unwrap();
        let r2 = phi1_euler_integral(params(), re(0.5), re(2.0)).unwrap();
        assert!(rel(r1.value, r2.value) < 1e-11);
    }

    #[test]
    fn series_rejects_cut() {
        assert!(phi1_series_2f1(params(), re(1.0), re(0.0), 1e-12, 100).is_err());
        assert!(phi1_series_2f1(params(), re(3.0), re(0.0), 1e-12, 100).is_err());
        assert!(phi1_series_2f1(params(), c(3.0, 0.1), re(0.0), 1e-12, 100).is_ok());
    }

    #[test]
    fn euler_arctan() {
        let r = phi1_euler_integral(params(), re(-1.0), re(0.0)).unwrap();
        assert!((r.value - re(PI / 4.0)).norm() < 1e-12);
    }

    #[test]
    fn euler_x_zero_is_kummer() {
        let p = Phi1Params::real(0.3, 2.0, 1.7).unwrap();
        let y = c(1.5, -2.0);
        let r = phi1_euler_integral(p, re(0.0), y).unwrap();
        assert!(rel(r.value, hyp1f1(p.a, p.c, y).unwrap().value) < 1e-11);
    }

    #[test]
    fn euler_requires_ordering() {
        let p = Phi1Params::real(1.5, 1.0, 1.2).unwrap();
        assert!(phi1_euler_integral(p, re(0.1), re(0.1)).is_err());
    }

    #[test]
    fn psi1_collapses_and_row_major() {
        let q = Psi1Params::new(re(0.5), re(1.0), re(1.5), re(1.0)).unwrap();
        let y = re(0.3);
        let r = psi1_series(q, re(0.0), y, 1e-15, 1000).unwrap();
        assert!(rel(r.value, hyp1f1(q.a, q.c_prime, y).unwrap().value) < 1e-14);
        let r = psi1_series(q, re(0.2), re(0.0), 1e-15, 1000).unwrap();
        assert!(rel(r.value, hyp2f1(q.a, q.b, q.c, re(0.2)).unwrap().value) < 1e-14);

        // Row-major oracle: Σ_m (a)_m (b)_m/((c)_m m!) x^m Σ_n (a+m)_n/(c′)_n yⁿ/n!
        let x = re(0.2);
        let y = re(0.3);
        let mut total = re(0.0);
        let mut row = re(1.0);
        for m in 0..200 {
            let mf = m as f64;
            let mut t = row;
            let mut s = re(0.0);
            for n in 0..200 {
                s += t;
                let nf = n as f64;
                t *= (q.a + mf + nf) / (q.c_prime + nf) * y / (nf + 1.0);
            }
            total += s;
            row *= (q.a + mf) * (q.b + mf) / ((q.c + mf) * (mf + 1.0)) * x;
        }
        let r = psi1_series(q, x, y, 1e-15, 1000).unwrap();
        assert!(rel(r.value, total) < 1e-13);
    }
}
