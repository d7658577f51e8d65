use super::{check_cut, Phi1Params};
use crate::error::{Error, Result};
use crate::scalar::{
    gamma_ratio, hyp1f1, hyp2f1, nonpositive_integer, pfq, pochhammer, re, rgamma, SeriesResult,
    C64,
};

/// Φ₁[a,b;c;1,y] = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b)) ₁F₁[a; c−b; y], valid for
/// Re(c−a−b) > 0.
pub fn phi1_at_one(p: Phi1Params, y: C64) -> Result<SeriesResult> {
    let Phi1Params { a, b, c } = p;
    if (c - a - b).re <= 0.0 {
        return Err(Error::domain(
            "phi1_at_one",
            format!("requires Re(c − a − b) > 0, got {}", (c - a - b).re),
        ));
    }
    if nonpositive_integer(c - b).is_some() {
        return Err(Error::param_pole("phi1_at_one", "c − b ∈ ℤ≤0"));
    }
    let g = gamma_ratio(&[c, c - a - b], &[c - a, c - b])?;
    let f = hyp1f1(a, c - b, y)?;
    f.scale(g).check_finite("phi1_at_one")
}

/// Closed form of Φ₁[a, b; a−b+1; −1, y] as a combination of two ₁F₂
/// series in y²/4 (a Kummer-type summation theorem for Φ₁).
///
/// Requires Re(b) < 1 and a − b + 1 ∉ ℤ≤0.
pub fn phi1_kummer_value(a: C64, b: C64, y: C64) -> Result<SeriesResult> {
    if b.re >= 1.0 {
        return Err(Error::domain(
            "phi1_kummer_value",
            format!("requires Re(b) < 1, got b = {b}"),
        ));
    }
    if nonpositive_integer(a - b + 1.0).is_some() {
        return Err(Error::param_pole("phi1_kummer_value", "a − b + 1 ∈ ℤ≤0"));
    }
    let half = re(0.5);
    let a2 = a * 0.5;
    let z = y * y * 0.25;
    // Γ(a−b+1)/(2Γ(a)) · Γ(a/2)/Γ(a/2−b+1) with Γ(a/2)/Γ(a) = 2^{1−a}√π/Γ(a/2+½)
    // so that a ∈ ℤ≤0 (where Γ(a/2) may have a pole) is handled.
    let dup = re(2.0).powc(re(1.0) - a) * std::f64::consts::PI.sqrt();
    let lead = gamma_ratio(&[a - b + 1.0], &[])? * 0.5;
    let g_even = lead * dup * rgamma(a2 + half)? * rgamma(a2 - b + 1.0)?;
    let g_odd = lead * dup * rgamma(a2)? * rgamma(a2 - b + 1.5)?;
    let tol = 1e-16;
    let mut out = SeriesResult::exact(re(0.0), 0);
    if g_even != re(0.0) {
        let f = pfq(&[a2], &[half, a2 - b + 1.0], z, tol, 10_000)?.scale(g_even);
        out.value += f.value;
        out.abs_error_estimate += f.abs_error_estimate;
        out.terms_used += f.terms_used;
    }
    if g_odd != re(0.0) {
        let f = pfq(&[a2 + half], &[re(1.5), a2 - b + 1.5], z, tol, 10_000)?.scale(g_odd * y);
        out.value += f.value;
        out.abs_error_estimate += f.abs_error_estimate;
        out.terms_used += f.terms_used;
    }
    out.terms_used = out.terms_used.max(1);
    out.check_finite("phi1_kummer_value")
}

fn binomial(m: u64, n: u64) -> f64 {
    let mut r = 1.0;
    for k in 0..n {
        r = r * (m - k) as f64 / (k + 1) as f64;
    }
    r
}

/// Φ₁[c+m, b; c; x, y] = e^y Σ_{n=0}^m ₂F₁[c+m, b; c+n; x] C(m,n) yⁿ/(c)_n.
pub fn phi1_reduction_cm(m: u64, b: C64, c: C64, x: C64, y: C64) -> Result<SeriesResult> {
    Phi1Params::new(c + m as f64, b, c)?;
    check_cut("phi1_reduction_cm", x)?;
    let a = c + m as f64;
    let mut out = SeriesResult::exact(re(0.0), (m + 1) as usize);
    for n in 0..=m {
        let w = binomial(m, n) * y.powu(n as u32) / pochhammer(c, n);
        let f = hyp2f1(a, b, c + n as f64, x)?;
        out.value += w * f.value;
        out.abs_error_estimate += w.norm() * f.abs_error_estimate;
    }
    out.scale(y.exp()).check_finite("phi1_reduction_cm")
}

/// Φ₁[−m, b; c; x, y] = Σ_{n=0}^m ₂F₁[n−m, b; c+n; x] C(m,n) (−y)ⁿ/(c)_n.
pub fn phi1_reduction_negm(m: u64, b: C64, c: C64, x: C64, y: C64) -> Result<SeriesResult> {
    Phi1Params::new(re(-(m as f64)), b, c)?;
    check_cut("phi1_reduction_negm", x)?;
    let mut out = SeriesResult::exact(re(0.0), (m + 1) as usize);
    for n in 0..=m {
        let w = binomial(m, n) * (-y).powu(n as u32) / pochhammer(c, n);
        let f = hyp2f1(re(n as f64 - m as f64), b, c + n as f64, x)?;
        out.value += w * f.value;
        out.abs_error_estimate += w.norm() * f.abs_error_estimate;
    }
    out.check_finite("phi1_reduction_negm")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{phi1_series_2f1, phi1_taylor};
    use crate::scalar::{c, cpow};

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn at_one_collapses() {
        let p = Phi1Params::real(0.5, 0.25, 2.0).unwrap();
        let g = gamma_ratio(&[p.c, p.c - p.a - p.b], &[p.c - p.a, p.c - p.b]).unwrap();
        assert!(rel(phi1_at_one(p, re(0.0)).unwrap().value, g) < 1e-15);
        let p0 = Phi1Params::real(0.5, 0.0, 2.0).unwrap();
        let y = re(1.3);
        assert!(
            rel(
                phi1_at_one(p0, y).unwrap().value,
                hyp1f1(p0.a, p0.c, y).unwrap().value
            ) < 1e-14
        );
        let bad = Phi1Params::real(0.5, 1.0, 1.5).unwrap();
        assert!(phi1_at_one(bad, y).is_err());
    }

    #[test]
    fn at_one_matches_extrapolated_limit() {
        // Richardson extrapolation of the continued series at x = 1 − h
        // with h = 1e-3 and 5e-4. With Re(c−a−b) = 1.25 the leading
        // correction is linear in h.
        let p = Phi1Params::real(0.5, 0.25, 2.0).unwrap();
        let y = re(1.0);
        let f = |h: f64| {
            phi1_series_2f1(p, re(1.0 - h), y, 1e-15, 20_000)
                .unwrap()
                .value
        };
        let (h1, h2) = (1e-3, 5e-4);
        let extrap = (f(h2) * h1 - f(h1) * h2) / (h1 - h2);
        let v = phi1_at_one(p, y).unwrap().value;
        assert!(rel(extrap, v) < 1e-4, "{extrap} vs {v}");
    }

    #[test]
    fn kummer_value_against_series() {
        let (a, b) = (re(1.0), re(0.5));
        let p = Phi1Params::new(a, b, a - b + 1.0).unwrap();
        for &y in &[0.0, 0.8, -0.8, 2.0] {
            let lhs = phi1_series_2f1(p, re(-1.0), re(y), 1e-15, 2000)
                .unwrap()
                .value;
            let rhs = phi1_kummer_value(a, b, re(y)).unwrap().value;
            assert!(rel(rhs, lhs) < 1e-12, "y={y}");
        }
    }

    #[test]
    fn kummer_value_parity() {
        let (a, b) = (c(0.7, 0.2), re(0.3));
        let y = re(0.9);
        let plus = phi1_kummer_value(a, b, y).unwrap().value;
        let minus = phi1_kummer_value(a, b, -y).unwrap().value;
        let even = (plus + minus) * 0.5;
        let at_zero = phi1_kummer_value(a, b, re(0.0)).unwrap().value;
        // The even part is the first ₁F₂ alone; at y = 0 it is the whole value.
        let z = y * y * 0.25;
        let lead = at_zero;
        let f = pfq(&[a * 0.5], &[re(0.5), a * 0.5 - b + 1.0], z, 1e-16, 1000)
            .unwrap()
            .value;
        assert!(rel(even, lead * f) < 1e-13);
        assert!(phi1_kummer_value(a, re(1.5), y).is_err());
    }

    #[test]
    fn reduction_cm() {
        let (b, cc) = (re(1.0), re(0.5));
        let (x, y) = (re(0.3), re(0.4));
        // m = 0 collapses to e^y (1−x)^{−b}
        let r = phi1_reduction_cm(0, b, cc, x, y).unwrap().value;
        assert!(rel(r, y.exp() * cpow(re(1.0) - x, -b)) < 1e-14);
        let r = phi1_reduction_cm(1, b, cc, x, y).unwrap().value;
        let p = Phi1Params::new(cc + 1.0, b, cc).unwrap();
        let t = phi1_taylor(p, x, y, 1e-16, 2000).unwrap().value;
        assert!(rel(r, t) < 1e-12);
        let r = phi1_reduction_cm(2, b, cc, x, re(0.0)).unwrap().value;
        assert!(rel(r, hyp2f1(cc + 2.0, b, cc, x).unwrap().value) < 1e-14);
    }

    #[test]
    fn reduction_negm() {
        let (b, cc) = (c(0.4, 0.1), re(1.7));
        let (x, y) = (re(0.35), re(-0.6));
        assert_eq!(phi1_reduction_negm(0, b, cc, x, y).unwrap().value, re(1.0));
        let r = phi1_reduction_negm(1, b, cc, x, y).unwrap().value;
        assert!((r - (re(1.0) - b * x / cc - y / cc)).norm() < 1e-15);
        let (b, cc) = (re(2.0), re(2.5));
        let (x, y) = (re(-0.7), re(1.3));
        let p = Phi1Params::new(re(-3.0), b, cc).unwrap();
        let r = phi1_reduction_negm(3, b, cc, x, y).unwrap().value;
        let s = phi1_series_2f1(p, x, y, 1e-16, 2000).unwrap().value;
        assert!(rel(r, s) < 1e-12);
    }
}
