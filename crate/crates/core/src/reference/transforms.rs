use super::{check_cut, psi1_series, Phi1Params, Psi1Params};
use crate::error::{Error, Result};
use crate::scalar::{cpow, distance_to_integer, gamma_ratio, re, SeriesResult, C64};

/// Kummer-type transformation
/// Φ₁[a,b;c;x,y] = e^y (1−x)^{−b} Φ₁[c−a,b;c;x/(x−1),−y].
///
/// Returns the transformed parameters, arguments and the prefactor.
pub fn kummer_transform(p: Phi1Params, x: C64, y: C64) -> Result<(Phi1Params, C64, C64, C64)> {
    check_cut("kummer_transform", x)?;
    let w = re(1.0) - x;
    let pre = y.exp() * cpow(w, -p.b);
    let q = Phi1Params {
        a: p.c - p.a,
        b: p.b,
        c: p.c,
    };
    Ok((q, x / (x - 1.0), -y, pre))
}

/// Φ₁[a,b;c;x,y] = (1−x)^{c−a−b} e^{y/x} Ψ₁[c−b, c−a; c, c−b; x, (x−1)y/x].
///
/// Returns the Ψ₁ parameters, arguments and the prefactor.
pub fn phi1_to_psi1(p: Phi1Params, x: C64, y: C64) -> Result<(Psi1Params, C64, C64, C64)> {
    if x == re(0.0) {
        return Err(Error::domain("phi1_to_psi1", "requires x ≠ 0"));
    }
    check_cut("phi1_to_psi1", x)?;
    let Phi1Params { a, b, c } = p;
    let q = Psi1Params::new(c - b, c - a, c, c - b)?;
    let pre = cpow(re(1.0) - x, c - a - b) * (y / x).exp();
    Ok((q, x, (x - 1.0) / x * y, pre))
}

/// Φ₁ near x = 1 from the connection formula
///
/// ```text
/// Φ₁ = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b)) Ψ₁[a,b; a+b−c+1, c−b; 1−x, y]
///    + Γ(c)Γ(a+b−c)/(Γ(a)Γ(b)) (1−x)^{c−a−b} Ψ₁[c−b, c−a; c−a−b+1, c−b; 1−x, y]
/// ```
///
/// with both Ψ₁ summed as convergent series, so |1−x| < 1 is required, as
/// is a + b − c ∉ ℤ.
pub fn phi1_near_x1_connection(p: Phi1Params, x: C64, y: C64) -> Result<SeriesResult> {
    phi1_near_x1_connection_tol(p, x, y, 1e-14, 20_000)
}

pub(crate) fn phi1_near_x1_connection_tol(
    p: Phi1Params,
    x: C64,
    y: C64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    let Phi1Params { a, b, c } = p;
    let s = c - a - b;
    if distance_to_integer(s) < 1e-12 {
        return Err(Error::domain(
            "phi1_near_x1_connection",
            format!(
                "a + b − c = {} is an integer; use the logarithmic x → 1 model",
                -s
            ),
        ));
    }
    check_cut("phi1_near_x1_connection", x)?;
    phi1_connection_from_gap(p, re(1.0) - x, y, tol, max_terms)
}

/// The connection formula in terms of w = 1 − x, for callers that know
/// the distance to x = 1 more accurately than x itself.
pub(crate) fn phi1_connection_from_gap(
    p: Phi1Params,
    w: C64,
    y: C64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    let Phi1Params { a, b, c } = p;
    let s = c - a - b;
    if distance_to_integer(s) < 1e-12 {
        return Err(Error::domain(
            "phi1_near_x1_connection",
            "a + b − c is an integer",
        ));
    }
    if w.im == 0.0 && w.re <= 0.0 {
        return Err(Error::domain(
            "phi1_near_x1_connection",
            "x lies on the branch cut [1, ∞)",
        ));
    }
    if w.norm() >= 1.0 {
        return Err(Error::domain(
            "phi1_near_x1_connection",
            format!("requires |1 − x| < 1, got {}", w.norm()),
        ));
    }
    let g1 = gamma_ratio(&[c, s], &[c - a, c - b])?;
    let g2 = gamma_ratio(&[c, -s], &[a, b])?;
    let mut out = SeriesResult::exact(re(0.0), 0);
    let mut converged = true;
    if g1 != re(0.0) {
        let q1 = Psi1Params::new(a, b, re(1.0) - s, c - b)?;
        let r1 = psi1_series(q1, w, y, tol, max_terms)?.scale(g1);
        out.value += r1.value;
        out.abs_error_estimate += r1.abs_error_estimate;
        out.terms_used += r1.terms_used;
        converged &= r1.converged;
    }
    if g2 != re(0.0) {
        let q2 = Psi1Params::new(c - b, c - a, re(1.0) + s, c - b)?;
        let r2 = psi1_series(q2, w, y, tol, max_terms)?.scale(g2 * cpow(w, s));
        out.value += r2.value;
        out.abs_error_estimate += r2.abs_error_estimate;
        out.terms_used += r2.terms_used;
        converged &= r2.converged;
    }
    out.converged = converged;
    out.check_finite("phi1_near_x1_connection")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{phi1_series_2f1, phi1_taylor};
    use crate::scalar::{c, hyp1f1, hyp2f1};

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn kummer_fixed_point_and_algebra() {
        let p = Phi1Params::real(0.5, 1.0, 1.5).unwrap();
        let (_, x, y, pre) = kummer_transform(p, re(0.0), re(0.0)).unwrap();
        assert_eq!((x, y, pre), (re(0.0), re(0.0), re(1.0)));
        let (_, x, _, _) = kummer_transform(p, re(-1.0), re(0.0)).unwrap();
        assert_eq!(x, re(0.5));
        assert!(kummer_transform(p, re(1.0), re(0.0)).is_err());
    }

    #[test]
    fn kummer_identity() {
        let p = Phi1Params::real(0.5, 1.0, 1.5).unwrap();
        let (x, y) = (re(-0.4), re(0.7));
        let (q, xt, yt, pre) = kummer_transform(p, x, y).unwrap();
        let lhs = phi1_taylor(p, x, y, 1e-15, 2000).unwrap().value;
        let rhs = pre * phi1_taylor(q, xt, yt, 1e-15, 2000).unwrap().value;
        assert!(rel(rhs, lhs) < 1e-12);
    }

    #[test]
    fn psi1_transform_identity() {
        let p = Phi1Params::real(0.5, 1.0, 1.5).unwrap();
        let (x, y) = (re(0.4), re(0.5));
        let (q, xt, yt, pre) = phi1_to_psi1(p, x, y).unwrap();
        let lhs = phi1_taylor(p, x, y, 1e-15, 2000).unwrap().value;
        let rhs = pre * psi1_series(q, xt, yt, 1e-15, 2000).unwrap().value;
        assert!(rel(rhs, lhs) < 1e-12);
        let (_, _, yt, _) = phi1_to_psi1(p, re(0.5), re(1.0)).unwrap();
        assert_eq!(yt, re(-1.0));
        // y = 0 is Euler's transformation of ₂F₁.
        let (q, xt, _, pre) = phi1_to_psi1(p, x, re(0.0)).unwrap();
        let euler = pre * hyp2f1(q.a, q.b, q.c, xt).unwrap().value;
        assert!(rel(euler, hyp2f1(p.a, p.b, p.c, x).unwrap().value) < 1e-14);
    }

    #[test]
    fn connection_agrees_with_series() {
        let p = Phi1Params::real(0.5, 1.0, 1.25).unwrap();
        let (x, y) = (re(0.9), re(0.3));
        let a = phi1_near_x1_connection(p, x, y).unwrap();
        let b = phi1_series_2f1(p, x, y, 1e-14, 5000).unwrap();
        assert!(rel(a.value, b.value) < 1e-10);
    }

    #[test]
    fn connection_limit_at_one() {
        let p = Phi1Params::real(0.5, 0.25, 2.0).unwrap();
        let y = re(1.0);
        let g = gamma_ratio(&[p.c, p.c - p.a - p.b], &[p.c - p.a, p.c - p.b]).unwrap();
        let lim = g * hyp1f1(p.a, p.c - p.b, y).unwrap().value;
        let near = phi1_near_x1_connection(p, re(1.0 - 1e-9), y).unwrap().value;
        assert!(rel(near, lim) < 1e-6);
    }

    #[test]
    fn connection_domain_errors() {
        let p = Phi1Params::real(0.5, 1.0, 1.5).unwrap();
        assert!(phi1_near_x1_connection(p, re(0.9), re(0.1)).is_err());
        let p = Phi1Params::real(0.5, 1.0, 1.25).unwrap();
        assert!(phi1_near_x1_connection(p, re(-0.5), re(0.1)).is_err());
        assert!(phi1_near_x1_connection(p, c(0.9, 0.05), re(0.1)).is_ok());
    }
}
