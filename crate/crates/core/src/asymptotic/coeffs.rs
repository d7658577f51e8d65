//! Coefficient generators for the asymptotic expansions, plus the two
//! Kampé de Fériet functions that appear as coefficients or in the
//! logarithmic model near x = 1.

use crate::error::{Error, Result};
use crate::reference::Phi1Params;
use crate::scalar::{
    kummer_u_rotated, nonpositive_integer, pfq, pochhammer, pochhammer_signed, re, within,
    SeriesResult, C64,
};

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Terminating Kampé de Fériet sum
/// F[−n: α; β; u, v] = Σ_{r+s≤n} (−n)_{r+s} (α)_r (β)_s uʳ vˢ / (r! s!).
pub fn kdf_11_1(n: usize, alpha: C64, beta: C64, u: C64, v: C64) -> C64 {
    let mut sum = re(0.0);
    let nf = -(n as f64);
    for r in 0..=n {
        let ar = pochhammer(alpha, r as u64) * u.powu(r as u32) / factorial(r);
        for s in 0..=(n - r) {
            let t =
                pochhammer(re(nf), (r + s) as u64) * pochhammer(beta, s as u64) * v.powu(s as u32)
                    / factorial(s);
            sum += ar * t;
        }
    }
    sum
}

/// yⁿ/n! · F[−n: α; β; u/y, v/y], written as
/// Σ_{r+s≤n} (α)_r (β)_s (−u)ʳ (−v)ˢ y^{n−r−s} / (r! s! (n−r−s)!)
/// so that y = 0 is allowed.
pub fn kdf_11_1_scaled(n: usize, alpha: C64, beta: C64, u: C64, v: C64, y: C64) -> C64 {
    let mut sum = re(0.0);
    for r in 0..=n {
        let ar = pochhammer(alpha, r as u64) * (-u).powu(r as u32) / factorial(r);
        for s in 0..=(n - r) {
            let rest = n - r - s;
            let bs = pochhammer(beta, s as u64) * (-v).powu(s as u32) / factorial(s);
            sum += ar * bs * y.powu(rest as u32) / factorial(rest);
        }
    }
    sum
}

/// Two-variable Lagrange polynomial
/// g_n^{(α,α′)}(p, q) = Σ_{r=0}^n (α)_r (α′)_{n−r} pʳ q^{n−r} / (r! (n−r)!),
/// the coefficient of zⁿ in (1 − pz)^{−α} (1 − qz)^{−α′}.
pub fn lagrange_g(n: usize, alpha: C64, alpha_p: C64, p: C64, q: C64) -> C64 {
    let mut sum = re(0.0);
    for r in 0..=n {
        sum += pochhammer(alpha, r as u64)
            * pochhammer(alpha_p, (n - r) as u64)
            * p.powu(r as u32)
            * q.powu((n - r) as u32)
            / (factorial(r) * factorial(n - r));
    }
    sum
}

/// Coefficient a_k(x, y) of the e^y family in the joint large-(x, y)
/// expansions, as a function of β = −y/x:
///
/// a_k = Σ_j (c−a)_j (c−a)_{k−j} (j+b−a+1)_{k−j} / (j! (k−j)!)
///       · ₃F₂[−j, j−k, c−1; c−a, a−b−k; 1] · β^{j−k}.
pub fn coeff_a_k(k: usize, p: Phi1Params, beta: C64) -> Result<C64> {
    let Phi1Params { a, b, c } = p;
    if k == 0 {
        return Ok(re(1.0));
    }
    if beta == re(0.0) {
        return Err(Error::domain("coeff_a_k", "β must be nonzero"));
    }
    let kf = k as f64;
    let mut sum = re(0.0);
    for j in 0..=k {
        let jf = j as f64;
        let f32_ = pfq(
            &[re(-jf), re(jf - kf), c - 1.0],
            &[c - a, a - b - kf],
            re(1.0),
            1e-16,
            k + 2,
        )
        .map_err(|e| match e {
            Error::ParameterPole { reason, .. } => Error::param_pole("coeff_a_k", reason),
            other => other,
        })?;
        let w = pochhammer(c - a, j as u64)
            * pochhammer(c - a, (k - j) as u64)
            * pochhammer(b - a + 1.0 + jf, (k - j) as u64)
            / (factorial(j) * factorial(k - j));
        sum += w * f32_.value * beta.powi(j as i32 - k as i32);
    }
    Ok(sum)
}

/// a_k⁽¹⁾(λ) = (b−a+1)_k Σ_n (b)_n (c−a)_{k−n} / ((b−a+1)_n n! (k−n)!) (−λ)ⁿ,
/// evaluated with (b−a+1)_k/(b−a+1)_n = (b−a+1+n)_{k−n}.
pub fn coeff_a1_lambda(k: usize, p: Phi1Params, lambda: C64) -> C64 {
    let Phi1Params { a, b, c } = p;
    let mut sum = re(0.0);
    for n in 0..=k {
        let nf = n as f64;
        sum += pochhammer(b, n as u64)
            * pochhammer(b - a + 1.0 + nf, (k - n) as u64)
            * pochhammer(c - a, (k - n) as u64)
            * (-lambda).powu(n as u32)
            / (factorial(n) * factorial(k - n));
    }
    sum
}

/// a_k⁽²⁾(λ) = (a)_k (a−c+1)_k / k! · U(a+k, a−b+k+1, λ).
pub fn coeff_a2_lambda(k: usize, p: Phi1Params, lambda: C64) -> Result<C64> {
    let Phi1Params { a, b, c } = p;
    let kf = k as f64;
    let w = pochhammer(a, k as u64) * pochhammer(a - c + 1.0, k as u64) / factorial(k);
    if w == re(0.0) {
        return Ok(w);
    }
    Ok(w * kummer_u_rotated(a + kf, a - b + kf + 1.0, lambda)?)
}

/// b_k⁽¹⁾(η) = Σ_{m+2n=k} (a)_{m+n} (a−c+1)_m / ((a−b+1)_{m+n} m! n!) ηⁿ.
pub fn coeff_b1(k: usize, p: Phi1Params, eta: C64) -> Result<C64> {
    let Phi1Params { a, b, c } = p;
    let mut sum = re(0.0);
    for n in 0..=k / 2 {
        let m = k - 2 * n;
        let den = pochhammer(a - b + 1.0, (m + n) as u64);
        if den == re(0.0) {
            return Err(Error::param_pole("coeff_b1", "(a−b+1)_{m+n} vanishes"));
        }
        sum += pochhammer(a, (m + n) as u64) * pochhammer(a - c + 1.0, m as u64) / den
            * eta.powu(n as u32)
            / (factorial(m) * factorial(n));
    }
    Ok(sum)
}

/// b_k⁽²⁾(η) = Σ_{m+n=k} (b)_m (b−c+1)_{m−n} / ((b−a+1)_{m−n} m! n!) ηⁿ,
/// with negative-index Pochhammer symbols (z)_{−j} = 1/(z−j)_j.
pub fn coeff_b2(k: usize, p: Phi1Params, eta: C64) -> Result<C64> {
    let Phi1Params { a, b, c } = p;
    let mut sum = re(0.0);
    for n in 0..=k {
        let m = k - n;
        let d = m as i64 - n as i64;
        let num = pochhammer_signed(b - c + 1.0, d)?;
        let den = pochhammer_signed(b - a + 1.0, d)?;
        if den == re(0.0) {
            return Err(Error::param_pole("coeff_b2", "(b−a+1)_{m−n} vanishes"));
        }
        sum += pochhammer(b, m as u64) * num / den * eta.powu(n as u32)
            / (factorial(m) * factorial(n));
    }
    Ok(sum)
}

/// c_k⁽¹⁾(η) = (−1)ᵏ Σ_{m+2n=k} (a)_{m+n} (a−c+1)_m (b)_n (−η)ⁿ / (m! n!).
pub fn coeff_c1(k: usize, p: Phi1Params, eta: C64) -> C64 {
    let Phi1Params { a, b, c } = p;
    let mut sum = re(0.0);
    for n in 0..=k / 2 {
        let m = k - 2 * n;
        sum += pochhammer(a, (m + n) as u64)
            * pochhammer(a - c + 1.0, m as u64)
            * pochhammer(b, n as u64)
            * (-eta).powu(n as u32)
            / (factorial(m) * factorial(n));
    }
    if k % 2 == 1 {
        -sum
    } else {
        sum
    }
}

/// c_k⁽²⁾(η) = Σ_{m+n=k} (c−a)_m (a)_n (b)_n (1−a)_{m−n} (−η)ⁿ / (m! n!).
pub fn coeff_c2(k: usize, p: Phi1Params, eta: C64) -> Result<C64> {
    let Phi1Params { a, b, c } = p;
    let mut sum = re(0.0);
    for n in 0..=k {
        let m = k - n;
        sum += pochhammer(c - a, m as u64)
            * pochhammer(a, n as u64)
            * pochhammer(b, n as u64)
            * pochhammer_signed(re(1.0) - a, m as i64 - n as i64)?
            * (-eta).powu(n as u32)
            / (factorial(m) * factorial(n));
    }
    Ok(sum)
}

/// The entire double series
/// F[−: 1; a, 1; 2: −; a+1; u, v] = Σ_{m,n} (a)_n/(a+1)_n · uᵐ vⁿ / (m+n+1)!,
/// summed along diagonals m + n = d. The error estimate is the modulus of
/// the first omitted diagonal.
pub fn kdf_01_21(a: C64, u: C64, v: C64, tol: f64, max_terms: usize) -> Result<SeriesResult> {
    if nonpositive_integer(a).is_some() {
        return Err(Error::Pole {
            func: "kdf_01_21",
            z: a,
        });
    }
    // (a)_n/(a+1)_n = a/(a+n)
    let n_safe = (u.norm() + v.norm()) as usize + 2;
    let mut sum = re(0.0);
    let mut quiet = 0;
    let mut inv_fact = 1.0; // 1/(d+1)!
    let mut d = 0usize;
    loop {
        inv_fact /= (d + 1) as f64;
        let mut diag = re(0.0);
        let mut vn = re(1.0);
        let mut upow: Vec<C64> = Vec::with_capacity(d + 1);
        let mut up = re(1.0);
        for _ in 0..=d {
            upow.push(up);
            up *= u;
        }
        for n in 0..=d {
            diag += a / (a + n as f64) * vn * upow[d - n];
            vn *= v;
        }
        let term = diag * inv_fact;
        if !(term.re.is_finite() && term.im.is_finite()) {
            return Err(Error::NonFinite("kdf_01_21"));
        }
        if d >= n_safe && within(term.norm(), sum, tol) {
            quiet += 1;
            if quiet >= 3 {
                return Ok(SeriesResult {
                    value: sum,
                    abs_error_estimate: term.norm(),
                    terms_used: d,
                    converged: true,
                });
            }
        } else {
            quiet = 0;
        }
        sum += term;
        d += 1;
        if d >= max_terms {
            return Ok(SeriesResult {
                value: sum,
                abs_error_estimate: term.norm(),
                terms_used: d,
                converged: false,
            });
        }
    }
}
