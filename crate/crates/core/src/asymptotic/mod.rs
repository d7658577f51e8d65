//! Asymptotic expansions of Φ₁ for large arguments.
//!
//! Every regime is built as an [`AsymptoticExpansion`]: a list of term
//! groups, each of the form `prefactor · Σ_k coefficient_k · step^k`. The
//! `expand_*` functions return plain partial sums through a requested
//! order; [`AsymptoticExpansion::optimally_truncated`] stops at the
//! smallest term instead.
//!
//! Orders are inclusive: order `N` sums the indices `k = 0..=N`.

mod coeffs;
mod eta;
mod joint;
mod large;
mod log;

pub use coeffs::{
    coeff_a1_lambda, coeff_a2_lambda, coeff_a_k, coeff_b1, coeff_b2, coeff_c1, coeff_c2, kdf_01_21,
    kdf_11_1, kdf_11_1_scaled, lagrange_g,
};
pub use eta::{
    eta_large_x_expansion, eta_large_y_expansion, expand_eta_large_x, expand_eta_large_y,
    expand_eta_large_y_opts, EtaDirection,
};
pub use joint::{
    default_w, expand_joint_beta, expand_joint_beta_opts, expand_joint_imaginary,
    expand_joint_lambda, expand_joint_lambda_opts, joint_beta_expansion, joint_imaginary_expansion,
    joint_lambda_expansion, joint_lambda_two_family_expansion, JointBetaForm,
};
pub use large::{
    expand_imaginary_y, expand_large_x, expand_large_y_left, expand_large_y_left_opts,
    expand_large_y_right, expand_large_y_right_opts, expand_large_y_two_family,
    expand_shifted_imaginary_y, imaginary_y_expansion, large_x_expansion, large_y_left_expansion,
    large_y_right_expansion, large_y_two_family_expansion, shifted_imaginary_y_expansion,
};
pub use log::phi1_x_to_1_log;

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{is_finite, re, C64};

/// Default radius of the exclusion disks around points a regime must
/// stay away from.
pub const EXCLUSION_RADIUS: f64 = 0.1;
/// Default sector margin δ (radians).
pub const DEFAULT_DELTA: f64 = 0.05;

/// Tunable sector and exclusion settings shared by the regimes whose
/// theorems only say "bounded away" or "in a sector".
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticOptions {
    /// Margin δ in sector conditions such as |arg(−y)| ≤ π/2 − δ.
    pub delta: f64,
    /// Radius of the disks around excluded points.
    pub exclusion_radius: f64,
    /// Compact annulus `[lo, hi]` for the fixed ratio (β, λ or η).
    pub annulus: (f64, f64),
}

impl Default for AsymptoticOptions {
    fn default() -> Self {
        AsymptoticOptions {
            delta: DEFAULT_DELTA,
            exclusion_radius: EXCLUSION_RADIUS,
            annulus: (1e-3, 1e3),
        }
    }
}

impl AsymptoticOptions {
    pub(crate) fn check_annulus(&self, func: &'static str, name: &str, v: C64) -> Result<()> {
        let m = v.norm();
        if !(m >= self.annulus.0 && m <= self.annulus.1) {
            return Err(Error::domain(
                func,
                format!(
                    "|{name}| = {m} outside the annulus [{}, {}]",
                    self.annulus.0, self.annulus.1
                ),
            ));
        }
        Ok(())
    }
}

/// Which variable tends to infinity (or zero, for ρ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LargeVariable {
    X,
    Y,
    Joint,
    Eta,
    Rho,
}

impl fmt::Display for LargeVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LargeVariable::X => "x",
            LargeVariable::Y => "y",
            LargeVariable::Joint => "joint",
            LargeVariable::Eta => "eta",
            LargeVariable::Rho => "rho",
        };
        f.write_str(s)
    }
}

/// One family `prefactor · Σ_k coefficients[k] · step^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TermGroup {
    pub prefactor: C64,
    /// Human-readable form of the algebraic/exponential factor.
    pub scale: String,
    /// Ratio between consecutive powers, e.g. 1/x.
    pub step: C64,
    pub coefficients: Vec<C64>,
}

impl TermGroup {
    pub(crate) fn term(&self, k: usize) -> Option<C64> {
        let ck = *self.coefficients.get(k)?;
        if ck == re(0.0) || self.prefactor == re(0.0) {
            return Some(re(0.0));
        }
        Some(self.prefactor * ck * self.step.powu(k as u32))
    }
}

/// A truncatable asymptotic expansion made of one or more term groups.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticExpansion {
    pub terms: Vec<TermGroup>,
    /// Validity sector of the underlying theorem.
    pub sector: String,
    pub large_variable: LargeVariable,
}

/// Result of summing an expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedValue {
    pub value: C64,
    /// Combined modulus of the last included index over all groups.
    pub last_term_modulus: f64,
    /// Number of indices summed (order + 1).
    pub terms_used: usize,
}

impl AsymptoticExpansion {
    /// Validates that every group is non-empty and finite.
    pub fn new(
        terms: Vec<TermGroup>,
        sector: impl Into<String>,
        large_variable: LargeVariable,
    ) -> Result<Self> {
        for g in &terms {
            if g.coefficients.is_empty() {
                return Err(Error::domain("AsymptoticExpansion", "empty term group"));
            }
            if !is_finite(g.prefactor) || !is_finite(g.step) {
                return Err(Error::NonFinite("AsymptoticExpansion"));
            }
            if g.coefficients.iter().any(|c| !is_finite(*c)) {
                return Err(Error::NonFinite("AsymptoticExpansion"));
            }
        }
        Ok(AsymptoticExpansion {
            terms,
            sector: sector.into(),
            large_variable,
        })
    }

    /// Largest index available in any group.
    pub fn max_order(&self) -> usize {
        self.terms
            .iter()
            .map(|g| g.coefficients.len() - 1)
            .max()
            .unwrap_or(0)
    }

    /// Combined term contribution at index k.
    pub fn term(&self, k: usize) -> C64 {
        self.terms.iter().filter_map(|g| g.term(k)).sum()
    }

    /// Σ over groups of |term_k|, for k = 0..=max_order.
    pub fn term_moduli(&self) -> Vec<f64> {
        (0..=self.max_order())
            .map(|k| {
                self.terms
                    .iter()
                    .filter_map(|g| g.term(k))
                    .map(|t| t.norm())
                    .sum()
            })
            .collect()
    }

    /// Partial sum through index `order` (capped at the available order).
    pub fn partial_sum(&self, order: usize) -> TruncatedValue {
        let order = order.min(self.max_order());
        let mut value = re(0.0);
        let mut last = 0.0;
        for k in 0..=order {
            for g in &self.terms {
                if let Some(t) = g.term(k) {
                    value += t;
                    if k == order {
                        last += t.norm();
                    }
                }
            }
        }
        TruncatedValue {
            value,
            last_term_modulus: last,
            terms_used: order + 1,
        }
    }

    /// Partial sum stopped at the smallest combined term.
    pub fn optimally_truncated(&self) -> TruncatedValue {
        let moduli = self.term_moduli();
        let idx = if moduli.len() < 2 {
            0
        } else {
            optimal_truncation(&moduli)
        };
        self.partial_sum(idx)
    }
}

/// Index of the smallest term before the first strict increase of the
/// modulus sequence. A monotonically non-increasing stream yields its last
/// index.
pub fn optimal_truncation(moduli: &[f64]) -> usize {
    if moduli.is_empty() {
        return 0;
    }
    let mut best = 0;
    for k in 1..moduli.len() {
        if moduli[k] > moduli[k - 1] {
            break;
        }
        if moduli[k] <= moduli[best] {
            best = k;
        }
    }
    best
}

/// |arg z| with arg(0) treated as undefined.
pub(crate) fn arg_abs(z: C64) -> f64 {
    z.arg().abs()
}
