//! Numerical evaluation of Humbert's confluent hypergeometric function
//!
//! ```text
//! Φ₁[a,b;c;x,y] = Σ_{m,n≥0} (a)_{m+n} (b)_m / (c)_{m+n} · x^m y^n / (m! n!)
//! ```
//!
//! across the complex domain, together with its companion Ψ₁, Saran's F_M
//! and two applications (the Glauber–Ising two-time correlation and
//! Prabhakar-type fractional integral operators).

pub mod applications;
pub mod asymptotic;
pub mod error;
pub mod evaluator;
pub mod reference;
pub mod saran;
pub mod scalar;
pub mod vectors;

pub use error::{Error, Result};
pub use reference::{Phi1Params, Psi1Params};
pub use scalar::{SeriesResult, C64};
