//! Convergent evaluations of Φ₁ and Ψ₁ and the exact transformation,
//! connection, summation and reduction formulas. These define the ground
//! truth against which the asymptotic expansions are checked.

mod params;
mod series;
mod special;
mod transforms;

pub use params::{Phi1Params, Psi1Params};
pub(crate) use series::euler_integral_tol;
pub use series::{phi1_euler_integral, phi1_series_2f1, phi1_taylor, psi1_series};
pub use special::{phi1_at_one, phi1_kummer_value, phi1_reduction_cm, phi1_reduction_negm};
pub use transforms::{kummer_transform, phi1_near_x1_connection, phi1_to_psi1};
pub(crate) use transforms::{phi1_connection_from_gap, phi1_near_x1_connection_tol};

use crate::error::{Error, Result};
use crate::scalar::C64;

/// Rejects x on the branch cut [1, ∞) of Φ₁.
pub(crate) fn check_cut(func: &'static str, x: C64) -> Result<()> {
    if x.im == 0.0 && x.re >= 1.0 {
        return Err(Error::domain(
            func,
            format!("x = {} lies on the cut [1, ∞)", x.re),
        ));
    }
    Ok(())
}
