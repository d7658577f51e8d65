use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A Gamma-type function was evaluated at one of its poles.
    #[error("{func} has a pole at {z}")]
    Pole { func: &'static str, z: Complex64 },

    /// An argument lies outside the region where the requested
    /// representation is valid or implemented.
    #[error("domain error in {func}: {reason}")]
    Domain { func: &'static str, reason: String },

    /// A parameter combination hits a pole of a coefficient or Gamma
    /// prefactor that the chosen formula excludes.
    #[error("parameter pole in {func}: {reason}")]
    ParameterPole { func: &'static str, reason: String },

    /// An intermediate or final value overflowed or became NaN.
    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),

    /// The argument is in an exclusion zone around the points a regime
    /// requires the large variable to stay away from.
    #[error("{func}: argument within {radius} of excluded point {point}")]
    ExclusionZone {
        func: &'static str,
        point: Complex64,
        radius: f64,
    },

    /// No evaluation regime covers the requested point.
    #[error("no supported regime for this point ({reason}); nearest applicable: {nearest}")]
    Unsupported { reason: String, nearest: String },

    /// An improper integral does not converge for these arguments.
    #[error("divergent integral in {func}: {reason}")]
    Divergent { func: &'static str, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(func: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            func,
            reason: reason.into(),
        }
    }

    pub(crate) fn param_pole(func: &'static str, reason: impl Into<String>) -> Self {
        Error::ParameterPole {
            func,
            reason: reason.into(),
        }
    }

    /// True for errors caused by the caller's arguments rather than by a
    /// numerical failure inside the library.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::NonFinite(_))
    }
}
