use crate::error::{Error, Result};
use crate::scalar::{nonpositive_integer, C64};

/// Parameters (a, b; c) of Φ₁[a, b; c; x, y].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phi1Params {
    pub a: C64,
    pub b: C64,
    pub c: C64,
}

impl Phi1Params {
    /// Validates c ∉ ℤ≤0.
    pub fn new(a: C64, b: C64, c: C64) -> Result<Self> {
        if nonpositive_integer(c).is_some() {
            return Err(Error::param_pole(
                "Phi1Params",
                format!("c = {c} is a non-positive integer"),
            ));
        }
        Ok(Phi1Params { a, b, c })
    }

    /// Convenience constructor for real parameters.
    pub fn real(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(C64::new(a, 0.0), C64::new(b, 0.0), C64::new(c, 0.0))
    }
}

/// Parameters (a, b; c, c′) of Ψ₁[a, b; c, c′; x, y].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Psi1Params {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub c_prime: C64,
}

impl Psi1Params {
    /// Validates c, c′ ∉ ℤ≤0.
    pub fn new(a: C64, b: C64, c: C64, c_prime: C64) -> Result<Self> {
        for (name, v) in [("c", c), ("c'", c_prime)] {
            if nonpositive_integer(v).is_some() {
                return Err(Error::param_pole(
                    "Psi1Params",
                    format!("{name} = {v} is a non-positive integer"),
                ));
            }
        }
        Ok(Psi1Params { a, b, c, c_prime })
    }
}
