//! Rising factorials.

use super::{re, C64};
use crate::error::{Error, Result};

/// (z)_n = z(z+1)…(z+n−1), with (z)_0 = 1.
pub fn pochhammer(z: C64, n: u64) -> C64 {
    let mut p = re(1.0);
    for k in 0..n {
        p *= z + k as f64;
    }
    p
}

/// (z)_n for any integer n, using (z)_{−j} = 1/(z−j)_j for negative
/// indices. Errors when the negative-index form divides by zero.
pub fn pochhammer_signed(z: C64, n: i64) -> Result<C64> {
    if n >= 0 {
        return Ok(pochhammer(z, n as u64));
    }
    let j = (-n) as u64;
    let d = pochhammer(z - j as f64, j);
    if d == re(0.0) {
        return Err(Error::param_pole(
            "pochhammer_signed",
            format!("({z})_{{{n}}} is infinite"),
        ));
    }
    Ok(d.inv())
}
