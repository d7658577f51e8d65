//! Complex flag values and 17-significant-digit number formatting.

use humbert::C64;

/// Parses `RE` or `RE,IM`.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let mut parts = s.split(',');
    let re = parse_real(parts.next().unwrap_or(""))?;
    let im = match parts.next() {
        Some(p) => parse_real(p)?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(format!("expected RE or RE,IM, got {s:?}"));
    }
    Ok(C64::new(re, im))
}

pub fn parse_real(s: &str) -> Result<f64, String> {
    let t = s.trim();
    t.parse::<f64>()
        .map_err(|_| format!("{t:?} is not a number"))
}

/// Scientific notation with 17 significant digits, which reads back to the
/// same double. Non-finite values print as `nan`, `inf` and `-inf`.
pub fn fmt17(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{v:.16e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fmt_complex(z: C64) -> String {
        format!("{},{}", fmt17(z.re), fmt17(z.im))
    }

    #[test]
    fn real_and_complex_forms() {
        assert_eq!(parse_complex("0.5").unwrap(), C64::new(0.5, 0.0));
        assert_eq!(parse_complex("-40").unwrap(), C64::new(-40.0, 0.0));
        assert_eq!(parse_complex("1e-3, -2").unwrap(), C64::new(1e-3, -2.0));
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn formatting_round_trips() {
        for z in [
            C64::new(0.1, -0.2),
            C64::new(1.0 / 3.0, 2f64.sqrt()),
            C64::new(-1.2345678901234567e-300, 9.87654321e250),
            C64::new(f64::MIN_POSITIVE, -0.0),
        ] {
            let back = parse_complex(&fmt_complex(z)).unwrap();
            assert_eq!(back.re.to_bits(), z.re.to_bits());
            assert_eq!(back.im.to_bits(), z.im.to_bits());
        }
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(fmt17(0.5), "5.0000000000000000e-1");
        let digits = fmt17(1.0 / 3.0).split('e').next().unwrap().replace('.', "");
        assert_eq!(digits.len(), 17);
    }
}
