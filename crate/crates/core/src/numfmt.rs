//! Text form of reals in CSV output: 17 significant digits, round-trip exact.

use crate::error::{Error, Result};

/// `{:.16e}` for finite values; `inf`, `-inf` and `nan` otherwise.
pub fn fmt_real(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else if v == f64::INFINITY {
        "inf".to_string()
    } else if v == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        format!("{v:.16e}")
    }
}

pub fn parse_real(s: &str) -> Result<f64> {
    let t = s.trim();
    match t.to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" => Ok(f64::INFINITY),
        "-inf" | "-infinity" => Ok(f64::NEG_INFINITY),
        "nan" => Ok(f64::NAN),
        _ => t
            .parse()
            .map_err(|_| Error::Parse(format!("`{s}` is not a real number"))),
    }
}

/// Semicolon-joined coordinates.
pub fn fmt_point(x: &[f64]) -> String {
    x.iter().map(|v| fmt_real(*v)).collect::<Vec<_>>().join(";")
}

pub fn parse_point(s: &str) -> Result<Vec<f64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(parse_real).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn special_tokens() {
        assert_eq!(fmt_real(f64::INFINITY), "inf");
        assert_eq!(parse_real("inf").unwrap(), f64::INFINITY);
        assert_eq!(fmt_real(-0.5), "-5.0000000000000000e-1");
        assert!(parse_real("abc").is_err());
        assert_eq!(parse_point("").unwrap(), Vec::<f64>::new());
    }

    proptest! {
        #[test]
        fn round_trip(v in any::<f64>().prop_filter("finite", |v| v.is_finite())) {
            let back = parse_real(&fmt_real(v)).unwrap();
            prop_assert_eq!(back.to_bits(), v.to_bits());
        }
    }
}
