//! Angle handling for the two evaluation modes.
//!
//! In radian mode trigonometric arguments are used as-is. In degree mode every
//! decision variable entering a trigonometric term is converted with
//! `x * 180 / pi` and the `sind`/`cosd`/`tand` primitives below are used. These
//! reduce the argument exactly modulo 360 and return exact zeros at multiples
//! of 180 (and exact ones at multiples of 90), which binary64 `sin(pi)` cannot.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Unit in which trigonometric arguments are represented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AngleMode {
    #[default]
    Radians,
    Degrees,
}

impl AngleMode {
    pub const fn name(self) -> &'static str {
        match self {
            AngleMode::Radians => "radians",
            AngleMode::Degrees => "degrees",
        }
    }

    /// Half a turn in the mode's unit (`pi` or `180`).
    #[inline]
    pub fn half_turn(self) -> f64 {
        match self {
            AngleMode::Radians => PI,
            AngleMode::Degrees => 180.0,
        }
    }

    /// Converts a radian quantity into the mode's unit.
    #[inline]
    pub fn angle(self, radians: f64) -> f64 {
        match self {
            AngleMode::Radians => radians,
            AngleMode::Degrees => radians.to_degrees(),
        }
    }

    #[inline]
    pub fn sin(self, a: f64) -> f64 {
        match self {
            AngleMode::Radians => a.sin(),
            AngleMode::Degrees => sind(a),
        }
    }

    #[inline]
    pub fn cos(self, a: f64) -> f64 {
        match self {
            AngleMode::Radians => a.cos(),
            AngleMode::Degrees => cosd(a),
        }
    }

    #[inline]
    pub fn tan(self, a: f64) -> f64 {
        match self {
            AngleMode::Radians => a.tan(),
            AngleMode::Degrees => tand(a),
        }
    }
}

impl fmt::Display for AngleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AngleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "radians" | "radian" | "rad" => Ok(AngleMode::Radians),
            "degrees" | "degree" | "deg" => Ok(AngleMode::Degrees),
            other => Err(Error::Parse(format!("unknown angle mode `{other}`"))),
        }
    }
}

/// Converts every coordinate from radians to degrees.
pub fn to_degrees(x: &[f64]) -> Vec<f64> {
    x.iter().map(|v| v.to_degrees()).collect()
}

/// Splits `deg` into a quadrant index in `0..4` and a remainder in `[-45, 45]`.
///
/// `deg % 360` is exact in IEEE arithmetic and so is the subtraction of the
/// nearest multiple of 90 (Sterbenz), so no rounding enters before the final
/// radian conversion of the small remainder.
#[inline]
fn reduce(deg: f64) -> (i64, f64) {
    let r = deg % 360.0;
    let q = (r / 90.0).round();
    let rem = r - 90.0 * q;
    ((q as i64).rem_euclid(4), rem)
}

/// sin and cos of a remainder in `[-45, 45]` degrees, exact at 0, ±30 and ±45.
#[inline]
fn sin_cos_small(rem: f64) -> (f64, f64) {
    let mag = rem.abs();
    let sign = if rem < 0.0 { -1.0 } else { 1.0 };
    if mag == 0.0 {
        (rem, 1.0)
    } else if mag == 45.0 {
        (sign * FRAC_1_SQRT_2, FRAC_1_SQRT_2)
    } else if mag == 30.0 {
        (sign * 0.5, 0.75f64.sqrt())
    } else {
        (rem * (PI / 180.0)).sin_cos()
    }
}

/// Sine of an angle given in degrees.
pub fn sind(deg: f64) -> f64 {
    if !deg.is_finite() {
        return f64::NAN;
    }
    let (q, rem) = reduce(deg);
    let (s, c) = sin_cos_small(rem);
    match q {
        0 => s,
        1 => c,
        2 => -s,
        _ => -c,
    }
}

/// Cosine of an angle given in degrees.
pub fn cosd(deg: f64) -> f64 {
    if !deg.is_finite() {
        return f64::NAN;
    }
    let (q, rem) = reduce(deg);
    let (s, c) = sin_cos_small(rem);
    match q {
        0 => c,
        1 => -s,
        2 => -c,
        _ => s,
    }
}

/// Tangent of an angle given in degrees; infinite at odd multiples of 90.
pub fn tand(deg: f64) -> f64 {
    if !deg.is_finite() {
        return f64::NAN;
    }
    let (q, rem) = reduce(deg);
    let (s, c) = sin_cos_small(rem);
    if q % 2 == 0 {
        if rem.abs() == 45.0 {
            rem.signum()
        } else {
            s / c
        }
    } else if rem == 0.0 {
        // pole: sign follows the approach from below in each half turn
        if q == 1 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    } else if rem.abs() == 45.0 {
        -rem.signum()
    } else {
        -c / s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_zeros_at_half_turns() {
        for k in -8..=8 {
            let d = 180.0 * k as f64;
            assert_eq!(sind(d), 0.0, "sind({d})");
            assert_eq!(cosd(d + 90.0), 0.0, "cosd({})", d + 90.0);
            assert_eq!(cosd(d).abs(), 1.0);
            assert_eq!(tand(d), 0.0);
        }
    }

    #[test]
    fn radian_sin_pi_is_not_zero() {
        // printed with 16 significant digits
        assert!((PI.sin() - 1.224646799147353e-16).abs() < 1e-31);
        assert_eq!(AngleMode::Degrees.sin(AngleMode::Degrees.angle(PI)), 0.0);
    }

    #[test]
    fn forty_five_degrees_is_symmetric() {
        assert_eq!(tand(45.0), 1.0);
        assert_eq!(tand(-45.0), -1.0);
        assert_eq!(tand(135.0), -1.0);
        assert_eq!(tand(225.0), 1.0);
        assert_eq!(cosd(45.0).powi(2) - sind(45.0).powi(2), 0.0);
        assert_eq!(sind(30.0), 0.5);
        assert_eq!(cosd(60.0), 0.5);
    }

    #[test]
    fn to_degrees_examples() {
        assert_eq!(to_degrees(&[PI]), vec![180.0]);
        assert_eq!(to_degrees(&[0.0, PI / 2.0]), vec![0.0, 90.0]);
        assert_eq!(to_degrees(&[-PI]), vec![-180.0]);
    }

    #[test]
    fn agrees_with_radian_functions() {
        let mut d = -1000.0;
        while d < 1000.0 {
            let r = d * PI / 180.0;
            assert!((sind(d) - r.sin()).abs() < 1e-12, "sind {d}");
            assert!((cosd(d) - r.cos()).abs() < 1e-12, "cosd {d}");
            if r.cos().abs() > 1e-3 {
                assert!((tand(d) - r.tan()).abs() < 1e-9 * r.tan().abs().max(1.0));
            }
            d += 0.377;
        }
    }

    #[test]
    fn parses_mode_names() {
        assert_eq!("Degrees".parse::<AngleMode>().unwrap(), AngleMode::Degrees);
        assert_eq!("rad".parse::<AngleMode>().unwrap(), AngleMode::Radians);
        assert!("gradians".parse::<AngleMode>().is_err());
    }
}
