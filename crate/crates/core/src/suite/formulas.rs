//! The objective formulas. Each takes the raw point, the angle mode and (for
//! the noisy pair) the noise stream.
//!
//! Trigonometric arguments are built from `m.angle(..)` (a radian quantity
//! converted to the mode's unit) and `m.half_turn()` (pi or 180), so the same
//! expression is valid in both modes. Non-trigonometric parts always see the
//! raw coordinates.

use std::f64::consts::{E, FRAC_PI_4, PI};

use super::NoiseSource;
use crate::trig::AngleMode;

/// Iterator over consecutive coordinate pairs `(x_i, x_{i+1})`.
#[inline]
fn pairs(x: &[f64]) -> impl Iterator<Item = (f64, f64)> + '_ {
    x.windows(2).map(|w| (w[0], w[1]))
}

pub(super) fn layeb01(x: &[f64]) -> f64 {
    x.iter()
        .map(|&xi| 100f64.powi(2) * ((xi - 1.0).powi(2).exp() - 1.0).abs().sqrt())
        .sum()
}

pub(super) fn layeb02(x: &[f64]) -> f64 {
    x.iter()
        .map(|&xi| ((100.0 * (xi - 1.0).powi(2) / (xi + 1.0).exp()).exp() - 1.0).abs())
        .sum()
}

pub(super) fn layeb03(x: &[f64], m: AngleMode) -> f64 {
    pairs(x)
        .map(|(a, b)| {
            let radius = (a * a + b * b).sqrt() / PI;
            (m.sin(m.angle(a)) * (100.0 - radius).abs().exp() + m.sin(m.angle(b)) + 1.0)
                .abs()
                .powf(-0.1)
        })
        .sum()
}

pub(super) fn layeb04(x: &[f64], m: AngleMode) -> f64 {
    pairs(x)
        .map(|(a, b)| ((a * b).abs() + 0.001).ln() + m.cos(m.angle(a) + m.angle(b)))
        .sum()
}

pub(super) fn layeb05(x: &[f64], m: AngleMode) -> f64 {
    let h = m.half_turn();
    pairs(x)
        .map(|(a, b)| {
            let (ta, tb) = (m.angle(a), m.angle(b));
            let num = ((m.sin(ta - h / 2.0) + m.cos(tb - h)).abs() + 0.001).ln();
            let den = m.cos(2.0 * ta - tb + h / 2.0).abs() + 1.0;
            num / den
        })
        .sum()
}

pub(super) fn layeb06(x: &[f64], m: AngleMode) -> f64 {
    pairs(x)
        .map(|(a, b)| {
            let (ta, tb) = (m.angle(a), m.angle(b));
            (m.cos((ta * ta + tb * tb).sqrt()) * m.sin(tb) + m.cos(tb) + 1.0)
                .abs()
                .powf(0.1)
        })
        .sum()
}

pub(super) fn layeb07(x: &[f64], m: AngleMode) -> f64 {
    let h = m.half_turn();
    pairs(x)
        .map(|(a, b)| {
            let (ta, tb) = (m.angle(a), m.angle(b));
            100.0 * m.cos(ta + tb - h / 2.0).abs().powf(0.1) - m.cos(16.0 * ta * tb / h).exp() + E
        })
        .sum()
}

pub(super) fn layeb08(x: &[f64], m: AngleMode) -> f64 {
    pairs(x)
        .map(|(a, b)| ((a - b).abs() + 0.001).ln() + (100.0 * m.cos(m.angle(a) - m.angle(b))).abs())
        .sum()
}

/// Read as `sqrt(|e^A / e^B - 1|)`, the only grouping under which the
/// documented optimum holds.
pub(super) fn layeb09(x: &[f64], m: AngleMode) -> f64 {
    pairs(x)
        .map(|(a, b)| {
            let c = m.cos(m.angle(a) + m.angle(b));
            let upper = b.abs() * (m.sin(m.angle(b)).abs() - 1.0) + c;
            (upper.exp() / c.exp() - 1.0).abs().sqrt()
        })
        .sum()
}

pub(super) fn layeb10(x: &[f64], m: AngleMode) -> f64 {
    pairs(x)
        .map(|(a, b)| {
            (a * a + b * b + 0.5).ln().powi(2) + (100.0 * m.sin(m.angle(a) - m.angle(b))).abs()
        })
        .sum()
}

pub(super) fn layeb11(x: &[f64], m: AngleMode) -> f64 {
    pairs(x)
        .map(|(a, b)| {
            m.cos(m.angle(a * b) + m.half_turn())
                / ((100.0 * (a * a - b - 1.0).abs()).powi(2) + 1.0)
        })
        .sum()
}

pub(super) fn layeb12(x: &[f64], m: AngleMode) -> f64 {
    let h = m.half_turn();
    -pairs(x)
        .map(|(a, b)| {
            m.cos(h / 2.0 * a - h / 4.0 * b - h / 2.0) * m.cos(2.0 * h * a * b).exp() + 1.0
        })
        .sum::<f64>()
}

pub(super) fn layeb13(x: &[f64], m: AngleMode) -> f64 {
    pairs(x)
        .map(|(a, b)| {
            m.cos(m.angle(a) - m.angle(b)).abs()
                + 100.0 * ((a + b).abs() + 1.0).ln().abs().powf(0.1)
        })
        .sum()
}

/// Implemented without the printed leading minus, so the documented optimum
/// is a minimum.
pub(super) fn layeb14(x: &[f64]) -> f64 {
    pairs(x)
        .map(|(a, b)| 100.0 * (a * a - b - 1.0).abs().powf(0.1) + (a + b + 2.0).powi(2).ln().abs())
        .sum()
}

pub(super) fn layeb15(x: &[f64]) -> f64 {
    pairs(x)
        .map(|(a, b)| {
            10.0 * (2.0 * a.abs() - b * b - 1.0).tanh().abs().sqrt()
                + ((a * b + 1.0).exp() - 1.0).abs()
        })
        .sum()
}

/// Implemented without the printed leading minus; `tan(x_{i+1}) * x_i`.
pub(super) fn layeb16(x: &[f64], m: AngleMode) -> f64 {
    pairs(x)
        .map(|(a, b)| {
            let (ta, tb) = (m.angle(a), m.angle(b));
            let inner =
                m.tan(tb) * a + 100.0 * (m.cos(ta).powi(2) - m.sin(tb).powi(2)).abs() - FRAC_PI_4;
            inner.abs().powf(0.2)
        })
        .sum()
}

pub(super) fn layeb17(x: &[f64]) -> f64 {
    pairs(x)
        .map(|(a, b)| {
            10.0 * (a + b + 2.0).powi(2).ln().abs()
                - 1.0 / ((1000.0 * (a * a - b - 1.0)).powi(2) + 1.0)
                + 1.0
        })
        .sum()
}

pub(super) fn layeb18(x: &[f64], m: AngleMode) -> f64 {
    let h = m.half_turn();
    pairs(x)
        .map(|(a, b)| {
            let (ta, tb) = (m.angle(a), m.angle(b));
            let num = (m.cos(2.0 * ta * tb / h).abs() + 0.001).ln();
            let den = (m.sin(ta + tb) * m.cos(ta)).abs() + 1.0;
            num / den
        })
        .sum()
}

/// One uniform draw per term, raised to the 1-based term index.
pub(super) fn layeb19(x: &[f64], noise: &mut NoiseSource) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, &xi)| {
            let r = noise.next_uniform().powi(i as i32 + 1);
            100.0 * r * ((xi - 1.0).powi(2) + 1.0).ln().powi(2)
        })
        .sum()
}

pub(super) fn layeb20(x: &[f64], noise: &mut NoiseSource) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, &xi)| noise.next_uniform().powi(i as i32 + 1) * (xi - 1.0).powi(2))
        .sum()
}

pub(super) fn cross_leg_table(x: &[f64], m: AngleMode) -> f64 {
    let (a, b) = (x[0], x[1]);
    let radius = (a * a + b * b).sqrt() / PI;
    let inner = (m.sin(m.angle(a)) * m.sin(m.angle(b)) * (100.0 - radius).abs().exp()).abs();
    -1.0 / (inner + 1.0).powf(0.1)
}
