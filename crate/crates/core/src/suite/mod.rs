//! The benchmark catalog: twenty scalable `layeb` functions plus the
//! two-dimensional cross-leg table used to demonstrate radian/degree
//! precision effects.

mod catalog;
mod formulas;
mod noise;

use std::fmt;
use std::str::FromStr;

pub use catalog::descriptor;
pub use noise::NoiseSource;

use crate::error::{Error, Result};
use crate::trig::AngleMode;

/// Identifier of a catalog function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionId {
    Layeb01,
    Layeb02,
    Layeb03,
    Layeb04,
    Layeb05,
    Layeb06,
    Layeb07,
    Layeb08,
    Layeb09,
    Layeb10,
    Layeb11,
    Layeb12,
    Layeb13,
    Layeb14,
    Layeb15,
    Layeb16,
    Layeb17,
    Layeb18,
    Layeb19,
    Layeb20,
    CrossLegTable,
}

impl FunctionId {
    /// Catalog order: `layeb01` … `layeb20`, then `crosslegtable`.
    pub const ALL: [FunctionId; 21] = [
        FunctionId::Layeb01,
        FunctionId::Layeb02,
        FunctionId::Layeb03,
        FunctionId::Layeb04,
        FunctionId::Layeb05,
        FunctionId::Layeb06,
        FunctionId::Layeb07,
        FunctionId::Layeb08,
        FunctionId::Layeb09,
        FunctionId::Layeb10,
        FunctionId::Layeb11,
        FunctionId::Layeb12,
        FunctionId::Layeb13,
        FunctionId::Layeb14,
        FunctionId::Layeb15,
        FunctionId::Layeb16,
        FunctionId::Layeb17,
        FunctionId::Layeb18,
        FunctionId::Layeb19,
        FunctionId::Layeb20,
        FunctionId::CrossLegTable,
    ];

    /// The twenty scalable functions, without the cross-leg table.
    pub fn scalable() -> &'static [FunctionId] {
        &Self::ALL[..20]
    }

    /// Position in [`FunctionId::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::Layeb01 => "layeb01",
            FunctionId::Layeb02 => "layeb02",
            FunctionId::Layeb03 => "layeb03",
            FunctionId::Layeb04 => "layeb04",
            FunctionId::Layeb05 => "layeb05",
            FunctionId::Layeb06 => "layeb06",
            FunctionId::Layeb07 => "layeb07",
            FunctionId::Layeb08 => "layeb08",
            FunctionId::Layeb09 => "layeb09",
            FunctionId::Layeb10 => "layeb10",
            FunctionId::Layeb11 => "layeb11",
            FunctionId::Layeb12 => "layeb12",
            FunctionId::Layeb13 => "layeb13",
            FunctionId::Layeb14 => "layeb14",
            FunctionId::Layeb15 => "layeb15",
            FunctionId::Layeb16 => "layeb16",
            FunctionId::Layeb17 => "layeb17",
            FunctionId::Layeb18 => "layeb18",
            FunctionId::Layeb19 => "layeb19",
            FunctionId::Layeb20 => "layeb20",
            FunctionId::CrossLegTable => "crosslegtable",
        }
    }

    pub fn descriptor(self) -> &'static FunctionDescriptor {
        descriptor(self)
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if let Some(id) = FunctionId::ALL.iter().find(|id| id.name() == lower) {
            return Ok(*id);
        }
        // accept `layeb1` as well as `layeb01`
        if let Some(num) = lower
            .strip_prefix("layeb")
            .and_then(|n| n.parse::<usize>().ok())
        {
            if (1..=20).contains(&num) {
                return Ok(FunctionId::ALL[num - 1]);
            }
        }
        Err(Error::UnknownFunction(s.to_string()))
    }
}

/// Returns the catalog in its stable order.
pub fn list_functions() -> Vec<FunctionId> {
    FunctionId::ALL.to_vec()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modality {
    Unimodal,
    Multimodal,
}

impl Modality {
    pub fn name(self) -> &'static str {
        match self {
            Modality::Unimodal => "unimodal",
            Modality::Multimodal => "multimodal",
        }
    }
}

/// Whether the printed optimum is reproduced by the implemented formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consistency {
    Verified,
    InconsistentAsPrinted,
    /// The printed formula needed a sign or grouping decision.
    Ambiguous,
}

impl Consistency {
    pub fn name(self) -> &'static str {
        match self {
            Consistency::Verified => "verified",
            Consistency::InconsistentAsPrinted => "inconsistent-as-printed",
            Consistency::Ambiguous => "ambiguous",
        }
    }
}

impl fmt::Display for Consistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Closed-form optimum value as a function of the dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptimumValue {
    Zero,
    /// `-n + 1`
    OneMinusN,
    /// `ln(0.001) (n - 1)`
    LnThousandth,
    /// `(ln(0.001) - 1) (n - 1)`
    LnThousandthMinusOne,
    /// `-(e + 1) (n - 1)`
    MinusEPlusOne,
    MinusOne,
}

impl OptimumValue {
    pub fn at(self, n: usize) -> f64 {
        let m = n as f64 - 1.0;
        match self {
            OptimumValue::Zero => 0.0,
            OptimumValue::OneMinusN => -m,
            OptimumValue::LnThousandth => 0.001f64.ln() * m,
            OptimumValue::LnThousandthMinusOne => (0.001f64.ln() - 1.0) * m,
            OptimumValue::MinusEPlusOne => -(std::f64::consts::E + 1.0) * m,
            OptimumValue::MinusOne => -1.0,
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            OptimumValue::Zero => "0",
            OptimumValue::OneMinusN => "-n+1",
            OptimumValue::LnThousandth => "ln(0.001)(n-1)",
            OptimumValue::LnThousandthMinusOne => "(ln(0.001)-1)(n-1)",
            OptimumValue::MinusEPlusOne => "-(e+1)(n-1)",
            OptimumValue::MinusOne => "-1",
        }
    }
}

/// One coordinate of an optimum pattern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coord {
    Value(f64),
    /// `(per_k * k + offset) * pi`
    PiMultiple {
        per_k: f64,
        offset: f64,
    },
}

impl Coord {
    pub fn at(self, k: i64) -> f64 {
        match self {
            Coord::Value(v) => v,
            Coord::PiMultiple { per_k, offset } => {
                (per_k * k as f64 + offset) * std::f64::consts::PI
            }
        }
    }

    fn depends_on_k(self) -> bool {
        matches!(self, Coord::PiMultiple { per_k, .. } if per_k != 0.0)
    }
}

/// Rule generating a canonical optimum point for any dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OptimumPattern {
    Uniform(Coord),
    /// Positions 1, 3, 5, … take the first coordinate, 2, 4, … the second.
    Alternating(Coord, Coord),
}

impl OptimumPattern {
    pub fn point(self, n: usize, k: i64) -> Vec<f64> {
        match self {
            OptimumPattern::Uniform(c) => vec![c.at(k); n],
            OptimumPattern::Alternating(a, b) => {
                let (a, b) = (a.at(k), b.at(k));
                (0..n).map(|i| if i % 2 == 0 { a } else { b }).collect()
            }
        }
    }

    /// The same pattern starting from its second element.
    pub fn swapped(self) -> Self {
        match self {
            OptimumPattern::Alternating(a, b) => OptimumPattern::Alternating(b, a),
            u => u,
        }
    }

    fn coords(self) -> [Coord; 2] {
        match self {
            OptimumPattern::Uniform(c) => [c, c],
            OptimumPattern::Alternating(a, b) => [a, b],
        }
    }

    pub fn depends_on_k(self) -> bool {
        self.coords().iter().any(|c| c.depends_on_k())
    }

    pub fn involves_pi(self) -> bool {
        self.coords()
            .iter()
            .any(|c| matches!(c, Coord::PiMultiple { .. }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimumSpec {
    pub value: OptimumValue,
    pub pattern: Option<OptimumPattern>,
    /// `k` used when the caller does not pick one.
    pub default_k: i64,
    pub consistency: Consistency,
}

impl OptimumSpec {
    /// Mode in which the optimum is checked: degrees when the optimum sits
    /// at multiples of pi (where radian evaluation cannot hit exact zeros).
    pub fn check_mode(&self) -> AngleMode {
        match self.pattern {
            Some(p) if p.involves_pi() => AngleMode::Degrees,
            _ => AngleMode::Radians,
        }
    }
}

/// Static metadata for one catalog entry.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionDescriptor {
    pub id: FunctionId,
    pub display_name: &'static str,
    pub alias: Option<&'static str>,
    pub modality: Modality,
    pub separable: bool,
    pub noisy: bool,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub min_dimension: usize,
    /// Set for functions defined at a single dimension only.
    pub fixed_dimension: Option<usize>,
    pub optimum: OptimumSpec,
    pub note: &'static str,
}

impl FunctionDescriptor {
    pub fn accepts_dimension(&self, n: usize) -> bool {
        match self.fixed_dimension {
            Some(d) => n == d,
            None => n >= self.min_dimension,
        }
    }

    pub fn check_dimension(&self, n: usize) -> Result<()> {
        if self.accepts_dimension(n) {
            Ok(())
        } else {
            let expected = match self.fixed_dimension {
                Some(d) => format!("exactly {d}"),
                None => format!("at least {}", self.min_dimension),
            };
            Err(Error::Dimension {
                function: self.id.to_string(),
                expected,
                actual: n,
            })
        }
    }
}

/// Angle mode plus the noise stream consumed by the noisy functions.
#[derive(Debug, Clone)]
pub struct EvaluationContext {
    pub mode: AngleMode,
    pub noise: NoiseSource,
}

impl EvaluationContext {
    pub fn new(mode: AngleMode, seed: u64) -> Self {
        Self {
            mode,
            noise: NoiseSource::new(seed),
        }
    }

    pub fn radians() -> Self {
        Self::new(AngleMode::Radians, 0)
    }

    pub fn degrees() -> Self {
        Self::new(AngleMode::Degrees, 0)
    }
}

/// Evaluates `id` at `x`.
///
/// Overflow yields `+inf`, which is a valid (worst) fitness. The noisy
/// functions draw one uniform per coordinate from `ctx.noise`.
pub fn evaluate(id: FunctionId, x: &[f64], ctx: &mut EvaluationContext) -> Result<f64> {
    descriptor(id).check_dimension(x.len())?;
    Ok(evaluate_unchecked(id, x, ctx))
}

/// [`evaluate`] without the dimension check, for hot loops that validated
/// the dimension once up front.
pub fn evaluate_unchecked(id: FunctionId, x: &[f64], ctx: &mut EvaluationContext) -> f64 {
    use formulas::*;
    let m = ctx.mode;
    match id {
        FunctionId::Layeb01 => layeb01(x),
        FunctionId::Layeb02 => layeb02(x),
        FunctionId::Layeb03 => layeb03(x, m),
        FunctionId::Layeb04 => layeb04(x, m),
        FunctionId::Layeb05 => layeb05(x, m),
        FunctionId::Layeb06 => layeb06(x, m),
        FunctionId::Layeb07 => layeb07(x, m),
        FunctionId::Layeb08 => layeb08(x, m),
        FunctionId::Layeb09 => layeb09(x, m),
        FunctionId::Layeb10 => layeb10(x, m),
        FunctionId::Layeb11 => layeb11(x, m),
        FunctionId::Layeb12 => layeb12(x, m),
        FunctionId::Layeb13 => layeb13(x, m),
        FunctionId::Layeb14 => layeb14(x),
        FunctionId::Layeb15 => layeb15(x),
        FunctionId::Layeb16 => layeb16(x, m),
        FunctionId::Layeb17 => layeb17(x),
        FunctionId::Layeb18 => layeb18(x, m),
        FunctionId::Layeb19 => layeb19(x, &mut ctx.noise),
        FunctionId::Layeb20 => layeb20(x, &mut ctx.noise),
        FunctionId::CrossLegTable => cross_leg_table(x, m),
    }
}

/// A stated optimum value together with its consistency flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatedOptimum {
    pub value: f64,
    pub consistency: Consistency,
}

impl StatedOptimum {
    pub fn is_verified(&self) -> bool {
        self.consistency == Consistency::Verified
    }
}

pub fn stated_optimum_value(id: FunctionId, n: usize) -> Result<StatedOptimum> {
    let d = descriptor(id);
    d.check_dimension(n)?;
    Ok(StatedOptimum {
        value: d.optimum.value.at(n),
        consistency: d.optimum.consistency,
    })
}

/// Canonical optimum point for dimension `n` and pattern parameter `k`
/// (`None` selects the descriptor's default `k`).
pub fn reference_optimum_point(id: FunctionId, n: usize, k: Option<i64>) -> Result<Vec<f64>> {
    let d = descriptor(id);
    d.check_dimension(n)?;
    let pattern = d
        .optimum
        .pattern
        .ok_or_else(|| Error::NoCanonicalPoint(id.to_string()))?;
    Ok(pattern.point(n, k.unwrap_or(d.optimum.default_k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn eval(id: FunctionId, x: &[f64], mode: AngleMode) -> f64 {
        evaluate(id, x, &mut EvaluationContext::new(mode, 7)).unwrap()
    }

    #[test]
    fn catalog_order_and_size() {
        let all = list_functions();
        assert_eq!(all.len(), 21);
        assert_eq!(all[0], FunctionId::Layeb01);
        assert_eq!(all[20], FunctionId::CrossLegTable);
        for (i, id) in all.iter().enumerate() {
            assert_eq!(id.index(), i);
            assert_eq!(id.name().parse::<FunctionId>().unwrap(), *id);
        }
        assert_eq!("Layeb7".parse::<FunctionId>().unwrap(), FunctionId::Layeb07);
        assert!("layeb21".parse::<FunctionId>().is_err());
    }

    #[test]
    fn descriptor_examples() {
        let d = descriptor(FunctionId::Layeb01);
        assert_eq!((d.lower_bound, d.upper_bound), (-100.0, 100.0));
        assert_eq!(d.modality, Modality::Unimodal);
        assert!(d.separable);

        let d = descriptor(FunctionId::Layeb12);
        assert_eq!((d.lower_bound, d.upper_bound), (-5.0, 5.0));
        assert_eq!(d.optimum.value, OptimumValue::MinusEPlusOne);

        let d = descriptor(FunctionId::Layeb19);
        assert!(d.noisy);
        assert_eq!((d.lower_bound, d.upper_bound), (-5.0, 5.0));
    }

    #[test]
    fn descriptor_invariants() {
        for id in FunctionId::ALL {
            let d = descriptor(id);
            assert_eq!(d.id, id);
            assert!(d.lower_bound < d.upper_bound);
            assert_eq!(
                d.noisy,
                matches!(id, FunctionId::Layeb19 | FunctionId::Layeb20)
            );
            assert_eq!(d.min_dimension, 2);
            assert_eq!(d.fixed_dimension.is_some(), id == FunctionId::CrossLegTable);
        }
    }

    #[test]
    fn evaluation_examples() {
        use FunctionId::*;
        let r = AngleMode::Radians;
        assert_eq!(eval(Layeb01, &[1.0, 1.0], r), 0.0);
        assert!((eval(Layeb12, &[2.0, 2.0], r) + (E + 1.0)).abs() < 1e-12);
        assert!((eval(Layeb04, &[0.0, PI], r) - (0.001f64.ln() - 1.0)).abs() < 1e-12);
        assert!((eval(Layeb04, &[0.0, PI], r) + 7.907755279).abs() < 1e-9);
        assert_eq!(eval(Layeb10, &[0.5, 0.5, 0.5], r), 0.0);
        for seed in 0..20 {
            let mut ctx = EvaluationContext::new(r, seed);
            assert_eq!(evaluate(Layeb20, &[1.0, 1.0, 1.0], &mut ctx).unwrap(), 0.0);
        }
        let v = eval(CrossLegTable, &[PI, PI], r);
        assert!((v + 0.079592386218981).abs() < 1e-12, "{v}");
        assert_eq!(eval(CrossLegTable, &[PI, PI], AngleMode::Degrees), -1.0);
    }

    #[test]
    fn dimension_errors() {
        let mut ctx = EvaluationContext::radians();
        assert!(matches!(
            evaluate(FunctionId::Layeb05, &[1.0], &mut ctx),
            Err(Error::Dimension { .. })
        ));
        assert!(evaluate(FunctionId::CrossLegTable, &[1.0, 2.0, 3.0], &mut ctx).is_err());
        assert!(evaluate(FunctionId::Layeb05, &[1.0; 7], &mut ctx).is_ok());
    }

    #[test]
    fn overflow_is_infinite_not_error() {
        let v = eval(FunctionId::Layeb01, &[-100.0, 100.0], AngleMode::Radians);
        assert_eq!(v, f64::INFINITY);
    }

    #[test]
    fn stated_values() {
        let s = stated_optimum_value(FunctionId::Layeb08, 30).unwrap();
        assert!((s.value + 200.3249).abs() < 5e-4);
        assert_eq!(s.consistency, Consistency::InconsistentAsPrinted);
        assert!(
            (stated_optimum_value(FunctionId::Layeb04, 30).unwrap().value + 229.3249).abs() < 5e-4
        );
        assert!(
            (stated_optimum_value(FunctionId::Layeb12, 30).unwrap().value + 107.8301).abs() < 5e-4
        );
        assert!(stated_optimum_value(FunctionId::Layeb12, 30)
            .unwrap()
            .is_verified());
    }

    #[test]
    fn reference_points() {
        use FunctionId::*;
        assert_eq!(
            reference_optimum_point(Layeb10, 4, None).unwrap(),
            vec![0.5; 4]
        );
        assert_eq!(
            reference_optimum_point(Layeb05, 4, Some(1)).unwrap(),
            vec![PI, 2.0 * PI, PI, 2.0 * PI]
        );
        assert_eq!(
            reference_optimum_point(Layeb13, 2, Some(0)).unwrap(),
            vec![PI / 4.0, -PI / 4.0]
        );
        assert!(reference_optimum_point(CrossLegTable, 3, None).is_err());
    }

    #[test]
    fn noise_stream_is_reproducible() {
        let x = [0.3, -2.0, 4.5, 1.7];
        for id in [FunctionId::Layeb19, FunctionId::Layeb20] {
            let mut a = EvaluationContext::new(AngleMode::Radians, 42);
            let mut b = EvaluationContext::new(AngleMode::Radians, 42);
            let first: Vec<f64> = (0..5).map(|_| evaluate(id, &x, &mut a).unwrap()).collect();
            let second: Vec<f64> = (0..5).map(|_| evaluate(id, &x, &mut b).unwrap()).collect();
            assert_eq!(first, second);
            assert_ne!(first[0], first[1]);
        }
    }

    #[test]
    fn noisy_evaluation_draws_one_uniform_per_term() {
        let mut ctx = EvaluationContext::new(AngleMode::Radians, 9);
        let mut reference = NoiseSource::new(9);
        evaluate(FunctionId::Layeb20, &[0.0; 6], &mut ctx).unwrap();
        for _ in 0..6 {
            reference.next_uniform();
        }
        assert_eq!(ctx.noise.next_uniform(), reference.next_uniform());
    }
}
