//! Black-box objective contract shared by every optimizer: evaluation
//! budgets, bound repair, seeding and the optimizer registry.

mod budget;
mod random_search;
mod registry;
mod repair;
mod seed;

pub use budget::{BudgetedObjective, CountingProblem, EvaluationBudget, ObjectiveHandle, Problem};
pub use random_search::RandomSearch;
pub use registry::{ParamMap, Registry};
pub use repair::{repair_blend, repair_random};
pub use seed::SeedSpec;

use crate::error::Result;

/// Uniform search box applied to every coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
}

impl Bounds {
    pub fn new(lower: f64, upper: f64) -> Self {
        Self { lower, upper }
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// `false` for NaN.
    #[inline]
    pub fn contains(&self, v: f64) -> bool {
        v >= self.lower && v <= self.upper
    }

    pub fn contains_point(&self, x: &[f64]) -> bool {
        x.iter().all(|&v| self.contains(v))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub point: Vec<f64>,
    pub fitness: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    /// 1-based index of the evaluation that produced the improvement.
    pub evaluation: usize,
    pub best_fitness: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerResult {
    pub best: Candidate,
    pub evaluations_used: usize,
    pub trace: Option<Vec<TracePoint>>,
    pub seed: u64,
}

/// A derivative-free minimizer driven only through [`Problem::evaluate`].
pub trait Optimizer: Send + Sync {
    fn name(&self) -> &str;

    /// Minimizes `problem` until its budget is exhausted.
    fn minimize(&self, problem: &mut dyn Problem, seed: u64) -> Result<OptimizerResult>;
}

/// Keeps the best candidate seen so far and its improvement trace.
#[derive(Debug, Clone, Default)]
pub struct BestTracker {
    best: Option<Candidate>,
    trace: Vec<TracePoint>,
}

impl BestTracker {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records an evaluation; returns `true` when it improved the best.
    pub fn observe(&mut self, point: &[f64], fitness: f64, evaluation: usize) -> bool {
        let improved = match &self.best {
            None => true,
            Some(b) => fitness < b.fitness || (b.fitness.is_nan() && !fitness.is_nan()),
        };
        if improved {
            self.best = Some(Candidate {
                point: point.to_vec(),
                fitness,
            });
            self.trace.push(TracePoint {
                evaluation,
                best_fitness: fitness,
            });
        }
        improved
    }

    pub fn best(&self) -> Option<&Candidate> {
        self.best.as_ref()
    }

    pub fn into_result(self, evaluations_used: usize, seed: u64) -> Result<OptimizerResult> {
        let best = self.best.ok_or(crate::Error::EmptyBudget)?;
        Ok(OptimizerResult {
            best,
            evaluations_used,
            trace: Some(self.trace),
            seed,
        })
    }
}

/// `sign` as in MATLAB: zero maps to zero.
#[inline]
pub(crate) fn sign(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}
