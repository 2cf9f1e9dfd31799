use super::{Bounds, Candidate};
use crate::error::{Error, Result};
use crate::suite::{self, descriptor, EvaluationContext, FunctionId};
use crate::trig::AngleMode;

/// Counts objective calls against a hard cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvaluationBudget {
    max_fes: usize,
    consumed: usize,
}

impl EvaluationBudget {
    pub fn new(max_fes: usize) -> Self {
        Self {
            max_fes,
            consumed: 0,
        }
    }

    /// `10^4 * dimension`, the standard budget rule.
    /// Evaluations granted per decision variable by [`Self::per_dimension`].
    pub const PER_DIMENSION: usize = 10_000;

    pub fn per_dimension(dimension: usize) -> Self {
        Self::new(Self::PER_DIMENSION * dimension)
    }

    /// Budget with `consumed` evaluations already spent.
    pub fn with_consumed(max_fes: usize, consumed: usize) -> Self {
        Self {
            max_fes,
            consumed: consumed.min(max_fes),
        }
    }

    pub fn max_fes(&self) -> usize {
        self.max_fes
    }

    pub fn consumed(&self) -> usize {
        self.consumed
    }

    pub fn remaining(&self) -> usize {
        self.max_fes - self.consumed
    }

    pub fn is_exhausted(&self) -> bool {
        self.consumed >= self.max_fes
    }

    /// Reserves one evaluation.
    pub fn consume(&mut self) -> Result<()> {
        if self.is_exhausted() {
            return Err(Error::BudgetExhausted {
                max_fes: self.max_fes,
            });
        }
        self.consumed += 1;
        Ok(())
    }
}

/// The black-box contract optimizers see.
pub trait Problem {
    fn dimension(&self) -> usize;

    fn bounds(&self) -> Bounds;

    /// Evaluates `x`, consuming one unit of budget. Fails with
    /// [`Error::BudgetExhausted`] once the budget is spent.
    fn evaluate(&mut self, x: &[f64]) -> Result<f64>;

    fn budget(&self) -> EvaluationBudget;
}

/// Immutable description of one objective instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveHandle {
    pub function: FunctionId,
    pub dimension: usize,
    pub mode: AngleMode,
    pub bounds: Bounds,
    pub noise_seed: u64,
}

impl ObjectiveHandle {
    /// Creates a handle carrying the catalog bounds.
    pub fn new(
        function: FunctionId,
        dimension: usize,
        mode: AngleMode,
        noise_seed: u64,
    ) -> Result<Self> {
        let d = descriptor(function);
        d.check_dimension(dimension)?;
        Ok(Self {
            function,
            dimension,
            mode,
            bounds: Bounds::new(d.lower_bound, d.upper_bound),
            noise_seed,
        })
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> Result<Self> {
        if bounds.lower.partial_cmp(&bounds.upper) != Some(std::cmp::Ordering::Less)
            || !bounds.width().is_finite()
        {
            return Err(Error::InvalidParameter(format!(
                "bounds ({}, {}) are not a finite non-empty interval",
                bounds.lower, bounds.upper
            )));
        }
        self.bounds = bounds;
        Ok(self)
    }

    /// A per-run objective with a fresh budget and its own noise stream.
    pub fn budgeted(&self, max_fes: usize) -> BudgetedObjective {
        BudgetedObjective {
            handle: self.clone(),
            budget: EvaluationBudget::new(max_fes),
            ctx: EvaluationContext::new(self.mode, self.noise_seed),
        }
    }
}

/// Objective handle bound to a budget and a noise stream for one run.
#[derive(Debug, Clone)]
pub struct BudgetedObjective {
    handle: ObjectiveHandle,
    budget: EvaluationBudget,
    ctx: EvaluationContext,
}

impl BudgetedObjective {
    pub fn with_budget(handle: &ObjectiveHandle, budget: EvaluationBudget) -> Self {
        Self {
            handle: handle.clone(),
            budget,
            ctx: EvaluationContext::new(handle.mode, handle.noise_seed),
        }
    }

    pub fn handle(&self) -> &ObjectiveHandle {
        &self.handle
    }

    /// Evaluates `x` and returns it as a candidate carrying the at-draw fitness.
    pub fn evaluate_candidate(&mut self, x: Vec<f64>) -> Result<Candidate> {
        let fitness = self.evaluate(&x)?;
        Ok(Candidate { point: x, fitness })
    }
}

impl Problem for BudgetedObjective {
    fn dimension(&self) -> usize {
        self.handle.dimension
    }

    fn bounds(&self) -> Bounds {
        self.handle.bounds
    }

    fn evaluate(&mut self, x: &[f64]) -> Result<f64> {
        if x.len() != self.handle.dimension {
            return Err(Error::Dimension {
                function: self.handle.function.to_string(),
                expected: format!("exactly {}", self.handle.dimension),
                actual: x.len(),
            });
        }
        self.budget.consume()?;
        Ok(suite::evaluate_unchecked(
            self.handle.function,
            x,
            &mut self.ctx,
        ))
    }

    fn budget(&self) -> EvaluationBudget {
        self.budget
    }
}

/// Wraps a problem and counts every evaluation that reaches it.
#[derive(Debug)]
pub struct CountingProblem<P> {
    inner: P,
    calls: usize,
    successful: usize,
}

impl<P: Problem> CountingProblem<P> {
    pub fn new(inner: P) -> Self {
        Self {
            inner,
            calls: 0,
            successful: 0,
        }
    }

    /// Every call, including those rejected for lack of budget.
    pub fn calls(&self) -> usize {
        self.calls
    }

    /// Calls that produced a fitness value.
    pub fn successful(&self) -> usize {
        self.successful
    }

    pub fn into_inner(self) -> P {
        self.inner
    }
}

impl<P: Problem> Problem for CountingProblem<P> {
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn bounds(&self) -> Bounds {
        self.inner.bounds()
    }

    fn evaluate(&mut self, x: &[f64]) -> Result<f64> {
        self.calls += 1;
        let v = self.inner.evaluate(x)?;
        self.successful += 1;
        Ok(v)
    }

    fn budget(&self) -> EvaluationBudget {
        self.inner.budget()
    }
}
