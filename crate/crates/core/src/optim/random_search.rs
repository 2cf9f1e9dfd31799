use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BestTracker, Optimizer, OptimizerResult, Problem};
use crate::error::Result;

/// Uniform sampling inside the box until the budget runs out. Baseline only.
#[derive(Debug, Clone, Copy, Default)]
pub struct RandomSearch;

impl Optimizer for RandomSearch {
    fn name(&self) -> &str {
        "random_search"
    }

    fn minimize(&self, problem: &mut dyn Problem, seed: u64) -> Result<OptimizerResult> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bounds = problem.bounds();
        let mut tracker = BestTracker::new();
        let mut x = vec![0.0; problem.dimension()];
        let start = problem.budget().consumed();

        while !problem.budget().is_exhausted() {
            for v in x.iter_mut() {
                *v = bounds.lower + rng.gen::<f64>() * bounds.width();
            }
            let f = problem.evaluate(&x)?;
            tracker.observe(&x, f, problem.budget().consumed() - start);
        }
        tracker.into_result(problem.budget().consumed() - start, seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optim::ObjectiveHandle;
    use crate::{AngleMode, FunctionId};

    #[test]
    fn single_evaluation_budget() {
        let h = ObjectiveHandle::new(FunctionId::Layeb05, 4, AngleMode::Radians, 0).unwrap();
        let r = RandomSearch.minimize(&mut h.budgeted(1), 3).unwrap();
        assert_eq!(r.evaluations_used, 1);
    }

    #[test]
    fn deterministic_per_seed() {
        let h = ObjectiveHandle::new(FunctionId::Layeb19, 5, AngleMode::Radians, 11).unwrap();
        let a = RandomSearch.minimize(&mut h.budgeted(500), 9).unwrap();
        let b = RandomSearch.minimize(&mut h.budgeted(500), 9).unwrap();
        assert_eq!(a, b);
        let c = RandomSearch.minimize(&mut h.budgeted(500), 10).unwrap();
        assert_ne!(a.best.point, c.best.point);
    }

    #[test]
    fn zero_budget_is_an_error() {
        let h = ObjectiveHandle::new(FunctionId::Layeb05, 4, AngleMode::Radians, 0).unwrap();
        assert!(RandomSearch.minimize(&mut h.budgeted(0), 3).is_err());
    }
}
