//! Modified tangent search algorithm.
//!
//! A population of agents is moved by three kinds of tangent flights, each
//! followed by bound repair, one evaluation and greedy replacement:
//!
//! * exploration: a few coordinates per agent take a step scaled by
//!   `tan(theta)`, sized by the distance to the best agent (or shrinking as
//!   `1 / ln(1 + FES)` for the best agent itself), with occasional
//!   unbounded `tan(u * pi)` jumps;
//! * intensification: a best-directed move, mostly in the second half of the
//!   budget, after which a random subset of coordinates is restored;
//! * escape: a rare full-range jump of the whole agent.
//!
//! Termination is exactly at budget exhaustion; initialization evaluations
//! count against the budget.

use std::f64::consts::PI;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::optim::{
    repair_blend, repair_random, sign, BestTracker, Bounds, Candidate, Optimizer, OptimizerResult,
    ParamMap, Problem,
};

const BEST_AGENT_STEP: f64 = 0.1;
const SMALL_FLIGHT_STEP: f64 = 0.5;
const RHO_SCALE: f64 = 15.0;
const LOG_DIMENSION_FACTOR: f64 = 10.0;
/// Dimension up to which `restore_fraction_small` applies.
const SMALL_DIMENSION: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct MtsaParams {
    pub population_size: usize,
    /// Per-coordinate exploration probability; `None` means `1.5 / dimension`.
    pub dim_flip_rate: Option<f64>,
    pub large_flight_prob: f64,
    pub intensification_late_prob: f64,
    pub intensification_early_prob: f64,
    /// Fraction of the budget after which the late intensification
    /// probability applies.
    pub intensification_gate: f64,
    pub intensification_move_prob: f64,
    pub escape_prob: f64,
    /// Probability of random (rather than blended) repair after an escape.
    pub escape_repair_mix: f64,
    pub restore_fraction_small: f64,
    pub restore_fraction_large: f64,
    pub theta_scale: f64,
}

impl Default for MtsaParams {
    fn default() -> Self {
        Self {
            population_size: 40,
            dim_flip_rate: None,
            large_flight_prob: 0.3,
            intensification_late_prob: 0.7,
            intensification_early_prob: 0.05,
            intensification_gate: 0.5,
            intensification_move_prob: 0.7,
            escape_prob: 0.01,
            escape_repair_mix: 0.8,
            restore_fraction_small: 0.4,
            restore_fraction_large: 0.2,
            theta_scale: PI / 2.5,
        }
    }
}

impl MtsaParams {
    pub fn flip_rate(&self, dimension: usize) -> f64 {
        self.dim_flip_rate.unwrap_or(1.5 / dimension as f64)
    }

    /// Number of coordinates restored after an intensification move.
    pub fn restore_count(&self, dimension: usize) -> usize {
        let fraction = if dimension <= SMALL_DIMENSION {
            self.restore_fraction_small
        } else {
            self.restore_fraction_large
        };
        ((fraction * dimension as f64).round() as usize).min(dimension)
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::InvalidParameter(
                "population_size must be at least 2".into(),
            ));
        }
        let probabilities = [
            ("large_flight_prob", self.large_flight_prob),
            ("intensification_late_prob", self.intensification_late_prob),
            (
                "intensification_early_prob",
                self.intensification_early_prob,
            ),
            ("intensification_gate", self.intensification_gate),
            ("intensification_move_prob", self.intensification_move_prob),
            ("escape_prob", self.escape_prob),
            ("escape_repair_mix", self.escape_repair_mix),
            ("restore_fraction_small", self.restore_fraction_small),
            ("restore_fraction_large", self.restore_fraction_large),
        ];
        let flip = self.dim_flip_rate.map(|r| ("dim_flip_rate", r));
        for (name, p) in probabilities.into_iter().chain(flip) {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!(
                    "{name} = {p} is not in [0, 1]"
                )));
            }
        }
        if !(self.theta_scale > 0.0 && self.theta_scale < PI / 2.0) {
            return Err(Error::InvalidParameter(format!(
                "theta_scale = {} must lie in (0, pi/2)",
                self.theta_scale
            )));
        }
        Ok(())
    }

    /// Defaults overridden by `name -> value` entries.
    pub fn from_map(map: &ParamMap) -> Result<Self> {
        let mut p = Self::default();
        for (key, raw) in map {
            let real = || {
                raw.trim().parse::<f64>().map_err(|_| {
                    Error::InvalidParameter(format!("{key} = `{raw}` is not a number"))
                })
            };
            match key.as_str() {
                "population_size" => {
                    p.population_size = raw.trim().parse().map_err(|_| {
                        Error::InvalidParameter(format!(
                            "population_size = `{raw}` is not an integer"
                        ))
                    })?
                }
                "dim_flip_rate" => p.dim_flip_rate = Some(real()?),
                "large_flight_prob" => p.large_flight_prob = real()?,
                "intensification_late_prob" => p.intensification_late_prob = real()?,
                "intensification_early_prob" => p.intensification_early_prob = real()?,
                "intensification_gate" => p.intensification_gate = real()?,
                "intensification_move_prob" => p.intensification_move_prob = real()?,
                "escape_prob" => p.escape_prob = real()?,
                "escape_repair_mix" => p.escape_repair_mix = real()?,
                "restore_fraction_small" => p.restore_fraction_small = real()?,
                "restore_fraction_large" => p.restore_fraction_large = real()?,
                "theta_scale" => p.theta_scale = real()?,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "mtsa has no parameter `{other}`"
                    )))
                }
            }
        }
        p.validate()?;
        Ok(p)
    }
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(u, v)| (u - v).powi(2))
        .sum::<f64>()
        .sqrt()
}

fn norm(a: &[f64]) -> f64 {
    a.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Exploration move applied in place to `x`.
///
/// Every coordinate is eligible with probability `flip_rate`; one index drawn
/// up front is always eligible. `fes` is the number of evaluations consumed.
pub fn exploration_step<R: Rng + ?Sized>(
    x: &mut [f64],
    best: &[f64],
    fes: usize,
    params: &MtsaParams,
    rng: &mut R,
) {
    let dim = x.len();
    let rate = params.flip_rate(dim);
    let forced = rng.gen_range(0..dim);
    let log_fes = (1.0 + fes.max(1) as f64).ln();

    for jk in 0..dim {
        let theta = rng.gen::<f64>() * params.theta_scale;
        if !(rng.gen::<f64>() <= rate || jk == forced) {
            continue;
        }
        if x == best {
            let step = BEST_AGENT_STEP * sign(rng.gen::<f64>() - 0.5) / log_fes;
            x[jk] += step * theta.tan();
        } else {
            let step = SMALL_FLIGHT_STEP * sign(rng.gen::<f64>() - 0.5) * distance(best, x);
            if rng.gen::<f64>() <= params.large_flight_prob {
                x[jk] += (rng.gen::<f64>() * PI).tan();
            } else {
                x[jk] += step * theta.tan();
            }
        }
    }
}

/// Best-directed move followed by restoring `restore_count` randomly chosen
/// coordinates of the pre-move point.
pub fn intensification_step<R: Rng + ?Sized>(
    x: &mut [f64],
    best: &[f64],
    fes: usize,
    params: &MtsaParams,
    rng: &mut R,
) {
    let dim = x.len();
    let saved = x.to_vec();
    let fes = fes.max(1) as f64;
    let tan_theta = (rng.gen::<f64>() * params.theta_scale).tan();
    let step = sign(rng.gen::<f64>() - 0.5)
        * norm(best)
        * (1.0 + LOG_DIMENSION_FACTOR * dim as f64 / fes).ln();

    if x == best {
        let u = rng.gen::<f64>();
        for (v, &b) in x.iter_mut().zip(best) {
            *v = b + step * tan_theta * (u * b - *v);
        }
    } else if rng.gen::<f64>() <= params.intensification_move_prob {
        for (v, &b) in x.iter_mut().zip(best) {
            *v = b + step * tan_theta * (b - *v);
        }
    } else {
        let s = -1.0 + 2.0 * rng.gen::<f64>();
        let rho = RHO_SCALE * s / (1.0 + fes).ln();
        let u = rng.gen::<f64>();
        for (v, &b) in x.iter_mut().zip(best) {
            *v += rho * (b - u * (b - *v));
        }
    }

    for i in sample(rng, dim, params.restore_count(dim)) {
        x[i] = saved[i];
    }
}

/// Full-range jump `x + tan(u * pi) * (ub - lb)` on every coordinate, then
/// random repair (probability `escape_repair_mix`) or blended repair against
/// the pre-jump point.
pub fn escape_step<R: Rng + ?Sized>(
    x: &mut [f64],
    bounds: Bounds,
    params: &MtsaParams,
    rng: &mut R,
) {
    let saved = x.to_vec();
    let shift = (rng.gen::<f64>() * PI).tan() * bounds.width();
    for v in x.iter_mut() {
        *v += shift;
    }
    if rng.gen::<f64>() <= params.escape_repair_mix {
        repair_random(x, bounds, rng);
    } else {
        repair_blend(x, &saved, bounds, rng);
    }
}

#[derive(Debug, Clone, Default)]
pub struct Mtsa {
    params: MtsaParams,
}

impl Mtsa {
    pub fn new(params: MtsaParams) -> Result<Self> {
        params.validate()?;
        Ok(Self { params })
    }

    pub fn params(&self) -> &MtsaParams {
        &self.params
    }
}

struct Run<'a> {
    problem: &'a mut dyn Problem,
    tracker: BestTracker,
    start: usize,
}

impl Run<'_> {
    fn fes(&self) -> usize {
        self.problem.budget().consumed()
    }

    /// Evaluates `x` and applies greedy replacement to `agent`. Returns
    /// `false` without evaluating once the budget is exhausted.
    fn try_replace(&mut self, agent: &mut Candidate, x: Vec<f64>) -> Result<bool> {
        if self.problem.budget().is_exhausted() {
            return Ok(false);
        }
        let fitness = self.problem.evaluate(&x)?;
        let index = self.fes() - self.start;
        self.tracker.observe(&x, fitness, index);
        if fitness < agent.fitness {
            *agent = Candidate { point: x, fitness };
        }
        Ok(true)
    }
}

impl Optimizer for Mtsa {
    fn name(&self) -> &str {
        "mtsa"
    }

    fn minimize(&self, problem: &mut dyn Problem, seed: u64) -> Result<OptimizerResult> {
        let p = &self.params;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = problem.dimension();
        let bounds = problem.bounds();
        let max_fes = problem.budget().max_fes();
        let start = problem.budget().consumed();
        let mut run = Run {
            problem,
            tracker: BestTracker::new(),
            start,
        };

        let mut population = Vec::with_capacity(p.population_size);
        for _ in 0..p.population_size {
            if run.problem.budget().is_exhausted() {
                break;
            }
            let x: Vec<f64> = (0..dim)
                .map(|_| bounds.lower + rng.gen::<f64>() * bounds.width())
                .collect();
            let fitness = run.problem.evaluate(&x)?;
            let index = run.fes() - start;
            run.tracker.observe(&x, fitness, index);
            population.push(Candidate { point: x, fitness });
        }

        'search: loop {
            for agent in population.iter_mut() {
                let best = match run.tracker.best() {
                    Some(b) => b.point.clone(),
                    None => break 'search,
                };

                let mut x = agent.point.clone();
                exploration_step(&mut x, &best, run.fes(), p, &mut rng);
                repair_random(&mut x, bounds, &mut rng);
                if !run.try_replace(agent, x)? {
                    break 'search;
                }

                let fes = run.fes();
                let late = fes as f64 >= p.intensification_gate * max_fes as f64;
                if (rng.gen::<f64>() < p.intensification_late_prob && late)
                    || rng.gen::<f64>() < p.intensification_early_prob
                {
                    let mut x = agent.point.clone();
                    intensification_step(&mut x, &best, fes, p, &mut rng);
                    repair_random(&mut x, bounds, &mut rng);
                    if !run.try_replace(agent, x)? {
                        break 'search;
                    }
                }

                if rng.gen::<f64>() < p.escape_prob {
                    let mut x = agent.point.clone();
                    escape_step(&mut x, bounds, p, &mut rng);
                    if !run.try_replace(agent, x)? {
                        break 'search;
                    }
                }
            }
            if run.problem.budget().is_exhausted() {
                break;
            }
        }

        let used = run.fes() - start;
        run.tracker.into_result(used, seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optim::{CountingProblem, ObjectiveHandle};
    use crate::{AngleMode, FunctionId};

    fn handle(id: FunctionId, dim: usize) -> ObjectiveHandle {
        ObjectiveHandle::new(id, dim, AngleMode::Radians, 5).unwrap()
    }

    #[test]
    fn defaults_match_reference_constants() {
        let p = MtsaParams::default();
        assert_eq!(p.population_size, 40);
        assert_eq!(p.flip_rate(10), 0.15);
        assert_eq!(p.theta_scale, PI / 2.5);
        assert_eq!(p.escape_prob, 0.01);
        p.validate().unwrap();
    }

    #[test]
    fn restore_counts() {
        let p = MtsaParams::default();
        assert_eq!(p.restore_count(30), 6);
        assert_eq!(p.restore_count(4), 2);
        assert_eq!(p.restore_count(10), 2);
        assert_eq!(p.restore_count(2), 1);
        assert_eq!(p.restore_count(3), 1);
    }

    #[test]
    fn invalid_params_rejected() {
        let p = MtsaParams {
            escape_prob: 1.5,
            ..Default::default()
        };
        assert!(p.validate().is_err());
        let p = MtsaParams {
            population_size: 1,
            ..Default::default()
        };
        assert!(Mtsa::new(p).is_err());
        let mut map = ParamMap::new();
        map.insert("population_size".into(), "abc".into());
        assert!(MtsaParams::from_map(&map).is_err());
        map.insert("population_size".into(), "12".into());
        assert_eq!(MtsaParams::from_map(&map).unwrap().population_size, 12);
    }

    #[test]
    fn budget_of_one_population_is_initialization_only() {
        let h = handle(FunctionId::Layeb10, 5);
        let r = Mtsa::default().minimize(&mut h.budgeted(40), 1).unwrap();
        assert_eq!(r.evaluations_used, 40);

        // replay the initial population with the same stream
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut obj = h.budgeted(40);
        let mut best = f64::INFINITY;
        for _ in 0..40 {
            let x: Vec<f64> = (0..5).map(|_| -100.0 + rng.gen::<f64>() * 200.0).collect();
            best = best.min(obj.evaluate(&x).unwrap());
        }
        assert_eq!(r.best.fitness, best);
    }

    #[test]
    fn smaller_budget_than_population() {
        let h = handle(FunctionId::Layeb03, 3);
        let r = Mtsa::default().minimize(&mut h.budgeted(7), 1).unwrap();
        assert_eq!(r.evaluations_used, 7);
    }

    #[test]
    fn exploration_touches_at_least_one_coordinate() {
        let p = MtsaParams {
            dim_flip_rate: Some(0.0),
            ..Default::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let best = vec![1.0; 8];
        for _ in 0..200 {
            let mut x = vec![0.0; 8];
            exploration_step(&mut x, &best, 100, &p, &mut rng);
            let changed = x.iter().filter(|v| **v != 0.0).count();
            assert_eq!(changed, 1);
        }
    }

    #[test]
    fn best_agent_step_shrinks_with_fes() {
        let p = MtsaParams {
            dim_flip_rate: Some(0.0),
            ..Default::default()
        };
        let mean_step = |fes: usize| {
            let mut rng = ChaCha8Rng::seed_from_u64(9);
            let mut total = 0.0;
            for _ in 0..2000 {
                let best = vec![0.0; 3];
                let mut x = best.clone();
                exploration_step(&mut x, &best, fes, &p, &mut rng);
                total += x.iter().map(|v| v.abs()).sum::<f64>();
            }
            total / 2000.0
        };
        let early = mean_step(10);
        let late = mean_step(1_000_000);
        let expected_ratio = (1.0 + 10.0f64).ln() / (1.0 + 1e6f64).ln();
        assert!(
            (late / early - expected_ratio).abs() < 1e-12,
            "{early} {late}"
        );
    }

    #[test]
    fn intensification_restores_saved_coordinates() {
        let p = MtsaParams {
            intensification_move_prob: 1.0,
            ..Default::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let best = vec![2.0; 30];
        for _ in 0..100 {
            let orig: Vec<f64> = (0..30).map(|i| i as f64 * 0.1).collect();
            let mut x = orig.clone();
            intensification_step(&mut x, &best, 5000, &p, &mut rng);
            let kept = x.iter().zip(&orig).filter(|(a, b)| a == b).count();
            assert!(kept >= 6, "{kept}");
        }
    }

    #[test]
    fn escape_result_in_bounds() {
        let p = MtsaParams::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b = Bounds::new(-10.0, 10.0);
        for _ in 0..2000 {
            let mut x = vec![9.9, -9.9, 0.0, 3.0];
            escape_step(&mut x, b, &p, &mut rng);
            assert!(b.contains_point(&x));
        }
    }

    #[test]
    fn monotone_best_and_greedy_replacement() {
        let h = handle(FunctionId::Layeb18, 6);
        let r = Mtsa::default().minimize(&mut h.budgeted(6000), 2).unwrap();
        let trace = r.trace.unwrap();
        assert!(trace
            .windows(2)
            .all(|w| w[1].best_fitness <= w[0].best_fitness));
        assert!(trace.windows(2).all(|w| w[1].evaluation > w[0].evaluation));
        assert_eq!(trace.last().unwrap().best_fitness, r.best.fitness);
        assert!(h.bounds.contains_point(&r.best.point));
    }

    #[test]
    fn budget_never_exceeded() {
        for (id, budget) in [
            (FunctionId::Layeb01, 1000),
            (FunctionId::Layeb16, 4321),
            (FunctionId::Layeb20, 77),
        ] {
            let h = handle(id, 7);
            let mut counted = CountingProblem::new(h.budgeted(budget));
            let r = Mtsa::default().minimize(&mut counted, 8).unwrap();
            assert_eq!(counted.successful(), budget);
            assert_eq!(counted.calls(), budget);
            assert_eq!(r.evaluations_used, budget);
        }
    }

    #[test]
    fn same_seed_same_result() {
        let h = handle(FunctionId::Layeb19, 4);
        let a = Mtsa::default().minimize(&mut h.budgeted(3000), 77).unwrap();
        let b = Mtsa::default().minimize(&mut h.budgeted(3000), 77).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn escape_trigger_rate_about_one_percent() {
        // count agent-iterations and escape triggers by replaying the
        // trigger draw with the default probability
        let p = MtsaParams::default();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let trials = 200_000usize;
        let hits = (0..trials)
            .filter(|_| rng.gen::<f64>() < p.escape_prob)
            .count() as f64;
        let expected = trials as f64 * p.escape_prob;
        let sigma = (trials as f64 * p.escape_prob * (1.0 - p.escape_prob)).sqrt();
        assert!((hits - expected).abs() < 3.0 * sigma, "{hits}");
    }
}
