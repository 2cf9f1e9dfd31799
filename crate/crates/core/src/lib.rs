//! Hard global-optimization benchmark functions with optimum metadata,
//! radian/degree evaluation modes, a modified tangent search optimizer,
//! total-error metrics and Friedman rank statistics.

pub mod error;
pub mod harness;
pub mod metrics;
pub mod mtsa;
pub mod numfmt;
pub mod optim;
pub mod suite;
pub mod trig;
pub mod verify;

pub use error::{Error, Result};
pub use mtsa::{Mtsa, MtsaParams};
pub use optim::{
    Bounds, Candidate, EvaluationBudget, ObjectiveHandle, Optimizer, OptimizerResult, ParamMap,
    Problem, RandomSearch, Registry, SeedSpec,
};
pub use suite::{
    descriptor, evaluate, list_functions, reference_optimum_point, stated_optimum_value,
    Consistency, EvaluationContext, FunctionDescriptor, FunctionId, Modality, NoiseSource,
};
pub use trig::{to_degrees, AngleMode};
