//! Python bindings: catalog lookup, evaluation, optimizers, metrics,
//! catalog verification and the experiment runner.

use std::collections::BTreeMap;
use std::path::PathBuf;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hardbench_core::harness::{self, ExperimentConfig};
use hardbench_core::metrics::{self, RankMode};
use hardbench_core::{
    descriptor as core_descriptor, evaluate as core_evaluate, reference_optimum_point,
    stated_optimum_value, verify, AngleMode, Error, EvaluationContext, FunctionId, ObjectiveHandle,
    Registry,
};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExhausted { .. } | Error::EmptyBudget | Error::Io(_) | Error::Csv(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn function_id(name: &str) -> PyResult<FunctionId> {
    name.parse().map_err(to_py)
}

fn angle_mode(mode: &str) -> PyResult<AngleMode> {
    mode.parse().map_err(to_py)
}

/// Catalog metadata for one function.
#[pyclass(frozen, get_all, skip_from_py_object, module = "hardbench")]
#[derive(Clone)]
struct FunctionInfo {
    name: String,
    alias: Option<String>,
    lower_bound: f64,
    upper_bound: f64,
    modality: String,
    separable: bool,
    noisy: bool,
    consistency: String,
    optimum_formula: String,
    fixed_dimension: Option<usize>,
    check_mode: String,
}

#[pymethods]
impl FunctionInfo {
    fn __repr__(&self) -> String {
        format!(
            "FunctionInfo(name='{}', bounds=[{}, {}], consistency='{}')",
            self.name, self.lower_bound, self.upper_bound, self.consistency
        )
    }
}

/// Outcome of one optimizer run.
#[pyclass(frozen, get_all, skip_from_py_object, module = "hardbench")]
#[derive(Clone)]
struct RunResult {
    best_value: f64,
    best_point: Vec<f64>,
    evaluations_used: usize,
    seed: u64,
}

#[pymethods]
impl RunResult {
    fn __repr__(&self) -> String {
        format!(
            "RunResult(best_value={}, evaluations_used={})",
            self.best_value, self.evaluations_used
        )
    }
}

/// One row of the catalog verification report.
#[pyclass(frozen, get_all, skip_from_py_object, module = "hardbench")]
#[derive(Clone)]
struct VerificationRow {
    function: String,
    dimension: usize,
    consistency: String,
    mode: String,
    stated: f64,
    measured: f64,
    abs_gap: f64,
    status: String,
    grid_min: Option<f64>,
    grid_consistent: Option<bool>,
}

/// (function, algorithm, dimension, run index, result)
type RunRow = (String, String, usize, usize, RunResult);
/// (dimension, algorithms, average ranks, Friedman statistic)
type RankSummary = (usize, Vec<String>, Vec<f64>, f64);

#[pyfunction]
fn list_functions() -> Vec<String> {
    FunctionId::ALL
        .iter()
        .map(|id| id.name().to_string())
        .collect()
}

#[pyfunction]
fn describe(name: &str) -> PyResult<FunctionInfo> {
    let id = function_id(name)?;
    let d = core_descriptor(id);
    Ok(FunctionInfo {
        name: id.name().to_string(),
        alias: d.alias.map(str::to_string),
        lower_bound: d.lower_bound,
        upper_bound: d.upper_bound,
        modality: d.modality.name().to_string(),
        separable: d.separable,
        noisy: d.noisy,
        consistency: d.optimum.consistency.name().to_string(),
        optimum_formula: d.optimum.value.formula().to_string(),
        fixed_dimension: d.fixed_dimension,
        check_mode: d.optimum.check_mode().name().to_string(),
    })
}

/// `f(x)`; `mode` is "radians" or "degrees", `seed` drives the noise terms.
#[pyfunction]
#[pyo3(signature = (name, x, mode = "radians", seed = 0))]
fn evaluate(name: &str, x: Vec<f64>, mode: &str, seed: u64) -> PyResult<f64> {
    let id = function_id(name)?;
    core_evaluate(id, &x, &mut EvaluationContext::new(angle_mode(mode)?, seed)).map_err(to_py)
}

#[pyfunction]
fn stated_optimum(name: &str, dimension: usize) -> PyResult<f64> {
    Ok(stated_optimum_value(function_id(name)?, dimension)
        .map_err(to_py)?
        .value)
}

#[pyfunction]
#[pyo3(signature = (name, dimension, k = None))]
fn optimum_point(name: &str, dimension: usize, k: Option<i64>) -> PyResult<Vec<f64>> {
    reference_optimum_point(function_id(name)?, dimension, k).map_err(to_py)
}

#[pyfunction]
fn to_degrees(x: Vec<f64>) -> Vec<f64> {
    hardbench_core::to_degrees(&x)
}

/// Runs one optimizer. `max_fes` defaults to 10^4 evaluations per dimension;
/// `params` holds optimizer parameters as strings or numbers.
#[pyfunction]
#[pyo3(signature = (name, dimension, algorithm = "mtsa", max_fes = None, seed = 0, mode = "radians", params = None))]
#[allow(clippy::too_many_arguments)]
fn minimize(
    py: Python<'_>,
    name: &str,
    dimension: usize,
    algorithm: &str,
    max_fes: Option<usize>,
    seed: u64,
    mode: &str,
    params: Option<BTreeMap<String, Bound<'_, PyAny>>>,
) -> PyResult<RunResult> {
    let id = function_id(name)?;
    let mode = angle_mode(mode)?;
    let mut map = BTreeMap::new();
    for (k, v) in params.unwrap_or_default() {
        map.insert(k, v.str()?.to_string());
    }
    let optimizer = Registry::with_defaults()
        .create(algorithm, &map)
        .map_err(to_py)?;
    let handle = ObjectiveHandle::new(id, dimension, mode, seed ^ 0x5eed).map_err(to_py)?;
    let max_fes = max_fes.unwrap_or(hardbench_core::EvaluationBudget::PER_DIMENSION * dimension);
    let result = py
        .detach(|| optimizer.minimize(&mut handle.budgeted(max_fes), seed))
        .map_err(to_py)?;
    Ok(RunResult {
        best_value: result.best.fitness,
        best_point: result.best.point,
        evaluations_used: result.evaluations_used,
        seed: result.seed,
    })
}

/// Mean total error over runs given as parallel lists of values and points.
#[pyfunction]
fn mte(
    values: Vec<f64>,
    points: Vec<Vec<f64>>,
    optimum_value: f64,
    optimum_point: Vec<f64>,
) -> PyResult<f64> {
    if values.is_empty() || values.len() != points.len() {
        return Err(PyValueError::new_err(
            "values and points must be non-empty and of equal length",
        ));
    }
    let mut sum = 0.0;
    for (v, p) in values.iter().zip(&points) {
        sum += metrics::total_error(*v, p, optimum_value, &optimum_point).map_err(to_py)?;
    }
    Ok(sum / values.len() as f64)
}

#[pyfunction]
fn bte(value: f64, point: Vec<f64>, optimum_value: f64, optimum_point: Vec<f64>) -> PyResult<f64> {
    metrics::total_error(value, &point, optimum_value, &optimum_point).map_err(to_py)
}

#[pyfunction]
fn normalize(matrix: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    metrics::normalize_matrix(&matrix)
}

/// Friedman ranks of a rows-by-algorithms matrix: (ranks, average ranks, chi-square).
#[pyfunction]
fn friedman(matrix: Vec<Vec<f64>>) -> PyResult<(Vec<Vec<f64>>, Vec<f64>, f64)> {
    metrics::friedman_ranks(&matrix).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (tolerance = 1e-9, resolution = 1001))]
fn verify_catalog(
    py: Python<'_>,
    tolerance: f64,
    resolution: usize,
) -> PyResult<Vec<VerificationRow>> {
    if resolution < 2 {
        return Err(PyValueError::new_err("resolution must be at least 2"));
    }
    let report = py.detach(|| verify::verify_catalog(tolerance, resolution));
    Ok(report
        .entries
        .iter()
        .map(|e| VerificationRow {
            function: e.id.name().to_string(),
            dimension: e.dimension,
            consistency: e.consistency.name().to_string(),
            mode: e.mode.name().to_string(),
            stated: e.stated_value,
            measured: e.measured_value,
            abs_gap: e.abs_gap,
            status: e.status.name().to_string(),
            grid_min: e.grid.as_ref().map(|g| g.min),
            grid_consistent: e.grid_consistent(),
        })
        .collect())
}

/// Runs an experiment described by `key = value` config text. Writes the
/// CSV outputs when `output_dir` is given and returns every run.
#[pyfunction]
#[pyo3(signature = (config, output_dir = None))]
fn run_experiment(
    py: Python<'_>,
    config: &str,
    output_dir: Option<PathBuf>,
) -> PyResult<Vec<RunRow>> {
    let config = ExperimentConfig::from_text(config).map_err(to_py)?;
    let registry = Registry::with_defaults();
    config.validate(&registry).map_err(to_py)?;
    let results = py
        .detach(|| harness::run_experiment(&config, &registry))
        .map_err(to_py)?;
    if let Some(dir) = output_dir.or(config.output_directory.clone()) {
        harness::write_outputs(&results, config.rank_mode, &dir).map_err(to_py)?;
    }
    Ok(results
        .records
        .into_iter()
        .map(|r| {
            (
                r.function.name().to_string(),
                r.algorithm,
                r.dimension,
                r.run_index,
                RunResult {
                    best_value: r.best_value,
                    best_point: r.best_point,
                    evaluations_used: r.evaluations_used,
                    seed: r.seed,
                },
            )
        })
        .collect())
}

/// Recomputes rank tables from a saved runs.csv; `rank_mode` is "mean" or "raw".
/// Returns, per dimension, (dimension, algorithms, average ranks, chi-square).
#[pyfunction]
#[pyo3(signature = (runs_csv, output_dir, rank_mode = "mean"))]
fn rerank(runs_csv: PathBuf, output_dir: PathBuf, rank_mode: &str) -> PyResult<Vec<RankSummary>> {
    let mode: RankMode = rank_mode.parse().map_err(to_py)?;
    let tables = harness::rerank(&runs_csv, mode, &output_dir).map_err(to_py)?;
    Ok(tables
        .into_iter()
        .map(|(d, t)| (d, t.algorithms, t.average_ranks, t.friedman_statistic))
        .collect())
}

#[pymodule]
pub fn hardbench(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<FunctionInfo>()?;
    m.add_class::<RunResult>()?;
    m.add_class::<VerificationRow>()?;
    m.add_function(wrap_pyfunction!(list_functions, m)?)?;
    m.add_function(wrap_pyfunction!(describe, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(stated_optimum, m)?)?;
    m.add_function(wrap_pyfunction!(optimum_point, m)?)?;
    m.add_function(wrap_pyfunction!(to_degrees, m)?)?;
    m.add_function(wrap_pyfunction!(minimize, m)?)?;
    m.add_function(wrap_pyfunction!(mte, m)?)?;
    m.add_function(wrap_pyfunction!(bte, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(friedman, m)?)?;
    m.add_function(wrap_pyfunction!(verify_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(run_experiment, m)?)?;
    m.add_function(wrap_pyfunction!(rerank, m)?)?;
    Ok(())
}
