//! Error measures, run statistics, row normalization and Friedman ranks.

use crate::error::{Error, Result};
use crate::suite::FunctionId;

/// Outcome of one optimizer run on one (function, dimension) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub function: FunctionId,
    pub algorithm: String,
    pub dimension: usize,
    pub run_index: usize,
    pub best_value: f64,
    pub best_point: Vec<f64>,
    pub evaluations_used: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatsSummary {
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator); 0 for a single value.
    pub std: f64,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

/// Plain error `best_value - stated_value`.
pub fn error(record: &RunRecord, stated_value: f64) -> f64 {
    record.best_value - stated_value
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Value gap plus Euclidean distance of `point` from `global_point`.
pub fn total_error(
    value: f64,
    point: &[f64],
    global_value: f64,
    global_point: &[f64],
) -> Result<f64> {
    if point.len() != global_point.len() {
        return Err(Error::Shape(format!(
            "run point has {} coordinates, optimum has {}",
            point.len(),
            global_point.len()
        )));
    }
    Ok(value - global_value + distance(point, global_point))
}

fn record_total_error(record: &RunRecord, global_value: f64, global_point: &[f64]) -> Result<f64> {
    total_error(
        record.best_value,
        &record.best_point,
        global_value,
        global_point,
    )
}

/// Mean total error: average of value gap plus Euclidean distance to
/// `global_point` over all runs.
pub fn mte(records: &[RunRecord], global_value: f64, global_point: &[f64]) -> Result<f64> {
    if records.is_empty() {
        return Err(Error::EmptyInput);
    }
    check_same_cell(records)?;
    let mut sum = 0.0;
    for r in records {
        sum += record_total_error(r, global_value, global_point)?;
    }
    Ok(sum / records.len() as f64)
}

/// Total error of a single (typically the best) run.
pub fn bte(record: &RunRecord, global_value: f64, global_point: &[f64]) -> Result<f64> {
    record_total_error(record, global_value, global_point)
}

/// The run with the lowest best value; earliest run index wins ties.
pub fn best_run(records: &[RunRecord]) -> Option<&RunRecord> {
    records.iter().min_by(|a, b| {
        a.best_value
            .total_cmp(&b.best_value)
            .then(a.run_index.cmp(&b.run_index))
    })
}

fn check_same_cell(records: &[RunRecord]) -> Result<()> {
    let first = &records[0];
    let mixed = records.iter().any(|r| {
        r.function != first.function
            || r.algorithm != first.algorithm
            || r.dimension != first.dimension
    });
    if mixed {
        return Err(Error::Shape(
            "records span more than one (function, algorithm, dimension) cell".into(),
        ));
    }
    Ok(())
}

pub fn summarize_values(values: &[f64]) -> Result<StatsSummary> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let std = if values.len() > 1 {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(StatsSummary {
        mean,
        std,
        min,
        max,
        count: values.len(),
    })
}

/// Sample statistics over the runs' errors against `stated_value`.
pub fn summarize(records: &[RunRecord], stated_value: f64) -> Result<StatsSummary> {
    let errors: Vec<f64> = records.iter().map(|r| error(r, stated_value)).collect();
    summarize_values(&errors)
}

/// Replaces non-finite entries of a row so that it can be min-max scaled.
///
/// `+inf` (and NaN) become ten times the largest finite entry, or that entry
/// plus one when it is not positive; `-inf` mirrors this on the low side.
/// A row with no finite entry becomes all zeros.
pub fn clamp_row(row: &[f64]) -> Vec<f64> {
    let finite: Vec<f64> = row.iter().copied().filter(|v| v.is_finite()).collect();
    if finite.is_empty() {
        return vec![0.0; row.len()];
    }
    let hi = finite.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = finite.iter().copied().fold(f64::INFINITY, f64::min);
    let top = if hi > 0.0 { hi * 10.0 } else { hi + 1.0 };
    let bottom = if lo < 0.0 { lo * 10.0 } else { lo - 1.0 };
    row.iter()
        .map(|&v| match v {
            v if v.is_finite() => v,
            v if v == f64::NEG_INFINITY => bottom,
            _ => top,
        })
        .collect()
}

/// Per-row min-max normalization into `[0, 1]`; constant rows map to zeros.
pub fn normalize_matrix(raw: &[Vec<f64>]) -> Vec<Vec<f64>> {
    raw.iter()
        .map(|row| {
            let row = clamp_row(row);
            let lo = row.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let span = hi - lo;
            row.iter()
                .map(|v| {
                    if span > 0.0 && span.is_finite() {
                        ((v - lo) / span).clamp(0.0, 1.0)
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

/// Ranks of one row, 1 for the smallest value, ties sharing their average rank.
pub fn rank_row(row: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..row.len()).collect();
    order.sort_by(|&a, &b| row[a].total_cmp(&row[b]));
    let mut ranks = vec![0.0; row.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && row[order[j + 1]] == row[order[i]] {
            j += 1;
        }
        // positions i..=j hold equal values; ranks are 1-based
        let shared = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = shared;
        }
        i = j + 1;
    }
    ranks
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankTable {
    pub algorithms: Vec<String>,
    /// One label per matrix row (a function, or a function and run in raw mode).
    pub rows: Vec<String>,
    pub normalized_matrix: Vec<Vec<f64>>,
    pub ranks: Vec<Vec<f64>>,
    pub average_ranks: Vec<f64>,
    pub friedman_statistic: f64,
}

/// Friedman chi-square from average ranks over `n_rows` rows.
pub fn friedman_statistic(average_ranks: &[f64], n_rows: usize) -> f64 {
    let a = average_ranks.len() as f64;
    let n = n_rows as f64;
    let sum_sq: f64 = average_ranks.iter().map(|r| r * r).sum();
    12.0 * n / (a * (a + 1.0)) * (sum_sq - a * (a + 1.0).powi(2) / 4.0)
}

/// Ranks every row of `matrix` and averages per column.
pub fn friedman_ranks(matrix: &[Vec<f64>]) -> Result<(Vec<Vec<f64>>, Vec<f64>, f64)> {
    if matrix.len() < 2 {
        return Err(Error::Shape(format!(
            "need at least 2 rows, got {}",
            matrix.len()
        )));
    }
    let a = matrix[0].len();
    if a < 2 {
        return Err(Error::Shape(format!("need at least 2 algorithms, got {a}")));
    }
    if let Some(bad) = matrix.iter().find(|r| r.len() != a) {
        return Err(Error::Shape(format!(
            "ragged matrix: row of length {} among rows of {a}",
            bad.len()
        )));
    }
    let ranks: Vec<Vec<f64>> = matrix.iter().map(|r| rank_row(r)).collect();
    let average: Vec<f64> = (0..a)
        .map(|j| ranks.iter().map(|r| r[j]).sum::<f64>() / ranks.len() as f64)
        .collect();
    let stat = friedman_statistic(&average, ranks.len());
    Ok((ranks, average, stat))
}

/// Normalizes a rows x algorithms matrix of errors and ranks it.
pub fn rank_table(
    algorithms: Vec<String>,
    rows: Vec<String>,
    raw: &[Vec<f64>],
) -> Result<RankTable> {
    if raw.len() != rows.len() {
        return Err(Error::Shape(format!(
            "{} row labels for {} rows",
            rows.len(),
            raw.len()
        )));
    }
    if raw.first().map(|r| r.len()) != Some(algorithms.len()) {
        return Err(Error::Shape(
            "matrix width differs from the algorithm count".into(),
        ));
    }
    let normalized = normalize_matrix(raw);
    let (ranks, average_ranks, friedman_statistic) = friedman_ranks(&normalized)?;
    Ok(RankTable {
        algorithms,
        rows,
        normalized_matrix: normalized,
        ranks,
        average_ranks,
        friedman_statistic,
    })
}

/// How matrix rows are formed from run records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankMode {
    /// One row per function holding each algorithm's mean error.
    #[default]
    MeanError,
    /// One row per (function, run index) holding raw errors.
    RawRuns,
}

impl RankMode {
    pub fn name(self) -> &'static str {
        match self {
            RankMode::MeanError => "mean",
            RankMode::RawRuns => "raw",
        }
    }
}

impl std::str::FromStr for RankMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mean" | "mean-error" | "mean_error" => Ok(RankMode::MeanError),
            "raw" | "raw-runs" | "raw_runs" => Ok(RankMode::RawRuns),
            other => Err(Error::Parse(format!(
                "unknown rank mode `{other}` (expected mean or raw)"
            ))),
        }
    }
}

/// A record paired with its error, the unit the rank pipeline consumes.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorCell {
    pub function: FunctionId,
    pub algorithm: String,
    pub run_index: usize,
    pub error: f64,
}

/// Builds the rank table for one dimension.
///
/// Functions missing a value for any algorithm are dropped so every row is
/// complete; rows keep catalog order and columns keep `algorithms` order.
pub fn rank_errors(
    cells: &[ErrorCell],
    algorithms: &[String],
    mode: RankMode,
) -> Result<RankTable> {
    use std::collections::BTreeMap;

    // (function, row key) -> algorithm -> errors
    let mut grouped: BTreeMap<(usize, usize), BTreeMap<&str, Vec<f64>>> = BTreeMap::new();
    for c in cells {
        let run_key = match mode {
            RankMode::MeanError => 0,
            RankMode::RawRuns => c.run_index,
        };
        grouped
            .entry((c.function.index(), run_key))
            .or_default()
            .entry(c.algorithm.as_str())
            .or_default()
            .push(c.error);
    }

    let mut labels = Vec::new();
    let mut matrix = Vec::new();
    for ((f, run), per_algo) in &grouped {
        let row: Option<Vec<f64>> = algorithms
            .iter()
            .map(|a| {
                per_algo
                    .get(a.as_str())
                    .map(|v| v.iter().sum::<f64>() / v.len() as f64)
            })
            .collect();
        if let Some(row) = row {
            let name = FunctionId::ALL[*f].name();
            labels.push(match mode {
                RankMode::MeanError => name.to_string(),
                RankMode::RawRuns => format!("{name}#{run}"),
            });
            matrix.push(row);
        }
    }
    rank_table(algorithms.to_vec(), labels, &matrix)
}
