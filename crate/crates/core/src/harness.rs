//! Experiment runner: configuration, the (function, algorithm, dimension,
//! run) grid, CSV outputs, surface grids and re-ranking of saved runs.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metrics::{self, ErrorCell, RankMode, RankTable, RunRecord, StatsSummary};
use crate::numfmt::{fmt_point, fmt_real, parse_point, parse_real};
use crate::optim::{EvaluationBudget, ObjectiveHandle, ParamMap, Registry, SeedSpec};
use crate::suite::{
    descriptor, evaluate_unchecked, reference_optimum_point, stated_optimum_value,
    EvaluationContext, FunctionId,
};
use crate::trig::AngleMode;

/// How the per-run evaluation budget is derived from the dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetRule {
    /// `max_fes = multiplier * dimension`
    PerDimension(usize),
    Fixed(usize),
}

impl BudgetRule {
    pub fn max_fes(self, dimension: usize) -> usize {
        match self {
            BudgetRule::PerDimension(m) => m.saturating_mul(dimension),
            BudgetRule::Fixed(n) => n,
        }
    }
}

impl Default for BudgetRule {
    fn default() -> Self {
        BudgetRule::PerDimension(EvaluationBudget::PER_DIMENSION)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub functions: Vec<FunctionId>,
    pub algorithms: Vec<String>,
    pub dimensions: Vec<usize>,
    pub runs: usize,
    pub budget: BudgetRule,
    pub mode: AngleMode,
    pub master_seed: u64,
    /// Where results go; `None` leaves the choice to the caller.
    pub output_directory: Option<PathBuf>,
    pub rank_mode: RankMode,
    /// Optimizer parameters keyed by algorithm name.
    pub params: BTreeMap<String, ParamMap>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            functions: FunctionId::scalable().to_vec(),
            algorithms: vec!["mtsa".into(), "random_search".into()],
            dimensions: vec![10, 30],
            runs: 30,
            budget: BudgetRule::default(),
            mode: AngleMode::Radians,
            master_seed: 1,
            output_directory: None,
            rank_mode: RankMode::MeanError,
            params: BTreeMap::new(),
        }
    }
}

fn list<T>(value: &str, what: &str, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    let items: Vec<&str> = value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if items.is_empty() {
        return Err(Error::Config(format!("`{what}` needs at least one value")));
    }
    items.into_iter().map(parse).collect()
}

fn integer<T: FromStr>(value: &str, key: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("`{key}` expects an integer, got `{value}`")))
}

impl ExperimentConfig {
    /// Applies one `key = value` setting.
    ///
    /// Keys: `functions` (names, `all` or `scalable`), `algorithms`,
    /// `dimensions`, `runs`, `budget_multiplier`, `max_fes`, `mode`,
    /// `master_seed`, `output_directory`, `rank_mode`, and
    /// `<algorithm>.<parameter>` for optimizer parameters.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let key = key.trim();
        let value = value.trim();
        match key {
            "functions" => {
                self.functions = match value.to_ascii_lowercase().as_str() {
                    "all" => FunctionId::ALL.to_vec(),
                    "scalable" => FunctionId::scalable().to_vec(),
                    _ => list(value, key, |s| {
                        s.parse::<FunctionId>()
                            .map_err(|e| Error::Config(e.to_string()))
                    })?,
                }
            }
            "algorithms" => self.algorithms = list(value, key, |s| Ok(s.to_string()))?,
            "dimensions" => self.dimensions = list(value, key, |s| integer(s, key))?,
            "runs" => self.runs = integer(value, key)?,
            "budget_multiplier" => self.budget = BudgetRule::PerDimension(integer(value, key)?),
            "max_fes" => self.budget = BudgetRule::Fixed(integer(value, key)?),
            "mode" => {
                self.mode = value
                    .parse()
                    .map_err(|e: Error| Error::Config(e.to_string()))?
            }
            "master_seed" => self.master_seed = integer(value, key)?,
            "output_directory" => self.output_directory = Some(PathBuf::from(value)),
            "rank_mode" => {
                self.rank_mode = value
                    .parse()
                    .map_err(|e: Error| Error::Config(e.to_string()))?
            }
            _ => match key.split_once('.') {
                Some((algo, param)) if !algo.is_empty() && !param.is_empty() => {
                    self.params
                        .entry(algo.to_string())
                        .or_default()
                        .insert(param.to_string(), value.to_string());
                }
                _ => return Err(Error::Config(format!("unknown configuration key `{key}`"))),
            },
        }
        Ok(())
    }

    /// Applies every `key = value` line of a config file. Blank lines and
    /// `#` comments are ignored.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!(
                    "line {}: expected `key = value`, got `{raw}`",
                    no + 1
                ))
            })?;
            self.set(k, v)
                .map_err(|e| Error::Config(format!("line {}: {e}", no + 1)))?;
        }
        Ok(())
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut c = Self::default();
        c.apply_text(text)?;
        Ok(c)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_text(&text)
    }

    pub fn max_fes(&self, dimension: usize) -> usize {
        self.budget.max_fes(dimension)
    }

    pub fn validate(&self, registry: &Registry) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        if self.functions.is_empty() || self.algorithms.is_empty() || self.dimensions.is_empty() {
            return Err(Error::Config(
                "functions, algorithms and dimensions must be non-empty".into(),
            ));
        }
        for a in &self.algorithms {
            // constructing validates the parameters as well as the name
            registry
                .create(a, self.params.get(a).unwrap_or(&ParamMap::new()))
                .map_err(|e| Error::Config(e.to_string()))?;
        }
        if let Some(a) = self.params.keys().find(|a| !self.algorithms.contains(a)) {
            return Err(Error::Config(format!(
                "parameters given for `{a}`, which is not in algorithms"
            )));
        }
        for &d in &self.dimensions {
            for &f in &self.functions {
                descriptor(f)
                    .check_dimension(d)
                    .map_err(|e| Error::Config(e.to_string()))?;
            }
            let budget = self.max_fes(d);
            if budget == 0 {
                return Err(Error::Config(format!("budget for dimension {d} is zero")));
            }
            if self.algorithms.iter().any(|a| a == "mtsa") {
                let pop = self
                    .params
                    .get("mtsa")
                    .and_then(|p| p.get("population_size"))
                    .and_then(|v| v.parse::<usize>().ok())
                    .unwrap_or(crate::mtsa::MtsaParams::default().population_size);
                if budget < pop {
                    return Err(Error::Config(format!(
                        "budget {budget} at dimension {d} is below the mtsa population size {pop}"
                    )));
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = self.algorithms.iter().find(|a| !seen.insert(*a)) {
            return Err(Error::Config(format!("algorithm `{dup}` listed twice")));
        }
        Ok(())
    }

    /// Number of runs the configuration describes.
    pub fn run_count(&self) -> usize {
        self.functions.len() * self.algorithms.len() * self.dimensions.len() * self.runs
    }
}

#[derive(Debug, Clone)]
struct Task {
    function: FunctionId,
    algorithm: usize,
    dimension: usize,
    run: usize,
}

/// All runs of an experiment, ordered by function, algorithm, dimension, run.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResults {
    pub algorithms: Vec<String>,
    pub records: Vec<RunRecord>,
}

/// Executes the experiment grid. Runs are independent and may execute in
/// parallel; results are collected in grid order, so outputs do not depend
/// on scheduling.
pub fn run_experiment(config: &ExperimentConfig, registry: &Registry) -> Result<ExperimentResults> {
    config.validate(registry)?;
    let seeds = SeedSpec::new(config.master_seed);
    let empty = ParamMap::new();
    let optimizers = config
        .algorithms
        .iter()
        .map(|a| registry.create(a, config.params.get(a).unwrap_or(&empty)))
        .collect::<Result<Vec<_>>>()?;
    // seed layout uses the registry position so seeds do not depend on the
    // order algorithms are listed in
    let registry_index: Vec<usize> = config
        .algorithms
        .iter()
        .map(|a| registry.names().iter().position(|n| n == a).unwrap_or(0))
        .collect();

    let mut tasks = Vec::with_capacity(config.run_count());
    for &function in &config.functions {
        for algorithm in 0..config.algorithms.len() {
            for &dimension in &config.dimensions {
                for run in 0..config.runs {
                    tasks.push(Task {
                        function,
                        algorithm,
                        dimension,
                        run,
                    });
                }
            }
        }
    }
    log::info!(
        "running {} runs ({} functions, {} algorithms, dimensions {:?})",
        tasks.len(),
        config.functions.len(),
        config.algorithms.len(),
        config.dimensions
    );

    let records = tasks
        .par_iter()
        .map(|t| -> Result<RunRecord> {
            let seed = seeds.run_seed(
                t.function.index(),
                registry_index[t.algorithm],
                t.dimension,
                t.run,
            )?;
            let handle = ObjectiveHandle::new(
                t.function,
                t.dimension,
                config.mode,
                SeedSpec::noise_seed(seed),
            )?;
            let mut problem = handle.budgeted(config.max_fes(t.dimension));
            let result = optimizers[t.algorithm].minimize(&mut problem, seed)?;
            log::debug!(
                "{} {} d={} run={} best={:e}",
                t.function,
                config.algorithms[t.algorithm],
                t.dimension,
                t.run,
                result.best.fitness
            );
            Ok(RunRecord {
                function: t.function,
                algorithm: config.algorithms[t.algorithm].clone(),
                dimension: t.dimension,
                run_index: t.run,
                best_value: result.best.fitness,
                best_point: result.best.point,
                evaluations_used: result.evaluations_used,
                seed,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ExperimentResults {
        algorithms: config.algorithms.clone(),
        records,
    })
}

/// One (function, algorithm, dimension) cell of the summary table.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub function: FunctionId,
    pub algorithm: String,
    pub dimension: usize,
    pub optimum: f64,
    pub stats: StatsSummary,
    pub mte: Option<f64>,
    pub bte: Option<f64>,
}

/// Groups records into cells, keeping first-appearance order.
fn cells(records: &[RunRecord]) -> Vec<Vec<&RunRecord>> {
    let mut order: Vec<(FunctionId, &str, usize)> = Vec::new();
    let mut groups: BTreeMap<(FunctionId, &str, usize), Vec<&RunRecord>> = BTreeMap::new();
    for r in records {
        let key = (r.function, r.algorithm.as_str(), r.dimension);
        if !groups.contains_key(&key) {
            order.push(key);
        }
        groups.entry(key).or_default().push(r);
    }
    order
        .into_iter()
        .map(|k| groups.remove(&k).unwrap_or_default())
        .collect()
}

pub fn summarize_cells(records: &[RunRecord]) -> Result<Vec<CellSummary>> {
    cells(records)
        .into_iter()
        .map(|group| {
            let first = group[0];
            let optimum = stated_optimum_value(first.function, first.dimension)?.value;
            let owned: Vec<RunRecord> = group.iter().map(|r| (*r).clone()).collect();
            let stats = metrics::summarize(&owned, optimum)?;
            let (mte, bte) = match reference_optimum_point(first.function, first.dimension, None) {
                Ok(point) => {
                    let best = metrics::best_run(&owned).ok_or(Error::EmptyInput)?;
                    (
                        Some(metrics::mte(&owned, optimum, &point)?),
                        Some(metrics::bte(best, optimum, &point)?),
                    )
                }
                Err(_) => (None, None),
            };
            Ok(CellSummary {
                function: first.function,
                algorithm: first.algorithm.clone(),
                dimension: first.dimension,
                optimum,
                stats,
                mte,
                bte,
            })
        })
        .collect()
}

/// One rank table per dimension, in first-appearance order. Dimensions with
/// fewer than two algorithms or two complete rows are skipped.
pub fn rank_tables(
    records: &[RunRecord],
    algorithms: &[String],
    mode: RankMode,
) -> Result<Vec<(usize, RankTable)>> {
    let mut dims: Vec<usize> = Vec::new();
    for r in records {
        if !dims.contains(&r.dimension) {
            dims.push(r.dimension);
        }
    }
    let mut out = Vec::new();
    for d in dims {
        let mut cells = Vec::new();
        for r in records.iter().filter(|r| r.dimension == d) {
            let optimum = stated_optimum_value(r.function, d)?.value;
            cells.push(ErrorCell {
                function: r.function,
                algorithm: r.algorithm.clone(),
                run_index: r.run_index,
                error: metrics::error(r, optimum),
            });
        }
        match metrics::rank_errors(&cells, algorithms, mode) {
            Ok(t) => out.push((d, t)),
            Err(Error::Shape(msg)) => log::warn!("no rank table for dimension {d}: {msg}"),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub const RUNS_HEADER: [&str; 9] = [
    "function",
    "algorithm",
    "dim",
    "run",
    "seed",
    "best_value",
    "error",
    "evals",
    "best_point",
];

pub fn write_runs_csv<W: Write>(records: &[RunRecord], out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(RUNS_HEADER)?;
    for r in records {
        let optimum = stated_optimum_value(r.function, r.dimension)?.value;
        w.write_record([
            r.function.name().to_string(),
            r.algorithm.clone(),
            r.dimension.to_string(),
            r.run_index.to_string(),
            r.seed.to_string(),
            fmt_real(r.best_value),
            fmt_real(metrics::error(r, optimum)),
            r.evaluations_used.to_string(),
            fmt_point(&r.best_point),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Parses a runs CSV written by [`write_runs_csv`]. The `error` column is
/// ignored; it is recomputed from the catalog when needed.
pub fn read_runs_csv<R: Read>(input: R) -> Result<Vec<RunRecord>> {
    let mut rdr = csv::Reader::from_reader(input);
    let headers = rdr.headers()?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Parse(format!("runs CSV lacks column `{name}`")))
    };
    let idx: Vec<usize> = RUNS_HEADER
        .iter()
        .filter(|h| **h != "error")
        .map(|h| col(h))
        .collect::<Result<_>>()?;
    let (f, a, d, run, seed, best, evals, point) = (
        idx[0], idx[1], idx[2], idx[3], idx[4], idx[5], idx[6], idx[7],
    );

    let mut out = Vec::new();
    for (line, row) in rdr.records().enumerate() {
        let row = row?;
        let field = |i: usize| row.get(i).unwrap_or("");
        let bad = |what: &str| Error::Parse(format!("runs CSV record {}: bad {what}", line + 1));
        let record = RunRecord {
            function: field(f).parse().map_err(|_| bad("function"))?,
            algorithm: field(a).to_string(),
            dimension: field(d).parse().map_err(|_| bad("dim"))?,
            run_index: field(run).parse().map_err(|_| bad("run"))?,
            seed: field(seed).parse().map_err(|_| bad("seed"))?,
            best_value: parse_real(field(best)).map_err(|_| bad("best_value"))?,
            evaluations_used: field(evals).parse().map_err(|_| bad("evals"))?,
            best_point: parse_point(field(point)).map_err(|_| bad("best_point"))?,
        };
        if record.best_point.len() != record.dimension {
            return Err(bad("best_point length"));
        }
        out.push(record);
    }
    Ok(out)
}

pub fn write_summary_csv<W: Write>(cells: &[CellSummary], out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record([
        "function",
        "algorithm",
        "dim",
        "optimum",
        "mean",
        "std",
        "min",
        "max",
        "count",
    ])?;
    for c in cells {
        w.write_record([
            c.function.name().to_string(),
            c.algorithm.clone(),
            c.dimension.to_string(),
            fmt_real(c.optimum),
            fmt_real(c.stats.mean),
            fmt_real(c.stats.std),
            fmt_real(c.stats.min),
            fmt_real(c.stats.max),
            c.stats.count.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_total_error_csv<W: Write>(cells: &[CellSummary], out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(["function", "algorithm", "dim", "mte", "bte"])?;
    for c in cells {
        let opt = |v: Option<f64>| v.map(fmt_real).unwrap_or_default();
        w.write_record([
            c.function.name().to_string(),
            c.algorithm.clone(),
            c.dimension.to_string(),
            opt(c.mte),
            opt(c.bte),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_ranks_csv<W: Write>(
    tables: &[(usize, RankTable)],
    mode: RankMode,
    out: W,
) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record([
        "dim",
        "algorithm",
        "average_rank",
        "friedman_statistic",
        "n_rows",
        "n_algorithms",
        "rank_mode",
    ])?;
    for (d, t) in tables {
        for (a, r) in t.algorithms.iter().zip(&t.average_ranks) {
            w.write_record([
                d.to_string(),
                a.clone(),
                fmt_real(*r),
                fmt_real(t.friedman_statistic),
                t.rows.len().to_string(),
                t.algorithms.len().to_string(),
                mode.name().to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_normalized_csv<W: Write>(tables: &[(usize, RankTable)], out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(["dim", "block", "algorithm", "normalized", "rank"])?;
    for (d, t) in tables {
        for (i, row) in t.rows.iter().enumerate() {
            for (j, a) in t.algorithms.iter().enumerate() {
                w.write_record([
                    d.to_string(),
                    row.clone(),
                    a.clone(),
                    fmt_real(t.normalized_matrix[i][j]),
                    fmt_real(t.ranks[i][j]),
                ])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn create(dir: &Path, name: &str) -> Result<std::io::BufWriter<std::fs::File>> {
    Ok(std::io::BufWriter::new(std::fs::File::create(
        dir.join(name),
    )?))
}

/// Writes the rank outputs (`ranks.csv`, `normalized.csv`) for `records`.
pub fn write_rank_files(
    records: &[RunRecord],
    algorithms: &[String],
    mode: RankMode,
    dir: &Path,
) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let tables = rank_tables(records, algorithms, mode)?;
    write_ranks_csv(&tables, mode, create(dir, "ranks.csv")?)?;
    write_normalized_csv(&tables, create(dir, "normalized.csv")?)
}

/// File names produced by [`write_outputs`].
pub const OUTPUT_FILES: [&str; 5] = [
    "runs.csv",
    "summary.csv",
    "total_error.csv",
    "ranks.csv",
    "normalized.csv",
];

/// Writes every experiment output into `dir`.
pub fn write_outputs(results: &ExperimentResults, mode: RankMode, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    write_runs_csv(&results.records, create(dir, "runs.csv")?)?;
    let cells = summarize_cells(&results.records)?;
    write_summary_csv(&cells, create(dir, "summary.csv")?)?;
    write_total_error_csv(&cells, create(dir, "total_error.csv")?)?;
    write_rank_files(&results.records, &results.algorithms, mode, dir)
}

/// Recomputes the rank files from a saved `runs.csv`. Algorithms keep their
/// order of first appearance.
pub fn rerank(runs_csv: &Path, mode: RankMode, dir: &Path) -> Result<Vec<(usize, RankTable)>> {
    let records = read_runs_csv(std::fs::File::open(runs_csv)?)?;
    let mut algorithms: Vec<String> = Vec::new();
    for r in &records {
        if !algorithms.contains(&r.algorithm) {
            algorithms.push(r.algorithm.clone());
        }
    }
    write_rank_files(&records, &algorithms, mode, dir)?;
    rank_tables(&records, &algorithms, mode)
}

/// Function values on a 2-D lattice, for contour or surface plots.
///
/// Axes are in the unit of the mode: radians mode uses the decision
/// variables directly, degrees mode labels the axes in degrees (the value at
/// axis point `t` is the function at `t` degrees converted to radians).
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceGrid {
    pub function: FunctionId,
    pub mode: AngleMode,
    pub axis_x: Vec<f64>,
    pub axis_y: Vec<f64>,
    /// `values[i][j]` is the value at `(axis_x[i], axis_y[j])`.
    pub values: Vec<Vec<f64>>,
}

/// Evaluates `id` on a `resolution x resolution` lattice. `bounds` overrides
/// the box, in axis units. Noisy functions use a fixed seed per lattice point.
pub fn surface_grid(
    id: FunctionId,
    resolution: usize,
    mode: AngleMode,
    bounds: Option<(f64, f64)>,
    seed: u64,
) -> Result<SurfaceGrid> {
    if resolution < 2 {
        return Err(Error::InvalidParameter(format!(
            "resolution must be at least 2, got {resolution}"
        )));
    }
    let d = descriptor(id);
    d.check_dimension(2)?;
    let to_axis = |v: f64| match mode {
        AngleMode::Radians => v,
        AngleMode::Degrees => v.to_degrees(),
    };
    let (lo, hi) = bounds.unwrap_or((to_axis(d.lower_bound), to_axis(d.upper_bound)));
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidParameter(format!(
            "invalid surface bounds [{lo}, {hi}]"
        )));
    }
    let step = (hi - lo) / (resolution - 1) as f64;
    let axis: Vec<f64> = (0..resolution)
        .map(|i| {
            if i == resolution - 1 {
                hi
            } else {
                lo + i as f64 * step
            }
        })
        .collect();
    let from_axis = |t: f64| match mode {
        AngleMode::Radians => t,
        AngleMode::Degrees => t.to_radians(),
    };
    let values = (0..resolution)
        .into_par_iter()
        .map(|i| {
            (0..resolution)
                .map(|j| {
                    let index = (i * resolution + j) as u64;
                    let mut ctx = EvaluationContext::new(mode, SeedSpec::noise_seed(seed ^ index));
                    evaluate_unchecked(id, &[from_axis(axis[i]), from_axis(axis[j])], &mut ctx)
                })
                .collect()
        })
        .collect();
    Ok(SurfaceGrid {
        function: id,
        mode,
        axis_x: axis.clone(),
        axis_y: axis,
        values,
    })
}

impl SurfaceGrid {
    /// Header `x,y,f` then one row per lattice point, first axis outermost.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv_writer(out);
        w.write_record(["x", "y", "f"])?;
        for (i, x) in self.axis_x.iter().enumerate() {
            for (j, y) in self.axis_y.iter().enumerate() {
                w.write_record([fmt_real(*x), fmt_real(*y), fmt_real(self.values[i][j])])?;
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn min(&self) -> f64 {
        self.values
            .iter()
            .flatten()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}
