use std::fs;

use hardbench_core::harness::{self, BudgetRule, ExperimentConfig, OUTPUT_FILES};
use hardbench_core::metrics::{self, RankMode, RunRecord};
use hardbench_core::{reference_optimum_point, stated_optimum_value, FunctionId, Registry};

fn small_config() -> ExperimentConfig {
    ExperimentConfig::from_text(
        "functions = layeb02, layeb11, layeb19\n\
         dimensions = 4\n\
         runs = 3\n\
         max_fes = 3000\n\
         master_seed = 42\n",
    )
    .unwrap()
}

#[test]
fn config_text_round_trips_into_fields() {
    let c = small_config();
    assert_eq!(
        c.functions,
        vec![
            FunctionId::Layeb02,
            FunctionId::Layeb11,
            FunctionId::Layeb19
        ]
    );
    assert_eq!(c.dimensions, vec![4]);
    assert_eq!(c.budget, BudgetRule::Fixed(3000));
    assert_eq!(c.run_count(), 3 * 2 * 3);
    c.validate(&Registry::with_defaults()).unwrap();
}

#[test]
fn invalid_configs_are_rejected() {
    let registry = Registry::with_defaults();
    for text in [
        "runs = 0",
        "algorithms = nope",
        "functions = crosslegtable\ndimensions = 10",
        "dimensions = 1",
        "mtsa.population_size = 1",
        "random_search.anything = 3",
        "max_fes = 10",
    ] {
        let ok = ExperimentConfig::from_text(text).and_then(|c| c.validate(&registry));
        assert!(ok.is_err(), "accepted `{text}`");
    }
    assert!(ExperimentConfig::from_text("colour = blue").is_err());
    assert!(ExperimentConfig::from_text("runs = many").is_err());
}

#[test]
fn outputs_are_byte_identical_across_executions() {
    let registry = Registry::with_defaults();
    let config = small_config();
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for d in &dirs {
        let results = harness::run_experiment(&config, &registry).unwrap();
        harness::write_outputs(&results, RankMode::MeanError, d.path()).unwrap();
    }
    for f in OUTPUT_FILES {
        let a = fs::read(dirs[0].path().join(f)).unwrap();
        let b = fs::read(dirs[1].path().join(f)).unwrap();
        assert!(!a.is_empty(), "{f} empty");
        assert_eq!(a, b, "{f} differs");
    }
}

#[test]
fn master_seed_changes_the_runs() {
    let registry = Registry::with_defaults();
    let mut config = small_config();
    let a = harness::run_experiment(&config, &registry).unwrap();
    config.master_seed = 43;
    let b = harness::run_experiment(&config, &registry).unwrap();
    assert_ne!(a.records, b.records);
}

#[test]
fn runs_csv_round_trips_and_reranks() {
    let registry = Registry::with_defaults();
    let config = small_config();
    let results = harness::run_experiment(&config, &registry).unwrap();
    let dir = tempfile::tempdir().unwrap();
    harness::write_outputs(&results, RankMode::MeanError, dir.path()).unwrap();

    let runs = dir.path().join("runs.csv");
    let back = harness::read_runs_csv(fs::File::open(&runs).unwrap()).unwrap();
    assert_eq!(back, results.records);

    let before = fs::read(dir.path().join("ranks.csv")).unwrap();
    let tables = harness::rerank(&runs, RankMode::MeanError, dir.path()).unwrap();
    assert_eq!(fs::read(dir.path().join("ranks.csv")).unwrap(), before);
    assert_eq!(tables.len(), 1);
    assert_eq!(tables[0].1.rows.len(), 3);

    let raw = harness::rerank(&runs, RankMode::RawRuns, dir.path()).unwrap();
    assert_eq!(raw[0].1.rows.len(), 9);
    for row in &raw[0].1.ranks {
        assert_eq!(row.iter().sum::<f64>(), 3.0);
    }
}

#[test]
fn records_are_in_grid_order_within_budget() {
    let registry = Registry::with_defaults();
    let config = small_config();
    let results = harness::run_experiment(&config, &registry).unwrap();
    let mut expected = Vec::new();
    for f in &config.functions {
        for a in &config.algorithms {
            for r in 0..config.runs {
                expected.push((*f, a.clone(), r));
            }
        }
    }
    let got: Vec<_> = results
        .records
        .iter()
        .map(|r| (r.function, r.algorithm.clone(), r.run_index))
        .collect();
    assert_eq!(got, expected);
    assert!(results.records.iter().all(|r| r.evaluations_used <= 3000));
}

#[test]
fn total_error_vanishes_at_the_optimum() {
    let id = FunctionId::Layeb12;
    let n = 10;
    let point = reference_optimum_point(id, n, None).unwrap();
    let value = stated_optimum_value(id, n).unwrap().value;
    let records: Vec<RunRecord> = (0..30)
        .map(|i| RunRecord {
            function: id,
            algorithm: "mtsa".into(),
            dimension: n,
            run_index: i,
            best_value: value,
            best_point: point.clone(),
            evaluations_used: 1,
            seed: i as u64,
        })
        .collect();
    assert_eq!(metrics::mte(&records, value, &point).unwrap(), 0.0);
    assert_eq!(
        metrics::bte(metrics::best_run(&records).unwrap(), value, &point).unwrap(),
        0.0
    );
}

#[test]
fn surface_export_has_one_row_per_grid_point() {
    let grid = harness::surface_grid(
        FunctionId::CrossLegTable,
        9,
        hardbench_core::AngleMode::Degrees,
        Some((-360.0, 360.0)),
        0,
    )
    .unwrap();
    let mut out = Vec::new();
    grid.write_csv(&mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    assert_eq!(text.lines().count(), 1 + 81);
    assert_eq!(grid.min(), -1.0);
}
