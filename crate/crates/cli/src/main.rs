use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hardbench_core::harness::{self, ExperimentConfig};
use hardbench_core::metrics::RankMode;
use hardbench_core::numfmt::parse_real;
use hardbench_core::verify;
use hardbench_core::{
    descriptor, evaluate, AngleMode, Error, EvaluationContext, FunctionId, Registry,
};

const OUTPUT_ENV: &str = "HARDBENCH_OUTPUT_DIR";
const DEFAULT_OUTPUT: &str = "results";

/// Hard global-optimization benchmark suite.
#[derive(Parser, Debug)]
#[command(name = "hardbench", version, about)]
struct Cli {
    /// Log progress to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the function catalog.
    List,
    /// Evaluate a function at a point.
    Eval {
        function: String,
        /// Comma-separated coordinates, e.g. `1,1,1`.
        #[arg(allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value = "radians")]
        mode: String,
        /// Noise seed for the noisy functions.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run an experiment grid and write the result CSVs.
    Run(RunArgs),
    /// Check every stated optimum and scan the 2-D instances.
    Verify {
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Grid points per axis for the 2-D scans.
        #[arg(long, default_value_t = 1001)]
        resolution: usize,
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
    /// Export a 2-D surface grid as `x,y,f` CSV.
    Surface {
        function: String,
        #[arg(long, default_value_t = 201)]
        resolution: usize,
        #[arg(long, default_value = "radians")]
        mode: String,
        /// Axis range `lo,hi` in axis units (degrees in degrees mode).
        #[arg(long, allow_hyphen_values = true)]
        bounds: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; defaults to `<output dir>/surface_<function>_<mode>.csv`.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
    /// Recompute rank tables from a saved runs.csv.
    Rank {
        runs_csv: PathBuf,
        /// `mean` (one row per function) or `raw` (one row per run).
        #[arg(long, default_value = "mean")]
        rank_mode: String,
        /// Defaults to the directory holding the runs file.
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Config file of `key = value` lines.
    #[arg(long, short)]
    config: Option<PathBuf>,
    /// Extra `key=value` settings, applied after the file.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    #[arg(long)]
    functions: Option<String>,
    #[arg(long)]
    algorithms: Option<String>,
    #[arg(long)]
    dimensions: Option<String>,
    #[arg(long)]
    runs: Option<String>,
    #[arg(long)]
    max_fes: Option<String>,
    #[arg(long)]
    budget_multiplier: Option<String>,
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    master_seed: Option<String>,
    #[arg(long)]
    rank_mode: Option<String>,
    #[arg(long)]
    output_dir: Option<PathBuf>,
}

enum Failure {
    Config(String),
    Verification(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_)
            | Error::Parse(_)
            | Error::UnknownFunction(_)
            | Error::UnknownOptimizer(_)
            | Error::InvalidParameter(_)
            | Error::Dimension { .. }
            | Error::NoCanonicalPoint(_) => Failure::Config(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn output_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os(OUTPUT_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_OUTPUT))
}

fn parse_mode(s: &str) -> Result<AngleMode, Failure> {
    s.parse().map_err(|e: Error| Failure::Config(e.to_string()))
}

fn parse_function(s: &str) -> Result<FunctionId, Failure> {
    s.parse().map_err(|e: Error| Failure::Config(e.to_string()))
}

fn cmd_list() {
    let mut out = format!(
        "{:<14} {:<14} {:>16} {:<10} {:<13} {:<5} {:<24} {}\n",
        "id", "alias", "bounds", "modality", "separable", "noisy", "consistency", "optimum"
    );
    for id in FunctionId::ALL {
        let d = descriptor(id);
        let dims = match d.fixed_dimension {
            Some(n) => format!(" (n={n})"),
            None => String::new(),
        };
        out.push_str(&format!(
            "{:<14} {:<14} {:>16} {:<10} {:<13} {:<5} {:<24} {}{}\n",
            id.name(),
            d.alias.unwrap_or("-"),
            format!("[{}, {}]", d.lower_bound, d.upper_bound),
            d.modality.name(),
            if d.separable {
                "separable"
            } else {
                "non-separable"
            },
            if d.noisy { "noisy" } else { "-" },
            d.optimum.consistency.name(),
            d.optimum.value.formula(),
            dims
        ));
    }
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn cmd_eval(function: &str, point: &str, mode: &str, seed: u64) -> Result<(), Failure> {
    let id = parse_function(function)?;
    let mode = parse_mode(mode)?;
    let x = point
        .split(',')
        .map(parse_real)
        .collect::<Result<Vec<f64>, Error>>()?;
    let v = evaluate(id, &x, &mut EvaluationContext::new(mode, seed))?;
    println!("{v}");
    Ok(())
}

fn build_config(args: RunArgs) -> Result<ExperimentConfig, Failure> {
    let mut config = match &args.config {
        Some(path) => ExperimentConfig::from_file(path)?,
        None => ExperimentConfig::default(),
    };
    for kv in &args.set {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Failure::Config(format!("--set expects KEY=VALUE, got `{kv}`")))?;
        config.set(k, v)?;
    }
    let flags = [
        ("functions", args.functions),
        ("algorithms", args.algorithms),
        ("dimensions", args.dimensions),
        ("runs", args.runs),
        ("max_fes", args.max_fes),
        ("budget_multiplier", args.budget_multiplier),
        ("mode", args.mode),
        ("master_seed", args.master_seed),
        ("rank_mode", args.rank_mode),
    ];
    for (k, v) in flags {
        if let Some(v) = v {
            config.set(k, &v)?;
        }
    }
    if args.output_dir.is_some() {
        config.output_directory = args.output_dir;
    }
    Ok(config)
}

fn cmd_run(args: RunArgs) -> Result<(), Failure> {
    let config = build_config(args)?;
    let dir = output_dir(config.output_directory.clone());
    let registry = Registry::with_defaults();
    config.validate(&registry)?;
    let started = std::time::Instant::now();
    let results = harness::run_experiment(&config, &registry)?;
    harness::write_outputs(&results, config.rank_mode, &dir)?;
    println!(
        "{} runs in {:.1?}; results in {}",
        results.records.len(),
        started.elapsed(),
        dir.display()
    );
    Ok(())
}

fn cmd_verify(tolerance: f64, resolution: usize, dir: Option<PathBuf>) -> Result<(), Failure> {
    if tolerance.is_nan() || tolerance < 0.0 {
        return Err(Failure::Config(format!(
            "tolerance must be non-negative, got {tolerance}"
        )));
    }
    if resolution < 2 {
        return Err(Failure::Config("resolution must be at least 2".into()));
    }
    let dir = output_dir(dir);
    let report = verify::verify_catalog(tolerance, resolution);
    report.write_files(&dir).map_err(Failure::from)?;
    print!("{}", report.to_text());
    println!("report written to {}", dir.display());
    let failed: Vec<String> = report
        .failures()
        .map(|e| format!("{} (n={})", e.id.name(), e.dimension))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "verified functions off their stated optimum: {}",
            failed.join(", ")
        )))
    }
}

fn parse_bounds(s: &str) -> Result<(f64, f64), Failure> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| Failure::Config(format!("--bounds expects lo,hi, got `{s}`")))?;
    Ok((parse_real(lo)?, parse_real(hi)?))
}

#[allow(clippy::too_many_arguments)]
fn cmd_surface(
    function: &str,
    resolution: usize,
    mode: &str,
    bounds: Option<&str>,
    seed: u64,
    output: Option<PathBuf>,
    dir: Option<PathBuf>,
) -> Result<(), Failure> {
    let id = parse_function(function)?;
    let mode = parse_mode(mode)?;
    let bounds = bounds.map(parse_bounds).transpose()?;
    let grid = harness::surface_grid(id, resolution, mode, bounds, seed)?;
    let path = match output {
        Some(p) => p,
        None => output_dir(dir).join(format!("surface_{}_{}.csv", id.name(), mode.name())),
    };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    let file = std::fs::File::create(&path)
        .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    grid.write_csv(std::io::BufWriter::new(file))?;
    println!(
        "{} points written to {}",
        resolution * resolution,
        path.display()
    );
    Ok(())
}

fn cmd_rank(runs_csv: &Path, rank_mode: &str, dir: Option<PathBuf>) -> Result<(), Failure> {
    let mode: RankMode = rank_mode.parse()?;
    if !runs_csv.exists() {
        return Err(Failure::Config(format!(
            "{} does not exist",
            runs_csv.display()
        )));
    }
    let dir = dir.unwrap_or_else(|| {
        runs_csv
            .parent()
            .filter(|p| !p.as_os_str().is_empty())
            .map(Path::to_path_buf)
            .unwrap_or_else(|| PathBuf::from("."))
    });
    let tables = harness::rerank(runs_csv, mode, &dir)?;
    for (d, t) in &tables {
        println!(
            "dimension {d}: {} rows, Friedman statistic {:.6}",
            t.rows.len(),
            t.friedman_statistic
        );
        for (a, r) in t.algorithms.iter().zip(&t.average_ranks) {
            println!("  {a:<16} average rank {r:.4}");
        }
    }
    println!("rank tables written to {}", dir.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = if cli.verbose { "info" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let outcome = match cli.command {
        Command::List => {
            cmd_list();
            Ok(())
        }
        Command::Eval {
            function,
            point,
            mode,
            seed,
        } => cmd_eval(&function, &point, &mode, seed),
        Command::Run(args) => cmd_run(args),
        Command::Verify {
            tolerance,
            resolution,
            output_dir,
        } => cmd_verify(tolerance, resolution, output_dir),
        Command::Surface {
            function,
            resolution,
            mode,
            bounds,
            seed,
            output,
            output_dir,
        } => cmd_surface(
            &function,
            resolution,
            &mode,
            bounds.as_deref(),
            seed,
            output,
            output_dir,
        ),
        Command::Rank {
            runs_csv,
            rank_mode,
            output_dir,
        } => cmd_rank(&runs_csv, &rank_mode, output_dir),
    };

    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
