//! Seeded experiment runner: JSON config in, CSV table and JSON manifest out.
//!
//! Every stochastic cell draws its seed from `cell_seed(master, key)` where
//! `key` is the cell column of the CSV, so a sub-grid reproduces exactly the
//! cells of the full grid. Results are assembled in memory in grid order and
//! written once at the end; a config that fails validation writes nothing.

mod config;
mod experiments;
mod params;

pub use config::{ExperimentConfig, ParamValue, SCHEMA_VERSION};
pub use experiments::{Context, Experiment, EXPERIMENTS};

use crate::Execution;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HarnessError {
    #[error("invalid config: {0}")]
    Schema(String),
    #[error("numeric check failed: {0}")]
    Numeric(String),
    #[error("i/o failure: {0}")]
    Io(String),
}

impl HarnessError {
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Numeric(_) => 1,
            HarnessError::Schema(_) => 2,
            HarnessError::Io(_) => 3,
        }
    }
}

// Library errors only arise from out-of-domain parameter values.
impl From<crate::Error> for HarnessError {
    fn from(e: crate::Error) -> Self {
        HarnessError::Schema(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellRecord {
    pub cell: String,
    /// Absent for deterministic cells.
    pub seed: Option<u64>,
}

/// In-memory result table; the first two CSV columns are always `cell,seed`.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub cells: Vec<CellRecord>,
    pub checks: Vec<Check>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        let mut all = vec!["cell".to_string(), "seed".to_string()];
        all.extend(columns.iter().map(|c| c.to_string()));
        Self { columns: all, rows: Vec::new(), cells: Vec::new(), checks: Vec::new() }
    }

    pub fn push(&mut self, cell: String, seed: Option<u64>, values: Vec<String>) {
        assert_eq!(values.len() + 2, self.columns.len(), "row width");
        let mut row = vec![cell.clone(), seed.map(|s| s.to_string()).unwrap_or_default()];
        row.extend(values);
        self.rows.push(row);
        self.cells.push(CellRecord { cell, seed });
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, HarnessError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| HarnessError::Io(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        w.into_inner().map_err(|e| HarnessError::Io(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub parallel_feature: bool,
    pub execution: Execution,
    pub config: ExperimentConfig,
    pub started_unix_ms: u64,
    pub finished_unix_ms: u64,
    pub wall_time_seconds: f64,
    pub csv: PathBuf,
    pub cells: Vec<CellRecord>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl RunManifest {
    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

/// `(label, description)` for every registered experiment.
pub fn list_experiments() -> Vec<(&'static str, &'static str)> {
    EXPERIMENTS.iter().map(|e| (e.label, e.description)).collect()
}

fn unix_ms() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_millis() as u64).unwrap_or(0)
}

/// Validates and runs the experiment without touching the file system.
pub fn execute(config: &ExperimentConfig, execution: Execution) -> Result<Table, HarnessError> {
    if config.schema_version != SCHEMA_VERSION {
        return Err(HarnessError::Schema(format!("unsupported schema_version {}", config.schema_version)));
    }
    let exp = experiments::find(&config.experiment)
        .ok_or_else(|| HarnessError::Schema(format!("unknown experiment '{}'", config.experiment)))?;
    let params = params::Params::new(&config.parameters, exp.parameters)?;
    let ctx = Context { seed: config.seed, tolerances: config.tolerances()?, execution };
    (exp.run)(&params, &ctx)
}

/// Runs `config` and writes `<output_path>/<experiment>.csv` and `<output_path>/manifest.json`.
///
/// Numeric check failures still produce both files; the manifest records them
/// and [`RunManifest::exit_code`] reports 1.
pub fn run(config: &ExperimentConfig, execution: Execution) -> Result<RunManifest, HarnessError> {
    let started_unix_ms = unix_ms();
    let clock = Instant::now();
    let table = execute(config, execution)?;
    let csv_bytes = table.to_csv()?;
    let wall_time_seconds = clock.elapsed().as_secs_f64();
    let csv_path = config.output_path.join(format!("{}.csv", config.experiment));
    let manifest = RunManifest {
        tool: "hlab".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        parallel_feature: cfg!(feature = "parallel"),
        execution,
        config: config.clone(),
        started_unix_ms,
        finished_unix_ms: unix_ms(),
        wall_time_seconds,
        csv: csv_path.clone(),
        passed: table.checks.iter().all(|c| c.passed),
        cells: table.cells,
        checks: table.checks,
    };
    write_outputs(&config.output_path, &csv_path, &csv_bytes, &manifest)?;
    Ok(manifest)
}

fn write_outputs(dir: &Path, csv_path: &Path, csv: &[u8], manifest: &RunManifest) -> Result<(), HarnessError> {
    let io = |e: std::io::Error| HarnessError::Io(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    std::fs::write(csv_path, csv).map_err(io)?;
    let json = serde_json::to_string_pretty(manifest).expect("manifest serializes");
    std::fs::write(dir.join("manifest.json"), json).map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete() {
        let labels: Vec<_> = list_experiments().into_iter().map(|(l, _)| l).collect();
        for want in [
            "exponent-table",
            "norm",
            "verify-inequality",
            "search-constant",
            "choi-kim-scan",
            "diagonal-sharpness",
            "ksz-sharpness",
            "limit-trace",
            "interchange-check",
            "interpolation-check",
        ] {
            assert!(labels.contains(&want), "{want}");
        }
    }

    #[test]
    fn exponent_table_contains_four_thirds() {
        let cfg = ExperimentConfig::new("exponent-table", 0, "unused");
        let t = execute(&cfg, Execution::Sequential).unwrap();
        let row = t.rows.iter().find(|r| r[0] == "m=2,p=inf").unwrap();
        assert_eq!(row[5].parse::<f64>().unwrap(), 4.0 / 3.0);
        assert!(t.checks.iter().all(|c| c.passed));
    }

    #[test]
    fn unknown_parameter_is_schema_error() {
        let mut cfg = ExperimentConfig::new("norm", 0, "unused");
        cfg.parameters.insert("bogus".into(), ParamValue::Int(1));
        assert_eq!(execute(&cfg, Execution::Sequential).unwrap_err().exit_code(), 2);
        cfg = ExperimentConfig::new("no-such", 0, "unused");
        assert_eq!(execute(&cfg, Execution::Sequential).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn out_of_domain_value_is_schema_error() {
        let mut cfg = ExperimentConfig::new("norm", 0, "unused");
        cfg.parameters.insert("p".into(), ParamValue::List(vec![ParamValue::Float(0.5)]));
        assert!(matches!(execute(&cfg, Execution::Sequential), Err(HarnessError::Schema(_))));
    }

    #[test]
    fn norm_default_is_one_half() {
        let mut cfg = ExperimentConfig::new("norm", 3, "unused");
        cfg.parameters.insert("expected".into(), ParamValue::Float(0.5));
        let t = execute(&cfg, Execution::Sequential).unwrap();
        assert!(t.checks.iter().all(|c| c.passed), "{:?}", t.checks);
    }

    #[test]
    fn limit_trace_default() {
        let cfg = ExperimentConfig::new("limit-trace", 0, "unused");
        let t = execute(&cfg, Execution::Sequential).unwrap();
        assert_eq!(t.rows.len(), 3);
        assert!(t.checks.iter().all(|c| c.passed), "{:?}", t.checks);
    }

    #[test]
    fn interpolation_default() {
        let cfg = ExperimentConfig::new("interpolation-check", 0, "unused");
        let t = execute(&cfg, Execution::Sequential).unwrap();
        assert_eq!(t.rows.len(), 20);
        assert!(t.checks.iter().all(|c| c.passed), "{:?}", t.checks);
    }
}
