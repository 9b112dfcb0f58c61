use clap::{Parser, Subcommand};
use hlab::harness::{self, ExperimentConfig, HarnessError, ParamValue};
use hlab::Execution;
use std::path::PathBuf;
use std::process::ExitCode;

/// Numerical experiments on Hardy-Littlewood inequalities.
#[derive(Parser)]
#[command(name = "hlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment from a JSON config, or assemble one from flags.
    Run {
        /// Config file; mutually exclusive with --experiment.
        config: Option<PathBuf>,
        #[arg(long, conflicts_with = "config")]
        experiment: Option<String>,
        /// Parameter override `key=value`; the value is parsed as JSON when possible.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        set: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Disable rayon for this run.
        #[arg(long)]
        sequential: bool,
        /// Write the assembled config instead of running it.
        #[arg(long)]
        dry_run: bool,
    },
    /// List available experiments.
    List,
}

fn assemble(
    config: Option<PathBuf>,
    experiment: Option<String>,
    set: &[String],
    seed: Option<u64>,
    out: Option<PathBuf>,
) -> Result<ExperimentConfig, HarnessError> {
    let mut cfg = match (config, experiment) {
        (Some(path), _) => ExperimentConfig::load(&path)?,
        (None, Some(label)) => ExperimentConfig::new(&label, 0, "out"),
        (None, None) => return Err(HarnessError::Schema("give a config file or --experiment".into())),
    };
    for kv in set {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| HarnessError::Schema(format!("--set expects key=value, got '{kv}'")))?;
        cfg.parameters.insert(k.trim().to_string(), ParamValue::from_cli(v.trim()));
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if let Some(o) = out {
        cfg.output_path = o;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::List => {
            for (label, description) in harness::list_experiments() {
                println!("{label:<22}{description}");
            }
            ExitCode::SUCCESS
        }
        Command::Run { config, experiment, set, seed, out, sequential, dry_run } => {
            let execution = if sequential { Execution::Sequential } else { Execution::Parallel };
            let result = assemble(config, experiment, &set, seed, out).and_then(|cfg| {
                if dry_run {
                    harness::execute(&cfg, execution)?;
                    println!("{}", cfg.to_json());
                    return Ok(None);
                }
                harness::run(&cfg, execution).map(Some)
            });
            match result {
                Ok(None) => ExitCode::SUCCESS,
                Ok(Some(m)) => {
                    for c in &m.checks {
                        println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                    }
                    println!("wrote {} and manifest.json ({:.2}s)", m.csv.display(), m.wall_time_seconds);
                    ExitCode::from(m.exit_code() as u8)
                }
                Err(e) => {
                    eprintln!("hlab: {e}");
                    ExitCode::from(e.exit_code() as u8)
                }
            }
        }
    }
}
