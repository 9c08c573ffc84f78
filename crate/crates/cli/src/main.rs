use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use dcso_cli::config::ExperimentConfig;
use dcso_cli::{problems, report, runner};

/// Swarm-optimization experiment runner.
#[derive(Parser)]
#[command(name = "dcso", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute the experiment described by a config file and emit reports.
    Run {
        /// Experiment definition (TOML).
        #[arg(long)]
        config: PathBuf,
        /// Where to write reports (overrides the config).
        #[arg(long)]
        output_dir: Option<PathBuf>,
        /// Base seed (overrides the config).
        #[arg(long)]
        seed: Option<u64>,
        /// Independent runs per (problem, algorithm) cell (overrides the
        /// config).
        #[arg(long)]
        runs: Option<usize>,
        /// Suppress per-cell progress output.
        #[arg(long)]
        quiet: bool,
    },
    /// Rebuild summary.csv, pvalues.csv and ranks.csv from a saved runs.csv.
    Report {
        /// Directory holding a previous experiment's artifacts.
        #[arg(long)]
        output_dir: PathBuf,
    },
    /// List the built-in benchmark functions.
    ListProblems,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Run {
            config,
            output_dir,
            seed,
            runs,
            quiet,
        } => {
            let mut experiment = ExperimentConfig::load(&config)?;
            if let Some(dir) = output_dir {
                experiment.output_dir = dir;
            }
            if let Some(seed) = seed {
                experiment.base_seed = seed;
            }
            if let Some(runs) = runs {
                experiment.runs = runs;
                experiment.validate().context("after applying --runs")?;
            }

            let problems = problems::resolve(&experiment.problems)?;
            let algorithms: Vec<_> = experiment
                .algorithms
                .iter()
                .map(|a| a.to_algorithm().map(|algo| (a.label(), algo)))
                .collect::<Result<_>>()?;

            let records = runner::run_experiment(&experiment, &problems, &algorithms, quiet)?;
            report::write_all(&experiment.output_dir, &records)?;
            if !quiet {
                eprintln!("reports written to {}", experiment.output_dir.display());
            }
            Ok(())
        }
        Command::Report { output_dir } => report::rebuild_reports(&output_dir),
        Command::ListProblems => {
            for row in problems::catalog() {
                println!("{row}");
            }
            println!();
            println!("QAP instances are referenced by file path in the config, e.g.:");
            println!("  [[problems]]");
            println!("  qaplib = \"data/qaplib/ste36b.dat\"");
            Ok(())
        }
    }
}
