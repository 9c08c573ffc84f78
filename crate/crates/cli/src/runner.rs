//! Experiment execution: the (problem x algorithm x run) matrix with
//! per-run derived random streams, optional parallelism and wall-clock
//! bookkeeping.

use std::time::Instant;

use anyhow::{Context, Result};
use rayon::prelude::*;

use dcso::model::{self, Algorithm, RunConfig, RunResult};

use crate::config::ExperimentConfig;
use crate::problems::Problem;

/// One completed run with its identifying coordinates.
pub struct RunRecord {
    pub problem: String,
    pub algorithm: &'static str,
    pub run: usize,
    pub stream: u64,
    pub result: RunResult,
}

/// Mean/std/elapsed summary over the runs of one (problem, algorithm) cell.
pub struct SummaryRow {
    pub problem: String,
    pub algorithm: String,
    pub mean: f64,
    pub std: f64,
    pub mean_elapsed_seconds: f64,
}

/// Stream id for run `run` of algorithm `algo_idx` on problem
/// `problem_idx`. The packing is injective over the experiment matrix, so
/// no two runs ever share a stream; paired mode drops the algorithm
/// component so every algorithm sees identical draws for a given
/// (problem, run).
pub fn derive_stream(problem_idx: usize, algo_idx: usize, run: usize, paired: bool) -> u64 {
    let algo_part = if paired { 0 } else { algo_idx as u64 + 1 };
    ((problem_idx as u64) << 48) | (algo_part << 32) | run as u64
}

/// Execute the full matrix. Results come back in deterministic
/// (problem, algorithm, run) order regardless of scheduling.
pub fn run_experiment(
    config: &ExperimentConfig,
    problems: &[Problem],
    algorithms: &[(&'static str, Algorithm)],
    quiet: bool,
) -> Result<Vec<RunRecord>> {
    let mut jobs = Vec::new();
    for (pi, problem) in problems.iter().enumerate() {
        for (ai, (label, algorithm)) in algorithms.iter().enumerate() {
            let record_diversity = config.record_diversity.unwrap_or(!problem.is_qap);
            for run in 0..config.runs {
                let run_config = RunConfig {
                    population_size: config.population_size,
                    max_iter: config.max_iter,
                    algorithm: algorithm.clone(),
                    seed: config.base_seed,
                    stream: derive_stream(pi, ai, run, config.paired_seeds),
                    record_diversity,
                };
                // validate before any run starts
                run_config.validate().with_context(|| {
                    format!("invalid configuration for {} on {}", label, problem.name)
                })?;
                jobs.push((pi, *label, run, run_config));
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .context("building worker pool")?;

    let records: Result<Vec<RunRecord>> = pool.install(|| {
        jobs.into_par_iter()
            .map(|(pi, label, run, run_config)| {
                let problem = &problems[pi];
                let stream = run_config.stream;
                let started = Instant::now();
                let mut result = model::run(&problem.objective, &run_config)
                    .with_context(|| format!("run {run} of {label} on {} failed", problem.name))?;
                result.elapsed_seconds = started.elapsed().as_secs_f64();
                Ok(RunRecord {
                    problem: problem.name.clone(),
                    algorithm: label,
                    run,
                    stream,
                    result,
                })
            })
            .collect()
    });
    let records = records?;

    if !quiet {
        for row in summarize(&records) {
            eprintln!(
                "{:8} {:5} mean={:<12.6e} std={:<12.6e} elapsed={:.3}s",
                row.problem, row.algorithm, row.mean, row.std, row.mean_elapsed_seconds
            );
        }
    }
    Ok(records)
}

/// Collapse records into per-cell summaries, preserving first-seen order.
pub fn summarize(records: &[RunRecord]) -> Vec<SummaryRow> {
    let mut order: Vec<(String, String)> = Vec::new();
    for r in records {
        let key = (r.problem.clone(), r.algorithm.to_string());
        if !order.contains(&key) {
            order.push(key);
        }
    }
    order
        .into_iter()
        .map(|(problem, algorithm)| {
            let cell: Vec<&RunRecord> = records
                .iter()
                .filter(|r| r.problem == problem && r.algorithm == algorithm)
                .collect();
            let finals: Vec<f64> = cell.iter().map(|r| r.result.best_cost).collect();
            let elapsed: Vec<f64> = cell.iter().map(|r| r.result.elapsed_seconds).collect();
            SummaryRow {
                problem,
                algorithm,
                mean: mean(&finals),
                std: sample_std(&finals),
                mean_elapsed_seconds: mean(&elapsed),
            }
        })
        .collect()
}

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Sample standard deviation (n - 1 denominator); zero for a single value.
pub fn sample_std(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let m = mean(values);
    let ss: f64 = values.iter().map(|v| (v - m) * (v - m)).sum();
    (ss / (values.len() - 1) as f64).sqrt()
}
