//! CSV report emission. Numbers are written with Rust's shortest
//! round-trip formatting so re-parsing a report loses nothing.
//!
//! Layout under the output directory:
//!
//! ```text
//! runs.csv                               one row per completed run
//! summary.csv                            mean/std/elapsed per cell
//! pvalues.csv                            rank-sum p: dcso vs each baseline
//! ranks.csv                              per-problem ranks + column means
//! convergence/<problem>/<algo>/run<r>.csv
//! diversity/<problem>/<algo>/run<r>.csv  when recorded
//! ```
//!
//! `summary.csv`, `pvalues.csv` and `ranks.csv` are derived from `runs.csv`,
//! so they can be rebuilt later from saved artifacts.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

use dcso::diagnostics;

use crate::runner::{mean, sample_std, RunRecord};

/// Per-cell run outcomes, the unit the derived reports work from.
pub struct Cell {
    pub problem: String,
    pub algorithm: String,
    pub finals: Vec<f64>,
    pub elapsed: Vec<f64>,
}

/// Persist everything for a finished experiment.
pub fn write_all(dir: &Path, records: &[RunRecord]) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    write_runs(dir, records)?;
    write_traces(dir, records)?;
    let cells = collect_cells(records);
    write_derived(dir, &cells)
}

/// Rebuild the derived reports from a saved `runs.csv`.
pub fn rebuild_reports(dir: &Path) -> Result<()> {
    let cells = read_cells(&dir.join("runs.csv"))?;
    write_derived(dir, &cells)
}

fn write_derived(dir: &Path, cells: &[Cell]) -> Result<()> {
    write_summary(dir, cells)?;
    write_pvalues(dir, cells)?;
    write_ranks(dir, cells)
}

fn write_runs(dir: &Path, records: &[RunRecord]) -> Result<()> {
    let mut out = String::from("problem,algorithm,run,seed,stream,best_cost,elapsed_s\n");
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.problem,
            r.algorithm,
            r.run,
            r.result.seed,
            r.stream,
            r.result.best_cost,
            r.result.elapsed_seconds
        )?;
    }
    fs::write(dir.join("runs.csv"), out).context("writing runs.csv")
}

fn write_traces(dir: &Path, records: &[RunRecord]) -> Result<()> {
    for r in records {
        let conv_dir = dir.join("convergence").join(&r.problem).join(r.algorithm);
        fs::create_dir_all(&conv_dir)?;
        let mut out = String::from("iteration,best_so_far\n");
        for (i, v) in r.result.convergence.iter().enumerate() {
            writeln!(out, "{},{}", i + 1, v)?;
        }
        fs::write(conv_dir.join(format!("run{}.csv", r.run)), out)?;

        if let Some(trace) = &r.result.diversity_trace {
            let div_dir = dir.join("diversity").join(&r.problem).join(r.algorithm);
            fs::create_dir_all(&div_dir)?;
            let mut out = String::from("iteration,diversity\n");
            for (i, v) in trace.iter().enumerate() {
                writeln!(out, "{},{}", i + 1, v)?;
            }
            fs::write(div_dir.join(format!("run{}.csv", r.run)), out)?;
        }
    }
    Ok(())
}

pub fn collect_cells(records: &[RunRecord]) -> Vec<Cell> {
    let mut cells: Vec<Cell> = Vec::new();
    for r in records {
        let found = cells
            .iter_mut()
            .find(|c| c.problem == r.problem && c.algorithm == r.algorithm);
        let cell = match found {
            Some(c) => c,
            None => {
                cells.push(Cell {
                    problem: r.problem.clone(),
                    algorithm: r.algorithm.to_string(),
                    finals: Vec::new(),
                    elapsed: Vec::new(),
                });
                cells.last_mut().unwrap()
            }
        };
        cell.finals.push(r.result.best_cost);
        cell.elapsed.push(r.result.elapsed_seconds);
    }
    cells
}

fn read_cells(runs_csv: &Path) -> Result<Vec<Cell>> {
    let text =
        fs::read_to_string(runs_csv).with_context(|| format!("reading {}", runs_csv.display()))?;
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if header != "problem,algorithm,run,seed,stream,best_cost,elapsed_s" {
        bail!("unexpected runs.csv header: {header:?}");
    }
    let mut cells: Vec<Cell> = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            bail!("runs.csv line {}: expected 7 fields", lineno + 2);
        }
        let best: f64 = fields[5]
            .parse()
            .with_context(|| format!("runs.csv line {}: bad best_cost", lineno + 2))?;
        let elapsed: f64 = fields[6]
            .parse()
            .with_context(|| format!("runs.csv line {}: bad elapsed_s", lineno + 2))?;
        let found = cells
            .iter_mut()
            .find(|c| c.problem == fields[0] && c.algorithm == fields[1]);
        let cell = match found {
            Some(c) => c,
            None => {
                cells.push(Cell {
                    problem: fields[0].to_string(),
                    algorithm: fields[1].to_string(),
                    finals: Vec::new(),
                    elapsed: Vec::new(),
                });
                cells.last_mut().unwrap()
            }
        };
        cell.finals.push(best);
        cell.elapsed.push(elapsed);
    }
    Ok(cells)
}

fn write_summary(dir: &Path, cells: &[Cell]) -> Result<()> {
    let mut out = String::from("problem,algorithm,mean,std,elapsed_s\n");
    for c in cells {
        writeln!(
            out,
            "{},{},{},{},{}",
            c.problem,
            c.algorithm,
            mean(&c.finals),
            sample_std(&c.finals),
            mean(&c.elapsed)
        )?;
    }
    fs::write(dir.join("summary.csv"), out).context("writing summary.csv")
}

/// Rank-sum p-values of the proposed algorithm against every other one,
/// problem by problem. Skipped (header only) when dcso is not in the mix.
fn write_pvalues(dir: &Path, cells: &[Cell]) -> Result<()> {
    let mut out = String::from("problem,algorithm,p_value\n");
    let problems = ordered_problems(cells);
    for problem in &problems {
        let Some(reference) = cells
            .iter()
            .find(|c| &c.problem == problem && c.algorithm == "dcso")
        else {
            continue;
        };
        for c in cells.iter().filter(|c| &c.problem == problem) {
            if c.algorithm == "dcso" {
                continue;
            }
            let p = diagnostics::wilcoxon_rank_sum(&reference.finals, &c.finals);
            writeln!(out, "{},{},{}", problem, c.algorithm, p)?;
        }
    }
    fs::write(dir.join("pvalues.csv"), out).context("writing pvalues.csv")
}

/// Per-problem ranks of the mean final costs (1 = best), with the column
/// averages in a closing `overall` row.
fn write_ranks(dir: &Path, cells: &[Cell]) -> Result<()> {
    let problems = ordered_problems(cells);
    let algorithms = ordered_algorithms(cells);
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(problems.len());
    for problem in &problems {
        let mut row = Vec::with_capacity(algorithms.len());
        for algorithm in &algorithms {
            let cell = cells
                .iter()
                .find(|c| &c.problem == problem && &c.algorithm == algorithm)
                .with_context(|| format!("missing cell {problem}/{algorithm}"))?;
            row.push(mean(&cell.finals));
        }
        table.push(row);
    }
    let (per_row, averages) = diagnostics::friedman_ranks(&table);

    let mut out = String::from("problem");
    for a in &algorithms {
        write!(out, ",{a}")?;
    }
    out.push('\n');
    for (problem, ranks) in problems.iter().zip(&per_row) {
        write!(out, "{problem}")?;
        for r in ranks {
            write!(out, ",{r}")?;
        }
        out.push('\n');
    }
    out.push_str("overall");
    for a in &averages {
        write!(out, ",{a}")?;
    }
    out.push('\n');
    fs::write(dir.join("ranks.csv"), out).context("writing ranks.csv")
}

fn ordered_problems(cells: &[Cell]) -> Vec<String> {
    let mut seen = Vec::new();
    for c in cells {
        if !seen.contains(&c.problem) {
            seen.push(c.problem.clone());
        }
    }
    seen
}

fn ordered_algorithms(cells: &[Cell]) -> Vec<String> {
    let mut seen = Vec::new();
    for c in cells {
        if !seen.contains(&c.algorithm) {
            seen.push(c.algorithm.clone());
        }
    }
    seen
}
