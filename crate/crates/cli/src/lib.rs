//! Experiment harness around the `dcso` optimizers: TOML-configured run
//! matrices, parallel seeded execution, and CSV reports (summaries,
//! rank-sum p-values, Friedman ranks, convergence and diversity traces).

pub mod config;
pub mod problems;
pub mod report;
pub mod runner;
