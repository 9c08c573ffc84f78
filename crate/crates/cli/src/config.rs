//! Experiment configuration: a TOML file with the run matrix (problems x
//! algorithms x repeats) plus execution knobs. CLI flags override the file.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use dcso::cso::CsoParams;
use dcso::dcso::DcsoParams;
use dcso::de::DeParams;
use dcso::model::{Algorithm, RandGranularity};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problems: Vec<ProblemConfig>,
    pub algorithms: Vec<AlgorithmConfig>,
    #[serde(default = "default_runs")]
    pub runs: usize,
    #[serde(default = "default_population")]
    pub population_size: usize,
    #[serde(default = "default_max_iter")]
    pub max_iter: usize,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    /// Reuse one stream per (problem, run) across algorithms so every
    /// algorithm starts from identical populations.
    #[serde(default)]
    pub paired_seeds: bool,
    /// None: on for benchmark functions, off for QAP instances (decoding
    /// dominates the runtime there).
    #[serde(default)]
    pub record_diversity: Option<bool>,
    /// Maximum concurrent runs; 0 or absent means one per core.
    #[serde(default)]
    pub workers: usize,
}

fn default_runs() -> usize {
    30
}
fn default_population() -> usize {
    30
}
fn default_max_iter() -> usize {
    500
}
fn default_output_dir() -> PathBuf {
    PathBuf::from("results")
}

/// One problem row: either a named benchmark function or a QAPLIB file.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    pub benchmark: Option<String>,
    pub qaplib: Option<PathBuf>,
    /// Optional CEC shift vector file (whitespace-separated reals).
    pub shift: Option<PathBuf>,
    /// Optional CEC rotation matrix file (row-major, whitespace-separated).
    pub rotation: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmConfig {
    pub kind: AlgorithmKind,
    // cat swarm shared knobs
    pub smp: Option<usize>,
    pub cdc: Option<f64>,
    pub c1: Option<f64>,
    pub vmax_scale: Option<f64>,
    pub rand_granularity: Option<Granularity>,
    // dcso
    pub w_max: Option<f64>,
    pub w_min: Option<f64>,
    pub elitist_seeking: Option<bool>,
    // cso
    pub mr: Option<f64>,
    pub srd: Option<f64>,
    pub spc: Option<bool>,
    // de
    pub beta_min: Option<f64>,
    pub beta_max: Option<f64>,
    pub crossover_rate: Option<f64>,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum AlgorithmKind {
    Dcso,
    Cso,
    De,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Granularity {
    PerDimension,
    PerCat,
}

impl From<Granularity> for RandGranularity {
    fn from(g: Granularity) -> Self {
        match g {
            Granularity::PerDimension => RandGranularity::PerDimension,
            Granularity::PerCat => RandGranularity::PerCat,
        }
    }
}

impl AlgorithmConfig {
    /// Materialize the parameter record, falling back to the defaults for
    /// anything unspecified.
    pub fn to_algorithm(&self) -> Result<Algorithm> {
        let unused = |field: &str, kind: &str| -> Result<()> {
            bail!("field {field} does not apply to algorithm kind {kind}")
        };
        Ok(match self.kind {
            AlgorithmKind::Dcso => {
                if self.mr.is_some() || self.srd.is_some() || self.spc.is_some() {
                    unused("mr/srd/spc", "dcso")?;
                }
                let d = DcsoParams::default();
                Algorithm::Dcso(DcsoParams {
                    smp: self.smp.unwrap_or(d.smp),
                    cdc: self.cdc.unwrap_or(d.cdc),
                    c1: self.c1.unwrap_or(d.c1),
                    w_max: self.w_max.unwrap_or(d.w_max),
                    w_min: self.w_min.unwrap_or(d.w_min),
                    elitist_seeking: self.elitist_seeking.unwrap_or(d.elitist_seeking),
                    rand_granularity: self
                        .rand_granularity
                        .map(Into::into)
                        .unwrap_or(d.rand_granularity),
                    vmax_scale: self.vmax_scale.unwrap_or(d.vmax_scale),
                })
            }
            AlgorithmKind::Cso => {
                if self.w_max.is_some() || self.w_min.is_some() || self.elitist_seeking.is_some() {
                    unused("w_max/w_min/elitist_seeking", "cso")?;
                }
                let d = CsoParams::default();
                Algorithm::Cso(CsoParams {
                    mr: self.mr.unwrap_or(d.mr),
                    smp: self.smp.unwrap_or(d.smp),
                    srd: self.srd.unwrap_or(d.srd),
                    cdc: self.cdc.unwrap_or(d.cdc),
                    spc: self.spc.unwrap_or(d.spc),
                    c1: self.c1.unwrap_or(d.c1),
                    rand_granularity: self
                        .rand_granularity
                        .map(Into::into)
                        .unwrap_or(d.rand_granularity),
                    vmax_scale: self.vmax_scale.unwrap_or(d.vmax_scale),
                })
            }
            AlgorithmKind::De => {
                let d = DeParams::default();
                Algorithm::De(DeParams {
                    beta_min: self.beta_min.unwrap_or(d.beta_min),
                    beta_max: self.beta_max.unwrap_or(d.beta_max),
                    crossover_rate: self.crossover_rate.unwrap_or(d.crossover_rate),
                })
            }
        })
    }

    pub fn label(&self) -> &'static str {
        match self.kind {
            AlgorithmKind::Dcso => "dcso",
            AlgorithmKind::Cso => "cso",
            AlgorithmKind::De => "de",
        }
    }
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let config: ExperimentConfig =
            toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.problems.is_empty() {
            bail!("config lists no problems");
        }
        if self.algorithms.is_empty() {
            bail!("config lists no algorithms");
        }
        if self.runs == 0 {
            bail!("runs must be at least 1");
        }
        for p in &self.problems {
            match (&p.benchmark, &p.qaplib) {
                (Some(_), Some(_)) => bail!("a problem is either a benchmark or a qaplib file"),
                (None, None) => bail!("each problem needs a benchmark name or a qaplib path"),
                _ => {}
            }
            if p.qaplib.is_some() && (p.shift.is_some() || p.rotation.is_some()) {
                bail!("shift/rotation data only applies to CEC benchmarks");
            }
        }
        let mut labels: Vec<&str> = self.algorithms.iter().map(|a| a.label()).collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() != self.algorithms.len() {
            bail!("duplicate algorithm kinds in config");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_config() {
        let text = r#"
            runs = 3
            population_size = 12
            max_iter = 50
            base_seed = 7
            paired_seeds = true
            output_dir = "out"

            [[problems]]
            benchmark = "F1"

            [[problems]]
            qaplib = "data/qaplib/ste36a.dat"

            [[algorithms]]
            kind = "dcso"
            smp = 4
            rand_granularity = "per-dimension"

            [[algorithms]]
            kind = "de"
            crossover_rate = 0.5
        "#;
        let cfg: ExperimentConfig = toml::from_str(text).unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.runs, 3);
        assert!(cfg.paired_seeds);
        match cfg.algorithms[0].to_algorithm().unwrap() {
            Algorithm::Dcso(p) => {
                assert_eq!(p.smp, 4);
                assert_eq!(p.rand_granularity, RandGranularity::PerDimension);
                assert_eq!(p.cdc, 0.8);
            }
            _ => panic!("expected dcso"),
        }
        match cfg.algorithms[1].to_algorithm().unwrap() {
            Algorithm::De(p) => assert_eq!(p.crossover_rate, 0.5),
            _ => panic!("expected de"),
        }
    }

    #[test]
    fn rejects_problems_with_both_or_neither_source() {
        let text = r#"
            [[problems]]
            benchmark = "F1"
            qaplib = "x.dat"
            [[algorithms]]
            kind = "dcso"
        "#;
        let cfg: ExperimentConfig = toml::from_str(text).unwrap();
        assert!(cfg.validate().is_err());

        let text = r#"
            [[problems]]
            [[algorithms]]
            kind = "dcso"
        "#;
        let cfg: ExperimentConfig = toml::from_str(text).unwrap();
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn rejects_foreign_parameters() {
        let text = r#"
            [[problems]]
            benchmark = "F1"
            [[algorithms]]
            kind = "de"
            mr = 0.2
        "#;
        let cfg: ExperimentConfig = toml::from_str(text).unwrap();
        // mr parses (shared struct) but DE ignores it silently would be
        // surprising; the dcso/cso kinds reject their foreign fields
        let text2 = r#"
            [[problems]]
            benchmark = "F1"
            [[algorithms]]
            kind = "dcso"
            srd = 0.2
        "#;
        let cfg2: ExperimentConfig = toml::from_str(text2).unwrap();
        assert!(cfg2.algorithms[0].to_algorithm().is_err());
        drop(cfg);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = r#"
            nonsense = 1
            [[problems]]
            benchmark = "F1"
            [[algorithms]]
            kind = "dcso"
        "#;
        assert!(toml::from_str::<ExperimentConfig>(text).is_err());
    }
}
