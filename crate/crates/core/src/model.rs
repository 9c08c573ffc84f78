//! Shared data model: search-space bounds, cats (candidate solutions),
//! objectives, run configuration and run results.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cso::{self, CsoParams};
use crate::dcso::{self, DcsoParams};
use crate::de::{self, DeParams};
use crate::rng::RngStream;

/// Box constraints of the search space, one closed interval per dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, ConfigError> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(ConfigError::BadBounds);
        }
        // NaN bounds fail this check as well
        if !lower.iter().zip(&upper).all(|(l, u)| l < u) {
            return Err(ConfigError::BadBounds);
        }
        Ok(Self { lower, upper })
    }

    /// `dim` copies of the interval `[lo, hi]`.
    pub fn uniform(dim: usize, lo: f64, hi: f64) -> Self {
        Self::new(alloc::vec![lo; dim], alloc::vec![hi; dim]).expect("valid uniform bounds")
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Clamp a position onto the box, dimension by dimension.
    pub fn clamp(&self, x: &mut [f64]) {
        for d in 0..x.len() {
            x[d] = x[d].max(self.lower[d]).min(self.upper[d]);
        }
    }

    /// Clamp a velocity to `[-s*w_d, s*w_d]` where `w_d` is the width of
    /// dimension `d`. The full width permits crossing the box in one step
    /// while still bounding divergence.
    pub fn clamp_velocity(&self, v: &mut [f64], scale: f64) {
        for d in 0..v.len() {
            let vmax = scale * (self.upper[d] - self.lower[d]);
            v[d] = v[d].max(-vmax).min(vmax);
        }
    }

    /// A position drawn uniformly inside the box.
    pub fn sample_position(&self, rng: &mut RngStream) -> Vec<f64> {
        (0..self.dim())
            .map(|d| rng.next_range(self.lower[d], self.upper[d]))
            .collect()
    }

    /// A velocity drawn uniformly from `[-s*w_d, s*w_d]` per dimension.
    pub fn sample_velocity(&self, rng: &mut RngStream, scale: f64) -> Vec<f64> {
        (0..self.dim())
            .map(|d| {
                let vmax = scale * (self.upper[d] - self.lower[d]);
                rng.next_range(-vmax, vmax)
            })
            .collect()
    }
}

/// Clamped copy of `x` (the allocating form of [`Bounds::clamp`]).
pub fn clamp_position(x: &[f64], bounds: &Bounds) -> Vec<f64> {
    let mut out = x.to_owned();
    bounds.clamp(&mut out);
    out
}

/// Which movement rule a cat follows this iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Seeking,
    Tracing,
}

/// A candidate solution: position, per-dimension velocity, cached cost and
/// the mode flag assigned each iteration.
#[derive(Clone, Debug)]
pub struct Cat {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub cost: f64,
    pub mode: Option<Mode>,
}

type BoxedEval = Box<dyn Fn(&[f64]) -> f64 + Send + Sync>;

enum EvalFn {
    Plain(fn(&[f64]) -> f64),
    Seeded(fn(&[f64], &mut RngStream) -> f64),
    Dyn(BoxedEval),
}

impl fmt::Debug for EvalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalFn::Plain(_) => f.write_str("EvalFn::Plain"),
            EvalFn::Seeded(_) => f.write_str("EvalFn::Seeded"),
            EvalFn::Dyn(_) => f.write_str("EvalFn::Dyn"),
        }
    }
}

/// A named minimization objective over a bounded box.
///
/// Evaluation threads an [`RngStream`] so that objectives with built-in noise
/// stay reproducible; deterministic objectives simply ignore it.
#[derive(Debug)]
pub struct ObjectiveSpec {
    name: String,
    bounds: Bounds,
    eval: EvalFn,
}

impl ObjectiveSpec {
    pub fn new(name: impl Into<String>, bounds: Bounds, f: fn(&[f64]) -> f64) -> Self {
        Self {
            name: name.into(),
            bounds,
            eval: EvalFn::Plain(f),
        }
    }

    /// An objective whose definition includes random noise.
    pub fn with_noise(
        name: impl Into<String>,
        bounds: Bounds,
        f: fn(&[f64], &mut RngStream) -> f64,
    ) -> Self {
        Self {
            name: name.into(),
            bounds,
            eval: EvalFn::Seeded(f),
        }
    }

    /// An objective backed by a closure (captured instance data).
    pub fn from_fn(
        name: impl Into<String>,
        bounds: Bounds,
        f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            bounds,
            eval: EvalFn::Dyn(Box::new(f)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn dimension(&self) -> usize {
        self.bounds.dim()
    }

    pub fn evaluate(&self, x: &[f64], rng: &mut RngStream) -> f64 {
        debug_assert_eq!(x.len(), self.dimension());
        match &self.eval {
            EvalFn::Plain(f) => f(x),
            EvalFn::Seeded(f) => f(x, rng),
            EvalFn::Dyn(f) => f(x),
        }
    }
}

/// Whether a random factor is redrawn per dimension or shared by all
/// dimensions of one cat/copy within a single update.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RandGranularity {
    #[default]
    PerDimension,
    PerCat,
}

/// Algorithm selector with its parameter record.
#[derive(Clone, Debug)]
pub enum Algorithm {
    Dcso(DcsoParams),
    Cso(CsoParams),
    De(DeParams),
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Dcso(_) => "dcso",
            Algorithm::Cso(_) => "cso",
            Algorithm::De(_) => "de",
        }
    }
}

/// Everything one optimization run needs besides the objective.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub population_size: usize,
    pub max_iter: usize,
    pub algorithm: Algorithm,
    pub seed: u64,
    /// Stream id combined with `seed`; lets a harness derive independent
    /// per-run streams from one base seed.
    pub stream: u64,
    pub record_diversity: bool,
}

impl RunConfig {
    pub fn new(population_size: usize, max_iter: usize, algorithm: Algorithm, seed: u64) -> Self {
        Self {
            population_size,
            max_iter,
            algorithm,
            seed,
            stream: 0,
            record_diversity: true,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.max_iter == 0 {
            return Err(ConfigError::NoIterations);
        }
        // Three distinct DE donors and the tracing-count floor of two both
        // need a minimum population.
        let min_pop = match self.algorithm {
            Algorithm::De(_) => 4,
            _ => 3,
        };
        if self.population_size < min_pop {
            return Err(ConfigError::PopulationTooSmall {
                algorithm: self.algorithm.name(),
                minimum: min_pop,
                got: self.population_size,
            });
        }
        let params_ok = match &self.algorithm {
            Algorithm::Dcso(p) => {
                p.smp >= 1
                    && p.cdc > 0.0
                    && p.cdc <= 1.0
                    && p.w_min <= p.w_max
                    && p.vmax_scale > 0.0
            }
            Algorithm::Cso(p) => {
                (0.0..=1.0).contains(&p.mr)
                    && p.smp >= if p.spc { 2 } else { 1 }
                    && p.srd >= 0.0
                    && p.cdc > 0.0
                    && p.cdc <= 1.0
                    && p.vmax_scale > 0.0
            }
            Algorithm::De(p) => {
                p.beta_min >= 0.0
                    && p.beta_min <= p.beta_max
                    && (0.0..=1.0).contains(&p.crossover_rate)
            }
        };
        if !params_ok {
            return Err(ConfigError::BadParams {
                algorithm: self.algorithm.name(),
            });
        }
        Ok(())
    }

    pub(crate) fn rng(&self) -> RngStream {
        RngStream::substream(self.seed, self.stream)
    }
}

/// Outcome of one run: the incumbent, its cost, per-iteration traces and
/// bookkeeping.
#[derive(Clone, Debug)]
pub struct RunResult {
    pub best_position: Vec<f64>,
    pub best_cost: f64,
    /// Best-so-far cost after each iteration; non-increasing by construction.
    pub convergence: Vec<f64>,
    /// Population diversity after each iteration, when recording is enabled.
    pub diversity_trace: Option<Vec<f64>>,
    /// Wall-clock duration, filled in by the harness that owns a clock.
    pub elapsed_seconds: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigError {
    BadBounds,
    NoIterations,
    PopulationTooSmall {
        algorithm: &'static str,
        minimum: usize,
        got: usize,
    },
    BadParams {
        algorithm: &'static str,
    },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::BadBounds => {
                write!(
                    f,
                    "bounds must be non-empty with lower < upper per dimension"
                )
            }
            ConfigError::NoIterations => write!(f, "max_iter must be at least 1"),
            ConfigError::PopulationTooSmall {
                algorithm,
                minimum,
                got,
            } => write!(
                f,
                "{algorithm} needs a population of at least {minimum}, got {got}"
            ),
            ConfigError::BadParams { algorithm } => {
                write!(f, "invalid parameter record for {algorithm}")
            }
        }
    }
}

impl core::error::Error for ConfigError {}

/// Scatter `n` cats uniformly over the box with uniform velocities in the
/// velocity limits, and evaluate their costs. Mode flags start unset; they
/// are assigned each iteration.
pub fn init_population(
    objective: &ObjectiveSpec,
    n: usize,
    rng: &mut RngStream,
    vmax_scale: f64,
) -> Vec<Cat> {
    let bounds = objective.bounds();
    (0..n)
        .map(|_| {
            let position = bounds.sample_position(rng);
            let velocity = bounds.sample_velocity(rng, vmax_scale);
            let cost = objective.evaluate(&position, rng);
            Cat {
                position,
                velocity,
                cost,
                mode: None,
            }
        })
        .collect()
}

/// Fold a population into the incumbent `(position, cost)`. Ties keep the
/// incumbent so the best-so-far trajectory is deterministic.
pub fn update_global_best(population: &[Cat], incumbent: (&[f64], f64)) -> (Vec<f64>, f64) {
    let (mut best_pos, mut best_cost) = (incumbent.0.to_owned(), incumbent.1);
    for cat in population {
        if cat.cost < best_cost {
            best_cost = cat.cost;
            best_pos.clone_from(&cat.position);
        }
    }
    (best_pos, best_cost)
}

/// Execute one run of the configured algorithm.
pub fn run(objective: &ObjectiveSpec, config: &RunConfig) -> Result<RunResult, ConfigError> {
    config.validate()?;
    Ok(match &config.algorithm {
        Algorithm::Dcso(params) => dcso::run(objective, config, params),
        Algorithm::Cso(params) => cso::run(objective, config, params),
        Algorithm::De(params) => de::run(objective, config, params),
    })
}

/// Per-iteration bookkeeping shared by the run loops.
pub(crate) struct RunRecorder {
    convergence: Vec<f64>,
    diversity: Option<Vec<f64>>,
}

impl RunRecorder {
    pub(crate) fn new(max_iter: usize, record_diversity: bool) -> Self {
        Self {
            convergence: Vec::with_capacity(max_iter),
            diversity: record_diversity.then(|| Vec::with_capacity(max_iter)),
        }
    }

    pub(crate) fn record(&mut self, best_cost: f64, population: &[Cat]) {
        self.convergence.push(best_cost);
        if let Some(trace) = &mut self.diversity {
            trace.push(crate::diagnostics::population_diversity(population));
        }
    }

    pub(crate) fn finish(self, best_position: Vec<f64>, best_cost: f64, seed: u64) -> RunResult {
        RunResult {
            best_position,
            best_cost,
            convergence: self.convergence,
            diversity_trace: self.diversity,
            elapsed_seconds: 0.0,
            seed,
        }
    }
}
