//! Dynamic cat swarm optimization.
//!
//! Three changes distinguish this from the original CSO in [`crate::cso`]:
//!
//! * the static mixture ratio is replaced by an iteration-dependent split —
//!   `tracing = floor(i*N/max_iter)` raised to a floor of two, the rest
//!   seeking — so the swarm drifts from exploration into exploitation;
//! * cats are sorted by cost each iteration and the *best* cats are sent to
//!   seeking mode (they keep refining promising regions) while the worst
//!   trace towards the global best;
//! * seeking keeps the best candidate copy outright (greedy, no roulette
//!   wheel) and mutates by a bare random ratio with no fixed step size, and
//!   tracing picks up a linearly decaying inertia weight.

use alloc::vec::Vec;

// in no_std builds float math comes from this trait; test builds pull
// std into the graph and its inherent methods shadow it
#[allow(unused_imports)]
use num_traits::Float;

use crate::model::{
    init_population, update_global_best, Bounds, Cat, Mode, ObjectiveSpec, RandGranularity,
    RunConfig, RunRecorder, RunResult,
};
use crate::rng::RngStream;

/// Parameters of the dynamic variant (population size and iteration budget
/// live in [`RunConfig`]).
#[derive(Clone, Debug)]
pub struct DcsoParams {
    /// Candidate copies generated per seeking cat.
    pub smp: usize,
    /// Fraction of dimensions mutated per copy, in `(0, 1]`.
    pub cdc: f64,
    /// Acceleration constant of the tracing velocity update.
    pub c1: f64,
    /// Inertia weight at the first iteration.
    pub w_max: f64,
    /// Inertia weight at the last iteration.
    pub w_min: f64,
    /// When set, a seeking cat's current position competes with its copies,
    /// so greedy seeking can never increase its cost.
    pub elitist_seeking: bool,
    /// One random factor and sign per copy (default) or fresh draws per
    /// dimension. Coherent per-copy scaling is what keeps the swarm's
    /// relative spread high through the seeking phase; per-dimension draws
    /// average out and contract the population noticeably faster.
    pub rand_granularity: RandGranularity,
    /// Velocity limit as a multiple of the per-dimension box width.
    pub vmax_scale: f64,
}

impl Default for DcsoParams {
    fn default() -> Self {
        Self {
            smp: 5,
            cdc: 0.8,
            c1: 2.05,
            w_max: 0.9,
            w_min: 0.4,
            elitist_seeking: false,
            rand_granularity: RandGranularity::PerCat,
            vmax_scale: 1.0,
        }
    }
}

/// Number of tracing and seeking cats at iteration `i` (1-based):
/// `tcn = floor(i*n/max_iter)` raised to 2 whenever it falls at or below 2,
/// and `scn = n - tcn`.
pub fn compute_mode_counts(i: usize, n: usize, max_iter: usize) -> (usize, usize) {
    debug_assert!(i >= 1 && i <= max_iter && n >= 3);
    let mut tcn = i * n / max_iter;
    if tcn <= 2 {
        tcn = 2;
    }
    (tcn, n - tcn)
}

/// Linear inertia schedule from `w_max` down to `w_min` over the run.
pub fn inertia_weight(i: usize, max_iter: usize, params: &DcsoParams) -> f64 {
    debug_assert!(i >= 1 && i <= max_iter);
    if max_iter == 1 {
        return params.w_max;
    }
    params.w_max - (params.w_max - params.w_min) * (i - 1) as f64 / (max_iter - 1) as f64
}

/// Sort the population ascending by cost (stable, so equal costs keep their
/// original order) and flag the first `scn` cats seeking, the rest tracing.
pub fn assign_modes_sorted(population: &mut [Cat], tcn: usize, scn: usize) {
    debug_assert_eq!(tcn + scn, population.len());
    population.sort_by(|a, b| a.cost.total_cmp(&b.cost));
    for (k, cat) in population.iter_mut().enumerate() {
        cat.mode = Some(if k < scn {
            Mode::Seeking
        } else {
            Mode::Tracing
        });
    }
}

/// One tracing move: inertia-weighted velocity pulled towards the global
/// best, with velocity and position clamps. The cost is refreshed by the
/// caller's evaluation sweep.
pub fn tracing_step(
    cat: &mut Cat,
    best_position: &[f64],
    w: f64,
    params: &DcsoParams,
    rng: &mut RngStream,
    bounds: &Bounds,
) {
    debug_assert_eq!(cat.mode, Some(Mode::Tracing));
    let shared = match params.rand_granularity {
        RandGranularity::PerCat => Some(rng.next_uniform()),
        RandGranularity::PerDimension => None,
    };
    for d in 0..cat.position.len() {
        let r = shared.unwrap_or_else(|| rng.next_uniform());
        cat.velocity[d] =
            w * cat.velocity[d] + params.c1 * r * (best_position[d] - cat.position[d]);
    }
    bounds.clamp_velocity(&mut cat.velocity, params.vmax_scale);
    for d in 0..cat.position.len() {
        cat.position[d] += cat.velocity[d];
    }
    bounds.clamp(&mut cat.position);
}

/// Multiplicative mutation of one coordinate: scale by `1 + sign*ratio`.
#[inline]
pub(crate) fn mutate_coordinate(x: f64, ratio: f64, sign: f64) -> f64 {
    (1.0 + sign * ratio) * x
}

/// Dimensions mutated per copy: round-half-up of `cdc * dim`, kept in
/// `1..=dim`.
pub(crate) fn mutation_count(cdc: f64, dim: usize) -> usize {
    let k = (cdc * dim as f64).round() as usize;
    k.clamp(1, dim)
}

/// One seeking move: spawn `smp` copies, mutate a random subset of
/// dimensions of each by `(1 ± rand)`, clamp and evaluate them, and adopt
/// the cheapest copy (greedy). With `elitist_seeking` the current position
/// competes as well.
pub fn seeking_step(
    cat: &mut Cat,
    params: &DcsoParams,
    rng: &mut RngStream,
    bounds: &Bounds,
    objective: &ObjectiveSpec,
) {
    debug_assert_eq!(cat.mode, Some(Mode::Seeking));
    let dim = cat.position.len();
    let k = mutation_count(params.cdc, dim);

    let mut best_position: Option<Vec<f64>> = None;
    let mut best_cost = if params.elitist_seeking {
        cat.cost
    } else {
        f64::INFINITY
    };

    for _ in 0..params.smp {
        let mut copy = cat.position.clone();
        let dims = rng.sample_indices(dim, k);
        match params.rand_granularity {
            RandGranularity::PerDimension => {
                for &d in &dims {
                    let ratio = rng.next_uniform();
                    let sign = rng.next_sign();
                    copy[d] = mutate_coordinate(copy[d], ratio, sign);
                }
            }
            RandGranularity::PerCat => {
                let ratio = rng.next_uniform();
                let sign = rng.next_sign();
                for &d in &dims {
                    copy[d] = mutate_coordinate(copy[d], ratio, sign);
                }
            }
        }
        bounds.clamp(&mut copy);
        let cost = objective.evaluate(&copy, rng);
        if cost < best_cost {
            best_cost = cost;
            best_position = Some(copy);
        }
    }

    if let Some(position) = best_position {
        cat.position = position;
        cat.cost = best_cost;
    }
}

/// Full dynamic cat swarm run.
pub fn run(objective: &ObjectiveSpec, config: &RunConfig, params: &DcsoParams) -> RunResult {
    let mut rng = config.rng();
    let bounds = objective.bounds();
    let n = config.population_size;

    let mut population = init_population(objective, n, &mut rng, params.vmax_scale);
    let (mut best_position, mut best_cost) =
        update_global_best(&population, (&population[0].position, population[0].cost));

    let mut recorder = RunRecorder::new(config.max_iter, config.record_diversity);
    for i in 1..=config.max_iter {
        let (tcn, scn) = compute_mode_counts(i, n, config.max_iter);
        assign_modes_sorted(&mut population, tcn, scn);
        let w = inertia_weight(i, config.max_iter, params);

        for cat in population.iter_mut() {
            match cat.mode {
                Some(Mode::Seeking) => seeking_step(cat, params, &mut rng, bounds, objective),
                Some(Mode::Tracing) => {
                    tracing_step(cat, &best_position, w, params, &mut rng, bounds)
                }
                None => unreachable!("modes assigned above"),
            }
        }

        for cat in population.iter_mut() {
            bounds.clamp(&mut cat.position);
            cat.cost = objective.evaluate(&cat.position, &mut rng);
        }

        let (pos, cost) = update_global_best(&population, (&best_position, best_cost));
        best_position = pos;
        best_cost = cost;
        recorder.record(best_cost, &population);
    }

    recorder.finish(best_position, best_cost, config.seed)
}
