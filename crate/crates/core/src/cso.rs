//! The original cat swarm optimization, kept as the comparison baseline.
//!
//! Each iteration a fixed fraction of the population (the mixture ratio) is
//! drawn at random into tracing mode; everyone else seeks. Seeking mutates a
//! random subset of dimensions by `(1 ± rand*srd)` per candidate copy and
//! picks the successor by roulette wheel over the candidates' costs; tracing
//! is the plain velocity pull towards the global best, without inertia.
//!
//! One deliberate deviation from the original description: positions are
//! clamped onto the box exactly like the dynamic variant, so the two
//! algorithms face identical feasible regions in experiments.

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

/// Parameters of the original algorithm.
#[derive(Clone, Debug)]
pub struct CsoParams {
    /// Mixture ratio: fraction of cats sent tracing each iteration.
    pub mr: f64,
    /// Candidate copies per seeking cat (includes the current position when
    /// `spc` is set).
    pub smp: usize,
    /// Seeking range of the selected dimension: mutation magnitude factor.
    pub srd: f64,
    /// Fraction of dimensions mutated per copy, in `(0, 1]`.
    pub cdc: f64,
    /// Self-position consideration: current position takes one candidate slot.
    pub spc: bool,
    /// Acceleration constant of the tracing velocity update.
    pub c1: f64,
    /// Fresh random factor per dimension (default) or one per cat/copy.
    pub rand_granularity: RandGranularity,
    /// Velocity limit as a multiple of the per-dimension box width.
    pub vmax_scale: f64,
}

impl Default for CsoParams {
    fn default() -> Self {
        Self {
            mr: 0.2,
            smp: 5,
            srd: 0.2,
            cdc: 0.8,
            spc: true,
            c1: 2.05,
            rand_granularity: RandGranularity::PerDimension,
            vmax_scale: 1.0,
        }
    }
}

/// Number of cats sent tracing under mixture ratio `mr`: round-half-up of
/// `mr * n`.
pub(crate) fn tracing_count(mr: f64, n: usize) -> usize {
    ((mr * n as f64).round() as usize).min(n)
}

/// Flag `round(mr*n)` cats, chosen uniformly without replacement, as tracing;
/// the rest seek.
pub fn assign_modes_random(population: &mut [Cat], mr: f64, rng: &mut RngStream) {
    let n = population.len();
    for cat in population.iter_mut() {
        cat.mode = Some(Mode::Seeking);
    }
    for idx in rng.sample_indices(n, tracing_count(mr, n)) {
        population[idx].mode = Some(Mode::Tracing);
    }
}

/// Roulette weights from candidate costs for a minimization objective:
/// raw `P_i = (max - cost_i) / (max - min)` (all ones when every cost is
/// equal), normalized to sum to one.
pub fn roulette_probabilities(costs: &[f64]) -> Vec<f64> {
    debug_assert!(!costs.is_empty());
    let max = costs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = costs.iter().cloned().fold(f64::INFINITY, f64::min);
    let raw: Vec<f64> = if max == min {
        alloc::vec![1.0; costs.len()]
    } else {
        costs.iter().map(|&c| (max - c) / (max - min)).collect()
    };
    let total: f64 = raw.iter().sum();
    raw.iter().map(|&w| w / total).collect()
}

fn spin_roulette(weights: &[f64], rng: &mut RngStream) -> usize {
    let draw = rng.next_uniform();
    let mut acc = 0.0;
    let mut last_viable = 0;
    for (i, &w) in weights.iter().enumerate() {
        if w > 0.0 {
            last_viable = i;
        }
        acc += w;
        if draw < acc {
            return i;
        }
    }
    // rounding in the cumulative sum; fall back to the last selectable slot
    last_viable
}

/// One seeking move: generate candidate copies mutated by `(1 ± rand*srd)`
/// on a random subset of dimensions, clamp and evaluate them, and sample the
/// successor by roulette wheel.
pub fn seeking_step(
    cat: &mut Cat,
    params: &CsoParams,
    rng: &mut RngStream,
    bounds: &Bounds,
    objective: &ObjectiveSpec,
) {
    debug_assert_eq!(cat.mode, Some(Mode::Seeking));
    let dim = cat.position.len();
    let k = crate::dcso::mutation_count(params.cdc, dim);
    let copies = if params.spc {
        params.smp.saturating_sub(1)
    } else {
        params.smp
    };

    let mut candidates: Vec<(Vec<f64>, f64)> = Vec::with_capacity(params.smp);
    for _ in 0..copies {
        let mut copy = cat.position.clone();
        let dims = rng.sample_indices(dim, k);
        match params.rand_granularity {
            RandGranularity::PerDimension => {
                for &d in &dims {
                    let ratio = rng.next_uniform() * params.srd;
                    let sign = rng.next_sign();
                    copy[d] = crate::dcso::mutate_coordinate(copy[d], ratio, sign);
                }
            }
            RandGranularity::PerCat => {
                let ratio = rng.next_uniform() * params.srd;
                let sign = rng.next_sign();
                for &d in &dims {
                    copy[d] = crate::dcso::mutate_coordinate(copy[d], ratio, sign);
                }
            }
        }
        bounds.clamp(&mut copy);
        let cost = objective.evaluate(&copy, rng);
        candidates.push((copy, cost));
    }
    if params.spc {
        candidates.push((cat.position.clone(), cat.cost));
    }

    let costs: Vec<f64> = candidates.iter().map(|(_, c)| *c).collect();
    let weights = roulette_probabilities(&costs);
    let chosen = spin_roulette(&weights, rng);
    let (position, cost) = candidates.swap_remove(chosen);
    cat.position = position;
    cat.cost = cost;
}

/// One tracing move: velocity pulled towards the global best (no inertia
/// factor), clamped, then applied with a position clamp.
pub fn tracing_step(
    cat: &mut Cat,
    best_position: &[f64],
    params: &CsoParams,
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
        cat.velocity[d] += params.c1 * r * (best_position[d] - cat.position[d]);
    }
    bounds.clamp_velocity(&mut cat.velocity, params.vmax_scale);
    for d in 0..cat.position.len() {
        cat.position[d] += cat.velocity[d];
    }
    bounds.clamp(&mut cat.position);
}

/// Full original cat swarm run.
pub fn run(objective: &ObjectiveSpec, config: &RunConfig, params: &CsoParams) -> RunResult {
    let mut rng = config.rng();
    let bounds = objective.bounds();

    let mut population = init_population(
        objective,
        config.population_size,
        &mut rng,
        params.vmax_scale,
    );
    let (mut best_position, mut best_cost) =
        update_global_best(&population, (&population[0].position, population[0].cost));

    let mut recorder = RunRecorder::new(config.max_iter, config.record_diversity);
    for _ in 1..=config.max_iter {
        assign_modes_random(&mut population, params.mr, &mut rng);

        for cat in population.iter_mut() {
            match cat.mode {
                Some(Mode::Seeking) => seeking_step(cat, params, &mut rng, bounds, objective),
                Some(Mode::Tracing) => tracing_step(cat, &best_position, params, &mut rng, bounds),
                None => unreachable!("modes assigned above"),
            }
        }

        for cat in population.iter_mut() {
            cat.cost = objective.evaluate(&cat.position, &mut rng);
        }

        let (pos, cost) = update_global_best(&population, (&best_position, best_cost));
        best_position = pos;
        best_cost = cost;
        recorder.record(best_cost, &population);
    }

    recorder.finish(best_position, best_cost, config.seed)
}
