//! Differential evolution baseline (rand/1/bin with a dithered scale factor).
//!
//! Synchronous generations: all trial vectors are built against the current
//! population, then greedy selection replaces a target whenever its trial is
//! no worse. The scale factor is redrawn uniformly from
//! `[beta_min, beta_max]` for every trial.

use alloc::vec::Vec;

use crate::model::{
    init_population, update_global_best, Bounds, Cat, ObjectiveSpec, RunConfig, RunRecorder,
    RunResult,
};
use crate::rng::RngStream;

#[derive(Clone, Debug)]
pub struct DeParams {
    /// Lower end of the scale-factor dither range.
    pub beta_min: f64,
    /// Upper end of the scale-factor dither range.
    pub beta_max: f64,
    /// Binomial crossover rate.
    pub crossover_rate: f64,
}

impl Default for DeParams {
    fn default() -> Self {
        Self {
            beta_min: 0.2,
            beta_max: 0.8,
            crossover_rate: 0.2,
        }
    }
}

/// Build one rand/1/bin trial vector for `target`: three distinct donors
/// (none equal to the target), mutant `x_r1 + F*(x_r2 - x_r3)`, binomial
/// crossover with one forced dimension, clamped onto the box.
pub fn de_trial_vector(
    target: usize,
    population: &[Cat],
    params: &DeParams,
    rng: &mut RngStream,
    bounds: &Bounds,
) -> Vec<f64> {
    let n = population.len();
    debug_assert!(
        n >= 4,
        "rand/1 mutation needs three donors besides the target"
    );

    let mut donors = [0usize; 3];
    let mut picked = 0;
    while picked < 3 {
        let r = rng.next_below(n);
        if r != target && !donors[..picked].contains(&r) {
            donors[picked] = r;
            picked += 1;
        }
    }
    let [r1, r2, r3] = donors;

    let scale = rng.next_range(params.beta_min, params.beta_max);
    let dim = population[target].position.len();
    let forced = rng.next_below(dim);

    let mut trial = population[target].position.clone();
    for d in 0..dim {
        let crossed = rng.next_uniform() < params.crossover_rate;
        if crossed || d == forced {
            trial[d] = population[r1].position[d]
                + scale * (population[r2].position[d] - population[r3].position[d]);
        }
    }
    bounds.clamp(&mut trial);
    trial
}

/// Full differential evolution run.
pub fn run(objective: &ObjectiveSpec, config: &RunConfig, params: &DeParams) -> RunResult {
    let mut rng = config.rng();
    let bounds = objective.bounds();

    let mut population = init_population(objective, config.population_size, &mut rng, 1.0);
    let (mut best_position, mut best_cost) =
        update_global_best(&population, (&population[0].position, population[0].cost));

    let mut recorder = RunRecorder::new(config.max_iter, config.record_diversity);
    for _ in 1..=config.max_iter {
        let trials: Vec<Vec<f64>> = (0..population.len())
            .map(|i| de_trial_vector(i, &population, params, &mut rng, bounds))
            .collect();

        for (cat, trial) in population.iter_mut().zip(trials) {
            let cost = objective.evaluate(&trial, &mut rng);
            // ties go to the trial, the standard DE convention
            if cost <= cat.cost {
                cat.position = trial;
                cat.cost = cost;
            }
        }

        let (pos, cost) = update_global_best(&population, (&best_position, best_cost));
        best_position = pos;
        best_cost = cost;
        recorder.record(best_cost, &population);
    }

    recorder.finish(best_position, best_cost, config.seed)
}
