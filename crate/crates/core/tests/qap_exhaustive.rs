//! Cross-checks of the QAP pipeline against exhaustive enumeration on
//! instances small enough to brute-force.

use dcso::dcso::DcsoParams;
use dcso::model::{run, Algorithm, RunConfig};
use dcso::qap::{qap_cost, qap_objective, Permutation, QapInstance};
use dcso::RngStream;

fn random_instance(n: usize, rng: &mut RngStream) -> QapInstance {
    let matrix = |rng: &mut RngStream| -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let v = rng.next_below(20) as f64;
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        m
    };
    QapInstance::new("toy", matrix(rng), matrix(rng)).unwrap()
}

fn exhaustive_optimum(instance: &QapInstance) -> f64 {
    let n = instance.order();
    let mut mapping: Vec<usize> = (0..n).collect();
    let mut best = f64::INFINITY;
    // Heap's algorithm over all n! assignments
    fn visit(k: usize, mapping: &mut Vec<usize>, instance: &QapInstance, best: &mut f64) {
        if k == 1 {
            let p = Permutation::new(mapping.clone()).unwrap();
            *best = best.min(qap_cost(instance, &p));
            return;
        }
        for i in 0..k {
            visit(k - 1, mapping, instance, best);
            if k % 2 == 0 {
                mapping.swap(i, k - 1);
            } else {
                mapping.swap(0, k - 1);
            }
        }
    }
    visit(n, &mut mapping, instance, &mut best);
    best
}

#[test]
fn optimizer_never_beats_the_enumerated_optimum() {
    let mut rng = RngStream::new(314);
    for round in 0..4 {
        let instance = random_instance(6, &mut rng);
        let optimum = exhaustive_optimum(&instance);
        let objective = qap_objective(&instance);
        let mut cfg = RunConfig::new(
            20,
            300,
            Algorithm::Dcso(DcsoParams::default()),
            1000 + round,
        );
        cfg.record_diversity = false;
        let result = run(&objective, &cfg).unwrap();
        assert!(
            result.best_cost >= optimum - 1e-9,
            "round {round}: reported {} below the true optimum {optimum}",
            result.best_cost
        );
        // the incumbent must decode to its own reported cost
        let decoded = dcso::qap::decode_random_keys(&result.best_position);
        assert_eq!(result.best_cost, qap_cost(&instance, &decoded));
    }
}

#[test]
fn small_instances_are_solved_outright() {
    // order six leaves 720 assignments; a full run should find the optimum
    let mut rng = RngStream::new(2718);
    let instance = random_instance(6, &mut rng);
    let optimum = exhaustive_optimum(&instance);
    let objective = qap_objective(&instance);
    let mut cfg = RunConfig::new(30, 500, Algorithm::Dcso(DcsoParams::default()), 5);
    cfg.record_diversity = false;
    let result = run(&objective, &cfg).unwrap();
    assert_eq!(result.best_cost, optimum);
}
