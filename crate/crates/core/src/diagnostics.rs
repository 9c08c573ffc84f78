//! Run diagnostics: dimension-wise population diversity with the derived
//! exploration/exploitation split, and the nonparametric tests used to
//! compare algorithms (two-sided Wilcoxon rank-sum, Friedman average ranks).

use alloc::vec::Vec;

// in no_std builds float math comes from this trait; test builds pull
// std into the graph and its inherent methods shadow it
#[allow(unused_imports)]
use num_traits::Float;

use crate::model::Cat;

/// Diversity of one population snapshot.
#[derive(Clone, Debug)]
pub struct DiversitySnapshot {
    /// Mean absolute distance to the per-dimension median, one entry per
    /// dimension.
    pub div_per_dim: Vec<f64>,
    /// Mean of `div_per_dim`.
    pub div: f64,
}

/// Average exploration/exploitation percentages of a run; the two always sum
/// to 100.
#[derive(Clone, Copy, Debug)]
pub struct PhaseBalance {
    pub xpl_percent: f64,
    pub xpt_percent: f64,
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Dimension-wise diversity: for each dimension the mean absolute distance
/// between every agent and the population median of that dimension, then
/// averaged over dimensions.
pub fn dimension_diversity<S: AsRef<[f64]>>(positions: &[S]) -> DiversitySnapshot {
    let n = positions.len();
    debug_assert!(n >= 1);
    let dim = positions[0].as_ref().len();
    let mut div_per_dim = Vec::with_capacity(dim);
    let mut column = Vec::with_capacity(n);
    for d in 0..dim {
        column.clear();
        column.extend(positions.iter().map(|p| p.as_ref()[d]));
        let med = median(&mut column.clone());
        let dist: f64 = column.iter().map(|&v| (med - v).abs()).sum();
        div_per_dim.push(dist / n as f64);
    }
    let div = div_per_dim.iter().sum::<f64>() / dim as f64;
    DiversitySnapshot { div_per_dim, div }
}

/// Rescale every dimension of a population onto `[0, 1]` (collapsed
/// dimensions map to zero). Recorded diversity traces use this so the
/// measure reflects the swarm's relative spread rather than its absolute
/// scale, which shrinks with convergence.
pub fn min_max_normalize<S: AsRef<[f64]>>(positions: &[S]) -> Vec<Vec<f64>> {
    let n = positions.len();
    if n == 0 {
        return Vec::new();
    }
    let dim = positions[0].as_ref().len();
    let mut out = alloc::vec![alloc::vec![0.0; dim]; n];
    for d in 0..dim {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in positions {
            let v = p.as_ref()[d];
            lo = lo.min(v);
            hi = hi.max(v);
        }
        let width = hi - lo;
        if width > 0.0 {
            for (row, p) in out.iter_mut().zip(positions) {
                row[d] = (p.as_ref()[d] - lo) / width;
            }
        }
    }
    out
}

/// Scale-free diversity of a population, as recorded in run traces: mean
/// absolute deviation around the per-dimension mean of the min-max
/// normalized positions, averaged over dimensions. Mean-centered dispersion
/// keeps stragglers visible after the core of the swarm has contracted,
/// which is what the exploration/exploitation split is meant to expose.
pub fn population_diversity(population: &[Cat]) -> f64 {
    let positions: Vec<&[f64]> = population.iter().map(|c| c.position.as_slice()).collect();
    let normalized = min_max_normalize(&positions);
    let n = normalized.len();
    if n == 0 {
        return 0.0;
    }
    let dim = normalized[0].len();
    let mut total = 0.0;
    for d in 0..dim {
        let mean = normalized.iter().map(|p| p[d]).sum::<f64>() / n as f64;
        total += normalized.iter().map(|p| (p[d] - mean).abs()).sum::<f64>() / n as f64;
    }
    total / dim as f64
}

/// Average exploration (`div / div_max`) and exploitation percentages over a
/// diversity trace. A trace that never moved (all zeros) counts as pure
/// exploitation.
pub fn phase_balance(div_trace: &[f64]) -> PhaseBalance {
    debug_assert!(!div_trace.is_empty());
    let div_max = div_trace.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if div_max <= 0.0 || div_max.is_nan() {
        return PhaseBalance {
            xpl_percent: 0.0,
            xpt_percent: 100.0,
        };
    }
    // dividing first keeps each ratio at or below one in floating point
    let n = div_trace.len() as f64;
    let xpl = div_trace
        .iter()
        .map(|&d| (d / div_max) * 100.0)
        .sum::<f64>()
        / n;
    let xpt = div_trace
        .iter()
        .map(|&d| ((d - div_max).abs() / div_max) * 100.0)
        .sum::<f64>()
        / n;
    PhaseBalance {
        xpl_percent: xpl,
        xpt_percent: xpt,
    }
}

// ---------------------------------------------------------------------------
// Wilcoxon rank-sum
// ---------------------------------------------------------------------------

/// Midranks of the pooled sample `a ++ b` (ties share the average of the
/// ranks they cover).
fn pooled_midranks(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len() + b.len();
    let mut order: Vec<usize> = (0..n).collect();
    let value = |i: usize| if i < a.len() { a[i] } else { b[i - a.len()] };
    order.sort_by(|&i, &j| value(i).total_cmp(&value(j)));
    let mut ranks = alloc::vec![0.0; n];
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && value(order[end]) == value(order[start]) {
            end += 1;
        }
        let midrank = (start + end + 1) as f64 / 2.0;
        for &idx in &order[start..end] {
            ranks[idx] = midrank;
        }
        start = end;
    }
    ranks
}

/// Two-sided Wilcoxon rank-sum (Mann-Whitney) p-value. Uses exact
/// enumeration of rank arrangements for pooled sizes up to twelve and the
/// tie-corrected, continuity-corrected normal approximation beyond that.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64]) -> f64 {
    debug_assert!(!a.is_empty() && !b.is_empty());
    if a.len() + b.len() <= 12 {
        wilcoxon_exact(a, b)
    } else {
        wilcoxon_normal_approx(a, b)
    }
}

/// Exact two-sided p-value by enumerating every assignment of pooled ranks
/// to the first sample: `min(1, 2 * min(P(W <= w), P(W >= w)))`.
pub fn wilcoxon_exact(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len();
    let total = a.len() + b.len();
    assert!(
        total <= 20,
        "exact enumeration is exponential in the pool size"
    );
    let ranks = pooled_midranks(a, b);
    let w_obs: f64 = ranks[..n].iter().sum();

    let mut combos = 0u64;
    let mut le = 0u64;
    let mut ge = 0u64;
    // iterate every subset of the pool with |subset| = n
    for mask in 0u32..(1 << total) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let w: f64 = (0..total)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| ranks[i])
            .sum();
        combos += 1;
        if w <= w_obs + 1e-9 {
            le += 1;
        }
        if w >= w_obs - 1e-9 {
            ge += 1;
        }
    }
    let p_le = le as f64 / combos as f64;
    let p_ge = ge as f64 / combos as f64;
    (2.0 * p_le.min(p_ge)).min(1.0)
}

/// Normal approximation with midranks, tie-corrected variance and a 0.5
/// continuity correction.
pub fn wilcoxon_normal_approx(a: &[f64], b: &[f64]) -> f64 {
    let (n, m) = (a.len() as f64, b.len() as f64);
    let total = a.len() + b.len();
    let ranks = pooled_midranks(a, b);
    let w: f64 = ranks[..a.len()].iter().sum();
    let u = w - n * (n + 1.0) / 2.0;
    let mean = n * m / 2.0;

    // tie correction: subtract sum(t^3 - t) over tie groups
    let mut sorted = ranks.clone();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut start = 0;
    while start < total {
        let mut end = start + 1;
        while end < total && sorted[end] == sorted[start] {
            end += 1;
        }
        let t = (end - start) as f64;
        tie_term += t * t * t - t;
        start = end;
    }
    let nt = total as f64;
    let variance = n * m / 12.0 * (nt + 1.0 - tie_term / (nt * (nt - 1.0)));
    if variance <= 0.0 {
        return 1.0;
    }
    let z = ((u - mean).abs() - 0.5).max(0.0) / variance.sqrt();
    // two-sided tail of the standard normal
    libm::erfc(z / core::f64::consts::SQRT_2)
}

// ---------------------------------------------------------------------------
// Friedman ranks
// ---------------------------------------------------------------------------

/// Rank each row of a problems-by-algorithms table (rank 1 for the smallest
/// value, ties averaged) and return the per-row ranks together with the
/// column means.
pub fn friedman_ranks<S: AsRef<[f64]>>(table: &[S]) -> (Vec<Vec<f64>>, Vec<f64>) {
    assert!(!table.is_empty());
    let cols = table[0].as_ref().len();
    assert!(cols >= 1);
    let mut per_row = Vec::with_capacity(table.len());
    let mut totals = alloc::vec![0.0; cols];
    for row in table {
        let row = row.as_ref();
        debug_assert_eq!(row.len(), cols);
        let mut order: Vec<usize> = (0..cols).collect();
        order.sort_by(|&i, &j| row[i].total_cmp(&row[j]));
        let mut ranks = alloc::vec![0.0; cols];
        let mut start = 0;
        while start < cols {
            let mut end = start + 1;
            while end < cols && row[order[end]] == row[order[start]] {
                end += 1;
            }
            let midrank = (start + end + 1) as f64 / 2.0;
            for &c in &order[start..end] {
                ranks[c] = midrank;
            }
            start = end;
        }
        for (t, r) in totals.iter_mut().zip(&ranks) {
            *t += r;
        }
        per_row.push(ranks);
    }
    let averages = totals.iter().map(|t| t / table.len() as f64).collect();
    (per_row, averages)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    use crate::rng::RngStream;

    #[test]
    fn collapsed_population_has_zero_diversity() {
        let pop = alloc::vec![alloc::vec![1.0, 2.0]; 5];
        assert_eq!(dimension_diversity(&pop).div, 0.0);
    }

    #[test]
    fn three_point_line_diversity() {
        let pop = [[0.0], [1.0], [2.0]];
        let snap = dimension_diversity(&pop);
        assert_abs_diff_eq!(snap.div, 2.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn diversity_is_homogeneous_and_translation_invariant() {
        let pop = [[0.5, -1.0], [2.0, 0.25], [-3.0, 4.0], [1.0, 1.0]];
        let base = dimension_diversity(&pop).div;
        let scaled: Vec<Vec<f64>> = pop
            .iter()
            .map(|p| p.iter().map(|v| 3.0 * v).collect())
            .collect();
        assert_abs_diff_eq!(
            dimension_diversity(&scaled).div,
            3.0 * base,
            epsilon = 1e-12
        );
        let shifted: Vec<Vec<f64>> = pop
            .iter()
            .map(|p| p.iter().map(|v| v + 10.0).collect())
            .collect();
        assert_abs_diff_eq!(dimension_diversity(&shifted).div, base, epsilon = 1e-12);
    }

    #[test]
    fn even_count_median_averages_central_values() {
        let pop = [[0.0], [1.0], [10.0], [11.0]];
        // median 5.5, distances 5.5, 4.5, 4.5, 5.5
        assert_abs_diff_eq!(dimension_diversity(&pop).div, 5.0, epsilon = 1e-12);
    }

    #[test]
    fn normalization_maps_columns_onto_unit_interval() {
        let pop = [[-10.0, 5.0], [10.0, 5.0], [0.0, 5.0]];
        let norm = min_max_normalize(&pop);
        assert_eq!(norm[0][0], 0.0);
        assert_eq!(norm[1][0], 1.0);
        assert_eq!(norm[2][0], 0.5);
        // collapsed column maps to zero
        assert!(norm.iter().all(|r| r[1] == 0.0));
    }

    #[test]
    fn phase_balance_constant_trace_is_pure_exploration() {
        let b = phase_balance(&[3.0, 3.0, 3.0]);
        assert_abs_diff_eq!(b.xpl_percent, 100.0);
        assert_abs_diff_eq!(b.xpt_percent, 0.0);
    }

    #[test]
    fn phase_balance_two_point_trace() {
        let b = phase_balance(&[2.0, 1.0]);
        assert_abs_diff_eq!(b.xpl_percent, 75.0, epsilon = 1e-12);
        assert_abs_diff_eq!(b.xpt_percent, 25.0, epsilon = 1e-12);
    }

    #[test]
    fn phase_balance_degenerate_trace_is_pure_exploitation() {
        let b = phase_balance(&[0.0, 0.0]);
        assert_eq!((b.xpl_percent, b.xpt_percent), (0.0, 100.0));
    }

    #[test]
    fn identical_samples_give_p_one() {
        let a = [4.0, 5.0, 6.0];
        assert_eq!(wilcoxon_rank_sum(&a, &a), 1.0);
    }

    #[test]
    fn fully_separated_triples_give_point_one() {
        let p = wilcoxon_rank_sum(&[1.0, 2.0, 3.0], &[10.0, 11.0, 12.0]);
        assert_abs_diff_eq!(p, 0.1, epsilon = 1e-12);
    }

    #[test]
    fn separated_thirty_vs_thirty_matches_reference_magnitude() {
        let a: Vec<f64> = (0..30).map(|i| i as f64).collect();
        let b: Vec<f64> = (0..30).map(|i| 100.0 + i as f64).collect();
        let p = wilcoxon_rank_sum(&a, &b);
        assert!(
            (p / 3.017e-11 - 1.0).abs() < 0.10,
            "expected about 3.0e-11, got {p:e}"
        );
    }

    #[test]
    fn rank_sum_is_symmetric() {
        let mut rng = RngStream::new(5);
        for _ in 0..50 {
            let a: Vec<f64> = (0..6).map(|_| rng.next_range(0.0, 2.0)).collect();
            let b: Vec<f64> = (0..9).map(|_| rng.next_range(0.5, 2.5)).collect();
            assert_abs_diff_eq!(
                wilcoxon_rank_sum(&a, &b),
                wilcoxon_rank_sum(&b, &a),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn approximation_tracks_exact_for_small_pools() {
        // the rank-sum lattice is coarse at these pool sizes: enumerating
        // every tie-free arrangement with 3 <= n, m and n+m <= 10 puts the
        // largest exact-vs-normal gap at 0.0375 (n = m = 3, mid-range), so
        // 0.04 is the provable envelope
        let mut rng = RngStream::new(7);
        for _ in 0..400 {
            let n = 3 + rng.next_below(3);
            let m = 3 + rng.next_below(8 - n); // keeps n + m <= 10
            let a: Vec<f64> = (0..n).map(|_| rng.next_range(0.0, 1.0)).collect();
            let b: Vec<f64> = (0..m).map(|_| rng.next_range(0.3, 1.3)).collect();
            let exact = wilcoxon_exact(&a, &b);
            let approx = wilcoxon_normal_approx(&a, &b);
            assert!(
                (exact - approx).abs() <= 0.04,
                "exact {exact} vs approx {approx} at n={n} m={m}"
            );
        }
    }

    #[test]
    fn friedman_handles_ties_and_degenerate_columns() {
        let (rows, avg) = friedman_ranks(&[alloc::vec![1.0, 2.0, 1.0, 3.0]]);
        assert_eq!(rows[0], alloc::vec![1.5, 3.0, 1.5, 4.0]);
        assert_abs_diff_eq!(avg[0], 1.5);

        let (rows, avg) = friedman_ranks(&[alloc::vec![5.0], alloc::vec![7.0]]);
        assert!(rows.iter().all(|r| r[0] == 1.0));
        assert_eq!(avg, alloc::vec![1.0]);
    }

    proptest! {
        #[test]
        fn friedman_row_ranks_sum_to_triangle_number(
            rows in proptest::collection::vec(
                proptest::collection::vec(-1e6..1e6f64, 4), 1..12)
        ) {
            let (per_row, _) = friedman_ranks(&rows);
            for ranks in per_row {
                let sum: f64 = ranks.iter().sum();
                prop_assert!((sum - 10.0).abs() < 1e-9); // 4*5/2
            }
        }

        #[test]
        fn diversity_is_never_negative(
            pop in proptest::collection::vec(
                proptest::collection::vec(-1e3..1e3f64, 3), 1..20)
        ) {
            let snap = dimension_diversity(&pop);
            prop_assert!(snap.div >= 0.0);
            prop_assert!(snap.div_per_dim.iter().all(|&d| d >= 0.0));
        }

        #[test]
        fn phases_always_complement(
            trace in proptest::collection::vec(0.0..1e3f64, 1..50)
        ) {
            let b = phase_balance(&trace);
            prop_assert!((b.xpl_percent + b.xpt_percent - 100.0).abs() < 1e-9);
            prop_assert!((0.0..=100.0).contains(&b.xpl_percent));
        }
    }
}
