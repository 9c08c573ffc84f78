//! Benchmark objective functions: the 23 classical test functions and the 10
//! functions of the CEC-2019 "100-digit challenge" suite in their base
//! (unshifted, unrotated) forms.
//!
//! The classical set follows the standard published definitions, including
//! the fixed constant tables of the foxholes, Kowalik, Hartmann and Shekel
//! families. The CEC set implements the base mathematical forms with the
//! suite's per-function input scaling and a `+1` bias so every unshifted
//! optimum sits at 1; shift vectors and rotation matrices can be supplied as
//! data to recover the transformed variants (the first three problems are
//! defined without transforms).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{E, PI};
use core::fmt;

// in no_std builds float math comes from this trait; test builds pull
// std into the graph and its inherent methods shadow it
#[allow(unused_imports)]
use num_traits::Float;

use crate::model::{Bounds, ObjectiveSpec};
use crate::rng::RngStream;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Classical,
    Cec2019,
}

/// Identifier of one benchmark function: `F1..F23` or `CEC01..CEC10`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BenchmarkId {
    pub family: Family,
    pub index: usize,
}

impl BenchmarkId {
    pub fn classical(index: usize) -> Result<Self, BenchError> {
        if (1..=23).contains(&index) {
            Ok(Self {
                family: Family::Classical,
                index,
            })
        } else {
            Err(BenchError::UnknownFunction {
                name: format!("F{index}"),
            })
        }
    }

    pub fn cec2019(index: usize) -> Result<Self, BenchError> {
        if (1..=10).contains(&index) {
            Ok(Self {
                family: Family::Cec2019,
                index,
            })
        } else {
            Err(BenchError::UnknownFunction {
                name: format!("CEC{index:02}"),
            })
        }
    }

    /// Parse `"F5"` / `"cec04"` style names.
    pub fn parse(name: &str) -> Result<Self, BenchError> {
        let lower = name.trim().to_lowercase();
        let unknown = || BenchError::UnknownFunction {
            name: String::from(name),
        };
        if let Some(rest) = lower.strip_prefix("cec") {
            let index: usize = rest.parse().map_err(|_| unknown())?;
            Self::cec2019(index).map_err(|_| unknown())
        } else if let Some(rest) = lower.strip_prefix('f') {
            let index: usize = rest.parse().map_err(|_| unknown())?;
            Self::classical(index).map_err(|_| unknown())
        } else {
            Err(unknown())
        }
    }

    pub fn label(&self) -> String {
        match self.family {
            Family::Classical => format!("F{}", self.index),
            Family::Cec2019 => format!("CEC{:02}", self.index),
        }
    }
}

/// Dimension, box range and reference optimum of one benchmark function.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchmarkMeta {
    pub id: BenchmarkId,
    pub dimension: usize,
    pub lower: f64,
    pub upper: f64,
    /// Reference optimum. For a handful of classical functions this is the
    /// conventional rounded literature value, not an exact function minimum.
    pub f_min: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum BenchError {
    UnknownFunction {
        name: String,
    },
    /// Transform data supplied for a function that is never shifted/rotated,
    /// or with mismatched dimensions.
    BadTransform {
        reason: String,
    },
}

impl fmt::Display for BenchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchError::UnknownFunction { name } => write!(f, "unknown benchmark function {name}"),
            BenchError::BadTransform { reason } => write!(f, "bad transform data: {reason}"),
        }
    }
}

impl core::error::Error for BenchError {}

/// Metadata rows; classical dimensions/ranges follow the standard 30-dim
/// suite, CEC rows follow the 100-digit challenge definitions.
pub fn metadata(id: BenchmarkId) -> BenchmarkMeta {
    let (dimension, lower, upper, f_min) = match (id.family, id.index) {
        (Family::Classical, 1) => (30, -100.0, 100.0, 0.0),
        (Family::Classical, 2) => (30, -10.0, 10.0, 0.0),
        (Family::Classical, 3) => (30, -100.0, 100.0, 0.0),
        (Family::Classical, 4) => (30, -100.0, 100.0, 0.0),
        (Family::Classical, 5) => (30, -30.0, 30.0, 0.0),
        (Family::Classical, 6) => (30, -100.0, 100.0, 0.0),
        (Family::Classical, 7) => (30, -1.28, 1.28, 0.0),
        (Family::Classical, 8) => (30, -500.0, 500.0, -418.9829 * 30.0),
        (Family::Classical, 9) => (30, -5.12, 5.12, 0.0),
        (Family::Classical, 10) => (30, -32.0, 32.0, 0.0),
        (Family::Classical, 11) => (30, -600.0, 600.0, 0.0),
        (Family::Classical, 12) => (30, -50.0, 50.0, 0.0),
        (Family::Classical, 13) => (30, -50.0, 50.0, 0.0),
        (Family::Classical, 14) => (2, -65.0, 65.0, 1.0),
        (Family::Classical, 15) => (4, -5.0, 5.0, 0.00030),
        (Family::Classical, 16) => (2, -5.0, 5.0, -1.0316),
        (Family::Classical, 17) => (2, -5.0, 5.0, 0.398),
        (Family::Classical, 18) => (2, -2.0, 2.0, 3.0),
        (Family::Classical, 19) => (3, 1.0, 3.0, -3.86),
        (Family::Classical, 20) => (6, 0.0, 1.0, -3.32),
        (Family::Classical, 21) => (4, 0.0, 10.0, -10.1532),
        (Family::Classical, 22) => (4, 0.0, 10.0, -10.4028),
        (Family::Classical, 23) => (4, 0.0, 10.0, -10.5363),
        (Family::Cec2019, 1) => (9, -8192.0, 8192.0, 1.0),
        (Family::Cec2019, 2) => (16, -16384.0, 16384.0, 1.0),
        (Family::Cec2019, 3) => (18, -4.0, 4.0, 1.0),
        (Family::Cec2019, i) if (4..=10).contains(&i) => (10, -100.0, 100.0, 1.0),
        _ => unreachable!("constructors keep the index in range"),
    };
    BenchmarkMeta {
        id,
        dimension,
        lower,
        upper,
        f_min,
    }
}

/// All benchmark ids in table order.
pub fn all_ids() -> Vec<BenchmarkId> {
    let mut ids: Vec<BenchmarkId> = (1..=23)
        .map(|i| BenchmarkId::classical(i).unwrap())
        .collect();
    ids.extend((1..=10).map(|i| BenchmarkId::cec2019(i).unwrap()));
    ids
}

/// Build the ready-to-run objective for a benchmark id (base CEC forms).
pub fn objective(id: BenchmarkId) -> ObjectiveSpec {
    let meta = metadata(id);
    let bounds = Bounds::uniform(meta.dimension, meta.lower, meta.upper);
    let label = id.label();
    match (id.family, id.index) {
        (Family::Classical, 7) => ObjectiveSpec::with_noise(label, bounds, f7_noisy_quartic),
        (Family::Classical, i) => ObjectiveSpec::new(label, bounds, classical_fn(i)),
        (Family::Cec2019, i) => ObjectiveSpec::new(label, bounds, cec_base_fn(i)),
    }
}

/// Objective for a CEC function with shift/rotation data attached.
pub fn cec_objective(index: usize, transform: CecTransform) -> Result<ObjectiveSpec, BenchError> {
    let id = BenchmarkId::cec2019(index)?;
    let meta = metadata(id);
    transform.validate(index, meta.dimension)?;
    let bounds = Bounds::uniform(meta.dimension, meta.lower, meta.upper);
    Ok(ObjectiveSpec::from_fn(id.label(), bounds, move |x| {
        let z = transform.apply(x, cec_scale(index));
        cec_kernel(index)(&z) + 1.0
    }))
}

/// Evaluate a classical function. The stream is consumed only by F7, whose
/// definition adds uniform noise in `[0, 1)`.
pub fn eval_classical(id: BenchmarkId, x: &[f64], rng: &mut RngStream) -> f64 {
    debug_assert_eq!(id.family, Family::Classical);
    if id.index == 7 {
        f7_noisy_quartic(x, rng)
    } else {
        classical_fn(id.index)(x)
    }
}

/// Evaluate a CEC-2019 function, optionally shift/rotated.
pub fn eval_cec2019(
    index: usize,
    x: &[f64],
    transform: Option<&CecTransform>,
) -> Result<f64, BenchError> {
    BenchmarkId::cec2019(index)?;
    match transform {
        None => Ok(cec_base_fn(index)(x)),
        Some(t) => {
            t.validate(index, x.len())?;
            let z = t.apply(x, cec_scale(index));
            Ok(cec_kernel(index)(&z) + 1.0)
        }
    }
}

// ---------------------------------------------------------------------------
// classical functions
// ---------------------------------------------------------------------------

fn classical_fn(index: usize) -> fn(&[f64]) -> f64 {
    match index {
        1 => f1_sphere,
        2 => f2_schwefel_222,
        3 => f3_schwefel_12,
        4 => f4_schwefel_221,
        5 => f5_rosenbrock,
        6 => f6_step,
        7 => unreachable!("F7 is noisy; dispatched separately"),
        8 => f8_schwefel,
        9 => f9_rastrigin,
        10 => f10_ackley,
        11 => f11_griewank,
        12 => f12_penalized_1,
        13 => f13_penalized_2,
        14 => f14_shekel_foxholes,
        15 => f15_kowalik,
        16 => f16_six_hump_camel,
        17 => f17_branin,
        18 => f18_goldstein_price,
        19 => f19_hartmann3,
        20 => f20_hartmann6,
        21 => f21_shekel5,
        22 => f22_shekel7,
        23 => f23_shekel10,
        _ => unreachable!("constructors keep the index in range"),
    }
}

fn f1_sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn f2_schwefel_222(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

fn f3_schwefel_12(x: &[f64]) -> f64 {
    let mut acc = 0.0;
    let mut prefix = 0.0;
    for &v in x {
        prefix += v;
        acc += prefix * prefix;
    }
    acc
}

fn f4_schwefel_221(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).fold(0.0, f64::max)
}

fn f5_rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

fn f6_step(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5) * (v + 0.5)).sum()
}

fn f7_noisy_quartic(x: &[f64], rng: &mut RngStream) -> f64 {
    let sum: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum();
    sum + rng.next_uniform()
}

fn f8_schwefel(x: &[f64]) -> f64 {
    x.iter().map(|v| -v * v.abs().sqrt().sin()).sum()
}

fn f9_rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

fn f10_ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let rms = (x.iter().map(|v| v * v).sum::<f64>() / n).sqrt();
    let mean_cos = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * rms).exp() - mean_cos.exp() + 20.0 + E
}

fn f11_griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

/// Boundary penalty u(x, a, k, m) shared by the two penalized functions.
fn penalty(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

fn f12_penalized_1(x: &[f64]) -> f64 {
    let n = x.len();
    let y = |v: f64| 1.0 + (v + 1.0) / 4.0;
    let mut sum = 10.0 * (PI * y(x[0])).sin().powi(2);
    for i in 0..n - 1 {
        sum += (y(x[i]) - 1.0).powi(2) * (1.0 + 10.0 * (PI * y(x[i + 1])).sin().powi(2));
    }
    sum += (y(x[n - 1]) - 1.0).powi(2);
    PI / n as f64 * sum + x.iter().map(|&v| penalty(v, 10.0, 100.0, 4)).sum::<f64>()
}

fn f13_penalized_2(x: &[f64]) -> f64 {
    let n = x.len();
    let mut sum = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        sum += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    sum += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
    0.1 * sum + x.iter().map(|&v| penalty(v, 5.0, 100.0, 4)).sum::<f64>()
}

fn f14_shekel_foxholes(x: &[f64]) -> f64 {
    assert_eq!(x.len(), 2);
    const OFFSETS: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];
    let mut inv_sum = 1.0 / 500.0;
    for j in 0..25 {
        let a0 = OFFSETS[j % 5];
        let a1 = OFFSETS[j / 5];
        let denom = (j + 1) as f64 + (x[0] - a0).powi(6) + (x[1] - a1).powi(6);
        inv_sum += 1.0 / denom;
    }
    1.0 / inv_sum
}

fn f15_kowalik(x: &[f64]) -> f64 {
    assert_eq!(x.len(), 4);
    const A: [f64; 11] = [
        0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
    ];
    const B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];
    (0..11)
        .map(|i| {
            let b = 1.0 / B_INV[i];
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (A[i] - model).powi(2)
        })
        .sum()
}

fn f16_six_hump_camel(x: &[f64]) -> f64 {
    assert_eq!(x.len(), 2);
    let (a, b) = (x[0], x[1]);
    4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
}

fn f17_branin(x: &[f64]) -> f64 {
    assert_eq!(x.len(), 2);
    let (a, b) = (x[0], x[1]);
    (b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0).powi(2)
        + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos()
        + 10.0
}

fn f18_goldstein_price(x: &[f64]) -> f64 {
    assert_eq!(x.len(), 2);
    let (a, b) = (x[0], x[1]);
    let t1 = 1.0
        + (a + b + 1.0).powi(2)
            * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let t2 = 30.0
        + (2.0 * a - 3.0 * b).powi(2)
            * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    t1 * t2
}

fn hartmann(x: &[f64], a: &[[f64; 6]], p: &[[f64; 6]], cols: usize) -> f64 {
    const C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
    -(0..4)
        .map(|i| {
            let d: f64 = (0..cols).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            C[i] * (-d).exp()
        })
        .sum::<f64>()
}

fn f19_hartmann3(x: &[f64]) -> f64 {
    assert_eq!(x.len(), 3);
    const A: [[f64; 6]; 4] = [
        [3.0, 10.0, 30.0, 0.0, 0.0, 0.0],
        [0.1, 10.0, 35.0, 0.0, 0.0, 0.0],
        [3.0, 10.0, 30.0, 0.0, 0.0, 0.0],
        [0.1, 10.0, 35.0, 0.0, 0.0, 0.0],
    ];
    const P: [[f64; 6]; 4] = [
        [0.3689, 0.1170, 0.2673, 0.0, 0.0, 0.0],
        [0.4699, 0.4387, 0.7470, 0.0, 0.0, 0.0],
        [0.1091, 0.8732, 0.5547, 0.0, 0.0, 0.0],
        [0.03815, 0.5743, 0.8828, 0.0, 0.0, 0.0],
    ];
    hartmann(x, &A, &P, 3)
}

fn f20_hartmann6(x: &[f64]) -> f64 {
    assert_eq!(x.len(), 6);
    const A: [[f64; 6]; 4] = [
        [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
        [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
        [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
        [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
    ];
    const P: [[f64; 6]; 4] = [
        [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
        [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
        [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
        [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
    ];
    hartmann(x, &A, &P, 6)
}

const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

fn shekel(x: &[f64], m: usize) -> f64 {
    assert_eq!(x.len(), 4);
    -(0..m)
        .map(|i| {
            let d: f64 = (0..4).map(|j| (x[j] - SHEKEL_A[i][j]).powi(2)).sum();
            1.0 / (d + SHEKEL_C[i])
        })
        .sum::<f64>()
}

fn f21_shekel5(x: &[f64]) -> f64 {
    shekel(x, 5)
}

fn f22_shekel7(x: &[f64]) -> f64 {
    shekel(x, 7)
}

fn f23_shekel10(x: &[f64]) -> f64 {
    shekel(x, 10)
}

// ---------------------------------------------------------------------------
// CEC-2019 base forms
// ---------------------------------------------------------------------------

/// Optional shift vector and rotation matrix for the transformable CEC
/// functions (indices 4..=10). Applied as `z = M * (scale * (x - shift))`.
#[derive(Clone, Debug, Default)]
pub struct CecTransform {
    pub shift: Option<Vec<f64>>,
    pub rotation: Option<Vec<Vec<f64>>>,
}

impl CecTransform {
    pub fn validate(&self, index: usize, dim: usize) -> Result<(), BenchError> {
        if (self.shift.is_some() || self.rotation.is_some()) && !(4..=10).contains(&index) {
            return Err(BenchError::BadTransform {
                reason: format!("CEC{index:02} is defined without shift or rotation"),
            });
        }
        if let Some(shift) = &self.shift {
            if shift.len() != dim {
                return Err(BenchError::BadTransform {
                    reason: format!("shift length {} != dimension {dim}", shift.len()),
                });
            }
        }
        if let Some(rot) = &self.rotation {
            if rot.len() != dim || rot.iter().any(|row| row.len() != dim) {
                return Err(BenchError::BadTransform {
                    reason: format!("rotation must be {dim}x{dim}"),
                });
            }
        }
        Ok(())
    }

    fn apply(&self, x: &[f64], scale: f64) -> Vec<f64> {
        let mut z: Vec<f64> = match &self.shift {
            Some(o) => x.iter().zip(o).map(|(v, s)| (v - s) * scale).collect(),
            None => x.iter().map(|v| v * scale).collect(),
        };
        if let Some(rot) = &self.rotation {
            z = rot
                .iter()
                .map(|row| row.iter().zip(&z).map(|(m, v)| m * v).sum())
                .collect();
        }
        z
    }
}

/// Input scaling each transformable function applies before its kernel (the
/// suite maps the common `[-100, 100]` box onto each function's natural
/// domain).
fn cec_scale(index: usize) -> f64 {
    match index {
        4 => 5.12 / 100.0,
        5 => 600.0 / 100.0,
        6 => 0.5 / 100.0,
        7 => 1000.0 / 100.0,
        8 => 1.0,
        9 => 5.0 / 100.0,
        10 => 1.0,
        _ => 1.0,
    }
}

fn cec_kernel(index: usize) -> fn(&[f64]) -> f64 {
    match index {
        1 => chebyshev_fit,
        2 => inverse_hilbert,
        3 => lennard_jones_cluster,
        4 => f9_rastrigin,
        5 => f11_griewank,
        6 => weierstrass,
        7 => modified_schwefel,
        8 => expanded_schaffer_f6,
        9 => happy_cat,
        10 => f10_ackley,
        _ => unreachable!("constructors keep the index in range"),
    }
}

fn cec_base_fn(index: usize) -> fn(&[f64]) -> f64 {
    match index {
        1 => |x| chebyshev_fit(x) + 1.0,
        2 => |x| inverse_hilbert(x) + 1.0,
        3 => |x| lennard_jones_cluster(x) + 1.0,
        4 => |x| scaled(x, 4, f9_rastrigin),
        5 => |x| scaled(x, 5, f11_griewank),
        6 => |x| scaled(x, 6, weierstrass),
        7 => |x| scaled(x, 7, modified_schwefel),
        8 => |x| scaled(x, 8, expanded_schaffer_f6),
        9 => |x| scaled(x, 9, happy_cat),
        10 => |x| scaled(x, 10, f10_ackley),
        _ => unreachable!("constructors keep the index in range"),
    }
}

fn scaled(x: &[f64], index: usize, kernel: fn(&[f64]) -> f64) -> f64 {
    let s = cec_scale(index);
    let z: Vec<f64> = x.iter().map(|v| v * s).collect();
    kernel(&z) + 1.0
}

/// Polynomial fitting penalty: coefficients (highest degree first) must keep
/// the polynomial inside `[-1, 1]` on that interval while reaching the
/// Chebyshev value at `±1.2`.
fn chebyshev_fit(x: &[f64]) -> f64 {
    let n = x.len();
    // T_{n-1}(1.2) via the three-term recurrence
    let mut a = 1.0;
    let mut b = 1.2;
    for _ in 0..n.saturating_sub(2) {
        let next = 2.4 * b - a;
        a = b;
        b = next;
    }
    let target = b;

    let horner = |y: f64| x.iter().skip(1).fold(x[0], |acc, &c| y * acc + c);

    let sample = 32 * n;
    let dy = 2.0 / sample as f64;
    let mut sum = 0.0;
    let mut y = -1.0;
    for _ in 0..=sample {
        let p = horner(y);
        if !(-1.0..=1.0).contains(&p) {
            sum += (1.0 - p.abs()) * (1.0 - p.abs());
        }
        y += dy;
    }
    for endpoint in [1.2, -1.2] {
        let p = horner(endpoint);
        if p < target {
            sum += p * p;
        }
    }
    sum
}

/// Penalty for `x` (read row-major as a square matrix) failing to invert the
/// Hilbert matrix: entrywise absolute deviation of `H * X` from identity.
fn inverse_hilbert(x: &[f64]) -> f64 {
    let b = (x.len() as f64).sqrt() as usize;
    debug_assert_eq!(b * b, x.len());
    let mut sum = 0.0;
    for j in 0..b {
        for k in 0..b {
            let mut y = 0.0;
            for i in 0..b {
                let h = 1.0 / (i + j + 1) as f64;
                y += h * x[k + b * i];
            }
            let target = if j == k { 1.0 } else { 0.0 };
            sum += (y - target).abs();
        }
    }
    sum
}

/// Lennard-Jones potential energy of `len/3` atoms, offset so the known
/// six-atom minimum sits at zero.
fn lennard_jones_cluster(x: &[f64]) -> f64 {
    let atoms = x.len() / 3;
    let mut sum = 0.0;
    for i in 0..atoms.saturating_sub(1) {
        for j in i + 1..atoms {
            let (a, b) = (3 * i, 3 * j);
            let dx = x[a] - x[b];
            let dy = x[a + 1] - x[b + 1];
            let dz = x[a + 2] - x[b + 2];
            let r2 = dx * dx + dy * dy + dz * dz;
            let r6 = r2 * r2 * r2;
            if r6 > 1.0e-10 {
                sum += (1.0 / r6 - 2.0) / r6;
            } else {
                sum += 1.0e20;
            }
        }
    }
    sum + 12.7120622568
}

fn weierstrass(x: &[f64]) -> f64 {
    const A: f64 = 0.5;
    const B: f64 = 3.0;
    const K_MAX: i32 = 20;
    let mut total = 0.0;
    let mut baseline = 0.0;
    for k in 0..=K_MAX {
        baseline += A.powi(k) * (2.0 * PI * B.powi(k) * 0.5).cos();
    }
    for &v in x {
        for k in 0..=K_MAX {
            total += A.powi(k) * (2.0 * PI * B.powi(k) * (v + 0.5)).cos();
        }
    }
    total - x.len() as f64 * baseline
}

fn modified_schwefel(x: &[f64]) -> f64 {
    const OFFSET: f64 = 4.209687462275036e2;
    const BIAS: f64 = 4.189828872724338e2;
    let n = x.len() as f64;
    let mut sum = 0.0;
    for &v in x {
        let z = v + OFFSET;
        if z > 500.0 {
            let w = 500.0 - (z % 500.0);
            sum -= w * w.abs().sqrt().sin();
            sum += (z - 500.0).powi(2) / (10_000.0 * n);
        } else if z < -500.0 {
            let w = (z.abs() % 500.0) - 500.0;
            sum -= w * (500.0 - z.abs() % 500.0).abs().sqrt().sin();
            sum += (z + 500.0).powi(2) / (10_000.0 * n);
        } else {
            sum -= z * z.abs().sqrt().sin();
        }
    }
    sum + BIAS * n
}

fn schaffer_f6(a: f64, b: f64) -> f64 {
    let r2 = a * a + b * b;
    let s = r2.sqrt().sin();
    0.5 + (s * s - 0.5) / (1.0 + 0.001 * r2).powi(2)
}

fn expanded_schaffer_f6(x: &[f64]) -> f64 {
    let n = x.len();
    let mut sum = 0.0;
    for i in 0..n {
        sum += schaffer_f6(x[i], x[(i + 1) % n]);
    }
    sum
}

fn happy_cat(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mut r2 = 0.0;
    let mut linear = 0.0;
    for &v in x {
        let y = v - 1.0;
        r2 += y * y;
        linear += y;
    }
    (r2 - n).abs().powf(0.25) + (0.5 * r2 + linear) / n + 0.5
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn eval(id: BenchmarkId, x: &[f64]) -> f64 {
        let mut rng = RngStream::new(0);
        match id.family {
            Family::Classical => eval_classical(id, x, &mut rng),
            Family::Cec2019 => eval_cec2019(id.index, x, None).unwrap(),
        }
    }

    fn classical(i: usize) -> BenchmarkId {
        BenchmarkId::classical(i).unwrap()
    }

    #[test]
    fn id_parsing_round_trips() {
        assert_eq!(BenchmarkId::parse("F16").unwrap(), classical(16));
        assert_eq!(
            BenchmarkId::parse("cec04").unwrap(),
            BenchmarkId::cec2019(4).unwrap()
        );
        assert_eq!(BenchmarkId::parse("CEC10").unwrap().label(), "CEC10");
        assert!(BenchmarkId::parse("F24").is_err());
        assert!(BenchmarkId::parse("cec11").is_err());
        assert!(BenchmarkId::parse("sphere").is_err());
    }

    #[test]
    fn metadata_matches_table_rows() {
        let m = metadata(classical(1));
        assert_eq!(
            (m.dimension, m.lower, m.upper, m.f_min),
            (30, -100.0, 100.0, 0.0)
        );
        let m = metadata(BenchmarkId::cec2019(1).unwrap());
        assert_eq!(
            (m.dimension, m.lower, m.upper, m.f_min),
            (9, -8192.0, 8192.0, 1.0)
        );
        let m = metadata(classical(8));
        assert_eq!(m.f_min, -418.9829 * 30.0);
    }

    #[test]
    fn optima_of_the_scalable_functions() {
        let zeros = [0.0; 30];
        let ones = [1.0; 30];
        let neg_ones = [-1.0; 30];
        let half_down = [-0.5; 30];
        for (i, point) in [
            (1, &zeros),
            (2, &zeros),
            (3, &zeros),
            (4, &zeros),
            (5, &ones),
            (6, &half_down),
            (9, &zeros),
            (10, &zeros),
            (11, &zeros),
            (12, &neg_ones),
            (13, &ones),
        ] {
            let value = eval(classical(i), point.as_slice());
            assert!(
                value.abs() <= 1e-9,
                "F{i} at its optimum evaluated to {value}"
            );
        }
    }

    #[test]
    fn noisy_quartic_noise_term_is_uniform() {
        let mut rng = RngStream::new(42);
        let zeros = [0.0; 30];
        let draws: Vec<f64> = (0..2000)
            .map(|_| eval_classical(classical(7), &zeros, &mut rng))
            .collect();
        assert!(draws.iter().all(|&v| (0.0..1.0).contains(&v)));
        let mean = draws.iter().sum::<f64>() / draws.len() as f64;
        assert!((mean - 0.5).abs() < 0.05, "noise mean {mean}");
    }

    #[test]
    fn fixed_dimension_optima() {
        // six-hump camel at the table's reported best
        let v = eval(classical(16), &[0.08984, -0.7126]);
        assert_abs_diff_eq!(v, -1.03163, epsilon = 1e-4);
        // goldstein-price at (0, -1)
        let v = eval(classical(18), &[0.0, -1.0]);
        assert_abs_diff_eq!(v, 3.0, epsilon = 1e-9);
        // branin at (pi, 2.275)
        let v = eval(classical(17), &[PI, 2.275]);
        assert_abs_diff_eq!(v, 0.397887, epsilon = 1e-4);
        // kowalik near its fitted optimum
        let v = eval(classical(15), &[0.1928, 0.1908, 0.1231, 0.1358]);
        assert!(v < 3.5e-4, "kowalik near-optimum {v}");
        // shekel m=5 basin at (4,4,4,4)
        let v = eval(classical(21), &[4.0, 4.0, 4.0, 4.0]);
        assert!(v < -10.15, "shekel5 {v}");
        // hartmann6 at the standard optimum
        let v = eval(
            classical(20),
            &[0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573],
        );
        assert_abs_diff_eq!(v, -3.32237, epsilon = 1e-4);
        // foxholes near (-32, -32)
        let v = eval(classical(14), &[-32.0, -32.0]);
        assert_abs_diff_eq!(v, 0.998, epsilon = 1e-3);
    }

    #[test]
    fn cec_base_forms_equal_one_at_origin() {
        for i in 4..=10 {
            let dim = metadata(BenchmarkId::cec2019(i).unwrap()).dimension;
            let x = alloc::vec![0.0; dim];
            let v = eval_cec2019(i, &x, None).unwrap();
            assert!(
                (v - 1.0).abs() <= 1e-9,
                "CEC{i:02} at the origin evaluated to {v}"
            );
        }
    }

    #[test]
    fn chebyshev_zero_at_the_chebyshev_coefficients() {
        // T8 expanded: 128y^8 - 256y^6 + 160y^4 - 32y^2 + 1
        let coeffs = [128.0, 0.0, -256.0, 0.0, 160.0, 0.0, -32.0, 0.0, 1.0];
        let v = eval_cec2019(1, &coeffs, None).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn hilbert_zero_at_the_inverse_matrix() {
        #[rustfmt::skip]
        let inv4 = [
            16.0, -120.0, 240.0, -140.0,
            -120.0, 1200.0, -2700.0, 1680.0,
            240.0, -2700.0, 6480.0, -4200.0,
            -140.0, 1680.0, -4200.0, 2800.0,
        ];
        let v = eval_cec2019(2, &inv4, None).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn symmetry_under_permutation_and_sign_flip() {
        let x = [3.1, -2.0, 0.5, 7.25, -0.125];
        let permuted = [7.25, 0.5, -2.0, 3.1, -0.125];
        let flipped = [-3.1, 2.0, -0.5, -7.25, 0.125];
        for i in [1usize, 9, 10] {
            let id = classical(i);
            let base = eval(id, &x);
            assert_abs_diff_eq!(base, eval(id, &permuted), epsilon = 1e-12);
            assert_abs_diff_eq!(base, eval(id, &flipped), epsilon = 1e-12);
        }
        // the griewank product weights coordinates by index, so only the
        // sign flip leaves it unchanged
        let id = classical(11);
        assert_abs_diff_eq!(eval(id, &x), eval(id, &flipped), epsilon = 1e-12);
    }

    #[test]
    fn transforms_shift_the_optimum() {
        let shift = alloc::vec![1.5; 10];
        let t = CecTransform {
            shift: Some(shift.clone()),
            rotation: None,
        };
        let v = eval_cec2019(4, &shift, Some(&t)).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-9);
        // identity rotation is a no-op
        let mut eye = alloc::vec![alloc::vec![0.0; 10]; 10];
        for (i, row) in eye.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        let t2 = CecTransform {
            shift: Some(shift.clone()),
            rotation: Some(eye),
        };
        let v2 = eval_cec2019(4, &shift, Some(&t2)).unwrap();
        assert_abs_diff_eq!(v2, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn transforms_rejected_for_fixed_functions() {
        let t = CecTransform {
            shift: Some(alloc::vec![0.0; 9]),
            rotation: None,
        };
        assert!(matches!(
            eval_cec2019(1, &[0.0; 9], Some(&t)),
            Err(BenchError::BadTransform { .. })
        ));
    }

    #[test]
    fn transform_dimension_mismatch_is_rejected() {
        let t = CecTransform {
            shift: Some(alloc::vec![0.0; 3]),
            rotation: None,
        };
        assert!(eval_cec2019(4, &[0.0; 10], Some(&t)).is_err());
    }

    #[test]
    fn lower_bound_holds_under_random_sampling() {
        // functions whose stored reference optimum is an exact lower bound;
        // rows with rounded literature optima (F14, F16, F17, F20, F22,
        // F23) are excluded because the true minimum sits slightly below
        // the printed value
        let sound: &[usize] = &[1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 15, 18, 19, 21];
        let mut rng = RngStream::new(2024);
        for &i in sound {
            let id = classical(i);
            let meta = metadata(id);
            let floor = meta.f_min - 1e-9;
            for _ in 0..3000 {
                let x: Vec<f64> = (0..meta.dimension)
                    .map(|_| rng.next_range(meta.lower, meta.upper))
                    .collect();
                let v = eval(id, &x);
                assert!(v >= floor, "F{i} sampled below its optimum: {v}");
            }
        }
        for i in 1..=10 {
            let id = BenchmarkId::cec2019(i).unwrap();
            let meta = metadata(id);
            for _ in 0..1500 {
                let x: Vec<f64> = (0..meta.dimension)
                    .map(|_| rng.next_range(meta.lower, meta.upper))
                    .collect();
                let v = eval(id, &x);
                assert!(v >= 1.0 - 1e-9, "CEC{i:02} sampled below its optimum: {v}");
            }
        }
    }

    #[test]
    fn objective_wires_bounds_and_dimension() {
        let obj = objective(classical(5));
        assert_eq!(obj.dimension(), 30);
        assert_eq!(obj.bounds().lower()[0], -30.0);
        assert_eq!(obj.name(), "F5");
        let mut rng = RngStream::new(0);
        assert_abs_diff_eq!(obj.evaluate(&[1.0; 30], &mut rng), 0.0);
    }
}
