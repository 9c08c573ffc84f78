//! Quadratic assignment problem support: the QAPLIB text format, the
//! assignment cost, random-key decoding, and the adapter that turns an
//! instance into a continuous objective.
//!
//! A QAPLIB file holds the order `n` followed by two `n x n` matrices. The
//! matrices are stored positionally as `a` and `b`, and the cost of placing
//! item `p(i)` at slot `i` is the usual contraction
//! `sum_{i,k} a[i][k] * b[p(i)][p(k)]`. For the backboard-wiring instances
//! shipped under `data/qaplib/` the first matrix holds the location
//! distances and the second the wire counts, so `p` reads as "the component
//! seated at each location"; the known ste36b reference layout and its cost
//! of 15852 pin this orientation in the tests.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::model::{Bounds, ObjectiveSpec};

/// One parsed QAPLIB instance.
#[derive(Clone, Debug, PartialEq)]
pub struct QapInstance {
    name: String,
    n: usize,
    a: Vec<Vec<f64>>,
    b: Vec<Vec<f64>>,
}

impl QapInstance {
    pub fn new(
        name: impl Into<String>,
        a: Vec<Vec<f64>>,
        b: Vec<Vec<f64>>,
    ) -> Result<Self, QapError> {
        let n = a.len();
        if n == 0
            || a.iter().any(|r| r.len() != n)
            || b.len() != n
            || b.iter().any(|r| r.len() != n)
        {
            return Err(QapError::NotSquare);
        }
        Ok(Self {
            name: name.into(),
            n,
            a,
            b,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// First matrix of the data file.
    pub fn matrix_a(&self) -> &[Vec<f64>] {
        &self.a
    }

    /// Second matrix of the data file.
    pub fn matrix_b(&self) -> &[Vec<f64>] {
        &self.b
    }
}

/// A bijection of `0..n` (stored zero-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self, QapError> {
        let n = mapping.len();
        let mut seen = alloc::vec![false; n];
        for &v in &mapping {
            if v >= n || seen[v] {
                return Err(QapError::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Self(mapping))
    }

    /// Build from the 1-based rank notation used in the literature.
    pub fn from_one_based(ranks: &[usize]) -> Result<Self, QapError> {
        let mapping: Vec<usize> = ranks
            .iter()
            .map(|&r| r.checked_sub(1).ok_or(QapError::NotAPermutation))
            .collect::<Result<_, _>>()?;
        Self::new(mapping)
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v + 1).collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum QapError {
    Empty,
    /// A token failed to parse as a number; `index` counts tokens from zero.
    InvalidToken {
        index: usize,
        text: String,
    },
    /// Token count differs from `1 + 2n^2`.
    WrongTokenCount {
        expected: usize,
        found: usize,
    },
    BadOrder,
    NotSquare,
    NotAPermutation,
}

impl fmt::Display for QapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QapError::Empty => write!(f, "no tokens in QAPLIB input"),
            QapError::InvalidToken { index, text } => {
                write!(f, "token {index} ({text:?}) is not a number")
            }
            QapError::WrongTokenCount { expected, found } => {
                write!(f, "expected {expected} tokens, found {found}")
            }
            QapError::BadOrder => write!(f, "instance order must be a positive integer"),
            QapError::NotSquare => write!(f, "matrices must be square with matching order"),
            QapError::NotAPermutation => write!(f, "mapping is not a permutation"),
        }
    }
}

impl core::error::Error for QapError {}

/// Parse QAPLIB text: the order `n`, then `n^2` entries of matrix `a`, then
/// `n^2` entries of matrix `b`, all whitespace separated.
pub fn parse_qaplib(name: &str, text: &str) -> Result<QapInstance, QapError> {
    let mut tokens = text.split_whitespace();
    let first = tokens.next().ok_or(QapError::Empty)?;
    let n: usize = first.parse().map_err(|_| QapError::InvalidToken {
        index: 0,
        text: String::from(first),
    })?;
    if n == 0 {
        return Err(QapError::BadOrder);
    }
    let expected = 1 + 2 * n * n;

    let mut values = Vec::with_capacity(2 * n * n);
    for (offset, tok) in tokens.enumerate() {
        let index = offset + 1;
        if index >= expected {
            return Err(QapError::WrongTokenCount {
                expected,
                found: index + 1,
            });
        }
        let v: f64 = tok.parse().map_err(|_| QapError::InvalidToken {
            index,
            text: String::from(tok),
        })?;
        values.push(v);
    }
    if values.len() != 2 * n * n {
        return Err(QapError::WrongTokenCount {
            expected,
            found: 1 + values.len(),
        });
    }

    let matrix =
        |flat: &[f64]| -> Vec<Vec<f64>> { flat.chunks_exact(n).map(|row| row.to_vec()).collect() };
    QapInstance::new(name, matrix(&values[..n * n]), matrix(&values[n * n..]))
}

/// Assignment cost `sum_{i,k} a[i][k] * b[p(i)][p(k)]`.
pub fn qap_cost(instance: &QapInstance, p: &Permutation) -> f64 {
    debug_assert_eq!(p.len(), instance.n);
    let map = p.as_slice();
    let mut cost = 0.0;
    for i in 0..instance.n {
        let row = &instance.a[i];
        let pi = map[i];
        for k in 0..instance.n {
            cost += row[k] * instance.b[pi][map[k]];
        }
    }
    cost
}

/// Decode a real vector into a permutation by ranking its entries: output
/// `d` is the ascending rank of `position[d]`, ties broken by the lower
/// index. Any real vector decodes to a valid permutation.
pub fn decode_random_keys(position: &[f64]) -> Permutation {
    let n = position.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| position[i].total_cmp(&position[j]).then(i.cmp(&j)));
    let mut ranks = alloc::vec![0; n];
    for (rank, &idx) in order.iter().enumerate() {
        ranks[idx] = rank;
    }
    Permutation(ranks)
}

/// Wrap an instance as a continuous objective over `[0, 1]^n`: positions are
/// random keys whose ranks form the assignment.
pub fn qap_objective(instance: &QapInstance) -> ObjectiveSpec {
    let bounds = Bounds::uniform(instance.n, 0.0, 1.0);
    let captured = instance.clone();
    ObjectiveSpec::from_fn(instance.name.clone(), bounds, move |x| {
        qap_cost(&captured, &decode_random_keys(x))
    })
}
