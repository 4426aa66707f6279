//! Vertex partitions, equitability and quotient matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::scalar::Scalar;

use super::{alpha_matrix, DenseMatrix, Result, SpectralError, Tolerances};

/// Ordered partition of `{0, …, n−1}` into non-empty blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Checks that `blocks` partition `0..n`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(SpectralError::InvalidPartition("empty block".into()));
            }
            for &v in b {
                if v >= n {
                    return Err(SpectralError::InvalidPartition(format!(
                        "vertex {v} out of range for n = {n}"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(SpectralError::InvalidPartition(format!(
                        "vertex {v} appears twice"
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(SpectralError::InvalidPartition(format!(
                "vertex {v} is not covered"
            )));
        }
        Ok(Partition { blocks })
    }

    pub fn from_sets(n: usize, sets: &[VertexSet]) -> Result<Self> {
        Partition::new(n, sets.iter().map(|s| s.to_vec()).collect())
    }

    /// Every vertex in its own block.
    pub fn discrete(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// Parses `"0|1,2,3"` and checks it against `n`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let p: Partition = text.parse()?;
        Partition::new(n, p.blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl FromStr for Partition {
    type Err = SpectralError;

    /// Parses without range checks; see [`Partition::parse`].
    fn from_str(text: &str) -> Result<Self> {
        let blocks = text
            .split('|')
            .map(|b| {
                b.split(',')
                    .map(|v| {
                        v.trim().parse::<usize>().map_err(|_| {
                            SpectralError::InvalidPartition(format!("bad vertex '{}'", v.trim()))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition { blocks })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Whether every vertex of block `i` has the same number of neighbours in
/// block `j`, for all `i`, `j`.
pub fn is_equitable(g: &Graph, blocks: &Partition) -> Result<bool> {
    check_order(g, blocks)?;
    Ok(first_violation(g, blocks).is_none())
}

fn check_order(g: &Graph, blocks: &Partition) -> Result<()> {
    Partition::new(g.order(), blocks.blocks.clone()).map(|_| ())
}

fn first_violation(g: &Graph, blocks: &Partition) -> Option<(usize, usize)> {
    let masks: Vec<VertexSet> = blocks.blocks.iter().map(|b| b.iter().copied().collect()).collect();
    for (i, b) in blocks.blocks.iter().enumerate() {
        for (j, &mj) in masks.iter().enumerate() {
            let count = |v: usize| (g.neighbors(v) & mj).len();
            let c0 = count(b[0]);
            if b.iter().any(|&v| count(v) != c0) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Quotient matrix `(r_ij)` of a matrix over an equitable partition.
#[derive(Clone, Debug)]
pub struct QuotientMatrix<T> {
    partition: Partition,
    entries: DenseMatrix<T>,
}

impl<T: Scalar> QuotientMatrix<T> {
    /// Block row sums of `m`; each must be constant within `tol`.
    pub fn from_matrix(m: &DenseMatrix<T>, partition: Partition, tol: T) -> Result<Self> {
        Partition::new(m.dim(), partition.blocks.clone())?;
        let t = partition.len();
        let mut entries = DenseMatrix::zeros(t);
        for (i, bi) in partition.blocks.iter().enumerate() {
            for (j, bj) in partition.blocks.iter().enumerate() {
                let sums: Vec<T> = bi
                    .iter()
                    .map(|&r| bj.iter().map(|&c| m.get(r, c)).sum())
                    .collect();
                if sums.iter().any(|&s| (s - sums[0]).abs() > tol) {
                    return Err(SpectralError::NotEquitable {
                        row_block: i,
                        col_block: j,
                    });
                }
                entries.set(i, j, sums[0]);
            }
        }
        Ok(QuotientMatrix { partition, entries })
    }

    /// Wraps an explicit matrix, e.g. one written down by hand.
    pub fn from_entries(partition: Partition, entries: DenseMatrix<T>) -> Result<Self> {
        if partition.len() != entries.dim() {
            return Err(SpectralError::InvalidPartition(format!(
                "{} blocks for a {}x{} matrix",
                partition.len(),
                entries.dim(),
                entries.dim()
            )));
        }
        Ok(QuotientMatrix { partition, entries })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn entries(&self) -> &DenseMatrix<T> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.dim()
    }

    pub fn char_poly_eval(&self, x: T) -> T {
        self.entries.char_poly_eval(x)
    }

    /// Spectral radius of the (nonnegative) quotient by power iteration on
    /// `R + sI`, `s` the largest row sum.
    pub fn spectral_radius(&self, tol: &Tolerances) -> Result<T> {
        let t = self.dim();
        if t == 0 {
            return Err(SpectralError::Empty);
        }
        let shift = self.entries.max_row_sum();
        let eps = T::tolerance(tol.power_tol, 50.0);
        let mut x = vec![T::one(); t];
        let mut lambda = T::zero();
        for it in 0..tol.power_max_iterations {
            let mut y = self.entries.mul_vec(&x);
            for (yi, &xi) in y.iter_mut().zip(&x) {
                *yi = *yi + shift * xi;
            }
            let norm = y.iter().fold(T::zero(), |m, &v| m.max(v.abs()));
            if norm == T::zero() {
                return Ok(T::zero());
            }
            y.iter_mut().for_each(|v| *v = *v / norm);
            let next = norm - shift;
            let moved = x.iter().zip(&y).fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()));
            x = y;
            if it > 0 && (next - lambda).abs() <= eps * next.abs().max(T::one()) && moved <= eps {
                return Ok(next);
            }
            lambda = next;
        }
        Err(SpectralError::NonConvergence {
            iterations: tol.power_max_iterations,
            residual: (self.entries.mul_vec(&x).iter().zip(&x))
                .fold(0.0, |m: f64, (&a, &b)| m.max((a - lambda * b).abs().to_f64_lossy())),
        })
    }
}

/// Quotient of `A_α(G)` over an equitable partition.
pub fn quotient_matrix<T: Scalar>(
    g: &Graph,
    alpha: T,
    blocks: &Partition,
) -> Result<QuotientMatrix<T>> {
    check_order(g, blocks)?;
    if let Some((row_block, col_block)) = first_violation(g, blocks) {
        return Err(SpectralError::NotEquitable {
            row_block,
            col_block,
        });
    }
    let m = alpha_matrix(g, alpha)?;
    QuotientMatrix::from_matrix(m.matrix(), blocks.clone(), T::tolerance(1e-12, 16.0))
}
