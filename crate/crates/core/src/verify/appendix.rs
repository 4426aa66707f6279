//! Grid check that the characteristic polynomial of the 4×4 bipartite
//! quotient stays positive beyond the index of `K_{2a, b+c}`.
//!
//! The quotient belongs to a bipartite graph with parts `X = X₁ ∪ X₂`,
//! `Y = Y₁ ∪ Y₂`, `|X₁| = |Y₂| = a`, `|Y₁| = b`, `|X₂| = c`, where `X₁–Y₁`
//! and `X₂–Y` are complete and `X₁–Y₂` is a perfect matching.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::spectral::{complete_bipartite_index, DenseMatrix, Partition, QuotientMatrix};

use super::{Counterexample, Outcome, Result};
use crate::graph::Graph;

/// Grid over `a ∈ [a_min, a_max]`, `b, c ∈ [1, min(bc_max, a − 1)]`,
/// `α = 0, α_step, …` below 1 plus `extra_alphas`, and
/// `x ∈ [λ, λ + x_span]` in steps of `x_step`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridParams {
    pub a_min: usize,
    pub a_max: usize,
    pub bc_max: usize,
    pub alpha_step: f64,
    pub extra_alphas: Vec<f64>,
    pub x_step: f64,
    pub x_span: f64,
}

impl Default for GridParams {
    fn default() -> Self {
        GridParams {
            a_min: 2,
            a_max: 12,
            bc_max: 8,
            alpha_step: 0.05,
            extra_alphas: vec![0.99],
            x_step: 0.01,
            x_span: 10.0,
        }
    }
}

impl GridParams {
    pub fn alphas(&self) -> Vec<f64> {
        let steps = (1.0 / self.alpha_step).ceil() as usize;
        let mut v: Vec<f64> = (0..steps)
            .map(|k| k as f64 * self.alpha_step)
            .filter(|&a| a < 1.0 - 1e-12)
            .collect();
        v.extend(self.extra_alphas.iter().copied().filter(|a| (0.0..1.0).contains(a)));
        v
    }

    fn points(&self) -> Vec<(usize, usize, usize, f64)> {
        let alphas = self.alphas();
        let mut out = Vec::new();
        for a in self.a_min.max(2)..=self.a_max {
            let top = self.bc_max.min(a - 1);
            for b in 1..=top {
                for c in 1..=top {
                    for &alpha in &alphas {
                        out.push((a, b, c, alpha));
                    }
                }
            }
        }
        out
    }
}

/// The 4×4 quotient over the blocks `X₁, X₂, Y₁, Y₂`.
pub fn pi1_quotient(a: usize, b: usize, c: usize, alpha: f64) -> QuotientMatrix<f64> {
    let (a, b, c) = (a as f64, b as f64, c as f64);
    let s = 1.0 - alpha;
    let rows = vec![
        vec![alpha * (b + 1.0), 0.0, s * b, s],
        vec![0.0, alpha * (a + b), s * b, s * a],
        vec![s * a, s * c, alpha * (a + c), 0.0],
        vec![s, s * c, 0.0, alpha * (c + 1.0)],
    ];
    let m = DenseMatrix::from_rows(&rows).expect("square");
    let p = Partition::discrete(4);
    QuotientMatrix::from_entries(p, m).expect("4 blocks")
}

/// The graph realizing [`pi1_quotient`], vertices ordered `X₁, X₂, Y₁, Y₂`.
pub fn pi1_graph(a: usize, b: usize, c: usize) -> crate::graph::Result<(Graph, Partition)> {
    let x1: Vec<usize> = (0..a).collect();
    let x2: Vec<usize> = (a..a + c).collect();
    let y1: Vec<usize> = (a + c..a + c + b).collect();
    let y2: Vec<usize> = (a + c + b..2 * a + c + b).collect();
    let mut edges = Vec::new();
    for &u in &x1 {
        edges.extend(y1.iter().map(|&v| (u, v)));
    }
    for &u in &x2 {
        edges.extend(y1.iter().chain(&y2).map(|&v| (u, v)));
    }
    edges.extend(x1.iter().zip(&y2).map(|(&u, &v)| (u, v)));
    let g = Graph::from_edges(2 * a + b + c, edges)?;
    let p = Partition::new(g.order(), vec![x1, x2, y1, y2]).expect("blocks cover the vertices");
    Ok((g, p))
}

#[derive(Clone, Debug, Serialize)]
pub struct GridOutcome {
    pub points: usize,
    pub samples: usize,
    pub min_value: f64,
    /// `(a, b, c, α, x)` where the minimum was observed.
    pub argmin: (usize, usize, usize, f64, f64),
    pub violation: Option<(usize, usize, usize, f64, f64, f64)>,
}

/// Smallest sampled value of `det(xI − Q)` at one grid point.
fn scan(a: usize, b: usize, c: usize, alpha: f64, p: &GridParams) -> (f64, f64, usize) {
    let q = pi1_quotient(a, b, c, alpha);
    let start = complete_bipartite_index(2 * a, b + c, alpha);
    let steps = (p.x_span / p.x_step).round() as usize;
    let mut best = (f64::INFINITY, start);
    for k in 0..=steps {
        let x = start + k as f64 * p.x_step;
        let v = q.char_poly_eval(x);
        if v < best.0 {
            best = (v, x);
        }
    }
    (best.0, best.1, steps + 1)
}

pub fn appendix_grid_check(p: &GridParams) -> GridOutcome {
    let pts = p.points();
    let scanned: Vec<_> = pts.par_iter().map(|&(a, b, c, al)| (a, b, c, al, scan(a, b, c, al, p))).collect();
    let mut out = GridOutcome {
        points: pts.len(),
        samples: 0,
        min_value: f64::INFINITY,
        argmin: (0, 0, 0, 0.0, 0.0),
        violation: None,
    };
    for (a, b, c, alpha, (v, x, k)) in scanned {
        out.samples += k;
        if v < out.min_value {
            out.min_value = v;
            out.argmin = (a, b, c, alpha, x);
        }
        if v <= 0.0 && out.violation.is_none() {
            out.violation = Some((a, b, c, alpha, x, v));
        }
    }
    out
}

pub(super) fn grid_suite(p: &GridParams) -> Result<Outcome> {
    let g = appendix_grid_check(p);
    let mut out = Outcome {
        checked: g.samples,
        ..Default::default()
    };
    out.margin(g.min_value);
    let (a, b, c, alpha, x) = g.argmin;
    out.notes.push(format!(
        "{} grid points; minimum sampled value {:.6} at a={a} b={b} c={c} alpha={alpha:.2} x={x:.4}",
        g.points, g.min_value
    ));
    out.notes.push(
        "domain: a >= 2, 1 <= b, c <= a-1, alpha in [0,1); b <= c is not imposed".into(),
    );
    if let Some((a, b, c, alpha, x, v)) = g.violation {
        let (graph, _) = pi1_graph(a, b, c)?;
        out.fail(
            Counterexample::new(&graph, format!("characteristic polynomial is {v:.6e} at x = {x:.4}"))
                .alpha(alpha)
                .value("x", x)
                .value("value", v),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::quotient_matrix;

    #[test]
    fn quotient_matches_realizing_graph() {
        for (a, b, c) in [(2, 1, 1), (3, 2, 1), (4, 1, 3)] {
            let (g, p) = pi1_graph(a, b, c).unwrap();
            assert!(g.is_bipartite() && g.is_connected());
            for alpha in [0.0, 0.4, 0.8] {
                let q = quotient_matrix(&g, alpha, &p).unwrap();
                let hand = pi1_quotient(a, b, c, alpha);
                for i in 0..4 {
                    for j in 0..4 {
                        assert!((q.entries().get(i, j) - hand.entries().get(i, j)).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn smallest_point_is_positive() {
        let p = GridParams {
            a_max: 2,
            ..Default::default()
        };
        let (v, _, _) = scan(2, 1, 1, 0.0, &p);
        assert!(v > 0.0);
        let g = appendix_grid_check(&p);
        assert!(g.violation.is_none());
        assert_eq!(g.points, 21);
    }
}
