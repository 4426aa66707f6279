use crate::graph::Graph;
use crate::scalar::Scalar;

use super::{DenseMatrix, Result, SpectralError};

/// `A_α(G) = αD(G) + (1 − α)A(G)` together with its `α`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaMatrix<T> {
    alpha: T,
    matrix: DenseMatrix<T>,
}

impl<T: Scalar> AlphaMatrix<T> {
    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn order(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &DenseMatrix<T> {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.matrix.get(i, j)
    }

    /// `det(xI − A_α)`.
    pub fn char_poly_eval(&self, x: T) -> T {
        self.matrix.char_poly_eval(x)
    }

    pub fn into_matrix(self) -> DenseMatrix<T> {
        self.matrix
    }
}

pub fn alpha_matrix<T: Scalar>(g: &Graph, alpha: T) -> Result<AlphaMatrix<T>> {
    if !(alpha >= T::zero() && alpha <= T::one()) {
        return Err(SpectralError::AlphaOutOfRange(alpha.to_f64_lossy()));
    }
    let n = g.order();
    let off = T::one() - alpha;
    let mut m = DenseMatrix::zeros(n);
    for v in 0..n {
        m.set(v, v, alpha * T::from_usize_lossy(g.degree(v)));
        for u in g.neighbors(v).iter() {
            m.set(v, u, off);
        }
    }
    Ok(AlphaMatrix { alpha, matrix: m })
}

/// `Q(G) = D(G) + A(G) = 2A_{1/2}(G)`.
pub fn signless_laplacian<T: Scalar>(g: &Graph) -> DenseMatrix<T> {
    alpha_matrix(g, T::lit(0.5))
        .expect("1/2 lies in [0, 1]")
        .matrix
        .scale(T::lit(2.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_and_half() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let a0 = alpha_matrix(&g, 0.0f64).unwrap();
        let a1 = alpha_matrix(&g, 1.0f64).unwrap();
        let q = signless_laplacian::<f64>(&g);
        for i in 0..5 {
            for j in 0..5 {
                let adj = if g.has_edge(i, j) { 1.0 } else { 0.0 };
                let deg = if i == j { g.degree(i) as f64 } else { 0.0 };
                assert_eq!(a0.get(i, j), adj);
                assert_eq!(a1.get(i, j), deg);
                assert_eq!(q.get(i, j), adj + deg);
            }
        }
        assert!(a0.matrix().is_symmetric(0.0));
    }

    #[test]
    fn rejects_bad_alpha() {
        let g = Graph::path(3).unwrap();
        assert!(alpha_matrix(&g, -0.1f64).is_err());
        assert!(alpha_matrix(&g, 1.5f64).is_err());
        assert!(alpha_matrix(&g, f64::NAN).is_err());
        assert!(alpha_matrix(&g, 0.3f32).is_ok());
    }
}
