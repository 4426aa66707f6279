//! Cyclic Jacobi eigensolver and A_α-index extraction.

use serde::Serialize;

use crate::graph::Graph;
use crate::scalar::Scalar;

use super::{alpha_matrix, AlphaMatrix, DenseMatrix, Result, SpectralError, Tolerances};

/// Full symmetric eigendecomposition, eigenvalues in descending order;
/// `vectors[k]` is the unit eigenvector of `values[k]`.
#[derive(Clone, Debug)]
pub struct Eigen<T> {
    pub values: Vec<T>,
    pub vectors: Vec<Vec<T>>,
    pub sweeps: usize,
}

/// The A_α-index with its Perron vector.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralResult<T> {
    pub lambda: T,
    /// Unit, entrywise nonnegative eigenvector for `lambda`.
    pub perron: Vec<T>,
    /// All eigenvalues in descending order, when requested.
    pub full_spectrum: Option<Vec<T>>,
    /// `‖A x − λ x‖∞` of the returned pair.
    pub residual: T,
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigen<T: Scalar>(m: &DenseMatrix<T>, tol: &Tolerances) -> Result<Eigen<T>> {
    let n = m.dim();
    if n == 0 {
        return Err(SpectralError::Empty);
    }
    let mut a = m.rows();
    let mut v: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    let scale = m.frobenius_norm().max(T::one());
    let threshold = T::tolerance(tol.jacobi_off_diagonal, 10.0) * scale;
    let off = |a: &[Vec<T>]| -> T {
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s = s + a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    let two = T::lit(2.0);
    let mut sweeps = 0;
    while off(&a) >= threshold {
        if sweeps == tol.jacobi_max_sweeps {
            return Err(SpectralError::NonConvergence {
                iterations: sweeps,
                residual: off(&a).to_f64_lossy(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (two * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = T::zero();
                a[q][p] = T::zero();
                for row in v.iter_mut() {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap_or(std::cmp::Ordering::Equal));
    Ok(Eigen {
        values: order.iter().map(|&k| a[k][k]).collect(),
        vectors: order
            .iter()
            .map(|&k| (0..n).map(|i| v[i][k]).collect())
            .collect(),
        sweeps,
    })
}

/// Connected components of the support graph of a symmetric matrix.
fn support_components<T: Scalar>(m: &DenseMatrix<T>) -> Vec<Vec<usize>> {
    let n = m.dim();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut k = 0;
        while k < members.len() {
            let v = members[k];
            k += 1;
            for u in 0..n {
                if comp[u] == usize::MAX && u != v && m.get(v, u) != T::zero() {
                    comp[u] = id;
                    members.push(u);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

fn residual<T: Scalar>(m: &DenseMatrix<T>, lambda: T, x: &[T]) -> T {
    m.mul_vec(x)
        .iter()
        .zip(x)
        .map(|(&ax, &xi)| (ax - lambda * xi).abs())
        .fold(T::zero(), T::max)
}

/// Largest eigenvalue and Perron vector with the default tolerances.
pub fn spectral_radius<T: Scalar>(
    m: &AlphaMatrix<T>,
    connected_hint: bool,
) -> Result<SpectralResult<T>> {
    spectral_radius_with(m.matrix(), connected_hint, false, &Tolerances::default())
}

/// Largest eigenvalue of a symmetric nonnegative matrix.
///
/// The matrix is split along the components of its off-diagonal support and
/// the largest component eigenvalue is returned; the Perron vector is
/// supported on that component. Positivity of the vector is enforced when
/// `connected_hint` is set and the matrix is irreducible.
pub fn spectral_radius_with<T: Scalar>(
    m: &DenseMatrix<T>,
    connected_hint: bool,
    want_full: bool,
    tol: &Tolerances,
) -> Result<SpectralResult<T>> {
    let n = m.dim();
    if n == 0 {
        return Err(SpectralError::Empty);
    }
    let comps = support_components(m);
    let mut best: Option<(T, Vec<T>)> = None;
    for comp in &comps {
        let (lambda, local) = if comp.len() == 1 {
            (m.get(comp[0], comp[0]), vec![T::one()])
        } else {
            let rows: Vec<Vec<T>> = comp
                .iter()
                .map(|&i| comp.iter().map(|&j| m.get(i, j)).collect())
                .collect();
            let sub = DenseMatrix::from_rows(&rows).expect("square by construction");
            let mut e = jacobi_eigen(&sub, tol)?;
            (e.values[0], e.vectors.swap_remove(0))
        };
        if best.as_ref().is_none_or(|(b, _)| lambda > *b) {
            let mut x = vec![T::zero(); n];
            for (&i, &xi) in comp.iter().zip(&local) {
                x[i] = xi;
            }
            best = Some((lambda, x));
        }
    }
    let (lambda, mut perron) = best.expect("at least one component");
    if perron.iter().copied().sum::<T>() < T::zero() {
        perron.iter_mut().for_each(|x| *x = -*x);
    }
    let norm = perron.iter().map(|&x| x * x).sum::<T>().sqrt();
    perron.iter_mut().for_each(|x| *x = *x / norm);

    let res = residual(m, lambda, &perron);
    let res_tol = T::tolerance(tol.eigen_residual, 100.0 * n as f64) * lambda.abs().max(T::one());
    if res > res_tol {
        return Err(SpectralError::Residual {
            residual: res.to_f64_lossy(),
            tol: res_tol.to_f64_lossy(),
        });
    }
    if connected_hint && comps.len() == 1 {
        if let Some((vertex, &value)) = perron.iter().enumerate().find(|(_, &x)| x <= T::zero()) {
            return Err(SpectralError::NotPositive {
                vertex,
                value: value.to_f64_lossy(),
            });
        }
    } else {
        // Entries outside the chosen component are exact zeros; clamp
        // rounding noise inside a component with a repeated top eigenvalue.
        perron.iter_mut().for_each(|x| *x = x.max(T::zero()));
    }
    let full_spectrum = if want_full {
        Some(jacobi_eigen(m, tol)?.values)
    } else {
        None
    };
    Ok(SpectralResult {
        lambda,
        perron,
        full_spectrum,
        residual: res,
    })
}

/// All eigenvalues of a symmetric matrix in descending order.
pub fn full_spectrum<T: Scalar>(m: &DenseMatrix<T>) -> Result<Vec<T>> {
    Ok(jacobi_eigen(m, &Tolerances::default())?.values)
}

/// `λ_α(G)` in double precision.
pub fn index(g: &Graph, alpha: f64) -> Result<f64> {
    let m = alpha_matrix(g, alpha)?;
    Ok(spectral_radius_with(m.matrix(), g.is_connected(), false, &Tolerances::default())?.lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Largest root of det(xI − M) by bisection on [0, max row sum], using
    /// the sign of the characteristic polynomial.
    fn bisect_char_poly(m: &DenseMatrix<f64>) -> f64 {
        let mut lo = 0.0;
        let mut hi = m.max_row_sum() + 1e-9;
        // For a nonnegative matrix the largest root is simple up to ties in
        // disjoint components; step downward to the last sign change first.
        let steps = 20000;
        let h = hi / steps as f64;
        let mut x = hi;
        let mut fx = m.char_poly_eval(x);
        for _ in 0..steps {
            let y = x - h;
            let fy = m.char_poly_eval(y);
            if fy == 0.0 || fy.signum() != fx.signum() {
                lo = y;
                hi = x;
                break;
            }
            x = y;
            fx = fy;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if m.char_poly_eval(mid).signum() == m.char_poly_eval(hi).signum() {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn star_and_cycle() {
        let s = spectral_radius(&alpha_matrix(&Graph::star(4).unwrap(), 0.0f64).unwrap(), true).unwrap();
        assert!((s.lambda - 3f64.sqrt()).abs() < 1e-12);
        let c = spectral_radius(&alpha_matrix(&Graph::cycle(4).unwrap(), 0.0f64).unwrap(), true).unwrap();
        assert!((c.lambda - 2.0).abs() < 1e-12);
        for x in &c.perron {
            assert!((x - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn path3_matches_char_poly_root() {
        let m = alpha_matrix(&Graph::path(3).unwrap(), 0.3f64).unwrap();
        let r = spectral_radius(&m, true).unwrap();
        let oracle = bisect_char_poly(m.matrix());
        assert!((r.lambda - oracle).abs() < 1e-9, "{} vs {oracle}", r.lambda);
        assert!(m.char_poly_eval(r.lambda).abs() < 1e-8);
    }

    #[test]
    fn disconnected_takes_component_max() {
        let g = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::path(2).unwrap())
            .unwrap();
        let m = alpha_matrix(&g, 0.0f64).unwrap();
        let r = spectral_radius(&m, false).unwrap();
        assert!((r.lambda - 2.0).abs() < 1e-12);
        assert_eq!(&r.perron[3..], &[0.0, 0.0]);
        assert!(r.perron.iter().all(|&x| x >= 0.0));
    }

    #[test]
    fn alpha_one_is_max_degree() {
        let g = Graph::star(5).unwrap();
        let r = spectral_radius(&alpha_matrix(&g, 1.0f64).unwrap(), true).unwrap();
        assert_eq!(r.lambda, 4.0);
    }

    #[test]
    fn full_spectrum_sums_to_trace() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let m = alpha_matrix(&g, 0.4f64).unwrap();
        let spec = full_spectrum(m.matrix()).unwrap();
        assert!(spec.windows(2).all(|w| w[0] >= w[1]));
        let sum: f64 = spec.iter().sum();
        assert!((sum - 0.4 * 2.0 * g.size() as f64).abs() < 1e-9);
    }

    #[test]
    fn single_precision_agrees() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let r64 = spectral_radius(&alpha_matrix(&g, 0.25f64).unwrap(), true).unwrap();
        let r32 = spectral_radius(&alpha_matrix(&g, 0.25f32).unwrap(), true).unwrap();
        assert!((r64.lambda - r32.lambda as f64).abs() < 1e-4);
    }

    #[test]
    fn index_of_k34() {
        let g = Graph::complete_bipartite(3, 4).unwrap();
        assert!((index(&g, 0.0).unwrap() - 2.0 * 3f64.sqrt()).abs() < 1e-12);
    }
}
