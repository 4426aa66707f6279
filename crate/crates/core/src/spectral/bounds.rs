//! Closed-form index values and upper bounds.

use serde::Serialize;

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClosedFormBounds<T> {
    /// Upper bound on the index of an `n`-vertex tree, attained by the star.
    pub star_bound: T,
    /// Upper bound on the index of an `n`-vertex connected bipartite graph
    /// with dissociation number `τ`, attained by `K_{τ,n−τ}`.
    pub bipartite_bound: T,
}

/// `λ_α(K_{a,b}) = ½(α(a+b) + √(α²(a+b)² + 4ab(1 − 2α)))`.
pub fn complete_bipartite_index<T: Scalar>(a: usize, b: usize, alpha: T) -> T {
    let s = T::from_usize_lossy(a + b);
    let prod = T::from_usize_lossy(a * b);
    let half = T::lit(0.5);
    let disc = alpha * alpha * s * s + T::lit(4.0) * prod * (T::one() - T::lit(2.0) * alpha);
    half * (alpha * s + disc.max(T::zero()).sqrt())
}

pub fn star_bound<T: Scalar>(n: usize, alpha: T) -> T {
    complete_bipartite_index(1, n.saturating_sub(1), alpha)
}

pub fn bipartite_bound<T: Scalar>(n: usize, tau: usize, alpha: T) -> T {
    complete_bipartite_index(tau, n.saturating_sub(tau), alpha)
}

pub fn closed_form_bounds<T: Scalar>(n: usize, tau: usize, alpha: T) -> ClosedFormBounds<T> {
    ClosedFormBounds {
        star_bound: star_bound(n, alpha),
        bipartite_bound: bipartite_bound(n, tau, alpha),
    }
}
