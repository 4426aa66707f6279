//! Exact dissociation number by branch and bound.
//!
//! A dissociation set induces a subgraph of maximum degree at most 1. The
//! solver keeps every vertex in one of three states (in, out, undecided),
//! propagates forced exclusions, and branches on undecided vertices that sit
//! on an induced `P_3` of the still-live vertices. The bound subtracts one
//! vertex per vertex-disjoint live `P_3` from `|in| + |undecided|`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`all_maximum_dissociation_sets`].
pub const ALL_SETS_MAX_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DissociationError {
    #[error("exhaustive listing is limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error(
        "no maximum dissociation set contains all pendant and degree-2 quasi-pendant vertices \
         (tau = {tau}, best constrained = {constrained:?})"
    )]
    NoGoodSet {
        tau: usize,
        constrained: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DissociationResult {
    pub tau: usize,
    /// Numerically smallest maximum dissociation set (as a bitmask) among the
    /// sets the call searched over.
    pub witness: VertexSet,
    /// Whether the witness contains every pendant vertex and every
    /// quasi-pendant vertex of degree 2.
    pub is_good: bool,
    pub all_maximum_sets: Option<Vec<VertexSet>>,
}

impl DissociationResult {
    /// Splits the witness into its isolated vertices and its matched pairs.
    pub fn split(&self, g: &Graph) -> (VertexSet, Vec<(usize, usize)>) {
        let mut isolated = VertexSet::EMPTY;
        let mut pairs = Vec::new();
        for v in self.witness.iter() {
            match (g.neighbors(v) & self.witness).first() {
                None => isolated.insert(v),
                Some(u) if v < u => pairs.push((v, u)),
                Some(_) => {}
            }
        }
        (isolated, pairs)
    }
}

pub fn is_dissociation_set(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| (g.neighbors(v) & s).len() <= 1)
}

struct Search<'g> {
    g: &'g Graph,
    best: usize,
    best_set: VertexSet,
    found: bool,
}

impl Search<'_> {
    /// Forces exclusions implied by `inn`; `None` when `inn` is infeasible.
    fn propagate(&self, inn: VertexSet, mut und: VertexSet) -> Option<VertexSet> {
        loop {
            let before = und;
            for v in inn.iter() {
                let d = (self.g.neighbors(v) & inn).len();
                if d >= 2 {
                    return None;
                }
                if d == 1 {
                    und = und - self.g.neighbors(v);
                }
            }
            if und == before {
                return Some(und);
            }
        }
    }

    /// Number of vertex-disjoint live `P_3`s found greedily; each costs at
    /// least one undecided vertex.
    fn packing(&self, inn: VertexSet, und: VertexSet) -> usize {
        let live = inn | und;
        let mut free = live;
        let mut count = 0;
        for c in live.iter() {
            if !free.contains(c) {
                continue;
            }
            let nb = self.g.neighbors(c) & free;
            if nb.len() < 2 {
                continue;
            }
            // Prefer endpoints that are undecided so the triple is not all-in.
            let mut pick = VertexSet::EMPTY;
            for u in (nb & und).iter().chain((nb & inn).iter()) {
                if pick.len() == 2 {
                    break;
                }
                pick.insert(u);
            }
            let triple = pick.with(c);
            if (triple & und).is_empty() {
                continue;
            }
            free = free - triple;
            count += 1;
        }
        count
    }

    fn run(&mut self, inn: VertexSet, und: VertexSet) {
        let Some(und) = self.propagate(inn, und) else {
            return;
        };
        let base = inn.len() + und.len();
        if self.found && base <= self.best {
            return;
        }
        let live = inn | und;
        let mut branch: Option<(usize, usize)> = None;
        let mut has_p3 = false;
        for v in live.iter() {
            if (self.g.neighbors(v) & live).len() >= 2 {
                has_p3 = true;
                break;
            }
        }
        if !has_p3 {
            self.best = base;
            self.best_set = live;
            self.found = true;
            return;
        }
        if self.found && base - self.packing(inn, und) <= self.best {
            return;
        }
        for v in und.iter() {
            let nb = self.g.neighbors(v) & live;
            let d = nb.len();
            let on_p3 = d >= 2 || nb.iter().any(|u| (self.g.neighbors(u) & live).len() >= 2);
            if on_p3 && branch.is_none_or(|(_, bd)| d > bd) {
                branch = Some((v, d));
            }
        }
        let (v, _) = branch.expect("a live P3 always has an undecided vertex");
        self.run(inn.with(v), und.without(v));
        self.run(inn, und.without(v));
    }
}

/// Largest dissociation set containing `forced_in` and avoiding `forbidden`.
fn constrained_max(g: &Graph, forced_in: VertexSet, forbidden: VertexSet) -> Option<(usize, VertexSet)> {
    let und = g.vertices() - forced_in - forbidden;
    let mut s = Search {
        g,
        best: 0,
        best_set: VertexSet::EMPTY,
        found: false,
    };
    s.run(forced_in, und);
    s.found.then_some((s.best, s.best_set))
}

/// Numerically smallest optimal set subject to `forced_in`: exclude the
/// highest-index vertices whenever the optimum survives.
fn smallest_optimal(g: &Graph, forced_in: VertexSet, target: usize) -> VertexSet {
    let mut inn = forced_in;
    let mut out = VertexSet::EMPTY;
    for v in (0..g.order()).rev() {
        if inn.contains(v) {
            continue;
        }
        match constrained_max(g, inn, out.with(v)) {
            Some((size, _)) if size == target => out.insert(v),
            _ => inn.insert(v),
        }
    }
    debug_assert!(is_dissociation_set(g, inn) && inn.len() == target);
    inn
}

fn good_core(g: &Graph) -> VertexSet {
    let s = g.structural_sets();
    s.pendants | s.quasi_pendants_deg2
}

/// `τ(G)` alone.
pub fn dissociation_tau(g: &Graph) -> usize {
    constrained_max(g, VertexSet::EMPTY, VertexSet::EMPTY).map_or(0, |(t, _)| t)
}

/// `τ(G)` with the numerically smallest maximum dissociation set.
pub fn dissociation_number(g: &Graph) -> DissociationResult {
    let tau = dissociation_tau(g);
    let witness = smallest_optimal(g, VertexSet::EMPTY, tau);
    DissociationResult {
        tau,
        witness,
        is_good: good_core(g).is_subset(witness),
        all_maximum_sets: None,
    }
}

/// A maximum dissociation set containing all pendant vertices and all
/// quasi-pendant vertices of degree 2.
pub fn good_maximum_set(g: &Graph) -> Result<DissociationResult, DissociationError> {
    let tau = dissociation_tau(g);
    let core = good_core(g);
    match constrained_max(g, core, VertexSet::EMPTY) {
        Some((size, _)) if size == tau => Ok(DissociationResult {
            tau,
            witness: smallest_optimal(g, core, tau),
            is_good: true,
            all_maximum_sets: None,
        }),
        other => Err(DissociationError::NoGoodSet {
            tau,
            constrained: other.map(|(s, _)| s),
        }),
    }
}

/// Every maximum dissociation set, in increasing bitmask order.
pub fn all_maximum_dissociation_sets(g: &Graph) -> Result<Vec<VertexSet>, DissociationError> {
    let n = g.order();
    if n > ALL_SETS_MAX_VERTICES {
        return Err(DissociationError::TooLarge {
            n,
            max: ALL_SETS_MAX_VERTICES,
        });
    }
    let tau = dissociation_tau(g);
    Ok((0u64..1 << n)
        .filter(|m| m.count_ones() as usize == tau)
        .map(VertexSet::from_bits)
        .filter(|&s| is_dissociation_set(g, s))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute(g: &Graph) -> usize {
        (0u64..1 << g.order())
            .filter(|&m| {
                let s = VertexSet::from_bits(m);
                s.iter().all(|v| (g.neighbors(v) & s).len() <= 1)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn membership_examples() {
        let p4 = Graph::path(4).unwrap();
        assert!(is_dissociation_set(&p4, set(&[0, 1, 3])));
        let p3 = Graph::path(3).unwrap();
        assert!(!is_dissociation_set(&p3, set(&[0, 1, 2])));
        let k4m = Graph::complete(4).unwrap().edit(&[(0, 1), (2, 3)], &[]).unwrap();
        for skip in 0..4 {
            assert!(!is_dissociation_set(&k4m, VertexSet::full(4).without(skip)));
        }
    }

    #[test]
    fn paths_and_cliques() {
        for n in 1..=12 {
            let r = dissociation_number(&Graph::path(n).unwrap());
            assert_eq!(r.tau, (2 * n).div_ceil(3), "P_{n}");
        }
        for n in 2..=8 {
            assert_eq!(dissociation_tau(&Graph::complete(n).unwrap()), 2);
        }
    }

    #[test]
    fn witness_is_smallest_mask() {
        let p3 = Graph::path(3).unwrap();
        let r = dissociation_number(&p3);
        assert_eq!(r.witness, set(&[0, 1]));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(1..=9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let r = dissociation_number(&g);
            assert_eq!(r.tau, brute(&g));
            let smallest = all_maximum_dissociation_sets(&g).unwrap()[0];
            assert_eq!(r.witness, smallest);
        }
    }

    #[test]
    fn good_sets() {
        let p6 = Graph::path(6).unwrap();
        let r = good_maximum_set(&p6).unwrap();
        assert_eq!(r.tau, 4);
        assert_eq!(r.witness, set(&[0, 1, 4, 5]));
        let c5 = Graph::cycle(5).unwrap();
        assert!(good_maximum_set(&c5).unwrap().is_good);
        let s5 = Graph::star(5).unwrap();
        let r = good_maximum_set(&s5).unwrap();
        assert_eq!(r.witness, set(&[1, 2, 3, 4]));
    }

    #[test]
    fn good_set_failure_for_small_graph() {
        // P_4: pendants {0,3}, degree-2 quasi-pendants {1,2}; all four
        // vertices cannot be taken.
        let p4 = Graph::path(4).unwrap();
        assert!(matches!(
            good_maximum_set(&p4),
            Err(DissociationError::NoGoodSet { tau: 3, .. })
        ));
        let p3 = Graph::path(3).unwrap();
        assert!(good_maximum_set(&p3).is_err());
    }

    #[test]
    fn listing_examples() {
        assert_eq!(all_maximum_dissociation_sets(&Graph::path(3).unwrap()).unwrap().len(), 3);
        assert_eq!(all_maximum_dissociation_sets(&Graph::complete(2).unwrap()).unwrap().len(), 1);
        assert_eq!(all_maximum_dissociation_sets(&Graph::cycle(4).unwrap()).unwrap().len(), 6);
        assert!(all_maximum_dissociation_sets(&Graph::path(17).unwrap()).is_err());
    }

    #[test]
    fn split_witness() {
        let g = Graph::path(5).unwrap();
        let r = dissociation_number(&g);
        let (iso, pairs) = r.split(&g);
        assert_eq!(iso.len() + 2 * pairs.len(), r.tau);
    }
}
