//! Canonical labeling of small graphs.
//!
//! Colour refinement followed by an individualization search. Each leaf of
//! the search tree is a vertex ordering; the canonical code is the largest
//! upper-triangle bit string over all leaves. Leaves that produce equal codes
//! reveal automorphisms, which prune siblings lying in a common orbit.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Result, VertexSet};

/// Largest order accepted by [`canonical_code`].
pub const CANONICAL_MAX_VERTICES: usize = 12;

/// Isomorphism-invariant code of a graph with at most 12 vertices.
///
/// Bit `k` (from the most significant end of the `n(n−1)/2` used bits)
/// records adjacency of the canonical pair with graph6 index `k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// Big-endian byte string: the order followed by the 16 code bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = vec![self.n];
        out.extend_from_slice(&self.bits.to_be_bytes());
        out
    }

    /// The graph in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = pair_count(n);
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_masks(adj)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(n={}, {:#x})", self.n, self.bits)
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Code of `g` under the vertex ordering `order` (position → vertex).
fn code_under(g: &Graph, order: &[usize]) -> u128 {
    let masks = g.masks();
    let mut code = 0u128;
    for j in 1..order.len() {
        let row = masks[order[j]];
        for &vi in &order[..j] {
            code = code << 1 | (row >> vi & 1) as u128;
        }
    }
    code
}

/// Equitable refinement of an ordered partition.
///
/// Cells are split by (neighbour counts into every cell) and the pieces are
/// ordered by that signature, so the result does not depend on labels.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.order();
    let masks = g.masks();
    loop {
        let cell_masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = cell_masks
                        .iter()
                        .map(|&m| (masks[v] & m).count_ones())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Coarsest equitable ordered partition reached from the degree partition.
pub fn color_refinement(g: &Graph) -> Vec<VertexSet> {
    initial_partition(g)
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect()
}

fn initial_partition(g: &Graph) -> Vec<Vec<usize>> {
    if g.order() == 0 {
        return Vec::new();
    }
    refine(g, vec![(0..g.order()).collect()])
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
    /// Automorphisms found so far, as vertex maps.
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.run(refine(self.g, child), prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let code = code_under(self.g, &order);
        match &self.best {
            Some((best, best_order)) if code == *best => {
                let n = order.len();
                let mut auto = vec![0; n];
                for p in 0..n {
                    auto[best_order[p]] = order[p];
                }
                if auto.iter().enumerate().any(|(i, &j)| i != j) {
                    self.generators.push(auto);
                }
            }
            Some((best, _)) if code < *best => {}
            _ => self.best = Some((code, order)),
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the group
    /// generated by automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.generators {
            if prefix.iter().any(|&u| gen[u] != u) {
                continue;
            }
            any = true;
            for (x, &y) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }
}

/// Canonical code of `g`; equal codes exactly when the graphs are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let n = g.order();
    if n > CANONICAL_MAX_VERTICES {
        return Err(GraphError::TooLargeForCanonical {
            n,
            max: CANONICAL_MAX_VERTICES,
        });
    }
    let mut search = Search {
        g,
        best: None,
        generators: Vec::new(),
    };
    search.run(initial_partition(g), &mut Vec::new());
    let bits = search.best.map_or(0, |(c, _)| c);
    Ok(CanonicalCode { n: n as u8, bits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn code(g: &Graph) -> CanonicalCode {
        canonical_code(g).unwrap()
    }

    #[test]
    fn relabeling_invariance_examples() {
        let p4 = Graph::path(4).unwrap();
        let p4b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(code(&p4), code(&p4b));
        assert_ne!(code(&Graph::cycle(4).unwrap()), code(&p4));
        assert_ne!(code(&Graph::star(4).unwrap()), code(&p4));
    }

    #[test]
    fn round_trip_through_code() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).unwrap();
        let c = code(&g);
        let h = c.to_graph();
        assert_eq!(code(&h), c);
        assert_eq!(h.size(), g.size());
    }

    #[test]
    fn rejects_large_graphs() {
        let g = Graph::path(13).unwrap();
        assert!(matches!(
            canonical_code(&g),
            Err(GraphError::TooLargeForCanonical { n: 13, .. })
        ));
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for g in [
            Graph::star(12).unwrap(),
            Graph::complete(12).unwrap(),
            Graph::empty(12).unwrap(),
            Graph::complete_bipartite(6, 6).unwrap(),
            Graph::cycle(12).unwrap(),
        ] {
            let c = code(&g);
            assert_eq!(c.to_graph().size(), g.size());
        }
    }

    #[test]
    fn petersen_like_regular_pair_distinguished() {
        // Two 3-regular graphs on 8 vertices: the cube and the Wagner graph.
        let cube = Graph::from_edges(
            8,
            [
                (0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4),
                (0, 4), (1, 5), (2, 6), (3, 7),
            ],
        )
        .unwrap();
        let wagner = Graph::from_edges(
            8,
            (0..8).map(|i| (i, (i + 1) % 8)).chain((0..4).map(|i| (i, i + 4))),
        )
        .unwrap();
        assert!(cube.is_bipartite() && !wagner.is_bipartite());
        assert_ne!(code(&cube), code(&wagner));
    }

    #[test]
    fn stable_under_random_relabelings() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.2..0.8);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let c = code(&g);
            for _ in 0..100 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                assert_eq!(code(&g.relabel(&perm).unwrap()), c);
            }
        }
    }
}
