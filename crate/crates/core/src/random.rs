//! Seeded random graph generators for property suites and cross-checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Result, VertexSet};

/// `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Tree from a Prüfer sequence of length `n − 2` over `0..n`.
pub fn prufer_tree(n: usize, seq: &[usize]) -> Result<Graph> {
    if n <= 1 {
        return Graph::empty(n);
    }
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges)
}

/// Uniform labeled tree.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Graph> {
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    prufer_tree(n, &seq)
}

/// Random spanning tree plus each remaining edge with probability `p`,
/// under a random relabeling.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    let t = random_tree(rng, n)?;
    let mut edges = t.edges();
    for u in 0..n {
        for v in u + 1..n {
            if !t.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges)?.relabel(&perm)
}

/// Random subset of `candidates` with each element kept with probability `p`.
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, candidates: VertexSet, p: f64) -> VertexSet {
    candidates.iter().filter(|_| rng.gen_bool(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prufer_examples() {
        let star = prufer_tree(5, &[0, 0, 0]).unwrap();
        assert!(star.is_isomorphic(&Graph::star(5).unwrap()).unwrap());
        let path = prufer_tree(5, &[1, 2, 3]).unwrap();
        assert!(path.is_isomorphic(&Graph::path(5).unwrap()).unwrap());
        assert_eq!(prufer_tree(2, &[]).unwrap().size(), 1);
    }

    #[test]
    fn generators_respect_their_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=14 {
            assert!(random_tree(&mut rng, n).unwrap().is_tree());
            let g = random_connected_graph(&mut rng, n, 0.3).unwrap();
            assert!(g.is_connected() && g.order() == n);
        }
        let g = random_graph(&mut rng, 9, 0.0).unwrap();
        assert_eq!(g.size(), 0);
    }
}
