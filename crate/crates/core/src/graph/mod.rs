//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbor mask per vertex, so set
//! operations on neighborhoods are single machine instructions. Every
//! operation returns a new [`Graph`]; values are never mutated in place.

mod canon;
mod graph6;

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{canonical_code, color_refinement, CanonicalCode, CANONICAL_MAX_VERTICES};
pub use graph6::{graph6_decode, graph6_encode, read_graph6_lines};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph on {0} vertices exceeds the {MAX_VERTICES}-vertex limit")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} is already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("invalid parameters for {kind}: {reason}")]
    InvalidParameters { kind: &'static str, reason: String },
    #[error("canonical form is limited to {max} vertices, got {n}")]
    TooLargeForCanonical { n: usize, max: usize },
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// A set of vertex indices, stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, …, n−1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Named graph families with a fixed labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedKind {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
}

/// Pendant vertices, quasi-pendant vertices and the degree-2 quasi-pendants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralSets {
    pub pendants: VertexSet,
    pub quasi_pendants: VertexSet,
    pub quasi_pendants_deg2: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub is_tree: bool,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
}

/// Simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbor masks; the masks must be symmetric and loop-free.
    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.is_well_formed());
        g
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(GraphError::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Symmetric, loop-free and masks within range.
    pub fn is_well_formed(&self) -> bool {
        let all = VertexSet::full(self.n).bits();
        (0..self.n).all(|v| {
            let row = self.adj[v];
            row & !all == 0
                && row >> v & 1 == 0
                && VertexSet(row).iter().all(|u| self.adj[u] >> v & 1 == 1)
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1)))
                    .iter()
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.adj
    }

    // --- named graphs -------------------------------------------------

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("path", "n must be at least 1"));
        }
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid("cycle", "n must be at least 3"));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// `S_n = K_{1,n−1}` with centre 0.
    pub fn star(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("star", "n must be at least 1"));
        }
        Graph::from_edges(n, (1..n).map(|i| (0, i)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("complete", "n must be at least 1"));
        }
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// `K_{a,b}` with parts `{0..a}` and `{a..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a + b == 0 {
            return Err(invalid("complete_bipartite", "a + b must be at least 1"));
        }
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn make_named(kind: NamedKind, params: &[usize]) -> Result<Self> {
        let want = match kind {
            NamedKind::CompleteBipartite => 2,
            _ => 1,
        };
        if params.len() != want {
            return Err(GraphError::InvalidParameters {
                kind: kind.name(),
                reason: format!("expected {want} parameter(s), got {}", params.len()),
            });
        }
        match kind {
            NamedKind::Path => Graph::path(params[0]),
            NamedKind::Cycle => Graph::cycle(params[0]),
            NamedKind::Star => Graph::star(params[0]),
            NamedKind::Complete => Graph::complete(params[0]),
            NamedKind::CompleteBipartite => Graph::complete_bipartite(params[0], params[1]),
        }
    }

    // --- constructions ------------------------------------------------

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph::from_masks(adj))
    }

    /// `self ∨ other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        let mut u = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).bits();
        let right = VertexSet::full(u.n).bits() & !left;
        for v in 0..u.n {
            u.adj[v] |= if v < self.n { right } else { left };
        }
        debug_assert!(u.is_well_formed());
        Ok(u)
    }

    pub fn complement(&self) -> Self {
        let all = VertexSet::full(self.n).bits();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Graph::from_masks(adj)
    }

    /// Copy with the edge `uv` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Copy with the edge `uv` removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Applies several edge additions and removals at once.
    pub fn edit(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Self> {
        let mut g = self.clone();
        for &(u, v) in remove {
            g = g.remove_edge(u, v)?;
        }
        for &(u, v) in add {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Removes `del`; survivors are relabeled `0..` in their original order.
    pub fn delete_vertices(&self, del: VertexSet) -> Result<Self> {
        if let Some(bad) = del.iter().find(|&v| v >= self.n) {
            return Err(GraphError::InvalidVertex { vertex: bad, n: self.n });
        }
        Ok(self.induced(self.vertices() - del))
    }

    /// Induced subgraph on `keep`, relabeled in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Self {
        let keep = keep & self.vertices();
        let order: Vec<usize> = keep.iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & keep.bits())
                    .iter()
                    .fold(0u64, |acc, u| acc | 1 << index[u])
            })
            .collect();
        Graph::from_masks(adj)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(invalid("relabel", "permutation length differs from order"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(invalid("relabel", "not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = VertexSet(self.adj[v]).iter().fold(0, |acc, u| acc | 1 << perm[u]);
        }
        Ok(Graph::from_masks(adj))
    }

    /// Attaches a path of `len` new vertices at `at`; returns the graph and the
    /// new vertices in order from `at` outward.
    pub fn attach_path(&self, at: usize, len: usize) -> Result<(Self, Vec<usize>)> {
        self.check_vertex(at)?;
        let n = self.n + len;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = self.clone();
        g.adj.resize(n, 0);
        g.n = n;
        let mut prev = at;
        let mut added = Vec::with_capacity(len);
        for v in self.n..n {
            g.insert_edge(prev, v)?;
            added.push(v);
            prev = v;
        }
        Ok((g, added))
    }

    // --- structure ----------------------------------------------------

    pub fn structural_sets(&self) -> StructuralSets {
        let pendants: VertexSet = (0..self.n).filter(|&v| self.degree(v) == 1).collect();
        let quasi: VertexSet = (0..self.n)
            .filter(|&v| !(self.neighbors(v) & pendants).is_empty())
            .collect();
        let quasi2: VertexSet = quasi.iter().filter(|&v| self.degree(v) == 2).collect();
        StructuralSets {
            pendants,
            quasi_pendants: quasi,
            quasi_pendants_deg2: quasi2,
        }
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let comp = self.reach(s, left);
            left = left - comp;
            out.push(comp);
        }
        out
    }

    fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            let next = VertexSet(next) & within;
            frontier = next - seen;
            seen = seen | next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// A proper 2-colouring as `(side 0, side 1)`, if one exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v).iter() {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        let zero: VertexSet = (0..self.n).filter(|&v| color[v] == 0).collect();
        Some((zero, self.vertices() - zero))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() + 1 == self.n && self.is_connected()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn predicates(&self) -> Predicates {
        Predicates {
            is_connected: self.is_connected(),
            is_bipartite: self.is_bipartite(),
            is_tree: self.is_tree(),
            degree_sequence: self.degree_sequence(),
        }
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.neighbors(v).iter() {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Vertices of degree at least 3.
    pub fn branching_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) >= 3).collect()
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        if self.n != other.n || self.size() != other.size() {
            return Ok(false);
        }
        if self.degree_sequence() != other.degree_sequence() {
            return Ok(false);
        }
        Ok(canonical_code(self)? == canonical_code(other)?)
    }
}

impl NamedKind {
    pub fn name(self) -> &'static str {
        match self {
            NamedKind::Path => "path",
            NamedKind::Cycle => "cycle",
            NamedKind::Star => "star",
            NamedKind::Complete => "complete",
            NamedKind::CompleteBipartite => "complete_bipartite",
        }
    }
}

fn invalid(kind: &'static str, reason: &str) -> GraphError {
    GraphError::InvalidParameters {
        kind,
        reason: reason.to_string(),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso(a: &Graph, b: &Graph) -> bool {
        a.is_isomorphic(b).unwrap()
    }

    #[test]
    fn named_graphs() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.size(), 3);

        let k22 = Graph::complete_bipartite(2, 2).unwrap();
        assert!(iso(&k22, &Graph::cycle(4).unwrap()));

        let s4 = Graph::star(4).unwrap();
        assert_eq!(s4.degree_sequence(), vec![3, 1, 1, 1]);
        assert_eq!(s4.degree(0), 3);

        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(0).is_err());
        assert!(Graph::path(65).is_err());
        assert!(Graph::make_named(NamedKind::CompleteBipartite, &[3]).is_err());
        assert_eq!(
            Graph::make_named(NamedKind::CompleteBipartite, &[3, 4]).unwrap().size(),
            12
        );
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.join(&k1).unwrap(), Graph::complete(2).unwrap());

        let k2 = Graph::complete(2).unwrap();
        let two_k2 = k2.disjoint_union(&k2).unwrap();
        let g = k1.join(&two_k2).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));

        let h = two_k2.disjoint_union(&k1).unwrap();
        let j = k2.join(&h).unwrap();
        assert_eq!(j.order(), 7);
        assert_eq!(j.size(), 1 + 2 + 2 * 5);
        for v in 0..2 {
            assert_eq!(j.degree(v), k2.degree(v) + h.order());
        }
    }

    #[test]
    fn edits_and_complement() {
        let k4 = Graph::complete(4).unwrap();
        let c4 = k4.remove_edge(0, 1).unwrap().remove_edge(2, 3).unwrap();
        let comp = c4.complement();
        assert_eq!(comp.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(comp.complement(), c4);

        let p4 = Graph::cycle(4).unwrap().remove_edge(0, 1).unwrap();
        assert!(iso(&p4, &Graph::path(4).unwrap()));

        let p5 = Graph::path(5).unwrap();
        let split = p5.delete_vertices(VertexSet::singleton(2)).unwrap();
        assert_eq!(split.edges(), vec![(0, 1), (2, 3)]);

        assert_eq!(p5.add_edge(0, 1), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(p5.add_edge(2, 2), Err(GraphError::SelfLoop(2)));
        assert_eq!(p5.remove_edge(0, 2), Err(GraphError::MissingEdge(0, 2)));
        assert!(matches!(p5.add_edge(0, 9), Err(GraphError::InvalidVertex { .. })));
    }

    #[test]
    fn structural_sets_examples() {
        let p4 = Graph::path(4).unwrap().structural_sets();
        assert_eq!(p4.pendants.to_vec(), vec![0, 3]);
        assert_eq!(p4.quasi_pendants.to_vec(), vec![1, 2]);
        assert_eq!(p4.quasi_pendants_deg2.to_vec(), vec![1, 2]);

        let s5 = Graph::star(5).unwrap().structural_sets();
        assert_eq!(s5.pendants.len(), 4);
        assert_eq!(s5.quasi_pendants.to_vec(), vec![0]);
        assert!(s5.quasi_pendants_deg2.is_empty());
    }

    #[test]
    fn predicates_examples() {
        let c5 = Graph::cycle(5).unwrap().predicates();
        assert!(c5.is_connected && !c5.is_bipartite && !c5.is_tree);
        let p6 = Graph::path(6).unwrap().predicates();
        assert!(p6.is_connected && p6.is_bipartite && p6.is_tree);
        let k2 = Graph::complete(2).unwrap();
        assert!(!k2.disjoint_union(&k2).unwrap().is_connected());
    }

    #[test]
    fn relabel_and_attach() {
        let p3 = Graph::path(3).unwrap();
        let r = p3.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(r.edges(), vec![(0, 1), (0, 2)]);
        assert!(p3.relabel(&[0, 0, 1]).is_err());

        let (g, added) = p3.attach_path(1, 2).unwrap();
        assert_eq!(added, vec![3, 4]);
        assert_eq!(g.degree(1), 3);
        assert!(g.is_tree());
    }

    #[test]
    fn distances_and_branching() {
        let s = Graph::star(5).unwrap();
        let d = s.distances_from(1);
        assert_eq!(d, vec![Some(1), Some(0), Some(2), Some(2), Some(2)]);
        assert_eq!(s.branching_vertices().to_vec(), vec![0]);
        let two = Graph::empty(2).unwrap();
        assert_eq!(two.distances_from(0)[1], None);
        assert_eq!(two.components().len(), 2);
    }

    #[test]
    fn vertex_set_display() {
        let s: VertexSet = [3, 0, 5].into_iter().collect();
        assert_eq!(s.to_string(), "{0,3,5}");
        assert_eq!(s.len(), 3);
        assert!(s.contains(5) && !s.contains(4));
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,3,5]");
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
