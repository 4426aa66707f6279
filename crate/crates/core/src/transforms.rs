//! Structural graph operations that move the A_α-index in a known direction:
//! neighbour shifting, pendant-path rebalancing, (triple) subdivision and the
//! optimal subdivision transformation of trees.
//!
//! All operations are purely structural; callers that need a Perron-vector
//! precondition evaluate it themselves.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("invalid neighbour shift: {0}")]
    InvalidShift(String),
    #[error("no pendant path of length {len} at vertex {at}")]
    PathNotFound { at: usize, len: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("input is not a tree")]
    NotATree,
    #[error("tree has {0} branching vertices, at least two are needed")]
    TooFewBranching(usize),
    #[error("tree has no internal path")]
    NoInternalPath,
    #[error("diameter path structure violated: {0}")]
    DiameterStructure(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, TransformError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TransformKind {
    Shift,
    Rebalance,
    Subdivide,
    TripleSubdivide,
    OptSubdiv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RebalanceDirection {
    /// `(s, t) → (s − 1, t + 1)`.
    TowardBalance,
    /// `(s, t) → (s + 1, t − 1)`.
    Away,
}

/// Result of one transformation with the edits that produced it.
///
/// Vertex labels in `removed_edges` refer to `before`; labels in
/// `added_edges` refer to the intermediate graph before any deletion, and
/// `deleted` lists intermediate labels removed at the end.
#[derive(Clone, Debug, Serialize)]
pub struct TransformRecord {
    pub kind: TransformKind,
    #[serde(skip)]
    pub before: Graph,
    #[serde(skip)]
    pub after: Graph,
    pub removed_edges: Vec<(usize, usize)>,
    pub added_edges: Vec<(usize, usize)>,
    pub deleted: Vec<usize>,
    /// Which of the four diameter-path cases applied (optimal subdivision only).
    pub case: Option<u8>,
}

impl TransformRecord {
    fn simple(kind: TransformKind, before: &Graph, after: Graph, removed: Vec<(usize, usize)>, added: Vec<(usize, usize)>) -> Self {
        TransformRecord {
            kind,
            before: before.clone(),
            after,
            removed_edges: removed,
            added_edges: added,
            deleted: Vec::new(),
            case: None,
        }
    }
}

/// `G − {v w : w ∈ moved} + {u w : w ∈ moved}`.
pub fn shift_neighbors(g: &Graph, u: usize, v: usize, moved: VertexSet) -> Result<TransformRecord> {
    let bad = |m: String| TransformError::InvalidShift(m);
    for x in [u, v] {
        if x >= g.order() {
            return Err(GraphError::InvalidVertex { vertex: x, n: g.order() }.into());
        }
    }
    if u == v {
        return Err(bad("u and v coincide".into()));
    }
    if moved.is_empty() {
        return Err(bad("no vertices to move".into()));
    }
    if moved.contains(u) {
        return Err(bad(format!("u = {u} is in the moved set")));
    }
    for w in moved.iter() {
        if !g.has_edge(v, w) {
            return Err(bad(format!("{w} is not a neighbour of v = {v}")));
        }
        if g.has_edge(u, w) {
            return Err(bad(format!("{w} is already a neighbour of u = {u}")));
        }
    }
    let removed: Vec<_> = moved.iter().map(|w| (v, w)).collect();
    let added: Vec<_> = moved.iter().map(|w| (u, w)).collect();
    let after = g.edit(&removed, &added)?;
    Ok(TransformRecord::simple(TransformKind::Shift, g, after, removed, added))
}

/// Vertices of the pendant path hanging from `at` through neighbour `first`,
/// listed outward, or `None` if that branch is not a pendant path.
fn pendant_path_via(g: &Graph, at: usize, first: usize) -> Option<Vec<usize>> {
    let mut path = vec![first];
    let (mut prev, mut cur) = (at, first);
    loop {
        match g.degree(cur) {
            1 => return Some(path),
            2 => {
                let next = g.neighbors(cur).without(prev).first()?;
                if next == at || path.contains(&next) {
                    return None;
                }
                path.push(next);
                prev = cur;
                cur = next;
            }
            _ => return None,
        }
    }
}

/// Pendant paths hanging from `at`, keyed by first vertex, in vertex order.
pub fn pendant_paths(g: &Graph, at: usize) -> Vec<Vec<usize>> {
    g.neighbors(at)
        .iter()
        .filter_map(|w| pendant_path_via(g, at, w))
        .collect()
}

/// Moves the end vertex of one pendant path at `u` to the end of another.
///
/// With `Away` the `t`-path loses a vertex to the `s`-path; with
/// `TowardBalance` the `s`-path gives one to the `t`-path (`t = 0` means the
/// vertex becomes a new pendant edge at `u`).
pub fn rebalance_pendant_paths(
    g: &Graph,
    u: usize,
    s: usize,
    t: usize,
    direction: RebalanceDirection,
) -> Result<TransformRecord> {
    if u >= g.order() {
        return Err(GraphError::InvalidVertex { vertex: u, n: g.order() }.into());
    }
    let paths = pendant_paths(g, u);
    let find = |len: usize, skip: Option<usize>| {
        paths
            .iter()
            .enumerate()
            .find(|(i, p)| p.len() == len && Some(*i) != skip)
            .map(|(i, p)| (i, p.clone()))
            .ok_or(TransformError::PathNotFound { at: u, len })
    };
    let (donor, receiver_end) = match direction {
        RebalanceDirection::Away => {
            if t == 0 {
                return Err(TransformError::PathNotFound { at: u, len: 0 });
            }
            let (i, sp) = find(s, None)?;
            let (_, tp) = find(t, Some(i))?;
            (tp, *sp.last().expect("non-empty path"))
        }
        RebalanceDirection::TowardBalance => {
            if s == 0 {
                return Err(TransformError::PathNotFound { at: u, len: 0 });
            }
            let (i, sp) = find(s, None)?;
            let end = if t == 0 { u } else { *find(t, Some(i))?.1.last().expect("non-empty path") };
            (sp, end)
        }
    };
    let leaf = *donor.last().expect("non-empty path");
    let parent = if donor.len() >= 2 { donor[donor.len() - 2] } else { u };
    let removed = vec![(parent, leaf)];
    let added = vec![(receiver_end, leaf)];
    let after = g.edit(&removed, &added)?;
    Ok(TransformRecord::simple(TransformKind::Rebalance, g, after, removed, added))
}

fn check_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(TransformError::NotAnEdge(u, v))
    }
}

/// Replaces `uv` by a path through `k` new vertices `n, n+1, …`.
fn subdivide_k(g: &Graph, u: usize, v: usize, k: usize) -> Result<(Graph, Vec<(usize, usize)>)> {
    check_edge(g, u, v)?;
    let (h, added) = g.remove_edge(u, v)?.attach_path(u, k)?;
    let h = h.add_edge(*added.last().expect("k >= 1"), v)?;
    let mut chain = vec![u];
    chain.extend(&added);
    chain.push(v);
    Ok((h, chain.windows(2).map(|w| (w[0], w[1])).collect()))
}

/// `G_w`: the edge `uv` replaced by `u w v` with `w = n`.
pub fn subdivide(g: &Graph, u: usize, v: usize) -> Result<TransformRecord> {
    let (after, added) = subdivide_k(g, u, v, 1)?;
    Ok(TransformRecord::simple(TransformKind::Subdivide, g, after, vec![(u, v)], added))
}

/// `G_{xyz}`: the edge `uv` replaced by `u x y z v` with `x, y, z = n, n+1, n+2`.
pub fn triple_subdivide(g: &Graph, u: usize, v: usize) -> Result<TransformRecord> {
    let (after, added) = subdivide_k(g, u, v, 3)?;
    Ok(TransformRecord::simple(TransformKind::TripleSubdivide, g, after, vec![(u, v)], added))
}

/// All internal paths: endpoints of degree at least 3, interior vertices of
/// degree 2. Each path is listed once, from its smaller endpoint.
pub fn internal_paths(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in g.branching_vertices().iter() {
        for first in g.neighbors(a).iter() {
            let mut path = vec![a, first];
            let (mut prev, mut cur) = (a, first);
            while g.degree(cur) == 2 {
                let next = g.neighbors(cur).without(prev).first().expect("degree 2");
                if path.contains(&next) {
                    break;
                }
                path.push(next);
                prev = cur;
                cur = next;
            }
            let b = cur;
            if g.degree(b) >= 3 && a < b {
                out.push(path);
            }
        }
    }
    out
}

/// Whether `uv` lies on some internal path.
pub fn is_internal_path_edge(g: &Graph, u: usize, v: usize) -> bool {
    internal_paths(g)
        .iter()
        .any(|p| p.windows(2).any(|w| (w[0], w[1]) == (u, v) || (w[0], w[1]) == (v, u)))
}

/// First internal-path edge met by a breadth-first scan from vertex 0
/// (vertices in BFS order, neighbours in increasing order).
fn first_internal_edge(g: &Graph) -> Option<(usize, usize)> {
    let paths = internal_paths(g);
    let on_path = |u: usize, v: usize| {
        paths
            .iter()
            .any(|p| p.windows(2).any(|w| (w[0], w[1]) == (u, v) || (w[0], w[1]) == (v, u)))
    };
    let mut seen = VertexSet::singleton(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x).iter() {
            if on_path(x, y) {
                return Some((x, y));
            }
            if !seen.contains(y) {
                seen.insert(y);
                queue.push_back(y);
            }
        }
    }
    None
}

/// The diameter path `u_1 … u_d` maximizing `d(u_2)`, ties broken by the
/// lexicographically smallest vertex sequence.
pub fn chosen_diameter_path(t: &Graph) -> Vec<usize> {
    let n = t.order();
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|s| t.distances_from(s)).collect();
    let diam = dist.iter().flatten().filter_map(|&d| d).max().unwrap_or(0);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for a in 0..n {
        for b in 0..n {
            if dist[a][b] != Some(diam) {
                continue;
            }
            // Walk from a toward b.
            let mut path = vec![a];
            let mut cur = a;
            while cur != b {
                let d = dist[cur][b].expect("connected");
                cur = t
                    .neighbors(cur)
                    .iter()
                    .find(|&w| dist[w][b] == Some(d - 1))
                    .expect("tree geodesic");
                path.push(cur);
            }
            let key = if path.len() >= 2 { t.degree(path[1]) } else { 0 };
            let better = match &best {
                None => true,
                Some((k, p)) => key > *k || (key == *k && path < *p),
            };
            if better {
                best = Some((key, path));
            }
        }
    }
    best.map(|(_, p)| p).unwrap_or_default()
}

/// An equal-order tree obtained by (triple) subdividing an internal-path
/// edge and deleting one or three vertices near the end of a diameter path.
pub fn optimal_subdivision_transform(t: &Graph) -> Result<TransformRecord> {
    if !t.is_tree() {
        return Err(TransformError::NotATree);
    }
    let branching = t.branching_vertices().len();
    if branching < 2 {
        return Err(TransformError::TooFewBranching(branching));
    }
    let p = chosen_diameter_path(t);
    let (u1, u2, u3) = (p[0], p[1], p[2]);
    let pendants = t.structural_sets().pendants;
    if !t.neighbors(u2).without(u3).is_subset(pendants) {
        return Err(TransformError::DiameterStructure(format!(
            "N({u2}) \\ {{{u3}}} is not contained in the pendant vertices"
        )));
    }
    let (x, y) = first_internal_edge(t).ok_or(TransformError::NoInternalPath)?;
    let (d2, d3) = (t.degree(u2), t.degree(u3));
    let (case, triple, deleted) = match (d2, d3) {
        (2, 2) => (1, true, vec![u1, u2, u3]),
        (2, _) => (2, false, vec![u1]),
        (3, _) => {
            let v = t
                .neighbors(u2)
                .without(u1)
                .without(u3)
                .first()
                .expect("degree 3");
            (3, true, vec![u1, u2, v])
        }
        _ => (4, false, vec![u1]),
    };
    let (sub, added) = subdivide_k(t, x, y, if triple { 3 } else { 1 })?;
    let after = sub.delete_vertices(deleted.iter().copied().collect())?;
    Ok(TransformRecord {
        kind: TransformKind::OptSubdiv,
        before: t.clone(),
        after,
        removed_edges: vec![(x, y)],
        added_edges: added,
        deleted,
        case: Some(case),
    })
}

/// Applies [`optimal_subdivision_transform`] until at most one branching
/// vertex remains.
pub fn iterate_optimal_subdivision(t: &Graph) -> Result<Vec<TransformRecord>> {
    let mut cur = t.clone();
    let mut steps = Vec::new();
    while cur.branching_vertices().len() >= 2 {
        let rec = optimal_subdivision_transform(&cur)?;
        cur = rec.after.clone();
        steps.push(rec);
    }
    Ok(steps)
}
