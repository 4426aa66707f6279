//! Isomorphism-free corpora of trees, connected graphs and connected
//! bipartite graphs, split by dissociation number, with a graph6 disk cache.

mod cache;
mod trees;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dissociation::dissociation_tau;
use crate::graph::{canonical_code, CanonicalCode, Graph, GraphError, VertexSet};
use crate::random::prufer_tree;
use crate::spectral::{index, SpectralError};

pub use cache::{cache_dir, load_or_generate, read_cache, write_cache, CACHE_DIR_ENV};
pub use trees::free_trees;

pub const TREES_MAX_VERTICES: usize = 12;
pub const CONNECTED_MAX_VERTICES: usize = 8;
/// Members whose index is this close to the class extremum count as tied.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum EnumerationError {
    #[error("{kind} corpus is limited to n <= {max}, got {n}")]
    TooLarge { kind: CorpusKind, n: usize, max: usize },
    #[error("no member with dissociation number {tau}")]
    EmptyClass { tau: usize },
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

pub type Result<T> = std::result::Result<T, EnumerationError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CorpusKind {
    Trees,
    Connected,
    ConnectedBipartite,
}

impl CorpusKind {
    pub const ALL: [CorpusKind; 3] = [CorpusKind::Trees, CorpusKind::Connected, CorpusKind::ConnectedBipartite];

    pub fn name(self) -> &'static str {
        match self {
            CorpusKind::Trees => "TREES",
            CorpusKind::Connected => "CONNECTED",
            CorpusKind::ConnectedBipartite => "CONNECTED_BIPARTITE",
        }
    }

    pub fn max_order(self) -> usize {
        match self {
            CorpusKind::Trees => TREES_MAX_VERTICES,
            _ => CONNECTED_MAX_VERTICES,
        }
    }

    pub fn admits(self, g: &Graph) -> bool {
        match self {
            CorpusKind::Trees => g.is_tree(),
            CorpusKind::Connected => g.is_connected(),
            CorpusKind::ConnectedBipartite => g.is_connected() && g.is_bipartite(),
        }
    }
}

impl fmt::Display for CorpusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorpusKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let up = s.to_ascii_uppercase().replace('-', "_");
        CorpusKind::ALL
            .into_iter()
            .find(|k| k.name() == up)
            .ok_or_else(|| format!("unknown corpus kind '{s}' (expected TREES, CONNECTED or CONNECTED_BIPARTITE)"))
    }
}

/// Pairwise non-isomorphic graphs of one kind and order.
#[derive(Clone, Debug)]
pub struct GraphCorpus {
    pub n: usize,
    pub kind: CorpusKind,
    pub members: Vec<Graph>,
    pub taus: Vec<usize>,
    pub by_tau: BTreeMap<usize, Vec<usize>>,
}

impl GraphCorpus {
    pub(crate) fn from_members(kind: CorpusKind, n: usize, members: Vec<Graph>) -> Self {
        let taus: Vec<usize> = members.par_iter().map(dissociation_tau).collect();
        Self::with_taus(kind, n, members, taus)
    }

    pub(crate) fn with_taus(kind: CorpusKind, n: usize, members: Vec<Graph>, taus: Vec<usize>) -> Self {
        let mut by_tau: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &t) in taus.iter().enumerate() {
            by_tau.entry(t).or_default().push(i);
        }
        GraphCorpus { n, kind, members, taus, by_tau }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members with dissociation number `tau` (possibly empty).
    pub fn class(&self, tau: usize) -> &[usize] {
        self.by_tau.get(&tau).map_or(&[], |v| v.as_slice())
    }

    pub fn taus_present(&self) -> Vec<usize> {
        self.by_tau.keys().copied().collect()
    }
}

fn check_cap(kind: CorpusKind, n: usize) -> Result<()> {
    if n > kind.max_order() {
        return Err(EnumerationError::TooLarge { kind, n, max: kind.max_order() });
    }
    Ok(())
}

fn sort_by_code(graphs: Vec<Graph>) -> Result<Vec<Graph>> {
    let mut keyed = graphs
        .into_iter()
        .map(|g| Ok((g.size(), canonical_code(&g)?, g)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by_key(|k| (k.0, k.1));
    Ok(keyed.into_iter().map(|(_, _, g)| g).collect())
}

/// Connected graphs of order `n` by adding a vertex, joined to a non-empty
/// subset, to every connected graph of order `n − 1`. Every connected graph
/// has a non-cut vertex, so nothing is missed.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check_cap(CorpusKind::Connected, n)?;
    let mut level: Vec<Graph> = vec![Graph::empty(n.min(1))?];
    for m in 2..=n {
        let codes: BTreeSet<CanonicalCode> = level
            .par_iter()
            .map(|parent| {
                let mut local = BTreeSet::new();
                for mask in 1u64..1 << (m - 1) {
                    let mut edges = parent.edges();
                    edges.extend(VertexSet::from_bits(mask).iter().map(|v| (v, m - 1)));
                    let child = Graph::from_edges(m, edges)?;
                    local.insert(canonical_code(&child)?);
                }
                Ok(local)
            })
            .try_reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                Ok(a)
            })
            .map_err(|e: GraphError| EnumerationError::Graph(e))?;
        level = codes.into_iter().map(|c| c.to_graph()).collect();
    }
    Ok(level)
}

/// Builds a corpus in memory.
pub fn generate(kind: CorpusKind, n: usize) -> Result<GraphCorpus> {
    check_cap(kind, n)?;
    let members = match kind {
        CorpusKind::Trees => sort_by_code(free_trees(n)?)?,
        CorpusKind::Connected => sort_by_code(connected_graphs(n)?)?,
        CorpusKind::ConnectedBipartite => {
            sort_by_code(connected_graphs(n)?.into_iter().filter(Graph::is_bipartite).collect())?
        }
    };
    Ok(GraphCorpus::from_members(kind, n, members))
}

/// Free trees by decoding every Prüfer sequence and removing isomorphic
/// copies. Only practical for small `n`.
pub fn trees_by_prufer(n: usize) -> Result<Vec<CanonicalCode>> {
    if n <= 2 {
        return Ok(vec![canonical_code(&Graph::path(n)?)?]);
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let codes = (0..total)
        .into_par_iter()
        .map(|mut k| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = k % n;
                    k /= n;
                    d
                })
                .collect();
            Ok(canonical_code(&prufer_tree(n, &seq)?)?)
        })
        .collect::<Result<BTreeSet<_>>>()?;
    Ok(codes.into_iter().collect())
}

/// Connected graphs by sweeping all labeled graphs on `n` vertices.
pub fn connected_by_labeled_sweep(n: usize) -> Result<Vec<CanonicalCode>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let codes = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).ok()?;
            g.is_connected().then(|| canonical_code(&g))
        })
        .collect::<std::result::Result<BTreeSet<_>, _>>()?;
    Ok(codes.into_iter().collect())
}

type Memo = Mutex<HashMap<(CorpusKind, usize), Arc<GraphCorpus>>>;

/// Process-wide corpus, loaded from the disk cache or generated once.
pub fn shared_corpus(kind: CorpusKind, n: usize) -> Result<Arc<GraphCorpus>> {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(c) = memo.lock().expect("memo poisoned").get(&(kind, n)) {
        return Ok(c.clone());
    }
    let corpus = Arc::new(load_or_generate(kind, n, &cache_dir())?);
    memo.lock().expect("memo poisoned").insert((kind, n), corpus.clone());
    Ok(corpus)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extreme {
    Max,
    Min,
}

/// Members of one dissociation class attaining the extreme index.
#[derive(Clone, Debug, Serialize)]
pub struct ClassExtremum {
    pub tau: usize,
    pub alpha: f64,
    pub extreme: Extreme,
    pub lambda: f64,
    /// Corpus indices within [`TIE_TOL`] of the extremum.
    pub winners: Vec<usize>,
    /// Best index among the remaining members.
    pub runner_up: Option<f64>,
    /// Distance from the extremum to the runner-up.
    pub gap: Option<f64>,
}

impl ClassExtremum {
    pub fn winner_graphs<'a>(&self, corpus: &'a GraphCorpus) -> Vec<&'a Graph> {
        self.winners.iter().map(|&i| &corpus.members[i]).collect()
    }

    /// A single winner separated from every other member by more than `gap`.
    pub fn is_unique(&self, gap: f64) -> bool {
        self.winners.len() == 1 && self.gap.is_none_or(|g| g > gap)
    }
}

/// `λ_α` of each member in `indices`.
pub fn indices_at(corpus: &GraphCorpus, indices: &[usize], alpha: f64) -> Result<Vec<f64>> {
    indices
        .par_iter()
        .map(|&i| Ok(index(&corpus.members[i], alpha)?))
        .collect()
}

fn class_extremum(corpus: &GraphCorpus, tau: usize, alpha: f64, extreme: Extreme) -> Result<ClassExtremum> {
    let class = corpus.class(tau);
    if class.is_empty() {
        return Err(EnumerationError::EmptyClass { tau });
    }
    let values = indices_at(corpus, class, alpha)?;
    let sign = if extreme == Extreme::Max { 1.0 } else { -1.0 };
    let best = values.iter().map(|v| sign * v).fold(f64::NEG_INFINITY, f64::max) * sign;
    let mut winners = Vec::new();
    let mut runner_up: Option<f64> = None;
    for (&i, &v) in class.iter().zip(&values) {
        if (v - best).abs() <= TIE_TOL {
            winners.push(i);
        } else if runner_up.is_none_or(|r| sign * v > sign * r) {
            runner_up = Some(v);
        }
    }
    Ok(ClassExtremum {
        tau,
        alpha,
        extreme,
        lambda: best,
        winners,
        runner_up,
        gap: runner_up.map(|r| (best - r).abs()),
    })
}

/// Members of the `τ`-class with the largest `λ_α`.
pub fn argmax_index(corpus: &GraphCorpus, tau: usize, alpha: f64) -> Result<ClassExtremum> {
    class_extremum(corpus, tau, alpha, Extreme::Max)
}

/// Members of the `τ`-class with the smallest `λ_α`.
pub fn argmin_index(corpus: &GraphCorpus, tau: usize, alpha: f64) -> Result<ClassExtremum> {
    class_extremum(corpus, tau, alpha, Extreme::Min)
}
