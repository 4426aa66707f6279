//! Constructors for the named extremal graphs and tree families.
//!
//! Labeling conventions (stable, used by golden graph6 fixtures):
//!
//! * spiders: centre is vertex 0, stems follow, pendant vertices come last;
//! * `T^i_{r,p}`: the base graph comes first in path order, then the `r`
//!   attached paths as (middle, end) pairs, then the `p` paths;
//! * `K_{n−τ} ∨ …`: clique vertices `0..n−τ`, then the matched pairs, then
//!   the isolated vertex when `τ` is odd.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dissociation::dissociation_tau;
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} is infeasible: {constraint}")]
    Infeasible {
        family: &'static str,
        constraint: String,
    },
    #[error("class membership needs a tree")]
    NotATree,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, FamilyError>;

/// A named family member with its parameters.
///
/// Serializes as `{"family": "S_DAGGER", "params": {"n": 8, "tau": 6}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum FamilySpec {
    /// `K_{n−τ} ∨ (τ/2 K_2)` or `K_{n−τ} ∨ ((τ−1)/2 K_2 ∪ K_1)`.
    #[serde(rename = "MAX_CONNECTED")]
    MaxConnected { n: usize, tau: usize },
    /// `K_{τ,n−τ}`.
    #[serde(rename = "COMPLETE_BIPARTITE_TAU")]
    CompleteBipartiteTau { n: usize, tau: usize },
    /// Star `S_{n−τ}` with two pendant edges on each leaf and `3τ − 2n + 2`
    /// pendant edges on the centre.
    #[serde(rename = "S_DAGGER")]
    SDagger { n: usize, tau: usize },
    /// Star `S_{k1+1}` with `k2` pendant paths of length two at the centre.
    #[serde(rename = "S_K1K2")]
    SK1K2 { k1: usize, k2: usize },
    /// `P_4` with `r` and `p` pendant paths of length two at its two leaves.
    #[serde(rename = "T1")]
    T1 { r: usize, p: usize },
    /// `T1_{r,p}` plus a pendant edge at the leaf-side vertex of degree `r+1`.
    #[serde(rename = "T2")]
    T2 { r: usize, p: usize },
    /// `S_4` with `r` and `p` pendant paths of length two at two leaves.
    #[serde(rename = "T3")]
    T3 { r: usize, p: usize },
    /// `P_2` with `r` and `p` pendant paths of length two at its ends.
    #[serde(rename = "T4")]
    T4 { r: usize, p: usize },
    /// `P_3` with a pendant edge and `r` paths at one leaf, `p` paths at the other.
    #[serde(rename = "T5")]
    T5 { r: usize, p: usize },
    /// `S_{1,2}` with `r` and `p` paths at its two degree-2 quasi-pendants.
    #[serde(rename = "T6")]
    T6 { r: usize, p: usize },
    /// `P_4` with `r` and `p` paths at its two quasi-pendant vertices.
    #[serde(rename = "T7")]
    T7 { r: usize, p: usize },
    /// `P_6` with `r` and `p` paths at its two quasi-pendant vertices.
    #[serde(rename = "T8")]
    T8 { r: usize, p: usize },
    /// `T1_{r,p}` plus a pendant edge at vertex 1 of the inner `P_4`.
    #[serde(rename = "T_PRIME")]
    TPrime { r: usize, p: usize },
    /// Star `S_{r+1}` with `t` pendant paths of length two and one pendant
    /// path of length `n − r − 2t − 1` at the centre.
    #[serde(rename = "W_RT")]
    WRT { n: usize, r: usize, t: usize },
    /// `P_{n−2}` with two pendant edges at one end.
    #[serde(rename = "Y1")]
    Y1 { n: usize },
    /// `P_{n−6}` with two pendant paths of length three at one end.
    #[serde(rename = "Y2")]
    Y2 { n: usize },
    /// `P_{n−4}` with a pendant edge and a pendant path of length three at one end.
    #[serde(rename = "Y3")]
    Y3 { n: usize },
    /// `K_n` minus a maximum matching `{01, 23, …}`.
    #[serde(rename = "KN_MINUS_M")]
    KnMinusM { n: usize },
    /// Default member of the first two-level spider class.
    #[serde(rename = "CLASS_T1_MEMBER")]
    ClassT1Member { n: usize, tau: usize },
    #[serde(rename = "CLASS_T2_MEMBER")]
    ClassT2Member { n: usize, tau: usize },
    #[serde(rename = "CLASS_T3_MEMBER")]
    ClassT3Member { n: usize, tau: usize },
}

/// The three two-level spider classes of trees with given order and
/// dissociation number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TreeClass {
    /// Star `S_{n−τ+1}`, one pendant edge at the centre, at least two
    /// pendant edges at every leaf, `τ − 1` leaves in total.
    #[serde(rename = "T1_CLASS")]
    T1,
    /// Star `S_{n−τ+1}`, at least two pendant edges at every leaf, `τ − 1`
    /// leaves in total.
    #[serde(rename = "T2_CLASS")]
    T2,
    /// Star `S_{n−τ}`, at least two pendant edges at every vertex, `τ`
    /// leaves in total.
    #[serde(rename = "T3_CLASS")]
    T3,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

fn infeasible(family: &'static str, constraint: impl Into<String>) -> FamilyError {
    FamilyError::Infeasible {
        family,
        constraint: constraint.into(),
    }
}

fn require(ok: bool, family: &'static str, constraint: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(infeasible(family, constraint))
    }
}

/// Incremental edge-list builder with sequential vertex allocation.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { n: 0, edges: Vec::new() }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn path(&mut self, len: usize) -> Vec<usize> {
        let vs: Vec<usize> = (0..len).map(|_| self.vertex()).collect();
        for w in vs.windows(2) {
            self.edges.push((w[0], w[1]));
        }
        vs
    }

    /// Pendant path with `len` new vertices hanging from `at`.
    fn hang(&mut self, at: usize, len: usize) {
        let mut prev = at;
        for _ in 0..len {
            let v = self.vertex();
            self.edges.push((prev, v));
            prev = v;
        }
    }

    fn hang_many(&mut self, at: usize, count: usize, len: usize) {
        for _ in 0..count {
            self.hang(at, len);
        }
    }

    fn build(self) -> Result<Graph> {
        Ok(Graph::from_edges(self.n, self.edges)?)
    }
}

/// Two-level spider: centre 0, stems `1..=stem_leaves.len()`, then the stem
/// pendants stem by stem, then `centre_leaves` pendants on the centre.
fn spider(stem_leaves: &[usize], centre_leaves: usize) -> Result<Graph> {
    let mut b = Builder::new();
    let c = b.vertex();
    let stems: Vec<usize> = stem_leaves
        .iter()
        .map(|_| {
            let s = b.vertex();
            b.edges.push((c, s));
            s
        })
        .collect();
    for (&s, &k) in stems.iter().zip(stem_leaves) {
        b.hang_many(s, k, 1);
    }
    b.hang_many(c, centre_leaves, 1);
    b.build()
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::MaxConnected { .. } => "MAX_CONNECTED",
            FamilySpec::CompleteBipartiteTau { .. } => "COMPLETE_BIPARTITE_TAU",
            FamilySpec::SDagger { .. } => "S_DAGGER",
            FamilySpec::SK1K2 { .. } => "S_K1K2",
            FamilySpec::T1 { .. } => "T1",
            FamilySpec::T2 { .. } => "T2",
            FamilySpec::T3 { .. } => "T3",
            FamilySpec::T4 { .. } => "T4",
            FamilySpec::T5 { .. } => "T5",
            FamilySpec::T6 { .. } => "T6",
            FamilySpec::T7 { .. } => "T7",
            FamilySpec::T8 { .. } => "T8",
            FamilySpec::TPrime { .. } => "T_PRIME",
            FamilySpec::WRT { .. } => "W_RT",
            FamilySpec::Y1 { .. } => "Y1",
            FamilySpec::Y2 { .. } => "Y2",
            FamilySpec::Y3 { .. } => "Y3",
            FamilySpec::KnMinusM { .. } => "KN_MINUS_M",
            FamilySpec::ClassT1Member { .. } => "CLASS_T1_MEMBER",
            FamilySpec::ClassT2Member { .. } => "CLASS_T2_MEMBER",
            FamilySpec::ClassT3Member { .. } => "CLASS_T3_MEMBER",
        }
    }

    /// Number of vertices of the member.
    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match *self {
            MaxConnected { n, .. }
            | CompleteBipartiteTau { n, .. }
            | SDagger { n, .. }
            | WRT { n, .. }
            | Y1 { n }
            | Y2 { n }
            | Y3 { n }
            | KnMinusM { n }
            | ClassT1Member { n, .. }
            | ClassT2Member { n, .. }
            | ClassT3Member { n, .. } => n,
            SK1K2 { k1, k2 } => 1 + k1 + 2 * k2,
            T1 { r, p } | T3 { r, p } | T5 { r, p } | T7 { r, p } => 4 + 2 * (r + p),
            T2 { r, p } | TPrime { r, p } => 5 + 2 * (r + p),
            T4 { r, p } => 2 + 2 * (r + p),
            T6 { r, p } | T8 { r, p } => 6 + 2 * (r + p),
        }
    }

    /// Checks the parameter constraints, naming the violated one.
    pub fn check(&self) -> Result<()> {
        use FamilySpec::*;
        let name = self.name();
        match *self {
            MaxConnected { n, tau } => require(2 <= tau && tau < n, name, "2 <= tau <= n-1"),
            CompleteBipartiteTau { n, tau } => require(
                tau >= 2 && tau < n && 2 * tau >= n,
                name,
                "max(2, ceil(n/2)) <= tau <= n-1",
            ),
            SDagger { n, tau } => {
                require(tau < n, name, "n - tau - 1 >= 0")?;
                require(3 * tau + 2 >= 2 * n, name, "3tau - 2n + 2 >= 0")?;
                require(tau >= (2 * n).div_ceil(3), name, "tau >= ceil(2n/3)")
            }
            SK1K2 { k1, k2 } => require(k1 + 2 * k2 >= 2, name, "k1 + 2k2 >= 2"),
            T1 { r, p } | T2 { r, p } => require(r + p >= 1, name, "r + p >= 1"),
            T3 { .. } | T4 { .. } | T5 { .. } | T6 { .. } | T7 { .. } | T8 { .. } => Ok(()),
            TPrime { .. } => Ok(()),
            WRT { n, r, t } => require(n >= r + 2 * t + 2, name, "n - r - 2t - 1 >= 1"),
            Y1 { n } => require(n >= 4, name, "n >= 4"),
            Y2 { n } => require(n >= 7, name, "n >= 7"),
            Y3 { n } => require(n >= 5, name, "n >= 5"),
            KnMinusM { n } => require(n >= 2, name, "n >= 2"),
            ClassT1Member { n, tau } => {
                require(tau < n, name, "tau <= n-1")?;
                require(3 * tau >= 2 * n + 2, name, "3tau >= 2n + 2")
            }
            ClassT2Member { n, tau } => {
                require(tau < n, name, "tau <= n-1")?;
                require(3 * tau >= 2 * n + 1, name, "3tau >= 2n + 1")
            }
            ClassT3Member { n, tau } => {
                require(tau < n, name, "tau <= n-1")?;
                require(3 * tau >= 2 * n, name, "3tau >= 2n")
            }
        }?;
        if self.order() > crate::graph::MAX_VERTICES {
            return Err(FamilyError::Graph(GraphError::TooManyVertices(self.order())));
        }
        Ok(())
    }

    /// The member graph with its documented labeling.
    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        self.check()?;
        let g = match *self {
            MaxConnected { n, tau } => {
                let mut b = Builder::new();
                let clique: Vec<usize> = (0..n - tau).map(|_| b.vertex()).collect();
                for (i, &u) in clique.iter().enumerate() {
                    for &v in &clique[i + 1..] {
                        b.edges.push((u, v));
                    }
                }
                let rest: Vec<usize> = (0..tau).map(|_| b.vertex()).collect();
                for pair in rest.chunks(2).filter(|c| c.len() == 2) {
                    b.edges.push((pair[0], pair[1]));
                }
                for &u in &clique {
                    for &v in &rest {
                        b.edges.push((u, v));
                    }
                }
                b.build()?
            }
            CompleteBipartiteTau { n, tau } => Graph::complete_bipartite(tau, n - tau)?,
            SDagger { n, tau } => spider(&vec![2; n - tau - 1], 3 * tau + 2 - 2 * n)?,
            SK1K2 { k1, k2 } => {
                let mut b = Builder::new();
                let c = b.vertex();
                b.hang_many(c, k1, 1);
                b.hang_many(c, k2, 2);
                b.build()?
            }
            T1 { r, p } => t1(r, p, false, false)?,
            T2 { r, p } => t1(r, p, true, false)?,
            TPrime { r, p } => t1(r, p, false, true)?,
            T3 { r, p } => {
                let mut b = Builder::new();
                let c = b.vertex();
                let leaves: Vec<usize> = (0..3)
                    .map(|_| {
                        let l = b.vertex();
                        b.edges.push((c, l));
                        l
                    })
                    .collect();
                b.hang_many(leaves[0], r, 2);
                b.hang_many(leaves[1], p, 2);
                b.build()?
            }
            T4 { r, p } => two_point(2, 0, 1, r, p, false)?,
            T5 { r, p } => two_point(3, 0, 2, r, p, true)?,
            T6 { r, p } => {
                // S_{1,2}: centre 0, leaf 1, paths 0-2-3 and 0-4-5.
                let mut b = Builder::new();
                let c = b.vertex();
                b.hang(c, 1);
                b.hang(c, 2);
                b.hang(c, 2);
                b.hang_many(2, r, 2);
                b.hang_many(4, p, 2);
                b.build()?
            }
            T7 { r, p } => two_point(4, 1, 2, r, p, false)?,
            T8 { r, p } => two_point(6, 1, 4, r, p, false)?,
            WRT { n, r, t } => {
                let mut b = Builder::new();
                let c = b.vertex();
                b.hang_many(c, r, 1);
                b.hang_many(c, t, 2);
                b.hang(c, n - r - 2 * t - 1);
                b.build()?
            }
            Y1 { n } => end_loaded_path(n - 2, &[1, 1])?,
            Y2 { n } => end_loaded_path(n - 6, &[3, 3])?,
            Y3 { n } => end_loaded_path(n - 4, &[1, 3])?,
            KnMinusM { n } => {
                let k = Graph::complete(n)?;
                let m: Vec<(usize, usize)> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
                k.edit(&m, &[])?
            }
            ClassT1Member { n, tau } => {
                let stems = n - tau;
                spider(&surplus_first(stems, tau - 2), 1)?
            }
            ClassT2Member { n, tau } => spider(&surplus_first(n - tau, tau - 1), 0)?,
            ClassT3Member { n, tau } => {
                let stems = n - tau - 1;
                let mut leaves = surplus_first(stems + 1, tau);
                let centre = leaves.remove(0);
                if stems == 0 {
                    spider(&[], centre)?
                } else {
                    // Surplus goes to the first stem rather than the centre.
                    leaves[0] += centre - 2;
                    spider(&leaves, 2)?
                }
            }
        };
        debug_assert_eq!(g.order(), self.order());
        Ok(g)
    }

    /// The dissociation number of the member: closed form where one is
    /// known, otherwise the solver's value (memoized).
    pub fn expected_tau(&self) -> Result<usize> {
        use FamilySpec::*;
        self.check()?;
        Ok(match *self {
            MaxConnected { tau, .. }
            | CompleteBipartiteTau { tau, .. }
            | SDagger { tau, .. }
            | ClassT1Member { tau, .. }
            | ClassT2Member { tau, .. }
            | ClassT3Member { tau, .. } => tau,
            SK1K2 { .. } => self.order() - 1,
            T1 { .. } | T2 { .. } => self.order() - 2,
            KnMinusM { .. } => 2,
            _ => {
                static MEMO: OnceLock<Mutex<HashMap<FamilySpec, usize>>> = OnceLock::new();
                let memo = MEMO.get_or_init(Default::default);
                if let Some(&t) = memo.lock().expect("memo lock").get(self) {
                    return Ok(t);
                }
                let t = dissociation_tau(&self.build()?);
                memo.lock().expect("memo lock").insert(self.clone(), t);
                t
            }
        })
    }
}

/// `k` stems sharing `total` leaves: two each, the surplus on the first.
fn surplus_first(k: usize, total: usize) -> Vec<usize> {
    let mut v = vec![2; k];
    if let Some(first) = v.first_mut() {
        *first += total - 2 * k;
    }
    v
}

/// `P_4 = 0-1-2-3` with `r` paths at 0 and `p` at 3; optionally a pendant
/// edge at 0 (`T2`) or at 1 (`T′`).
fn t1(r: usize, p: usize, pendant_at_0: bool, pendant_at_1: bool) -> Result<Graph> {
    let mut b = Builder::new();
    let base = b.path(4);
    b.hang_many(base[0], r, 2);
    b.hang_many(base[3], p, 2);
    if pendant_at_0 {
        b.hang(base[0], 1);
    }
    if pendant_at_1 {
        b.hang(base[1], 1);
    }
    b.build()
}

/// Path on `len` vertices with `r` paths at `x` and `p` at `y`; optionally
/// a pendant edge at `x` placed before the paths.
fn two_point(len: usize, x: usize, y: usize, r: usize, p: usize, pendant_at_x: bool) -> Result<Graph> {
    let mut b = Builder::new();
    b.path(len);
    if pendant_at_x {
        b.hang(x, 1);
    }
    b.hang_many(x, r, 2);
    b.hang_many(y, p, 2);
    b.build()
}

/// Path on `len` vertices with pendant paths of the given lengths at vertex 0.
fn end_loaded_path(len: usize, hangs: &[usize]) -> Result<Graph> {
    let mut b = Builder::new();
    b.path(len);
    for &h in hangs {
        b.hang(0, h);
    }
    b.build()
}

/// Whether tree `g` lies in the given spider class for `(n, τ)`.
pub fn class_membership(g: &Graph, class: TreeClass, n: usize, tau: usize) -> Result<bool> {
    if !g.is_tree() {
        return Err(FamilyError::NotATree);
    }
    if g.order() != n || tau >= n {
        return Ok(false);
    }
    let leaves = g.structural_sets().pendants;
    Ok((0..n).any(|c| spider_shape(g, c, leaves).is_some_and(|s| s.matches(class, n, tau))))
}

struct SpiderShape {
    stems: usize,
    min_stem_leaves: usize,
    centre_leaves: usize,
    total_leaves: usize,
}

impl SpiderShape {
    fn matches(&self, class: TreeClass, n: usize, tau: usize) -> bool {
        let stems_ok = |want: usize| self.stems == want && (want == 0 || self.min_stem_leaves >= 2);
        match class {
            TreeClass::T1 => stems_ok(n - tau) && self.centre_leaves == 1 && self.total_leaves == tau - 1,
            TreeClass::T2 => stems_ok(n - tau) && self.centre_leaves == 0 && self.total_leaves == tau - 1,
            TreeClass::T3 => stems_ok(n - tau - 1) && self.centre_leaves >= 2 && self.total_leaves == tau,
        }
    }
}

/// Reads `g` as a two-level spider centred at `c`: every neighbour of `c` is
/// a leaf or a stem whose other neighbours are all leaves.
fn spider_shape(g: &Graph, c: usize, leaves: VertexSet) -> Option<SpiderShape> {
    let mut stems = 0;
    let mut min_stem_leaves = usize::MAX;
    let mut centre_leaves = 0;
    let mut covered = VertexSet::singleton(c);
    for s in g.neighbors(c).iter() {
        covered.insert(s);
        if leaves.contains(s) {
            centre_leaves += 1;
            continue;
        }
        let below = g.neighbors(s).without(c);
        if !below.is_subset(leaves) {
            return None;
        }
        covered = covered | below;
        stems += 1;
        min_stem_leaves = min_stem_leaves.min(below.len());
    }
    (covered == g.vertices()).then_some(SpiderShape {
        stems,
        min_stem_leaves,
        centre_leaves,
        total_leaves: leaves.len(),
    })
}
