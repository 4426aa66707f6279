//! Exhaustive and randomized verification of the extremal results, with
//! machine-readable reports.

mod appendix;
mod extremal;
mod lemmas;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dissociation::DissociationError;
use crate::enumeration::EnumerationError;
use crate::families::FamilyError;
use crate::graph::{graph6_encode, Graph, GraphError};
use crate::spectral::SpectralError;
use crate::transforms::TransformError;

pub use appendix::{appendix_grid_check, pi1_graph, pi1_quotient, GridOutcome, GridParams};
pub use extremal::tau_n_minus_2_candidates;

/// Report layout version.
pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_ALPHAS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 0.9];
/// Required separation between a claimed unique extremal graph and the rest.
pub const UNIQUENESS_GAP: f64 = 1e-7;
/// Required strictness for the monotonicity lemmas.
pub const STRICT_MARGIN: f64 = 1e-10;
/// Agreement between independently computed eigenvalues.
pub const AGREEMENT_TOL: f64 = 1e-9;
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{0}")]
    Params(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Dissociation(#[from] DissociationError),
}

pub type Result<T> = std::result::Result<T, VerifyError>;

macro_rules! claims {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum ClaimId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $name,)*
                }
            }
        }
    };
}

claims! {
    Thm1_1 => "THM_1_1",
    Thm1_2 => "THM_1_2",
    Thm1_3 => "THM_1_3",
    Thm1_4 => "THM_1_4",
    Thm1_5I => "THM_1_5_I",
    Thm1_5Ii => "THM_1_5_II",
    Thm1_5Iii => "THM_1_5_III",
    Thm1_5Iv => "THM_1_5_IV",
    Lem2_2 => "LEM_2_2",
    Lem2_4 => "LEM_2_4",
    Lem2_5 => "LEM_2_5",
    Lem2_6 => "LEM_2_6",
    Lem2_7 => "LEM_2_7",
    Lem2_8 => "LEM_2_8",
    Lem3_1 => "LEM_3_1",
    Lem4_1 => "LEM_4_1",
    Lem4_2 => "LEM_4_2",
    Lem4_4 => "LEM_4_4",
    Cor5_1 => "COR_5_1",
    Cor5_2 => "COR_5_2",
    Cor5_3 => "COR_5_3",
    Cor5_4 => "COR_5_4",
    Cor5_5 => "COR_5_5",
    AppendixGrid => "APPENDIX_GRID",
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase().replace(['-', '.'], "_");
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.name() == up)
            .ok_or_else(|| VerifyError::Params(format!("unknown claim '{s}'")))
    }
}

/// Requested parameters; unset fields take per-claim defaults.
#[derive(Clone, Debug, Default)]
pub struct VerifyParams {
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
    pub alphas: Option<Vec<f64>>,
    pub tau: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub grid: Option<GridParams>,
}

impl VerifyParams {
    /// Only order `n`.
    pub fn order(n: usize) -> Self {
        VerifyParams {
            n_min: Some(n),
            n_max: Some(n),
            ..Default::default()
        }
    }
}

/// Parameters actually used, echoed in the report.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ResolvedParams {
    pub n_min: usize,
    pub n_max: usize,
    pub alphas: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridParams>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One extremal graph found by a sweep.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct WinnerRecord {
    pub g6: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    pub alpha: f64,
    pub lambda: f64,
    /// Gap to the runner-up (or slack of the checked inequality).
    pub margin: Option<f64>,
}

/// A violating instance; the graph6 strings replay it through the CLI.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Counterexample {
    pub g6: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub related_g6: Vec<String>,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    pub detail: String,
    pub values: BTreeMap<String, f64>,
}

impl Counterexample {
    pub(crate) fn new(g: &Graph, detail: impl Into<String>) -> Self {
        Counterexample {
            g6: graph6_encode(g),
            related_g6: Vec::new(),
            n: g.order(),
            tau: None,
            alpha: None,
            detail: detail.into(),
            values: BTreeMap::new(),
        }
    }

    pub(crate) fn tau(mut self, tau: usize) -> Self {
        self.tau = Some(tau);
        self
    }

    pub(crate) fn alpha(mut self, alpha: f64) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub(crate) fn related(mut self, g: &Graph) -> Self {
        self.related_g6.push(graph6_encode(g));
        self
    }

    pub(crate) fn value(mut self, key: &str, v: f64) -> Self {
        self.values.insert(key.to_string(), v);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub claim_id: ClaimId,
    pub params: ResolvedParams,
    pub status: Status,
    /// Number of individual instances checked.
    pub checked: usize,
    /// Smallest margin observed over all checked instances.
    pub min_margin: Option<f64>,
    pub winners: Vec<WinnerRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub runtime_s: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line for terminals.
    pub fn summary(&self) -> String {
        let margin = self.min_margin.map_or("-".to_string(), |m| format!("{m:.3e}"));
        let mut line = format!(
            "{} {} checked={} min_margin={} n={}..{}",
            self.claim_id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            margin,
            self.params.n_min,
            self.params.n_max
        );
        if let Some(c) = &self.counterexample {
            line.push_str(&format!(" counterexample={} ({})", c.g6, c.detail));
        }
        line
    }
}

/// Running state shared by the suites.
#[derive(Default)]
pub(crate) struct Outcome {
    pub checked: usize,
    pub min_margin: Option<f64>,
    pub winners: Vec<WinnerRecord>,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn margin(&mut self, m: f64) {
        self.min_margin = Some(self.min_margin.map_or(m, |x| x.min(m)));
    }

    pub fn fail(&mut self, c: Counterexample) {
        if self.counterexample.is_none() {
            self.counterexample = Some(c);
        }
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }
}

fn defaults(claim: ClaimId) -> (usize, usize, Vec<f64>, Option<usize>) {
    use ClaimId::*;
    let grid = DEFAULT_ALPHAS.to_vec();
    let half = vec![0.5];
    match claim {
        Thm1_1 => (3, 7, grid, None),
        Cor5_1 => (3, 7, half, None),
        Thm1_2 => (1, 8, grid, None),
        Cor5_2 => (3, 8, half, None),
        Thm1_3 => (3, 9, grid, None),
        Cor5_3 => (3, 9, half, None),
        Thm1_4 => (3, 8, grid, None),
        Cor5_4 => (3, 8, half, None),
        Thm1_5I | Thm1_5Ii => (3, 8, grid, None),
        Thm1_5Iii => (3, 8, grid, None),
        Thm1_5Iv => (6, 8, grid, None),
        Cor5_5 => (3, 8, half, None),
        Lem2_2 => (3, 10, grid, None),
        Lem2_4 => (3, 10, grid, Some(200)),
        Lem2_5 => (2, 7, grid, Some(200)),
        Lem2_6 => (6, 12, grid, Some(200)),
        Lem2_7 => (2, 10, grid, Some(200)),
        Lem2_8 => (5, 8, vec![], Some(200)),
        Lem3_1 => (3, 14, grid, None),
        Lem4_1 => (2, 9, vec![], Some(500)),
        Lem4_2 => (6, 12, grid, Some(100)),
        Lem4_4 => (8, 16, grid, None),
        AppendixGrid => (2, 12, vec![], None),
    }
}

/// Smallest order a suite accepts.
fn floor(claim: ClaimId) -> usize {
    match claim {
        ClaimId::Thm1_2 | ClaimId::Cor5_2 => 1,
        c => defaults(c).0,
    }
}

fn resolve(claim: ClaimId, p: &VerifyParams) -> Result<ResolvedParams> {
    let (lo, hi, alphas, samples) = defaults(claim);
    let n_min = p.n_min.unwrap_or(lo);
    let n_max = p.n_max.unwrap_or(hi);
    if n_min < floor(claim) {
        return Err(VerifyError::Params(format!(
            "{claim}: smallest supported order is {}",
            floor(claim)
        )));
    }
    if n_min > n_max {
        return Err(VerifyError::Params(format!("{claim}: empty order range {n_min}..{n_max}")));
    }
    let alphas = p.alphas.clone().unwrap_or(alphas);
    if let Some(a) = alphas.iter().find(|a| !(0.0..1.0).contains(*a)) {
        return Err(VerifyError::Params(format!("alpha {a} outside [0, 1)")));
    }
    let uses_rng = samples.is_some();
    Ok(ResolvedParams {
        n_min,
        n_max,
        alphas,
        tau: p.tau,
        samples: samples.map(|d| p.samples.unwrap_or(d)),
        seed: uses_rng.then(|| p.seed.unwrap_or(DEFAULT_SEED)),
        grid: (claim == ClaimId::AppendixGrid).then(|| {
            let mut g = p.grid.clone().unwrap_or_default();
            if let Some(n) = p.n_max {
                g.a_max = n;
            }
            g
        }),
    })
}

/// Runs one claim's suite.
pub fn verify(claim: ClaimId, params: &VerifyParams) -> Result<VerificationReport> {
    use ClaimId::*;
    let start = Instant::now();
    let rp = resolve(claim, params)?;
    let out = match claim {
        Thm1_1 | Cor5_1 => extremal::max_connected(&rp, claim == Cor5_1)?,
        Thm1_2 | Cor5_2 => extremal::bipartite_bound(&rp, claim == Cor5_2)?,
        Thm1_3 | Cor5_3 => extremal::max_trees(&rp, claim == Cor5_3)?,
        Thm1_4 | Cor5_4 => extremal::minimizers_are_trees(&rp)?,
        Thm1_5I => extremal::min_tau_two(&rp)?,
        Thm1_5Ii => extremal::min_path(&rp)?,
        Thm1_5Iii => extremal::min_tau_n_minus_1(&rp)?,
        Thm1_5Iv => extremal::min_tau_n_minus_2(&rp)?,
        Cor5_5 => extremal::signless_minimizers(&rp)?,
        Lem2_2 => extremal::star_bound_trees(&rp)?,
        Lem2_4 => lemmas::shift(&rp)?,
        Lem2_5 => lemmas::rebalance(&rp)?,
        Lem2_6 => lemmas::internal_subdivision(&rp)?,
        Lem2_7 => lemmas::equitable_quotients(&rp)?,
        Lem2_8 => lemmas::good_sets(&rp)?,
        Lem3_1 => lemmas::spider_quartic(&rp)?,
        Lem4_1 => lemmas::subdivision_arithmetic(&rp)?,
        Lem4_2 => lemmas::optimal_subdivision(&rp)?,
        Lem4_4 => lemmas::t1_rebalance(&rp)?,
        AppendixGrid => appendix::grid_suite(rp.grid.as_ref().expect("grid resolved"))?,
    };
    let status = if out.failed() { Status::Fail } else { Status::Pass };
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        claim_id: claim,
        params: rp,
        status,
        checked: out.checked,
        min_margin: out.min_margin,
        winners: out.winners,
        counterexample: out.counterexample,
        notes: out.notes,
        runtime_s: start.elapsed().as_secs_f64(),
    })
}
