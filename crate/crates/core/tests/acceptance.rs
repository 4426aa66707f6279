//! End-to-end acceptance run: one line per criterion, with the measured
//! numbers and runtime.
//!
//! Two criteria fail for reasons that lie in the statements themselves and
//! are listed in `KNOWN_FAILURES`; any other failure fails the test.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use specdiss::dissociation::dissociation_tau;
use specdiss::enumeration::{cache_dir, shared_corpus, CorpusKind, CACHE_DIR_ENV};
use specdiss::families::FamilySpec;
use specdiss::graph::{graph6_decode, graph6_encode, Graph};
use specdiss::random::random_graph;
use specdiss::spectral::{alpha_matrix, index, spectral_radius};
use specdiss::verify::{verify, ClaimId, Status, VerificationReport, VerifyParams};

/// Criteria whose failure is a property of the claim being checked:
/// 3: at n = 3, tau = 2 the quartic has a root above the index for alpha > 0.
/// 5: K_2 exceeds the bipartite bound for alpha < 1/2 and K_1 misses it for alpha > 0.
const KNOWN_FAILURES: &[usize] = &[3, 5];

type Check = Result<String, String>;

fn run(claim: ClaimId, p: VerifyParams) -> Result<VerificationReport, String> {
    verify(claim, &p).map_err(|e| format!("{claim}: {e}"))
}

fn expect_pass(r: &VerificationReport) -> Check {
    match r.status {
        Status::Pass => Ok(r.summary()),
        Status::Fail => Err(format!("{} {:?}", r.summary(), r.counterexample.as_ref().map(|c| &c.values))),
    }
}

fn range(lo: usize, hi: usize) -> VerifyParams {
    VerifyParams {
        n_min: Some(lo),
        n_max: Some(hi),
        ..Default::default()
    }
}

/// Largest root of `det(xI − M)` by bisection on positive definiteness of
/// `xI − M`, tested through the signs of its leading principal minors.
fn oracle_largest_root(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let positive_definite = |x: f64| {
        let mut a: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { x - m[i][j] } else { -m[i][j] }).collect())
            .collect();
        for k in 0..n {
            // a[k][k] is the ratio of consecutive leading minors.
            if a[k][k] <= 0.0 {
                return false;
            }
            for i in k + 1..n {
                let f = a[i][k] / a[k][k];
                for j in k..n {
                    a[i][j] -= f * a[k][j];
                }
            }
        }
        true
    };
    let r: f64 = m.iter().map(|row| row.iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max) + 1.0;
    let (mut lo, mut hi) = (-r, r);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if positive_definite(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo < 1e-14 {
            break;
        }
    }
    0.5 * (lo + hi)
}

fn brute_force_tau(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).filter(|&v| s >> v & 1 == 1).all(|v| {
                (0..n).filter(|&u| u != v && s >> u & 1 == 1 && g.has_edge(u, v)).count() <= 1
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn c1_eigensolver() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for _ in 0..2000 {
        let n = rng.gen_range(1..=6);
        let density = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, density).map_err(|e| e.to_string())?;
        for alpha in [0.0, 0.3, 0.5, 0.8] {
            let m = alpha_matrix(&g, alpha).map_err(|e| e.to_string())?;
            let lam = spectral_radius(&m, g.is_connected()).map_err(|e| e.to_string())?.lambda;
            let root = oracle_largest_root(&m.matrix().rows());
            worst = worst.max((lam - root).abs());
        }
    }
    if worst < 1e-9 {
        Ok(format!("2000 graphs x 4 alphas, largest deviation {worst:.2e}"))
    } else {
        Err(format!("largest deviation {worst:.2e}"))
    }
}

fn c2_dissociation() -> Check {
    let mut checked = 0;
    for n in 1..=7 {
        for g in &shared_corpus(CorpusKind::Connected, n).map_err(|e| e.to_string())?.members {
            if dissociation_tau(g) != brute_force_tau(g) {
                return Err(format!("mismatch on {}", graph6_encode(g)));
            }
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let density = rng.gen_range(0.05..0.8);
        let g = random_graph(&mut rng, n, density).map_err(|e| e.to_string())?;
        if dissociation_tau(&g) != brute_force_tau(&g) {
            return Err(format!("mismatch on {}", graph6_encode(&g)));
        }
    }
    Ok(format!("{checked} connected classes n <= 7 and 1000 random graphs agree"))
}

fn c3_quartic() -> Check {
    let s = FamilySpec::SDagger { n: 8, tau: 6 }.build().map_err(|e| e.to_string())?;
    let lam = index(&s, 0.0).map_err(|e| e.to_string())?;
    let closed = ((7.0 + 17f64.sqrt()) / 2.0).sqrt();
    let value = format!("S-dagger(8,6) at alpha 0: {lam:.7} vs sqrt((7+sqrt17)/2) = {closed:.7}, stated 2.358320");
    if (lam - closed).abs() >= 1e-9 {
        return Err(value);
    }
    let all = run(ClaimId::Lem3_1, range(3, 14))?;
    let tail = run(ClaimId::Lem3_1, range(4, 14))?;
    match (all.status, tail.status) {
        (Status::Pass, _) => Ok(format!("{}; {value}", all.summary())),
        (Status::Fail, t) => {
            let c = all.counterexample.as_ref().expect("failures carry a witness");
            Err(format!(
                "{} alpha={:?} {:?}; n in 4..14: {}; {value}",
                all.summary(),
                c.alpha,
                c.values,
                if t == Status::Pass { "pass" } else { "FAIL" }
            ))
        }
    }
}

fn c4_tree_maximizers() -> Check {
    for (n, count) in [(8, 23), (9, 47)] {
        let got = shared_corpus(CorpusKind::Trees, n).map_err(|e| e.to_string())?.len();
        if got != count {
            return Err(format!("{got} trees of order {n}, expected {count}"));
        }
    }
    let r = run(ClaimId::Thm1_3, range(8, 9))?;
    expect_pass(&r)?;
    let gap = r.winners.iter().filter_map(|w| w.margin).fold(f64::INFINITY, f64::min);
    if gap > 1e-7 {
        Ok(format!("{}; smallest runner-up gap {gap:.3e}", r.summary()))
    } else {
        Err(format!("runner-up gap {gap:.3e}"))
    }
}

fn c5_bipartite() -> Check {
    let all = run(ClaimId::Thm1_2, range(1, 8))?;
    let tail = run(ClaimId::Thm1_2, range(3, 8))?;
    let signless = run(ClaimId::Cor5_2, range(3, 8))?;
    let mut worst: f64 = 0.0;
    for n in 2usize..=8 {
        for tau in n.div_ceil(2)..n {
            let k = Graph::complete_bipartite(tau, n - tau).map_err(|e| e.to_string())?;
            let q = 2.0 * index(&k, 0.5).map_err(|e| e.to_string())?;
            worst = worst.max((q - n as f64).abs());
        }
    }
    if worst >= 1e-10 {
        return Err(format!("2 lambda_1/2(K_(tau,n-tau)) deviates from n by {worst:.2e}"));
    }
    let rest = format!(
        "n in 3..8: {}; {}; |2 lambda_1/2(K) - n| <= {worst:.1e}",
        tail.summary(),
        signless.summary()
    );
    if tail.status == Status::Fail || signless.status == Status::Fail {
        return Err(rest);
    }
    match all.status {
        Status::Pass => Ok(format!("{}; {rest}", all.summary())),
        Status::Fail => {
            let small = run(ClaimId::Thm1_2, range(2, 2))?;
            let c = small.counterexample.as_ref().expect("failures carry a witness");
            Err(format!(
                "{}; n=2: {} {} at alpha={:?} {:?}; {rest}",
                all.summary(),
                c.g6,
                c.detail,
                c.alpha,
                c.values
            ))
        }
    }
}

fn c6_connected_maximizers() -> Check {
    // Orders 1 and 2 have a single connected graph, K_1 and K_2, which is
    // the claimed maximizer with tau = n.
    for n in 1..=2 {
        let c = shared_corpus(CorpusKind::Connected, n).map_err(|e| e.to_string())?;
        let k = Graph::complete(n).map_err(|e| e.to_string())?;
        if c.len() != 1 || c.members[0] != k || c.taus[0] != n {
            return Err(format!("unexpected connected corpus at n = {n}"));
        }
    }
    let thm = run(ClaimId::Thm1_1, range(3, 7))?;
    let cor = run(ClaimId::Cor5_1, range(3, 7))?;
    Ok(format!("{}; {}", expect_pass(&thm)?, expect_pass(&cor)?))
}

fn c7_minimizers() -> Check {
    for n in 1..=2 {
        let c = shared_corpus(CorpusKind::Connected, n).map_err(|e| e.to_string())?;
        if !c.members.iter().all(Graph::is_tree) {
            return Err(format!("non-tree at n = {n}"));
        }
    }
    let mut lines = Vec::new();
    for claim in [
        ClaimId::Thm1_4,
        ClaimId::Thm1_5I,
        ClaimId::Thm1_5Ii,
        ClaimId::Thm1_5Iii,
        ClaimId::Thm1_5Iv,
        ClaimId::Cor5_4,
        ClaimId::Cor5_5,
    ] {
        let r = run(claim, VerifyParams { n_max: Some(8), ..Default::default() })?;
        lines.push(expect_pass(&r)?);
    }
    Ok(lines.join("; "))
}

fn c8_lemmas() -> Check {
    let mut lines = Vec::new();
    for (claim, samples, strict) in [
        (ClaimId::Lem2_4, 200, true),
        (ClaimId::Lem2_5, 200, true),
        (ClaimId::Lem2_6, 200, true),
        (ClaimId::Lem4_1, 500, false),
        (ClaimId::Lem2_8, 0, false),
        (ClaimId::Lem4_2, 100, true),
    ] {
        let r = run(claim, VerifyParams::default())?;
        let line = expect_pass(&r)?;
        if r.params.samples.is_some_and(|s| s < samples) || r.checked < samples {
            return Err(format!("{line}: fewer than {samples} applications"));
        }
        if strict && !r.min_margin.is_some_and(|m| m > 1e-10) {
            return Err(format!("{line}: margin not above 1e-10"));
        }
        lines.push(line);
    }
    Ok(lines.join("; "))
}

fn c9_grid() -> Check {
    let r = run(ClaimId::AppendixGrid, VerifyParams::default())?;
    let line = expect_pass(&r)?;
    let g = r.params.grid.as_ref().expect("grid params echoed");
    if g.a_max < 12 || g.bc_max < 8 || g.alpha_step > 0.05 || g.x_step > 0.01 {
        return Err(format!("grid narrower than required: {g:?}"));
    }
    Ok(format!("{line}; {}", r.notes.join("; ")))
}

fn c10_counts_and_graph6() -> Check {
    const TREES: [usize; 12] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
    const CONNECTED: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];
    let mut lines = 0;
    for (kind, max, counts) in [
        (CorpusKind::Trees, 12, Some(&TREES[..])),
        (CorpusKind::Connected, 8, None),
        (CorpusKind::ConnectedBipartite, 8, None),
    ] {
        for n in 1..=max {
            let c = shared_corpus(kind, n).map_err(|e| e.to_string())?;
            let expected = match kind {
                CorpusKind::Connected if n <= 7 => Some(CONNECTED[n - 1]),
                _ => counts.map(|v| v[n - 1]),
            };
            if expected.is_some_and(|e| e != c.len()) {
                return Err(format!("{kind} n={n}: {} members, expected {expected:?}", c.len()));
            }
            let path = cache_dir().join(format!("{kind}_{n}.g6"));
            let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            for (line, g) in text.lines().zip(&c.members) {
                let back = graph6_decode(line).map_err(|e| e.to_string())?;
                if &back != g || graph6_encode(&back) != line {
                    return Err(format!("round trip failed on {line}"));
                }
                lines += 1;
            }
            if text.lines().count() != c.len() {
                return Err(format!("{} has the wrong number of lines", path.display()));
            }
        }
    }
    Ok(format!("tree counts n <= 12 and connected counts n <= 7 match; {lines} cached graph6 lines round trip"))
}

#[test]
fn acceptance() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var(CACHE_DIR_ENV, dir.path());
    let criteria: [(usize, &str, u64, fn() -> Check); 10] = [
        (1, "eigensolver vs characteristic polynomial", 30, c1_eigensolver),
        (2, "dissociation solver vs brute force", 120, c2_dissociation),
        (3, "S-dagger index vs quartic root", 10, c3_quartic),
        (4, "tree maximizers are S-dagger", 60, c4_tree_maximizers),
        (5, "bipartite bound and equality", 300, c5_bipartite),
        (6, "connected maximizers", 300, c6_connected_maximizers),
        (7, "minimizers", 300, c7_minimizers),
        (8, "lemma property suites", 120, c8_lemmas),
        (9, "quotient polynomial grid", 120, c9_grid),
        (10, "corpus counts and graph6 round trip", 300, c10_counts_and_graph6),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let mut result = f();
        let took = start.elapsed();
        if result.is_ok() && took > Duration::from_secs(limit) {
            result = Err(format!("took {took:.1?}, limit {limit} s"));
        }
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("[{tag}] {id:>2} {name} ({:.2} s): {detail}", took.as_secs_f64());
        if result.is_err() {
            failed.push(id);
        }
    }
    let unexpected: Vec<_> = failed.iter().filter(|id| !KNOWN_FAILURES.contains(id)).collect();
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:?}");
}
