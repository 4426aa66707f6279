//! Randomized and parametric checks of the auxiliary lemmas.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dissociation::{dissociation_tau, good_maximum_set};
use crate::enumeration::{shared_corpus, CorpusKind};
use crate::families::FamilySpec;
use crate::graph::{color_refinement, Graph, VertexSet};
use crate::random::{random_connected_graph, random_subset, random_tree};
use crate::spectral::{
    alpha_matrix, index, jacobi_eigen, largest_real_root, p_alpha_coeffs, quotient_matrix, spectral_radius,
    DenseMatrix, Partition, Tolerances,
};
use crate::transforms::{
    internal_paths, optimal_subdivision_transform, rebalance_pendant_paths, shift_neighbors, subdivide,
    iterate_optimal_subdivision, triple_subdivide, RebalanceDirection,
};

use super::{Counterexample, Outcome, ResolvedParams, Result, AGREEMENT_TOL, STRICT_MARGIN};

fn rng(rp: &ResolvedParams) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(rp.seed.unwrap_or(super::DEFAULT_SEED))
}

fn samples(rp: &ResolvedParams) -> usize {
    rp.samples.unwrap_or(200)
}

fn pick_alpha(rng: &mut ChaCha8Rng, rp: &ResolvedParams) -> f64 {
    *rp.alphas.choose(rng).unwrap_or(&0.0)
}

/// Records `before − after` (for a decreasing move) and fails when it is not
/// strictly positive.
fn strict_drop(out: &mut Outcome, before: &Graph, after: &Graph, alpha: f64, what: &str) -> Result<()> {
    let (lb, la) = (index(before, alpha)?, index(after, alpha)?);
    out.checked += 1;
    let drop = lb - la;
    if drop <= STRICT_MARGIN {
        out.fail(
            Counterexample::new(before, format!("{what}: index did not strictly decrease"))
                .related(after)
                .alpha(alpha)
                .value("lambda_before", lb)
                .value("lambda_after", la),
        );
    } else {
        out.margin(drop);
    }
    Ok(())
}

fn max_attempts(rp: &ResolvedParams) -> usize {
    samples(rp) * 200
}

fn exhausted(out: &mut Outcome, rp: &ResolvedParams, what: &str) {
    if out.checked < samples(rp) && !out.failed() {
        out.notes.push(format!(
            "only {} valid {what} found within the attempt budget",
            out.checked
        ));
    }
}

pub(super) fn shift(rp: &ResolvedParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut rng = rng(rp);
    for _ in 0..max_attempts(rp) {
        if out.checked >= samples(rp) || out.failed() {
            break;
        }
        let n = rng.gen_range(rp.n_min..=rp.n_max);
        let p = rng.gen_range(0.15..0.6);
        let g = random_connected_graph(&mut rng, n, p)?;
        let alpha = pick_alpha(&mut rng, rp);
        let x = spectral_radius(&alpha_matrix(&g, alpha)?, true)?.perron;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v {
            continue;
        }
        let (u, v) = if x[u] >= x[v] { (u, v) } else { (v, u) };
        let candidates = g.neighbors(v) - g.neighbors(u) - VertexSet::singleton(u);
        if candidates.is_empty() {
            continue;
        }
        let mut moved = random_subset(&mut rng, candidates, 0.5);
        if moved.is_empty() {
            moved.insert(candidates.iter().nth(rng.gen_range(0..candidates.len())).expect("non-empty"));
        }
        let after = shift_neighbors(&g, u, v, moved)?.after;
        // Shifting toward the larger Perron entry raises the index.
        strict_drop(&mut out, &after, &g, alpha, "neighbour shift")?;
    }
    exhausted(&mut out, rp, "shifts");
    Ok(out)
}

pub(super) fn rebalance(rp: &ResolvedParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut rng = rng(rp);
    for _ in 0..max_attempts(rp) {
        if out.checked >= samples(rp) || out.failed() {
            break;
        }
        let n = rng.gen_range(rp.n_min.max(2)..=rp.n_max);
        let density = rng.gen_range(0.2..0.7);
        let base = random_connected_graph(&mut rng, n, density)?;
        let u = rng.gen_range(0..n);
        let s = rng.gen_range(1..=3);
        let t = rng.gen_range(1..=s);
        let (g, _) = base.attach_path(u, s)?;
        let (g, _) = g.attach_path(u, t)?;
        let alpha = pick_alpha(&mut rng, rp);
        let after = rebalance_pendant_paths(&g, u, s, t, RebalanceDirection::Away)?.after;
        strict_drop(&mut out, &g, &after, alpha, "pendant path rebalance")?;
    }
    exhausted(&mut out, rp, "rebalances");
    Ok(out)
}

/// Trees on a path with two leaves at each end: their adjacency index is
/// exactly 2 whatever the path length, so subdividing the internal path
/// leaves the adjacency index unchanged.
pub(crate) fn is_double_fork(g: &Graph) -> bool {
    if !g.is_tree() {
        return false;
    }
    let b = g.branching_vertices();
    b.len() == 2
        && b.iter().all(|v| {
            g.degree(v) == 3 && (g.neighbors(v) & g.structural_sets().pendants).len() == 2
        })
}

pub(super) fn internal_subdivision(rp: &ResolvedParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut rng = rng(rp);
    let mut excluded = 0;
    for k in 0..max_attempts(rp) {
        if out.checked >= samples(rp) || out.failed() {
            break;
        }
        let n = rng.gen_range(rp.n_min..=rp.n_max);
        let g = if k % 2 == 0 {
            random_tree(&mut rng, n)?
        } else {
            let density = rng.gen_range(0.05..0.3);
            random_connected_graph(&mut rng, n, density)?
        };
        let paths = internal_paths(&g);
        if paths.is_empty() {
            continue;
        }
        let path = paths.choose(&mut rng).expect("non-empty");
        let i = rng.gen_range(0..path.len() - 1);
        let alpha = pick_alpha(&mut rng, rp);
        if alpha == 0.0 && is_double_fork(&g) {
            excluded += 1;
            continue;
        }
        let after = subdivide(&g, path[i], path[i + 1])?.after;
        strict_drop(&mut out, &g, &after, alpha, "internal path subdivision")?;
    }
    if excluded > 0 {
        out.notes.push(format!(
            "{excluded} samples skipped: alpha = 0 on a path with two leaves at each end (index stays 2)"
        ));
    }
    exhausted(&mut out, rp, "subdivisions");
    Ok(out)
}

/// `S^{1/2} B S^{−1/2}` for block sizes `S`; symmetric for the quotient of a
/// symmetric matrix.
fn symmetrized(q: &DenseMatrix<f64>, sizes: &[usize]) -> DenseMatrix<f64> {
    let t = q.dim();
    let mut m = DenseMatrix::zeros(t);
    for i in 0..t {
        for j in 0..t {
            m.set(i, j, q.get(i, j) * (sizes[i] as f64 / sizes[j] as f64).sqrt());
        }
    }
    m
}

pub(super) fn equitable_quotients(rp: &ResolvedParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut rng = rng(rp);
    let tol = Tolerances::default();
    let mut worst: f64 = 0.0;
    for _ in 0..samples(rp) {
        let n = rng.gen_range(rp.n_min..=rp.n_max);
        let density = rng.gen_range(0.1..0.6);
        let g = random_connected_graph(&mut rng, n, density)?;
        let alpha = pick_alpha(&mut rng, rp);
        let p = Partition::from_sets(n, &color_refinement(&g))?;
        let q = quotient_matrix(&g, alpha, &p)?;
        let full = jacobi_eigen(alpha_matrix(&g, alpha)?.matrix(), &tol)?.values;
        let sizes: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
        let sub = jacobi_eigen(&symmetrized(q.entries(), &sizes), &tol)?.values;
        let radius = q.spectral_radius(&tol)?;
        out.checked += 1;
        let mut dev = (radius - full[0]).abs();
        for mu in &sub {
            let nearest = full.iter().map(|l| (l - mu).abs()).fold(f64::INFINITY, f64::min);
            dev = dev.max(nearest);
        }
        worst = worst.max(dev);
        if dev > AGREEMENT_TOL {
            out.fail(
                Counterexample::new(&g, format!("quotient over {p} disagrees with the full spectrum"))
                    .alpha(alpha)
                    .value("deviation", dev)
                    .value("quotient_radius", radius)
                    .value("lambda", full[0]),
            );
            break;
        }
    }
    out.notes.push(format!("largest eigenvalue deviation {worst:.3e}"));
    Ok(out)
}

pub(super) fn good_sets(rp: &ResolvedParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let check = |out: &mut Outcome, g: &Graph| {
        out.checked += 1;
        if let Err(e) = good_maximum_set(g) {
            out.fail(Counterexample::new(g, e.to_string()).tau(dissociation_tau(g)));
        }
    };
    for n in rp.n_min..=rp.n_max.min(8) {
        let corpus = shared_corpus(CorpusKind::Connected, n)?;
        for g in &corpus.members {
            check(&mut out, g);
            if out.failed() {
                return Ok(out);
            }
        }
    }
    let mut rng = rng(rp);
    for _ in 0..samples(rp) {
        let n = rng.gen_range(5..=10);
        let density = rng.gen_range(0.0..0.4);
        let g = random_connected_graph(&mut rng, n, density)?;
        check(&mut out, &g);
        if out.failed() {
            break;
        }
    }
    out.notes.push("connected graphs only: a P3 component already rules out a good set".into());
    Ok(out)
}

pub(super) fn spider_quartic(rp: &ResolvedParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut worst: f64 = 0.0;
    for n in rp.n_min..=rp.n_max {
        for tau in 1..n {
            let spec = FamilySpec::SDagger { n, tau };
            if spec.check().is_err() || rp.tau.is_some_and(|t| t != tau) {
                continue;
            }
            let g = spec.build()?;
            for &alpha in &rp.alphas {
                let lam = index(&g, alpha)?;
                let root = largest_real_root(&p_alpha_coeffs(n, tau, alpha), n as f64)?;
                out.checked += 1;
                let dev = (lam - root).abs();
                worst = worst.max(dev);
                if dev >= AGREEMENT_TOL {
                    out.fail(
                        Counterexample::new(&g, "index differs from the largest quartic root")
                            .tau(tau)
                            .alpha(alpha)
                            .value("lambda", lam)
                            .value("root", root),
                    );
                    return Ok(out);
                }
            }
        }
    }
    out.notes.push(format!("largest deviation {worst:.3e}"));
    Ok(out)
}

pub(super) fn subdivision_arithmetic(rp: &ResolvedParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut rng = rng(rp);
    for _ in 0..samples(rp) {
        let n = rng.gen_range(rp.n_min.max(2)..=rp.n_max);
        let density = rng.gen_range(0.1..0.7);
        let g = random_connected_graph(&mut rng, n, density)?;
        let edges = g.edges();
        let &(u, v) = edges.choose(&mut rng).expect("connected graph with n >= 2 has an edge");
        let tau = dissociation_tau(&g);
        let single = subdivide(&g, u, v)?.after;
        let triple = triple_subdivide(&g, u, v)?.after;
        let (t1, t3) = (dissociation_tau(&single), dissociation_tau(&triple));
        out.checked += 1;
        if !(t1 == tau || t1 == tau + 1) {
            out.fail(
                Counterexample::new(&g, format!("subdividing {u}-{v} moved tau from {tau} to {t1}"))
                    .related(&single)
                    .tau(tau),
            );
            break;
        }
        if t3 != tau + 2 {
            out.fail(
                Counterexample::new(&g, format!("triple subdividing {u}-{v} moved tau from {tau} to {t3}"))
                    .related(&triple)
                    .tau(tau),
            );
            break;
        }
    }
    Ok(out)
}

pub(super) fn optimal_subdivision(rp: &ResolvedParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut rng = rng(rp);
    let mut trees = 0;
    let mut cases = [0usize; 4];
    let mut end_at_floor = 0;
    for _ in 0..max_attempts(rp) {
        if trees >= samples(rp) || out.failed() {
            break;
        }
        let n = rng.gen_range(rp.n_min..=rp.n_max);
        let t = random_tree(&mut rng, n)?;
        if t.branching_vertices().len() < 2 {
            continue;
        }
        trees += 1;
        let rec = optimal_subdivision_transform(&t)?;
        cases[rec.case.expect("case recorded") as usize - 1] += 1;
        let after = &rec.after;
        let (tb, ta) = (dissociation_tau(&t), dissociation_tau(after));
        if after.order() != n || !after.is_tree() || !(ta == tb || ta + 1 == tb) {
            out.checked += 1;
            out.fail(
                Counterexample::new(&t, "transform output is not an optimal subdivision graph")
                    .related(after)
                    .tau(tb)
                    .value("tau_after", ta as f64)
                    .value("order_after", after.order() as f64),
            );
            break;
        }
        for &alpha in &rp.alphas {
            strict_drop(&mut out, &t, after, alpha, "optimal subdivision")?;
        }
        let steps = iterate_optimal_subdivision(&t)?;
        let last = steps.last().map_or(&t, |s| &s.after);
        if last.branching_vertices().len() > 1 {
            out.fail(Counterexample::new(&t, "iteration stopped with several branching vertices").related(last));
            break;
        }
        if dissociation_tau(last) == (2 * n).div_ceil(3) {
            end_at_floor += 1;
        }
    }
    out.notes.push(format!(
        "{trees} trees; diameter-path cases 1-4 occurred {cases:?} times; \
         {end_at_floor} iterations ended at tau = ceil(2n/3)"
    ));
    Ok(out)
}

/// Blocks `[r ends, r mids, 0, 1, 2, 3, p mids, p ends]` of `T¹_{r,p}`
/// with empty blocks dropped.
fn t1_partition(g: &Graph) -> Result<Partition> {
    let side = |root: usize, inner: usize| {
        let mids = g.neighbors(root).without(inner);
        let ends: VertexSet = mids.iter().flat_map(|m| g.neighbors(m).without(root).iter()).collect();
        (mids, ends)
    };
    let (rm, re) = side(0, 1);
    let (pm, pe) = side(3, 2);
    let blocks: Vec<VertexSet> = [
        re,
        rm,
        VertexSet::singleton(0),
        VertexSet::singleton(1),
        VertexSet::singleton(2),
        VertexSet::singleton(3),
        pm,
        pe,
    ]
    .into_iter()
    .filter(|b| !b.is_empty())
    .collect();
    Ok(Partition::from_sets(g.order(), &blocks)?)
}

pub(super) fn t1_rebalance(rp: &ResolvedParams) -> Result<Outcome> {
    let mut out = Outcome::default();
    let tol = Tolerances::default();
    for n in (rp.n_min..=rp.n_max).filter(|n| n % 2 == 0 && *n >= 8) {
        let total = (n - 4) / 2;
        for p in 1..=total / 2 {
            let r = total - p;
            let g = FamilySpec::T1 { r, p }.build()?;
            let h = FamilySpec::T1 { r: r + 1, p: p - 1 }.build()?;
            for &alpha in &rp.alphas {
                strict_drop(&mut out, &h, &g, alpha, &format!("T1({r},{p}) against T1({},{})", r + 1, p - 1))?;
                for graph in [&g, &h] {
                    let q = quotient_matrix(graph, alpha, &t1_partition(graph)?)?;
                    let (qr, lam) = (q.spectral_radius(&tol)?, index(graph, alpha)?);
                    if (qr - lam).abs() > AGREEMENT_TOL {
                        out.fail(
                            Counterexample::new(graph, "quotient radius differs from the index")
                                .alpha(alpha)
                                .value("quotient_radius", qr)
                                .value("lambda", lam),
                        );
                    }
                }
                if out.failed() {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_fork_index_is_two() {
        // Leaves 0,1 on 2; path 2-3-4; leaves 5,6 on 4.
        let g = Graph::from_edges(7, [(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        assert!(is_double_fork(&g));
        let h = subdivide(&g, 2, 3).unwrap().after;
        assert!((index(&g, 0.0).unwrap() - 2.0).abs() < 1e-10);
        assert!((index(&h, 0.0).unwrap() - 2.0).abs() < 1e-10);
        assert!(index(&g, 0.3).unwrap() > index(&h, 0.3).unwrap() + 1e-10);
    }

    #[test]
    fn t1_blocks() {
        let g = FamilySpec::T1 { r: 2, p: 1 }.build().unwrap();
        let p = t1_partition(&g).unwrap();
        let sizes: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 2, 1, 1, 1, 1, 1, 1]);
    }
}
