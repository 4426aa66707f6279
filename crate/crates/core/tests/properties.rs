use proptest::prelude::*;

use specdiss::dissociation::{dissociation_number, dissociation_tau, is_dissociation_set};
use specdiss::graph::{canonical_code, graph6_decode, graph6_encode, Graph, VertexSet};
use specdiss::random::prufer_tree;
use specdiss::spectral::{
    alpha_matrix, bipartite_bound, index, quotient_matrix, spectral_radius, Partition, Tolerances,
};
use specdiss::transforms::{internal_paths, optimal_subdivision_transform, subdivide, triple_subdivide};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(move |seq| prufer_tree(n, &seq).unwrap())
    })
}

fn alpha() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(0.5), 0.0..0.99f64]
}

fn brute_tau(g: &Graph) -> usize {
    (0u64..1 << g.order())
        .filter(|&m| is_dissociation_set(g, VertexSet::from_bits(m)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        let s = graph6_encode(&g);
        let back = graph6_decode(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(graph6_encode(&back), s);
    }

    #[test]
    fn canonical_code_ignores_labels(g in graph(8), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
    }

    #[test]
    fn index_lies_between_average_and_maximum_degree(g in connected(9), a in alpha()) {
        let lam = index(&g, a).unwrap();
        let n = g.order() as f64;
        let avg = 2.0 * g.size() as f64 / n;
        let max = (0..g.order()).map(|v| g.degree(v)).max().unwrap() as f64;
        prop_assert!(lam >= avg - 1e-9, "{lam} < {avg}");
        prop_assert!(lam <= max + 1e-9, "{lam} > {max}");
    }

    #[test]
    fn perron_vector_is_positive_and_normalized(g in connected(9), a in alpha()) {
        let r = spectral_radius(&alpha_matrix(&g, a).unwrap(), true).unwrap();
        prop_assert!(r.perron.iter().all(|&x| x > 0.0));
        let norm: f64 = r.perron.iter().map(|x| x * x).sum();
        prop_assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn removing_an_edge_lowers_the_index(g in connected(8), a in alpha(), pick in any::<usize>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick % edges.len()];
        let h = g.remove_edge(u, v).unwrap();
        prop_assert!(index(&g, a).unwrap() - index(&h, a).unwrap() > 1e-10);
    }

    #[test]
    fn single_and_double_precision_agree(g in connected(8), a in alpha()) {
        let lo = spectral_radius(&alpha_matrix(&g, a as f32).unwrap(), true).unwrap().lambda;
        let hi = index(&g, a).unwrap();
        prop_assert!((lo as f64 - hi).abs() < 1e-4 * hi.max(1.0));
    }

    #[test]
    fn degree_partition_of_a_star_gives_the_index(k in 1usize..12, a in alpha()) {
        let g = Graph::star(k + 1).unwrap();
        let p = Partition::new(k + 1, vec![vec![0], (1..=k).collect()]).unwrap();
        let q = quotient_matrix(&g, a, &p).unwrap();
        let rho = q.spectral_radius(&Tolerances::default()).unwrap();
        prop_assert!((rho - index(&g, a).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn bipartite_graphs_respect_the_bound(g in connected(8), a in 0.0..0.99f64) {
        prop_assume!(g.is_bipartite() && g.order() >= 3);
        let tau = dissociation_tau(&g);
        prop_assert!(index(&g, a).unwrap() <= bipartite_bound(g.order(), tau, a) + 1e-9);
    }

    #[test]
    fn solver_matches_brute_force(g in graph(10)) {
        let r = dissociation_number(&g);
        prop_assert_eq!(r.tau, brute_tau(&g));
        prop_assert_eq!(r.witness.len(), r.tau);
        prop_assert!(is_dissociation_set(&g, r.witness));
    }

    #[test]
    fn deleting_an_edge_never_lowers_tau(g in graph(10), pick in any::<usize>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick % edges.len()];
        prop_assert!(dissociation_tau(&g.remove_edge(u, v).unwrap()) >= dissociation_tau(&g));
    }

    #[test]
    fn trees_have_large_dissociation_number(t in tree(14)) {
        let n = t.order();
        prop_assert!(dissociation_tau(&t) >= (2 * n).div_ceil(3));
    }

    #[test]
    fn subdivision_arithmetic(g in connected(9), pick in any::<usize>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick % edges.len()];
        let tau = dissociation_tau(&g);
        let one = subdivide(&g, u, v).unwrap().after;
        let three = triple_subdivide(&g, u, v).unwrap().after;
        prop_assert_eq!(one.order(), g.order() + 1);
        prop_assert_eq!(three.size(), g.size() + 3);
        let t1 = dissociation_tau(&one);
        prop_assert!(t1 == tau || t1 == tau + 1);
        prop_assert_eq!(dissociation_tau(&three), tau + 2);
    }

    #[test]
    fn optimal_subdivision_keeps_a_smaller_tree(t in tree(12), a in alpha()) {
        prop_assume!(t.branching_vertices().len() >= 2 && !internal_paths(&t).is_empty());
        let r = optimal_subdivision_transform(&t).unwrap();
        prop_assert!(r.after.is_tree());
        prop_assert_eq!(r.after.order(), t.order());
        let (before, after) = (dissociation_tau(&t), dissociation_tau(&r.after));
        prop_assert!(after == before || after + 1 == before);
        prop_assert!(index(&r.after, a).unwrap() < index(&t, a).unwrap());
    }
}

#[test]
fn optimal_subdivision_on_double_forks() {
    for k in 0..8 {
        // Path of k + 2 vertices with two leaves on each end.
        let n = k + 6;
        let mut edges: Vec<(usize, usize)> = (0..k + 1).map(|i| (i, i + 1)).collect();
        edges.extend([(0, k + 2), (0, k + 3), (k + 1, k + 4), (k + 1, k + 5)]);
        let t = Graph::from_edges(n, edges).unwrap();
        let r = optimal_subdivision_transform(&t).unwrap();
        // λ₀ of these trees is exactly 2.
        assert!((index(&t, 0.0).unwrap() - 2.0).abs() < 1e-12);
        for a in [0.0, 0.5, 0.9] {
            assert!(index(&r.after, a).unwrap() < index(&t, a).unwrap() - 1e-10);
        }
    }
}
