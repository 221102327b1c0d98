use p6c4::coloring::oracle::{chromatic_number_bruteforce, max_clique_bruteforce};
use p6c4::coloring::{
    approx_color, combine_on_clique_cutset, ratio_bound, ChildColoring, Coloring,
};
use p6c4::decomposition::{
    build_decomposition_tree, find_clique_cut, in_class, is_small_degree, twin_partition, NodeKind,
};
use p6c4::generators::{petersen, random_chordal, random_p6c4_free, shuffle_vertices, CorpusSpec};
use p6c4::graph::{Graph, VertexSet};
use p6c4::patterns::{
    contains_induced, cycle_pattern, find_simplicial_vertex, induced_cycles, is_c4_free,
    is_chordal, is_isomorphic, is_p6_free, path_pattern,
};
use p6c4::structure::{check_c5_properties, is_dominating};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e));
            Graph::new(n, edges).unwrap()
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

/// Whether some vertex subset induces a copy of `pattern`, by exhaustive
/// search.
fn has_induced_by_subsets(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    (0u32..(1 << g.n()))
        .filter(|m| m.count_ones() as usize == k)
        .any(|m| {
            let set: VertexSet = (0..g.n()).filter(|&v| m & (1 << v) != 0).collect();
            let (sub, _) = g.induced_subgraph(&set).unwrap();
            is_isomorphic(&sub, pattern)
        })
}

/// Clique cutset by exhaustive search over vertex subsets.
fn has_clique_cutset_by_subsets(g: &Graph) -> bool {
    (0u32..(1 << g.n())).any(|m| {
        let set: VertexSet = (0..g.n()).filter(|&v| m & (1 << v) != 0).collect();
        g.is_clique(&set) && g.components_avoiding(&set).len() >= 2
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn constructors_keep_invariants(a in graph(8), b in graph(6)) {
        let u = a.disjoint_union(&b);
        let j = a.join(&b);
        prop_assert!(u.check_invariants() && j.check_invariants());
        prop_assert_eq!(u.n(), a.n() + b.n());
        prop_assert_eq!(u.m(), a.m() + b.m());
        prop_assert_eq!(j.m(), a.m() + b.m() + a.n() * b.n());
        let (same, _) = a.induced_subgraph(&VertexSet::full(a.n())).unwrap();
        prop_assert!(is_isomorphic(&same, &a));
    }

    #[test]
    fn blow_up_contracts_back(g in graph(7), sizes in prop::collection::vec(1usize..4, 7)) {
        let tp = twin_partition(&g);
        prop_assume!(tp.classes.len() == g.n());
        let (h, class_of) = g.blow_up(&sizes[..g.n()]).unwrap();
        prop_assert_eq!(class_of.len(), h.n());
        let back = twin_partition(&h);
        prop_assert!(is_isomorphic(&back.skeleton, &g));
        prop_assert!(back.verify(&h));
        prop_assert_eq!(twin_partition(&back.skeleton).classes.len(), back.skeleton.n());
    }

    #[test]
    fn detectors_agree_with_generic_search(g in graph(9)) {
        prop_assert_eq!(is_c4_free(&g), contains_induced(&g, &cycle_pattern(4)).is_none());
        prop_assert_eq!(is_p6_free(&g), contains_induced(&g, &path_pattern(6)).is_none());
        prop_assert_eq!(is_c4_free(&g), !has_induced_by_subsets(&g, &cycle_pattern(4)));
        if let Some(e) = contains_induced(&g, &path_pattern(6)) {
            prop_assert!(e.verify(&g, &path_pattern(6)));
        }
    }

    #[test]
    fn chordality_matches_cycle_search(g in graph(9)) {
        let holes = (4..=g.n()).any(|k| !induced_cycles(&g, k).is_empty());
        prop_assert_eq!(is_chordal(&g), !holes);
    }

    #[test]
    fn chordal_graphs_have_small_simplicial_vertices(seed in any::<u64>(), n in 1usize..16) {
        let g = random_chordal(n, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(is_chordal(&g));
        let v = find_simplicial_vertex(&g).unwrap();
        let (omega, _) = max_clique_bruteforce(&g, 24).unwrap();
        prop_assert!(g.degree(v) < omega.max(1));
    }

    #[test]
    fn clique_cut_matches_exhaustive_search(g in connected_graph(9)) {
        let cut = find_clique_cut(&g).unwrap();
        prop_assert_eq!(cut.is_some(), has_clique_cutset_by_subsets(&g));
        if let Some(cut) = cut {
            prop_assert!(g.is_clique(&cut.cutset));
            let comps = g.components_avoiding(&cut.cutset);
            prop_assert!(comps.len() >= 2);
            prop_assert!(comps.contains(&cut.component));
        }
    }

    #[test]
    fn tree_nodes_are_well_formed(g in connected_graph(10)) {
        let tree = build_decomposition_tree(&g).unwrap();
        prop_assert!(tree.internal_nodes() <= g.n() * g.n());
        let class = in_class(&g);
        let mut ok = true;
        tree.root.walk(&mut |node| match &node.kind {
            NodeKind::CutsetSplit { cutset, .. } => {
                ok &= node.graph.is_clique(cutset) && node.graph.components_avoiding(cutset).len() >= 2;
            }
            NodeKind::SmallRemoval { vertex, .. } if class => {
                let (omega, _) = max_clique_bruteforce(&node.graph, 24).unwrap();
                ok &= is_small_degree(node.graph.degree(*vertex), omega);
            }
            NodeKind::LeafClique => ok &= node.graph.is_complete(),
            _ => {}
        });
        prop_assert!(ok);
    }

    #[test]
    fn coloring_is_proper_and_deterministic(g in graph(12)) {
        let phi = approx_color(&g).unwrap();
        prop_assert!(phi.is_proper(&g));
        prop_assert_eq!(&phi, &approx_color(&g).unwrap());
        let (chi, _) = chromatic_number_bruteforce(&g, 20).unwrap();
        prop_assert!(chi <= phi.palette());
        if in_class(&g) {
            let (omega, _) = max_clique_bruteforce(&g, 24).unwrap();
            prop_assert!(phi.palette() <= ratio_bound(omega));
        }
    }

    #[test]
    fn relabeling_keeps_the_palette_bound(seed in any::<u64>(), sizes in prop::collection::vec(1usize..4, 10)) {
        let (g, _) = petersen().blow_up(&sizes).unwrap();
        let h = shuffle_vertices(&g, &mut ChaCha8Rng::seed_from_u64(seed));
        let (omega, _) = max_clique_bruteforce(&h, 64).unwrap();
        let phi = approx_color(&h).unwrap();
        prop_assert!(phi.is_proper(&h));
        prop_assert!(phi.palette() <= ratio_bound(omega));
    }

    #[test]
    fn combine_never_widens_the_palette(a in 1usize..5, b in 1usize..5, k in 1usize..4, perm in any::<u64>()) {
        // Two cliques glued along a common clique of size k.
        let (na, nb) = (k + a, k + b);
        let n = k + a + b;
        let left_origin: Vec<usize> = (0..na).collect();
        let right_origin: Vec<usize> = (0..k).chain(na..n).collect();
        let left = Coloring::new((1..=na).collect());
        let mut right_colors: Vec<usize> = (1..=nb).collect();
        let mut state = perm;
        for i in (1..nb).rev() {
            let j = (state % (i as u64 + 1)) as usize;
            state /= i as u64 + 1;
            right_colors.swap(i, j);
        }
        let right = Coloring::new(right_colors);
        let cutset: VertexSet = (0..k).collect();
        let merged = combine_on_clique_cutset(
            n,
            ChildColoring { coloring: &left, origin: &left_origin },
            ChildColoring { coloring: &right, origin: &right_origin },
            &cutset,
        ).unwrap();
        prop_assert!(merged.palette() <= left.palette().max(right.palette()));
        for v in 0..na {
            prop_assert_eq!(merged.color(v), left.color(v));
        }
        let right_part: VertexSet = (0..k).chain(na..n).collect();
        let distinct: std::collections::BTreeSet<usize> = right_part.iter().map(|v| merged.color(v)).collect();
        prop_assert_eq!(distinct.len(), nb);
    }

    #[test]
    fn c5_violation_witnesses_reproduce(g in connected_graph(10)) {
        for c in induced_cycles(&g, 5).into_iter().take(4) {
            for v in check_c5_properties(&g, &c).unwrap() {
                prop_assert!(v.reproduces(&g, &c), "{:?}", v);
            }
        }
    }
}

#[test]
fn c5_properties_hold_on_corpus() {
    let corpus = random_p6c4_free(&CorpusSpec::standard(11));
    for cg in corpus.graphs.iter().filter(|cg| cg.graph.n() <= 14) {
        let g = &cg.graph;
        let atom = g.is_connected() && find_clique_cut(g).unwrap().is_none();
        for c in induced_cycles(g, 5) {
            let violations = check_c5_properties(g, &c).unwrap();
            assert!(violations.is_empty(), "{}: {violations:?}", cg.family);
            if atom {
                assert!(is_dominating(g, &c.iter().copied().collect()));
            }
        }
    }
}

#[test]
fn corpus_is_reproducible() {
    let spec = CorpusSpec::standard(5);
    let a = random_p6c4_free(&spec);
    let b = random_p6c4_free(&spec);
    assert_eq!(a.graphs.len(), b.graphs.len());
    assert!(a
        .graphs
        .iter()
        .zip(&b.graphs)
        .all(|(x, y)| x.graph == y.graph));
    assert!(a
        .graphs
        .iter()
        .all(|cg| is_c4_free(&cg.graph) && is_p6_free(&cg.graph)));
}
