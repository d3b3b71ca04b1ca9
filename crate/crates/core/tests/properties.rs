use incorrect_apsp::minplus::{minplus, minplus_naive};
use incorrect_apsp::path::{realized_by_sequence, VertexPath};
use incorrect_apsp::relax::{
    apsp_kij, incorrect_apsp_ijk, run_relaxation, run_relaxation_prefix, triple_ijk, RelaxSequence,
};
use incorrect_apsp::{DistMatrix, Graph, InputFormat, Weight};
use proptest::prelude::*;

fn graph_of(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Graph> {
    prop::collection::vec(prop::option::weighted(0.35, lo..=hi), n * n).prop_map(move |cells| {
        let mut edges = Vec::new();
        for (idx, cell) in cells.into_iter().enumerate() {
            let (u, v) = (idx / n, idx % n);
            if u != v {
                if let Some(w) = cell {
                    edges.push((u, v, w));
                }
            }
        }
        Graph::new(n, edges, lo.abs().max(hi.abs())).unwrap()
    })
}

fn arb_graph(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| graph_of(n, lo, hi))
}

fn matrix_of(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = DistMatrix> {
    graph_of(n, lo, hi).prop_map(|g| g.adjacency_matrix())
}

fn arb_matrix(max_n: usize, bound: i64) -> impl Strategy<Value = DistMatrix> {
    (1..=max_n).prop_flat_map(move |n| matrix_of(n, -bound, bound))
}

fn matrix_pair(max_n: usize, bound: i64) -> impl Strategy<Value = (DistMatrix, DistMatrix)> {
    (1..=max_n).prop_flat_map(move |n| (matrix_of(n, -bound, bound), matrix_of(n, -bound, bound)))
}

fn matrix_triple(
    max_n: usize,
    bound: i64,
) -> impl Strategy<Value = (DistMatrix, DistMatrix, DistMatrix)> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            matrix_of(n, -bound, bound),
            matrix_of(n, -bound, bound),
            matrix_of(n, -bound, bound),
        )
    })
}

fn arb_path(max_id: usize, max_verts: usize) -> impl Strategy<Value = VertexPath> {
    prop::collection::vec(0..max_id, 1..=max_verts)
        .prop_filter("vertex ids must be distinct", |vs| {
            let mut seen = vec![false; vs.len().max(1) * 64];
            vs.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        })
        .prop_map(|vs| VertexPath::new(vs).unwrap())
}

fn cellwise_le(a: &DistMatrix, b: &DistMatrix) -> bool {
    (0..a.n()).all(|i| (0..a.n()).all(|j| a.get(i, j) <= b.get(i, j)))
}

proptest! {
    #[test]
    fn weight_addition_is_commutative_and_associative(
        x in -(1i64 << 40)..(1i64 << 40),
        y in -(1i64 << 40)..(1i64 << 40),
        z in -(1i64 << 40)..(1i64 << 40),
    ) {
        let (a, b, c) = (Weight::Finite(x), Weight::Finite(y), Weight::Finite(z));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a + Weight::ZERO, a);
        prop_assert_eq!(a + Weight::Infinity, Weight::Infinity);
        prop_assert_eq!(Weight::Infinity + a, Weight::Infinity);
    }

    #[test]
    fn weight_ordering_matches_extended_number_line(
        x in proptest::num::i64::ANY,
        y in proptest::num::i64::ANY,
    ) {
        prop_assert_eq!(Weight::Finite(x) < Weight::Finite(y), x < y);
        prop_assert!(Weight::Finite(x) < Weight::Infinity);
    }

    #[test]
    fn matrix_text_round_trips(m in arb_matrix(7, 900)) {
        let reparsed = DistMatrix::parse(&m.to_string()).unwrap();
        prop_assert!(reparsed == m);
    }

    #[test]
    fn edge_list_text_round_trips(g in arb_graph(7, -50, 900)) {
        let reparsed = incorrect_apsp::graph::parse_graph(&g.to_edge_list(), InputFormat::EdgeList).unwrap();
        prop_assert_eq!(reparsed.n(), g.n());
        prop_assert_eq!(reparsed.edges(), g.edges());
    }

    #[test]
    fn adjacency_round_trips(g in arb_graph(7, -50, 900)) {
        let back = Graph::from_adjacency(&g.adjacency_matrix()).unwrap();
        prop_assert!(back.adjacency_matrix() == g.adjacency_matrix());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn reversal_is_an_involution(g in arb_graph(7, -50, 900)) {
        prop_assert_eq!(&g.reversed().reversed(), &g);
    }

    #[test]
    fn predicates_survive_reversal(p in arb_path(12, 6)) {
        let r = p.reversed();
        prop_assert_eq!(p.is_increasing(), r.is_decreasing());
        prop_assert_eq!(p.is_decreasing(), r.is_increasing());
        prop_assert_eq!(p.is_valley(), r.is_valley());
        prop_assert_eq!(p.is_proper(), r.is_proper());
        prop_assert_eq!(p.is_realized(), r.is_realized());
    }

    #[test]
    fn predicate_implications_hold(p in arb_path(12, 6)) {
        if p.is_valley() {
            prop_assert!(p.is_proper());
        }
        if p.is_proper() {
            prop_assert!(p.is_realized());
        }
        if p.is_increasing() || p.is_decreasing() {
            prop_assert!(p.is_realized());
        }
    }

    #[test]
    fn characterization_matches_recursive_bruteforce(p in arb_path(9, 5)) {
        let n = p.vertices().iter().max().unwrap() + 1;
        let brute = realized_by_sequence(&p, &RelaxSequence::ijk(n)).unwrap();
        prop_assert_eq!(p.is_realized(), brute);
    }

    #[test]
    fn relaxation_only_lowers_cells_and_is_prefix_monotone(
        m in arb_matrix(7, 900),
        cut in 0usize..400,
    ) {
        let seq = RelaxSequence::ijk(m.n());
        let cut = cut.min(seq.len());
        let partial = run_relaxation_prefix(&m, &seq, cut);
        let full = run_relaxation(&m, &seq);
        prop_assert!(cellwise_le(&partial, &m));
        prop_assert!(cellwise_le(&full, &partial));
    }

    #[test]
    fn canonical_sequences_match_their_specialized_loops(
        m in (1usize..=7).prop_flat_map(|n| matrix_of(n, -3, 900)),
    ) {
        prop_assume!(Graph::from_adjacency(&m).unwrap().negative_cycle_free());
        prop_assert!(run_relaxation(&m, &RelaxSequence::kij(m.n())) == apsp_kij(&m));
        prop_assert!(run_relaxation(&m, &RelaxSequence::ijk(m.n())) == incorrect_apsp_ijk(&m));
    }

    #[test]
    fn tripled_variant_equals_correct_apsp(
        m in (1usize..=7).prop_flat_map(|n| matrix_of(n, -3, 900)),
    ) {
        prop_assume!(Graph::from_adjacency(&m).unwrap().negative_cycle_free());
        prop_assert!(triple_ijk(&m) == apsp_kij(&m));
    }

    #[test]
    fn correct_apsp_is_idempotent_without_negative_edges(
        m in (1usize..=7).prop_flat_map(|n| matrix_of(n, 0, 900)),
    ) {
        let once = apsp_kij(&m);
        prop_assert!(apsp_kij(&once) == once);
    }

    #[test]
    fn minplus_kernels_agree((a, b) in matrix_pair(6, 1000)) {
        prop_assert!(minplus(&a, &b) == minplus_naive(&a, &b));
    }

    #[test]
    fn minplus_is_associative_with_neutral_identity((a, b, c) in matrix_triple(5, 1000)) {
        let id = DistMatrix::identity(a.n());
        prop_assert!(minplus(&a, &id) == a);
        prop_assert!(minplus(&id, &a) == a);
        prop_assert!(minplus(&minplus(&a, &b), &c) == minplus(&a, &minplus(&b, &c)));
    }

    #[test]
    fn negative_cycle_detection_matches_relaxed_diagonal(g in arb_graph(6, -6, 8)) {
        let relaxed = apsp_kij(&g.adjacency_matrix());
        let clean = (0..g.n()).all(|i| relaxed.get(i, i) >= Weight::ZERO);
        prop_assert_eq!(g.negative_cycle_free(), clean);
    }
}
