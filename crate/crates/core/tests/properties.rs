//! Property tests for the structural invariants.

use lrc_core::code::{codes_equal, macwilliams, weight_enumerator};
use lrc_core::constructions::{graph_code, CoveringSystem, SimpleGraph};
use lrc_core::{BitMatrix, Guards, LinearCode};
use proptest::prelude::*;

fn arbitrary_graph(max_vertices: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_vertices).prop_flat_map(|v| {
        let all_edges: Vec<(usize, usize)> = (1..=v)
            .flat_map(|a| ((a + 1)..=v).map(move |b| (a, b)))
            .collect();
        proptest::sample::subsequence(all_edges.clone(), 1..=all_edges.len())
            .prop_map(move |edges| SimpleGraph::new(v, edges).unwrap())
    })
}

fn arbitrary_matrix() -> impl Strategy<Value = BitMatrix> {
    (1usize..=6, 1usize..=12).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), cols), rows).prop_map(
            move |bits| {
                let mut m = BitMatrix::zeros(rows, cols);
                for (i, row) in bits.iter().enumerate() {
                    for (j, &b) in row.iter().enumerate() {
                        if b {
                            m.set(i, j, true);
                        }
                    }
                }
                m
            },
        )
    })
}

proptest! {
    #[test]
    fn graph_code_dimension_counts_cycles(graph in arbitrary_graph(9)) {
        let code = graph_code(&graph);
        let expected = graph.edge_count() + graph.connected_components() - graph.vertex_count();
        prop_assert_eq!(code.k(), expected);
    }

    #[test]
    fn code_invariants_from_arbitrary_generators(m in arbitrary_matrix()) {
        let guards = Guards::default();
        let code = LinearCode::from_generator(&m).unwrap();
        let dual = code.dual();
        prop_assert_eq!(code.k() + dual.k(), code.n());
        prop_assert!(codes_equal(&dual.dual(), &code).unwrap());
        let we = weight_enumerator(&code, &guards).unwrap();
        prop_assert_eq!(we.sum(), 1u64 << code.k());
        // MacWilliams is an involution landing on the dual's enumerator.
        let transformed = macwilliams(&we, code.k()).unwrap();
        prop_assert_eq!(&transformed, &weight_enumerator(&dual, &guards).unwrap());
        prop_assert_eq!(macwilliams(&transformed, dual.k()).unwrap(), we);
    }

    #[test]
    fn covering_system_file_round_trip(
        n in 1usize..=12,
        raw in proptest::collection::vec(proptest::collection::btree_set(1usize..=12, 1..=4), 1..=6)
    ) {
        let subsets: Vec<Vec<usize>> = raw
            .into_iter()
            .map(|s| s.into_iter().filter(|&p| p <= n).collect::<Vec<_>>())
            .filter(|s: &Vec<usize>| !s.is_empty())
            .collect();
        prop_assume!(!subsets.is_empty());
        let system = CoveringSystem::new(n, subsets).unwrap();
        let parsed = CoveringSystem::parse(&system.format()).unwrap();
        prop_assert_eq!(system, parsed);
    }

    #[test]
    fn rank_is_bounded_and_transpose_invariant(m in arbitrary_matrix()) {
        let rank = m.rank();
        prop_assert!(rank <= m.rows().min(m.cols()));
        prop_assert_eq!(rank, m.transpose().rank());
        // The nullspace basis is orthogonal to the rows and has the
        // complementary dimension.
        let ns = m.nullspace_basis();
        prop_assert_eq!(ns.rows(), m.cols() - rank);
        prop_assert!(m.mul_transpose(&ns).is_zero());
    }
}
