mod common;

use common::{floyd_warshall, random_connected_graph, random_groupings};
use gpindex_core::automorphisms::{enumerate_automorphisms, vertex_orbits, DEFAULT_NODE_LIMIT};
use gpindex_core::indices::{gp_cut_method, gp_direct, CoarsenessCheck};
use gpindex_core::quotient::quotient_graph;
use gpindex_core::theta::{coarsen, is_coarser, theta_related, theta_star_partition};
use gpindex_core::{DistanceMatrix, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_vertices: usize) -> impl Strategy<Value = Graph> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_connected_graph(&mut rng, max_vertices)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bfs_matches_floyd_warshall(g in graph_strategy(20)) {
        let fw = floyd_warshall(&g);
        let apd = DistanceMatrix::new(&g);
        for (u, fw_row) in fw.iter().enumerate() {
            prop_assert_eq!(apd.row(u), fw_row.as_slice());
            for v in 0..g.vertex_count() {
                prop_assert_eq!(apd.get(u, v), apd.get(v, u));
                for w in 0..g.vertex_count() {
                    prop_assert!(apd.get(u, w) <= apd.get(u, v) + apd.get(v, w));
                }
            }
            for &(a, b) in g.edges() {
                prop_assert!(apd.get(u, a).abs_diff(apd.get(u, b)) <= 1);
            }
        }
    }

    #[test]
    fn removing_an_edge_never_shortens(g in graph_strategy(16), pick in any::<prop::sample::Index>()) {
        let e = pick.index(g.edge_count());
        let kept: Vec<_> = g.edges().iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &p)| p).collect();
        let h = Graph::from_edge_list(&kept, g.vertex_count()).unwrap();
        let (before, after) = (DistanceMatrix::new(&g), DistanceMatrix::new(&h));
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                prop_assert!(after.get(u, v) >= before.get(u, v));
            }
        }
    }

    #[test]
    fn theta_is_symmetric_and_star_classes_are_closed(g in graph_strategy(16)) {
        let apd = DistanceMatrix::new(&g);
        let theta = theta_star_partition(&g).unwrap();
        for e1 in 0..g.edge_count() {
            prop_assert!(theta_related(&g, e1, e1, &apd));
            for e2 in 0..g.edge_count() {
                let related = theta_related(&g, e1, e2, &apd);
                prop_assert_eq!(related, theta_related(&g, e2, e1, &apd));
                if related {
                    prop_assert_eq!(theta.block_of(e1), theta.block_of(e2));
                }
            }
        }
    }

    /// For walks Q and shortest paths P between the same ends,
    /// |E(Q) ∩ E| ≥ |E(P) ∩ E| for every Θ*-class E.
    #[test]
    fn walks_use_each_class_at_least_as_often_as_geodesics(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut rng, 14);
        let apd = DistanceMatrix::new(&g);
        let theta = theta_star_partition(&g).unwrap();
        let n = g.vertex_count();
        let class_counts = |edges: &std::collections::BTreeSet<usize>| {
            let mut counts = vec![0usize; theta.len()];
            for &e in edges {
                counts[theta.block_of(e)] += 1;
            }
            counts
        };
        for _ in 0..10 {
            let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
            // a geodesic: step to any neighbor one closer to y
            let mut geodesic = std::collections::BTreeSet::new();
            let mut at = x;
            while at != y {
                let (next, e) = *g.incident(at).iter().find(|&&(w, _)| apd.get(w, y) + 1 == apd.get(at, y)).unwrap();
                geodesic.insert(e);
                at = next;
            }
            // a random walk from x, finished by a geodesic to y
            let mut walk = std::collections::BTreeSet::new();
            let mut at = x;
            for _ in 0..rng.gen_range(0..3 * n) {
                let list = g.incident(at);
                if list.is_empty() { break; }
                let (next, e) = list[rng.gen_range(0..list.len())];
                walk.insert(e);
                at = next;
            }
            while at != y {
                let (next, e) = *g.incident(at).iter().find(|&&(w, _)| apd.get(w, y) + 1 == apd.get(at, y)).unwrap();
                walk.insert(e);
                at = next;
            }
            let (p, q) = (class_counts(&geodesic), class_counts(&walk));
            for c in 0..theta.len() {
                prop_assert!(q[c] >= p[c], "class {} walk {} geodesic {}", c, q[c], p[c]);
            }
        }
    }

    #[test]
    fn quotients_of_connected_graphs_are_connected(g in graph_strategy(16)) {
        let theta = theta_star_partition(&g).unwrap();
        for block in theta.blocks() {
            let q = quotient_graph(&g, block).unwrap();
            prop_assert!(q.quotient.is_connected().unwrap());
            for (c, members) in q.members.iter().enumerate() {
                for &v in members {
                    prop_assert_eq!(q.component_of[v], c);
                }
            }
            // adjacency iff an original edge crosses
            for &(a, b) in q.quotient.edges() {
                let crosses = g.edges().iter().any(|&(u, v)| {
                    let (cu, cv) = (q.component_of[u], q.component_of[v]);
                    (cu, cv) == (a, b) || (cu, cv) == (b, a)
                });
                prop_assert!(crosses);
            }
        }
    }

    /// d_G(x,y) = Σ_j d_{G/F_j}(ℓ_j(x), ℓ_j(y)) for partitions coarser than Θ*.
    #[test]
    fn distances_decompose_over_quotients(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut rng, 20);
        let apd = DistanceMatrix::new(&g);
        let theta = theta_star_partition(&g).unwrap();
        let mut groupings = random_groupings(&mut rng, &theta);
        groupings.push(vec![(0..theta.len()).collect()]);
        for grouping in groupings {
            let partition = coarsen(&theta, &grouping).unwrap();
            prop_assert!(is_coarser(&partition, &theta).unwrap());
            let quotients: Vec<_> = partition
                .blocks()
                .iter()
                .map(|b| {
                    let q = quotient_graph(&g, b).unwrap();
                    let d = DistanceMatrix::new(&q.quotient);
                    (q, d)
                })
                .collect();
            for x in 0..g.vertex_count() {
                for y in 0..g.vertex_count() {
                    let sum: u32 = quotients.iter().map(|(q, d)| d.get(q.component_of[x], q.component_of[y])).sum();
                    prop_assert_eq!(sum, apd.get(x, y));
                }
            }
        }
    }

    #[test]
    fn cut_method_equals_direct(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut rng, 18);
        let orbits = vertex_orbits(&g, &enumerate_automorphisms(&g, DEFAULT_NODE_LIMIT).unwrap());
        let direct = gp_direct(&g, &orbits).unwrap();
        let theta = theta_star_partition(&g).unwrap();
        for grouping in random_groupings(&mut rng, &theta) {
            let partition = coarsen(&theta, &grouping).unwrap();
            let cut = gp_cut_method(&g, &orbits, &partition, CoarsenessCheck::Verify).unwrap();
            prop_assert_eq!(&cut.value, &direct);
        }
    }
}

/// Θ*-classes of partial cubes are cuts: removing one leaves two components.
#[test]
fn partial_cube_classes_are_cuts() {
    let graphs = [common::cycle(4), common::cycle(8), common::cycle(12), common::tree_t(), common::path(6), common::hypercube(3)];
    for g in graphs {
        let theta = theta_star_partition(&g).unwrap();
        for block in theta.blocks() {
            assert_eq!(g.connected_components(block).unwrap().count, 2, "{block:?}");
        }
    }
    assert_eq!(theta_star_partition(&common::hypercube(3)).unwrap().len(), 3);
}
