//! Property tests for the structural invariants: encoding round-trips,
//! relabeling invariance, degree and face sums, reduction idempotence, and
//! detection monotonicity.

use planext_core::canon::canonical_form;
use planext_core::embedding::{face_profile, PlaneGraph};
use planext_core::graph::{degree_profile, graph_stats, AbstractGraph};
use planext_core::patterns::{contains_pattern, ForbiddenPattern};
use planext_core::planarity::planar_rotation;
use planext_core::reduce::reduce_prime;
use planext_core::{read_graph6, write_graph6};
use proptest::prelude::*;

/// Arbitrary graph on up to 8 vertices from an edge-subset mask.
fn arb_graph() -> impl Strategy<Value = AbstractGraph> {
    (2usize..=8, any::<u32>()).prop_map(|(n, mask)| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 32) & 1 == 1 || mask.wrapping_mul(31) >> (i % 32) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        AbstractGraph::from_edges(n, &edges).unwrap()
    })
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arb_graph()) {
        let text = write_graph6(&g);
        let back = read_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6(&back), text);
    }

    #[test]
    fn canonical_relabeling_invariance(g in arb_graph(), seed in any::<u64>()) {
        let n = g.n();
        // a deterministic pseudo-random permutation from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).certificate, canonical_form(&h).certificate);
    }

    #[test]
    fn degree_sums(g in arb_graph()) {
        let p = degree_profile(&g);
        let total: usize = p.counts.values().sum();
        prop_assert_eq!(total, g.n());
        let weighted: usize = p.counts.iter().map(|(d, c)| d * c).sum();
        prop_assert_eq!(weighted, 2 * g.edge_count());
    }

    #[test]
    fn two_connected_iff_one_full_block(g in arb_graph()) {
        let s = graph_stats(&g);
        let single_full_block = s.block_sizes == vec![g.n()] && g.n() >= 3;
        prop_assert_eq!(s.vertex_connectivity_at_least_2, single_full_block);
    }

    #[test]
    fn face_sums_on_planar_embeddings(g in arb_graph()) {
        if let Some(rotation) = planar_rotation(&g) {
            if g.is_connected() {
                let pg = PlaneGraph::new(g, rotation).unwrap();
                prop_assert!(pg.euler_check());
                let total: usize = pg.faces().iter().map(|f| f.size()).sum();
                prop_assert_eq!(total, 2 * pg.edge_count());
                let profile = face_profile(&pg).unwrap();
                let sum_f: usize = profile.f_i.values().sum();
                prop_assert_eq!(sum_f, profile.f);
                let weighted: usize = profile.f_i.iter().map(|(i, c)| i * c).sum();
                prop_assert_eq!(weighted, 2 * pg.edge_count());
            }
        }
    }

    #[test]
    fn planar_embeddings_respect_edge_bound(g in arb_graph()) {
        if planar_rotation(&g).is_some() && g.n() >= 3 {
            prop_assert!(g.edge_count() <= 3 * g.n() - 6);
        }
    }

    #[test]
    fn reduce_prime_shrinks_and_is_idempotent(g in arb_graph()) {
        if !g.is_connected() {
            return Ok(());
        }
        if let Some(rotation) = planar_rotation(&g) {
            let pg = PlaneGraph::new(g, rotation).unwrap();
            let once = reduce_prime(&pg).unwrap();
            prop_assert!(once.n() <= pg.n());
            prop_assert!(once.edge_count() <= pg.edge_count());
            let twice = reduce_prime(&once).unwrap();
            prop_assert_eq!(twice.n(), once.n());
            prop_assert_eq!(twice.graph().edges(), once.graph().edges());
            prop_assert_eq!(twice.rotation(), once.rotation());
        }
    }

    #[test]
    fn pattern_monotone_under_edge_addition(g in arb_graph(), extra in any::<u32>()) {
        let n = g.n();
        let u = (extra as usize) % n;
        let v = (extra as usize / n) % n;
        if u == v || g.has_edge(u, v) {
            return Ok(());
        }
        let h = g.with_edge(u, v).unwrap();
        for k in 3..=5 {
            let p = ForbiddenPattern::Cycle(k);
            if contains_pattern(&g, &p) {
                prop_assert!(contains_pattern(&h, &p));
            }
        }
    }
}

/// A genus-1 rotation of K4 exists: the builder accepts it, the Euler check
/// rejects it. Found by enumerating rotation choices.
#[test]
fn some_k4_rotation_fails_euler() {
    let g = AbstractGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .unwrap();
    let mut saw_sphere = 0;
    let mut saw_other = 0;
    // each vertex has two cyclic orders of its three neighbors: 16 systems
    let orders = |v: usize| {
        let nbrs: Vec<usize> = (0..4).filter(|&w| w != v).collect();
        [
            vec![nbrs[0], nbrs[1], nbrs[2]],
            vec![nbrs[0], nbrs[2], nbrs[1]],
        ]
    };
    for mask in 0u32..16 {
        let rot: Vec<Vec<usize>> = (0..4)
            .map(|v| orders(v)[(mask >> v & 1) as usize].clone())
            .collect();
        let pg = PlaneGraph::new(g.clone(), rot).unwrap();
        if pg.euler_check() {
            saw_sphere += 1;
        } else {
            saw_other += 1;
        }
    }
    assert_eq!(saw_sphere, 2, "exactly the two mirror embeddings of K4 are spheres");
    assert_eq!(saw_other, 14, "all other K4 rotation systems have higher genus");
}

/// The two-diamonds-on-a-hexagon example: the reduction deletes the K4
/// spokes and both diamond middle edges, leaving quadrilateral kites.
#[test]
fn hexagon_with_k4_and_diamonds_reduces() {
    // 0,1 top edge shared by a K4 (center 2, apex 3) and a hexagon
    // 0-4-5-6-7-1; diamonds hang on the left (8) and right (9)
    let coords: [(f64, f64); 10] = [
        (0.0, 0.0),    // 0
        (1.5, 0.0),    // 1
        (0.75, 0.5),   // 2 K4 center
        (0.75, 1.25),  // 3 K4 apex
        (-0.5, -1.0),  // 4
        (0.0, -2.0),   // 5
        (1.5, -2.0),   // 6
        (2.0, -1.0),   // 7
        (-1.25, -1.0), // 8 left diamond tip
        (2.75, -1.0),  // 9 right diamond tip
    ];
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
        (2, 3),
        (0, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 1),
        (4, 8),
        (0, 8),
        (5, 8),
        (7, 9),
        (1, 9),
        (6, 9),
    ];
    let mut adj = vec![Vec::new(); 10];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let rotation: Vec<Vec<usize>> = (0..10)
        .map(|v| {
            let (x0, y0) = coords[v];
            let mut nbrs = adj[v].clone();
            nbrs.sort_by(|&a, &b| {
                let ta = (coords[a].1 - y0).atan2(coords[a].0 - x0);
                let tb = (coords[b].1 - y0).atan2(coords[b].0 - x0);
                ta.partial_cmp(&tb).unwrap()
            });
            nbrs
        })
        .collect();
    let g = AbstractGraph::from_edges(10, &edges).unwrap();
    let pg = PlaneGraph::new(g, rotation).unwrap();
    assert!(pg.euler_check());
    assert_eq!(pg.edge_count(), 17);

    let reduced = reduce_prime(&pg).unwrap();
    assert_eq!(reduced.n(), 9, "K4 center disappears");
    assert_eq!(reduced.edge_count(), 12, "3 spokes and 2 middle edges deleted");
    assert!(reduced.euler_check());
    // both former diamonds are now quadrilateral faces
    let profile = face_profile(&reduced).unwrap();
    assert_eq!(profile.count(4), 2);
    assert_eq!(profile.count(3), 1, "the K4 shell survives as a triangle");
}
