//! The two trivial extremal families and the n = 7 equality graph.

use super::{rotation_from_coords, ConstructionError};
use crate::embedding::PlaneGraph;
use crate::graph::AbstractGraph;

/// K_{2,n-2} embedded so that every face is a quadrilateral. Extremal for
/// triangle-free planar graphs: 2n - 4 edges.
pub fn complete_bipartite_2(n: usize) -> Result<PlaneGraph, ConstructionError> {
    if n < 4 {
        return Err(ConstructionError::BadParameter {
            family: "complete-bipartite-2",
            got: n,
            requirement: "n >= 4".into(),
        });
    }
    let hubs = [0usize, 1];
    let leaves: Vec<usize> = (2..n).collect();
    let mut edges = Vec::new();
    for &h in &hubs {
        for &l in &leaves {
            edges.push((h, l));
        }
    }
    let g = AbstractGraph::from_edges(n, &edges).expect("bipartite edges are valid");
    let mut rotation = vec![leaves.clone(), leaves.iter().rev().copied().collect()];
    for _ in &leaves {
        rotation.push(vec![0, 1]);
    }
    Ok(PlaneGraph::new(g, rotation).expect("quadrangulation rotation is planar"))
}

/// Cycle of length n-2 plus two hub vertices adjacent to the whole cycle:
/// a K4-free plane triangulation with 3n - 6 edges. Needs n >= 6 because the
/// n = 5 instance contains K4.
pub fn double_wheel(n: usize) -> Result<PlaneGraph, ConstructionError> {
    if n < 6 {
        return Err(ConstructionError::BadParameter {
            family: "double-wheel",
            got: n,
            requirement: "n >= 6".into(),
        });
    }
    let m = n - 2;
    let inner = m; // hub drawn inside the rim
    let outer = m + 1; // hub drawn outside
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((i, inner));
        edges.push((i, outer));
    }
    let g = AbstractGraph::from_edges(n, &edges).expect("double wheel edges are valid");
    let mut rotation: Vec<Vec<usize>> = (0..m)
        .map(|i| vec![outer, (i + 1) % m, inner, (i + m - 1) % m])
        .collect();
    rotation.push((0..m).collect());
    rotation.push((0..m).rev().collect());
    Ok(PlaneGraph::new(g, rotation).expect("double wheel rotation is planar"))
}

/// Two K4 blocks sharing one vertex: 7 vertices and 12 = 12/5 (7-2) edges,
/// the C5-free equality example. Its outer face has size 6.
pub fn figure5_graph() -> PlaneGraph {
    let coords = [
        (0.0, 0.0),   // shared cut vertex
        (-2.0, 1.0),  // left block outer
        (-2.0, -1.0), // left block outer
        (-1.2, 0.0),  // left block center
        (2.0, 1.0),   // right block outer
        (2.0, -1.0),  // right block outer
        (1.2, 0.0),   // right block center
    ];
    let mut edges = Vec::new();
    for block in [[0usize, 1, 2, 3], [0, 4, 5, 6]] {
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((block[i], block[j]));
            }
        }
    }
    let rotation = rotation_from_coords(&coords, &edges);
    let g = AbstractGraph::from_edges(7, &edges).expect("two K4 blocks are valid");
    PlaneGraph::new(g, rotation).expect("figure layout is planar")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::face_profile;
    use crate::patterns::{contains_pattern, ForbiddenPattern};

    #[test]
    fn k2_n2_counts_and_faces() {
        for n in 4..=10 {
            let pg = complete_bipartite_2(n).unwrap();
            assert_eq!(pg.edge_count(), 2 * n - 4);
            assert!(pg.euler_check());
            let profile = face_profile(&pg).unwrap();
            assert_eq!(profile.count(4), profile.f, "all faces size 4 at n={n}");
            assert!(!contains_pattern(
                pg.graph(),
                &ForbiddenPattern::clique(3).unwrap()
            ));
        }
        assert!(complete_bipartite_2(3).is_err());
    }

    #[test]
    fn double_wheel_counts() {
        for n in 6..=10 {
            let pg = double_wheel(n).unwrap();
            assert_eq!(pg.edge_count(), 3 * n - 6);
            assert!(pg.euler_check());
            let profile = face_profile(&pg).unwrap();
            assert_eq!(profile.count(3), 2 * n - 4);
            assert!(!contains_pattern(
                pg.graph(),
                &ForbiddenPattern::clique(4).unwrap()
            ));
        }
        assert!(double_wheel(5).is_err());
    }

    #[test]
    fn octahedron_is_double_wheel_6() {
        let pg = double_wheel(6).unwrap();
        assert_eq!(pg.edge_count(), 12);
        let degrees = crate::graph::degree_profile(pg.graph());
        assert_eq!(degrees.count(4), 6);
    }

    #[test]
    fn figure5_shape() {
        let pg = figure5_graph();
        assert_eq!(pg.n(), 7);
        assert_eq!(pg.edge_count(), 12);
        assert!(pg.euler_check());
        assert!(!contains_pattern(
            pg.graph(),
            &ForbiddenPattern::cycle(5).unwrap()
        ));
        assert!(contains_pattern(
            pg.graph(),
            &ForbiddenPattern::cycle(4).unwrap()
        ));
        // outer face: one face of size 6, six triangles
        let profile = face_profile(&pg).unwrap();
        assert_eq!(profile.count(3), 6);
        assert_eq!(profile.count(6), 1);
        let stats = crate::graph::graph_stats(pg.graph());
        assert_eq!(stats.block_sizes, vec![4, 4]);
    }
}
