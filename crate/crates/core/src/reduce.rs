//! Embedding reductions: the G-prime construction (delete every edge lying
//! on two triangular faces, then any isolated vertices) and the removal of
//! embedded K4 centers.

use crate::embedding::{EmbeddingError, PlaneGraph};
use crate::graph::AbstractGraph;
use std::collections::HashSet;

/// Deletes every edge whose two incident faces are both triangles, plus any
/// vertices isolated by the deletion. The surviving rotation is inherited.
/// On a standalone K4 every edge qualifies and the result is empty.
pub fn reduce_prime(pg: &PlaneGraph) -> Result<PlaneGraph, EmbeddingError> {
    if pg.n() == 0 {
        return Ok(pg.clone()); // the empty graph is a fixed point
    }
    if !pg.euler_check() {
        return Err(EmbeddingError::EulerInvalid);
    }
    let mut doomed: HashSet<(usize, usize)> = HashSet::new();
    for (u, v) in pg.graph().edges() {
        let (fa, fb) = pg.faces_of_edge(u, v);
        if fa != fb && pg.faces()[fa].size() == 3 && pg.faces()[fb].size() == 3 {
            doomed.insert((u, v));
        }
    }
    Ok(delete_edges(pg, &doomed))
}

/// Deletes the interior vertex of every K4 embedded as three mutually
/// adjacent triangular faces, leaving the outer triangle as a face.
/// Centers are removed one at a time (lowest id first) so a standalone K4
/// collapses to a triangle rather than to nothing.
pub fn reduce_k4_centers(pg: &PlaneGraph) -> Result<PlaneGraph, EmbeddingError> {
    if !pg.euler_check() {
        return Err(EmbeddingError::EulerInvalid);
    }
    let mut current = pg.clone();
    loop {
        let center = (0..current.n()).find(|&v| is_k4_center(&current, v));
        match center {
            None => return Ok(current),
            Some(v) => {
                let doomed: HashSet<(usize, usize)> = current
                    .graph()
                    .neighbors(v)
                    .iter()
                    .map(|&w| (v.min(w), v.max(w)))
                    .collect();
                current = delete_edges(&current, &doomed);
            }
        }
    }
}

fn is_k4_center(pg: &PlaneGraph, v: usize) -> bool {
    if pg.graph().degree(v) != 3 {
        return false;
    }
    let nbrs = pg.graph().neighbors(v);
    // neighbors pairwise adjacent
    for i in 0..3 {
        for j in i + 1..3 {
            if !pg.graph().has_edge(nbrs[i], nbrs[j]) {
                return false;
            }
        }
    }
    // all three incident faces are triangles
    nbrs.iter().all(|&w| {
        let (fa, fb) = pg.faces_of_edge(v, w);
        pg.faces()[fa].size() == 3 && pg.faces()[fb].size() == 3
    })
}

/// Removes an edge set from the embedding, drops isolated vertices, and
/// renumbers densely while preserving the cyclic order of survivors.
fn delete_edges(pg: &PlaneGraph, doomed: &HashSet<(usize, usize)>) -> PlaneGraph {
    let n = pg.n();
    let keep_edge = |u: usize, v: usize| !doomed.contains(&(u.min(v), u.max(v)));
    let mut new_id = vec![usize::MAX; n];
    let mut kept = 0usize;
    for (v, slot) in new_id.iter_mut().enumerate() {
        let alive = pg
            .graph()
            .neighbors(v)
            .iter()
            .any(|&w| keep_edge(v, w));
        if alive {
            *slot = kept;
            kept += 1;
        }
    }
    let mut rotation = Vec::with_capacity(kept);
    let mut edges = Vec::new();
    for v in 0..n {
        if new_id[v] == usize::MAX {
            continue;
        }
        let rot: Vec<usize> = pg.rotation()[v]
            .iter()
            .filter(|&&w| keep_edge(v, w))
            .map(|&w| new_id[w])
            .collect();
        for &w in &rot {
            if new_id[v] < w {
                edges.push((new_id[v], w));
            }
        }
        rotation.push(rot);
    }
    let graph = AbstractGraph::from_edges(kept, &edges).expect("deletion keeps invariants");
    PlaneGraph::new_allow_disconnected(graph, rotation)
        .expect("inherited rotation stays consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::face_profile;

    fn embedded_k4() -> PlaneGraph {
        let g = AbstractGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        PlaneGraph::new(g, rot).unwrap()
    }

    fn embedded_diamond() -> PlaneGraph {
        let g = AbstractGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let rot = vec![vec![1, 2, 3], vec![2, 0, 3], vec![0, 1], vec![1, 0]];
        PlaneGraph::new(g, rot).unwrap()
    }

    #[test]
    fn diamond_reduces_to_c4() {
        let reduced = reduce_prime(&embedded_diamond()).unwrap();
        assert_eq!(reduced.n(), 4);
        assert_eq!(reduced.edge_count(), 4);
        let profile = face_profile(&reduced).unwrap();
        assert_eq!(profile.count(4), 2);
    }

    #[test]
    fn standalone_k4_reduces_to_empty() {
        let reduced = reduce_prime(&embedded_k4()).unwrap();
        assert_eq!(reduced.n(), 0);
        assert_eq!(reduced.edge_count(), 0);
    }

    #[test]
    fn triangle_free_unchanged() {
        let g = AbstractGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let pg = PlaneGraph::new(g, vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap();
        let reduced = reduce_prime(&pg).unwrap();
        assert_eq!(reduced.n(), 4);
        assert_eq!(reduced.edge_count(), 4);
    }

    #[test]
    fn k4_centers_single_k4_becomes_triangle() {
        let reduced = reduce_k4_centers(&embedded_k4()).unwrap();
        assert_eq!(reduced.n(), 3);
        assert_eq!(reduced.edge_count(), 3);
    }

    #[test]
    fn k4_free_unchanged_by_center_removal() {
        let pg = embedded_diamond();
        let reduced = reduce_k4_centers(&pg).unwrap();
        assert_eq!(reduced.n(), 4);
        assert_eq!(reduced.edge_count(), 5);
    }

    #[test]
    fn k4_centers_two_block_graph() {
        // both K4 blocks lose their interior vertex, leaving two triangles
        // joined at the shared vertex
        let pg = crate::constructions::figure5_graph();
        let reduced = reduce_k4_centers(&pg).unwrap();
        assert_eq!(reduced.n(), 5);
        assert_eq!(reduced.edge_count(), 6);
        let stats = crate::graph::graph_stats(reduced.graph());
        assert_eq!(stats.block_sizes, vec![3, 3]);
        assert!(reduced.euler_check());
    }

    #[test]
    fn reduce_never_adds() {
        let pg = embedded_k4();
        let r = reduce_prime(&pg).unwrap();
        assert!(r.edge_count() <= pg.edge_count());
        assert!(r.n() <= pg.n());
    }
}
