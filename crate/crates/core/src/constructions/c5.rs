//! The C5-free extremal family built from the distinguished triangulations:
//! subdivide every non-matching edge, replace the three matching edges by
//! diamond-holders, then replace every original vertex's six-edge star with
//! a snowflake. The result has 15k + 9 vertices and 36k + 15 edges, which
//! meets the (12n - 33)/5 bound exactly.

use super::triangulation::triangulation_t;
use super::{rotation_from_coords, ConstructionError};
use crate::embedding::PlaneGraph;
use crate::graph::AbstractGraph;

/// A fragment graph with marked attachment vertices.
pub struct HolderFragment {
    pub pg: PlaneGraph,
    /// the two vertices standing in for the replaced edge's endpoints
    pub endpoints: [usize; 2],
}

pub struct SnowflakeFragment {
    pub pg: PlaneGraph,
    /// the six leaves shared with neighboring structures
    pub leaves: [usize; 6],
}

/// The edge replacement: two attachment endpoints, an outer rhombus, and an
/// interior diamond (K4 minus an edge). 8 vertices, 11 edges, C5-free.
pub fn diamond_holder() -> HolderFragment {
    // 0 = top endpoint, 1 = bottom endpoint, 2 = left, 3 = right,
    // 4 = upper interior, 5 = lower interior, 6/7 = diamond flanks
    let coords = [
        (0.0, 1.0),
        (0.0, -1.0),
        (-1.0, 0.0),
        (1.0, 0.0),
        (0.0, 0.4),
        (0.0, -0.4),
        (-0.4, 0.0),
        (0.4, 0.0),
    ];
    let edges = [
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 2),
        (1, 3),
        (1, 5),
        (4, 6),
        (4, 7),
        (5, 6),
        (5, 7),
        (6, 7),
    ];
    let rotation = rotation_from_coords(&coords, &edges);
    let g = AbstractGraph::from_edges(8, &edges).expect("holder edges are valid");
    let pg = PlaneGraph::new(g, rotation).expect("holder layout is planar");
    HolderFragment {
        pg,
        endpoints: [0, 1],
    }
}

/// The star replacement: a hexagon whose edges each carry a K4 formed with
/// one outward tip and one inward brace. 18 vertices (6 of them tips/leaves)
/// and 36 edges, C5-free.
pub fn snowflake() -> SnowflakeFragment {
    // 0..6 hexagon, 6..12 tips, 12..18 braces
    let pos = |r: f64, deg: f64| {
        let t = deg.to_radians();
        (r * t.cos(), r * t.sin())
    };
    let mut coords = Vec::with_capacity(18);
    for i in 0..6 {
        coords.push(pos(1.0, 60.0 * i as f64));
    }
    for i in 0..6 {
        coords.push(pos(2.2, 60.0 * i as f64 + 30.0));
    }
    for i in 0..6 {
        coords.push(pos(1.35, 60.0 * i as f64 + 30.0));
    }
    let mut edges = Vec::with_capacity(36);
    for i in 0..6 {
        let h = i;
        let h_next = (i + 1) % 6;
        let tip = 6 + i;
        let brace = 12 + i;
        edges.push((h, h_next));
        edges.push((tip, h));
        edges.push((tip, h_next));
        edges.push((brace, h));
        edges.push((brace, h_next));
        edges.push((tip, brace));
    }
    let rotation = rotation_from_coords(&coords, &edges);
    let g = AbstractGraph::from_edges(18, &edges).expect("snowflake edges are valid");
    let pg = PlaneGraph::new(g, rotation).expect("snowflake layout is planar");
    SnowflakeFragment {
        pg,
        leaves: [6, 7, 8, 9, 10, 11],
    }
}

/// Workspace for the assembly: rotation rows keyed by working id, with
/// deleted rows set to None and fresh ids appended.
struct Builder {
    rot: Vec<Option<Vec<usize>>>,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.rot.push(Some(Vec::new()));
        self.rot.len() - 1
    }

    fn set(&mut self, v: usize, rotation: Vec<usize>) {
        self.rot[v] = Some(rotation);
    }

    fn replace(&mut self, v: usize, old: usize, with: &[usize]) {
        let list = self.rot[v].as_mut().expect("live vertex");
        let pos = list.iter().position(|&x| x == old).expect("entry present");
        list.splice(pos..pos + 1, with.iter().copied());
    }

    fn take(&mut self, v: usize) -> Vec<usize> {
        self.rot[v].take().expect("live vertex")
    }

    fn finish(self) -> PlaneGraph {
        let mut new_id = vec![usize::MAX; self.rot.len()];
        let mut next = 0usize;
        for (v, slot) in self.rot.iter().enumerate() {
            if slot.is_some() {
                new_id[v] = next;
                next += 1;
            }
        }
        let rotation: Vec<Vec<usize>> = self
            .rot
            .iter()
            .filter_map(|slot| {
                slot.as_ref()
                    .map(|r| r.iter().map(|&w| new_id[w]).collect())
            })
            .collect();
        let graph =
            AbstractGraph::from_adjacency(rotation.clone()).expect("assembly keeps symmetry");
        PlaneGraph::new(graph, rotation).expect("assembled rotation is consistent")
    }
}

/// The full construction over the order-k triangulation.
pub fn c5_family(k: usize) -> Result<PlaneGraph, ConstructionError> {
    let t = triangulation_t(k)?;
    let n = t.pg.n();
    let estar = t.estar;
    let is_matching_edge = |u: usize, v: usize| {
        estar
            .iter()
            .any(|&(a, b)| (a, b) == (u.min(v), u.max(v)) || (b, a) == (u.min(v), u.max(v)))
    };

    let mut b = Builder {
        rot: t.pg.rotation().iter().map(|r| Some(r.clone())).collect(),
    };

    // subdivide every non-matching edge
    for (u, v) in t.pg.graph().edges() {
        if is_matching_edge(u, v) {
            continue;
        }
        let mid = b.fresh();
        b.set(mid, vec![u, v]);
        b.replace(u, v, &[mid]);
        b.replace(v, u, &[mid]);
    }

    // replace each matching edge with a diamond-holder
    for &(va, vb) in &estar {
        let left = b.fresh();
        let right = b.fresh();
        let top = b.fresh();
        let bottom = b.fresh();
        let flank_l = b.fresh();
        let flank_r = b.fresh();
        b.set(left, vec![va, vb]);
        b.set(right, vec![va, vb]);
        b.set(top, vec![va, flank_l, flank_r]);
        b.set(bottom, vec![flank_r, flank_l, vb]);
        b.set(flank_l, vec![flank_r, top, bottom]);
        b.set(flank_r, vec![top, flank_l, bottom]);
        b.replace(va, vb, &[left, top, right]);
        b.replace(vb, va, &[right, bottom, left]);
    }

    // replace every original vertex's star with a snowflake
    for v in 0..n {
        let leaves = b.take(v); // six leaves in ccw order
        debug_assert_eq!(leaves.len(), 6);
        let hex: Vec<usize> = (0..6).map(|_| b.fresh()).collect();
        let braces: Vec<usize> = (0..6).map(|_| b.fresh()).collect();
        for i in 0..6 {
            let h_prev = hex[(i + 5) % 6];
            let h_next = hex[(i + 1) % 6];
            b.set(
                hex[i],
                vec![
                    h_prev,
                    braces[(i + 5) % 6],
                    leaves[(i + 5) % 6],
                    leaves[i],
                    braces[i],
                    h_next,
                ],
            );
            b.set(braces[i], vec![leaves[i], hex[(i + 1) % 6], hex[i]]);
            b.replace(leaves[i], v, &[hex[(i + 1) % 6], braces[i], hex[i]]);
        }
    }

    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{contains_pattern, ForbiddenPattern};

    #[test]
    fn holder_shape() {
        let holder = diamond_holder();
        assert_eq!(holder.pg.n(), 8);
        assert_eq!(holder.pg.edge_count(), 11);
        assert!(holder.pg.euler_check());
        for &e in &holder.endpoints {
            assert_eq!(holder.pg.graph().degree(e), 3);
        }
        assert!(!contains_pattern(
            holder.pg.graph(),
            &ForbiddenPattern::cycle(5).unwrap()
        ));
        // the interior diamond: 4 vertices, 5 edges
        let interior = [4usize, 5, 6, 7];
        let mut count = 0;
        for (i, &a) in interior.iter().enumerate() {
            for &c in &interior[i + 1..] {
                if holder.pg.graph().has_edge(a, c) {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 5);
    }

    #[test]
    fn snowflake_shape() {
        let flake = snowflake();
        assert_eq!(flake.pg.n(), 18);
        assert_eq!(flake.pg.edge_count(), 36);
        assert!(flake.pg.euler_check());
        assert!(!contains_pattern(
            flake.pg.graph(),
            &ForbiddenPattern::cycle(5).unwrap()
        ));
        // leaves pairwise non-adjacent
        for (i, &a) in flake.leaves.iter().enumerate() {
            for &c in &flake.leaves[i + 1..] {
                assert!(!flake.pg.graph().has_edge(a, c));
            }
            assert_eq!(flake.pg.graph().degree(a), 3);
        }
    }

    #[test]
    fn family_counts_k6() {
        let pg = c5_family(6).unwrap();
        assert_eq!(pg.n(), 99);
        assert_eq!(pg.edge_count(), 231);
        assert!(pg.euler_check());
        assert!(pg.graph().is_connected());
    }

    #[test]
    fn family_c5_free_k6() {
        let pg = c5_family(6).unwrap();
        assert!(!contains_pattern(
            pg.graph(),
            &ForbiddenPattern::cycle(5).unwrap()
        ));
    }

    #[test]
    fn family_counts_k15() {
        let pg = c5_family(15).unwrap();
        assert_eq!(pg.n(), 234);
        assert_eq!(pg.edge_count(), 555);
        assert!(pg.euler_check());
    }

    #[test]
    fn inadmissible_rejected() {
        assert!(c5_family(7).is_err());
    }
}
