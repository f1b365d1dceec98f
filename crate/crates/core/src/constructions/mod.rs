//! Generators for the explicit extremal graph families. Every generator
//! returns an embedded plane graph; none of them self-certify, so tests and
//! the acceptance suite re-derive all claimed properties through the
//! embedding, pattern, and audit modules.

mod c5;
mod icosi;
mod ring;
mod simple;
mod triangulation;

pub use c5::{c5_family, diamond_holder, snowflake, HolderFragment, SnowflakeFragment};
pub use icosi::{icosidodecahedron, Icosidodecahedron};
pub use ring::c4_family;
pub use simple::{complete_bipartite_2, double_wheel, figure5_graph};
pub use triangulation::{
    admissible_t_values, fix_condition_iii, grow_triangulation, is_admissible_t, octahedron,
    triangulation_t, GrownTriangulation, Triangulation,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{family}: parameter {got} is out of range ({requirement})")]
    BadParameter {
        family: &'static str,
        got: usize,
        requirement: String,
    },
    #[error("{family}: input is not a plane triangulation")]
    NotATriangulation { family: &'static str },
}

/// Sorts each vertex's neighbor list counterclockwise around its drawing
/// position. The coordinates are combinatorial scaffolding only; no two
/// edges at a vertex may leave at the same angle.
pub(crate) fn rotation_from_coords(
    coords: &[(f64, f64)],
    edges: &[(usize, usize)],
) -> Vec<Vec<usize>> {
    let n = coords.len();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for (v, nbrs) in adj.iter_mut().enumerate() {
        let (x0, y0) = coords[v];
        nbrs.sort_by(|&a, &b| {
            let ta = (coords[a].1 - y0).atan2(coords[a].0 - x0);
            let tb = (coords[b].1 - y0).atan2(coords[b].0 - x0);
            ta.partial_cmp(&tb).expect("angles are finite")
        });
        nbrs.dedup();
    }
    adj
}
