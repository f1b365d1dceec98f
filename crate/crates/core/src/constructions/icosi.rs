//! The icosidodecahedron: 30 vertices, 60 edges, 20 triangles and 12
//! pentagons, every edge between a triangle and a pentagon. Drawn here in
//! concentric layers with a pentagon face innermost and a pentagon face
//! outermost; those two faces are the handles used to chain copies into the
//! larger C4-free family.

use super::rotation_from_coords;
use crate::embedding::PlaneGraph;
use crate::graph::AbstractGraph;

pub struct Icosidodecahedron {
    pub pg: PlaneGraph,
    /// vertices of the innermost pentagonal face, in ccw order
    pub inner_pentagon: [usize; 5],
    /// vertices of the outermost pentagonal face, in ccw order
    pub outer_pentagon: [usize; 5],
}

pub(crate) type VertexData = (Vec<(f64, f64)>, Vec<(usize, usize)>);

/// Vertex layout: v 0..5 (inner pentagon), w 5..10, x 10..20 (equator),
/// y 20..25, u 25..30 (outer pentagon).
pub(crate) fn vertex_data() -> VertexData {
    let pos = |r: f64, deg: f64| {
        let t = deg.to_radians();
        (r * t.cos(), r * t.sin())
    };
    let mut coords = vec![(0.0, 0.0); 30];
    for i in 0..5 {
        let a = 72.0 * i as f64;
        coords[i] = pos(1.0, a); // v_i
        coords[5 + i] = pos(1.9, a + 36.0); // w_i
        coords[10 + 2 * i] = pos(2.9, a + 22.0); // x_{2i}
        coords[10 + 2 * i + 1] = pos(2.9, a + 50.0); // x_{2i+1}
        coords[20 + i] = pos(3.6, a + 72.0); // y_i
        coords[25 + i] = pos(4.9, a + 36.0); // u_i
    }
    let v = |i: usize| i % 5;
    let w = |i: usize| 5 + i % 5;
    let x = |j: usize| 10 + j % 10;
    let y = |i: usize| 20 + i % 5;
    let u = |i: usize| 25 + i % 5;
    let mut edges = Vec::with_capacity(60);
    for i in 0..5 {
        edges.push((v(i), v(i + 1)));
        edges.push((w(i), v(i)));
        edges.push((w(i), v(i + 1)));
        edges.push((w(i), x(2 * i)));
        edges.push((w(i), x(2 * i + 1)));
        edges.push((x(2 * i), x(2 * i + 1)));
        edges.push((x(2 * i + 1), x(2 * i + 2)));
        edges.push((y(i), x(2 * i + 1)));
        edges.push((y(i), x(2 * i + 2)));
        edges.push((u(i), y(i)));
        edges.push((u(i), y(i + 4)));
        edges.push((u(i), u(i + 1)));
    }
    (coords, edges)
}

pub fn icosidodecahedron() -> Icosidodecahedron {
    let (coords, edges) = vertex_data();
    let rotation = rotation_from_coords(&coords, &edges);
    let g = AbstractGraph::from_edges(30, &edges).expect("icosidodecahedron edges are valid");
    let pg = PlaneGraph::new(g, rotation).expect("layered drawing is planar");
    Icosidodecahedron {
        pg,
        inner_pentagon: [0, 1, 2, 3, 4],
        outer_pentagon: [25, 26, 27, 28, 29],
    }
}
