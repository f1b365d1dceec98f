//! The C4-free extremal family: chained copies of the icosidodecahedron.
//!
//! Each growth step wraps the current graph in a fixed 70-vertex annulus:
//! a 40-vertex transition ring whose inner boundary is identified with the
//! current outer pentagon, followed by a fresh icosidodecahedron copy whose
//! inner pentagon face is identified with the ring's outer pentagon. The
//! ring keeps the invariant that every edge lies between one triangular and
//! one pentagonal face, which is exactly the equality condition for the
//! 15/7 (n - 2) bound.

use super::icosi;
use super::rotation_from_coords;
use crate::embedding::PlaneGraph;
use crate::graph::AbstractGraph;

/// Inner boundary pentagon (identified with the previous level), ccw.
const RING_P1: [usize; 5] = [0, 1, 2, 3, 4];
/// Outer boundary pentagon (identified with the next icosidodecahedron's
/// inner pentagon), ccw.
const RING_PC: [usize; 5] = [5, 6, 7, 8, 9];
const RING_INTERIOR: usize = 40;

/// Ring drawing: inner pentagon 0..5, outer pentagon 5..10, interior
/// 10..31 on the right half plus mirrored partners 31..50.
fn ring_coords() -> Vec<(f64, f64)> {
    let right: [(f64, f64); 21] = [
        (1.85, 0.45),        // 10 a
        (1.1, 0.45),         // 11 b
        (0.0, 0.45),         // 12 c (axis)
        (0.8201, 0.59),      // 13 d
        (1.7, 0.9),          // 14 e
        (1.078471, 0.9),     // 15 g
        (0.2, 0.9),          // 16 h
        (2.15, 0.9),         // 17 i
        (1.522421, 1.43274), // 18 j
        (1.991666, 1.995834),// 19 k
        (2.933333, 2.466666),// 20 l
        (2.595299, 2.720193),// 21 m
        (3.325, 2.6625),     // 22 o
        (3.55, 3.0),         // 23 p
        (2.828471, 3.0),     // 24 q
        (2.222222, 3.0),     // 25 r
        (0.592593, 4.222222),// 26 s
        (0.355556, 4.933333),// 27 t
        (0.0, 4.666666),     // 28 u (axis)
        (0.663888, 5.164583),// 29 w
        (0.15, 5.55),        // 30 z
    ];
    let mut coords = vec![
        (0.0, 1.0),              // 0 inner pentagon bottom
        (1.428571, 1.714286),    // 1
        (1.0, 3.0),              // 2
        (-1.0, 3.0),             // 3
        (-1.428571, 1.714286),   // 4
        (2.0, 0.0),              // 5 outer pentagon
        (4.0, 3.0),              // 6
        (0.0, 6.0),              // 7
        (-4.0, 3.0),             // 8
        (-2.0, 0.0),             // 9
    ];
    coords.extend_from_slice(&right);
    // mirrors of the non-axis right-half vertices, same order
    for (idx, &(x, y)) in right.iter().enumerate() {
        let id = 10 + idx;
        if id != 12 && id != 28 {
            coords.push((-x, y));
        }
    }
    coords
}

/// The 95 ring edges (including the inner pentagon, which is shared with
/// the wrapped graph; the outer pentagon's edges belong to the next
/// icosidodecahedron copy).
fn ring_edges() -> Vec<(usize, usize)> {
    vec![
        // spoke from outer-bottom-right to outer-top through the right side
        (5, 10), (10, 14), (14, 18), (18, 1), (1, 2), (2, 26), (26, 27), (27, 30), (30, 7),
        // mirrored spoke
        (9, 31), (31, 34), (34, 38), (38, 4), (4, 3), (3, 46), (46, 47), (47, 49), (49, 7),
        // long chord from outer-right to outer-bottom-left
        (6, 22), (22, 20), (20, 19), (19, 1), (1, 0), (0, 36), (36, 33), (33, 32), (32, 9),
        // mirrored chord
        (8, 42), (42, 40), (40, 39), (39, 4), (4, 0), (0, 16), (16, 13), (13, 11), (11, 5),
        // horizontal chord between the two upper outer corners
        (8, 43), (43, 44), (44, 45), (45, 3), (3, 2), (2, 25), (25, 24), (24, 23), (23, 6),
        // low horizontals
        (31, 32), (32, 12), (12, 11), (11, 10),
        (37, 34), (34, 35), (35, 36), (36, 16), (16, 15), (15, 14), (14, 17),
        // bottom wedge
        (12, 13), (12, 33),
        // slanted chains through the right and left sectors
        (24, 21), (21, 19), (19, 18), (18, 15), (15, 13),
        (44, 41), (41, 39), (39, 38), (38, 35), (35, 33),
        (20, 21), (21, 25), (25, 26), (26, 28), (28, 47), (47, 48),
        (40, 41), (41, 45), (45, 46), (46, 28), (28, 27), (27, 29),
        (29, 24), (48, 44),
        (10, 17), (17, 22), (22, 23),
        (31, 37), (37, 42), (42, 43),
        (23, 29), (29, 30),
        (43, 48), (48, 49),
        (17, 20), (37, 40),
        (30, 49),
    ]
}

fn ring_rotation() -> Vec<Vec<usize>> {
    // outer pentagon edges are not ring edges, but the rotation at the
    // outer pentagon needs their angular slots for splicing
    let mut edges = ring_edges();
    for j in 0..5 {
        edges.push((RING_PC[j], RING_PC[(j + 1) % 5]));
    }
    rotation_from_coords(&ring_coords(), &edges)
}

/// Neighbors strictly between `from` and `to` in cyclic order.
fn cyclic_arc(rot: &[usize], from: usize, to: usize) -> Vec<usize> {
    let start = rot.iter().position(|&x| x == from).expect("arc start");
    let mut out = Vec::new();
    let mut i = (start + 1) % rot.len();
    while rot[i] != to {
        out.push(rot[i]);
        i = (i + 1) % rot.len();
    }
    out
}

/// Merges the rotations of an identified pentagon vertex. The host side
/// keeps the pentagon's interior; the guest side fills the face the host
/// left open. Both rotations list the two pentagon neighbors.
fn splice(
    host: &[usize],
    h_next: usize,
    h_prev: usize,
    guest: &[usize],
    g_next: usize,
    g_prev: usize,
) -> Vec<usize> {
    let mut out = vec![h_next];
    out.extend(cyclic_arc(host, h_next, h_prev));
    out.push(h_prev);
    out.extend(cyclic_arc(guest, g_prev, g_next));
    out
}

/// One wrap step: rotation table in, rotation table out, with the new outer
/// pentagon. Vertex ids of the inner graph are preserved.
fn wrap_once(inner: &[Vec<usize>], outer_pent: [usize; 5]) -> (Vec<Vec<usize>>, [usize; 5]) {
    let n0 = inner.len();
    let ring_rot = ring_rotation();
    let (g0_coords, g0_edges) = icosi::vertex_data();
    let g0_rot = rotation_from_coords(&g0_coords, &g0_edges);

    // id maps
    let ring_global = |id: usize| -> usize {
        if id < 5 {
            outer_pent[id]
        } else if id < 10 {
            n0 + RING_INTERIOR + (id - 5)
        } else {
            n0 + (id - 10)
        }
    };
    let g0_global = |id: usize| -> usize {
        if id < 5 {
            n0 + RING_INTERIOR + id // identified with the ring's outer pentagon
        } else {
            n0 + RING_INTERIOR + 5 + (id - 5)
        }
    };

    let total = n0 + 70;
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); total];

    for v in 0..n0 {
        if !outer_pent.contains(&v) {
            rotation[v] = inner[v].clone();
        }
    }
    for (j, &p1) in RING_P1.iter().enumerate() {
        let v = outer_pent[j];
        let h_next = outer_pent[(j + 1) % 5];
        let h_prev = outer_pent[(j + 4) % 5];
        let guest: Vec<usize> = ring_rot[p1].iter().map(|&x| ring_global(x)).collect();
        let g_next = ring_global(RING_P1[(j + 1) % 5]);
        let g_prev = ring_global(RING_P1[(j + 4) % 5]);
        rotation[v] = splice(&inner[v], h_next, h_prev, &guest, g_next, g_prev);
    }
    for id in 10..50 {
        rotation[ring_global(id)] = ring_rot[id].iter().map(|&x| ring_global(x)).collect();
    }
    for (j, &pc) in RING_PC.iter().enumerate() {
        let v = ring_global(pc);
        let host: Vec<usize> = ring_rot[pc].iter().map(|&x| ring_global(x)).collect();
        let h_next = ring_global(RING_PC[(j + 1) % 5]);
        let h_prev = ring_global(RING_PC[(j + 4) % 5]);
        let guest: Vec<usize> = g0_rot[j].iter().map(|&x| g0_global(x)).collect();
        let g_next = g0_global((j + 1) % 5);
        let g_prev = g0_global((j + 4) % 5);
        rotation[v] = splice(&host, h_next, h_prev, &guest, g_next, g_prev);
    }
    for id in 5..30 {
        rotation[g0_global(id)] = g0_rot[id].iter().map(|&x| g0_global(x)).collect();
    }

    let new_outer = [
        g0_global(25),
        g0_global(26),
        g0_global(27),
        g0_global(28),
        g0_global(29),
    ];
    (rotation, new_outer)
}

/// The k-th member of the C4-free equality family: 30 + 70k vertices and
/// 60 + 150k edges, with every edge between a triangular face and a
/// pentagonal face. Level 0 is the icosidodecahedron itself.
pub fn c4_family(k: usize) -> PlaneGraph {
    let base = icosi::icosidodecahedron();
    let mut rotation = base.pg.rotation().to_vec();
    let mut outer = base.outer_pentagon;
    for _ in 0..k {
        let (next, next_outer) = wrap_once(&rotation, outer);
        rotation = next;
        outer = next_outer;
    }
    let graph =
        AbstractGraph::from_adjacency(rotation.clone()).expect("glued rotation is symmetric");
    PlaneGraph::new(graph, rotation).expect("glued embedding is consistent")
}
