//! Plane triangulations with six degree-4 vertices, all other degrees 6,
//! and a perfect matching between the degree-4 vertices. These seed the
//! C5-free extremal family.
//!
//! Growth refines every triangle into four (subdividing all edges and
//! joining the three midpoints per face), which preserves the degree
//! conditions but subdivides the matching away. A local transformation at
//! each former matching edge then restores it: the edge's midpoint is
//! replaced by four vertices, the old endpoints become degree 6, and a new
//! degree-4 pair carries the matching. Each repair adds a net 3 vertices,
//! so admissible orders obey k -> 4k + 3 above the two base cases 6 and 15.

use super::ConstructionError;
use crate::embedding::PlaneGraph;
use crate::graph::AbstractGraph;
use crate::planarity::planar_rotation;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct Triangulation {
    pub pg: PlaneGraph,
    /// the distinguished matching between the six degree-4 vertices
    pub estar: [(usize, usize); 3],
}

#[derive(Debug, Clone)]
pub struct GrownTriangulation {
    pub pg: PlaneGraph,
    /// midpoints of the three former matching edges, in the rotation layout
    /// produced by `grow_triangulation`
    pub sites: [usize; 3],
}

pub fn is_admissible_t(k: usize) -> bool {
    if k == 6 || k == 15 {
        return true;
    }
    k >= 27 && (k - 3).is_multiple_of(4) && is_admissible_t((k - 3) / 4)
}

/// Admissible orders up to `limit`, ascending.
pub fn admissible_t_values(limit: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut frontier = vec![6usize, 15];
    while let Some(k) = frontier.pop() {
        if k > limit {
            continue;
        }
        out.push(k);
        frontier.push(4 * k + 3);
    }
    out.sort_unstable();
    out
}

/// The octahedron with its distinguished matching: rim 0-1-2-3, hubs 4, 5.
pub fn octahedron() -> Triangulation {
    let pg = super::simple::double_wheel(6).expect("6 is in range");
    Triangulation {
        pg,
        estar: [(4, 0), (5, 1), (2, 3)],
    }
}

/// The 15-vertex triangulation: a 9-cycle column with two triangles of
/// degree-6 vertices braced against it, one on each side.
fn drum_15() -> Triangulation {
    let col = |i: usize| i % 9;
    let right = |j: usize| 9 + j;
    let left = |j: usize| 12 + j;
    let mut edges = Vec::new();
    for i in 0..9 {
        edges.push((col(i), col(i + 1)));
    }
    for j in 0..3 {
        for step in 0..4 {
            edges.push((right(j), col(3 * j + step)));
            edges.push((left(j), col(3 * j + step)));
        }
    }
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        edges.push((right(a), right(b)));
        edges.push((left(a), left(b)));
    }
    let g = AbstractGraph::from_edges(15, &edges).expect("drum edges are valid");
    let rotation = planar_rotation(&g).expect("the drum is planar");
    let pg = PlaneGraph::new(g, rotation).expect("embedding is consistent");
    Triangulation {
        pg,
        estar: [(1, 2), (4, 5), (7, 8)],
    }
}

/// A triangulation of admissible order k, grown from the base cases.
pub fn triangulation_t(k: usize) -> Result<Triangulation, ConstructionError> {
    if !is_admissible_t(k) {
        return Err(ConstructionError::BadParameter {
            family: "triangulation-t",
            got: k,
            requirement: format!(
                "k in the admissible sequence {:?}...",
                admissible_t_values(1100)
            ),
        });
    }
    match k {
        6 => Ok(octahedron()),
        15 => Ok(drum_15()),
        _ => {
            let smaller = triangulation_t((k - 3) / 4)?;
            let grown = grow_triangulation(&smaller)?;
            fix_condition_iii(&grown)
        }
    }
}

/// Refines every triangle into four: all edges are subdivided and the three
/// midpoints of each face are joined. Original vertices keep their degrees;
/// midpoints get degree 6. Output order is n + e.
pub fn grow_triangulation(t: &Triangulation) -> Result<GrownTriangulation, ConstructionError> {
    let pg = &t.pg;
    if !pg.euler_check() || pg.faces().iter().any(|f| f.size() != 3) {
        return Err(ConstructionError::NotATriangulation {
            family: "grow-triangulation",
        });
    }
    let n = pg.n();
    let edges = pg.graph().edges();
    let mut mid_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (idx, &(u, v)) in edges.iter().enumerate() {
        mid_of.insert((u, v), n + idx);
    }
    let mid = |a: usize, b: usize| mid_of[&(a.min(b), a.max(b))];
    // apex of the face to the left of a dart
    let apex = |a: usize, b: usize| {
        let f = &pg.faces()[pg.face_index_of((a, b))];
        let pos = f.walk.iter().position(|&d| d == (a, b)).expect("dart in face");
        f.walk[(pos + 1) % 3].1
    };

    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n + edges.len());
    for v in 0..n {
        rotation.push(pg.rotation()[v].iter().map(|&w| mid(v, w)).collect());
    }
    // fan order around a midpoint: the apex of dart (v, u) flanks the
    // v-to-u half, the apex of (u, v) flanks the way back
    for &(u, v) in &edges {
        let x = apex(u, v);
        let y = apex(v, u);
        rotation.push(vec![v, mid(v, y), mid(y, u), u, mid(u, x), mid(x, v)]);
    }

    let graph =
        AbstractGraph::from_adjacency(rotation.clone()).expect("refinement keeps symmetry");
    let pg = PlaneGraph::new(graph, rotation).expect("refined rotation is consistent");
    let sites = [
        mid(t.estar[0].0, t.estar[0].1),
        mid(t.estar[1].0, t.estar[1].1),
        mid(t.estar[2].0, t.estar[2].1),
    ];
    Ok(GrownTriangulation { pg, sites })
}

/// Restores the matching condition after growth. At each site the former
/// midpoint is removed and replaced by a horizontal degree-4 pair plus two
/// degree-6 vertices filling the faces above and below; the former matching
/// endpoints end up with degree 6.
pub fn fix_condition_iii(gt: &GrownTriangulation) -> Result<Triangulation, ConstructionError> {
    let n = gt.pg.n();
    let mut rot: Vec<Option<Vec<usize>>> =
        gt.pg.rotation().iter().map(|r| Some(r.clone())).collect();
    let mut estar = Vec::with_capacity(3);

    for &m in &gt.sites {
        let site = rot[m].take().ok_or(ConstructionError::NotATriangulation {
            family: "fix-condition-iii",
        })?;
        // layout written by grow_triangulation: [v2, b1, a1, v1, a2, b2]
        let [v2, b1, a1, v1, a2, b2]: [usize; 6] =
            site.try_into()
                .map_err(|_| ConstructionError::NotATriangulation {
                    family: "fix-condition-iii",
                })?;
        let nv1 = rot.len();
        rot.push(Some(Vec::new()));
        let nv2 = rot.len();
        rot.push(Some(Vec::new()));
        let tt = rot.len();
        rot.push(Some(Vec::new()));
        let bb = rot.len();
        rot.push(Some(Vec::new()));

        replace_entry(&mut rot, v1, m, &[bb, nv1, tt]);
        replace_entry(&mut rot, v2, m, &[tt, nv2, bb]);
        replace_entry(&mut rot, a1, m, &[tt]);
        replace_entry(&mut rot, b1, m, &[tt]);
        replace_entry(&mut rot, a2, m, &[bb]);
        replace_entry(&mut rot, b2, m, &[bb]);
        rot[nv1] = Some(vec![nv2, tt, v1, bb]);
        rot[nv2] = Some(vec![v2, tt, nv1, bb]);
        rot[tt] = Some(vec![b1, a1, v1, nv1, nv2, v2]);
        rot[bb] = Some(vec![v2, nv2, nv1, v1, a2, b2]);
        estar.push((nv1, nv2));
    }

    // compact ids
    let mut new_id = vec![usize::MAX; rot.len()];
    let mut next = 0usize;
    for (v, slot) in rot.iter().enumerate() {
        if slot.is_some() {
            new_id[v] = next;
            next += 1;
        }
    }
    let rotation: Vec<Vec<usize>> = rot
        .iter()
        .filter_map(|slot| {
            slot.as_ref()
                .map(|r| r.iter().map(|&w| new_id[w]).collect())
        })
        .collect();
    debug_assert_eq!(rotation.len(), n + 9);

    let graph = AbstractGraph::from_adjacency(rotation.clone())
        .expect("local transformation keeps symmetry");
    let pg = PlaneGraph::new(graph, rotation).expect("transformed rotation is consistent");
    let estar: Vec<(usize, usize)> = estar
        .into_iter()
        .map(|(a, b)| (new_id[a], new_id[b]))
        .collect();
    Ok(Triangulation {
        pg,
        estar: [estar[0], estar[1], estar[2]],
    })
}

fn replace_entry(rot: &mut [Option<Vec<usize>>], v: usize, old: usize, with: &[usize]) {
    let list = rot[v].as_mut().expect("vertex is live");
    let pos = list.iter().position(|&x| x == old).expect("entry present");
    list.splice(pos..pos + 1, with.iter().copied());
}
