//! Combinatorial plane embeddings as rotation systems.
//!
//! A rotation system lists, for every vertex, its neighbors in
//! counterclockwise order. Faces are orbits of darts (ordered vertex pairs)
//! under the traversal rule: after dart `(u, v)` comes `(v, w)` where `w` is
//! the successor of `u` in the rotation at `v`. Faces then lie to the left
//! of each dart. This rule is normative so fixtures stay bit-stable.

use crate::graph::AbstractGraph;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("vertex {vertex}: rotation is not a permutation of the adjacency (position {position})")]
    RotationMismatch { vertex: usize, position: usize },
    #[error("vertex {vertex}: rotation length {got} does not match degree {expected}")]
    RotationLength {
        vertex: usize,
        got: usize,
        expected: usize,
    },
    #[error("rotation table has {got} rows for {expected} vertices")]
    RotationRows { got: usize, expected: usize },
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("embedding fails the Euler check")]
    EulerInvalid,
}

pub type Dart = (usize, usize);

/// One face of the embedding: a closed walk of darts. An edge may appear
/// twice in the same walk (bridges), so `size` is the walk length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<Dart>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.walk.len()
    }

    /// Vertices in walk order (with repeats if the walk revisits).
    pub fn vertices(&self) -> Vec<usize> {
        self.walk.iter().map(|&(u, _)| u).collect()
    }

    /// True when the walk is a simple cycle (no repeated vertex).
    pub fn is_cycle(&self) -> bool {
        let mut vs = self.vertices();
        vs.sort_unstable();
        vs.windows(2).all(|w| w[0] != w[1])
    }
}

/// A graph together with a rotation system. Faces are derived at build time,
/// never stored independently.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    graph: AbstractGraph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    face_of_dart: HashMap<Dart, usize>,
}

impl PlaneGraph {
    /// Builds an embedding for a connected graph.
    pub fn new(graph: AbstractGraph, rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        if !graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        Self::new_allow_disconnected(graph, rotation)
    }

    /// Builds an embedding without the connectivity requirement. Reductions
    /// can legitimately output disconnected embeddings; the Euler check will
    /// report those as invalid spheres.
    pub fn new_allow_disconnected(
        graph: AbstractGraph,
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self, EmbeddingError> {
        if rotation.len() != graph.n() {
            return Err(EmbeddingError::RotationRows {
                got: rotation.len(),
                expected: graph.n(),
            });
        }
        for (v, rot) in rotation.iter().enumerate() {
            if rot.len() != graph.degree(v) {
                return Err(EmbeddingError::RotationLength {
                    vertex: v,
                    got: rot.len(),
                    expected: graph.degree(v),
                });
            }
            let mut seen = rot.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != rot.len() {
                let position = first_dup_position(rot);
                return Err(EmbeddingError::RotationMismatch {
                    vertex: v,
                    position,
                });
            }
            for (position, &w) in rot.iter().enumerate() {
                if !graph.has_edge(v, w) {
                    return Err(EmbeddingError::RotationMismatch {
                        vertex: v,
                        position,
                    });
                }
            }
        }
        let faces = trace_faces(&graph, &rotation);
        let mut face_of_dart = HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            for &d in &f.walk {
                face_of_dart.insert(d, i);
            }
        }
        Ok(PlaneGraph {
            graph,
            rotation,
            faces,
            face_of_dart,
        })
    }

    pub fn graph(&self) -> &AbstractGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_index_of(&self, dart: Dart) -> usize {
        self.face_of_dart[&dart]
    }

    /// The two face indices incident to an edge (equal only at a bridge
    /// traversed twice by one walk).
    pub fn faces_of_edge(&self, u: usize, v: usize) -> (usize, usize) {
        (self.face_of_dart[&(u, v)], self.face_of_dart[&(v, u)])
    }

    /// Euler sphere test: `n - e + f = 2`. Disconnected embeddings fail it.
    pub fn euler_check(&self) -> bool {
        let n = self.graph.n() as i64;
        let e = self.graph.edge_count() as i64;
        let f = self.faces.len() as i64;
        n - e + f == 2
    }
}

fn first_dup_position(rot: &[usize]) -> usize {
    let mut seen = std::collections::HashSet::new();
    for (i, &w) in rot.iter().enumerate() {
        if !seen.insert(w) {
            return i;
        }
    }
    0
}

fn trace_faces(graph: &AbstractGraph, rotation: &[Vec<usize>]) -> Vec<Face> {
    // successor lookup: succ[v][u] = neighbor after u in rotation at v
    let mut succ: Vec<HashMap<usize, usize>> = Vec::with_capacity(graph.n());
    for rot in rotation {
        let mut m = HashMap::with_capacity(rot.len());
        for (i, &u) in rot.iter().enumerate() {
            m.insert(u, rot[(i + 1) % rot.len()]);
        }
        succ.push(m);
    }
    let mut visited: HashMap<Dart, bool> = HashMap::new();
    let mut faces = Vec::new();
    for u in 0..graph.n() {
        for &v in graph.neighbors(u) {
            if visited.get(&(u, v)).copied().unwrap_or(false) {
                continue;
            }
            let mut walk = Vec::new();
            let mut dart = (u, v);
            loop {
                visited.insert(dart, true);
                walk.push(dart);
                let (a, b) = dart;
                let w = succ[b][&a];
                dart = (b, w);
                if dart == (u, v) {
                    break;
                }
            }
            faces.push(Face { walk });
        }
    }
    faces
}

/// Face-size census: `f_i` plus the paper's `f_{3,1}` statistic, the number
/// of triangular faces sharing exactly one edge with another triangular face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceProfile {
    pub f_i: BTreeMap<usize, usize>,
    pub f: usize,
    pub f31: usize,
}

impl FaceProfile {
    pub fn count(&self, size: usize) -> usize {
        self.f_i.get(&size).copied().unwrap_or(0)
    }

    /// Sum of `(i - 6) * f_i` over face sizes `i >= 7`.
    pub fn excess_over_hexagons(&self) -> usize {
        self.f_i
            .iter()
            .filter(|&(&i, _)| i >= 7)
            .map(|(&i, &c)| (i - 6) * c)
            .sum()
    }
}

pub fn face_profile(pg: &PlaneGraph) -> Result<FaceProfile, EmbeddingError> {
    if !pg.euler_check() {
        return Err(EmbeddingError::EulerInvalid);
    }
    Ok(face_profile_unchecked(pg))
}

pub(crate) fn face_profile_unchecked(pg: &PlaneGraph) -> FaceProfile {
    let mut f_i = BTreeMap::new();
    for face in pg.faces() {
        *f_i.entry(face.size()).or_insert(0) += 1;
    }
    let f = pg.faces().len();
    let mut f31 = 0;
    for (idx, face) in pg.faces().iter().enumerate() {
        if face.size() != 3 {
            continue;
        }
        let mut shared = 0;
        for &(u, v) in &face.walk {
            let other = pg.face_index_of((v, u));
            if other != idx && pg.faces()[other].size() == 3 {
                shared += 1;
            }
        }
        if shared == 1 {
            f31 += 1;
        }
    }
    FaceProfile { f_i, f, f31 }
}

/// Per-edge face sizes and the aggregate `e_i` / `|E_{i,j}|` statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFaceClassification {
    /// edge (u < v) -> sizes of its two incident faces, smaller first
    pub per_edge: BTreeMap<(usize, usize), (usize, usize)>,
    /// `e_i`: number of edges in at least one face of size i
    pub e_i: BTreeMap<usize, usize>,
    /// `|E_{i,j}|`: number of edges between a size-i and a size-j face (i <= j)
    pub pair_counts: BTreeMap<(usize, usize), usize>,
}

impl EdgeFaceClassification {
    pub fn edges_in_faces_of_size(&self, size: usize) -> usize {
        self.e_i.get(&size).copied().unwrap_or(0)
    }

    pub fn pair_count(&self, a: usize, b: usize) -> usize {
        let key = (a.min(b), a.max(b));
        self.pair_counts.get(&key).copied().unwrap_or(0)
    }

    /// Number of edges whose two incident faces both have the given size
    /// exactly once (i.e. edges in exactly one face of that size).
    pub fn edges_in_exactly_one_face_of_size(&self, size: usize) -> usize {
        self.per_edge
            .values()
            .filter(|&&(a, b)| (a == size) ^ (b == size))
            .count()
    }
}

pub fn classify_edges(pg: &PlaneGraph) -> Result<EdgeFaceClassification, EmbeddingError> {
    if !pg.euler_check() {
        return Err(EmbeddingError::EulerInvalid);
    }
    Ok(classify_edges_unchecked(pg))
}

pub(crate) fn classify_edges_unchecked(pg: &PlaneGraph) -> EdgeFaceClassification {
    let mut per_edge = BTreeMap::new();
    let mut e_i: BTreeMap<usize, usize> = BTreeMap::new();
    let mut pair_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, v) in pg.graph().edges() {
        let (fa, fb) = pg.faces_of_edge(u, v);
        let sa = pg.faces()[fa].size();
        let sb = pg.faces()[fb].size();
        let (lo, hi) = (sa.min(sb), sa.max(sb));
        per_edge.insert((u, v), (lo, hi));
        *pair_counts.entry((lo, hi)).or_insert(0) += 1;
        *e_i.entry(lo).or_insert(0) += 1;
        if hi != lo {
            *e_i.entry(hi).or_insert(0) += 1;
        }
    }
    EdgeFaceClassification {
        per_edge,
        e_i,
        pair_counts,
    }
}
