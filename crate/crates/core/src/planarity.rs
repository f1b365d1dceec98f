//! Planarity testing with embedding extraction.
//!
//! Each biconnected block is embedded with the Demoucron–Malgrange–Pertuiset
//! face-insertion algorithm; block embeddings merge at cut vertices by
//! concatenating rotation arcs. Non-planar inputs yield a Kuratowski-style
//! witness: the edge set of a K5 or K3,3 subdivision, obtained by deleting
//! edges while non-planarity persists.

use crate::graph::{block_decomposition, AbstractGraph};
use std::collections::{HashMap, HashSet};

#[derive(Debug, Clone)]
pub enum Planarity {
    Planar { rotation: Vec<Vec<usize>> },
    NonPlanar { obstruction: Vec<(usize, usize)> },
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar { .. })
    }
}

/// Full check: exactly one of embedding / obstruction.
pub fn is_planar(g: &AbstractGraph) -> Planarity {
    match planar_rotation(g) {
        Some(rotation) => Planarity::Planar { rotation },
        None => Planarity::NonPlanar {
            obstruction: find_obstruction(g),
        },
    }
}

/// Embedding-or-nothing fast path used by search pruning.
pub fn planar_rotation(g: &AbstractGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    // Euler bound rejects dense graphs before any real work.
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    let decomposition = block_decomposition(g);
    for block in &decomposition.blocks {
        if block.edges.is_empty() {
            continue; // isolated vertex
        }
        if block.edges.len() == 1 {
            let (u, v) = block.edges[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let verts = &block.vertices;
        let mut local_of = HashMap::new();
        for (i, &v) in verts.iter().enumerate() {
            local_of.insert(v, i);
        }
        let mut adj = vec![Vec::new(); verts.len()];
        for &(u, v) in &block.edges {
            let (lu, lv) = (local_of[&u], local_of[&v]);
            adj[lu].push(lv);
            adj[lv].push(lu);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let local_rot = dmp_embed(&adj)?;
        for (i, rot) in local_rot.into_iter().enumerate() {
            let v = verts[i];
            rotation[v].extend(rot.into_iter().map(|w| verts[w]));
        }
    }
    Some(rotation)
}

/// DMP on a 2-connected graph with at least 3 vertices, given as local
/// adjacency lists. Returns a rotation system or None when non-planar.
fn dmp_embed(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let total_edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;

    let cycle = find_cycle(adj)?;
    let mut faces: Vec<Vec<(usize, usize)>> = Vec::new();
    let m = cycle.len();
    faces.push((0..m).map(|i| (cycle[i], cycle[(i + 1) % m])).collect());
    faces.push((0..m).map(|i| (cycle[(m - i) % m], cycle[(m - i - 1) % m])).collect());

    let mut in_h = vec![false; n];
    for &v in &cycle {
        in_h[v] = true;
    }
    let mut embedded: HashSet<(usize, usize)> = HashSet::new();
    let mut embedded_count = 0usize;
    for i in 0..m {
        embedded.insert(norm(cycle[i], cycle[(i + 1) % m]));
        embedded_count += 1;
    }

    while embedded_count < total_edges {
        let fragments = compute_fragments(adj, &in_h, &embedded);
        debug_assert!(!fragments.is_empty());

        // admissible faces per fragment
        let face_vertex_sets: Vec<HashSet<usize>> = faces
            .iter()
            .map(|f| f.iter().map(|&(u, _)| u).collect())
            .collect();
        let mut chosen: Option<(usize, Vec<usize>)> = None; // fragment idx, admissible faces
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = face_vertex_sets
                .iter()
                .enumerate()
                .filter(|(_, vs)| frag.attachments.iter().all(|a| vs.contains(a)))
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return None;
            }
            let better = match &chosen {
                None => true,
                Some((_, best)) => admissible.len() < best.len(),
            };
            if better {
                chosen = Some((fi, admissible));
            }
        }
        let (frag_idx, admissible) = chosen.expect("fragments nonempty");
        let frag = &fragments[frag_idx];
        let face_idx = admissible[0];

        let path = fragment_path(adj, &in_h, frag);
        embed_path(&mut faces, face_idx, &path);
        for w in &path[1..path.len() - 1] {
            in_h[*w] = true;
        }
        for pair in path.windows(2) {
            if embedded.insert(norm(pair[0], pair[1])) {
                embedded_count += 1;
            }
        }
    }

    rotation_from_faces(adj, &faces)
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Any cycle in a graph with min degree >= 2 (true in a 2-connected block).
fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 new, 1 active, 2 done
    let mut stack = vec![(0usize, 0usize)];
    state[0] = 1;
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if *idx < adj[v].len() {
            let w = adj[v][*idx];
            *idx += 1;
            if state[w] == 0 {
                parent[w] = v;
                state[w] = 1;
                stack.push((w, 0));
            } else if state[w] == 1 && w != parent[v] {
                // back edge v -> w: cycle is w ... v along parents
                let mut cyc = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cyc.push(x);
                }
                cyc.reverse();
                return Some(cyc);
            }
        } else {
            state[v] = 2;
            stack.pop();
        }
    }
    None
}

struct Fragment {
    attachments: Vec<usize>,
    /// interior vertices; empty for a chord between two embedded vertices
    interior: Vec<usize>,
    /// for a chord fragment, the chord itself
    chord: Option<(usize, usize)>,
}

fn compute_fragments(
    adj: &[Vec<usize>],
    in_h: &[bool],
    embedded: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let n = adj.len();
    let mut fragments = Vec::new();
    // chords
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !embedded.contains(&(u, v)) {
                fragments.push(Fragment {
                    attachments: vec![u, v],
                    interior: Vec::new(),
                    chord: Some((u, v)),
                });
            }
        }
    }
    // components of G - H
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut queue = vec![s];
        let mut attachments = HashSet::new();
        while let Some(v) = queue.pop() {
            for &w in &adj[v] {
                if in_h[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push(w);
                }
            }
        }
        let mut attachments: Vec<usize> = attachments.into_iter().collect();
        attachments.sort_unstable();
        comp.sort_unstable();
        fragments.push(Fragment {
            attachments,
            interior: comp,
            chord: None,
        });
    }
    fragments
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = frag.attachments[0];
    let b = frag.attachments[1];
    let inside: HashSet<usize> = frag.interior.iter().copied().collect();
    // BFS from a through fragment interior to b
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &w in &adj[a] {
        if inside.contains(&w) && !parent.contains_key(&w) {
            parent.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if w == b {
                let mut path = vec![b, v];
                let mut x = v;
                while x != a {
                    x = parent[&x];
                    path.push(x);
                }
                path.reverse();
                return path;
            }
            if inside.contains(&w) && !parent.contains_key(&w) && !in_h[w] {
                parent.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment attachments are connected through its interior")
}

fn embed_path(faces: &mut Vec<Vec<(usize, usize)>>, face_idx: usize, path: &[usize]) {
    let face = faces[face_idx].clone();
    let a = path[0];
    let b = *path.last().unwrap();
    let pa = face
        .iter()
        .position(|&(t, _)| t == a)
        .expect("attachment on face");
    let pb = face
        .iter()
        .position(|&(t, _)| t == b)
        .expect("attachment on face");
    let forward: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
    let backward: Vec<(usize, usize)> = path
        .windows(2)
        .rev()
        .map(|w| (w[1], w[0]))
        .collect();
    let m = face.len();
    // face 1: a ->path-> b, then along the old face from b back to a
    let mut f1 = forward;
    let mut i = pb;
    while i != pa {
        f1.push(face[i]);
        i = (i + 1) % m;
    }
    // face 2: b ->path-> a, then along the old face from a to b
    let mut f2 = backward;
    let mut i = pa;
    while i != pb {
        f2.push(face[i]);
        i = (i + 1) % m;
    }
    faces[face_idx] = f1;
    faces.push(f2);
}

fn rotation_from_faces(
    adj: &[Vec<usize>],
    faces: &[Vec<(usize, usize)>],
) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for face in faces {
        let m = face.len();
        for i in 0..m {
            let (u, v) = face[i];
            let (_, w) = face[(i + 1) % m];
            // after dart (u, v) comes (v, w): successor of u at v is w
            succ[v].insert(u, w);
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let deg = adj[v].len();
        let mut rot = Vec::with_capacity(deg);
        let start = *adj[v].first()?;
        let mut u = start;
        loop {
            rot.push(u);
            u = *succ[v].get(&u)?;
            if u == start {
                break;
            }
            if rot.len() > deg {
                return None;
            }
        }
        if rot.len() != deg {
            return None;
        }
        rotation.push(rot);
    }
    Some(rotation)
}

/// Edge-minimal non-planar subgraph: delete edges while the graph stays
/// non-planar. What remains is exactly a K5 or K3,3 subdivision.
pub fn find_obstruction(g: &AbstractGraph) -> Vec<(usize, usize)> {
    let mut edges = g.edges();
    debug_assert!(planar_rotation(g).is_none());
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..edges.len() {
            let mut trial = edges.clone();
            trial.remove(i);
            let h = AbstractGraph::from_edges(g.n(), &trial).expect("subset of valid edges");
            if planar_rotation(&h).is_none() {
                edges = trial;
                changed = true;
                break;
            }
        }
    }
    edges
}

/// Branch vertices of an obstruction: the vertices of degree at least 3
/// in the subdivision (5 for K5, 6 for K3,3).
pub fn branch_vertices(n: usize, obstruction: &[(usize, usize)]) -> Vec<usize> {
    let mut deg = vec![0usize; n];
    for &(u, v) in obstruction {
        deg[u] += 1;
        deg[v] += 1;
    }
    (0..n).filter(|&v| deg[v] >= 3).collect()
}
