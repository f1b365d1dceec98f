//! Simple undirected graphs with dense 0-based vertex ids.
//!
//! Graphs are immutable values: every edit returns a new graph, so they can
//! be shared freely across threads during search.

use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
}

/// An undirected simple graph given by sorted adjacency lists.
///
/// Invariants: no loops, symmetric adjacency, all neighbor ids in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbstractGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl AbstractGraph {
    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        AbstractGraph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(AbstractGraph { n, adj })
    }

    /// Builds a graph directly from adjacency lists, validating the invariants.
    pub fn from_adjacency(adj: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, nbrs) in adj.iter().enumerate() {
            for &v in nbrs {
                edges.push((u, v));
            }
        }
        // from_edges symmetrizes, which also accepts one-sided lists; reject
        // asymmetric input explicitly so file parsing stays strict.
        let g = Self::from_edges(n, &edges)?;
        for (u, nbrs) in adj.iter().enumerate() {
            for &v in nbrs {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange(v, n));
                }
                if !adj[v].contains(&u) {
                    return Err(GraphError::VertexOutOfRange(u, n));
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// New graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut edges = self.edges();
        edges.push((u, v));
        Self::from_edges(self.n, &edges)
    }

    /// New graph with an extra vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Result<Self, GraphError> {
        let mut edges = self.edges();
        for &u in nbrs {
            edges.push((u, self.n));
        }
        Self::from_edges(self.n + 1, &edges)
    }

    /// New graph with vertex `v` removed; remaining ids shift down densely.
    pub fn without_vertex(&self, v: usize) -> Self {
        let map = |x: usize| if x > v { x - 1 } else { x };
        let mut edges = Vec::new();
        for (a, b) in self.edges() {
            if a != v && b != v {
                edges.push((map(a), map(b)));
            }
        }
        Self::from_edges(self.n - 1, &edges).expect("vertex removal keeps invariants")
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (u, v) in self.edges() {
            edges.push((perm[u], perm[v]));
        }
        Self::from_edges(self.n, &edges).expect("permutation keeps invariants")
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut comps = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            comps += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        comps
    }
}

/// Vertex degree census: `counts[d]` = number of vertices of degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub counts: BTreeMap<usize, usize>,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
}

impl DegreeProfile {
    pub fn count(&self, d: usize) -> usize {
        self.counts.get(&d).copied().unwrap_or(0)
    }
}

pub fn degree_profile(g: &AbstractGraph) -> DegreeProfile {
    let mut counts = BTreeMap::new();
    for v in 0..g.n() {
        *counts.entry(g.degree(v)).or_insert(0) += 1;
    }
    DegreeProfile {
        min_degree: counts.keys().next().copied(),
        max_degree: counts.keys().next_back().copied(),
        counts,
    }
}

/// Connectivity summary: blocks are maximal subgraphs without a cut vertex
/// (isolated vertices count as order-1 blocks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub edge_count: usize,
    pub is_connected: bool,
    pub vertex_connectivity_at_least_2: bool,
    pub block_sizes: Vec<usize>,
    pub cut_vertices: Vec<usize>,
}

pub fn graph_stats(g: &AbstractGraph) -> GraphStats {
    let blocks = block_decomposition(g);
    let mut block_sizes: Vec<usize> = blocks.blocks.iter().map(|b| b.vertices.len()).collect();
    block_sizes.sort_unstable();
    let connected = g.is_connected();
    GraphStats {
        edge_count: g.edge_count(),
        is_connected: connected,
        vertex_connectivity_at_least_2: connected && g.n() >= 3 && blocks.cut_vertices.is_empty(),
        block_sizes,
        cut_vertices: blocks.cut_vertices,
    }
}

#[derive(Debug, Clone)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

/// Hopcroft–Tarjan block/cut-vertex decomposition, iterative to keep the
/// stack bounded on long paths.
pub fn block_decomposition(g: &AbstractGraph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            blocks.push(Block {
                vertices: vec![root],
                edges: Vec::new(),
            });
            disc[root] = timer;
            timer += 1;
            continue;
        }
        // frame: (vertex, next neighbor index)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0usize;

        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    stack.push((w, 0));
                    if v == root {
                        root_children += 1;
                    }
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        // u closes a block containing the edge (u, v);
                        // root cut status is settled by child count below
                        if u != root {
                            is_cut[u] = true;
                        }
                        let mut block_edges = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[v] || (a == u && b == v) {
                                block_edges.push((a, b));
                                edge_stack.pop();
                                if a == u && b == v {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        let mut verts: Vec<usize> = block_edges
                            .iter()
                            .flat_map(|&(a, b)| [a, b])
                            .collect();
                        verts.sort_unstable();
                        verts.dedup();
                        blocks.push(Block {
                            vertices: verts,
                            edges: block_edges,
                        });
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> AbstractGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        AbstractGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn degree_profile_empty_graph() {
        let g = AbstractGraph::empty(0);
        let p = degree_profile(&g);
        assert!(p.counts.is_empty());
        assert_eq!(p.min_degree, None);
    }

    #[test]
    fn degree_profile_k25() {
        // complete bipartite 2 x 5
        let mut edges = Vec::new();
        for hub in 0..2 {
            for leaf in 2..7 {
                edges.push((hub, leaf));
            }
        }
        let g = AbstractGraph::from_edges(7, &edges).unwrap();
        let p = degree_profile(&g);
        assert_eq!(p.count(5), 2);
        assert_eq!(p.count(2), 5);
        assert_eq!(p.min_degree, Some(2));
        let total: usize = p.counts.values().sum();
        assert_eq!(total, 7);
    }

    #[test]
    fn stats_path3() {
        let g = path(3);
        let s = graph_stats(&g);
        assert!(s.is_connected);
        assert!(!s.vertex_connectivity_at_least_2);
        assert_eq!(s.block_sizes, vec![2, 2]);
        assert_eq!(s.cut_vertices, vec![1]);
    }

    #[test]
    fn stats_two_triangles_sharing_vertex() {
        let g =
            AbstractGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let s = graph_stats(&g);
        assert_eq!(s.block_sizes, vec![3, 3]);
        assert!(!s.vertex_connectivity_at_least_2);
        assert_eq!(s.cut_vertices, vec![0]);
    }

    #[test]
    fn stats_two_k4_sharing_vertex() {
        // the n=7 equality graph: two K4 blocks joined at vertex 0
        let mut edges = Vec::new();
        for q in [[0usize, 1, 2, 3], [0, 4, 5, 6]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((q[i], q[j]));
                }
            }
        }
        let g = AbstractGraph::from_edges(7, &edges).unwrap();
        let s = graph_stats(&g);
        assert_eq!(s.block_sizes, vec![4, 4]);
        assert_eq!(s.edge_count, 12);
    }

    #[test]
    fn block_identity_sum() {
        // sum over blocks of (order - 1) = n - #components
        for g in [
            path(6),
            AbstractGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
            AbstractGraph::empty(3),
        ] {
            let d = block_decomposition(&g);
            let sum: usize = d.blocks.iter().map(|b| b.vertices.len() - 1).sum();
            assert_eq!(sum, g.n() - g.component_count());
        }
    }

    #[test]
    fn two_connected_iff_single_block() {
        let c4 = AbstractGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = graph_stats(&c4);
        assert!(s.vertex_connectivity_at_least_2);
        assert_eq!(s.block_sizes, vec![4]);
    }
}
