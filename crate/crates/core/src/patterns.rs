//! Forbidden-subgraph detection: fixed-length cycles, cliques, and arbitrary
//! small connected patterns. Subgraph semantics throughout (not induced).

use crate::canon;
use crate::graph::AbstractGraph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("cycle length must be at least 3 (got {0})")]
    CycleTooShort(usize),
    #[error("clique order must be at least 3 (got {0})")]
    CliqueTooSmall(usize),
    #[error("custom pattern has {0} vertices, the cap is 12")]
    CustomTooLarge(usize),
    #[error("custom pattern must be connected")]
    CustomDisconnected,
    #[error("unknown pattern spec {0:?}")]
    UnknownSpec(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForbiddenPattern {
    Cycle(usize),
    Clique(usize),
    Custom(AbstractGraph),
}

impl ForbiddenPattern {
    pub fn cycle(k: usize) -> Result<Self, PatternError> {
        if k < 3 {
            return Err(PatternError::CycleTooShort(k));
        }
        Ok(ForbiddenPattern::Cycle(k))
    }

    pub fn clique(r: usize) -> Result<Self, PatternError> {
        if r < 3 {
            return Err(PatternError::CliqueTooSmall(r));
        }
        Ok(ForbiddenPattern::Clique(r))
    }

    pub fn custom(g: AbstractGraph) -> Result<Self, PatternError> {
        if g.n() > 12 {
            return Err(PatternError::CustomTooLarge(g.n()));
        }
        if !g.is_connected() {
            return Err(PatternError::CustomDisconnected);
        }
        Ok(ForbiddenPattern::Custom(g))
    }

    /// Parses the CLI spec forms `c<k>` and `k<r>` (custom patterns are
    /// loaded from files by the caller).
    pub fn parse_named(spec: &str) -> Result<Self, PatternError> {
        let parse_num = |s: &str| s.parse::<usize>().ok();
        if let Some(rest) = spec.strip_prefix('c') {
            if let Some(k) = parse_num(rest) {
                return Self::cycle(k);
            }
        }
        if let Some(rest) = spec.strip_prefix('k') {
            if let Some(r) = parse_num(rest) {
                return Self::clique(r);
            }
        }
        Err(PatternError::UnknownSpec(spec.to_string()))
    }

    pub fn label(&self) -> String {
        match self {
            ForbiddenPattern::Cycle(k) => format!("c{k}"),
            ForbiddenPattern::Clique(r) => format!("k{r}"),
            ForbiddenPattern::Custom(g) => format!("custom:{}", crate::graph6::write_graph6(g)),
        }
    }
}

/// Searches for a copy of the pattern. Returns a witness vertex list when
/// found: the cycle in order, the clique members, or for custom patterns the
/// image of pattern vertex `i` at position `i`.
pub fn find_pattern(g: &AbstractGraph, p: &ForbiddenPattern) -> Option<Vec<usize>> {
    match p {
        ForbiddenPattern::Cycle(k) => find_cycle(g, *k),
        ForbiddenPattern::Clique(r) => find_clique(g, *r),
        ForbiddenPattern::Custom(h) => find_subgraph(g, h),
    }
}

pub fn contains_pattern(g: &AbstractGraph, p: &ForbiddenPattern) -> bool {
    find_pattern(g, p).is_some()
}

/// Like `find_pattern` but only reports copies using vertex `v`. Sound for
/// incremental search: a pattern-free graph plus one vertex contains the
/// pattern iff some copy goes through the new vertex.
pub fn find_pattern_through(
    g: &AbstractGraph,
    p: &ForbiddenPattern,
    v: usize,
) -> Option<Vec<usize>> {
    match p {
        ForbiddenPattern::Cycle(k) => find_cycle_through(g, *k, v),
        ForbiddenPattern::Clique(r) => {
            find_clique_extend(g, *r, &mut vec![v]).map(|mut w| {
                w.sort_unstable();
                w
            })
        }
        ForbiddenPattern::Custom(h) => {
            // try each pattern vertex as the image of v
            for anchor in 0..h.n() {
                if let Some(w) = find_subgraph_anchored(g, h, anchor, v) {
                    return Some(w);
                }
            }
            None
        }
    }
}

/// Depth-capped DFS for a k-cycle. Each cycle is searched with its minimum
/// vertex as the start, which prunes the path tree hard; this is the hot
/// check in search, so it avoids generic matching.
fn find_cycle(g: &AbstractGraph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n < k {
        return None;
    }
    let mut path = Vec::with_capacity(k);
    let mut used = vec![false; n];
    for start in 0..n {
        path.push(start);
        used[start] = true;
        if cycle_dfs(g, k, start, &mut path, &mut used, true) {
            return Some(path);
        }
        used[start] = false;
        path.pop();
    }
    None
}

fn cycle_dfs(
    g: &AbstractGraph,
    k: usize,
    start: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    min_start: bool,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == k {
        return g.has_edge(last, start);
    }
    for &w in g.neighbors(last) {
        if used[w] || (min_start && w < start) {
            continue;
        }
        path.push(w);
        used[w] = true;
        if cycle_dfs(g, k, start, path, used, min_start) {
            return true;
        }
        used[w] = false;
        path.pop();
    }
    false
}

fn find_cycle_through(g: &AbstractGraph, k: usize, v: usize) -> Option<Vec<usize>> {
    if g.n() < k {
        return None;
    }
    let mut path = vec![v];
    let mut used = vec![false; g.n()];
    used[v] = true;
    if cycle_dfs(g, k, v, &mut path, &mut used, false) {
        return Some(path);
    }
    None
}

fn find_clique(g: &AbstractGraph, r: usize) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        if g.degree(v) + 1 < r {
            continue;
        }
        if let Some(mut w) = find_clique_extend(g, r, &mut vec![v]) {
            w.sort_unstable();
            return Some(w);
        }
    }
    None
}

fn find_clique_extend(g: &AbstractGraph, r: usize, members: &mut Vec<usize>) -> Option<Vec<usize>> {
    if members.len() == r {
        return Some(members.clone());
    }
    let last = *members.last().unwrap();
    for &w in g.neighbors(last) {
        if members.contains(&w) {
            continue;
        }
        if members.iter().all(|&m| g.has_edge(m, w)) {
            members.push(w);
            if let Some(found) = find_clique_extend(g, r, members) {
                return Some(found);
            }
            members.pop();
        }
    }
    None
}

/// Generic backtracking subgraph matcher for small connected patterns.
fn find_subgraph(g: &AbstractGraph, h: &AbstractGraph) -> Option<Vec<usize>> {
    if h.n() == 0 {
        return Some(Vec::new());
    }
    find_subgraph_anchored_any(g, h, None)
}

fn find_subgraph_anchored(
    g: &AbstractGraph,
    h: &AbstractGraph,
    anchor: usize,
    image: usize,
) -> Option<Vec<usize>> {
    find_subgraph_anchored_any(g, h, Some((anchor, image)))
}

fn find_subgraph_anchored_any(
    g: &AbstractGraph,
    h: &AbstractGraph,
    anchor: Option<(usize, usize)>,
) -> Option<Vec<usize>> {
    // order pattern vertices so each one after the first touches an earlier one
    let order = connected_order(h, anchor.map(|(a, _)| a).unwrap_or(0));
    let mut mapping = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    fn rec(
        g: &AbstractGraph,
        h: &AbstractGraph,
        order: &[usize],
        pos: usize,
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
        anchor: Option<(usize, usize)>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let hv = order[pos];
        let candidates: Vec<usize> = if let Some((a, img)) = anchor {
            if hv == a {
                vec![img]
            } else {
                candidate_list(g, h, hv, mapping)
            }
        } else {
            candidate_list(g, h, hv, mapping)
        };
        for gv in candidates {
            if used[gv] || g.degree(gv) < h.degree(hv) {
                continue;
            }
            // every already-mapped pattern neighbor must map to a g-neighbor
            if !h
                .neighbors(hv)
                .iter()
                .all(|&hw| mapping[hw] == usize::MAX || g.has_edge(gv, mapping[hw]))
            {
                continue;
            }
            mapping[hv] = gv;
            used[gv] = true;
            if rec(g, h, order, pos + 1, mapping, used, anchor) {
                return true;
            }
            used[gv] = false;
            mapping[hv] = usize::MAX;
        }
        false
    }
    if rec(g, h, &order, 0, &mut mapping, &mut used, anchor) {
        Some(mapping)
    } else {
        None
    }
}

fn candidate_list(g: &AbstractGraph, h: &AbstractGraph, hv: usize, mapping: &[usize]) -> Vec<usize> {
    // prefer extending from a mapped neighbor; fall back to all vertices
    for &hw in h.neighbors(hv) {
        if mapping[hw] != usize::MAX {
            return g.neighbors(mapping[hw]).to_vec();
        }
    }
    (0..g.n()).collect()
}

fn connected_order(h: &AbstractGraph, root: usize) -> Vec<usize> {
    let mut order = vec![root];
    let mut seen = vec![false; h.n()];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in h.neighbors(order[i]) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    order
}

/// Test-grade oracle: exhaustive enumeration of k-subsets and rotations.
/// Kept independent of the DFS path above so the two can be cross-checked.
pub fn contains_cycle_bruteforce(g: &AbstractGraph, k: usize) -> bool {
    let n = g.n();
    if n < k {
        return false;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if subset_has_cycle(g, &subset) {
            return true;
        }
        if !next_combination(&mut subset, n) {
            return false;
        }
    }
}

/// Advances to the next k-combination of `0..n` in lexicographic order.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn subset_has_cycle(g: &AbstractGraph, subset: &[usize]) -> bool {
    let k = subset.len();
    let mut perm: Vec<usize> = (1..k).collect();
    loop {
        let ok = {
            let mut prev = subset[0];
            let mut good = true;
            for &idx in &perm {
                if !g.has_edge(prev, subset[idx]) {
                    good = false;
                    break;
                }
                prev = subset[idx];
            }
            good && g.has_edge(prev, subset[0])
        };
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism-class equality used by tests that compare witnesses.
pub fn same_class(a: &AbstractGraph, b: &AbstractGraph) -> bool {
    canon::are_isomorphic(a, b)
}
