//! Canonical labeling by iterated partition refinement with backtracking
//! over automorphism-breaking choices.
//!
//! Two graphs have equal certificates iff they are isomorphic. No particular
//! vertex order is promised beyond that contract; the certificate is the
//! lexicographically smallest adjacency encoding over all labelings the
//! refinement tree explores.

use crate::graph::AbstractGraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// `labeling[v]` = position of `v` in the canonical order.
    pub labeling: Vec<usize>,
    /// `n` (big-endian u32) followed by the packed canonical upper triangle.
    pub certificate: Vec<u8>,
}

pub fn canonical_form(g: &AbstractGraph) -> CanonicalForm {
    let n = g.n();

    // Interchangeable-vertex shortcuts keep the branch tree small on the
    // degenerate inputs refinement cannot split.
    let isolated: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    if !isolated.is_empty() && isolated.len() < n {
        return canon_with_isolated(g, &isolated);
    }
    if n > 1 && (0..n).all(|v| g.degree(v) == n - 1) || isolated.len() == n {
        let labeling: Vec<usize> = (0..n).collect();
        let certificate = certificate_for(g, &labeling);
        return CanonicalForm {
            labeling,
            certificate,
        };
    }

    let mut colors = vec![0usize; n];
    refine(g, &mut colors);
    let mut best: Option<CanonicalForm> = None;
    explore(g, colors, &mut best);
    best.expect("at least one labeling is explored")
}

/// Canonical graph6 string (graph relabeled into canonical order).
pub fn canonical_g6(g: &AbstractGraph) -> String {
    let canon = canonical_form(g);
    crate::graph6::write_graph6(&g.permuted(&canon.labeling))
}

pub fn are_isomorphic(a: &AbstractGraph, b: &AbstractGraph) -> bool {
    a.n() == b.n() && canonical_form(a).certificate == canonical_form(b).certificate
}

fn canon_with_isolated(g: &AbstractGraph, isolated: &[usize]) -> CanonicalForm {
    let mut core_ids = Vec::new();
    let mut to_core = vec![usize::MAX; g.n()];
    for (v, slot) in to_core.iter_mut().enumerate() {
        if g.degree(v) > 0 {
            *slot = core_ids.len();
            core_ids.push(v);
        }
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        edges.push((to_core[u], to_core[v]));
    }
    let core = AbstractGraph::from_edges(core_ids.len(), &edges).expect("core is valid");
    let core_canon = canonical_form(&core);
    let mut labeling = vec![usize::MAX; g.n()];
    for (core_idx, &orig) in core_ids.iter().enumerate() {
        labeling[orig] = core_canon.labeling[core_idx];
    }
    for (k, &v) in isolated.iter().enumerate() {
        labeling[v] = core_ids.len() + k;
    }
    let certificate = certificate_for(g, &labeling);
    CanonicalForm {
        labeling,
        certificate,
    }
}

fn explore(g: &AbstractGraph, colors: Vec<usize>, best: &mut Option<CanonicalForm>) {
    let n = g.n();
    // first non-singleton cell, by color rank
    let mut count = vec![0usize; n + 1];
    for &c in &colors {
        count[c] += 1;
    }
    let cell_of = count.iter().position(|&c| c >= 2);
    match cell_of {
        None => {
            // discrete: colors are exactly the canonical positions
            let labeling = colors;
            let certificate = certificate_for(g, &labeling);
            let better = match best {
                None => true,
                Some(b) => certificate < b.certificate,
            };
            if better {
                *best = Some(CanonicalForm {
                    labeling,
                    certificate,
                });
            }
        }
        Some(cell) => {
            for v in 0..n {
                if colors[v] != cell {
                    continue;
                }
                let mut next = colors.clone();
                // split v off at the front of its cell
                for (w, color) in next.iter_mut().enumerate() {
                    if *color > cell || (*color == cell && w != v) {
                        *color += 1;
                    }
                }
                refine(g, &mut next);
                explore(g, next, best);
            }
        }
    }
}

/// Refines colors until stable: the signature of a vertex is its color plus
/// the sorted multiset of neighbor colors. Colors are normalized ranks.
fn refine(g: &AbstractGraph, colors: &mut [usize]) {
    let n = g.n();
    if n == 0 {
        return;
    }
    loop {
        let old_classes = 1 + *colors.iter().max().unwrap();
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nc: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
            nc.sort_unstable();
            sigs.push((colors[v], nc));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]).then(a.cmp(&b)));
        let mut rank = 0usize;
        let mut new_colors = vec![0usize; n];
        for i in 0..n {
            if i > 0 && sigs[order[i]] != sigs[order[i - 1]] {
                rank += 1;
            }
            new_colors[order[i]] = rank;
        }
        let new_classes = rank + 1;
        colors.copy_from_slice(&new_colors);
        if new_classes == old_classes || new_classes == n {
            return;
        }
    }
}

fn certificate_for(g: &AbstractGraph, labeling: &[usize]) -> Vec<u8> {
    let n = g.n();
    let mut inverse = vec![0usize; n];
    for (v, &pos) in labeling.iter().enumerate() {
        inverse[pos] = v;
    }
    let mut bytes = Vec::with_capacity(4 + n * n / 16 + 1);
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    let mut acc = 0u8;
    let mut filled = 0u8;
    for i in 0..n {
        for j in (i + 1)..n {
            acc <<= 1;
            if g.has_edge(inverse[i], inverse[j]) {
                acc |= 1;
            }
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 8 - filled;
        bytes.push(acc);
    }
    bytes
}
