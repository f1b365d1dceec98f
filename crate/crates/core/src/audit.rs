//! Per-graph audits of the face-counting inequalities behind the C4 and C5
//! edge bounds. Every quantity is evaluated as an exact rational; audits
//! never use floating point.
//!
//! Entries carry an applicability flag: an inequality whose hypothesis
//! (minimum degree, 2-connectivity, order threshold) is unmet is reported
//! as inapplicable rather than failed.

use crate::embedding::{
    classify_edges_unchecked, face_profile_unchecked, EmbeddingError, PlaneGraph,
};
use crate::graph::{degree_profile, graph_stats};
use crate::patterns::{find_pattern, ForbiddenPattern};
use crate::reduce::reduce_prime;
use num_rational::Rational64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AuditError {
    #[error("embedding fails the Euler check")]
    EulerInvalid,
    #[error("graph has {got} vertices, audit needs at least {need}")]
    TooSmall { got: usize, need: usize },
    #[error("audit requires a {pattern}-free graph, found witness {witness:?}")]
    PatternPresent {
        pattern: String,
        witness: Vec<usize>,
    },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

#[derive(Debug, Clone)]
pub struct AuditEntry {
    pub id: &'static str,
    pub description: String,
    pub lhs: Rational64,
    pub rhs: Rational64,
    pub relation: Relation,
    pub applicable: bool,
    pub holds: bool,
    pub tight: bool,
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn all_applicable_hold(&self) -> bool {
        self.entries.iter().all(|e| !e.applicable || e.holds)
    }

    pub fn entry(&self, id: &str) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn entry(
    id: &'static str,
    description: impl Into<String>,
    lhs: Rational64,
    relation: Relation,
    rhs: Rational64,
    applicable: bool,
) -> AuditEntry {
    let holds = match relation {
        Relation::Le => lhs <= rhs,
        Relation::Ge => lhs >= rhs,
        Relation::Eq => lhs == rhs,
    };
    AuditEntry {
        id,
        description: description.into(),
        lhs,
        rhs,
        relation,
        applicable,
        holds,
        tight: lhs == rhs,
    }
}

fn rat(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

/// Audits the chain behind `e <= 15/7 (n - 2)` on a C4-free plane graph.
pub fn audit_c4(pg: &PlaneGraph) -> Result<AuditReport, AuditError> {
    if !pg.euler_check() {
        return Err(AuditError::EulerInvalid);
    }
    if pg.n() < 4 {
        return Err(AuditError::TooSmall {
            got: pg.n(),
            need: 4,
        });
    }
    if let Some(witness) = find_pattern(pg.graph(), &ForbiddenPattern::Cycle(4)) {
        return Err(AuditError::PatternPresent {
            pattern: "c4".into(),
            witness,
        });
    }

    let profile = face_profile_unchecked(pg);
    let n = rat(pg.n() as i64);
    let e = rat(pg.edge_count() as i64);
    let f = rat(profile.f as i64);
    let f3 = rat(profile.count(3) as i64);

    let entries = vec![
        entry(
            "f_le_2(e+f3)/5",
            "total faces at most 2(e + f3)/5",
            f,
            Relation::Le,
            Rational64::new(2, 5) * (e + f3),
            true,
        ),
        entry(
            "f3_le_e/3",
            "triangular faces at most e/3 (no edge lies on two triangles)",
            f3,
            Relation::Le,
            e / rat(3),
            true,
        ),
        entry(
            "f_le_8e/15",
            "total faces at most 8e/15",
            f,
            Relation::Le,
            Rational64::new(8, 15) * e,
            true,
        ),
        entry(
            "e_le_15/7(n-2)",
            "edges at most 15/7 (n - 2)",
            e,
            Relation::Le,
            Rational64::new(15, 7) * (n - rat(2)),
            true,
        ),
    ];
    Ok(AuditReport { entries })
}

/// Audits the inequalities behind the two C5 bounds, including the derived
/// graph obtained by deleting edges that lie on two triangular faces.
pub fn audit_c5(pg: &PlaneGraph) -> Result<AuditReport, AuditError> {
    if !pg.euler_check() {
        return Err(AuditError::EulerInvalid);
    }
    if pg.n() < 5 {
        return Err(AuditError::TooSmall {
            got: pg.n(),
            need: 5,
        });
    }
    if let Some(witness) = find_pattern(pg.graph(), &ForbiddenPattern::Cycle(5)) {
        return Err(AuditError::PatternPresent {
            pattern: "c5".into(),
            witness,
        });
    }

    let profile = face_profile_unchecked(pg);
    let cls = classify_edges_unchecked(pg);
    let degrees = degree_profile(pg.graph());
    let stats = graph_stats(pg.graph());
    let delta3 = degrees.min_degree.map(|d| d >= 3).unwrap_or(false);
    let kappa2 = stats.vertex_connectivity_at_least_2;
    let derived_ok = delta3 && kappa2;

    let n = rat(pg.n() as i64);
    let e = rat(pg.edge_count() as i64);
    let f3 = rat(profile.count(3) as i64);
    let f4 = rat(profile.count(4) as i64);
    let f5 = rat(profile.count(5) as i64);
    let e3 = rat(cls.edges_in_faces_of_size(3) as i64);
    let f31 = rat(profile.f31 as i64);
    let excess = rat(profile.excess_over_hexagons() as i64);

    let gp = reduce_prime(pg)?;
    let gp_profile = face_profile_unchecked(&gp);
    let gp_cls = classify_edges_unchecked(&gp);
    let gp_degrees = degree_profile(gp.graph());
    let np = rat(gp.n() as i64);
    let ep = rat(gp.edge_count() as i64);
    let f3p = rat(gp_profile.count(3) as i64);
    let e3p = rat(gp_cls.edges_in_faces_of_size(3) as i64);
    let d2p = rat(gp_degrees.count(2) as i64);
    let d3p = rat(gp_degrees.count(3) as i64);
    let tri_tri_p = rat(gp_cls.pair_count(3, 3) as i64);
    let tri_quad_p = rat(gp_cls.pair_count(3, 4) as i64);

    let entries = vec![
        entry(
            "f3_le_e3/2",
            "triangular faces at most e3/2",
            f3,
            Relation::Le,
            e3 / rat(2),
            true,
        ),
        entry(
            "f4_le_(e-e3)/2",
            "quadrilateral faces at most (e - e3)/2 [needs min degree 3]",
            f4,
            Relation::Le,
            (e - e3) / rat(2),
            delta3,
        ),
        entry(
            "f5_eq_0",
            "no faces of size 5 [needs min degree 3]",
            f5,
            Relation::Eq,
            rat(0),
            delta3,
        ),
        entry(
            "e_le_12/5(n-2)",
            "edges at most 12/5 (n - 2)",
            e,
            Relation::Le,
            Rational64::new(12, 5) * (n - rat(2)),
            true,
        ),
        entry(
            "gp_e_le_2n-4",
            "derived graph: edges at most 2|G'| - 4 [needs 2-connected, min degree 3]",
            ep,
            Relation::Le,
            rat(2) * np - rat(4),
            derived_ok,
        ),
        entry(
            "gp_f3_eq_e3/3",
            "derived graph: triangular faces exactly e3'/3 [needs 2-connected, min degree 3]",
            f3p,
            Relation::Eq,
            e3p / rat(3),
            derived_ok,
        ),
        entry(
            "gp_no_tri_tri_edge",
            "derived graph: no edge on two triangular faces [needs 2-connected, min degree 3]",
            tri_tri_p,
            Relation::Eq,
            rat(0),
            derived_ok,
        ),
        entry(
            "gp_no_tri_quad_edge",
            "derived graph: no edge between a triangular and a quadrilateral face [needs 2-connected, min degree 3]",
            tri_quad_p,
            Relation::Eq,
            rat(0),
            derived_ok,
        ),
        entry(
            "gp_degree_deficiency",
            "derived graph: 2 d2' + d3' at least 4|G'| - 2e(G') [needs 2-connected, min degree 3]",
            rat(2) * d2p + d3p,
            Relation::Ge,
            rat(4) * np - rat(2) * ep,
            derived_ok,
        ),
        entry(
            "f31_le_2e3-4f3",
            "triangles with exactly one shared edge at most 2 e3 - 4 f3",
            f31,
            Relation::Le,
            rat(2) * e3 - rat(4) * f3,
            true,
        ),
        entry(
            "f31_plus_excess_ge_d2p",
            "f31 plus large-face excess at least d2' [needs 2-connected, min degree 3]",
            f31 + excess,
            Relation::Ge,
            d2p,
            derived_ok,
        ),
    ];
    Ok(AuditReport { entries })
}
