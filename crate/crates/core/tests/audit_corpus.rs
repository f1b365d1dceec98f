//! Audits hold on everything the search produces: every extremal witness at
//! small orders embeds and passes the applicable inequality set for its
//! pattern. A violation here means a bug in the audits, the face traversal,
//! or the detectors, not new mathematics.

use planext_core::audit::{audit_c4, audit_c5};
use planext_core::bounds::BoundForm;
use planext_core::embedding::PlaneGraph;
use planext_core::patterns::ForbiddenPattern;
use planext_core::planarity::{is_planar, Planarity};
use planext_core::search::{extremal_search, verify_bound, SearchConfig};

fn witnesses(n: usize, pattern: ForbiddenPattern) -> Vec<PlaneGraph> {
    let mut cfg = SearchConfig::new(n, pattern);
    cfg.workers = 4;
    let result = extremal_search(&cfg).unwrap();
    result
        .witnesses
        .iter()
        .map(|w| {
            let g = planext_core::read_graph6(w).unwrap();
            match is_planar(&g) {
                Planarity::Planar { rotation } => PlaneGraph::new(g, rotation).unwrap(),
                Planarity::NonPlanar { .. } => panic!("witnesses are planar"),
            }
        })
        .collect()
}

#[test]
fn c4_audit_holds_on_all_small_extremal_graphs() {
    for n in 4..=9 {
        for pg in witnesses(n, ForbiddenPattern::Cycle(4)) {
            let report = audit_c4(&pg).unwrap();
            assert!(
                report.all_applicable_hold(),
                "c4 audit violated at n={n}: {report:?}"
            );
        }
    }
}

#[test]
fn c5_audit_holds_on_all_small_extremal_graphs() {
    for n in 5..=9 {
        for pg in witnesses(n, ForbiddenPattern::Cycle(5)) {
            let report = audit_c5(&pg).unwrap();
            assert!(
                report.all_applicable_hold(),
                "c5 audit violated at n={n}: {report:?}"
            );
        }
    }
}

#[test]
fn triangle_free_bound_is_tight_everywhere() {
    let checks = verify_bound(
        4..=8,
        &ForbiddenPattern::Clique(3),
        BoundForm::TriangleFree,
        4,
    )
    .unwrap();
    for c in checks {
        assert!(c.holds);
        assert!(c.tight, "ex(n,k3) = 2n-4 exactly at n={}", c.n);
        assert_eq!(c.ex, 2 * c.n - 4);
    }
}

#[test]
fn c4_bound_holds_and_c5_bound_strict() {
    let c4 = verify_bound(4..=8, &ForbiddenPattern::Cycle(4), BoundForm::C4, 4).unwrap();
    for c in &c4 {
        assert!(c.holds, "c4 bound at n={}", c.n);
    }
    let c5 = verify_bound(8..=9, &ForbiddenPattern::Cycle(5), BoundForm::C5Simple, 4).unwrap();
    for c in &c5 {
        assert!(c.holds && !c.tight, "strictness at n={}", c.n);
    }
    // equality is attained at n = 7
    let at7 = verify_bound(
        std::iter::once(7),
        &ForbiddenPattern::Cycle(5),
        BoundForm::C5Simple,
        4,
    )
    .unwrap();
    assert!(at7[0].tight);
}

#[test]
fn double_wheel_embeds_as_triangulation_via_planarity() {
    let pg = planext_core::constructions::double_wheel(8).unwrap();
    // re-embed the abstract graph from scratch through the planarity test
    match is_planar(pg.graph()) {
        Planarity::Planar { rotation } => {
            let re = PlaneGraph::new(pg.graph().clone(), rotation).unwrap();
            assert!(re.euler_check());
            assert!(re.faces().iter().all(|f| f.size() == 3));
        }
        Planarity::NonPlanar { .. } => panic!("double wheel is planar"),
    }
}
