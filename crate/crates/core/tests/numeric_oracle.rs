//! Root tracking against the polygon predicted by the classification.

use std::time::Instant;

use chisini_core::graphs::{build_polygon, PolygonSpec};
use chisini_core::monodromy::MonodromyAssignment;
use chisini_core::numeric::{numeric_vs_polygon, verify_double_root_structure, NumericConfig};

#[test]
fn tracked_loops_form_the_polygon() {
    let cfg = NumericConfig::default();
    for (h, k) in [(1, 2), (1, 3), (2, 3), (1, 5), (3, 4), (2, 5)] {
        let start = Instant::now();
        let cert = numeric_vs_polygon(h, k, 1, 1, &cfg).unwrap();
        let elapsed = start.elapsed().as_secs_f64();
        assert!(elapsed < 10.0, "({h}, {k}) took {elapsed}s");
        assert!(cert.passed(), "({h}, {k}): {:?}", cert.checks);
        let d = h + k;
        assert_eq!(cert.transpositions.len(), d);
        assert!(cert.transpositions.iter().all(|t| t.is_transposition()));
        let j = cert.polygon.j.unwrap();
        assert!(j == h || j == d - h);
        assert!(cert.max_residual < 1e-8);

        // same graph as the combinatorial polygon, up to relabeling
        let tracked = MonodromyAssignment::new(d, cert.transpositions.clone()).unwrap().graph().unwrap();
        let polygon = build_polygon(PolygonSpec::new(d, 1, j).unwrap()).unwrap();
        assert!(tracked.is_isomorphic(&polygon));
    }
}

#[test]
fn base_change_multiplies_valence() {
    let cfg = NumericConfig::default();
    for a in 1..=2 {
        for b in 1..=2 {
            let cert = numeric_vs_polygon(2, 3, a, b, &cfg).unwrap();
            assert!(cert.passed(), "a={a} b={b}: {:?}", cert.checks);
            assert_eq!(cert.transpositions.len(), 5 * a);
            assert_eq!(cert.presentation.n, 6 * b);
        }
    }
}

#[test]
fn output_is_deterministic() {
    let cfg = NumericConfig::default();
    let a = serde_json::to_string(&numeric_vs_polygon(2, 3, 1, 1, &cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&numeric_vs_polygon(2, 3, 1, 1, &cfg).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn branch_fibers_have_one_double_root() {
    for (h, k) in [(1, 2), (2, 3), (1, 5), (3, 4), (2, 5), (4, 5)] {
        let r = verify_double_root_structure(h, k).unwrap();
        assert!(r.ok, "({h}, {k}): {r:?}");
        assert_eq!(r.other_simple_roots, h + k - 2);
    }
}
