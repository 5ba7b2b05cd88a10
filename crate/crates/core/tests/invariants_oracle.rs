//! Curve and surface invariants of the family curves against a plain
//! integer recomputation.

use chisini_core::covers::FamilyCurve;
use chisini_core::invariants::{
    bmy_report, chisini_bound, dual_degree, dual_degree_class_formula, fiber_product_numbers, hodge_bound,
    r_squared, surface_invariants, BranchCurveData, SingularityClass,
};
use num_bigint::BigInt;
use num_rational::BigRational;

struct Plain {
    g: i128,
    sigma: i128,
    delta: i128,
    a: i128,
    d: i128,
}

/// Direct arithmetic on `D = hk(h+k)` with `D` points of type `x^{hk} = y^{h+k}`.
fn plain(h: i128, k: i128) -> Plain {
    let (p, q) = (h * k, h + k);
    let deg = p * q;
    let count = deg;
    // number of lattice points strictly below the diagonal of a p × q box
    let delta_p = (p - 1) * (q - 1) / 2;
    let g = (deg - 1) * (deg - 2) / 2 - count * delta_p;
    let sigma = count * (p.min(q) - 1);
    let d = deg / 2;
    Plain { g, sigma, delta: 4 * d + 2 * g - 2 - sigma, a: 3 * d + g - 1, d }
}

fn q(n: i128, m: i128) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(m))
}

#[test]
fn family_invariants_match_plain_arithmetic() {
    for t in 1..=4i128 {
        let fam = FamilyCurve::for_t(t as usize).unwrap();
        let c = fam.branch_curve().unwrap();
        let o = plain(2 * t, 2 * t + 1);
        assert_eq!(c.genus().unwrap(), BigInt::from(o.g));
        assert_eq!(c.sigma(), BigInt::from(o.sigma));
        assert_eq!(dual_degree(&c).unwrap(), BigInt::from(o.delta));
        assert_eq!(dual_degree_class_formula(&c).unwrap(), BigInt::from(o.delta));
        assert_eq!(r_squared(&c).unwrap(), BigInt::from(o.a));
        assert_eq!(hodge_bound(&c).unwrap(), q(4 * o.d * o.d, o.a));
        assert_eq!(chisini_bound(&c).unwrap(), q(4 * o.a, 2 * o.a - o.sigma));
        for n in [4 * t + 1, 4 * t + 2] {
            let s = surface_invariants(&c, n as usize).unwrap();
            assert_eq!(s.k2, BigInt::from(9 * n - 9 * o.d + o.g - 1));
            assert_eq!(s.e, BigInt::from(3 * n + 2 * o.g - 2 - o.sigma));
            assert_eq!(&s.chi * 12, &s.k2 + &s.e);
        }
    }
}

#[test]
fn t1_battery() {
    let c = BranchCurveData::new(30, vec![SingularityClass::new(5, 6, 1, 30).unwrap()]).unwrap();
    assert_eq!(c.genus().unwrap(), 106.into());
    assert_eq!(dual_degree(&c).unwrap(), 150.into());
    assert_eq!(dual_degree_class_formula(&c).unwrap(), 150.into());
    assert_eq!(r_squared(&c).unwrap(), 150.into());
    assert_eq!(hodge_bound(&c).unwrap(), q(6, 1));
    assert_eq!(chisini_bound(&c).unwrap(), q(10, 3));
    assert_eq!(c.sigma(), 120.into());
    let s = surface_invariants(&c, 6).unwrap();
    assert_eq!((s.k2, s.e, s.chi), (24.into(), 108.into(), 11.into()));
    let s = surface_invariants(&c, 5).unwrap();
    assert_eq!((s.k2, s.e, s.chi), (15.into(), 105.into(), 10.into()));
    let r = bmy_report(&c, 6).unwrap();
    assert_eq!(r.uniform_bound, q(15, 2));
    assert!(r.uniform_below_12);
    let f = fiber_product_numbers(&c, 6, 5).unwrap();
    assert_eq!(
        [f.r_dot_c, f.r2, f.c1_squared, f.c2_squared, f.e2, f.e_dot_r],
        [120, 180, 330, 480, 30, 60].map(BigInt::from)
    );
}

#[test]
fn genus_override_is_reported() {
    let mut c = BranchCurveData::new(30, vec![SingularityClass::new(5, 6, 1, 30).unwrap()]).unwrap();
    c.genus = Some(102.into());
    let r = chisini_core::invariants::invariant_report(&c, &[6]).unwrap();
    assert_eq!(r.genus, 102.into());
    assert_eq!(r.computed_genus, 106.into());
    assert!(r.genus_warning.is_some());
}
