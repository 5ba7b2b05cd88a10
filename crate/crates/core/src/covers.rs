//! Global covers over the curves `ḡ_{h+k}(x)^{hk} = f̄_{hk}(y)^{h+k}`, where
//! `ḡ_l(x) = (x - 1)(x - 2)⋯(x - l)` in the affine chart `w = 1`.
//!
//! Every singular point `(i, j)` of such a curve is locally `x^{hk} = y^{h+k}`,
//! and a generic cover over it is determined by its local polygon there.
//! [`counterexample_pair`] builds the two non-equivalent covers of degrees
//! `4t + 2` and `4t + 1` over the curve with `(h, k) = (2t, 2t + 1)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64 as C;
use num_integer::Integer;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{extend_from_first_block, satisfies_curve, CurveShape};
use crate::error::{Error, Result};
use crate::exact;
use crate::graphs::{
    check_polygon_axioms, cover_class_to_parameters, enumerate_generic_covers, graph_to_transpositions, CoverClass,
    CoverParameters, Orientation, PolygonSpec,
};
use crate::invariants::{
    bmy_report, fiber_product_numbers, hodge_bound, invariant_report, surface_invariants, BmyReport,
    BranchCurveData, FiberProductNumbers, InvariantReport, SingularityClass, SurfaceInvariants,
};
use crate::monodromy::{
    pullback_building_data, verify_generic, verify_gmn, verify_projective, AssignmentCertificate,
    MonodromyAssignment, PresentationSpec,
};
use crate::numeric::{numeric_vs_polygon, polynomial_roots, NumericCertificate, NumericConfig};

/// How a cover of degree `N` looks near a singular point `x^{sn} = y^{sm}`
/// when its ramification is smooth there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalSplitting {
    #[serde(rename = "N")]
    pub cover_degree: usize,
    pub singularity: (usize, usize, usize),
    /// Local degrees of the connected components that ramify.
    pub components: Vec<usize>,
    /// Components on which the cover is an isomorphism.
    pub isomorphism_sheets: usize,
}

pub fn local_splitting(cover_degree: usize, n: usize, m: usize, s: usize) -> Result<LocalSplitting> {
    if n == 0 || m == 0 || s == 0 {
        return Err(Error::Splitting {
            clause: "positive exponents",
            detail: format!("({n}, {m}, {s})"),
        });
    }
    if n >= 2 && m != n + 1 {
        return Err(Error::Splitting {
            clause: "m = n + 1 when n >= 2",
            detail: format!("n = {n}, m = {m}"),
        });
    }
    let needed = s * (n + 1);
    if cover_degree < needed {
        return Err(Error::Splitting {
            clause: "N >= s(n + 1)",
            detail: format!("N = {cover_degree} < {needed}"),
        });
    }
    Ok(LocalSplitting {
        cover_degree,
        singularity: (n, m, s),
        components: vec![n + 1; s],
        isomorphism_sheets: cover_degree - needed,
    })
}

/// Smoothness of `S_{h,k,a,b} = {hz^k + kw^h = (h+k)x^a, zw = y^b}` and of its
/// ramification divisor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Smoothness {
    pub surface_smooth: bool,
    pub ramification_smooth: bool,
    /// Local equation `u^p = v^q` of the ramification curve at the origin,
    /// when the surface is smooth there and the curve is not.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ramification_singularity: Option<(usize, usize)>,
    pub ordinary_cusp: bool,
    /// Rank of the Jacobian of the two defining equations at the origin,
    /// the only point where `S` can be singular.
    pub jacobian_rank_at_origin: usize,
}

type Monomial = (i64, [usize; 4]);

/// Rank of the Jacobian of the polynomials (in `x, y, z, w`) at the origin.
fn jacobian_rank_at_origin(polys: &[Vec<Monomial>]) -> usize {
    let rows: Vec<[i64; 4]> = polys
        .iter()
        .map(|p| {
            let mut row = [0i64; 4];
            for &(c, e) in p {
                for (v, slot) in row.iter_mut().enumerate() {
                    // ∂/∂v of c·x^e survives at 0 iff e = unit vector in v
                    if e[v] == 1 && e.iter().enumerate().all(|(u, &f)| u == v || f == 0) {
                        *slot += c;
                    }
                }
            }
            row
        })
        .collect();
    let nonzero = |r: &[i64; 4]| r.iter().any(|&x| x != 0);
    match rows.as_slice() {
        [a, b] => {
            let minor = (0..4).any(|i| (0..4).any(|j| a[i] * b[j] - a[j] * b[i] != 0));
            if minor {
                2
            } else if nonzero(a) || nonzero(b) {
                1
            } else {
                0
            }
        }
        _ => rows.iter().filter(|r| nonzero(r)).count().min(1),
    }
}

/// Away from the origin `S` is always smooth: there `(z, w) ≠ 0`, so the
/// gradient of `zw - y^b` is nonzero, and it is never parallel to the other
/// gradient on `S`. So smoothness is decided by the Jacobian at the origin.
///
/// The ramification curve is `S ∩ {z^k = w^h}`. When `a = 1` the surface has
/// coordinates `(z, w)` and the curve is `z^k = w^h`; when `h = 1` (and
/// `b = 1`) it has coordinates `(x, z)` and the curve is `z^k = x^a`.
pub fn smoothness(h: usize, k: usize, a: usize, b: usize) -> Result<Smoothness> {
    if h == 0 || k == 0 || a == 0 || b == 0 {
        return Err(Error::Unsupported("parameters must be positive".into()));
    }
    if h.gcd(&k) != 1 {
        return Err(Error::Unsupported(format!("gcd({h}, {k}) != 1")));
    }
    let (h, k) = (h.min(k), h.max(k));
    let (hi, ki) = (h as i64, k as i64);
    let g1 = vec![
        (hi, [0, 0, k, 0]),
        (ki, [0, 0, 0, h]),
        (-(hi + ki), [a, 0, 0, 0]),
    ];
    let g2 = vec![(1, [0, 0, 1, 1]), (-1, [0, b, 0, 0])];
    let rank = jacobian_rank_at_origin(&[g1, g2]);
    let surface_smooth = rank == 2;
    let local = if !surface_smooth {
        None
    } else if a == 1 {
        Some((k, h))
    } else {
        Some((k, a))
    };
    let curve_smooth = local.map_or(false, |(p, q)| p.min(q) == 1);
    let ramification_singularity = local.filter(|_| !curve_smooth);
    Ok(Smoothness {
        surface_smooth,
        ramification_smooth: surface_smooth && curve_smooth,
        ordinary_cusp: matches!(ramification_singularity, Some((3, 2)) | Some((2, 3))),
        ramification_singularity,
        jacobian_rank_at_origin: rank,
    })
}

/// The curve `ḡ_{h+k}(x)^{hk} = f̄_{hk}(y)^{h+k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCurve {
    pub h: usize,
    pub k: usize,
}

impl FamilyCurve {
    pub fn new(h: usize, k: usize) -> Result<Self> {
        if h == 0 || k == 0 || h.gcd(&k) != 1 {
            return Err(Error::Unsupported(format!("need coprime positive (h, k), got ({h}, {k})")));
        }
        Ok(Self { h, k })
    }

    pub fn for_t(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::Unsupported("t must be at least 1".into()));
        }
        Self::new(2 * t, 2 * t + 1)
    }

    /// Exponent of `ḡ_{h+k}(x)`, the local `x` exponent.
    pub fn x_exponent(&self) -> usize {
        self.h * self.k
    }

    /// Exponent of `f̄_{hk}(y)`.
    pub fn y_exponent(&self) -> usize {
        self.h + self.k
    }

    pub fn degree(&self) -> usize {
        self.x_exponent() * self.y_exponent()
    }

    pub fn singular_points(&self) -> usize {
        self.degree()
    }

    pub fn branch_curve(&self) -> Result<BranchCurveData> {
        BranchCurveData::new(
            self.degree(),
            vec![SingularityClass::new(self.x_exponent(), self.y_exponent(), 1, self.singular_points())?],
        )
    }

    /// The shape `g(x) = f(y)` read with the `y`-roots in blocks of size
    /// `edges`; the other orientation swaps `x` and `y`.
    pub fn shape_with_blocks(&self, edges: usize) -> Result<CurveShape> {
        let (p, q) = (self.x_exponent(), self.y_exponent());
        if edges == q {
            CurveShape::new(vec![p; q], vec![q; p])
        } else if edges == p {
            CurveShape::new(vec![q; p], vec![p; q])
        } else {
            Err(Error::InvalidShape(format!("no block size {edges} in the family curve")))
        }
    }

    pub fn equation(&self) -> String {
        format!(
            "[{}]^{} = [{}]^{}",
            product_text('x', self.y_exponent()),
            self.x_exponent(),
            product_text('y', self.x_exponent()),
            self.y_exponent()
        )
    }
}

/// `(v - w)(v - 2w)⋯(v - lw)`, abbreviated past four factors.
fn product_text(v: char, l: usize) -> String {
    let factor = |i: usize| if i == 1 { format!("({v} - w)") } else { format!("({v} - {i}w)") };
    if l <= 4 {
        (1..=l).map(factor).collect()
    } else {
        format!("{}{}⋯{}", factor(1), factor(2), factor(l))
    }
}

/// A generic cover given by its branch curve and local building data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverDescriptor {
    pub name: String,
    pub family: FamilyCurve,
    pub curve: BranchCurveData,
    #[serde(rename = "N")]
    pub degree: usize,
    pub class: CoverClass,
    pub parameters: CoverParameters,
    pub assignment: MonodromyAssignment,
    pub provenance: Vec<String>,
}

pub const COVER_CHECKS_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub kind: String,
    pub checks_version: u32,
    pub descriptor: CoverDescriptor,
    pub presentation: PresentationSpec,
    pub smoothness: Smoothness,
    /// Singular points at which the ramification curve has an ordinary cusp.
    pub cusps: usize,
    /// The splitting, or the clause that rules out smooth ramification.
    pub local_splitting: std::result::Result<LocalSplitting, String>,
    pub surface: SurfaceInvariants,
    pub checks: BTreeMap<String, bool>,
}

impl CoverCertificate {
    pub const KIND: &'static str = "cover";

    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

/// The cover over `family` whose local class is `class`.
pub fn cover_descriptor(name: &str, family: FamilyCurve, class: CoverClass) -> Result<CoverDescriptor> {
    let curve = family.branch_curve()?;
    let parameters = cover_class_to_parameters(&class)?;
    let graph = class.graph();
    let assignment = MonodromyAssignment::new(class.degree(), graph_to_transpositions(&graph))?;
    let p = class.polygon;
    Ok(CoverDescriptor {
        name: name.to_string(),
        family,
        degree: class.degree(),
        provenance: vec![
            format!("curve {}", family.equation()),
            format!("local class {class}"),
            format!("polygon d={} valence={} increment={}", p.d, p.valence, p.increment),
            format!("explicit local model {parameters}"),
        ],
        curve,
        class,
        parameters,
        assignment,
    })
}

pub fn certify_cover(desc: &CoverDescriptor) -> Result<CoverCertificate> {
    let class = &desc.class;
    let CoverParameters { h, k, a, b } = desc.parameters;
    let presentation = PresentationSpec::for_class(class).with_projective_exponent((b * h * k) as u64);
    let assignment = &desc.assignment;
    let family = desc.family;
    let curve_exponents = (family.x_exponent(), family.y_exponent());

    let mut checks = BTreeMap::new();
    checks.insert("gmn".to_string(), verify_gmn(assignment, &presentation));
    checks.insert("generic".to_string(), verify_generic(assignment));
    checks.insert("projective".to_string(), verify_projective(assignment, &presentation)?);
    checks.insert(
        "polygon_axioms".to_string(),
        assignment.graph().is_some_and(|g| check_polygon_axioms(&g, class.polygon.increment)),
    );
    checks.insert(
        "degree".to_string(),
        desc.degree == class.degree() && desc.degree == assignment.degree() && desc.degree == h + k,
    );
    checks.insert("curve_exponents".to_string(), class.curve_exponents() == curve_exponents);
    let branch = desc.parameters.branch_exponents();
    let oriented = match class.orientation {
        Orientation::Direct => branch,
        Orientation::Dual => (branch.1, branch.0),
    };
    checks.insert("parameters_branch_curve".to_string(), oriented == curve_exponents);
    checks.insert(
        "classified".to_string(),
        enumerate_generic_covers(curve_exponents.0, curve_exponents.1)?.classes.contains(class),
    );
    // all exponent ratios are 1, so every local graph is the global one
    checks.insert(
        "local_global".to_string(),
        pullback_building_data(class, 1, 1) == *class && desc.curve == family.branch_curve()?,
    );
    let shape = family.shape_with_blocks(class.generator_count())?;
    let full = extend_from_first_block(&shape, assignment.taus())?;
    checks.insert("braid_relators".to_string(), satisfies_curve(&shape, &full, false));
    let hodge = hodge_bound(&desc.curve)?;
    checks.insert(
        "hodge_bound".to_string(),
        num_rational::BigRational::from_integer(desc.degree.into()) <= hodge,
    );

    let smooth = smoothness(h, k, a, b)?;
    let surface = surface_invariants(&desc.curve, desc.degree)?;
    checks.insert("noether".to_string(), surface.noether && surface.hurwitz_slice);
    let sing = desc.curve.singularities[0];
    let local_splitting = local_splitting(desc.degree, sing.n, sing.m, sing.s).map_err(|e| e.to_string());
    let cusps = if smooth.ordinary_cusp { sing.count } else { 0 };
    Ok(CoverCertificate {
        kind: CoverCertificate::KIND.to_string(),
        checks_version: COVER_CHECKS_VERSION,
        descriptor: desc.clone(),
        presentation,
        smoothness: smooth,
        cusps,
        local_splitting,
        surface,
        checks,
    })
}

pub const PAIR_CHECKS_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCertificate {
    pub kind: String,
    pub checks_version: u32,
    pub t: usize,
    pub curve: BranchCurveData,
    pub equation: String,
    /// The cover of degree `4t + 2`, then the one of degree `4t + 1`.
    pub covers: [CoverCertificate; 2],
    pub invariants: InvariantReport,
    pub bmy: [BmyReport; 2],
    pub fiber_product: FiberProductNumbers,
    pub checks: BTreeMap<String, bool>,
}

impl PairCertificate {
    pub const KIND: &'static str = "counterexample-pair";

    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok) && self.covers.iter().all(CoverCertificate::passed)
    }
}

/// The two local classes over the family curve for `t`.
pub fn counterexample_classes(t: usize) -> Result<(CoverClass, CoverClass)> {
    let fam = FamilyCurve::for_t(t)?;
    let (p, q) = (fam.x_exponent(), fam.y_exponent());
    let prime = CoverClass {
        orientation: Orientation::Direct,
        polygon: PolygonSpec::new(4 * t + 2, t, 1)?,
        compatible_exponent: q,
    };
    let double_prime = CoverClass {
        orientation: Orientation::Dual,
        polygon: PolygonSpec::new(4 * t + 1, 1, 2 * t)?,
        compatible_exponent: p,
    };
    Ok((prime, double_prime))
}

pub fn counterexample_pair(t: usize) -> Result<PairCertificate> {
    let fam = FamilyCurve::for_t(t)?;
    let (c1, c2) = counterexample_classes(t)?;
    let (d1, d2) = rayon::join(
        || cover_descriptor("pi_prime", fam, c1).and_then(|d| certify_cover(&d)),
        || cover_descriptor("pi_double_prime", fam, c2).and_then(|d| certify_cover(&d)),
    );
    let (d1, d2) = (d1?, d2?);
    let curve = fam.branch_curve()?;
    let n1 = d1.descriptor.degree;
    let n2 = d2.descriptor.degree;
    let invariants = invariant_report(&curve, &[n1, n2])?;

    let mut checks = BTreeMap::new();
    checks.insert(
        "same_curve".to_string(),
        serde_json::to_string(&d1.descriptor.curve)? == serde_json::to_string(&d2.descriptor.curve)?,
    );
    checks.insert("different_degrees".to_string(), n1 != n2);
    checks.insert("degrees_4t_plus_2_and_4t_plus_1".to_string(), (n1, n2) == (4 * t + 2, 4 * t + 1));
    checks.insert("curve_degree_hk_h_plus_k".to_string(), curve.degree == fam.degree());
    let classified = enumerate_generic_covers(fam.x_exponent(), fam.y_exponent())?.classes;
    let both_classified = classified.contains(&c1) && classified.contains(&c2);
    checks.insert(
        "classification".to_string(),
        if t == 1 { classified == vec![c1, c2] } else { both_classified },
    );
    checks.insert("sigma_divisible_by_3".to_string(), invariants.sigma_divisible_by_3);
    checks.insert("dual_degree_class_formula".to_string(), invariants.dual_degree == invariants.dual_degree_class_formula);
    let flags_ok = d1.smoothness.surface_smooth
        && d2.smoothness.surface_smooth
        && d1.smoothness.ramification_smooth == (t == 1)
        && !d2.smoothness.ramification_smooth;
    checks.insert("ramification_flags".to_string(), flags_ok);
    if t == 1 {
        checks.insert("cusps_30".to_string(), d2.cusps == 30);
        checks.insert(
            "hodge_bound_attained".to_string(),
            invariants.hodge_bound == num_rational::BigRational::from_integer(n1.into()),
        );
    }
    Ok(PairCertificate {
        kind: PairCertificate::KIND.to_string(),
        checks_version: PAIR_CHECKS_VERSION,
        t,
        equation: fam.equation(),
        bmy: [bmy_report(&curve, n1)?, bmy_report(&curve, n2)?],
        fiber_product: fiber_product_numbers(&curve, n1, n2)?,
        curve,
        covers: [d1, d2],
        invariants,
        checks,
    })
}

/// Coprime pairs `(h, k)`, `(h', k')` with `h + k = h'k'` and `hk = h' + k'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumProductCertificate {
    pub kind: String,
    pub checks_version: u32,
    pub bound: usize,
    /// Unordered solutions, each as `[(h, k), (h', k')]` with `h + k = h'k'`.
    pub solutions: Vec<[(usize, usize); 2]>,
    pub candidates_checked: u64,
    pub solution_with_equal_sum_and_product: bool,
    pub argument: String,
    pub checks: BTreeMap<String, bool>,
}

impl SumProductCertificate {
    pub const KIND: &'static str = "unique-pair";

    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

const SUM_PRODUCT_ARGUMENT: &str = "If h, k, h', k' are all at least 2 then hk >= h + k = h'k' >= h' + k' = hk, \
so h = k = 2, which is not coprime. So one entry is 1, say h' = 1; then k' = hk - 1 = h + k, \
i.e. (h - 1)(k - 1) = 2, giving {h, k} = {2, 3} and (h', k') = (1, 5).";

/// Exhaustive over `1 ≤ h ≤ k ≤ bound` and `1 ≤ h' ≤ k' ≤ bound`.
pub fn unique_sum_product_pair(bound: usize) -> Result<SumProductCertificate> {
    if bound < 1 {
        return Err(Error::Unsupported("bound must be positive".into()));
    }
    let mut found = Vec::new();
    let mut checked = 0u64;
    let mut equal = false;
    for h in 1..=bound {
        for k in h..=bound {
            if h.gcd(&k) != 1 {
                continue;
            }
            if h + k == h * k {
                equal = true;
            }
            for h2 in 1..=bound {
                checked += 1;
                let Some(k2) = (h * k).checked_sub(h2) else { continue };
                if k2 < h2 || k2 > bound || h2.gcd(&k2) != 1 {
                    continue;
                }
                if h + k == h2 * k2 && (h, k) != (h2, k2) {
                    found.push([(h, k), (h2, k2)]);
                }
            }
        }
    }
    // each unordered solution once, larger pair first
    let mut solutions: Vec<[(usize, usize); 2]> = found
        .into_iter()
        .map(|[p, q]| if p >= q { [p, q] } else { [q, p] })
        .collect();
    solutions.sort();
    solutions.dedup();
    let mut checks = BTreeMap::new();
    checks.insert(
        "only_2_3_and_1_5".to_string(),
        solutions == vec![[(2, 3), (1, 5)]],
    );
    checks.insert("no_equal_sum_and_product".to_string(), !equal);
    Ok(SumProductCertificate {
        kind: SumProductCertificate::KIND.to_string(),
        checks_version: 1,
        bound,
        solutions,
        candidates_checked: checked,
        solution_with_equal_sum_and_product: equal,
        argument: SUM_PRODUCT_ARGUMENT.to_string(),
        checks,
    })
}

/// The surface `z^{k+1} - (k+1) z f̄_k(x) + k ḡ_{k+1}(y) = 0` and a numeric
/// check of its branch curve `ḡ_{k+1}(y)^k = f̄_k(x)^{k+1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExplicitEquation {
    pub kind: String,
    pub checks_version: u32,
    pub k: usize,
    pub seed: u64,
    pub equation: String,
    pub branch_curve: String,
    pub samples: usize,
    /// Largest `|disc_z| / scale` over points of the branch curve.
    #[serde(with = "exact::float")]
    pub max_relative_discriminant_on_curve: f64,
    /// Smallest `|disc_z| / scale` over random points off the curve.
    #[serde(with = "exact::float")]
    pub min_relative_discriminant_off_curve: f64,
    /// Smallest root separation in the off-curve fibers, relative to the
    /// largest root.
    #[serde(with = "exact::float")]
    pub min_relative_separation_off_curve: f64,
    pub checks: BTreeMap<String, bool>,
}

impl ExplicitEquation {
    pub const KIND: &'static str = "explicit-equation";

    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

/// `∏_{i=1}^{l} (v - i)`.
fn bar_poly(v: C, l: usize) -> C {
    (1..=l).fold(C::new(1.0, 0.0), |acc, i| acc * (v - i as f64))
}

/// Ascending coefficients of `∏_{i=1}^{l} (v - i)`.
fn bar_coefficients(l: usize) -> Vec<C> {
    let mut c = vec![C::new(1.0, 0.0)];
    for i in 1..=l {
        let mut next = vec![C::zero(); c.len() + 1];
        for (e, &a) in c.iter().enumerate() {
            next[e + 1] += a;
            next[e] -= a * i as f64;
        }
        c = next;
    }
    c
}

/// Discriminant of `z^n + p z + q` divided by the sum of the moduli of its
/// two terms: `n^n q^{n-1} + (-1)^{n-1} (n-1)^{n-1} p^n`.
fn relative_trinomial_discriminant(n: usize, p: C, q: C) -> f64 {
    let nf = n as f64;
    let t1 = q.powu(n as u32 - 1) * nf.powi(n as i32);
    let sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
    let t2 = p.powu(n as u32) * (nf - 1.0).powi(n as i32 - 1) * sign;
    let scale = t1.norm() + t2.norm();
    if scale == 0.0 {
        0.0
    } else {
        (t1 + t2).norm() / scale
    }
}

pub const SPOT_CHECK_SAMPLES: usize = 20;

pub fn explicit_equation(k: usize, seed: u64) -> Result<ExplicitEquation> {
    if k < 2 {
        return Err(Error::Unsupported("k must be at least 2".into()));
    }
    let cfg = NumericConfig::default();
    let mut rng = StdRng::seed_from_u64(seed);
    let random_point = |rng: &mut StdRng, spread: f64| {
        C::new(rng.gen_range(-spread..spread), rng.gen_range(-spread..spread))
    };
    let n = k + 1;
    let mut on_curve = 0.0f64;
    let mut off_disc = f64::INFINITY;
    let mut off_sep = f64::INFINITY;
    for _ in 0..SPOT_CHECK_SAMPLES {
        // on the curve: pick y, a root z of z^{k+1} = ḡ(y), then x with f̄(x) = z^k
        let y = random_point(&mut rng, k as f64 + 1.0);
        let gy = bar_poly(y, k + 1);
        let z = C::from_polar(gy.norm().powf(1.0 / n as f64), gy.arg() / n as f64);
        let target = z.powu(k as u32);
        let mut coeffs = bar_coefficients(k);
        coeffs[0] -= target;
        let xs = polynomial_roots(&coeffs, &cfg)?;
        let x = xs[rng.gen_range(0..xs.len())];
        let fx = bar_poly(x, k);
        on_curve = on_curve.max(relative_trinomial_discriminant(n, -fx * n as f64, gy * k as f64));

        let (x, y) = (random_point(&mut rng, k as f64 + 1.0), random_point(&mut rng, k as f64 + 1.0));
        let (fx, gy) = (bar_poly(x, k), bar_poly(y, k + 1));
        let (p, q) = (-fx * n as f64, gy * k as f64);
        off_disc = off_disc.min(relative_trinomial_discriminant(n, p, q));
        let mut fiber = vec![C::zero(); n + 1];
        fiber[n] = C::new(1.0, 0.0);
        fiber[1] = p;
        fiber[0] = q;
        let roots = polynomial_roots(&fiber, &cfg)?;
        let scale = roots.iter().map(|r| r.norm()).fold(0.0, f64::max).max(1.0);
        for i in 0..n {
            for j in (i + 1)..n {
                off_sep = off_sep.min((roots[i] - roots[j]).norm() / scale);
            }
        }
    }
    let mut checks = BTreeMap::new();
    checks.insert("discriminant_vanishes_on_curve".to_string(), on_curve <= 1e-8);
    checks.insert("distinct_roots_off_curve".to_string(), off_sep > 1e-6 && off_disc > 1e-8);
    let mut equation = String::new();
    write!(
        equation,
        "z^{n} - {n} z {} + {k} {} = 0",
        product_text('x', k),
        product_text('y', k + 1)
    )
    .expect("string write");
    if checks.values().any(|&ok| !ok) {
        return Err(Error::CheckFailed(format!(
            "spot check failed for k = {k}: on-curve {on_curve:e}, off-curve separation {off_sep:e}"
        )));
    }
    Ok(ExplicitEquation {
        kind: ExplicitEquation::KIND.to_string(),
        checks_version: 1,
        k,
        seed,
        equation,
        branch_curve: format!("[{}]^{k} = [{}]^{n}", product_text('y', k + 1), product_text('x', k)),
        samples: SPOT_CHECK_SAMPLES,
        max_relative_discriminant_on_curve: on_curve,
        min_relative_discriminant_off_curve: off_disc,
        min_relative_separation_off_curve: off_sep,
        checks,
    })
}

/// Result of re-verifying a certificate file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recheck {
    pub kind: String,
    /// Every check passes after recomputation.
    pub passed: bool,
    /// The recomputed certificate equals the stored one.
    pub matches_stored: bool,
}

/// Recomputes a certificate of any kind from its inputs.
pub fn recheck_certificate(value: &serde_json::Value) -> Result<Recheck> {
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::Inconsistent("certificate has no \"kind\"".into()))?
        .to_string();
    let same = |fresh: serde_json::Value| fresh == *value;
    let (passed, matches_stored) = match kind.as_str() {
        AssignmentCertificate::KIND => {
            let c: AssignmentCertificate = serde_json::from_value(value.clone())?;
            let fresh = c.recheck()?;
            (fresh.passed(), same(serde_json::to_value(&fresh)?))
        }
        NumericCertificate::KIND => {
            let c: NumericCertificate = serde_json::from_value(value.clone())?;
            let fresh = numeric_vs_polygon(c.h, c.k, c.a, c.b, &c.config)?;
            (fresh.passed(), same(serde_json::to_value(&fresh)?))
        }
        CoverCertificate::KIND => {
            let c: CoverCertificate = serde_json::from_value(value.clone())?;
            let fresh = certify_cover(&c.descriptor)?;
            (fresh.passed(), same(serde_json::to_value(&fresh)?))
        }
        PairCertificate::KIND => {
            let c: PairCertificate = serde_json::from_value(value.clone())?;
            let fresh = counterexample_pair(c.t)?;
            // the stored covers must pass on their own data too
            let mut stored_ok = true;
            for cover in &c.covers {
                stored_ok &= certify_cover(&cover.descriptor)?.passed();
            }
            (fresh.passed() && stored_ok, same(serde_json::to_value(&fresh)?))
        }
        SumProductCertificate::KIND => {
            let c: SumProductCertificate = serde_json::from_value(value.clone())?;
            let fresh = unique_sum_product_pair(c.bound)?;
            (fresh.passed(), same(serde_json::to_value(&fresh)?))
        }
        ExplicitEquation::KIND => {
            let c: ExplicitEquation = serde_json::from_value(value.clone())?;
            let fresh = explicit_equation(c.k, c.seed)?;
            (fresh.passed(), same(serde_json::to_value(&fresh)?))
        }
        other => return Err(Error::Unsupported(format!("unknown certificate kind {other:?}"))),
    };
    Ok(Recheck { kind, passed, matches_stored })
}

/// Covers of degree at least 3 over `x^n = y^m` that are smooth with smooth
/// ramification, by classification and the smoothness criterion.
pub fn smooth_ramification_covers(n: usize, m: usize) -> Result<Vec<CoverClass>> {
    let mut out = Vec::new();
    for c in enumerate_generic_covers(n, m)?.classes {
        let p = cover_class_to_parameters(&c)?;
        if smoothness(p.h, p.k, p.a, p.b)?.ramification_smooth {
            out.push(c);
        }
    }
    Ok(out)
}

/// Runs [`smooth_ramification_covers`] on every coprime pair up to `bound`.
pub fn smooth_ramification_scan(bound: usize) -> Result<Vec<((usize, usize), Vec<CoverClass>)>> {
    let pairs: Vec<(usize, usize)> = (1..=bound)
        .flat_map(|n| (1..=bound).map(move |m| (n, m)))
        .filter(|&(n, m)| n.gcd(&m) == 1)
        .collect();
    pairs
        .into_par_iter()
        .map(|(n, m)| Ok(((n, m), smooth_ramification_covers(n, m)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting_examples() {
        let s = local_splitting(6, 5, 6, 1).unwrap();
        assert_eq!((s.components.clone(), s.isomorphism_sheets), (vec![6], 0));
        let s = local_splitting(7, 1, 2, 1).unwrap();
        assert_eq!((s.components.clone(), s.isomorphism_sheets), (vec![2], 5));
        assert!(matches!(
            local_splitting(6, 2, 5, 1),
            Err(Error::Splitting { clause: "m = n + 1 when n >= 2", .. })
        ));
        assert!(matches!(local_splitting(5, 5, 6, 1), Err(Error::Splitting { clause: "N >= s(n + 1)", .. })));
    }

    #[test]
    fn smoothness_examples() {
        let s = smoothness(1, 5, 1, 1).unwrap();
        assert!(s.surface_smooth && s.ramification_smooth);
        let s = smoothness(2, 3, 1, 1).unwrap();
        assert!(s.surface_smooth && !s.ramification_smooth && s.ordinary_cusp);
        assert_eq!(s.ramification_singularity, Some((3, 2)));
        let s = smoothness(1, 2, 2, 1).unwrap();
        assert!(s.surface_smooth && !s.ramification_smooth);
        let s = smoothness(2, 3, 1, 2).unwrap();
        assert!(!s.surface_smooth && !s.ramification_smooth);
        assert_eq!(s.jacobian_rank_at_origin, 1);
    }

    #[test]
    fn jacobian_agrees_with_closed_form() {
        for h in 1..6 {
            for k in (h + 1)..8 {
                if h.gcd(&k) != 1 {
                    continue;
                }
                for a in 1..4 {
                    for b in 1..4 {
                        let s = smoothness(h, k, a, b).unwrap();
                        assert_eq!(s.surface_smooth, (a == 1 && b == 1) || (h == 1 && b == 1));
                        assert_eq!(s.ramification_smooth, h == 1 && a == 1 && b == 1);
                    }
                }
            }
        }
    }

    #[test]
    fn family_shapes() {
        let f = FamilyCurve::for_t(1).unwrap();
        assert_eq!((f.x_exponent(), f.y_exponent(), f.degree()), (6, 5, 30));
        let s = f.shape_with_blocks(5).unwrap();
        assert_eq!((s.x_exponents.len(), s.y_exponents[0], s.strand_count()), (5, 5, 30));
        assert_eq!(f.shape_with_blocks(6).unwrap().reduced_presentation(), (6, 5));
        assert!(f.shape_with_blocks(4).is_err());
        assert_eq!(FamilyCurve::for_t(2).unwrap().degree(), 180);
        assert!(FamilyCurve::new(2, 4).is_err());
    }

    #[test]
    fn explicit_equation_text() {
        let e = explicit_equation(2, 7).unwrap();
        assert_eq!(e.equation, "z^3 - 3 z (x - w)(x - 2w) + 2 (y - w)(y - 2w)(y - 3w) = 0");
        assert!(e.passed());
        assert_eq!(explicit_equation(2, 7).unwrap(), e);
        assert!(explicit_equation(1, 0).is_err());
    }

    #[test]
    fn trinomial_discriminant_of_double_root() {
        // (z - 1)^2 (z + 2) = z^3 - 3z + 2
        assert!(relative_trinomial_discriminant(3, C::new(-3.0, 0.0), C::new(2.0, 0.0)) < 1e-15);
        assert!(relative_trinomial_discriminant(3, C::new(-1.0, 0.0), C::new(2.0, 0.0)) > 0.1);
    }
}
