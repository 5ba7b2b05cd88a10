//! Root continuation for the fibers of `F_{h,k,a,b}`.
//!
//! Over `(x, y)` the fiber is the zero set of
//! `h z^{h+k} - (h+k) x^a z^h + k y^{bh}`, which has a double root exactly
//! when `x^{a(h+k)} = y^{bhk}`. On the line `y = 1` the branch points are the
//! `a(h+k)`-th roots of unity; each standard loop goes from the base point
//! `1 - ε` along the circle `|x| = 1 - ε` to the branch point's angle, around
//! the circle of radius `ε` centered at it, and back. Tracking the roots
//! along a loop gives its monodromy permutation.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact;
use crate::graphs::{check_polygon_axioms, MonodromyGraph};
use crate::monodromy::{verify_gmn, verify_generic, MonodromyAssignment, PresentationSpec};
use crate::symgroup::Permutation;

type C = Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericConfig {
    /// Distance of the base point from 1 and radius of the small circles.
    pub eps: f64,
    /// Largest accepted relative residual `|P(z)| / Σ |c_i| |z|^i`.
    pub tol: f64,
    /// Tracking fails when two roots come closer than this.
    pub collision: f64,
    /// Aberth iteration cap per solve.
    pub max_iterations: usize,
    /// Initial number of steps per path segment.
    pub initial_steps: usize,
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            eps: 0.1,
            tol: 1e-12,
            collision: 1e-9,
            max_iterations: 500,
            initial_steps: 32,
        }
    }
}

impl NumericConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0 && self.eps < 0.5) {
            return Err(Error::Unsupported(format!("eps = {} outside (0, 0.5)", self.eps)));
        }
        if !(self.tol > 0.0 && self.tol < 1e-3) {
            return Err(Error::Unsupported(format!("tol = {} outside (0, 1e-3)", self.tol)));
        }
        if !(self.collision > 0.0) || self.max_iterations == 0 || self.initial_steps == 0 {
            return Err(Error::Unsupported("bad tracking thresholds".into()));
        }
        Ok(())
    }
}

/// Fiber of `F_{h,k,a,b}` over a point `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiberPolynomial {
    pub h: usize,
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub x: C,
    pub y: C,
}

impl FiberPolynomial {
    pub fn new(h: usize, k: usize, x: C, y: C) -> Result<Self> {
        check_hk(h, k)?;
        Ok(Self { h, k, a: 1, b: 1, x, y })
    }

    pub fn with_base_change(self, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Unsupported("base change exponents must be positive".into()));
        }
        Ok(Self { a, b, ..self })
    }

    /// Coefficients in ascending degree.
    pub fn coefficients(&self) -> Vec<C> {
        let (h, k) = (self.h, self.k);
        let mut c = vec![C::zero(); h + k + 1];
        c[h + k] += C::from(h as f64);
        c[h] -= C::from((h + k) as f64) * self.x.powu(self.a as u32);
        c[0] += C::from(k as f64) * self.y.powu((self.b * h) as u32);
        c
    }
}

fn check_hk(h: usize, k: usize) -> Result<()> {
    if h == 0 || k == 0 || h.gcd(&k) != 1 || h + k < 3 {
        return Err(Error::Unsupported(format!(
            "(h, k) = ({h}, {k}) needs coprime positive entries with h + k >= 3"
        )));
    }
    Ok(())
}

fn horner(coeffs: &[C], z: C) -> (C, C) {
    let mut p = C::zero();
    let mut dp = C::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `|P(z)| / Σ |c_i| |z|^i`.
pub fn relative_residual(coeffs: &[C], z: C) -> f64 {
    let (p, _) = horner(coeffs, z);
    let r = z.norm();
    let scale = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm());
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// Refines `roots` in place with Aberth–Ehrlich iterations and returns the
/// largest relative residual.
fn aberth(coeffs: &[C], roots: &mut [C], cfg: &NumericConfig) -> Result<f64> {
    let n = roots.len();
    for _ in 0..cfg.max_iterations {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(coeffs, roots[i]);
            if p == C::zero() {
                continue;
            }
            let ratio = p / dp;
            let mut s = C::zero();
            for j in 0..n {
                if j != i {
                    s += (roots[i] - roots[j]).inv();
                }
            }
            let w = ratio / (C::one() - ratio * s);
            if !w.is_finite() {
                continue;
            }
            roots[i] -= w;
            max_step = max_step.max(w.norm() / roots[i].norm().max(1.0));
        }
        if max_step < 1e-15 {
            break;
        }
    }
    // Newton polish
    for z in roots.iter_mut() {
        for _ in 0..2 {
            let (p, dp) = horner(coeffs, *z);
            let step = p / dp;
            if step.is_finite() && relative_residual(coeffs, *z - step) < relative_residual(coeffs, *z) {
                *z -= step;
            }
        }
    }
    let worst = roots
        .iter()
        .map(|&z| relative_residual(coeffs, z))
        .fold(0.0, f64::max);
    if !(worst <= cfg.tol) || roots.iter().any(|z| !z.is_finite()) {
        return Err(Error::Numeric(format!(
            "root solver stopped at relative residual {worst:e} (tolerance {:e})",
            cfg.tol
        )));
    }
    Ok(worst)
}

/// All roots of the polynomial with ascending coefficients `coeffs`.
pub fn polynomial_roots(coeffs: &[C], cfg: &NumericConfig) -> Result<Vec<C>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    if n == 0 || lead == C::zero() {
        return Err(Error::Unsupported("polynomial must have positive degree".into()));
    }
    let radius = (0..n)
        .map(|i| (coeffs[i] / lead).norm().powf(1.0 / (n - i) as f64))
        .fold(0.0, f64::max)
        .max(1e-3);
    let mut roots: Vec<C> = (0..n)
        .map(|j| C::from_polar(radius, 2.0 * PI * j as f64 / n as f64 + 0.4))
        .collect();
    aberth(coeffs, &mut roots, cfg)?;
    Ok(roots)
}

/// Roots sorted by argument in `[0, 2π)`, then by modulus.
pub fn fiber_roots(p: &FiberPolynomial, cfg: &NumericConfig) -> Result<Vec<C>> {
    let mut roots = polynomial_roots(&p.coefficients(), cfg)?;
    sort_by_argument(&mut roots);
    Ok(roots)
}

fn sort_by_argument(roots: &mut [C]) {
    let key = |z: &C| {
        let a = z.arg();
        if a < -1e-12 {
            a + 2.0 * PI
        } else {
            a.max(0.0)
        }
    };
    roots.sort_by(|u, v| key(u).total_cmp(&key(v)).then(u.norm().total_cmp(&v.norm())));
}

fn min_separation(roots: &[C]) -> f64 {
    let mut m = f64::INFINITY;
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            m = m.min((roots[i] - roots[j]).norm());
        }
    }
    m
}

/// Matches each old root to a new one. Every match must be the nearest new
/// root and at most half the distance to the second nearest; the matching
/// must be a bijection. Returns the new roots reordered to follow the old
/// ones, or `None` when the match is ambiguous.
fn match_roots(old: &[C], new: &[C]) -> Option<Vec<C>> {
    let n = old.len();
    let mut used = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for &z in old {
        let mut best = (f64::INFINITY, usize::MAX);
        let mut second = f64::INFINITY;
        for (j, &w) in new.iter().enumerate() {
            let dist = (z - w).norm();
            if dist < best.0 {
                second = best.0;
                best = (dist, j);
            } else if dist < second {
                second = dist;
            }
        }
        if best.1 == usize::MAX || used[best.1] || (n > 1 && best.0 * 2.0 > second) {
            return None;
        }
        used[best.1] = true;
        out.push(new[best.1]);
    }
    Some(out)
}

/// A standard generator of `π₁` of the line `y = 1` minus the branch points.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrackedLoop {
    /// Base point `1 - ε`.
    pub base: f64,
    /// Index `r` of the encircled branch point `exp(2πi r / count)`.
    pub branch_index: usize,
    pub branch_count: usize,
    /// Radius of the small circle.
    pub radius: f64,
}

impl TrackedLoop {
    pub fn branch_point(&self) -> C {
        C::from_polar(1.0, self.angle())
    }

    fn angle(&self) -> f64 {
        2.0 * PI * self.branch_index as f64 / self.branch_count as f64
    }

    /// The loop as closed-form segments `t ∈ [0, 1] ↦ x`.
    fn segments(&self) -> Vec<Box<dyn Fn(f64) -> C + Send + Sync>> {
        let (rb, theta, r) = (self.base, self.angle(), self.radius);
        let center = self.branch_point();
        let mut segs: Vec<Box<dyn Fn(f64) -> C + Send + Sync>> = Vec::new();
        if theta > 0.0 {
            segs.push(Box::new(move |t| C::from_polar(rb, theta * t)));
        }
        // start on the side facing the origin, go once counterclockwise
        let start = theta + PI;
        segs.push(Box::new(move |t| center + C::from_polar(r, start + 2.0 * PI * t)));
        if theta > 0.0 {
            segs.push(Box::new(move |t| C::from_polar(rb, theta * (1.0 - t))));
        }
        segs
    }
}

/// The `a(h+k)` standard loops on the line `y = 1`, ordered by angle.
pub fn standard_loops(h: usize, k: usize, a: usize, cfg: &NumericConfig) -> Vec<TrackedLoop> {
    let count = a * (h + k);
    (0..count)
        .map(|r| TrackedLoop {
            base: 1.0 - cfg.eps,
            branch_index: r,
            branch_count: count,
            radius: cfg.eps,
        })
        .collect()
}

/// Diagnostics of one tracked loop.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LoopTrace {
    pub branch_index: usize,
    pub permutation: Permutation,
    pub steps: usize,
    #[serde(with = "exact::float")]
    pub max_residual: f64,
    /// Largest accepted `(max root movement) / (min root separation)`.
    #[serde(with = "exact::float")]
    pub max_displacement_ratio: f64,
    #[serde(with = "exact::float")]
    pub min_separation: f64,
}

fn track_loop(
    poly: &FiberPolynomial,
    lp: &TrackedLoop,
    base_roots: &[C],
    cfg: &NumericConfig,
) -> Result<LoopTrace> {
    let mut roots = base_roots.to_vec();
    let mut steps = 0usize;
    let mut max_residual = 0.0f64;
    let mut max_ratio = 0.0f64;
    let mut min_sep_seen = f64::INFINITY;
    for seg in lp.segments() {
        let mut t = 0.0f64;
        let mut dt = 1.0 / cfg.initial_steps as f64;
        while t < 1.0 {
            let sep = min_separation(&roots);
            min_sep_seen = min_sep_seen.min(sep);
            if sep < cfg.collision {
                return Err(Error::Numeric(format!(
                    "roots within {sep:e} of each other on loop {}",
                    lp.branch_index
                )));
            }
            let step = dt.min(1.0 - t);
            let x = seg(t + step);
            let p = FiberPolynomial { x, ..*poly };
            let mut next = roots.clone();
            let accepted = aberth(&p.coefficients(), &mut next, cfg).ok().and_then(|res| {
                let matched = match_roots(&roots, &next)?;
                let disp = roots
                    .iter()
                    .zip(&matched)
                    .map(|(u, v)| (u - v).norm())
                    .fold(0.0, f64::max);
                (disp <= sep / 3.0).then_some((matched, res, disp / sep))
            });
            match accepted {
                Some((matched, res, ratio)) => {
                    roots = matched;
                    t += step;
                    steps += 1;
                    max_residual = max_residual.max(res);
                    max_ratio = max_ratio.max(ratio);
                    dt = (dt * 1.5).min(0.25);
                }
                None => {
                    dt /= 2.0;
                    if dt < 1e-12 {
                        return Err(Error::Numeric(format!(
                            "step size underflow on loop {} at t = {t}",
                            lp.branch_index
                        )));
                    }
                }
            }
        }
    }
    // read the permutation off the returned roots
    let back = match_roots(&roots, base_roots).ok_or_else(|| {
        Error::Numeric(format!("ambiguous return matching on loop {}", lp.branch_index))
    })?;
    let images: Vec<usize> = back
        .iter()
        .map(|w| base_roots.iter().position(|z| z == w).unwrap() + 1)
        .collect();
    let permutation = Permutation::from_images(&images)
        .map_err(|e| Error::Numeric(format!("return map is not a bijection: {e}")))?;
    Ok(LoopTrace {
        branch_index: lp.branch_index,
        permutation,
        steps,
        max_residual,
        max_displacement_ratio: max_ratio,
        min_separation: min_sep_seen,
    })
}

/// Base fiber (sorted by argument) and one trace per loop, in loop order.
pub fn track_monodromy(
    h: usize,
    k: usize,
    a: usize,
    b: usize,
    loops: &[TrackedLoop],
    cfg: &NumericConfig,
) -> Result<(Vec<C>, Vec<LoopTrace>)> {
    cfg.validate()?;
    let base = loops
        .first()
        .map(|l| l.base)
        .ok_or_else(|| Error::Unsupported("no loops".into()))?;
    let poly = FiberPolynomial::new(h, k, C::from(base), C::one())?.with_base_change(a, b)?;
    let base_roots = fiber_roots(&poly, cfg)?;
    if min_separation(&base_roots) < cfg.collision {
        return Err(Error::Numeric("base fiber has a repeated root".into()));
    }
    let traces = loops
        .par_iter()
        .map(|lp| track_loop(&poly, lp, &base_roots, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok((base_roots, traces))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonMatch {
    pub d: usize,
    pub valence: usize,
    /// An increment the graph satisfies the polygon axioms for, if any.
    pub j: Option<usize>,
}

pub const NUMERIC_CHECKS_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericCertificate {
    pub kind: String,
    pub checks_version: u32,
    pub h: usize,
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub config: NumericConfig,
    pub transpositions: Vec<Permutation>,
    pub polygon: PolygonMatch,
    pub presentation: PresentationSpec,
    pub checks: std::collections::BTreeMap<String, bool>,
    #[serde(with = "exact::float")]
    pub max_residual: f64,
    #[serde(with = "exact::float")]
    pub max_displacement_ratio: f64,
    pub steps: usize,
}

impl NumericCertificate {
    pub const KIND: &'static str = "numeric-monodromy";

    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

/// Tracks the standard loops of `F_{h,k,a,b}` and checks that the result is
/// the polygon with `d = h + k` vertices, valence `a` and increment `±h`.
pub fn numeric_vs_polygon(
    h: usize,
    k: usize,
    a: usize,
    b: usize,
    cfg: &NumericConfig,
) -> Result<NumericCertificate> {
    check_hk(h, k)?;
    let loops = standard_loops(h, k, a, cfg);
    let (_, traces) = track_monodromy(h, k, a, b, &loops, cfg)?;
    let d = h + k;
    let taus: Vec<Permutation> = traces.iter().map(|t| t.permutation.clone()).collect();
    let all_transpositions = taus.iter().all(Permutation::is_transposition);
    let j = if all_transpositions {
        let g = MonodromyGraph::from_transpositions(&taus)?;
        [h, d - h].into_iter().find(|&j| check_polygon_axioms(&g, j))
    } else {
        None
    };
    let assignment = MonodromyAssignment::new(d, taus.clone())?;
    let presentation = PresentationSpec::new(a * d, b * h * k)?.with_projective_exponent((b * h * k) as u64);
    let max_residual = traces.iter().map(|t| t.max_residual).fold(0.0, f64::max);
    let mut checks = std::collections::BTreeMap::new();
    checks.insert("every_loop_transposition".to_string(), all_transpositions);
    checks.insert("polygon_increment_h".to_string(), j.is_some());
    checks.insert("generic".to_string(), verify_generic(&assignment));
    checks.insert("gmn".to_string(), verify_gmn(&assignment, &presentation));
    checks.insert(
        "product_order_divides_bhk".to_string(),
        (b * h * k) as u64 % assignment.product().order() == 0,
    );
    checks.insert("residual_within_tol".to_string(), max_residual <= cfg.tol);
    Ok(NumericCertificate {
        kind: NumericCertificate::KIND.to_string(),
        checks_version: NUMERIC_CHECKS_VERSION,
        h,
        k,
        a,
        b,
        config: *cfg,
        transpositions: taus,
        polygon: PolygonMatch { d, valence: a, j },
        presentation,
        checks,
        max_residual,
        max_displacement_ratio: traces.iter().map(|t| t.max_displacement_ratio).fold(0.0, f64::max),
        steps: traces.iter().map(|t| t.steps).sum(),
    })
}

/// Exact coefficients of `P(z) = (hz + k)^{h+k} - (h+k)^{h+k} z^h`, ascending.
pub fn double_root_polynomial(h: usize, k: usize) -> Vec<BigInt> {
    let n = h + k;
    let (hb, kb) = (BigInt::from(h), BigInt::from(k));
    let mut c = vec![BigInt::zero(); n + 1];
    let mut binom = BigInt::one();
    for i in 0..=n {
        c[i] = &binom * hb.pow(i as u32) * kb.pow((n - i) as u32);
        binom = binom * (n - i) / (i + 1);
    }
    c[h] -= BigInt::from(n).pow(n as u32);
    c
}

/// `P^{(r)}(1)` for ascending integer coefficients.
fn derivative_at_one(c: &[BigInt], r: usize) -> BigInt {
    c.iter()
        .enumerate()
        .filter(|(i, _)| *i >= r)
        .map(|(i, ci)| {
            let falling: BigInt = (0..r).map(|t| BigInt::from(i - t)).product();
            ci * falling
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DoubleRootReport {
    pub h: usize,
    pub k: usize,
    #[serde(with = "exact::int")]
    pub p_at_1: BigInt,
    #[serde(with = "exact::int")]
    pub dp_at_1: BigInt,
    #[serde(with = "exact::int")]
    pub d2p_at_1: BigInt,
    /// `h k (h+k)^{h+k-1}`.
    #[serde(with = "exact::int")]
    pub d2p_closed_form: BigInt,
    /// Number of roots of `P / (z-1)^2`, all simple and different from 1.
    pub other_simple_roots: usize,
    #[serde(with = "exact::float")]
    pub min_separation: f64,
    pub ok: bool,
}

/// `z = 1` is a double root of `P` and every other root is simple.
pub fn verify_double_root_structure(h: usize, k: usize) -> Result<DoubleRootReport> {
    check_hk(h, k)?;
    let c = double_root_polynomial(h, k);
    let n = h + k;
    let p1 = derivative_at_one(&c, 0);
    let dp1 = derivative_at_one(&c, 1);
    let d2p1 = derivative_at_one(&c, 2);
    let closed = BigInt::from(h * k) * BigInt::from(n).pow((n - 1) as u32);
    // exact division by (z - 1)^2
    let mut q = c.clone();
    for _ in 0..2 {
        let deg = q.len() - 1;
        let mut out = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for i in (1..=deg).rev() {
            carry = &carry + &q[i];
            out[i - 1] = carry.clone();
        }
        let remainder = &carry + &q[0];
        if !remainder.is_zero() {
            return Ok(DoubleRootReport {
                h,
                k,
                p_at_1: p1,
                dp_at_1: dp1,
                d2p_at_1: d2p1,
                d2p_closed_form: closed,
                other_simple_roots: 0,
                min_separation: 0.0,
                ok: false,
            });
        }
        q = out;
    }
    let q_at_1 = derivative_at_one(&q, 0);
    let (other, sep) = if q.len() > 1 {
        let scale = q.iter().map(|v| v.abs()).max().unwrap();
        let coeffs: Vec<C> = q
            .iter()
            .map(|v| C::from(big_ratio(v, &scale)))
            .collect();
        let cfg = NumericConfig { tol: 1e-10, ..NumericConfig::default() };
        let roots = polynomial_roots(&coeffs, &cfg)?;
        (roots.len(), min_separation(&roots))
    } else {
        (0, f64::INFINITY)
    };
    let ok = p1.is_zero() && dp1.is_zero() && d2p1 == closed && !d2p1.is_zero() && !q_at_1.is_zero() && sep > 1e-6;
    Ok(DoubleRootReport {
        h,
        k,
        p_at_1: p1,
        dp_at_1: dp1,
        d2p_at_1: d2p1,
        d2p_closed_form: closed,
        other_simple_roots: other,
        min_separation: if sep.is_finite() { sep } else { 0.0 },
        ok,
    })
}

fn big_ratio(v: &BigInt, scale: &BigInt) -> f64 {
    let r = num_rational::BigRational::new(v.clone(), scale.clone());
    r.to_f64().unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_real(mut v: Vec<C>) -> Vec<f64> {
        let mut r: Vec<f64> = v.drain(..).map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        r
    }

    #[test]
    fn fiber_root_examples() {
        let cfg = NumericConfig { tol: 1e-9, ..Default::default() };
        let p = FiberPolynomial::new(1, 2, C::one(), C::one()).unwrap();
        let r = sorted_real(fiber_roots(&p, &cfg).unwrap());
        assert!((r[0] + 2.0).abs() < 1e-9);
        assert!((r[1] - 1.0).abs() < 1e-6 && (r[2] - 1.0).abs() < 1e-6);

        let p = FiberPolynomial::new(2, 3, C::zero(), C::one()).unwrap();
        let roots = fiber_roots(&p, &NumericConfig::default()).unwrap();
        let radius = 1.5f64.powf(0.2);
        for z in &roots {
            assert!((z.norm() - radius).abs() < 1e-12);
        }
        let mut args: Vec<f64> = roots.iter().map(|z| z.arg().rem_euclid(2.0 * PI)).collect();
        args.sort_by(f64::total_cmp);
        for w in args.windows(2) {
            assert!((w[1] - w[0] - 2.0 * PI / 5.0).abs() < 1e-9);
        }
        assert!(FiberPolynomial::new(1, 1, C::zero(), C::one()).is_err());
        assert!(FiberPolynomial::new(2, 4, C::zero(), C::one()).is_err());
    }

    #[test]
    fn double_root_examples() {
        let r = verify_double_root_structure(1, 2).unwrap();
        assert_eq!(r.d2p_at_1, BigInt::from(18));
        assert!(r.ok);
        let r = verify_double_root_structure(2, 3).unwrap();
        assert!(r.p_at_1.is_zero());
        assert_eq!(double_root_polynomial(2, 3)[5], BigInt::from(32));
        let r = verify_double_root_structure(1, 5).unwrap();
        assert_eq!(r.other_simple_roots, 4);
        assert!(r.ok);
    }

    #[test]
    fn polygon_for_small_pairs() {
        let cfg = NumericConfig::default();
        for (h, k) in [(1, 2), (2, 1), (2, 3), (3, 4)] {
            let cert = numeric_vs_polygon(h, k, 1, 1, &cfg).unwrap();
            assert!(cert.passed(), "{h},{k}: {:?}", cert.checks);
        }
    }
}
