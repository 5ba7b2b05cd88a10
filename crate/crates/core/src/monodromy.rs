//! Permutation checks against the presentations
//!
//! ```text
//! G_{m,n} = < g_1, ..., g_m | g_k = T g_{k+n} T^-1  (all k, indices mod m) >,
//!           T = g_1 g_2 ... g_n
//! ```
//!
//! of the fundamental group of `C^2 \ {x^m = y^n}`, and their projective
//! quotients by `(g_1 ... g_m)^e`. Indices inside `T` also wrap mod `m`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{graph_to_transpositions, CoverClass, MonodromyGraph, PolygonSpec};
use crate::symgroup::{self, Permutation};

/// One permutation of the fiber per standard generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AssignmentJson", into = "AssignmentJson")]
pub struct MonodromyAssignment {
    d: usize,
    taus: Vec<Permutation>,
}

#[derive(Serialize, Deserialize)]
struct AssignmentJson {
    d: usize,
    taus: Vec<Permutation>,
}

impl TryFrom<AssignmentJson> for MonodromyAssignment {
    type Error = Error;
    fn try_from(j: AssignmentJson) -> Result<Self> {
        MonodromyAssignment::new(j.d, j.taus)
    }
}

impl From<MonodromyAssignment> for AssignmentJson {
    fn from(a: MonodromyAssignment) -> Self {
        AssignmentJson { d: a.d, taus: a.taus }
    }
}

impl MonodromyAssignment {
    pub fn new(d: usize, taus: Vec<Permutation>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidAssignment(format!("degree {d} < 2")));
        }
        if taus.is_empty() {
            return Err(Error::InvalidAssignment("no generators".into()));
        }
        if let Some(t) = taus.iter().find(|t| t.degree() != d) {
            return Err(Error::DegreeMismatch { left: d, right: t.degree() });
        }
        Ok(Self { d, taus })
    }

    pub fn from_graph(g: &MonodromyGraph) -> Result<Self> {
        Self::new(g.vertex_count(), graph_to_transpositions(g))
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn generator_count(&self) -> usize {
        self.taus.len()
    }

    pub fn taus(&self) -> &[Permutation] {
        &self.taus
    }

    /// `τ_1 τ_2 ⋯ τ_m`, the monodromy around all branch points of a generic line.
    pub fn product(&self) -> Permutation {
        symgroup::product(&self.taus).expect("non-empty")
    }

    /// Simultaneous conjugation `τ ↦ σ⁻¹τσ`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Self {
        Self {
            d: self.d,
            taus: self.taus.iter().map(|t| t.conjugate_by(sigma)).collect(),
        }
    }

    /// The monodromy graph, if every generator maps to a transposition.
    pub fn graph(&self) -> Option<MonodromyGraph> {
        MonodromyGraph::from_transpositions(&self.taus).ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PresentationSpec {
    /// Number of generators.
    pub m: usize,
    /// Relation stride.
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projective_exponent: Option<u64>,
}

impl PresentationSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Unsupported(format!("G_{{{m},{n}}} needs m, n >= 1")));
        }
        Ok(Self { m, n, projective_exponent: None })
    }

    pub fn with_projective_exponent(self, e: u64) -> Self {
        Self { projective_exponent: Some(e), ..self }
    }

    /// The presentation a class's polygon transpositions satisfy: generators
    /// are the polygon's edges and the stride is the compatible exponent.
    pub fn for_class(c: &CoverClass) -> Self {
        Self {
            m: c.generator_count(),
            n: c.compatible_exponent,
            projective_exponent: None,
        }
    }
}

/// `T = τ_1 ⋯ τ_stride`, indices taken cyclically.
fn cyclic_prefix(taus: &[Permutation], stride: usize) -> Permutation {
    let m = taus.len();
    let mut t = Permutation::identity(taus[0].degree());
    for i in 0..stride {
        t = t.then(&taus[i % m]);
    }
    t
}

fn relations_hold(taus: &[Permutation], stride: usize) -> bool {
    let m = taus.len();
    let t = cyclic_prefix(taus, stride);
    let t_inv = t.inverse();
    (0..m).all(|k| taus[k] == t.then(&taus[(k + stride) % m]).then(&t_inv))
}

pub fn verify_gmn(a: &MonodromyAssignment, p: &PresentationSpec) -> bool {
    a.generator_count() == p.m && p.n >= 1 && relations_hold(&a.taus, p.n)
}

/// Every generator is a transposition and together they act transitively.
pub fn verify_generic(a: &MonodromyAssignment) -> bool {
    a.taus.iter().all(Permutation::is_transposition) && symgroup::transitive(&a.taus, a.d)
}

pub fn verify_projective(a: &MonodromyAssignment, p: &PresentationSpec) -> Result<bool> {
    let e = p
        .projective_exponent
        .ok_or_else(|| Error::Unsupported("presentation has no projective exponent".into()))?;
    Ok(a.generator_count() == p.m && e % a.product().order() == 0)
}

/// Pulls a class back along `(x, y) ↦ (x^a, y^b)`.
pub fn pullback_building_data(c: &CoverClass, a_factor: usize, b_factor: usize) -> CoverClass {
    assert!(a_factor >= 1 && b_factor >= 1, "pullback factors must be positive");
    CoverClass {
        orientation: c.orientation,
        polygon: PolygonSpec {
            valence: c.polygon.valence * a_factor,
            ..c.polygon
        },
        compatible_exponent: c.compatible_exponent * b_factor,
    }
}

/// All generic assignments of degree `d` satisfying `G_{p.m, p.n}`, one
/// canonical graph per conjugacy class, sorted.
///
/// Brute force: `τ_1` is fixed to `(1 2)` (every transposition is conjugate to
/// it) and the rest range over all transpositions. When the stride is smaller
/// than the generator count, `τ_{k+n} = T⁻¹ τ_k T` determines every generator
/// from the first `n`, so only those are enumerated.
pub fn search_generic(p: &PresentationSpec, d: usize) -> Result<Vec<MonodromyGraph>> {
    if d < 2 {
        return Err(Error::Unsupported("degree must be at least 2".into()));
    }
    let (gens, stride) = (p.m, p.n);
    if gens == 0 || stride == 0 {
        return Err(Error::Unsupported("empty presentation".into()));
    }
    let transpositions: Vec<Permutation> = (1..=d)
        .flat_map(|a| ((a + 1)..=d).map(move |b| Permutation::transposition(d, a, b).unwrap()))
        .collect();
    let free = stride.min(gens);
    let first = transpositions[0].clone();

    let leaves = |head: Option<usize>| -> BTreeSet<Vec<(usize, usize)>> {
        let mut found = BTreeSet::new();
        let rest = free.saturating_sub(if head.is_some() { 2 } else { 1 });
        let mut idx = vec![0usize; rest];
        let mut taus = Vec::with_capacity(gens);
        loop {
            taus.clear();
            taus.push(first.clone());
            if let Some(h) = head {
                taus.push(transpositions[h].clone());
            }
            taus.extend(idx.iter().map(|&i| transpositions[i].clone()));
            if stride < gens {
                let t = cyclic_prefix(&taus, stride);
                let t_inv = t.inverse();
                for k in 0..gens - stride {
                    let next = t_inv.then(&taus[k]).then(&t);
                    taus.push(next);
                }
            }
            if relations_hold(&taus, stride) && symgroup::transitive(&taus, d) {
                let g = MonodromyGraph::from_transpositions(&taus).expect("transpositions");
                found.insert(g.canonical_form());
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == rest {
                    return found;
                }
                idx[pos] += 1;
                if idx[pos] < transpositions.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    };

    let all: BTreeSet<Vec<(usize, usize)>> = if free >= 2 {
        (0..transpositions.len())
            .into_par_iter()
            .map(|h| leaves(Some(h)))
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    } else {
        leaves(None)
    };
    all.into_iter()
        .map(|edges| MonodromyGraph::new(d, edges))
        .collect()
}

pub const ASSIGNMENT_CHECKS_VERSION: u32 = 1;

/// Self-describing result of checking one assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentCertificate {
    pub kind: String,
    pub checks_version: u32,
    pub d: usize,
    pub taus: Vec<Permutation>,
    pub presentation: PresentationSpec,
    pub checks: BTreeMap<String, bool>,
}

impl AssignmentCertificate {
    pub const KIND: &'static str = "assignment";

    pub fn build(a: &MonodromyAssignment, p: &PresentationSpec) -> Self {
        let mut checks = BTreeMap::new();
        checks.insert("gmn".to_string(), verify_gmn(a, p));
        checks.insert("generic".to_string(), verify_generic(a));
        if let Ok(ok) = verify_projective(a, p) {
            checks.insert("projective".to_string(), ok);
        }
        Self {
            kind: Self::KIND.to_string(),
            checks_version: ASSIGNMENT_CHECKS_VERSION,
            d: a.degree(),
            taus: a.taus.clone(),
            presentation: *p,
            checks,
        }
    }

    pub fn assignment(&self) -> Result<MonodromyAssignment> {
        MonodromyAssignment::new(self.d, self.taus.clone())
    }

    /// Recomputes every check from the stored data.
    pub fn recheck(&self) -> Result<Self> {
        Ok(Self::build(&self.assignment()?, &self.presentation))
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}
