//! Monodromy graphs and the polygon classification.
//!
//! A monodromy graph has `d` vertices (the sheets over the base point) and
//! one labeled edge per standard generator, joining the two sheets that the
//! generator's transposition exchanges. Vertex labels carry no meaning, edge
//! labels do: two graphs are identified up to vertex relabeling only.
//!
//! Polygons are the cyclic pattern: for valence 1 the edge labeled `1 + r·j`
//! joins vertices `r + 1` and `r + 2` (mod `d`), and valence `a` repeats the
//! pattern every `d` labels.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symgroup::Permutation;

/// `d` vertices, edges labeled `1..=n` by position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonodromyGraph {
    #[serde(rename = "d")]
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl MonodromyGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("no vertices".into()));
        }
        for &(a, b) in &edges {
            if a == b || a == 0 || b == 0 || a > vertex_count || b > vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a},{b}}} is not a pair of distinct vertices in 1..{vertex_count}"
                )));
            }
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edge with 1-based label `label`.
    pub fn edge(&self, label: usize) -> (usize, usize) {
        self.edges[label - 1]
    }

    /// Reads a graph off a list of transpositions, one edge per entry.
    pub fn from_transpositions(taus: &[Permutation]) -> Result<Self> {
        let d = taus
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::InvalidGraph("empty transposition list".into()))?;
        let edges = taus
            .iter()
            .map(|t| {
                if t.degree() != d {
                    return Err(Error::DegreeMismatch { left: d, right: t.degree() });
                }
                t.transposed_pair()
                    .ok_or_else(|| Error::InvalidGraph(format!("{t} is not a transposition")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(d, edges)
    }

    /// Canonical edge sequence under vertex relabeling.
    ///
    /// Vertices are numbered by first appearance while scanning edges in label
    /// order; when an edge introduces two new vertices both orders are tried.
    /// The result is the lexicographically minimal relabeled edge sequence
    /// (each edge written with its smaller endpoint first), so two graphs are
    /// isomorphic exactly when their canonical forms agree.
    pub fn canonical_form(&self) -> Vec<(usize, usize)> {
        let mut best: Option<Vec<(usize, usize)>> = None;
        let mut labels = vec![0usize; self.vertex_count + 1];
        let mut out = Vec::with_capacity(self.edges.len());
        self.canonical_search(0, 1, &mut labels, &mut out, &mut best);
        best.unwrap_or_default()
    }

    fn canonical_search(
        &self,
        pos: usize,
        next: usize,
        labels: &mut [usize],
        out: &mut Vec<(usize, usize)>,
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if let Some(b) = best.as_ref() {
            if out.as_slice() > &b[..out.len()] {
                return;
            }
        }
        if pos == self.edges.len() {
            if best.as_ref().map_or(true, |b| out.as_slice() < b.as_slice()) {
                *best = Some(out.clone());
            }
            return;
        }
        let (a, b) = self.edges[pos];
        let orders: &[(usize, usize)] = match (labels[a], labels[b]) {
            (0, 0) => &[(a, b), (b, a)],
            _ => &[(a, b)],
        };
        for &(first, second) in orders {
            let mut n = next;
            let mut assigned = Vec::new();
            for v in [first, second] {
                if labels[v] == 0 {
                    labels[v] = n;
                    n += 1;
                    assigned.push(v);
                }
            }
            let (x, y) = (labels[a], labels[b]);
            out.push((x.min(y), x.max(y)));
            self.canonical_search(pos + 1, n, labels, out, best);
            out.pop();
            for v in assigned {
                labels[v] = 0;
            }
        }
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges.len() == other.edges.len()
            && self.canonical_form() == other.canonical_form()
    }
}

/// `d` vertices, valence `a`, increment `j` with `gcd(j, d) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolygonSpec {
    pub d: usize,
    pub valence: usize,
    pub increment: usize,
}

impl PolygonSpec {
    pub fn new(d: usize, valence: usize, increment: usize) -> Result<Self> {
        let spec = Self { d, valence, increment };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 2 {
            return Err(Error::InvalidPolygon(format!("d = {} < 2", self.d)));
        }
        if self.valence == 0 {
            return Err(Error::InvalidPolygon("valence must be positive".into()));
        }
        if self.increment == 0 || self.increment >= self.d {
            return Err(Error::InvalidPolygon(format!(
                "increment {} outside 1..{}",
                self.increment, self.d
            )));
        }
        if self.increment.gcd(&self.d) != 1 {
            return Err(Error::InvalidPolygon(format!(
                "gcd(j, d) = gcd({}, {}) != 1",
                self.increment, self.d
            )));
        }
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.valence * self.d
    }
}

pub fn build_polygon(spec: PolygonSpec) -> Result<MonodromyGraph> {
    spec.validate()?;
    let d = spec.d;
    let j_inv = mod_inverse(spec.increment, d).expect("gcd checked");
    let edges = (0..spec.edge_count())
        .map(|l0| {
            // label l0 + 1 = 1 + r·j (mod d)
            let r = (l0 % d) * j_inv % d;
            (r + 1, (r + 1) % d + 1)
        })
        .collect();
    MonodromyGraph::new(d, edges)
}

fn mod_inverse(a: usize, m: usize) -> Option<usize> {
    let e = (a as i64).extended_gcd(&(m as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i64) as usize)
}

/// Checks the three adjacency conditions defining a polygon with increment
/// `j`: edges `s`, `t` share two vertices iff `s ≡ t (mod d)`, one vertex iff
/// `s - t ≡ ±j (mod d)`, and none otherwise. Malformed input gives `false`.
pub fn check_polygon_axioms(g: &MonodromyGraph, j: usize) -> bool {
    let d = g.vertex_count;
    let n = g.edge_count();
    if d < 2 || n == 0 || n % d != 0 || j == 0 || j >= d || j.gcd(&d) != 1 {
        return false;
    }
    for s in 0..n {
        for t in (s + 1)..n {
            let (a, b) = g.edges[s];
            let (c, e) = g.edges[t];
            let shared = [a, b].iter().filter(|&&v| v == c || v == e).count();
            let diff = (t - s) % d;
            let expected = if diff == 0 {
                2
            } else if diff == j || diff == d - j {
                1
            } else {
                0
            };
            if shared != expected {
                return false;
            }
        }
    }
    true
}

/// The `i`-th output is the transposition of the endpoints of edge `i`.
pub fn graph_to_transpositions(g: &MonodromyGraph) -> Vec<Permutation> {
    g.edges
        .iter()
        .map(|&(a, b)| Permutation::transposition(g.vertex_count, a, b).expect("valid edge"))
        .collect()
}

/// Which exponent the polygon's edges are indexed by.
///
/// For a curve `x^n = y^m`, a `Direct` class has a polygon with `n` edges
/// (one per loop around the `n` points of `x^n = 1` in the line `y = 1`) and
/// compatible exponent `m`; a `Dual` class has a polygon with `m` edges and
/// compatible exponent `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Direct,
    Dual,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Direct => Orientation::Dual,
            Orientation::Dual => Orientation::Direct,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Direct => write!(f, "direct"),
            Orientation::Dual => write!(f, "dual"),
        }
    }
}

/// Building data of a generic cover branched over a single `x^n = y^m`
/// singularity: a polygon plus the exponent it does not index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CoverClassJson", into = "CoverClassJson")]
pub struct CoverClass {
    pub orientation: Orientation,
    pub polygon: PolygonSpec,
    pub compatible_exponent: usize,
}

#[derive(Serialize, Deserialize)]
struct CoverClassJson {
    d: usize,
    valence: usize,
    increment: usize,
    orientation: Orientation,
    m: usize,
}

impl TryFrom<CoverClassJson> for CoverClass {
    type Error = Error;

    fn try_from(j: CoverClassJson) -> Result<Self> {
        Ok(CoverClass {
            orientation: j.orientation,
            polygon: PolygonSpec::new(j.d, j.valence, j.increment)?,
            compatible_exponent: j.m,
        })
    }
}

impl From<CoverClass> for CoverClassJson {
    fn from(c: CoverClass) -> Self {
        CoverClassJson {
            d: c.polygon.d,
            valence: c.polygon.valence,
            increment: c.polygon.increment,
            orientation: c.orientation,
            m: c.compatible_exponent,
        }
    }
}

impl CoverClass {
    pub fn degree(&self) -> usize {
        self.polygon.d
    }

    /// Number of generators the polygon's edges are assigned to.
    pub fn generator_count(&self) -> usize {
        self.polygon.edge_count()
    }

    /// The curve `x^n = y^m` this class lives over, as `(n, m)`.
    pub fn curve_exponents(&self) -> (usize, usize) {
        let edges = self.polygon.edge_count();
        match self.orientation {
            Orientation::Direct => (edges, self.compatible_exponent),
            Orientation::Dual => (self.compatible_exponent, edges),
        }
    }

    /// The admissibility conditions: the polygon has `ad` edges, `j < d/2`
    /// and `j(d - j)` divides the compatible exponent.
    pub fn is_admissible(&self) -> bool {
        let p = self.polygon;
        p.validate().is_ok()
            && p.d >= 3
            && 2 * p.increment < p.d
            && self.compatible_exponent > 0
            && self.compatible_exponent % (p.increment * (p.d - p.increment)) == 0
    }

    pub fn graph(&self) -> MonodromyGraph {
        build_polygon(self.polygon).expect("validated polygon")
    }
}

impl fmt::Display for CoverClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} {} valence={} increment={} m={}",
            self.polygon.d,
            self.orientation,
            self.polygon.valence,
            self.polygon.increment,
            self.compatible_exponent
        )
    }
}

/// All generic covers of degree at least 3 branched over `x^n = y^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub n: usize,
    pub m: usize,
    pub classes: Vec<CoverClass>,
    /// The double cover `z^2 = x^n - y^m` exists for every curve.
    pub double_cover: bool,
}

pub fn enumerate_generic_covers(n: usize, m: usize) -> Result<Classification> {
    if n == 0 || m == 0 {
        return Err(Error::Unsupported("exponents must be positive".into()));
    }
    if n.gcd(&m) != 1 {
        return Err(Error::Unsupported(format!(
            "gcd({n}, {m}) != 1: only irreducible curves are classified"
        )));
    }
    let mut classes = Vec::new();
    for (orientation, indexed, other) in [(Orientation::Direct, n, m), (Orientation::Dual, m, n)] {
        for d in 3..=indexed {
            if indexed % d != 0 {
                continue;
            }
            for j in 1..=(d - 1) / 2 {
                if j.gcd(&d) == 1 && other % (j * (d - j)) == 0 {
                    classes.push(CoverClass {
                        orientation,
                        polygon: PolygonSpec { d, valence: indexed / d, increment: j },
                        compatible_exponent: other,
                    });
                }
            }
        }
    }
    classes.sort_by(|a, b| b.degree().cmp(&a.degree()).then(a.cmp(b)));
    Ok(Classification { n, m, classes, double_cover: true })
}

/// Parameters `(h, k, a, b)` of the explicit cover `F_{h,k,a,b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverParameters {
    pub h: usize,
    pub k: usize,
    pub a: usize,
    pub b: usize,
}

impl CoverParameters {
    /// `F_{h,k,a,b}` is branched over `x^(a(h+k)) = y^(bhk)`.
    pub fn branch_exponents(&self) -> (usize, usize) {
        (self.a * (self.h + self.k), self.b * self.h * self.k)
    }
}

impl fmt::Display for CoverParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{{{},{},{},{}}}", self.h, self.k, self.a, self.b)
    }
}

pub fn cover_class_to_parameters(c: &CoverClass) -> Result<CoverParameters> {
    let PolygonSpec { d, valence, increment: j } = c.polygon;
    c.polygon.validate()?;
    let jk = j * (d - j);
    if c.compatible_exponent == 0 || c.compatible_exponent % jk != 0 {
        return Err(Error::Unsupported(format!(
            "j(d-j) = {jk} does not divide {}",
            c.compatible_exponent
        )));
    }
    Ok(CoverParameters {
        h: j,
        k: d - j,
        a: valence,
        b: c.compatible_exponent / jk,
    })
}

/// Exchanges the roles of `x` and `y`. An involution.
pub fn dualize(c: &CoverClass) -> CoverClass {
    CoverClass {
        orientation: c.orientation.flip(),
        ..*c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(d: usize, a: usize, j: usize) -> MonodromyGraph {
        build_polygon(PolygonSpec::new(d, a, j).unwrap()).unwrap()
    }

    #[test]
    fn build_polygon_examples() {
        assert_eq!(poly(3, 1, 1).edges(), &[(1, 2), (2, 3), (3, 1)]);
        assert_eq!(poly(5, 1, 2).edges(), &[(1, 2), (4, 5), (2, 3), (5, 1), (3, 4)]);
        let g = poly(5, 3, 2);
        assert_eq!(g.edge_count(), 15);
        for l in 1..=15 {
            assert_eq!(g.edge(l), g.edge((l - 1) % 5 + 1));
        }
        assert!(check_polygon_axioms(&g, 2));
    }

    #[test]
    fn build_polygon_rejects_non_coprime() {
        assert!(PolygonSpec::new(6, 1, 2).is_err());
        assert!(build_polygon(PolygonSpec { d: 6, valence: 1, increment: 3 }).is_err());
    }

    #[test]
    fn axioms_examples() {
        let tri = MonodromyGraph::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(check_polygon_axioms(&tri, 1));
        let star = MonodromyGraph::new(4, vec![(1, 2), (1, 3), (1, 4)]).unwrap();
        for j in 0..5 {
            assert!(!check_polygon_axioms(&star, j));
        }
        // a 4-cycle labeled in the wrong order is not a polygon
        let bad = MonodromyGraph::new(4, vec![(1, 2), (3, 4), (2, 3), (4, 1)]).unwrap();
        assert!(!check_polygon_axioms(&bad, 1));
    }

    #[test]
    fn transpositions_of_polygons() {
        let t = |a, b| Permutation::transposition(5, a, b).unwrap();
        assert_eq!(
            graph_to_transpositions(&poly(5, 1, 2)),
            vec![t(1, 2), t(4, 5), t(2, 3), t(5, 1), t(3, 4)]
        );
        let taus = graph_to_transpositions(&poly(5, 3, 2));
        assert_eq!(taus.len(), 15);
        for i in 0..15 {
            assert_eq!(taus[i], taus[i % 5]);
        }
    }

    #[test]
    fn polygons_satisfy_axioms_and_are_connected() {
        for d in 3..=12 {
            for a in 1..=4 {
                for j in 1..d {
                    if j.gcd(&d) != 1 {
                        continue;
                    }
                    let g = poly(d, a, j);
                    assert!(check_polygon_axioms(&g, j), "d={d} a={a} j={j}");
                    assert!(check_polygon_axioms(&g, d - j));
                    let taus = graph_to_transpositions(&g);
                    assert!(crate::symgroup::transitive(&taus, d));
                }
            }
        }
    }

    #[test]
    fn increment_symmetry() {
        for d in 3..=12 {
            for j in 1..d {
                if j.gcd(&d) == 1 {
                    assert!(poly(d, 2, j).is_isomorphic(&poly(d, 2, d - j)));
                }
            }
        }
        // different increments that are not mirror images differ
        assert!(!poly(7, 1, 1).is_isomorphic(&poly(7, 1, 2)));
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = poly(7, 2, 3);
        let sigma = [3usize, 7, 1, 5, 2, 6, 4];
        let relabeled = MonodromyGraph::new(
            7,
            g.edges().iter().map(|&(a, b)| (sigma[a - 1], sigma[b - 1])).collect(),
        )
        .unwrap();
        assert_eq!(g.canonical_form(), relabeled.canonical_form());
        assert_eq!(g.canonical_form()[0], (1, 2));
    }

    #[test]
    fn enumerate_examples() {
        let c = enumerate_generic_covers(6, 5).unwrap();
        assert_eq!(
            c.classes,
            vec![
                CoverClass {
                    orientation: Orientation::Direct,
                    polygon: PolygonSpec { d: 6, valence: 1, increment: 1 },
                    compatible_exponent: 5,
                },
                CoverClass {
                    orientation: Orientation::Dual,
                    polygon: PolygonSpec { d: 5, valence: 1, increment: 2 },
                    compatible_exponent: 6,
                },
            ]
        );
        assert!(c.double_cover);

        let c = enumerate_generic_covers(3, 2).unwrap();
        assert_eq!(c.classes.len(), 1);
        assert_eq!(c.classes[0].polygon, PolygonSpec { d: 3, valence: 1, increment: 1 });
        assert_eq!(c.classes[0].orientation, Orientation::Direct);

        assert!(enumerate_generic_covers(1, 1).unwrap().classes.is_empty());
        assert!(matches!(enumerate_generic_covers(4, 6), Err(Error::Unsupported(_))));
    }

    #[test]
    fn parameters_examples() {
        let c = |d, j, m| CoverClass {
            orientation: Orientation::Direct,
            polygon: PolygonSpec { d, valence: 1, increment: j },
            compatible_exponent: m,
        };
        let p = |h, k, a, b| CoverParameters { h, k, a, b };
        assert_eq!(cover_class_to_parameters(&c(6, 1, 5)).unwrap(), p(1, 5, 1, 1));
        assert_eq!(cover_class_to_parameters(&c(5, 2, 6)).unwrap(), p(2, 3, 1, 1));
        assert_eq!(cover_class_to_parameters(&c(3, 1, 4)).unwrap(), p(1, 2, 1, 2));
        assert!(cover_class_to_parameters(&c(5, 2, 7)).is_err());
        assert_eq!(p(1, 2, 1, 2).branch_exponents(), (3, 4));
    }

    #[test]
    fn dualize_is_involution_and_swaps_enumerations() {
        for n in 1..=30 {
            for m in 1..=30 {
                if n.gcd(&m) != 1 {
                    continue;
                }
                let ab = enumerate_generic_covers(n, m).unwrap().classes;
                for c in &ab {
                    assert_eq!(dualize(&dualize(c)), *c);
                    assert!(c.is_admissible());
                    assert_eq!(c.curve_exponents(), (n, m));
                    assert_eq!(dualize(c).curve_exponents(), (m, n));
                }
                let mut swapped: Vec<_> = ab.iter().map(dualize).collect();
                let mut ba = enumerate_generic_covers(m, n).unwrap().classes;
                swapped.sort();
                ba.sort();
                assert_eq!(swapped, ba);
            }
        }
        let c = enumerate_generic_covers(6, 5).unwrap().classes[1];
        let dc = dualize(&c);
        assert_eq!(dc.orientation, Orientation::Direct);
        assert_eq!(dc.curve_exponents(), (5, 6));
    }

    #[test]
    fn json_shapes() {
        let c = enumerate_generic_covers(6, 5).unwrap().classes[1];
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"d":5,"valence":1,"increment":2,"orientation":"dual","m":6}"#
        );
        let back: CoverClass = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
        assert_eq!(
            serde_json::to_string(&poly(3, 1, 1)).unwrap(),
            r#"{"d":3,"edges":[[1,2],[2,3],[3,1]]}"#
        );
    }
}
