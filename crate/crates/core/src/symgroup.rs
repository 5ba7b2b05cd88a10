//! Permutations of `{1, ..., d}`.
//!
//! Composition is left-to-right: `p.then(&q)` first applies `p`, then `q`,
//! which matches concatenation of loops read as paths. Every relator check
//! downstream depends on this convention.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Images = SmallVec<[u16; 16]>;

/// A permutation of `{1, ..., d}` stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Images,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1 && degree <= u16::MAX as usize);
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 1-based images, e.g. `[2, 1, 3]` for `(1 2)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        if d == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        if d > u16::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {d} too large")));
        }
        let mut seen = vec![false; d];
        let mut out = Images::with_capacity(d);
        for &img in images {
            if img == 0 || img > d || seen[img - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..{d}"
                )));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u16);
        }
        Ok(Self { images: out })
    }

    /// The transposition exchanging the 1-based points `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > degree || b > degree {
            return Err(Error::InvalidPermutation(format!(
                "({a} {b}) is not a transposition in S_{degree}"
            )));
        }
        let mut p = Self::identity(degree);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Builds a permutation from disjoint cycles given with 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut touched = vec![false; degree + 1];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 || a > degree || touched[a] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?}")));
                }
                touched[a] = true;
                images[a - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    /// Image of the 0-based point `i`, 0-based.
    #[inline]
    pub(crate) fn image0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked left-to-right composition; panics on degree mismatch.
    #[inline]
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = Images::from_elem(0, self.degree());
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Self { images }
    }

    /// `other^-1 · self · other` in left-to-right notation, i.e. the map
    /// `x ↦ other(self(other^-1(x)))`.
    pub fn conjugate_by(&self, other: &Self) -> Self {
        other.inverse().then(self).then(other)
    }

    pub fn pow(&self, exponent: u64) -> Self {
        let mut result = Self::identity(self.degree());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        result
    }

    /// Cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths in non-increasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut lengths = Vec::new();
        for start in 0..d {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = self.images[i] as usize;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, len| acc.lcm(&(len as u64)))
    }

    pub fn is_transposition(&self) -> bool {
        let moved = self
            .images
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i != j as usize)
            .count();
        moved == 2 && self.then(self).is_identity()
    }

    /// The two exchanged points (1-based, ascending) of a transposition.
    pub fn transposed_pair(&self) -> Option<(usize, usize)> {
        if !self.is_transposition() {
            return None;
        }
        let mut it = self
            .images
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i != j as usize)
            .map(|(i, _)| i + 1);
        Some((it.next()?, it.next()?))
    }
}

/// Product of a sequence of permutations, left to right. `None` if empty.
pub fn product<'a, I>(perms: I) -> Option<Permutation>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut it = perms.into_iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, p| acc.then(p)))
}

/// True iff the group generated by `perms` acts transitively on `{1..d}`.
///
/// An empty list is transitive only on a single point.
pub fn transitive(perms: &[Permutation], degree: usize) -> bool {
    if degree == 0 || perms.iter().any(|p| p.degree() != degree) {
        return false;
    }
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = degree;
    for p in perms {
        for i in 0..degree {
            let (a, b) = (find(&mut parent, i), find(&mut parent, p.image0(i)));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    components == 1
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in S_{}", self.degree())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_images(&images).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(d: usize, a: usize, b: usize) -> Permutation {
        Permutation::transposition(d, a, b).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(Permutation::identity(3).compose(&t(3, 1, 2)).unwrap(), t(3, 1, 2));
        // 1 -> 2 -> 3, 2 -> 1, 3 -> 2
        let c = t(3, 1, 2).compose(&t(3, 2, 3)).unwrap();
        assert_eq!(c.images(), vec![3, 1, 2]);
        assert_eq!(c, Permutation::from_cycles(3, &[&[1, 3, 2]]).unwrap());
        assert!(t(2, 1, 2).compose(&t(2, 1, 2)).unwrap().is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        let err = t(3, 1, 2).compose(&t(4, 1, 2)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn structure_queries() {
        assert!(t(5, 1, 2).is_transposition());
        assert!(!Permutation::identity(5).is_transposition());
        let p = Permutation::from_cycles(5, &[&[1, 4], &[2, 5, 3]]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(!p.is_transposition());
        assert_eq!(Permutation::identity(4).cycle_type(), vec![1, 1, 1, 1]);
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(p.to_string(), "(1 4)(2 5 3)");
    }

    #[test]
    fn transitivity() {
        assert!(transitive(&[t(3, 1, 2), t(3, 2, 3)], 3));
        assert!(!transitive(&[t(3, 1, 2)], 3));
        assert!(!transitive(&[], 3));
        assert!(transitive(&[], 1));
        // polygon with 5 vertices, valence 1, increment 2
        let edges = [(1, 2), (4, 5), (2, 3), (5, 1), (3, 4)];
        let perms: Vec<_> = edges.iter().map(|&(a, b)| t(5, a, b)).collect();
        assert!(transitive(&perms, 5));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[]).is_err());
        assert!(Permutation::transposition(3, 2, 2).is_err());
    }

    #[test]
    fn json_is_image_array() {
        let p = t(3, 1, 2);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,1,3]");
        let q: Permutation = serde_json::from_str("[2,1,3]").unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Permutation>("[2,2,3]").is_err());
    }

    fn perm_strategy(d: usize) -> impl Strategy<Value = Permutation> {
        Just((0..d).map(|i| i + 1).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    fn triple(max_d: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (1..=max_d).prop_flat_map(|d| (perm_strategy(d), perm_strategy(d), perm_strategy(d)))
    }

    proptest! {
        #[test]
        fn group_axioms((p, q, r) in triple(20)) {
            let d = p.degree();
            prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
            prop_assert_eq!(Permutation::identity(d).then(&p), p.clone());
            prop_assert_eq!(p.then(&Permutation::identity(d)), p.clone());
            prop_assert!(p.then(&p.inverse()).is_identity());
            prop_assert!(p.inverse().then(&p).is_identity());
        }

        #[test]
        fn order_is_least_power((p, _, _) in triple(10)) {
            let mut acc = p.clone();
            let mut k = 1u64;
            while !acc.is_identity() {
                acc = acc.then(&p);
                k += 1;
            }
            prop_assert_eq!(p.order(), k);
            prop_assert!(p.pow(k).is_identity());
        }

        #[test]
        fn transitivity_conjugation_invariant((p, q, s) in triple(9)) {
            let d = p.degree();
            let gens = vec![p.clone(), q.clone()];
            let conj: Vec<_> = gens.iter().map(|g| g.conjugate_by(&s)).collect();
            prop_assert_eq!(transitive(&gens, d), transitive(&conj, d));
        }
    }
}
