//! Braid monodromy of curves `g(x) = f(y)` with
//! `g = ∏ (x - α_i)^{n_i}` and `f = ∏ (y - β_j)^{m_j}`.
//!
//! The fiber over the base point has `Σ m_j` points, grouped in blocks of
//! sizes `m_1, ..., m_s`; strand `M_{j-1} + k` is the point `a_{j,k}` and the
//! free generator `x_{M_{j-1}+k}` is the loop `μ_{j,k}` (`M_j = m_1 + ... + m_j`).
//!
//! Conventions:
//! * `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`.
//! * A braid word acts letter by letter, first letter first, so the word
//!   `b_1 b_2 ⋯ b_L` sends `x` to `φ_{b_L}(⋯ φ_{b_1}(x))`.
//! * Group words are evaluated left to right in permutations, as paths.
//!
//! With these conventions the single-block braid `σ̃^n` yields exactly the
//! relations of `G_{m,n}` (checked exhaustively in the tests).

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symgroup::Permutation;

/// Signed 1-based generator indices: `3` is `σ_3`, `-3` is `σ_3⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::BraidIndex { index: 0, strands });
        }
        if let Some(&l) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::BraidIndex { index: l as i64, strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self { strands, letters: Vec::new() }
    }

    pub fn strand_count(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { strands: self.strands, letters }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * e);
        for _ in 0..e {
            letters.extend_from_slice(&self.letters);
        }
        Self { strands: self.strands, letters }
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate_by(&self, c: &Self) -> Self {
        c.inverse().then(self).then(c)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// Freely reduced word in `x_1, ..., x_N`; letters are signed 1-based indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupWord {
    letters: Vec<i32>,
}

impl GroupWord {
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut w = Self::default();
        for l in letters {
            assert!(l != 0, "generator index 0");
            w.push(l);
        }
        w
    }

    pub fn generator(i: usize) -> Self {
        Self { letters: vec![i as i32] }
    }

    fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn then(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Left-to-right product of `taus[i-1]^{±1}`.
    pub fn evaluate(&self, taus: &[Permutation]) -> Permutation {
        let d = taus[0].degree();
        let mut p = Permutation::identity(d);
        for &l in &self.letters {
            let t = &taus[l.unsigned_abs() as usize - 1];
            p = if l > 0 { p.then(t) } else { p.then(&t.inverse()) };
        }
        p
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// Image of the letter `x_g^{±1}` under `σ_i^{±1}`, appended to `out`.
fn push_image(out: &mut GroupWord, g: i32, sigma: i32) {
    let i = sigma.abs();
    let gen = g.abs();
    let image: &[i32] = match (sigma > 0, gen - i) {
        (true, 0) => &[i, i + 1, -i],
        (true, 1) => &[i],
        (false, 0) => &[i + 1],
        (false, 1) => &[-(i + 1), i, i + 1],
        _ => &[gen],
    };
    if g > 0 {
        for &l in image {
            out.push(l);
        }
    } else {
        for &l in image.iter().rev() {
            out.push(-l);
        }
    }
}

pub fn artin_apply(b: &BraidWord, w: &GroupWord) -> Result<GroupWord> {
    if w.max_generator() > b.strands {
        return Err(Error::BraidIndex {
            index: w.max_generator() as i64,
            strands: b.strands,
        });
    }
    let mut cur = w.clone();
    for &s in &b.letters {
        let mut next = GroupWord::default();
        for &g in &cur.letters {
            push_image(&mut next, g, s);
        }
        cur = next;
    }
    Ok(cur)
}

/// The tuple `τ ∘ β`, i.e. `x ↦ τ(β(x))`, computed by Hurwitz moves without
/// expanding any word.
pub fn hurwitz_apply(b: &BraidWord, taus: &[Permutation]) -> Vec<Permutation> {
    assert_eq!(taus.len(), b.strands, "one permutation per strand");
    let mut t = taus.to_vec();
    for &s in b.letters.iter().rev() {
        let i = s.unsigned_abs() as usize - 1;
        let (a, c) = (t[i].clone(), t[i + 1].clone());
        if s > 0 {
            t[i] = a.then(&c).then(&a.inverse());
            t[i + 1] = a;
        } else {
            t[i + 1] = c.inverse().then(&a).then(&c);
            t[i] = c;
        }
    }
    t
}

/// True iff every relator `x⁻¹ β(x)` maps to the identity under `taus`.
pub fn satisfies_braid(b: &BraidWord, taus: &[Permutation]) -> bool {
    hurwitz_apply(b, taus) == taus
}

/// Exponents of `g(x) = f(y)`: `n_i` for the roots of `g`, `m_j` for `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveShape {
    pub x_exponents: Vec<usize>,
    pub y_exponents: Vec<usize>,
}

impl CurveShape {
    pub fn new(x_exponents: Vec<usize>, y_exponents: Vec<usize>) -> Result<Self> {
        if x_exponents.is_empty() || y_exponents.is_empty() {
            return Err(Error::InvalidShape("empty exponent list".into()));
        }
        if x_exponents.iter().chain(&y_exponents).any(|&e| e == 0) {
            return Err(Error::InvalidShape("exponents must be positive".into()));
        }
        Ok(Self { x_exponents, y_exponents })
    }

    /// Single singularity `x^n = y^m`.
    pub fn single(n: usize, m: usize) -> Result<Self> {
        Self::new(vec![n], vec![m])
    }

    pub fn strand_count(&self) -> usize {
        self.y_exponents.iter().sum()
    }

    /// `M_{j-1}`: strands before block `j` (1-based `j`).
    pub fn block_start(&self, j: usize) -> usize {
        self.y_exponents[..j - 1].iter().sum()
    }

    pub fn gcd_x(&self) -> usize {
        self.x_exponents.iter().fold(0, |g, &e| g.gcd(&e))
    }

    pub fn gcd_y(&self) -> usize {
        self.y_exponents.iter().fold(0, |g, &e| g.gcd(&e))
    }

    /// All `n_i ≤ 2` or all `m_j ≤ 2`: the projective complement of a nodal
    /// curve has abelian fundamental group, so no generic cover of degree at
    /// least 3 exists.
    pub fn nodal_exclusion(&self) -> bool {
        self.x_exponents.iter().all(|&n| n <= 2) || self.y_exponents.iter().all(|&m| m <= 2)
    }

    /// The presentation the relators reduce to: `gcd(m_j)` generators and
    /// stride `gcd(n_i)`.
    pub fn reduced_presentation(&self) -> (usize, usize) {
        (self.gcd_y(), self.gcd_x())
    }
}

/// `σ̃_j = σ_{M_j - 1} ⋯ σ_{M_{j-1} + 1}`, the rotation of block `j`.
pub fn sigma_tilde(j: usize, shape: &CurveShape) -> BraidWord {
    let start = shape.block_start(j);
    let end = start + shape.y_exponents[j - 1];
    let letters = ((start + 1)..end).rev().map(|i| i as i32).collect();
    BraidWord { strands: shape.strand_count(), letters }
}

/// `σ̃_1^{n_i} ⋯ σ̃_s^{n_i}`.
pub fn braid_of_rho(i: usize, shape: &CurveShape) -> Result<BraidWord> {
    let n = *shape
        .x_exponents
        .get(i.wrapping_sub(1))
        .ok_or_else(|| Error::InvalidShape(format!("no root α_{i}")))?;
    let mut b = BraidWord::identity(shape.strand_count());
    for j in 1..=shape.y_exponents.len() {
        b = b.then(&sigma_tilde(j, shape).pow(n));
    }
    Ok(b)
}

/// Half-twist joining block `j` to block `j + 1`, conjugated by
/// `(σ̃_j σ̃_{j+1})^offset`.
///
/// For `offset = 0` this is `T⁻¹ σ_{M_j} T` with
/// `T = (σ_{M_j + 1} ⋯ σ_{M_j + c}) σ̃_j`, `c = ⌊m_{j+1} / 2⌋`; it identifies
/// `γ_{j,1}` with `γ_{j+1,c+1}`.
pub fn braid_of_delta(j: usize, offset: usize, shape: &CurveShape) -> Result<BraidWord> {
    let s = shape.y_exponents.len();
    if j == 0 || j >= s {
        return Err(Error::InvalidShape(format!("no block pair ({j}, {})", j + 1)));
    }
    let strands = shape.strand_count();
    let mj = shape.block_start(j + 1);
    let c = shape.y_exponents[j] / 2;
    let head = BraidWord {
        strands,
        letters: ((mj + 1)..=(mj + c)).map(|i| i as i32).collect(),
    };
    let t = head.then(&sigma_tilde(j, shape));
    let twist = BraidWord { strands, letters: vec![mj as i32] };
    let delta = twist.conjugate_by(&t);
    let rot = sigma_tilde(j, shape).then(&sigma_tilde(j + 1, shape)).pow(offset);
    Ok(delta.conjugate_by(&rot))
}

/// Offsets `0..max(m_j, m_{j+1})` used for block pair `(j, j+1)`.
pub fn delta_offsets(j: usize, shape: &CurveShape) -> std::ops::Range<usize> {
    0..shape.y_exponents[j - 1].max(shape.y_exponents[j])
}

/// Every braid whose relators present `π₁(C² \ B)`: one `ρ_i` per distinct
/// exponent `n_i` (equal exponents give equal braids), and the half-twists
/// between consecutive blocks at all offsets.
pub fn curve_braids(shape: &CurveShape) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let mut seen = Vec::new();
    for (i, &n) in shape.x_exponents.iter().enumerate() {
        if !seen.contains(&n) {
            seen.push(n);
            out.push(braid_of_rho(i + 1, shape).expect("index in range"));
        }
    }
    for j in 1..shape.y_exponents.len() {
        for q in delta_offsets(j, shape) {
            out.push(braid_of_delta(j, q, shape).expect("index in range"));
        }
    }
    out
}

/// `x_1 x_2 ⋯ x_N`, the loop around the line at infinity.
pub fn loop_at_infinity(shape: &CurveShape) -> GroupWord {
    GroupWord::new((1..=shape.strand_count() as i32).collect::<Vec<_>>())
}

pub fn relators_from_curve(shape: &CurveShape, projective: bool) -> Result<Vec<GroupWord>> {
    let strands = shape.strand_count();
    let mut out = Vec::new();
    for b in curve_braids(shape) {
        for x in 1..=strands {
            let g = GroupWord::generator(x);
            let r = g.inverse().then(&artin_apply(&b, &g)?);
            if !r.is_empty() && !out.contains(&r) {
                out.push(r);
            }
        }
    }
    if projective {
        if strands % shape.gcd_y() != 0 {
            return Err(Error::InvalidShape("gcd(m_j) does not divide the degree".into()));
        }
        out.push(loop_at_infinity(shape));
    }
    Ok(out)
}

/// True iff `taus` (one permutation per strand) kills every relator.
pub fn satisfies_relators(relators: &[GroupWord], taus: &[Permutation]) -> bool {
    relators.iter().all(|r| r.evaluate(taus).is_identity())
}

/// Same verdict as `relators_from_curve` + `satisfies_relators`, computed by
/// Hurwitz moves; usable on shapes whose relator words are too long to expand.
pub fn satisfies_curve(shape: &CurveShape, taus: &[Permutation], projective: bool) -> bool {
    taus.len() == shape.strand_count()
        && curve_braids(shape).iter().all(|b| satisfies_braid(b, taus))
        && (!projective || crate::symgroup::product(taus).map_or(false, |p| p.is_identity()))
}

/// `γ_{j,k} = (μ_{j,1} ⋯ μ_{j,k-1}) μ_{j,k}⁻¹ (μ_{j,1} ⋯ μ_{j,k-1})⁻¹`.
pub fn gamma_word(j: usize, k: usize, shape: &CurveShape) -> GroupWord {
    let start = shape.block_start(j) as i32;
    let prefix = GroupWord::new((1..k as i32).map(|i| start + i).collect::<Vec<_>>());
    prefix
        .then(&GroupWord::generator(start as usize + k).inverse())
        .then(&prefix.inverse())
}

/// Extends an assignment of the first block's loops `μ_{1,1..m}` to every
/// strand through `γ_{j,k} = γ_{j+1,c+k}`, for shapes whose blocks all have
/// the same size `m`. Indices past `m` wrap with a conjugation by the block
/// product `Π = μ_{j,1} ⋯ μ_{j,m}`: `γ_{j+1,i} = Π⁻¹ γ_{j,m-c+i} Π`.
pub fn extend_from_first_block(shape: &CurveShape, block: &[Permutation]) -> Result<Vec<Permutation>> {
    let m = shape.y_exponents[0];
    if shape.y_exponents.iter().any(|&e| e != m) {
        return Err(Error::InvalidShape("blocks of different sizes".into()));
    }
    if block.len() != m {
        return Err(Error::InvalidAssignment(format!(
            "{} permutations for a block of {m}",
            block.len()
        )));
    }
    let d = block[0].degree();
    let c = m / 2;
    let mut out = block.to_vec();
    let mut mu = block.to_vec();
    for _ in 1..shape.y_exponents.len() {
        let mut gamma = Vec::with_capacity(m);
        let mut p = Permutation::identity(d);
        for t in &mu {
            gamma.push(p.then(&t.inverse()).then(&p.inverse()));
            p = p.then(t);
        }
        // p is now the block product Π; the wrapped indices pick up Π⁻¹ · Π
        let mut next_gamma = gamma.clone();
        for (k, g) in gamma.into_iter().enumerate() {
            next_gamma[(c + k) % m] = if c + k < m {
                g
            } else {
                p.inverse().then(&g).then(&p)
            };
        }
        let mut p = Permutation::identity(d);
        for (k, g) in next_gamma.iter().enumerate() {
            let inv = p.inverse().then(g).then(&p);
            mu[k] = inv.inverse();
            p = p.then(&mu[k]);
        }
        out.extend(mu.iter().cloned());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(strands: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(strands, l.to_vec()).unwrap()
    }

    fn gw(l: &[i32]) -> GroupWord {
        GroupWord::new(l.to_vec())
    }

    #[test]
    fn artin_examples() {
        assert_eq!(artin_apply(&bw(2, &[1]), &gw(&[2])).unwrap(), gw(&[1]));
        assert_eq!(artin_apply(&bw(2, &[1, 1]), &gw(&[1])).unwrap(), gw(&[1, 2, 1, -2, -1]));
        for x in 1..=3 {
            assert_eq!(
                artin_apply(&bw(3, &[1, 2, 1]), &gw(&[x])).unwrap(),
                artin_apply(&bw(3, &[2, 1, 2]), &gw(&[x])).unwrap()
            );
        }
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(artin_apply(&bw(2, &[1]), &gw(&[3])).is_err());
    }

    #[test]
    fn inverse_letters_undo() {
        let b = bw(4, &[1, -3, 2, 2, -1]);
        for x in 1..=4 {
            let w = artin_apply(&b.inverse(), &artin_apply(&b, &gw(&[x])).unwrap()).unwrap();
            assert_eq!(w, gw(&[x]));
        }
    }

    #[test]
    fn rho_examples() {
        let s = CurveShape::new(vec![2], vec![2]).unwrap();
        assert_eq!(braid_of_rho(1, &s).unwrap().letters(), &[1, 1]);
        let s = CurveShape::new(vec![3], vec![2, 2]).unwrap();
        assert_eq!(braid_of_rho(1, &s).unwrap().letters(), &[1, 1, 1, 3, 3, 3]);
        let s = CurveShape::new(vec![1, 1], vec![3]).unwrap();
        assert_eq!(braid_of_rho(2, &s).unwrap().letters(), &[2, 1]);
        assert!(braid_of_rho(3, &s).is_err());
    }

    #[test]
    fn delta_examples() {
        let s = CurveShape::new(vec![2], vec![1, 1]).unwrap();
        assert_eq!(braid_of_delta(1, 0, &s).unwrap().letters(), &[1]);
        let s = CurveShape::new(vec![2], vec![2, 2]).unwrap();
        assert_eq!(braid_of_delta(1, 0, &s).unwrap().letters(), &[-1, -3, 2, 3, 1]);
        assert!(braid_of_delta(2, 0, &s).is_err());
    }

    #[test]
    fn gamma_examples() {
        let s = CurveShape::new(vec![2], vec![3, 3]).unwrap();
        assert_eq!(gamma_word(1, 1, &s), gw(&[-1]));
        assert_eq!(gamma_word(2, 3, &s), gw(&[4, 5, -6, -5, -4]));
    }

    #[test]
    fn single_block_relators_are_the_oka_relations() {
        // word route and Hurwitz route against verify_gmn for a small case
        use crate::monodromy::{verify_gmn, MonodromyAssignment, PresentationSpec};
        let shape = CurveShape::single(3, 3).unwrap();
        let rels = relators_from_curve(&shape, false).unwrap();
        let d = 3;
        let ts: Vec<Permutation> = [(1, 2), (1, 3), (2, 3)]
            .iter()
            .map(|&(a, b)| Permutation::transposition(d, a, b).unwrap())
            .collect();
        for a in &ts {
            for b in &ts {
                for c in &ts {
                    let taus = vec![a.clone(), b.clone(), c.clone()];
                    let asg = MonodromyAssignment::new(d, taus.clone()).unwrap();
                    let gmn = verify_gmn(&asg, &PresentationSpec::new(3, 3).unwrap());
                    assert_eq!(satisfies_relators(&rels, &taus), gmn);
                    assert_eq!(satisfies_curve(&shape, &taus, false), gmn);
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn braid(strands: usize, len: usize) -> impl Strategy<Value = BraidWord> {
            let max = strands as i32 - 1;
            prop::collection::vec((1..=max, any::<bool>()), 0..len).prop_map(move |v| {
                BraidWord::new(strands, v.into_iter().map(|(i, s)| if s { i } else { -i }).collect())
                    .unwrap()
            })
        }

        fn perms(strands: usize, d: usize) -> impl Strategy<Value = Vec<Permutation>> {
            prop::collection::vec(
                Just((1..=d).collect::<Vec<_>>())
                    .prop_shuffle()
                    .prop_map(|v| Permutation::from_images(&v).unwrap()),
                strands,
            )
        }

        proptest! {
            #[test]
            fn braid_relations_hold(n in 3usize..=8, i in 1usize..7, j in 1usize..7) {
                prop_assume!(i + 1 < n && j + 1 < n);
                let (i, j) = (i as i32, j as i32);
                for x in 1..=n as i32 {
                    let g = gw(&[x]);
                    let act = |l: &[i32]| artin_apply(&bw(n, l), &g).unwrap();
                    prop_assert_eq!(act(&[i, i + 1, i]), act(&[i + 1, i, i + 1]));
                    if (i - j).abs() >= 2 {
                        prop_assert_eq!(act(&[i, j]), act(&[j, i]));
                    }
                }
            }

            #[test]
            fn boundary_product_is_preserved((n, b) in (2usize..=8).prop_flat_map(|n| (Just(n), braid(n, 12)))) {
                let full = gw(&(1..=n as i32).collect::<Vec<_>>());
                prop_assert_eq!(artin_apply(&b, &full).unwrap(), full);
            }

            #[test]
            fn hurwitz_matches_word_evaluation(
                (b, taus) in (2usize..=6).prop_flat_map(|n| (braid(n, 10), perms(n, 4)))
            ) {
                let moved = hurwitz_apply(&b, &taus);
                for x in 1..=b.strand_count() {
                    let w = artin_apply(&b, &GroupWord::generator(x)).unwrap();
                    prop_assert_eq!(&w.evaluate(&taus), &moved[x - 1]);
                }
            }
        }
    }
}
