//! PBW straightening in the universal enveloping algebra and truncated
//! quotients with explicit multiplication tables.
//!
//! The truncation is by total PBW degree: the table keeps every ordered
//! monomial of degree below the cutoff and projects products of higher
//! degree to zero, so the dimension is the stars-and-bars count
//! `C(cutoff-1+dim, dim)`. Each table entry is the projection of the
//! exact product in `U(g)`.
//!
//! The span of monomials of degree ≥ n is a two-sided ideal — making the
//! table an honest associative quotient — exactly when straightening
//! corrections cannot cascade below the cutoff. That holds for abelian
//! algebras and for nilpotent algebras of class ≤ 2 (brackets land in the
//! center, so a correction never re-brackets), Heisenberg in particular.
//! For other algebras (`[e1,e2] = e2` already suffices) the projected
//! product is not associative; `verify_associativity` decides the
//! question exactly, and `left_regular_rep` yields a valid Lie algebra
//! representation precisely in the associative case. The span identities
//! computed below evaluate projections of exact `U(g)` products, so they
//! are meaningful either way.
//!
//! The degree filtration differs from powers of the augmentation ideal:
//! for Heisenberg, `z = xy - yx` lies in the square of the augmentation
//! ideal but has degree 1, so the degree quotient is the larger one. It
//! is the quotient whose left regular representations realize nilpotency
//! degree exactly `cutoff` on the center, which is what the
//! representation families are for.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactComplex;
use crate::lie::{LieAlgebra, Subspace};
use crate::linalg::{QMat, QVec, Span};
use crate::rep::{CMatrix, MatrixRep};

/// Default cap on the dimension of a truncated quotient table.
pub const DEFAULT_DIM_CAP: usize = 5000;
/// Default cap on the truncation degree.
pub const DEFAULT_DEGREE_CAP: usize = 8;

/// Dimension cap, overridable through the `LIEPI_DIM_CAP` environment
/// variable.
pub fn dim_cap() -> usize {
    std::env::var("LIEPI_DIM_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

/// An ordered PBW monomial `e_1^{a_1} ⋯ e_n^{a_n}`, stored as exponents.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PBWMonomial(pub Vec<u32>);

impl PBWMonomial {
    pub fn unit(vars: usize) -> Self {
        Self(vec![0; vars])
    }

    pub fn generator(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Self(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Index of the leftmost letter, i.e. the smallest `i` with `a_i > 0`.
    fn first_letter(&self) -> Option<usize> {
        self.0.iter().position(|&a| a > 0)
    }

    fn with_letter_added(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        e[i] += 1;
        Self(e)
    }

    fn with_letter_removed(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        debug_assert!(e[i] > 0);
        e[i] -= 1;
        Self(e)
    }

    /// The monomial as a word of generator indices in ascending order.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (i, &a) in self.0.iter().enumerate() {
            for _ in 0..a {
                w.push(i);
            }
        }
        w
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_unit() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &a) in self.0.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], a)),
            }
        }
        parts.join(" ")
    }
}

impl PartialOrd for PBWMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PBWMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Graded, then earlier generators first within a degree
        // (x < y < z for the degree-one monomials).
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Debug for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.0)
    }
}

/// A finite sum of PBW monomials with exact coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UEAElement(BTreeMap<PBWMonomial, ExactComplex>);

impl UEAElement {
    pub fn zero() -> Self {
        Self(BTreeMap::new())
    }

    pub fn from_monomial(m: PBWMonomial) -> Self {
        let mut t = BTreeMap::new();
        t.insert(m, ExactComplex::one());
        Self(t)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PBWMonomial, &ExactComplex)> {
        self.0.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn add_term(&mut self, m: PBWMonomial, c: ExactComplex) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.0.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &UEAElement) {
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scaled(&self, c: &ExactComplex) -> UEAElement {
        if c.is_zero() {
            return UEAElement::zero();
        }
        UEAElement(
            self.0
                .iter()
                .map(|(m, v)| (m.clone(), v.mul(c)))
                .collect(),
        )
    }

    pub fn coefficient(&self, m: &PBWMonomial) -> ExactComplex {
        self.0.get(m).cloned().unwrap_or_else(ExactComplex::zero)
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.0
            .iter()
            .map(|(m, c)| format!("({}) {}", c, m.display(names)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for UEAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(m, c)| format!("{c}·{m:?}")).collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// Memoized PBW straightening for one algebra.
pub struct Straightener<'a> {
    algebra: &'a LieAlgebra,
    memo: HashMap<(usize, PBWMonomial), UEAElement>,
}

impl<'a> Straightener<'a> {
    pub fn new(algebra: &'a LieAlgebra) -> Self {
        Self { algebra, memo: HashMap::new() }
    }

    /// `e_i · m` as a sum of ordered monomials. Rewrites
    /// `e_i e_j → e_j e_i + [e_i, e_j]` whenever `i` is out of order.
    pub fn mul_generator(&mut self, i: usize, m: &PBWMonomial) -> UEAElement {
        if let Some(hit) = self.memo.get(&(i, m.clone())) {
            return hit.clone();
        }
        let result = match m.first_letter() {
            None => UEAElement::from_monomial(PBWMonomial::generator(self.algebra.dim(), i)),
            Some(j) if i <= j => UEAElement::from_monomial(m.with_letter_added(i)),
            Some(j) => {
                // e_i e_j m' = e_j (e_i m') + [e_i, e_j] m'
                let m_rest = m.with_letter_removed(j);
                let inner = self.mul_generator(i, &m_rest);
                let mut out = UEAElement::zero();
                for (mon, c) in inner.clone().0 {
                    let swapped = self.mul_generator(j, &mon);
                    out.add_assign(&swapped.scaled(&c));
                }
                for k in 0..self.algebra.dim() {
                    let c = self.algebra.structure_constant(i, j, k).clone();
                    if c.is_zero() {
                        continue;
                    }
                    let br = self.mul_generator(k, &m_rest);
                    out.add_assign(&br.scaled(&c));
                }
                out
            }
        };
        self.memo.insert((i, m.clone()), result.clone());
        result
    }

    /// Product of two ordered monomials.
    pub fn mul_monomials(&mut self, a: &PBWMonomial, b: &PBWMonomial) -> UEAElement {
        let mut acc = UEAElement::from_monomial(b.clone());
        for &letter in a.word().iter().rev() {
            let mut next = UEAElement::zero();
            for (mon, c) in acc.0 {
                let prod = self.mul_generator(letter, &mon);
                next.add_assign(&prod.scaled(&c));
            }
            acc = next;
        }
        acc
    }

    pub fn mul_elements(&mut self, a: &UEAElement, b: &UEAElement) -> UEAElement {
        let mut out = UEAElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let prod = self.mul_monomials(ma, mb);
                out.add_assign(&prod.scaled(&ca.mul(cb)));
            }
        }
        out
    }

    /// Straightens an arbitrary word of generator indices.
    pub fn straighten_word(&mut self, word: &[usize]) -> Result<UEAElement> {
        let n = self.algebra.dim();
        if word.iter().any(|&i| i >= n) {
            return Err(Error::DimensionMismatch(
                "word contains an out-of-range generator index".into(),
            ));
        }
        let mut acc = UEAElement::from_monomial(PBWMonomial::unit(n));
        for &letter in word.iter().rev() {
            let mut next = UEAElement::zero();
            for (mon, c) in acc.0 {
                let prod = self.mul_generator(letter, &mon);
                next.add_assign(&prod.scaled(&c));
            }
            acc = next;
        }
        Ok(acc)
    }
}

/// Rewrites a word in the generators to its ordered PBW normal form.
pub fn straighten(algebra: &LieAlgebra, word: &[usize]) -> Result<UEAElement> {
    Straightener::new(algebra).straighten_word(word)
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    usize::try_from(acc).ok()
}

/// A sparse element of a truncated quotient, indexed over its basis.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct TElem(pub BTreeMap<usize, ExactComplex>);

impl TElem {
    pub fn zero() -> Self {
        Self(BTreeMap::new())
    }

    pub fn basis_vec(i: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert(i, ExactComplex::one());
        Self(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, i: usize, c: ExactComplex) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.0.entry(i) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &TElem) {
        for (&i, c) in &other.0 {
            self.add_term(i, c.clone());
        }
    }

    pub fn scaled(&self, c: &ExactComplex) -> TElem {
        if c.is_zero() {
            return TElem::zero();
        }
        TElem(self.0.iter().map(|(&i, v)| (i, v.mul(c))).collect())
    }

    pub fn to_dense(&self, dim: usize) -> QVec {
        let mut v = vec![ExactComplex::zero(); dim];
        for (&i, c) in &self.0 {
            v[i] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[ExactComplex]) -> Self {
        let mut t = TElem::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                t.add_term(i, c.clone());
            }
        }
        t
    }
}

/// Multiplication table of `U(g)` truncated at total PBW degree `cutoff`.
pub struct TruncatedUEA {
    algebra: LieAlgebra,
    cutoff: usize,
    basis: Vec<PBWMonomial>,
    index: HashMap<PBWMonomial, usize>,
    table: Vec<Vec<TElem>>,
}

impl TruncatedUEA {
    pub fn new(algebra: &LieAlgebra, cutoff: usize) -> Result<Self> {
        Self::with_cap(algebra, cutoff, dim_cap())
    }

    pub fn with_cap(algebra: &LieAlgebra, cutoff: usize, cap: usize) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::InvalidCutoff);
        }
        let d = algebra.dim();
        let dim = binomial(cutoff - 1 + d, d).ok_or(Error::DimensionCap {
            dim: usize::MAX,
            cap,
        })?;
        if dim > cap {
            return Err(Error::DimensionCap { dim, cap });
        }

        let mut basis: Vec<PBWMonomial> = Vec::with_capacity(dim);
        let mut stack = vec![(vec![0u32; d], 0usize, 0u32)];
        while let Some((expo, pos, deg)) = stack.pop() {
            if pos == d {
                basis.push(PBWMonomial(expo));
                continue;
            }
            for a in 0..=(cutoff as u32 - 1 - deg) {
                let mut e = expo.clone();
                e[pos] = a;
                stack.push((e, pos + 1, deg + a));
            }
        }
        basis.sort();
        debug_assert_eq!(basis.len(), dim);
        let index: HashMap<PBWMonomial, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

        let mut straightener = Straightener::new(algebra);
        let mut table = Vec::with_capacity(dim);
        for a in &basis {
            let mut row = Vec::with_capacity(dim);
            for b in &basis {
                let full = straightener.mul_monomials(a, b);
                let mut elem = TElem::zero();
                for (m, c) in full.terms() {
                    if m.degree() < cutoff as u32 {
                        elem.add_term(index[m], c.clone());
                    }
                }
                row.push(elem);
            }
            table.push(row);
        }

        Ok(Self {
            algebra: algebra.clone(),
            cutoff,
            basis,
            index,
            table,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PBWMonomial] {
        &self.basis
    }

    pub fn basis_index(&self, m: &PBWMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn unit_elem(&self) -> TElem {
        TElem::basis_vec(self.index[&PBWMonomial::unit(self.algebra.dim())])
    }

    /// Image of the Lie generator `e_i`; zero when the cutoff is 1.
    pub fn generator_elem(&self, i: usize) -> TElem {
        let m = PBWMonomial::generator(self.algebra.dim(), i);
        match self.index.get(&m) {
            Some(&idx) => TElem::basis_vec(idx),
            None => TElem::zero(),
        }
    }

    /// Image of a Lie algebra element given by coordinates.
    pub fn lie_elem(&self, coords: &[ExactComplex]) -> Result<TElem> {
        if coords.len() != self.algebra.dim() {
            return Err(Error::DimensionMismatch(
                "coordinate length does not match the algebra dimension".into(),
            ));
        }
        let mut out = TElem::zero();
        for (i, c) in coords.iter().enumerate() {
            out.add_assign(&self.generator_elem(i).scaled(c));
        }
        Ok(out)
    }

    /// Product in the truncated quotient.
    pub fn mul(&self, a: &TElem, b: &TElem) -> TElem {
        let mut out = TElem::zero();
        for (&i, ca) in &a.0 {
            for (&j, cb) in &b.0 {
                out.add_assign(&self.table[i][j].scaled(&ca.mul(cb)));
            }
        }
        out
    }

    /// Exact associativity check over all basis triples. Quadratic
    /// blow-up makes this worthwhile only for small tables; callers
    /// should keep the dimension at 60 or below.
    pub fn verify_associativity(&self) -> bool {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let ij = &self.table[i][j];
                for k in 0..dim {
                    let left = self.mul(ij, &TElem::basis_vec(k));
                    let right = self.mul(&TElem::basis_vec(i), &self.table[j][k]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Left regular representation: each Lie generator is mapped to the
    /// matrix of left multiplication on the table basis.
    pub fn left_regular_rep(&self) -> MatrixRep {
        let dim = self.dim();
        let mats = (0..self.algebra.dim())
            .map(|g| {
                let ge = self.generator_elem(g);
                let mut m = QMat::zeros(dim, dim);
                for j in 0..dim {
                    let col = self.mul(&ge, &TElem::basis_vec(j));
                    for (&i, c) in &col.0 {
                        m[(i, j)] = c.clone();
                    }
                }
                CMatrix::Exact(m)
            })
            .collect();
        MatrixRep::new(self.algebra.clone(), mats).expect("left regular representation")
    }

    /// Non-unital multiplicative closure of a set of elements, as a span.
    pub fn closure_non_unital(&self, gens: &[TElem]) -> (Span, Vec<TElem>) {
        let dim = self.dim();
        let mut span = Span::new(dim);
        let mut basis: Vec<TElem> = Vec::new();
        let mut frontier: Vec<usize> = Vec::new();
        for g in gens {
            if span.insert(g.to_dense(dim)) {
                basis.push(g.clone());
                frontier.push(basis.len() - 1);
            }
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &fi in &frontier {
                for bi in 0..basis.len() {
                    for (a, b) in [(fi, bi), (bi, fi)] {
                        let prod = self.mul(&basis[a], &basis[b]);
                        if span.insert(prod.to_dense(dim)) {
                            basis.push(prod);
                            next.push(basis.len() - 1);
                        }
                    }
                }
            }
            frontier = next;
        }
        (span, basis)
    }

    /// Two-sided ideal generated by the given elements.
    pub fn two_sided_ideal(&self, gens: &[TElem]) -> (Span, Vec<TElem>) {
        let dim = self.dim();
        let mut span = Span::new(dim);
        let mut basis: Vec<TElem> = Vec::new();
        let mut frontier: Vec<usize> = Vec::new();
        for g in gens {
            if span.insert(g.to_dense(dim)) {
                basis.push(g.clone());
                frontier.push(basis.len() - 1);
            }
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &fi in &frontier {
                for t in 0..dim {
                    let bt = TElem::basis_vec(t);
                    for prod in [self.mul(&bt, &basis[fi]), self.mul(&basis[fi], &bt)] {
                        if span.insert(prod.to_dense(dim)) {
                            basis.push(prod);
                            next.push(basis.len() - 1);
                        }
                    }
                }
            }
            frontier = next;
        }
        (span, basis)
    }

    /// Smallest `d` with every product of `d` elements of the closed span
    /// zero, or `None` when the power spans stabilize at nonzero.
    pub fn span_power_degree(&self, closed_basis: &[TElem]) -> Option<usize> {
        let dim = self.dim();
        if closed_basis.is_empty() {
            return Some(1);
        }
        let mut current: Vec<TElem> = closed_basis.to_vec();
        let mut current_span = Span::from_vectors(dim, current.iter().map(|t| t.to_dense(dim)));
        let mut degree = 1usize;
        loop {
            if current_span.is_trivial() {
                return Some(degree);
            }
            let mut next_span = Span::new(dim);
            let mut next = Vec::new();
            for p in &current {
                for b in closed_basis {
                    let prod = self.mul(p, b);
                    if next_span.insert(prod.to_dense(dim)) {
                        next.push(prod);
                    }
                }
            }
            if next_span.same_span(&current_span) {
                return None;
            }
            current = next;
            current_span = next_span;
            degree += 1;
        }
    }

    /// Serializable dump of the table for golden-file tests.
    pub fn dump(&self) -> TableDump {
        let names = self.algebra.names().to_vec();
        TableDump {
            dim: self.dim(),
            cutoff: self.cutoff,
            algebra_dim: self.algebra.dim(),
            basis: self.basis.iter().map(|m| m.display(&names)).collect(),
            exponents: self.basis.iter().map(|m| m.0.clone()).collect(),
            table: self
                .table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| {
                            e.0.iter()
                                .map(|(&k, c)| (k, c.re_string(), c.im_string()))
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// JSON shape of a truncated multiplication table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableDump {
    pub dim: usize,
    pub cutoff: usize,
    pub algebra_dim: usize,
    pub basis: Vec<String>,
    pub exponents: Vec<Vec<u32>>,
    pub table: Vec<Vec<Vec<(usize, String, String)>>>,
}

/// Findings of the two-sided-ideal identity check inside a truncated
/// quotient: whether the left and right products of the augmentation
/// image with the full algebra span the same subspace, and the nilpotency
/// degree of the two-sided ideal generated by the nilpotent radical.
#[derive(Clone, Debug)]
pub struct IdealIdentityReport {
    pub cutoff: usize,
    pub quotient_dim: usize,
    pub left_dim: usize,
    pub right_dim: usize,
    pub spans_equal: bool,
    pub ideal_dim: usize,
    pub ideal_nilpotency_degree: Option<usize>,
}

/// Verifies, inside `T_cutoff`, that the span of (image of `U(g)`) times
/// (image of the augmentation ideal of `U(n)`) equals the span with the
/// factors in the other order, and computes the smallest `d` with
/// `I^d = 0` for the two-sided ideal `I` generated by the image of `n`.
pub fn two_sided_ideal_identity_check(
    algebra: &LieAlgebra,
    nil_rad: &Subspace,
    cutoff: usize,
) -> Result<IdealIdentityReport> {
    let t = TruncatedUEA::new(algebra, cutoff)?;
    let dim = t.dim();
    let n_images: Vec<TElem> = nil_rad
        .basis()
        .iter()
        .map(|v| t.lie_elem(v))
        .collect::<Result<Vec<_>>>()?;

    // Image of the augmentation ideal of U(n): the non-unital subalgebra
    // generated by the image of n.
    let (_, aug_basis) = t.closure_non_unital(&n_images);

    let mut left = Span::new(dim);
    let mut right = Span::new(dim);
    for i in 0..dim {
        let b = TElem::basis_vec(i);
        for u in &aug_basis {
            left.insert(t.mul(&b, u).to_dense(dim));
            right.insert(t.mul(u, &b).to_dense(dim));
        }
    }
    let spans_equal = left.same_span(&right);

    let (ideal_span, ideal_basis) = t.two_sided_ideal(&n_images);
    let degree = t.span_power_degree(&ideal_basis);

    Ok(IdealIdentityReport {
        cutoff,
        quotient_dim: dim,
        left_dim: left.dim(),
        right_dim: right.dim(),
        spans_equal,
        ideal_dim: ideal_span.dim(),
        ideal_nilpotency_degree: degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rep::element_nilpotency_degree;

    fn word_elem(alg: &LieAlgebra, word: &[usize]) -> UEAElement {
        straighten(alg, word).unwrap()
    }

    #[test]
    fn straighten_examples() {
        let heis = catalog::heisenberg();
        // y·x = xy - z.
        let e = word_elem(&heis, &[1, 0]);
        assert_eq!(e.num_terms(), 2);
        assert_eq!(
            e.coefficient(&PBWMonomial(vec![1, 1, 0])),
            ExactComplex::one()
        );
        assert_eq!(
            e.coefficient(&PBWMonomial(vec![0, 0, 1])),
            ExactComplex::from_int(-1)
        );

        // Abelian: any word sorts with coefficient 1.
        let ab = catalog::abelian(3);
        let e = word_elem(&ab, &[2, 0, 1, 0]);
        assert_eq!(e.num_terms(), 1);
        assert_eq!(
            e.coefficient(&PBWMonomial(vec![2, 1, 1])),
            ExactComplex::one()
        );

        // Single letter.
        let e = word_elem(&heis, &[2]);
        assert_eq!(e, UEAElement::from_monomial(PBWMonomial::generator(3, 2)));

        assert!(straighten(&heis, &[7]).is_err());
    }

    #[test]
    fn straighten_is_confluent_under_splitting() {
        // Straightening a word equals multiplying the straightenings of
        // any split of it.
        let algebras = [catalog::heisenberg(), catalog::aff1(), catalog::sl2()];
        let words: [&[usize]; 4] = [&[1, 0], &[2, 1, 0], &[1, 0, 1, 0], &[2, 0, 2, 0, 1]];
        for alg in &algebras {
            let d = alg.dim();
            for word in words {
                if word.iter().any(|&i| i >= d) {
                    continue;
                }
                let whole = word_elem(alg, word);
                let mut s = Straightener::new(alg);
                for cut in 1..word.len() {
                    let left = s.straighten_word(&word[..cut]).unwrap();
                    let right = s.straighten_word(&word[cut..]).unwrap();
                    assert_eq!(whole, s.mul_elements(&left, &right), "cut {cut}");
                }
            }
        }
    }

    #[test]
    fn truncated_dimensions() {
        let heis = catalog::heisenberg();
        assert_eq!(TruncatedUEA::new(&heis, 2).unwrap().dim(), 4);
        assert_eq!(TruncatedUEA::new(&heis, 4).unwrap().dim(), 20);
        assert_eq!(TruncatedUEA::new(&heis, 1).unwrap().dim(), 1);
        assert!(matches!(
            TruncatedUEA::new(&heis, 0),
            Err(Error::InvalidCutoff)
        ));
        assert!(matches!(
            TruncatedUEA::with_cap(&heis, 8, 50),
            Err(Error::DimensionCap { .. })
        ));
    }

    #[test]
    fn truncated_unit_acts_as_identity() {
        let t = TruncatedUEA::new(&catalog::heisenberg(), 3).unwrap();
        let one = t.unit_elem();
        for i in 0..t.dim() {
            let b = TElem::basis_vec(i);
            assert_eq!(t.mul(&one, &b), b);
            assert_eq!(t.mul(&b, &one), b);
        }
    }

    #[test]
    fn truncated_tables_are_associative_for_class_two_nilpotent() {
        for (alg, cutoff) in [
            (catalog::heisenberg(), 3usize),
            (catalog::heisenberg(), 4),
            (catalog::abelian(2), 4),
            (catalog::heisenberg().direct_sum(&catalog::abelian(1)), 3),
        ] {
            let t = TruncatedUEA::new(&alg, cutoff).unwrap();
            assert!(t.dim() <= 60);
            assert!(t.verify_associativity());
        }
    }

    #[test]
    fn degree_truncation_is_not_associative_beyond_class_two() {
        // [e1,e2] = e2 cascades: e2·(e2·e1²) ≠ (e2·e2)·e1² after the
        // degree-3 projection, so the table is only a projected product.
        let t = TruncatedUEA::new(&catalog::aff1(), 3).unwrap();
        assert!(!t.verify_associativity());
        assert!(t.left_regular_rep().validate().is_err());

        let t = TruncatedUEA::new(&catalog::sl2(), 2).unwrap();
        assert!(!t.verify_associativity());
    }

    #[test]
    fn left_regular_rep_validates_and_realizes_degrees() {
        let heis = catalog::heisenberg();
        for cutoff in 2..=5usize {
            let t = TruncatedUEA::new(&heis, cutoff).unwrap();
            let rep = t.left_regular_rep();
            assert!(rep.validate().is_ok(), "cutoff {cutoff}");
            // Image of the central generator z has nilpotency degree
            // equal to the cutoff.
            let z = rep.matrices()[2].clone();
            assert_eq!(element_nilpotency_degree(&z), Some(cutoff));
        }

        // Cutoff 1 kills all generators.
        let t = TruncatedUEA::new(&heis, 1).unwrap();
        let rep = t.left_regular_rep();
        assert!(rep.matrices().iter().all(|m| m.is_exactly_zero()));
    }

    #[test]
    fn heisenberg_t2_left_regular_action() {
        let heis = catalog::heisenberg();
        let t = TruncatedUEA::new(&heis, 2).unwrap();
        let z = t.generator_elem(2);
        // z·1 = z, z·x = z·y = z·z = 0 in T2.
        assert_eq!(t.mul(&z, &t.unit_elem()), z);
        for g in 0..3 {
            assert!(t.mul(&z, &t.generator_elem(g)).is_zero());
        }
    }

    #[test]
    fn ideal_identity_heisenberg_t3() {
        let heis = catalog::heisenberg();
        let nil = heis.nilpotent_radical();
        let rep = two_sided_ideal_identity_check(&heis, &nil, 3).unwrap();
        assert!(rep.spans_equal);
        assert_eq!(rep.quotient_dim, 10);
        assert_eq!(rep.ideal_nilpotency_degree, Some(3));
    }

    #[test]
    fn ideal_identity_reductive_is_trivial() {
        let sl2 = catalog::sl2();
        let nil = sl2.nilpotent_radical();
        assert!(nil.is_zero());
        for cutoff in [1usize, 2, 3] {
            let rep = two_sided_ideal_identity_check(&sl2, &nil, cutoff).unwrap();
            assert!(rep.spans_equal);
            assert_eq!(rep.left_dim, 0);
            assert_eq!(rep.right_dim, 0);
            assert_eq!(rep.ideal_dim, 0);
            assert_eq!(rep.ideal_nilpotency_degree, Some(1));
        }
    }

    #[test]
    fn ideal_identity_aff1_t3() {
        let aff = catalog::aff1();
        let nil = aff.nilpotent_radical();
        let rep = two_sided_ideal_identity_check(&aff, &nil, 3).unwrap();
        assert!(rep.spans_equal);
        assert_eq!(rep.quotient_dim, 6);
        assert_eq!(rep.ideal_nilpotency_degree, Some(3));
    }

    #[test]
    fn dump_round_trips_through_json() {
        let t = TruncatedUEA::new(&catalog::heisenberg(), 2).unwrap();
        let dump = t.dump();
        let json = serde_json::to_string(&dump).unwrap();
        let back: TableDump = serde_json::from_str(&json).unwrap();
        assert_eq!(dump, back);
        assert_eq!(dump.dim, 4);
        assert_eq!(dump.basis[0], "1");
    }
}
