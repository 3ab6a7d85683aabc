//! Dense exact linear algebra over `ℚ(i)`.
//!
//! Plain fraction-based Gaussian elimination. Matrices here are small
//! (structure-constant tensors, representation spaces, truncated
//! enveloping-algebra tables), so exactness is worth far more than
//! asymptotic speed. Multiplication skips zero entries because most of
//! the matrices in this domain are sparse in practice.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use crate::exact::ExactComplex;
use crate::error::{Error, Result};

pub type QVec = Vec<ExactComplex>;

/// Dense matrix with entries in `ℚ(i)`.
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<ExactComplex>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ExactComplex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ExactComplex::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<QVec>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> ExactComplex) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Integer-entry convenience constructor for tests and the catalog.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| ExactComplex::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[ExactComplex] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ExactComplex::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        let data = self.data.iter().map(|a| a * c).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out[(i, j)] += &prod;
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> ExactComplex {
        assert!(self.is_square());
        let mut t = ExactComplex::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// Row-major flattening, used to treat matrices as span vectors.
    pub fn flatten(&self) -> QVec {
        self.data.clone()
    }

    /// Scales the matrix by the least common multiple of all entry
    /// denominators, yielding integer entries. Nilpotency degree and
    /// rank are invariant under this scaling.
    pub fn denominator_cleared(&self) -> QMat {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::One;
        let mut lcm = BigInt::one();
        for e in &self.data {
            lcm = lcm.lcm(e.re.denom());
            lcm = lcm.lcm(e.im.denom());
        }
        if lcm.is_one() {
            return self.clone();
        }
        let factor = ExactComplex::new(
            num_rational::BigRational::from_integer(lcm),
            num_rational::BigRational::from_integer(0.into()),
        );
        self.scale(&factor)
    }

    pub fn from_flat(rows: usize, cols: usize, data: QVec) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn to_float(&self) -> nalgebra::DMatrix<Complex64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].to_c64())
    }

    /// Reduced row echelon form; returns the pivot column indices.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv();
            for j in c..self.cols {
                let v = (&self[(r, j)]).mul(&inv);
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = (&self[(r, j)]).mul(&f);
                        self[(i, j)] -= &v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right kernel `{x : Ax = 0}`.
    pub fn kernel(&self) -> Vec<QVec> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![ExactComplex::zero(); self.cols];
            v[free] = ExactComplex::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[(r, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `Ax = b`, if consistent.
    pub fn solve(&self, b: &[ExactComplex]) -> Option<QVec> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![ExactComplex::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse for a square matrix of full rank.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                ExactComplex::one()
            } else {
                ExactComplex::zero()
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = ExactComplex;
    fn index(&self, (i, j): (usize, usize)) -> &ExactComplex {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactComplex {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained row-echelon span of vectors in `ℚ(i)ᵐ`.
///
/// Rows are kept reduced so that membership tests and residual
/// computations are a single elimination pass.
#[derive(Clone, Debug)]
pub struct Span {
    ambient: usize,
    rows: Vec<QVec>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(ambient: usize, vs: impl IntoIterator<Item = QVec>) -> Self {
        let mut s = Self::new(ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.rows.is_empty()
    }

    /// Echelonized basis rows.
    pub fn basis(&self) -> &[QVec] {
        &self.rows
    }

    /// Residual of `v` after eliminating against the span; zero iff `v`
    /// lies in the span. The map `v ↦ residual(v)` is linear.
    pub fn reduce(&self, v: &[ExactComplex]) -> QVec {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for j in 0..self.ambient {
                    if !row[j].is_zero() {
                        let t = (&row[j]).mul(&f);
                        w[j] -= &t;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[ExactComplex]) -> bool {
        self.reduce(v).iter().all(ExactComplex::is_zero)
    }

    /// Adds `v` to the span; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: QVec) -> bool {
        let mut w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        // Back-substitute into existing rows to keep full reduction.
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for j in 0..self.ambient {
                    if !w[j].is_zero() {
                        let t = (&w[j]).mul(&f);
                        row[j] -= &t;
                    }
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.rows.len());
        self.rows.insert(at, w);
        self.pivots.insert(at, p);
        true
    }

    pub fn same_span(&self, other: &Span) -> bool {
        self.dim() == other.dim() && other.rows.iter().all(|r| self.contains(r))
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Expresses `v` in terms of the given (independent) columns, if possible.
pub fn coordinates_in(basis: &[QVec], v: &[ExactComplex]) -> Result<Option<QVec>> {
    if basis.is_empty() {
        return Ok(if v.iter().all(ExactComplex::is_zero) {
            Some(Vec::new())
        } else {
            None
        });
    }
    let ambient = basis[0].len();
    if v.len() != ambient {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} vs ambient {}",
            v.len(),
            ambient
        )));
    }
    let m = QMat::from_fn(ambient, basis.len(), |i, j| basis[j][i].clone());
    Ok(m.solve(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ec(n: i64) -> ExactComplex {
        ExactComplex::from_int(n)
    }

    #[test]
    fn rank_and_kernel() {
        // x + y + z = 0 has a 2-dimensional kernel.
        let m = QMat::from_ints(&[&[1, 1, 1]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = v.iter().fold(ExactComplex::zero(), |acc, x| acc + x.clone());
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = QMat::from_ints(&[&[2, 1], &[1, 1]]);
        let b = vec![ec(3), ec(2)];
        let x = m.solve(&b).unwrap();
        assert_eq!(x, vec![ec(1), ec(1)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMat::identity(2));

        let singular = QMat::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&[ec(1), ec(0)]).is_none());
    }

    #[test]
    fn span_membership_and_growth() {
        let mut s = Span::new(3);
        assert!(s.insert(vec![ec(1), ec(2), ec(0)]));
        assert!(s.insert(vec![ec(0), ec(1), ec(1)]));
        assert!(!s.insert(vec![ec(1), ec(3), ec(1)]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[ec(2), ec(5), ec(1)]));
        assert!(!s.contains(&[ec(0), ec(0), ec(1)]));
    }

    #[test]
    fn coordinates_round_trip() {
        let b1 = vec![ec(1), ec(0), ec(1)];
        let b2 = vec![ec(0), ec(1), ec(1)];
        let v = vec![ec(2), ec(3), ec(5)];
        let coords = coordinates_in(&[b1.clone(), b2.clone()], &v).unwrap().unwrap();
        assert_eq!(coords, vec![ec(2), ec(3)]);
        let outside = vec![ec(1), ec(0), ec(0)];
        assert!(coordinates_in(&[b1, b2], &outside).unwrap().is_none());
    }

    #[test]
    fn complex_pivoting() {
        let i = ExactComplex::i();
        let m = QMat::from_rows(vec![vec![i.clone(), ec(1)], vec![ec(-1), i.clone()]]);
        // Second row is i times the first: rank 1.
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel().len(), 1);
    }
}
