//! Matrix representations of a Lie algebra and the associative algebras
//! they generate: validation, associative closures, nilpotency degrees,
//! Jacobson radical via the trace form, and radical-containment checks.
//!
//! Two arithmetic modes coexist. Exact mode decides nilpotency and rank
//! questions over `ℚ(i)` with zero tolerance; float mode exists for norm
//! experiments and uses the thresholds below, with every numeric verdict
//! flagged as such.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::ExactComplex;
use crate::lie::{unit_vector, LieAlgebra, Subspace};
use crate::linalg::{QMat, Span};

/// Relative zero threshold for float-mode nilpotency decisions.
pub const TAU_NIL: f64 = 1e-9;
/// Spectral-radius threshold below which a float matrix is accepted as
/// quasinilpotent (equivalently, nilpotent in finite dimension).
pub const TAU_SPEC: f64 = 1e-8;
/// Residual tolerance for float-mode bracket-identity validation.
pub const TAU_REP: f64 = 1e-8;
/// Rank threshold for float-mode span computations.
pub const TAU_RANK: f64 = 1e-9;

pub type FMat = DMatrix<Complex64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

/// A square complex matrix in either exact or float mode.
#[derive(Clone, Debug)]
pub enum CMatrix {
    Exact(QMat),
    Float(FMat),
}

impl CMatrix {
    pub fn mode(&self) -> Mode {
        match self {
            CMatrix::Exact(_) => Mode::Exact,
            CMatrix::Float(_) => Mode::Float,
        }
    }

    pub fn ambient(&self) -> usize {
        match self {
            CMatrix::Exact(m) => m.rows(),
            CMatrix::Float(m) => m.nrows(),
        }
    }

    pub fn zero(n: usize) -> Self {
        CMatrix::Exact(QMat::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        CMatrix::Exact(QMat::identity(n))
    }

    /// Matrix unit `E_{ij}` (0-based) in `n×n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        m[(i, j)] = ExactComplex::one();
        CMatrix::Exact(m)
    }

    /// Nilpotent Jordan block of size `d` (ones on the superdiagonal).
    pub fn jordan_block(d: usize) -> Self {
        let mut m = QMat::zeros(d, d);
        for i in 0..d.saturating_sub(1) {
            m[(i, i + 1)] = ExactComplex::one();
        }
        CMatrix::Exact(m)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        CMatrix::Exact(QMat::from_ints(rows))
    }

    pub fn to_float(&self) -> FMat {
        match self {
            CMatrix::Exact(m) => m.to_float(),
            CMatrix::Float(m) => m.clone(),
        }
    }

    pub fn into_float_mode(self) -> CMatrix {
        match self {
            CMatrix::Exact(m) => CMatrix::Float(m.to_float()),
            f => f,
        }
    }

    pub fn as_exact(&self) -> Option<&QMat> {
        match self {
            CMatrix::Exact(m) => Some(m),
            CMatrix::Float(_) => None,
        }
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        match (self, other) {
            (CMatrix::Exact(a), CMatrix::Exact(b)) => CMatrix::Exact(a.mul(b)),
            (a, b) => CMatrix::Float(a.to_float() * b.to_float()),
        }
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        match (self, other) {
            (CMatrix::Exact(a), CMatrix::Exact(b)) => CMatrix::Exact(a.add(b)),
            (a, b) => CMatrix::Float(a.to_float() + b.to_float()),
        }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        match (self, other) {
            (CMatrix::Exact(a), CMatrix::Exact(b)) => CMatrix::Exact(a.sub(b)),
            (a, b) => CMatrix::Float(a.to_float() - b.to_float()),
        }
    }

    pub fn scale_exact(&self, c: &ExactComplex) -> CMatrix {
        match self {
            CMatrix::Exact(m) => CMatrix::Exact(m.scale(c)),
            CMatrix::Float(m) => CMatrix::Float(m * c.to_c64()),
        }
    }

    pub fn pow(&self, e: usize) -> CMatrix {
        match self {
            CMatrix::Exact(m) => CMatrix::Exact(m.pow(e)),
            CMatrix::Float(m) => {
                let n = m.nrows();
                let mut acc = FMat::identity(n, n);
                for _ in 0..e {
                    acc = &acc * m;
                }
                CMatrix::Float(acc)
            }
        }
    }

    pub fn trace(&self) -> Complex64 {
        match self {
            CMatrix::Exact(m) => m.trace().to_c64(),
            CMatrix::Float(m) => m.trace(),
        }
    }

    pub fn commutator(&self, other: &CMatrix) -> CMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_exactly_zero(&self) -> bool {
        match self {
            CMatrix::Exact(m) => m.is_zero(),
            CMatrix::Float(m) => m.iter().all(|z| z.norm() == 0.0),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.to_float().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

pub fn frobenius(m: &FMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Upper estimate of the spectral radius of a float matrix via
/// `min_m ‖b^m‖^{1/m}` over doubling powers. The estimate is exactly zero
/// for matrices that are nilpotent in float arithmetic (e.g. strictly
/// triangular data) and stays near the true spectral radius otherwise.
/// Noisy similarity transforms of nilpotent matrices can defeat any float
/// spectral method, which is why verdicts prefer exact mode.
pub fn spectral_radius_estimate(m: &FMat) -> f64 {
    let n = m.nrows();
    if n == 0 {
        return 0.0;
    }
    let norm = frobenius(m);
    if norm == 0.0 {
        return 0.0;
    }
    let scaled = m / Complex64::new(norm, 0.0);
    let mut best = 1.0f64;
    let mut p = scaled.clone();
    let mut e = 1u32;
    while (1usize << e.saturating_sub(1)) <= 2 * n {
        p = &p * &p;
        e += 1;
        let pn = frobenius(&p);
        if pn == 0.0 {
            return 0.0;
        }
        best = best.min(pn.powf(1.0 / f64::from(1u32 << (e - 1))));
    }
    best * norm
}

/// Gaussian-integer matrix with `i128` parts: a fast exact path for
/// nilpotency powering. Overflow falls back to full rational arithmetic.
#[derive(Clone)]
struct GaussIntMat {
    n: usize,
    re: Vec<i128>,
    im: Vec<i128>,
}

impl GaussIntMat {
    fn from_qmat(m: &QMat) -> Option<Self> {
        use num_traits::ToPrimitive;
        let n = m.rows();
        let mut re = Vec::with_capacity(n * n);
        let mut im = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let e = &m[(i, j)];
                if !e.re.is_integer() || !e.im.is_integer() {
                    return None;
                }
                re.push(e.re.numer().to_i128()?);
                im.push(e.im.numer().to_i128()?);
            }
        }
        Some(Self { n, re, im })
    }

    fn is_zero(&self) -> bool {
        self.re.iter().all(|&x| x == 0) && self.im.iter().all(|&x| x == 0)
    }

    fn mul_checked(&self, other: &Self) -> Option<Self> {
        let n = self.n;
        let mut re = vec![0i128; n * n];
        let mut im = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let (ar, ai) = (self.re[i * n + k], self.im[i * n + k]);
                if ar == 0 && ai == 0 {
                    continue;
                }
                for j in 0..n {
                    let (br, bi) = (other.re[k * n + j], other.im[k * n + j]);
                    if br == 0 && bi == 0 {
                        continue;
                    }
                    let pr = ar.checked_mul(br)?.checked_sub(ai.checked_mul(bi)?)?;
                    let pi = ar.checked_mul(bi)?.checked_add(ai.checked_mul(br)?)?;
                    re[i * n + j] = re[i * n + j].checked_add(pr)?;
                    im[i * n + j] = im[i * n + j].checked_add(pi)?;
                }
            }
        }
        Some(Self { n, re, im })
    }
}

/// Smallest `d ≤ n` with `b^d = 0`, or `None` when `b` is not nilpotent.
/// Exact matrices are decided exactly; float matrices use the spectral
/// estimate plus relative residual thresholds.
pub fn element_nilpotency_degree(b: &CMatrix) -> Option<usize> {
    let n = b.ambient();
    match b {
        CMatrix::Exact(m) => {
            // Degree is invariant under scaling, so clear denominators and
            // try the machine-integer path first; only overflow falls back
            // to full rational powering.
            let cleared = m.denominator_cleared();
            if let Some(base) = GaussIntMat::from_qmat(&cleared) {
                let mut p = base.clone();
                let mut overflow = false;
                for d in 1..=n {
                    if p.is_zero() {
                        return Some(d);
                    }
                    if d == n {
                        return None;
                    }
                    match p.mul_checked(&base) {
                        Some(next) => p = next,
                        None => {
                            overflow = true;
                            break;
                        }
                    }
                }
                if !overflow {
                    return None;
                }
            }
            let mut p = QMat::identity(n);
            for d in 1..=n {
                p = p.mul(m);
                if p.is_zero() {
                    return Some(d);
                }
            }
            None
        }
        CMatrix::Float(m) => {
            if spectral_radius_estimate(m) > TAU_SPEC {
                return None;
            }
            let norm = frobenius(m);
            let mut p = m.clone();
            for d in 1..=n {
                if frobenius(&p) <= TAU_NIL * norm.powi(d as i32).max(1.0) {
                    return Some(d);
                }
                p = &p * m;
            }
            None
        }
    }
}

/// Span of flattened matrices, dispatching on arithmetic mode.
#[derive(Clone, Debug)]
pub enum MatSpan {
    Exact(Span),
    Float(FloatSpan),
}

impl MatSpan {
    pub fn new(ambient_matrix_dim: usize, mode: Mode) -> Self {
        let len = ambient_matrix_dim * ambient_matrix_dim;
        match mode {
            Mode::Exact => MatSpan::Exact(Span::new(len)),
            Mode::Float => MatSpan::Float(FloatSpan::new(len)),
        }
    }

    pub fn insert(&mut self, m: &CMatrix) -> bool {
        match (self, m) {
            (MatSpan::Exact(s), CMatrix::Exact(q)) => s.insert(q.flatten()),
            (MatSpan::Float(s), m) => {
                let f = m.to_float();
                s.insert(f.iter().copied().collect())
            }
            (MatSpan::Exact(_), CMatrix::Float(_)) => {
                panic!("cannot insert float matrix into exact span")
            }
        }
    }

    pub fn contains(&self, m: &CMatrix) -> bool {
        match (self, m) {
            (MatSpan::Exact(s), CMatrix::Exact(q)) => s.contains(&q.flatten()),
            (MatSpan::Float(s), m) => {
                let f = m.to_float();
                s.contains(&f.iter().copied().collect::<Vec<_>>())
            }
            (MatSpan::Exact(_), CMatrix::Float(_)) => false,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            MatSpan::Exact(s) => s.dim(),
            MatSpan::Float(s) => s.dim(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }
}

/// Orthonormal float span with a relative rank threshold.
#[derive(Clone, Debug)]
pub struct FloatSpan {
    ambient: usize,
    rows: Vec<Vec<Complex64>>,
}

impl FloatSpan {
    pub fn new(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new() }
    }

    fn project_out(&self, v: &mut [Complex64]) {
        for row in &self.rows {
            let dot: Complex64 = row.iter().zip(v.iter()).map(|(r, x)| r.conj() * x).sum();
            for (x, r) in v.iter_mut().zip(row.iter()) {
                *x -= dot * r;
            }
        }
    }

    pub fn insert(&mut self, v: Vec<Complex64>) -> bool {
        assert_eq!(v.len(), self.ambient);
        let scale = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if scale == 0.0 {
            return false;
        }
        let mut w = v;
        // Project twice for numerical stability.
        self.project_out(&mut w);
        self.project_out(&mut w);
        let res = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if res <= TAU_RANK * scale.max(1.0) {
            return false;
        }
        for x in w.iter_mut() {
            *x /= Complex64::new(res, 0.0);
        }
        self.rows.push(w);
        true
    }

    pub fn contains(&self, v: &[Complex64]) -> bool {
        let scale = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if scale == 0.0 {
            return true;
        }
        let mut w = v.to_vec();
        self.project_out(&mut w);
        self.project_out(&mut w);
        let res = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        res <= TAU_RANK * scale.max(1.0)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// A map from Lie algebra basis elements to `N×N` matrices.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    algebra: LieAlgebra,
    n: usize,
    mats: Vec<CMatrix>,
    mode: Mode,
}

impl MatrixRep {
    /// Bundles the data without validating the bracket identity;
    /// call [`MatrixRep::validate`] for that. Mixed-mode inputs are
    /// promoted to float so the mode is uniform.
    pub fn new(algebra: LieAlgebra, mats: Vec<CMatrix>) -> Result<Self> {
        if mats.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} matrices, got {}",
                algebra.dim(),
                mats.len()
            )));
        }
        let n = mats.first().map_or(0, CMatrix::ambient);
        if n == 0 {
            return Err(Error::InvalidRep("representation dimension is zero".into()));
        }
        for m in &mats {
            match m {
                CMatrix::Exact(q) if q.is_square() && q.rows() == n => {}
                CMatrix::Float(f) if f.is_square() && f.nrows() == n => {}
                _ => {
                    return Err(Error::DimensionMismatch(
                        "representation matrices must be square of equal size".into(),
                    ))
                }
            }
        }
        let mode = if mats.iter().all(|m| m.mode() == Mode::Exact) {
            Mode::Exact
        } else {
            Mode::Float
        };
        let mats = if mode == Mode::Float {
            mats.into_iter().map(CMatrix::into_float_mode).collect()
        } else {
            mats
        };
        Ok(Self { algebra, n, mats, mode })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn rep_dim(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.mats
    }

    /// Checks `ρ([e_i, e_j]) = ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i)` on all basis
    /// pairs; reports the first violating pair with its residual norm.
    pub fn validate(&self) -> Result<()> {
        let d = self.algebra.dim();
        for i in 0..d {
            for j in (i + 1)..d {
                let lhs = self
                    .apply(&self.algebra.bracket(&unit_vector(d, i), &unit_vector(d, j))?)?;
                let rhs = self.mats[i].commutator(&self.mats[j]);
                let diff = lhs.sub(&rhs);
                let ok = match self.mode {
                    Mode::Exact => diff.is_exactly_zero(),
                    Mode::Float => {
                        let scale =
                            1.0 + self.mats[i].frobenius_norm() * self.mats[j].frobenius_norm();
                        diff.frobenius_norm() <= TAU_REP * scale
                    }
                };
                if !ok {
                    return Err(Error::InvalidRep(format!(
                        "bracket identity fails on basis pair ({i},{j}), residual {:.3e}",
                        diff.frobenius_norm()
                    )));
                }
            }
        }
        Ok(())
    }

    /// `ρ(η)` for a coordinate vector `η` over the algebra basis.
    pub fn apply(&self, coords: &[ExactComplex]) -> Result<CMatrix> {
        if coords.len() != self.algebra.dim() {
            return Err(Error::DimensionMismatch(
                "coordinate vector length does not match algebra dimension".into(),
            ));
        }
        match self.mode {
            Mode::Exact => {
                let mut acc = QMat::zeros(self.n, self.n);
                for (c, m) in coords.iter().zip(&self.mats) {
                    if !c.is_zero() {
                        acc = acc.add(&m.as_exact().expect("exact mode").scale(c));
                    }
                }
                Ok(CMatrix::Exact(acc))
            }
            Mode::Float => {
                let mut acc = FMat::zeros(self.n, self.n);
                for (c, m) in coords.iter().zip(&self.mats) {
                    acc += m.to_float() * c.to_c64();
                }
                Ok(CMatrix::Float(acc))
            }
        }
    }

    /// Block-diagonal direct sum with another representation of the same
    /// algebra.
    pub fn direct_sum(&self, other: &MatrixRep) -> Result<MatrixRep> {
        if self.algebra != other.algebra {
            return Err(Error::InvalidRep(
                "direct sum requires representations of the same algebra".into(),
            ));
        }
        let n = self.n + other.n;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| match (a, b) {
                (CMatrix::Exact(a), CMatrix::Exact(b)) => {
                    let mut m = QMat::zeros(n, n);
                    for i in 0..a.rows() {
                        for j in 0..a.cols() {
                            m[(i, j)] = a[(i, j)].clone();
                        }
                    }
                    for i in 0..b.rows() {
                        for j in 0..b.cols() {
                            m[(self.n + i, self.n + j)] = b[(i, j)].clone();
                        }
                    }
                    CMatrix::Exact(m)
                }
                (a, b) => {
                    let (fa, fb) = (a.to_float(), b.to_float());
                    let mut m = FMat::zeros(n, n);
                    m.view_mut((0, 0), (self.n, self.n)).copy_from(&fa);
                    m.view_mut((self.n, self.n), (other.n, other.n)).copy_from(&fb);
                    CMatrix::Float(m)
                }
            })
            .collect();
        MatrixRep::new(self.algebra.clone(), mats)
    }

    /// Conjugates every matrix by an exact invertible `p`.
    pub fn conjugate(&self, p: &QMat) -> Result<MatrixRep> {
        let p_inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidRep("conjugating matrix is singular".into()))?;
        let mats = self
            .mats
            .iter()
            .map(|m| match m {
                CMatrix::Exact(q) => Ok(CMatrix::Exact(p.mul(q).mul(&p_inv))),
                CMatrix::Float(_) => Err(Error::InvalidRep(
                    "exact conjugation requires an exact representation".into(),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        MatrixRep::new(self.algebra.clone(), mats)
    }
}

/// A multiplicatively closed span of `N×N` matrices with an explicit basis.
#[derive(Clone, Debug)]
pub struct AssocAlgebra {
    ambient: usize,
    basis: Vec<CMatrix>,
    span: MatSpan,
    unital: bool,
    numeric: bool,
}

impl AssocAlgebra {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[CMatrix] {
        &self.basis
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    /// True when any verdict about this algebra was made with float
    /// tolerances rather than exact arithmetic.
    pub fn is_numeric(&self) -> bool {
        self.numeric
    }

    pub fn contains(&self, m: &CMatrix) -> bool {
        self.span.contains(m)
    }

    pub fn span(&self) -> &MatSpan {
        &self.span
    }
}

/// Closes a set of matrices under span and multiplication. With
/// `unital = true` the identity is adjoined first. Terminates because the
/// span dimension is bounded by `N²`.
pub fn associative_closure(gens: &[CMatrix], unital: bool) -> Result<AssocAlgebra> {
    let ambient = match gens.first() {
        Some(g) => g.ambient(),
        None => 0,
    };
    if gens.iter().any(|g| g.ambient() != ambient) {
        return Err(Error::DimensionMismatch(
            "closure generators must share an ambient dimension".into(),
        ));
    }
    let mode = if gens.iter().any(|g| g.mode() == Mode::Float) {
        Mode::Float
    } else {
        Mode::Exact
    };
    if ambient == 0 {
        // Zero generators: the zero algebra in an unusable ambient; callers
        // with a real ambient should pass it via an explicit zero matrix.
        return Ok(AssocAlgebra {
            ambient: 0,
            basis: Vec::new(),
            span: MatSpan::new(0, mode),
            unital,
            numeric: mode == Mode::Float,
        });
    }

    let mut span = MatSpan::new(ambient, mode);
    let mut basis: Vec<CMatrix> = Vec::new();
    let push = |m: CMatrix, span: &mut MatSpan, basis: &mut Vec<CMatrix>| -> bool {
        let m = if mode == Mode::Float { m.into_float_mode() } else { m };
        if span.insert(&m) {
            basis.push(m);
            true
        } else {
            false
        }
    };

    if unital {
        push(CMatrix::identity(ambient), &mut span, &mut basis);
    }
    let mut frontier: Vec<usize> = Vec::new();
    for g in gens {
        let before = basis.len();
        if push(g.clone(), &mut span, &mut basis) {
            frontier.push(before);
        }
    }

    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &fi in &frontier {
            for bi in 0..basis.len() {
                for (a, b) in [(fi, bi), (bi, fi)] {
                    let prod = basis[a].mul(&basis[b]);
                    let before = basis.len();
                    if push(prod, &mut span, &mut basis) {
                        next.push(before);
                    }
                }
            }
        }
        frontier = next;
    }

    Ok(AssocAlgebra {
        ambient,
        basis,
        span,
        unital,
        numeric: mode == Mode::Float,
    })
}

/// Smallest `d` with every product of `d` basis elements zero, or `None`
/// when the algebra is not nilpotent. Requires a multiplicatively closed
/// basis (any [`AssocAlgebra`]); then the power spans decrease, so the
/// chain either hits zero or stabilizes at a nonzero span.
pub fn algebra_nilpotency_degree(a: &AssocAlgebra) -> Option<usize> {
    if a.basis.is_empty() {
        return Some(1);
    }
    let mode = if a.numeric { Mode::Float } else { Mode::Exact };
    let mut current: Vec<CMatrix> = a.basis.clone();
    let mut current_span = MatSpan::new(a.ambient, mode);
    for m in &current {
        current_span.insert(m);
    }
    let mut degree = 1usize;
    loop {
        if current_span.is_trivial() {
            return Some(degree);
        }
        let mut next_span = MatSpan::new(a.ambient, mode);
        let mut next: Vec<CMatrix> = Vec::new();
        for p in &current {
            for b in &a.basis {
                let prod = p.mul(b);
                if next_span.insert(&prod) {
                    next.push(prod);
                }
            }
        }
        if next_span.dim() == current_span.dim() && next.iter().all(|m| current_span.contains(m)) {
            // Stabilized at a nonzero span.
            return None;
        }
        current = next;
        current_span = next_span;
        degree += 1;
    }
}

/// Jacobson radical via the trace bilinear form of the given faithful
/// matrix realization: `{a ∈ A : tr(ab) = 0 for all b ∈ A}`. Valid over
/// characteristic zero; the result is a nilpotent ideal.
pub fn jacobson_radical(a: &AssocAlgebra) -> Result<AssocAlgebra> {
    let d = a.basis.len();
    if d == 0 {
        return Ok(a.clone());
    }
    if a.numeric {
        return jacobson_radical_float(a);
    }
    let gram = QMat::from_fn(d, d, |i, j| {
        let bi = a.basis[i].as_exact().expect("exact basis");
        let bj = a.basis[j].as_exact().expect("exact basis");
        bi.mul(bj).trace()
    });
    let kernel = gram.kernel();
    let mut basis = Vec::new();
    let mut span = MatSpan::new(a.ambient, Mode::Exact);
    for coeffs in kernel {
        let mut m = QMat::zeros(a.ambient, a.ambient);
        for (c, b) in coeffs.iter().zip(&a.basis) {
            if !c.is_zero() {
                m = m.add(&b.as_exact().expect("exact basis").scale(c));
            }
        }
        let cm = CMatrix::Exact(m);
        if span.insert(&cm) {
            basis.push(cm);
        }
    }
    Ok(AssocAlgebra {
        ambient: a.ambient,
        basis,
        span,
        unital: false,
        numeric: false,
    })
}

fn jacobson_radical_float(a: &AssocAlgebra) -> Result<AssocAlgebra> {
    let d = a.basis.len();
    let floats: Vec<FMat> = a.basis.iter().map(CMatrix::to_float).collect();
    let gram = FMat::from_fn(d, d, |i, j| (&floats[i] * &floats[j]).trace());
    let svd = gram.clone().svd(true, true);
    let vt = svd.v_t.as_ref().expect("svd with vt");
    let smax = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let mut basis = Vec::new();
    let mut span = MatSpan::new(a.ambient, Mode::Float);
    for (k, s) in svd.singular_values.iter().enumerate() {
        if *s > TAU_RANK * smax.max(1.0) {
            continue;
        }
        let coeffs = vt.row(k);
        let mut m = FMat::zeros(a.ambient, a.ambient);
        for (c, b) in coeffs.iter().zip(&floats) {
            m += b * c.conj();
        }
        let cm = CMatrix::Float(m);
        if span.insert(&cm) {
            basis.push(cm);
        }
    }
    // Singular vectors with exactly-zero singular values also live in V,
    // beyond the rows enumerated above when the Gram matrix is rank
    // deficient in shape; nalgebra returns a full square V here, so the
    // loop above already saw every direction.
    Ok(AssocAlgebra {
        ambient: a.ambient,
        basis,
        span,
        unital: false,
        numeric: true,
    })
}

/// Outcome of a radical-containment check.
#[derive(Clone, Debug)]
pub struct RadicalContainment {
    pub checked: usize,
    pub radical_dim: usize,
    pub counterexample: Option<Vec<ExactComplex>>,
}

impl RadicalContainment {
    pub fn ok(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Verifies `ρ(η) ∈ Rad A` for every basis vector of the nilpotent
/// radical and for the supplied extra sample coordinates, where `A` is
/// the unital algebra generated by the image of the Lie algebra.
pub fn radical_containment_check(
    rep: &MatrixRep,
    nil_rad: &Subspace,
    extra_samples: &[Vec<ExactComplex>],
) -> Result<RadicalContainment> {
    let mut gens: Vec<CMatrix> = vec![CMatrix::identity(rep.rep_dim())];
    gens.extend(rep.matrices().iter().cloned());
    let a = associative_closure(&gens, true)?;
    let rad = jacobson_radical(&a)?;
    let mut checked = 0usize;
    for eta in nil_rad.basis().iter().chain(extra_samples.iter()) {
        let image = rep.apply(eta)?;
        checked += 1;
        if !rad.contains(&image) && !image.is_exactly_zero() {
            return Ok(RadicalContainment {
                checked,
                radical_dim: rad.dim(),
                counterexample: Some(eta.clone()),
            });
        }
    }
    Ok(RadicalContainment {
        checked,
        radical_dim: rad.dim(),
        counterexample: None,
    })
}
