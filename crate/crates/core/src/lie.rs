//! Structure theory of finite-dimensional complex Lie algebras given by
//! structure constants: brackets, Killing form, solvable radical,
//! nilpotent radical, Levi subalgebra and classification flags.
//!
//! All decisions here are exact over `ℚ(i)`. The solvable radical is the
//! Killing-orthogonal complement of the derived subalgebra (valid in
//! characteristic zero), the nilpotent radical is `[g, r]`, and the Levi
//! subalgebra is found by lifting a vector-space complement of `r` along
//! the derived series of `r`, solving one exact linear system per step.

use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactComplex;
use crate::linalg::{coordinates_in, QMat, QVec, Span};

/// A finite-dimensional complex Lie algebra presented by its structure
/// constants `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Vec<Vec<ExactComplex>>>,
    names: Vec<String>,
}

/// A subspace of a Lie algebra, stored as an echelonized basis of
/// coordinate vectors. The ambient dimension ties it to its parent.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    span: Span,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, span: Span::new(ambient) }
    }

    pub fn from_vectors(ambient: usize, vs: impl IntoIterator<Item = QVec>) -> Self {
        Self { ambient, span: Span::from_vectors(ambient, vs) }
    }

    pub fn full(ambient: usize) -> Self {
        let vs = (0..ambient).map(|i| unit_vector(ambient, i));
        Self::from_vectors(ambient, vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.span.is_trivial()
    }

    pub fn basis(&self) -> &[QVec] {
        self.span.basis()
    }

    pub fn contains(&self, v: &[ExactComplex]) -> bool {
        self.span.contains(v)
    }

    pub fn span(&self) -> &Span {
        &self.span
    }

    pub fn same_span(&self, other: &Subspace) -> bool {
        self.span.same_span(&other.span)
    }
}

pub fn unit_vector(n: usize, i: usize) -> QVec {
    let mut v = vec![ExactComplex::zero(); n];
    v[i] = ExactComplex::one();
    v
}

/// Classification flags and the dimensions of the three canonical pieces.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StructureReport {
    pub dim: usize,
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_semisimple: bool,
    pub is_reductive: bool,
    pub radical_dim: usize,
    pub nil_radical_dim: usize,
    pub levi_dim: usize,
}

impl LieAlgebra {
    /// Builds the algebra from a full structure tensor, validating
    /// antisymmetry and the Jacobi identity exactly.
    pub fn from_tensor(
        c: Vec<Vec<Vec<ExactComplex>>>,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        let dim = c.len();
        if dim == 0 {
            return Err(Error::InvalidStructure("dimension must be positive".into()));
        }
        if c.iter().any(|p| p.len() != dim) || c.iter().flatten().any(|q| q.len() != dim) {
            return Err(Error::InvalidStructure("structure tensor is not n×n×n".into()));
        }
        let names = match names {
            Some(ns) => {
                if ns.len() != dim {
                    return Err(Error::InvalidStructure("names length mismatch".into()));
                }
                ns
            }
            None => (0..dim).map(|i| format!("e{}", i + 1)).collect(),
        };
        let alg = Self { dim, c, names };
        alg.check_antisymmetry()?;
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Builds from sparse entries `(i, j, k, value)` with `i < j`; the
    /// antisymmetric completion is implied.
    pub fn from_entries(
        dim: usize,
        entries: &[(usize, usize, usize, ExactComplex)],
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut c = vec![vec![vec![ExactComplex::zero(); dim]; dim]; dim];
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::InvalidStructure(format!(
                    "index out of range in entry ({i},{j},{k})"
                )));
            }
            if i >= j {
                return Err(Error::InvalidStructure(format!(
                    "entries must have i < j, got ({i},{j})"
                )));
            }
            c[*i][*j][*k] = (&c[*i][*j][*k]).add(v);
            c[*j][*i][*k] = -&c[*i][*j][*k];
        }
        Self::from_tensor(c, names)
    }

    fn check_antisymmetry(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let s = (&self.c[i][j][k]).add(&self.c[j][i][k]);
                    if !s.is_zero() {
                        return Err(Error::InvalidStructure(format!(
                            "antisymmetry fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_jacobi(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let ei = unit_vector(self.dim, i);
                    let ej = unit_vector(self.dim, j);
                    let ek = unit_vector(self.dim, k);
                    let mut total = vec![ExactComplex::zero(); self.dim];
                    for (a, b, cc) in [(&ei, &ej, &ek), (&ej, &ek, &ei), (&ek, &ei, &ej)] {
                        let inner = self.bracket(a, b)?;
                        let term = self.bracket(&inner, cc)?;
                        for (t, x) in total.iter_mut().zip(term.iter()) {
                            *t += x;
                        }
                    }
                    if total.iter().any(|x| !x.is_zero()) {
                        return Err(Error::InvalidStructure(format!(
                            "Jacobi identity fails on basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &ExactComplex {
        &self.c[i][j][k]
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket(&self, x: &[ExactComplex], y: &[ExactComplex]) -> Result<QVec> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket expects vectors of length {}",
                self.dim
            )));
        }
        let mut out = vec![ExactComplex::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let f = (&x[i]).mul(&y[j]);
                for k in 0..self.dim {
                    if !self.c[i][j][k].is_zero() {
                        let t = (&f).mul(&self.c[i][j][k]);
                        out[k] += &t;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x` acting on coordinates: column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[ExactComplex]) -> Result<QMat> {
        let mut m = QMat::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &unit_vector(self.dim, j))?;
            for k in 0..self.dim {
                m[(k, j)] = col[k].clone();
            }
        }
        Ok(m)
    }

    /// Killing form `K(e_i, e_j) = tr(ad e_i · ad e_j)`, exact and symmetric.
    pub fn killing_form(&self) -> QMat {
        let ads: Vec<QMat> = (0..self.dim)
            .map(|i| self.ad(&unit_vector(self.dim, i)).expect("basis vector"))
            .collect();
        QMat::from_fn(self.dim, self.dim, |i, j| ads[i].mul(&ads[j]).trace())
    }

    /// Span of `[a, b]` over basis pairs of the two spans.
    pub fn bracket_span(&self, a: &Span, b: &Span) -> Result<Span> {
        let mut out = Span::new(self.dim);
        for x in a.basis() {
            for y in b.basis() {
                out.insert(self.bracket(x, y)?);
            }
        }
        Ok(out)
    }

    /// Derived subalgebra `[g, g]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        let span = self
            .bracket_span(full.span(), full.span())
            .expect("full span bracket");
        Subspace { ambient: self.dim, span }
    }

    /// Solvable radical `r = {x : K(x, y) = 0 for all y ∈ [g,g]}`.
    ///
    /// In characteristic zero this Killing-orthogonality kernel is exactly
    /// the largest solvable ideal, so one exact kernel computation decides it.
    pub fn solvable_radical(&self) -> Subspace {
        let derived = self.derived_subalgebra();
        if derived.is_zero() {
            return Subspace::full(self.dim);
        }
        let k = self.killing_form();
        // Row per derived-basis vector y: x ↦ K(x, y).
        let rows: Vec<QVec> = derived
            .basis()
            .iter()
            .map(|y| {
                (0..self.dim)
                    .map(|i| {
                        let mut acc = ExactComplex::zero();
                        for (l, yl) in y.iter().enumerate() {
                            if !yl.is_zero() {
                                let t = (&k[(i, l)]).mul(yl);
                                acc += &t;
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let m = QMat::from_rows(rows);
        Subspace::from_vectors(self.dim, m.kernel())
    }

    /// Nilpotent radical `n = [g, r]`.
    pub fn nilpotent_radical(&self) -> Subspace {
        let r = self.solvable_radical();
        let full = Subspace::full(self.dim);
        let span = self
            .bracket_span(full.span(), r.span())
            .expect("bracket span");
        Subspace { ambient: self.dim, span }
    }

    /// Derived series of a subspace: `s ⊇ [s,s] ⊇ [[s,s],[s,s]] ⊇ …`,
    /// listed down to (and including) the zero term when it terminates.
    pub fn derived_series(&self, start: &Subspace) -> Result<Vec<Span>> {
        let mut series = vec![start.span.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last)?;
            let stable = next.same_span(last);
            let zero = next.is_trivial();
            series.push(next);
            if zero || stable {
                break;
            }
        }
        Ok(series)
    }

    /// Lower central series `s ⊇ [s,s] ⊇ [s,[s,s]] ⊇ …` of a subspace,
    /// bracketing with the subspace itself on the left.
    pub fn lower_central_series(&self, start: &Subspace) -> Result<Vec<Span>> {
        let mut series = vec![start.span.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(&start.span, last)?;
            let stable = next.same_span(last);
            let zero = next.is_trivial();
            series.push(next);
            if zero || stable {
                break;
            }
        }
        Ok(series)
    }

    pub fn is_abelian(&self) -> bool {
        self.c
            .iter()
            .flatten()
            .flatten()
            .all(ExactComplex::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        let full = Subspace::full(self.dim);
        self.lower_central_series(&full)
            .map(|s| s.last().unwrap().is_trivial())
            .unwrap_or(false)
    }

    pub fn is_solvable(&self) -> bool {
        let full = Subspace::full(self.dim);
        self.derived_series(&full)
            .map(|s| s.last().unwrap().is_trivial())
            .unwrap_or(false)
    }

    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim
    }

    /// A Levi subalgebra: a semisimple complement of the solvable radical,
    /// closed under the bracket. Returns the zero subspace for solvable
    /// algebras. Construction: start from any vector-space complement of
    /// `r` and correct it along the derived series of `r`; each step
    /// solves an exact linear system whose solvability is guaranteed by
    /// Levi's theorem.
    pub fn levi_subalgebra(&self) -> Result<Subspace> {
        let r = self.solvable_radical();
        if r.is_zero() {
            return Ok(Subspace::full(self.dim));
        }
        if r.dim() == self.dim {
            return Ok(Subspace::zero(self.dim));
        }

        // Vector-space complement of r spanned by coordinate vectors.
        let mut comp_span = Span::from_vectors(self.dim, r.basis().iter().cloned());
        let mut x: Vec<QVec> = Vec::new();
        for i in 0..self.dim {
            let e = unit_vector(self.dim, i);
            if comp_span.insert(e.clone()) {
                x.push(e);
            }
        }
        let s_count = x.len();

        // Structure constants of g/r in the complement coordinates:
        // decompose [x_i, x_j] over (x_1..x_s, basis of r); the x-part is γ.
        let mut dec_cols: Vec<QVec> = x.clone();
        dec_cols.extend(r.basis().iter().cloned());
        let gamma: Vec<Vec<QVec>> = {
            let mut g = vec![vec![Vec::new(); s_count]; s_count];
            for i in 0..s_count {
                for j in 0..s_count {
                    let br = self.bracket(&x[i], &x[j])?;
                    let coords = coordinates_in(&dec_cols, &br)?.ok_or_else(|| {
                        Error::InvalidStructure("decomposition basis not spanning".into())
                    })?;
                    g[i][j] = coords[..s_count].to_vec();
                }
            }
            g
        };

        let series = self.derived_series(&r)?;
        // series[m] are ideals of g; the last entry is zero for solvable r.
        if !series.last().unwrap().is_trivial() {
            return Err(Error::InvalidStructure(
                "solvable radical has non-terminating derived series".into(),
            ));
        }

        for m in 0..series.len() - 1 {
            let rho_m = &series[m];
            let rho_next = &series[m + 1];
            if rho_m.is_trivial() {
                break;
            }
            let dm = rho_m.dim();
            let unknowns = s_count * dm;
            let b: Vec<&QVec> = rho_m.basis().iter().collect();

            // Equations: for each pair i<j, the defect
            //   r_ij + [a_i, x_j] + [x_i, a_j] − Σ_k γ_ij^k a_k ≡ 0 (mod ρ_{m+1})
            // is linear in the corrections a_i ∈ ρ_m.
            let mut rows: Vec<QVec> = Vec::new();
            let mut rhs: Vec<ExactComplex> = Vec::new();
            for i in 0..s_count {
                for j in (i + 1)..s_count {
                    let mut defect = self.bracket(&x[i], &x[j])?;
                    for k in 0..s_count {
                        let g = &gamma[i][j][k];
                        if g.is_zero() {
                            continue;
                        }
                        for (d, xv) in defect.iter_mut().zip(x[k].iter()) {
                            let t = g.mul(xv);
                            *d -= &t;
                        }
                    }
                    let defect_res = rho_next.reduce(&defect);

                    // Coefficient of unknown u[(k, t)] in each ambient coordinate.
                    let mut coeff_cols: Vec<QVec> =
                        vec![vec![ExactComplex::zero(); self.dim]; unknowns];
                    for t in 0..dm {
                        let adj = rho_next.reduce(&self.bracket(b[t], &x[j])?);
                        let col = &mut coeff_cols[i * dm + t];
                        for (cv, av) in col.iter_mut().zip(adj.iter()) {
                            *cv += av;
                        }
                        let adi = rho_next.reduce(&self.bracket(&x[i], b[t])?);
                        let col = &mut coeff_cols[j * dm + t];
                        for (cv, av) in col.iter_mut().zip(adi.iter()) {
                            *cv += av;
                        }
                        let bt_res = rho_next.reduce(b[t]);
                        for k in 0..s_count {
                            let g = &gamma[i][j][k];
                            if g.is_zero() {
                                continue;
                            }
                            let col = &mut coeff_cols[k * dm + t];
                            for (cv, bv) in col.iter_mut().zip(bt_res.iter()) {
                                let term = g.mul(bv);
                                *cv -= &term;
                            }
                        }
                    }
                    for coord in 0..self.dim {
                        rows.push(coeff_cols.iter().map(|c| c[coord].clone()).collect());
                        rhs.push(-&defect_res[coord]);
                    }
                }
            }

            if unknowns == 0 {
                continue;
            }
            let system = QMat::from_rows(rows);
            let sol = system.solve(&rhs).ok_or_else(|| {
                Error::InvalidStructure("Levi lifting system inconsistent".into())
            })?;
            for (i, xi) in x.iter_mut().enumerate() {
                for t in 0..dm {
                    let u = &sol[i * dm + t];
                    if u.is_zero() {
                        continue;
                    }
                    for (xv, bv) in xi.iter_mut().zip(b[t].iter()) {
                        let term = u.mul(bv);
                        *xv += &term;
                    }
                }
            }
        }

        // The lifted complement must now close exactly.
        let s = Subspace::from_vectors(self.dim, x.iter().cloned());
        for xi in &x {
            for xj in &x {
                if !s.contains(&self.bracket(xi, xj)?) {
                    return Err(Error::InvalidStructure(
                        "Levi lifting did not close under bracket".into(),
                    ));
                }
            }
        }
        Ok(s)
    }

    /// Structure constants of a bracket-closed subspace in its own basis.
    pub fn subalgebra_structure(&self, sub: &Subspace) -> Result<LieAlgebra> {
        let basis = sub.basis();
        let d = basis.len();
        if d == 0 {
            return Err(Error::InvalidStructure(
                "zero subspace has no Lie algebra structure".into(),
            ));
        }
        let mut c = vec![vec![vec![ExactComplex::zero(); d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                let br = self.bracket(&basis[i], &basis[j])?;
                let coords = coordinates_in(basis, &br)?.ok_or_else(|| {
                    Error::InvalidStructure("subspace is not closed under bracket".into())
                })?;
                c[i][j] = coords;
            }
        }
        LieAlgebra::from_tensor(c, None)
    }

    /// Direct sum with block-diagonal structure constants.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut c = vec![vec![vec![ExactComplex::zero(); n]; n]; n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    c[i][j][k] = self.c[i][j][k].clone();
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    c[self.dim + i][self.dim + j][self.dim + k] = other.c[i][j][k].clone();
                }
            }
        }
        let names = self
            .names
            .iter()
            .cloned()
            .chain(other.names.iter().map(|s| format!("{s}'")))
            .collect();
        LieAlgebra { dim: n, c, names }
    }

    /// Transports the structure constants to the basis given by the
    /// columns of `p` (which must be invertible).
    pub fn change_basis(&self, p: &QMat) -> Result<LieAlgebra> {
        if !p.is_square() || p.rows() != self.dim {
            return Err(Error::DimensionMismatch("basis change must be n×n".into()));
        }
        let p_inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidStructure("basis change matrix is singular".into()))?;
        let col = |m: &QMat, j: usize| -> QVec { (0..self.dim).map(|i| m[(i, j)].clone()).collect() };
        let mut c = vec![vec![vec![ExactComplex::zero(); self.dim]; self.dim]; self.dim];
        for a in 0..self.dim {
            for b in 0..self.dim {
                let br = self.bracket(&col(p, a), &col(p, b))?;
                // coordinates in the new basis: P⁻¹ · br
                for k in 0..self.dim {
                    let mut acc = ExactComplex::zero();
                    for l in 0..self.dim {
                        if !br[l].is_zero() {
                            let t = (&p_inv[(k, l)]).mul(&br[l]);
                            acc += &t;
                        }
                    }
                    c[a][b][k] = acc;
                }
            }
        }
        LieAlgebra::from_tensor(c, Some(self.names.clone()))
    }

    /// Full classification record.
    pub fn classify(&self) -> StructureReport {
        let r = self.solvable_radical();
        let n = self.nilpotent_radical();
        let s_dim = self.dim - r.dim();
        StructureReport {
            dim: self.dim,
            is_abelian: self.is_abelian(),
            is_nilpotent: self.is_nilpotent(),
            is_solvable: self.is_solvable(),
            is_semisimple: self.is_semisimple(),
            is_reductive: n.is_zero(),
            radical_dim: r.dim(),
            nil_radical_dim: n.dim(),
            levi_dim: s_dim,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ec(n: i64) -> ExactComplex {
        ExactComplex::from_int(n)
    }

    #[test]
    fn constructor_rejects_bad_tensors() {
        // Antisymmetry violation: c[0][1][0] = c[1][0][0] = 1.
        let mut c = vec![vec![vec![ExactComplex::zero(); 2]; 2]; 2];
        c[0][1][0] = ec(1);
        c[1][0][0] = ec(1);
        assert!(matches!(
            LieAlgebra::from_tensor(c, None),
            Err(Error::InvalidStructure(_))
        ));

        // Jacobi violation: [e1,e2]=e3, [e1,e3]=e1 (fails on (1,2,3)).
        let bad = LieAlgebra::from_entries(
            3,
            &[(0, 1, 2, ec(1)), (0, 2, 0, ec(1))],
            None,
        );
        assert!(matches!(bad, Err(Error::InvalidStructure(_))));
    }

    #[test]
    fn bracket_matches_structure_constants() {
        let aff = catalog::aff1();
        let e1 = unit_vector(2, 0);
        let e2 = unit_vector(2, 1);
        assert_eq!(aff.bracket(&e1, &e2).unwrap(), e2);
        // Antisymmetry on a combined vector.
        let x = vec![ec(2), ec(-3)];
        let xx = aff.bracket(&x, &x).unwrap();
        assert!(xx.iter().all(ExactComplex::is_zero));

        let heis = catalog::heisenberg();
        let z = heis
            .bracket(&unit_vector(3, 0), &unit_vector(3, 1))
            .unwrap();
        assert_eq!(z, unit_vector(3, 2));

        let err = aff.bracket(&unit_vector(3, 0), &unit_vector(3, 1));
        assert!(matches!(err, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn killing_form_values() {
        // sl2 in the (e, h, f) basis: K(h,h) = 8, K(e,f) = 4.
        let sl2 = catalog::sl2();
        let k = sl2.killing_form();
        assert_eq!(k[(1, 1)], ec(8));
        assert_eq!(k[(0, 2)], ec(4));
        assert_eq!(k[(0, 0)], ec(0));

        let heis = catalog::heisenberg();
        assert!(heis.killing_form().is_zero());

        let ab = catalog::abelian(2);
        assert!(ab.killing_form().is_zero());
    }

    #[test]
    fn killing_form_against_ad_oracle() {
        // Independent route: assemble ad matrices from bracket() on unit
        // vectors and take traces of explicit products.
        for alg in [catalog::sl2(), catalog::gl2(), catalog::heisenberg()] {
            let n = alg.dim();
            let k = alg.killing_form();
            for i in 0..n {
                for j in 0..n {
                    let adi = alg.ad(&unit_vector(n, i)).unwrap();
                    let adj = alg.ad(&unit_vector(n, j)).unwrap();
                    assert_eq!(k[(i, j)], adi.mul(&adj).trace());
                    assert_eq!(k[(i, j)], k[(j, i)]);
                }
            }
        }
    }

    #[test]
    fn radicals_on_catalog() {
        let sl2 = catalog::sl2();
        assert_eq!(sl2.solvable_radical().dim(), 0);
        assert_eq!(sl2.nilpotent_radical().dim(), 0);

        let heis = catalog::heisenberg();
        assert_eq!(heis.solvable_radical().dim(), 3);
        let n = heis.nilpotent_radical();
        assert_eq!(n.dim(), 1);
        assert!(n.contains(&unit_vector(3, 2)));

        let aff = catalog::aff1();
        assert_eq!(aff.solvable_radical().dim(), 2);
        let n = aff.nilpotent_radical();
        assert_eq!(n.dim(), 1);
        assert!(n.contains(&unit_vector(2, 1)));

        let gl2 = catalog::gl2();
        assert_eq!(gl2.solvable_radical().dim(), 1);
        // Radical of gl2 is the span of the identity: e11 + e22.
        let mut id = vec![ec(0); 4];
        id[0] = ec(1);
        id[3] = ec(1);
        assert!(gl2.solvable_radical().contains(&id));
        assert_eq!(gl2.nilpotent_radical().dim(), 0);
    }

    #[test]
    fn nil_radical_is_nilpotent_ideal_inside_radical() {
        for alg in catalog::all() {
            let l = &alg.algebra;
            let r = l.solvable_radical();
            let n = l.nilpotent_radical();
            assert!(n.span().is_subspace_of(r.span()), "{}: n ⊆ r", alg.name);
            let full = Subspace::full(l.dim());
            let gn = l.bracket_span(full.span(), n.span()).unwrap();
            assert!(gn.is_subspace_of(n.span()), "{}: [g,n] ⊆ n", alg.name);
            if !n.is_zero() {
                let lcs = l.lower_central_series(&n).unwrap();
                assert!(lcs.last().unwrap().is_trivial(), "{}: n nilpotent", alg.name);
            }
        }
    }

    #[test]
    fn levi_on_catalog() {
        let sl2 = catalog::sl2();
        assert_eq!(sl2.levi_subalgebra().unwrap().dim(), 3);

        let heis = catalog::heisenberg();
        assert_eq!(heis.levi_subalgebra().unwrap().dim(), 0);

        // gl2 = sl2 ⊕ C·I in the matrix-unit basis: the Levi complement is
        // not spanned by basis vectors, so the lifting actually works.
        let gl2 = catalog::gl2();
        let s = gl2.levi_subalgebra().unwrap();
        assert_eq!(s.dim(), 3);
        let sub = gl2.subalgebra_structure(&s).unwrap();
        assert!(sub.is_semisimple());
        let r = gl2.solvable_radical();
        assert_eq!(s.dim() + r.dim(), gl2.dim());
        // Complement: s ∩ r = 0 means joint span has full dimension.
        let mut joint = Span::new(4);
        for v in s.basis().iter().chain(r.basis()) {
            joint.insert(v.clone());
        }
        assert_eq!(joint.dim(), 4);
    }

    #[test]
    fn levi_on_mixed_sum() {
        let alg = catalog::sl2_h3();
        let s = alg.levi_subalgebra().unwrap();
        assert_eq!(s.dim(), 3);
        let sub = alg.subalgebra_structure(&s).unwrap();
        assert!(sub.is_semisimple());
    }

    #[test]
    fn classify_catalog() {
        let rep = catalog::sl2().classify();
        assert!(rep.is_semisimple && rep.is_reductive && rep.nil_radical_dim == 0);

        let rep = catalog::heisenberg().classify();
        assert!(rep.is_nilpotent && rep.is_solvable && rep.nil_radical_dim == 1);
        assert!(!rep.is_semisimple);

        let rep = catalog::abelian(2).classify();
        assert!(rep.is_abelian && rep.is_reductive);

        let rep = catalog::gl2().classify();
        assert!(rep.is_reductive && !rep.is_semisimple && rep.levi_dim == 3);
    }

    #[test]
    fn classify_reductive_iff_trivial_nil_radical() {
        for entry in catalog::all() {
            let rep = entry.algebra.classify();
            assert_eq!(
                rep.is_reductive,
                entry.algebra.nilpotent_radical().is_zero(),
                "{}",
                entry.name
            );
        }
    }

    #[test]
    fn change_basis_preserves_structure_theory() {
        let gl2 = catalog::gl2();
        // Shear basis change with determinant 1.
        let p = QMat::from_ints(&[
            &[1, 2, 0, 0],
            &[0, 1, 3, 0],
            &[0, 0, 1, -1],
            &[1, 0, 0, 1],
        ]);
        let moved = gl2.change_basis(&p).unwrap();
        let rep = moved.classify();
        assert_eq!(rep.radical_dim, 1);
        assert_eq!(rep.nil_radical_dim, 0);
        assert!(rep.is_reductive);
        assert_eq!(moved.levi_subalgebra().unwrap().dim(), 3);
    }
}
