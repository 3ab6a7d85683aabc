//! Seeded generators for random valid representations and basis changes.
//!
//! Randomness is constructive: representations come from the catalog's
//! hand-checked defaults composed with direct sums and exact unimodular
//! conjugations, so every generated instance is valid by construction and
//! its ground truth (radical, nilpotent radical) is known from the
//! underlying algebra. Nilpotent building blocks stay upper triangular,
//! which keeps exact arithmetic cheap.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::exact::ExactComplex;
use crate::linalg::QMat;
use crate::rep::{CMatrix, MatrixRep};

/// Exact unimodular matrix `L·U` with unit diagonals and small integer
/// off-diagonal entries; the inverse is exact and small.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, magnitude: i64) -> QMat {
    let mut l = QMat::identity(n);
    let mut u = QMat::identity(n);
    for i in 0..n {
        for j in 0..n {
            if i > j {
                l[(i, j)] = ExactComplex::from_int(rng.gen_range(-magnitude..=magnitude));
            } else if i < j {
                u[(i, j)] = ExactComplex::from_int(rng.gen_range(-magnitude..=magnitude));
            }
        }
    }
    l.mul(&u)
}

/// Zero representation of an algebra on a space of the given dimension.
pub fn zero_rep(algebra: &crate::lie::LieAlgebra, n: usize) -> MatrixRep {
    let mats = (0..algebra.dim()).map(|_| CMatrix::zero(n)).collect();
    MatrixRep::new(algebra.clone(), mats).expect("zero representation")
}

/// One seeded random valid representation of a catalog entry with
/// representation dimension at most `max_dim`.
pub fn random_catalog_rep(rng: &mut ChaCha8Rng, entry: &catalog::CatalogEntry, max_dim: usize) -> MatrixRep {
    let base = entry
        .default_rep
        .clone()
        .expect("catalog entries carry default representations");
    let n0 = base.rep_dim();
    let mut rep = base.clone();

    // Optionally enlarge by a zero block or a second copy.
    let choice = rng.gen_range(0..3u8);
    if choice == 1 && n0 + 1 <= max_dim {
        let pad = rng.gen_range(1..=(max_dim - n0).min(2));
        rep = rep
            .direct_sum(&zero_rep(rep.algebra(), pad))
            .expect("padding with the zero representation");
    } else if choice == 2 && 2 * n0 <= max_dim {
        rep = rep.direct_sum(&base).expect("doubling the representation");
    }

    let p = random_unimodular(rng, rep.rep_dim(), 2);
    rep.conjugate(&p).expect("unimodular conjugation")
}

/// A seeded suite of random valid representations drawn across the whole
/// catalog, each of dimension at most `max_dim`.
pub fn random_rep_suite(seed: u64, count: usize, max_dim: usize) -> Vec<MatrixRep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = catalog::all();
    (0..count)
        .map(|i| {
            let entry = &entries[i % entries.len()];
            random_catalog_rep(&mut rng, entry, max_dim)
        })
        .collect()
}

/// Seeded random small-integer combinations of a subspace basis
/// (ambient coordinates). Returns nothing for the zero subspace.
pub fn random_subspace_combinations(
    rng: &mut ChaCha8Rng,
    sub: &crate::lie::Subspace,
    count: usize,
) -> Vec<Vec<ExactComplex>> {
    let basis = sub.basis();
    if basis.is_empty() {
        return Vec::new();
    }
    let ambient = sub.ambient_dim();
    (0..count)
        .map(|_| {
            let mut v = vec![ExactComplex::zero(); ambient];
            loop {
                for x in v.iter_mut() {
                    *x = ExactComplex::zero();
                }
                let mut any = false;
                for b in basis {
                    let c = rng.gen_range(-3..=3i64);
                    if c == 0 {
                        continue;
                    }
                    any = true;
                    let c = ExactComplex::from_int(c);
                    for (vi, bi) in v.iter_mut().zip(b.iter()) {
                        use std::ops::Mul;
                        let t = (&c).mul(bi);
                        *vi += &t;
                    }
                }
                if any {
                    break;
                }
            }
            v
        })
        .collect()
}

/// Seeded random exactly nilpotent matrix: a strictly upper triangular
/// integer matrix conjugated by an exact unimodular transform. The
/// degree stays decidable exactly because everything remains rational.
pub fn random_nilpotent(rng: &mut ChaCha8Rng, n: usize) -> QMat {
    let mut m = QMat::zeros(n, n);
    loop {
        let mut nonzero = false;
        for i in 0..n {
            for j in (i + 1)..n {
                let v = rng.gen_range(-3..=3i64);
                if v != 0 {
                    nonzero = true;
                }
                m[(i, j)] = ExactComplex::from_int(v);
            }
        }
        if nonzero || n == 1 {
            break;
        }
    }
    let p = random_unimodular(rng, n, 1);
    let p_inv = p.inverse().expect("unimodular");
    p.mul(&m).mul(&p_inv)
}
