//! Built-in Lie algebras with hand-checked structure constants and
//! default matrix representations. These are the instances the
//! acceptance suite pins its ground truth to.

use crate::exact::ExactComplex;
use crate::lie::LieAlgebra;
use crate::rep::{CMatrix, MatrixRep};

/// A named algebra with an optional default representation.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub default_rep: Option<MatrixRep>,
    pub note: &'static str,
}

fn ec(n: i64) -> ExactComplex {
    ExactComplex::from_int(n)
}

/// Abelian algebra of the given dimension.
pub fn abelian(dim: usize) -> LieAlgebra {
    let names = (0..dim).map(|i| format!("a{}", i + 1)).collect();
    LieAlgebra::from_entries(dim, &[], Some(names)).expect("abelian structure")
}

/// The 2-dimensional non-abelian algebra: `[e1, e2] = e2`.
pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_entries(
        2,
        &[(0, 1, 1, ec(1))],
        Some(vec!["e1".into(), "e2".into()]),
    )
    .expect("aff1 structure")
}

/// Heisenberg algebra `h3`: `[x, y] = z`, `z` central.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_entries(
        3,
        &[(0, 1, 2, ec(1))],
        Some(vec!["x".into(), "y".into(), "z".into()]),
    )
    .expect("heisenberg structure")
}

/// `sl2` in the basis `(e, h, f)`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_entries(
        3,
        &[
            (0, 1, 0, ec(-2)), // [e, h] = -2e
            (0, 2, 1, ec(1)),  // [e, f] = h
            (1, 2, 2, ec(-2)), // [h, f] = -2f
        ],
        Some(vec!["e".into(), "h".into(), "f".into()]),
    )
    .expect("sl2 structure")
}

/// `gl2` in the matrix-unit basis `(E11, E12, E21, E22)`. The radical
/// (the span of the identity) is not a coordinate axis here, which makes
/// the Levi computation non-trivial.
pub fn gl2() -> LieAlgebra {
    LieAlgebra::from_entries(
        4,
        &[
            (0, 1, 1, ec(1)),  // [E11, E12] = E12
            (0, 2, 2, ec(-1)), // [E11, E21] = -E21
            (1, 2, 0, ec(1)),  // [E12, E21] = E11 - E22
            (1, 2, 3, ec(-1)),
            (1, 3, 1, ec(1)),  // [E12, E22] = E12
            (2, 3, 2, ec(-1)), // [E21, E22] = -E21
        ],
        Some(vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()]),
    )
    .expect("gl2 structure")
}

/// Direct sum `sl2 ⊕ h3`: mixed Levi and radical parts.
pub fn sl2_h3() -> LieAlgebra {
    sl2().direct_sum(&heisenberg())
}

fn rep(algebra: LieAlgebra, mats: Vec<CMatrix>) -> MatrixRep {
    let r = MatrixRep::new(algebra, mats).expect("catalog representation");
    r.validate().expect("catalog representation is valid");
    r
}

fn default_rep(name: &str) -> Option<MatrixRep> {
    match name {
        "abelian2" => Some(rep(
            abelian(2),
            vec![CMatrix::unit(2, 0, 0), CMatrix::unit(2, 1, 1)],
        )),
        "aff1" => Some(rep(
            aff1(),
            vec![CMatrix::from_ints(&[&[1, 0], &[0, 0]]), CMatrix::unit(2, 0, 1)],
        )),
        "heisenberg" => Some(rep(
            heisenberg(),
            vec![
                CMatrix::unit(3, 0, 1),
                CMatrix::unit(3, 1, 2),
                CMatrix::unit(3, 0, 2),
            ],
        )),
        "sl2" => Some(rep(
            sl2(),
            vec![
                CMatrix::unit(2, 0, 1),
                CMatrix::from_ints(&[&[1, 0], &[0, -1]]),
                CMatrix::unit(2, 1, 0),
            ],
        )),
        "gl2" => Some(rep(
            gl2(),
            vec![
                CMatrix::unit(2, 0, 0),
                CMatrix::unit(2, 0, 1),
                CMatrix::unit(2, 1, 0),
                CMatrix::unit(2, 1, 1),
            ],
        )),
        "sl2_h3" => {
            let alg = sl2_h3();
            let blocks: Vec<CMatrix> = vec![
                // sl2 block in coordinates 0..2 of a 5-dim space
                CMatrix::unit(5, 0, 1),
                CMatrix::from_ints(&[
                    &[1, 0, 0, 0, 0],
                    &[0, -1, 0, 0, 0],
                    &[0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0],
                ]),
                CMatrix::unit(5, 1, 0),
                // heisenberg block in coordinates 2..5
                CMatrix::unit(5, 2, 3),
                CMatrix::unit(5, 3, 4),
                CMatrix::unit(5, 2, 4),
            ];
            Some(rep(alg, blocks))
        }
        _ => None,
    }
}

const NAMES: [&str; 6] = ["abelian2", "aff1", "heisenberg", "sl2", "gl2", "sl2_h3"];

/// All catalog entries in a fixed order.
pub fn all() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| entry(n).expect("known name")).collect()
}

pub fn names() -> &'static [&'static str] {
    &NAMES
}

/// Looks up a catalog entry by name.
pub fn entry(name: &str) -> Option<CatalogEntry> {
    let (algebra, note): (LieAlgebra, &'static str) = match name {
        "abelian2" => (abelian(2), "abelian C^2; reductive, trivial nilpotent radical"),
        "aff1" => (
            aff1(),
            "2-dimensional non-abelian solvable algebra with [e1,e2] = e2",
        ),
        "heisenberg" => (
            heisenberg(),
            "3-dimensional Heisenberg algebra, nilpotent non-abelian",
        ),
        "sl2" => (sl2(), "simple algebra sl2 in the (e,h,f) basis"),
        "gl2" => (gl2(), "reductive gl2 = sl2 + center, matrix-unit basis"),
        "sl2_h3" => (sl2_h3(), "direct sum sl2 + Heisenberg; mixed Levi/radical"),
        _ => return None,
    };
    Some(CatalogEntry {
        name: match name {
            "abelian2" => "abelian2",
            "aff1" => "aff1",
            "heisenberg" => "heisenberg",
            "sl2" => "sl2",
            "gl2" => "gl2",
            "sl2_h3" => "sl2_h3",
            _ => unreachable!(),
        },
        algebra,
        default_rep: default_rep(name),
        note,
    })
}
