//! JSON file formats for Lie algebras and matrix representations.
//!
//! Algebra files list structure constants for pairs `i < j` only, with
//! 0-based indices and rational strings like `"3/2"`; the antisymmetric
//! completion is implied. Representation files carry one `N×N` matrix per
//! basis element with entries `[re, im]`; rational strings make the file
//! exact, plain numbers make it float.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::{Error, Result};
use crate::exact::ExactComplex;
use crate::lie::LieAlgebra;
use crate::linalg::QMat;
use crate::rep::{CMatrix, FMat, MatrixRep};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub sc: Vec<(usize, usize, usize, String, String)>,
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &LieAlgebra) -> Self {
        let dim = algebra.dim();
        let mut sc = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                for k in 0..dim {
                    let c = algebra.structure_constant(i, j, k);
                    if !c.is_zero() {
                        sc.push((i, j, k, c.re_string(), c.im_string()));
                    }
                }
            }
        }
        Self {
            dim,
            names: Some(algebra.names().to_vec()),
            sc,
        }
    }

    pub fn into_algebra(self) -> Result<LieAlgebra> {
        let entries = self
            .sc
            .into_iter()
            .map(|(i, j, k, re, im)| Ok((i, j, k, ExactComplex::parse_parts(&re, &im)?)))
            .collect::<Result<Vec<_>>>()?;
        LieAlgebra::from_entries(self.dim, &entries, self.names)
    }
}

pub fn algebra_to_json(algebra: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(algebra)).expect("serializable")
}

pub fn algebra_from_json(json: &str) -> Result<LieAlgebra> {
    let file: AlgebraFile = serde_json::from_str(json)?;
    file.into_algebra()
}

pub fn load_algebra(path: &Path) -> Result<LieAlgebra> {
    algebra_from_json(&std::fs::read_to_string(path)?)
}

/// Resolves an algebra argument: a catalog name or a path to a JSON file.
pub fn resolve_algebra(spec: &str) -> Result<LieAlgebra> {
    if let Some(entry) = catalog::entry(spec) {
        return Ok(entry.algebra);
    }
    let path = Path::new(spec);
    if path.exists() {
        return load_algebra(path);
    }
    Err(Error::Parse(format!(
        "`{spec}` is neither a catalog name ({}) nor an existing file",
        catalog::names().join(", ")
    )))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumOrStr {
    Num(f64),
    Str(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Inline(AlgebraFile),
    Named(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepFile {
    pub algebra: AlgebraRef,
    #[serde(rename = "N")]
    pub n: usize,
    /// `mats[g][row][col] = [re, im]`.
    pub mats: Vec<Vec<Vec<(NumOrStr, NumOrStr)>>>,
}

impl RepFile {
    pub fn from_rep(rep: &MatrixRep) -> Self {
        let n = rep.rep_dim();
        let mats = rep
            .matrices()
            .iter()
            .map(|m| match m {
                CMatrix::Exact(q) => (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                let z = &q[(i, j)];
                                (NumOrStr::Str(z.re_string()), NumOrStr::Str(z.im_string()))
                            })
                            .collect()
                    })
                    .collect(),
                CMatrix::Float(f) => (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| (NumOrStr::Num(f[(i, j)].re), NumOrStr::Num(f[(i, j)].im)))
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        Self {
            algebra: AlgebraRef::Inline(AlgebraFile::from_algebra(rep.algebra())),
            n,
            mats,
        }
    }

    /// Builds the representation; `base_dir` anchors relative file refs.
    pub fn into_rep(self, base_dir: Option<&Path>) -> Result<MatrixRep> {
        let algebra = match self.algebra {
            AlgebraRef::Inline(f) => f.into_algebra()?,
            AlgebraRef::Named(name) => {
                if let Some(entry) = catalog::entry(&name) {
                    entry.algebra
                } else {
                    let p = Path::new(&name);
                    let resolved = match (p.is_absolute(), base_dir) {
                        (false, Some(dir)) => dir.join(p),
                        _ => p.to_path_buf(),
                    };
                    load_algebra(&resolved)?
                }
            }
        };
        if self.mats.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} matrices, found {}",
                algebra.dim(),
                self.mats.len()
            )));
        }
        let exact = self.mats.iter().flatten().flatten().all(|(re, im)| {
            matches!(re, NumOrStr::Str(_)) && matches!(im, NumOrStr::Str(_))
        });
        let n = self.n;
        let mut mats = Vec::with_capacity(self.mats.len());
        for rows in &self.mats {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::DimensionMismatch(format!(
                    "representation matrices must be {n}×{n}"
                )));
            }
            if exact {
                let mut q = QMat::zeros(n, n);
                for (i, row) in rows.iter().enumerate() {
                    for (j, (re, im)) in row.iter().enumerate() {
                        let (NumOrStr::Str(re), NumOrStr::Str(im)) = (re, im) else {
                            unreachable!("checked exact");
                        };
                        q[(i, j)] = ExactComplex::parse_parts(re, im)?;
                    }
                }
                mats.push(CMatrix::Exact(q));
            } else {
                let mut f = FMat::zeros(n, n);
                for (i, row) in rows.iter().enumerate() {
                    for (j, (re, im)) in row.iter().enumerate() {
                        let val = |x: &NumOrStr| -> Result<f64> {
                            match x {
                                NumOrStr::Num(v) => Ok(*v),
                                NumOrStr::Str(s) => {
                                    use num_traits::ToPrimitive;
                                    Ok(ExactComplex::parse_rational(s)?
                                        .to_f64()
                                        .unwrap_or(f64::NAN))
                                }
                            }
                        };
                        f[(i, j)] = num_complex::Complex64::new(val(re)?, val(im)?);
                    }
                }
                mats.push(CMatrix::Float(f));
            }
        }
        MatrixRep::new(algebra, mats)
    }
}

pub fn rep_to_json(rep: &MatrixRep) -> String {
    serde_json::to_string_pretty(&RepFile::from_rep(rep)).expect("serializable")
}

pub fn rep_from_json(json: &str, base_dir: Option<&Path>) -> Result<MatrixRep> {
    let file: RepFile = serde_json::from_str(json)?;
    file.into_rep(base_dir)
}

pub fn load_rep(path: &Path) -> Result<MatrixRep> {
    let json = std::fs::read_to_string(path)?;
    rep_from_json(&json, path.parent())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::Mode;

    #[test]
    fn catalog_round_trips() {
        for entry in catalog::all() {
            let json = algebra_to_json(&entry.algebra);
            let back = algebra_from_json(&json).unwrap();
            assert_eq!(back, entry.algebra, "{}", entry.name);
        }
    }

    #[test]
    fn rep_round_trips_exact() {
        let rep = catalog::entry("heisenberg").unwrap().default_rep.unwrap();
        let json = rep_to_json(&rep);
        let back = rep_from_json(&json, None).unwrap();
        assert_eq!(back.mode(), Mode::Exact);
        assert!(back.validate().is_ok());
        for (a, b) in rep.matrices().iter().zip(back.matrices()) {
            assert!(a.sub(b).is_exactly_zero());
        }
    }

    #[test]
    fn float_entries_switch_mode() {
        // diag(1,0) and E12 for [e1,e2] = e2, written with float entries.
        let json = r#"{
            "algebra": {"dim": 2, "sc": [[0, 1, 1, "1", "0"]]},
            "N": 2,
            "mats": [
                [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
                [[[0.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]
            ]
        }"#;
        let rep = rep_from_json(json, None).unwrap();
        assert_eq!(rep.mode(), Mode::Float);
        assert!(rep.validate().is_ok());
    }

    #[test]
    fn catalog_name_resolves() {
        assert!(resolve_algebra("sl2").is_ok());
        assert!(resolve_algebra("missing-name").is_err());
    }

    #[test]
    fn malformed_json_is_rejected() {
        assert!(algebra_from_json("{not json").is_err());
        // Jacobi violation in an otherwise well-formed file.
        let bad = r#"{"dim": 3, "sc": [[0,1,2,"1","0"],[0,2,0,"1","0"]]}"#;
        assert!(matches!(
            algebra_from_json(bad),
            Err(Error::InvalidStructure(_))
        ));
    }
}
