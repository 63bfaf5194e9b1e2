//! Algebra: `{"p", "dim", "constants": c[i][j][k], "unit", "names"?}`.
//! Module: `{"algebra": ref, "dim", "action": [matrix per basis element]}`.
//! Bimodule: a module plus `"right_algebra": ref` and `"right_action"`.
//!
//! Matrices are row-major integer arrays acting on column vectors; entries
//! are reduced mod `p`. A `ref` is a path relative to the referring file or
//! an inline algebra object.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{check, Error, Result};
use crate::ffla::{Matrix, PrimeField};
use crate::fincat::json::{read_json, Loader};

use super::{Bimodule, FqAlgebra, LeftModule};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub p: u32,
    pub dim: usize,
    pub constants: Vec<Vec<Vec<i64>>>,
    pub unit: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(AlgebraFile),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub algebra: AlgebraRef,
    pub dim: usize,
    pub action: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleFile {
    pub algebra: AlgebraRef,
    pub right_algebra: AlgebraRef,
    pub dim: usize,
    pub action: Vec<Vec<Vec<i64>>>,
    pub right_action: Vec<Vec<Vec<i64>>>,
}

fn matrix(field: PrimeField, n: usize, rows: &[Vec<i64>]) -> Result<Matrix> {
    Matrix::from_rows(field, n, n, rows)
}

fn matrices(field: PrimeField, n: usize, ms: &[Vec<Vec<i64>>]) -> Result<Vec<Matrix>> {
    ms.iter().map(|m| matrix(field, n, m)).collect()
}

fn rows(m: &Matrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect()
}

impl AlgebraFile {
    pub fn load(path: &Path) -> Result<Arc<FqAlgebra>> {
        let file: AlgebraFile = read_json(path)?;
        Ok(Arc::new(file.build()?))
    }

    /// Shape checks only; the laws are left to [`FqAlgebra::violations`].
    pub fn build_unchecked(&self) -> Result<FqAlgebra> {
        let field = PrimeField::new(self.p)?;
        if self.unit.len() != self.dim {
            return Err(Error::dimension(format!("unit of length {} for dimension {}", self.unit.len(), self.dim)));
        }
        let constants = self
            .constants
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(|&x| field.reduce(x)).collect()).collect())
            .collect();
        let unit = self.unit.iter().map(|&x| field.reduce(x)).collect();
        let a = FqAlgebra::unchecked(field, constants, unit)?;
        match &self.names {
            Some(names) => a.with_names(names.clone()),
            None => Ok(a),
        }
    }

    pub fn build(&self) -> Result<FqAlgebra> {
        let a = self.build_unchecked()?;
        check(a.violations())?;
        Ok(a)
    }

    pub fn from_algebra(a: &FqAlgebra) -> Self {
        AlgebraFile {
            p: a.field().p(),
            dim: a.dim(),
            constants: a
                .constants()
                .into_iter()
                .map(|row| row.into_iter().map(|v| v.into_iter().map(i64::from).collect()).collect())
                .collect(),
            unit: a.unit().iter().map(|&x| i64::from(x)).collect(),
            names: Some(a.names().to_vec()),
        }
    }
}

impl AlgebraRef {
    pub fn resolve(&self, loader: &Loader) -> Result<Arc<FqAlgebra>> {
        match self {
            AlgebraRef::Inline(file) => Ok(Arc::new(file.build()?)),
            AlgebraRef::Path(p) => Ok(Arc::new(loader.read_json::<AlgebraFile>(p)?.build()?)),
        }
    }
}

impl ModuleFile {
    pub fn load(path: &Path) -> Result<LeftModule> {
        let file: ModuleFile = read_json(path)?;
        let m = file.build_unchecked(&Loader::for_file(path))?;
        check(m.violations())?;
        Ok(m)
    }

    pub fn build_unchecked(&self, loader: &Loader) -> Result<LeftModule> {
        self.build_over(&self.algebra.resolve(loader)?)
    }

    /// Builds over a given algebra, which must equal the referenced one
    /// when the caller has already loaded it.
    pub fn build_over(&self, algebra: &Arc<FqAlgebra>) -> Result<LeftModule> {
        LeftModule::unchecked(algebra, matrices(algebra.field(), self.dim, &self.action)?)
    }

    pub fn from_module(m: &LeftModule) -> Self {
        ModuleFile {
            algebra: AlgebraRef::Inline(AlgebraFile::from_algebra(m.algebra())),
            dim: m.dim(),
            action: m.action().iter().map(rows).collect(),
        }
    }
}

impl BimoduleFile {
    pub fn load(path: &Path) -> Result<Bimodule> {
        let file: BimoduleFile = read_json(path)?;
        let b = file.build_unchecked(&Loader::for_file(path))?;
        check(b.violations())?;
        Ok(b)
    }

    pub fn build_unchecked(&self, loader: &Loader) -> Result<Bimodule> {
        let r = self.algebra.resolve(loader)?;
        let s = self.right_algebra.resolve(loader)?;
        let left = LeftModule::unchecked(&r, matrices(r.field(), self.dim, &self.action)?)?;
        Bimodule::unchecked(left, &s, matrices(s.field(), self.dim, &self.right_action)?)
    }

    pub fn from_bimodule(b: &Bimodule) -> Self {
        BimoduleFile {
            algebra: AlgebraRef::Inline(AlgebraFile::from_algebra(b.left_algebra())),
            right_algebra: AlgebraRef::Inline(AlgebraFile::from_algebra(b.right_algebra())),
            dim: b.dim(),
            action: b.left().action().iter().map(rows).collect(),
            right_action: b.right_action().iter().map(rows).collect(),
        }
    }
}
