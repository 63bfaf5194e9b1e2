//! `{"A": ref, "B": ref, "F": functor, "G": functor, "eta": nattrans, "eps": nattrans}`.
//!
//! `A` and `B` may be omitted when `F` names its source and target.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::json::{read_json, CategoryFile, CategoryRef, FunctorFile, Loader, NatTransFile};
use crate::fincat::FinFunctor;
use crate::monadics::json::nattrans_between;

use super::FinAdjunction;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdjunctionFile {
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<CategoryRef>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<CategoryRef>,
    #[serde(rename = "F")]
    pub f: FunctorFile,
    #[serde(rename = "G")]
    pub g: FunctorFile,
    pub eta: NatTransFile,
    pub eps: NatTransFile,
}

impl AdjunctionFile {
    pub fn load(path: &Path) -> Result<FinAdjunction> {
        let file: AdjunctionFile = read_json(path)?;
        file.build(&Loader::for_file(path))
    }

    pub fn build(&self, loader: &Loader) -> Result<FinAdjunction> {
        let a = self.a.as_ref().map(|r| loader.category(r)).transpose()?;
        let b = self.b.as_ref().map(|r| loader.category(r)).transpose()?;
        let f = loader.functor(&self.f, a.as_ref(), b.as_ref())?;
        let g = loader.functor(&self.g, Some(f.target()), Some(f.source()))?;
        if g.source() != f.target() || g.target() != f.source() {
            return Err(Error::shape("F and G must go in opposite directions"));
        }
        let gf = FinFunctor::compose(&g, &f)?;
        let fg = FinFunctor::compose(&f, &g)?;
        let eta = nattrans_between(loader, &self.eta, FinFunctor::identity(f.source()), gf)?;
        let eps = nattrans_between(loader, &self.eps, fg, FinFunctor::identity(f.target()))?;
        FinAdjunction::new(f, g, eta, eps)
    }

    pub fn from_adjunction(adj: &FinAdjunction) -> Self {
        AdjunctionFile {
            a: Some(CategoryRef::Inline(CategoryFile::from_category(adj.a()))),
            b: Some(CategoryRef::Inline(CategoryFile::from_category(adj.b()))),
            f: FunctorFile::from_functor(adj.left()),
            g: FunctorFile::from_functor(adj.right()),
            eta: NatTransFile::from_components(adj.unit()),
            eps: NatTransFile::from_components(adj.counit()),
        }
    }
}
