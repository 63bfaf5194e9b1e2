//! `{"category": ref, "T": functor, "mu": nattrans, "eta": nattrans}` and the
//! comonad analogue with `"S"`, `"delta"`, `"eps"`.
//!
//! The functor's source and target default to `category`; natural
//! transformations may list components only.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::json::{components_from_names, read_json, CategoryFile, CategoryRef, FunctorFile, Loader, NatTransFile};
use crate::fincat::{FinCategory, FinFunctor, NatTrans};

use super::monad::{FinComonad, FinMonad};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadFile {
    pub category: CategoryRef,
    #[serde(rename = "T")]
    pub t: FunctorFile,
    pub mu: NatTransFile,
    pub eta: NatTransFile,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComonadFile {
    pub category: CategoryRef,
    #[serde(rename = "S")]
    pub s: FunctorFile,
    pub delta: NatTransFile,
    pub eps: NatTransFile,
}

/// Builds `file` between the given functors, checking any functors it names.
pub(crate) fn nattrans_between(
    loader: &Loader,
    file: &NatTransFile,
    source: FinFunctor,
    target: FinFunctor,
) -> Result<NatTrans> {
    let c = source.source().clone();
    let d = source.target().clone();
    if let Some(s) = &file.source {
        if loader.functor(s, Some(&c), Some(&d))? != source {
            return Err(Error::shape("natural transformation has the wrong source functor"));
        }
    }
    if let Some(t) = &file.target {
        if loader.functor(t, Some(&c), Some(&d))? != target {
            return Err(Error::shape("natural transformation has the wrong target functor"));
        }
    }
    components_from_names(source, target, &file.components)
}

impl MonadFile {
    pub fn load(path: &Path) -> Result<FinMonad> {
        let file: MonadFile = read_json(path)?;
        file.build(&Loader::for_file(path))
    }

    pub fn build(&self, loader: &Loader) -> Result<FinMonad> {
        let c = loader.category(&self.category)?;
        let t = loader.functor(&self.t, Some(&c), Some(&c))?;
        if !t.is_endo() || t.source() != &c {
            return Err(Error::shape("T must be an endofunctor of the monad's category"));
        }
        let tt = FinFunctor::compose(&t, &t)?;
        let mu = nattrans_between(loader, &self.mu, tt, t.clone())?;
        let eta = nattrans_between(loader, &self.eta, FinFunctor::identity(&c), t.clone())?;
        FinMonad::new(t, mu, eta)
    }

    pub fn from_monad(m: &FinMonad) -> Self {
        MonadFile {
            category: CategoryRef::Inline(CategoryFile::from_category(m.category())),
            t: FunctorFile::from_functor(m.functor()),
            mu: NatTransFile::from_components(m.mu()),
            eta: NatTransFile::from_components(m.eta()),
        }
    }
}

impl ComonadFile {
    pub fn load(path: &Path) -> Result<FinComonad> {
        let file: ComonadFile = read_json(path)?;
        file.build(&Loader::for_file(path))
    }

    pub fn build(&self, loader: &Loader) -> Result<FinComonad> {
        let c: Arc<FinCategory> = loader.category(&self.category)?;
        let s = loader.functor(&self.s, Some(&c), Some(&c))?;
        if !s.is_endo() || s.source() != &c {
            return Err(Error::shape("S must be an endofunctor of the comonad's category"));
        }
        let ss = FinFunctor::compose(&s, &s)?;
        let delta = nattrans_between(loader, &self.delta, s.clone(), ss)?;
        let eps = nattrans_between(loader, &self.eps, s.clone(), FinFunctor::identity(&c))?;
        FinComonad::new(s, delta, eps)
    }

    pub fn from_comonad(s: &FinComonad) -> Self {
        ComonadFile {
            category: CategoryRef::Inline(CategoryFile::from_category(s.category())),
            s: FunctorFile::from_functor(s.functor()),
            delta: NatTransFile::from_components(s.delta()),
            eps: NatTransFile::from_components(s.eps()),
        }
    }
}
