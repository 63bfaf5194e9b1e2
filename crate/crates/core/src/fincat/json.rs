//! JSON formats for categories, functors and natural transformations.
//!
//! Names are strings; the loader assigns dense ids in listing order.
//! Functors and natural transformations reference categories either by a
//! path (relative to the referencing file) or inline.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::category::{FinCategory, Morphism};
use super::functor::FinFunctor;
use super::nattrans::NatTrans;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphismEntry {
    pub name: String,
    pub src: String,
    pub dst: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategoryRef {
    Path(String),
    Inline(CategoryFile),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<CategoryRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<CategoryRef>,
    pub objects: BTreeMap<String, String>,
    /// Identities may be omitted; they default to the identity of the image object.
    #[serde(default)]
    pub morphisms: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatTransFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<FunctorFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<FunctorFile>,
    pub components: BTreeMap<String, String>,
}

impl CategoryFile {
    pub fn build(&self) -> Result<FinCategory> {
        let obj_index: HashMap<&str, usize> = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.as_str(), i))
            .collect();
        let obj = |name: &str| {
            obj_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::shape(format!("unknown object {name:?}")))
        };
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| {
                Ok(Morphism {
                    name: m.name.clone(),
                    src: obj(&m.src)?,
                    dst: obj(&m.dst)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mor_index: HashMap<&str, usize> = self
            .morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.name.as_str(), i))
            .collect();
        let mor = |name: &str| {
            mor_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::shape(format!("unknown morphism {name:?}")))
        };
        for key in self.identities.keys() {
            obj(key)?;
        }
        let identities = self
            .objects
            .iter()
            .map(|o| {
                let m = self
                    .identities
                    .get(o)
                    .ok_or_else(|| Error::shape(format!("object {o:?} has no identity")))?;
                mor(m)
            })
            .collect::<Result<Vec<_>>>()?;
        let compose = self
            .compose
            .iter()
            .map(|[g, f, gf]| Ok((mor(g)?, mor(f)?, mor(gf)?)))
            .collect::<Result<Vec<_>>>()?;
        FinCategory::from_parts(self.objects.clone(), morphisms, identities, &compose)
    }

    /// Serializes a category; composites with an identity are left implicit.
    pub fn from_category(c: &FinCategory) -> Self {
        let mut compose = Vec::new();
        for g in c.morphism_ids() {
            for f in c.morphism_ids() {
                if c.is_identity(g) || c.is_identity(f) {
                    continue;
                }
                if let Some(gf) = c.compose(g, f) {
                    compose.push([
                        c.morphism_name(g).to_string(),
                        c.morphism_name(f).to_string(),
                        c.morphism_name(gf).to_string(),
                    ]);
                }
            }
        }
        CategoryFile {
            objects: c.object_names().to_vec(),
            morphisms: c
                .morphisms()
                .iter()
                .map(|m| MorphismEntry {
                    name: m.name.clone(),
                    src: c.object_name(m.src).to_string(),
                    dst: c.object_name(m.dst).to_string(),
                })
                .collect(),
            identities: c
                .objects()
                .map(|a| (c.object_name(a).to_string(), c.morphism_name(c.identity(a)).to_string()))
                .collect(),
            compose,
        }
    }
}

impl FunctorFile {
    /// Serializes only the maps; the categories are supplied by context.
    pub fn from_functor(f: &FinFunctor) -> Self {
        let (s, t) = (f.source(), f.target());
        FunctorFile {
            source: None,
            target: None,
            objects: s
                .objects()
                .map(|a| (s.object_name(a).to_string(), t.object_name(f.obj(a)).to_string()))
                .collect(),
            morphisms: s
                .morphism_ids()
                .filter(|&m| !s.is_identity(m))
                .map(|m| (s.morphism_name(m).to_string(), t.morphism_name(f.mor(m)).to_string()))
                .collect(),
        }
    }
}

impl NatTransFile {
    pub fn from_components(alpha: &NatTrans) -> Self {
        let (c, d) = (alpha.domain(), alpha.codomain());
        NatTransFile {
            source: None,
            target: None,
            components: c
                .objects()
                .map(|a| (c.object_name(a).to_string(), d.morphism_name(alpha.at(a)).to_string()))
                .collect(),
        }
    }
}

/// Resolves references relative to a base directory.
#[derive(Debug, Clone)]
pub struct Loader {
    base: PathBuf,
}

impl Loader {
    pub fn new(base: impl Into<PathBuf>) -> Self {
        Loader { base: base.into() }
    }

    /// A loader for references made from inside `file`.
    pub fn for_file(file: &Path) -> Self {
        Loader::new(file.parent().map(Path::to_path_buf).unwrap_or_default())
    }

    pub fn resolve(&self, path: &str) -> PathBuf {
        self.base.join(path)
    }

    pub fn read_json<T: for<'de> Deserialize<'de>>(&self, path: &str) -> Result<T> {
        read_json(&self.resolve(path))
    }

    pub fn category(&self, r: &CategoryRef) -> Result<Arc<FinCategory>> {
        match r {
            CategoryRef::Inline(file) => Ok(Arc::new(file.build()?)),
            CategoryRef::Path(p) => {
                let path = self.resolve(p);
                let file: CategoryFile = read_json(&path)?;
                Ok(Arc::new(file.build()?))
            }
        }
    }

    /// Builds a functor; `source`/`target` in the file override the defaults.
    pub fn functor(
        &self,
        file: &FunctorFile,
        default_source: Option<&Arc<FinCategory>>,
        default_target: Option<&Arc<FinCategory>>,
    ) -> Result<FinFunctor> {
        let source = match (&file.source, default_source) {
            (Some(r), _) => self.category(r)?,
            (None, Some(c)) => c.clone(),
            (None, None) => return Err(Error::shape("functor has no source category")),
        };
        let target = match (&file.target, default_target) {
            (Some(r), _) => self.category(r)?,
            (None, Some(c)) => c.clone(),
            (None, None) => return Err(Error::shape("functor has no target category")),
        };
        functor_from_maps(&source, &target, &file.objects, &file.morphisms)
    }

    /// Builds a standalone natural transformation; both functors must be given.
    pub fn nattrans(&self, file: &NatTransFile) -> Result<NatTrans> {
        let (Some(s), Some(t)) = (&file.source, &file.target) else {
            return Err(Error::shape("natural transformation needs source and target functors"));
        };
        let source = self.functor(s, None, None)?;
        let target = self.functor(t, Some(source.source()), Some(source.target()))?;
        components_from_names(source, target, &file.components)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

pub fn functor_from_maps(
    source: &Arc<FinCategory>,
    target: &Arc<FinCategory>,
    objects: &BTreeMap<String, String>,
    morphisms: &BTreeMap<String, String>,
) -> Result<FinFunctor> {
    let find_obj = |c: &FinCategory, n: &str| {
        c.find_object(n)
            .ok_or_else(|| Error::shape(format!("unknown object {n:?}")))
    };
    let find_mor = |c: &FinCategory, n: &str| {
        c.find_morphism(n)
            .ok_or_else(|| Error::shape(format!("unknown morphism {n:?}")))
    };
    for k in objects.keys() {
        find_obj(source, k)?;
    }
    for k in morphisms.keys() {
        find_mor(source, k)?;
    }
    let obj_map = source
        .objects()
        .map(|a| {
            let name = objects
                .get(source.object_name(a))
                .ok_or_else(|| Error::shape(format!("object {:?} is not mapped", source.object_name(a))))?;
            find_obj(target, name)
        })
        .collect::<Result<Vec<_>>>()?;
    let mor_map = source
        .morphism_ids()
        .map(|m| match morphisms.get(source.morphism_name(m)) {
            Some(name) => find_mor(target, name),
            None if source.is_identity(m) => Ok(target.identity(obj_map[source.src(m)])),
            None => Err(Error::shape(format!(
                "morphism {:?} is not mapped",
                source.morphism_name(m)
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    FinFunctor::new(source.clone(), target.clone(), obj_map, mor_map)
}

pub fn components_from_names(
    source: FinFunctor,
    target: FinFunctor,
    components: &BTreeMap<String, String>,
) -> Result<NatTrans> {
    let (c, d) = (source.source().clone(), source.target().clone());
    for k in components.keys() {
        if c.find_object(k).is_none() {
            return Err(Error::shape(format!("component for unknown object {k:?}")));
        }
    }
    let comps = c
        .objects()
        .map(|a| {
            let name = components
                .get(c.object_name(a))
                .ok_or_else(|| Error::shape(format!("missing component at {:?}", c.object_name(a))))?;
            d.find_morphism(name)
                .ok_or_else(|| Error::shape(format!("unknown morphism {name:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    NatTrans::new(source, target, comps)
}
