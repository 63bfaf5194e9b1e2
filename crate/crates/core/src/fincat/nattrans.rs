use std::sync::Arc;

use super::category::{FinCategory, MorId, ObjId};
use super::functor::FinFunctor;
use crate::error::{Error, Law, Result, Violation};

/// Which side a functor is whiskered on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `Hα`: post-compose with `H`.
    Left,
    /// `αK`: pre-compose with `K`.
    Right,
}

/// A natural transformation `F ⇒ G` given by one component per object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    source: FinFunctor,
    target: FinFunctor,
    components: Vec<MorId>,
}

impl NatTrans {
    pub fn new(source: FinFunctor, target: FinFunctor, components: Vec<MorId>) -> Result<Self> {
        if source.source() != target.source() || source.target() != target.target() {
            return Err(Error::shape("natural transformation between functors of different shape"));
        }
        if components.len() != source.source().num_objects() {
            return Err(Error::shape(format!(
                "{} components given for {} objects",
                components.len(),
                source.source().num_objects()
            )));
        }
        if components.iter().any(|&m| m >= source.target().num_morphisms()) {
            return Err(Error::shape("component out of range"));
        }
        Ok(NatTrans {
            source,
            target,
            components,
        })
    }

    pub fn identity(f: &FinFunctor) -> Self {
        let t = f.target();
        NatTrans {
            source: f.clone(),
            target: f.clone(),
            components: f.source().objects().map(|a| t.identity(f.obj(a))).collect(),
        }
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn domain(&self) -> &Arc<FinCategory> {
        self.source.source()
    }

    pub fn codomain(&self) -> &Arc<FinCategory> {
        self.source.target()
    }

    pub fn at(&self, a: ObjId) -> MorId {
        self.components[a]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    pub fn validate(&self) -> Vec<Violation> {
        let (c, d) = (&**self.domain(), &**self.codomain());
        let mut out = Vec::new();
        for a in c.objects() {
            let m = self.components[a];
            if d.src(m) != self.source.obj(a) || d.dst(m) != self.target.obj(a) {
                out.push(Violation::new(
                    Law::ComponentEndpoints,
                    [c.object_name(a), d.morphism_name(m)],
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in c.morphism_ids() {
            let (a, b) = (c.src(f), c.dst(f));
            let lhs = d.compose(self.target.mor(f), self.components[a]);
            let rhs = d.compose(self.components[b], self.source.mor(f));
            if lhs.is_none() || lhs != rhs {
                out.push(Violation::new(Law::Naturality, [c.morphism_name(f)]));
            }
        }
        out
    }

    /// `self ∘ first`, componentwise.
    pub fn vertical(&self, first: &NatTrans) -> Result<Self> {
        if first.target != self.source {
            return Err(Error::shape("natural transformations are not vertically composable"));
        }
        let d = self.codomain();
        let components = self
            .components
            .iter()
            .zip(&first.components)
            .map(|(&b, &a)| {
                d.compose(b, a)
                    .ok_or_else(|| Error::shape("component composite undefined"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NatTrans {
            source: first.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    pub fn whisker(&self, functor: &FinFunctor, side: Side) -> Result<Self> {
        match side {
            Side::Left => self.whisker_left(functor),
            Side::Right => self.whisker_right(functor),
        }
    }

    /// `Hα : HF ⇒ HG`, with components `H(α_A)`.
    pub fn whisker_left(&self, h: &FinFunctor) -> Result<Self> {
        if h.source() != self.codomain() {
            return Err(Error::shape("cannot whisker: functor source differs from codomain"));
        }
        Ok(NatTrans {
            source: FinFunctor::compose(h, &self.source)?,
            target: FinFunctor::compose(h, &self.target)?,
            components: self.components.iter().map(|&m| h.mor(m)).collect(),
        })
    }

    /// `αK : FK ⇒ GK`, with components `α_{K(A)}`.
    pub fn whisker_right(&self, k: &FinFunctor) -> Result<Self> {
        if k.target() != self.domain() {
            return Err(Error::shape("cannot whisker: functor target differs from domain"));
        }
        Ok(NatTrans {
            source: FinFunctor::compose(&self.source, k)?,
            target: FinFunctor::compose(&self.target, k)?,
            components: k.object_map().iter().map(|&b| self.components[b]).collect(),
        })
    }

    /// First object whose component is not an isomorphism.
    pub fn first_non_iso(&self) -> Option<ObjId> {
        let d = self.codomain();
        (0..self.components.len()).find(|&a| d.inverse(self.components[a]).is_none())
    }

    pub fn is_iso(&self) -> bool {
        self.first_non_iso().is_none()
    }

    /// `α^op : G^op ⇒ F^op` between the opposite categories.
    pub fn opposite(&self, domain_op: &Arc<FinCategory>, codomain_op: &Arc<FinCategory>) -> Self {
        NatTrans {
            source: self.target.opposite(domain_op, codomain_op),
            target: self.source.opposite(domain_op, codomain_op),
            components: self.components.clone(),
        }
    }
}
