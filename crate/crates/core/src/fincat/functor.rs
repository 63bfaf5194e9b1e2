use std::sync::Arc;

use super::category::{FinCategory, MorId, ObjId};
use crate::error::{Error, Law, Result, Violation};

/// A functor between finite categories given by its object and morphism maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    objects: Vec<ObjId>,
    morphisms: Vec<MorId>,
}

impl FinFunctor {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        objects: Vec<ObjId>,
        morphisms: Vec<MorId>,
    ) -> Result<Self> {
        if objects.len() != source.num_objects() {
            return Err(Error::shape(format!(
                "object map has {} entries, source has {} objects",
                objects.len(),
                source.num_objects()
            )));
        }
        if morphisms.len() != source.num_morphisms() {
            return Err(Error::shape(format!(
                "morphism map has {} entries, source has {} morphisms",
                morphisms.len(),
                source.num_morphisms()
            )));
        }
        if objects.iter().any(|&b| b >= target.num_objects()) {
            return Err(Error::shape("object map leaves the target category"));
        }
        if morphisms.iter().any(|&g| g >= target.num_morphisms()) {
            return Err(Error::shape("morphism map leaves the target category"));
        }
        Ok(FinFunctor {
            source,
            target,
            objects,
            morphisms,
        })
    }

    pub fn identity(c: &Arc<FinCategory>) -> Self {
        FinFunctor {
            source: c.clone(),
            target: c.clone(),
            objects: c.objects().collect(),
            morphisms: c.morphism_ids().collect(),
        }
    }

    /// The functor sending everything to `b` and its identity.
    pub fn constant(source: &Arc<FinCategory>, target: &Arc<FinCategory>, b: ObjId) -> Result<Self> {
        if b >= target.num_objects() {
            return Err(Error::shape("constant object is out of range"));
        }
        Ok(FinFunctor {
            source: source.clone(),
            target: target.clone(),
            objects: vec![b; source.num_objects()],
            morphisms: vec![target.identity(b); source.num_morphisms()],
        })
    }

    /// `after ∘ first`.
    pub fn compose(after: &FinFunctor, first: &FinFunctor) -> Result<Self> {
        if first.target != after.source {
            return Err(Error::shape("functors are not composable"));
        }
        Ok(FinFunctor {
            source: first.source.clone(),
            target: after.target.clone(),
            objects: first.objects.iter().map(|&b| after.objects[b]).collect(),
            morphisms: first.morphisms.iter().map(|&g| after.morphisms[g]).collect(),
        })
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn obj(&self, a: ObjId) -> ObjId {
        self.objects[a]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.morphisms[f]
    }

    pub fn object_map(&self) -> &[ObjId] {
        &self.objects
    }

    pub fn morphism_map(&self) -> &[MorId] {
        &self.morphisms
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }

    /// The same maps viewed between the opposite categories.
    pub fn opposite(&self, source_op: &Arc<FinCategory>, target_op: &Arc<FinCategory>) -> Self {
        FinFunctor {
            source: source_op.clone(),
            target: target_op.clone(),
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let (s, t) = (&*self.source, &*self.target);
        let mut out = Vec::new();
        for f in s.morphism_ids() {
            let g = self.morphisms[f];
            if t.src(g) != self.objects[s.src(f)] || t.dst(g) != self.objects[s.dst(f)] {
                out.push(Violation::new(
                    Law::FunctorEndpoints,
                    [s.morphism_name(f), t.morphism_name(g)],
                ));
            }
        }
        for a in s.objects() {
            if self.morphisms[s.identity(a)] != t.identity(self.objects[a]) {
                out.push(Violation::new(Law::FunctorIdentity, [s.object_name(a)]));
            }
        }
        for g in s.morphism_ids() {
            for f in s.morphism_ids() {
                let Some(gf) = s.compose(g, f) else { continue };
                if t.compose(self.morphisms[g], self.morphisms[f]) != Some(self.morphisms[gf]) {
                    out.push(Violation::new(
                        Law::FunctorComposition,
                        [s.morphism_name(g), s.morphism_name(f)],
                    ));
                }
            }
        }
        out
    }

    /// Whether the induced maps `Mor(a, b) → Mor(Fa, Fb)` are all injective.
    pub fn is_faithful(&self) -> bool {
        self.hom_map_check(|img, hom_len, _| img == hom_len)
    }

    /// Whether the induced maps `Mor(a, b) → Mor(Fa, Fb)` are all surjective.
    pub fn is_full(&self) -> bool {
        self.hom_map_check(|img, _, target_len| img == target_len)
    }

    fn hom_map_check(&self, ok: impl Fn(usize, usize, usize) -> bool) -> bool {
        let (s, t) = (&*self.source, &*self.target);
        for a in s.objects() {
            for b in s.objects() {
                let hom = s.hom(a, b);
                let mut image: Vec<MorId> = hom.iter().map(|&f| self.morphisms[f]).collect();
                image.sort_unstable();
                image.dedup();
                let target_len = t.hom(self.objects[a], self.objects[b]).len();
                if !ok(image.len(), hom.len(), target_len) {
                    return false;
                }
            }
        }
        true
    }
}
