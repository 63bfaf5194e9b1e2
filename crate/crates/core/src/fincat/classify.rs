use serde::Serialize;

use super::category::{FinCategory, MorId, ObjId};

/// Properties of a single morphism, all decided by exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct MorphismFlags {
    pub mono: bool,
    pub epi: bool,
    pub extremal_mono: bool,
    pub extremal_epi: bool,
    pub iso: bool,
    /// Split epi: has a right inverse.
    pub retraction: bool,
    /// Split mono: has a left inverse.
    pub coretraction: bool,
}

impl FinCategory {
    /// `m ∘ f = m ∘ g ⇒ f = g` for every parallel pair into `src(m)`.
    pub fn is_mono(&self, m: MorId) -> bool {
        let a = self.src(m);
        let mut seen = Vec::new();
        for x in self.objects() {
            seen.clear();
            for &f in self.hom(x, a) {
                seen.push(self.comp(m, f));
            }
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        true
    }

    /// `f ∘ e = g ∘ e ⇒ f = g` for every parallel pair out of `dst(e)`.
    pub fn is_epi(&self, e: MorId) -> bool {
        let b = self.dst(e);
        let mut seen = Vec::new();
        for y in self.objects() {
            seen.clear();
            for &f in self.hom(b, y) {
                seen.push(self.comp(f, e));
            }
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        true
    }

    /// The two-sided inverse of `m`, if one exists.
    pub fn inverse(&self, m: MorId) -> Option<MorId> {
        let (a, b) = (self.src(m), self.dst(m));
        self.hom(b, a).iter().copied().find(|&n| {
            self.compose(n, m) == Some(self.identity(a)) && self.compose(m, n) == Some(self.identity(b))
        })
    }

    pub fn is_iso(&self, m: MorId) -> bool {
        self.inverse(m).is_some()
    }

    /// A right inverse `s` with `m ∘ s = id`.
    pub fn section(&self, m: MorId) -> Option<MorId> {
        let (a, b) = (self.src(m), self.dst(m));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&s| self.compose(m, s) == Some(self.identity(b)))
    }

    /// A left inverse `r` with `r ∘ m = id`.
    pub fn retraction_of(&self, m: MorId) -> Option<MorId> {
        let (a, b) = (self.src(m), self.dst(m));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&r| self.compose(r, m) == Some(self.identity(a)))
    }

    /// A pair of mutually inverse morphisms `a → b`, `b → a`.
    pub fn iso_witness(&self, a: ObjId, b: ObjId) -> Option<(MorId, MorId)> {
        self.hom(a, b)
            .iter()
            .find_map(|&f| self.inverse(f).map(|g| (f, g)))
    }

    pub fn isomorphic(&self, a: ObjId, b: ObjId) -> bool {
        self.iso_witness(a, b).is_some()
    }

    pub fn classify(&self, m: MorId) -> MorphismFlags {
        let mono = |f: MorId| self.is_mono(f);
        let epi = |f: MorId| self.is_epi(f);
        self.classify_with(m, &mono, &epi)
    }

    /// Flags for every morphism, sharing the mono/epi work across the search.
    pub fn classify_all(&self) -> Vec<MorphismFlags> {
        let monos: Vec<bool> = self.morphism_ids().map(|f| self.is_mono(f)).collect();
        let epis: Vec<bool> = self.morphism_ids().map(|f| self.is_epi(f)).collect();
        self.morphism_ids()
            .map(|m| self.classify_with(m, &|f| monos[f], &|f| epis[f]))
            .collect()
    }

    fn classify_with(
        &self,
        m: MorId,
        mono: &dyn Fn(MorId) -> bool,
        epi: &dyn Fn(MorId) -> bool,
    ) -> MorphismFlags {
        let iso = self.is_iso(m);
        let is_mono = mono(m);
        let is_epi = epi(m);
        let (a, b) = (self.src(m), self.dst(m));
        // Every factorization m = outer ∘ inner through every intermediate object.
        let mut extremal_epi = is_epi;
        let mut extremal_mono = is_mono;
        for y in self.objects() {
            for &inner in self.hom(a, y) {
                for &outer in self.hom(y, b) {
                    if self.compose(outer, inner) != Some(m) {
                        continue;
                    }
                    if extremal_epi && mono(outer) && !self.is_iso(outer) {
                        extremal_epi = false;
                    }
                    if extremal_mono && epi(inner) && !self.is_iso(inner) {
                        extremal_mono = false;
                    }
                }
            }
        }
        MorphismFlags {
            mono: is_mono,
            epi: is_epi,
            extremal_mono,
            extremal_epi,
            iso,
            retraction: self.section(m).is_some(),
            coretraction: self.retraction_of(m).is_some(),
        }
    }
}
