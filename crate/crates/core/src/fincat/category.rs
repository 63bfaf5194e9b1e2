use std::collections::HashMap;

use crate::error::{Error, Law, Result, Violation};

pub type ObjId = usize;
pub type MorId = usize;

/// Default cap on the number of morphisms a category may have.
pub const DEFAULT_MORPHISM_BUDGET: usize = 512;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub src: ObjId,
    pub dst: ObjId,
}

/// A finite category stored as a dense composition table.
///
/// Construction only checks structure (ids in range, composable table
/// entries). The category laws are checked by [`FinCategory::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    table: Vec<u32>,
    homs: Vec<Vec<MorId>>,
}

impl FinCategory {
    /// Builds a category from raw parts with the default morphism budget.
    ///
    /// Composites with an identity that are absent from `compose` are filled
    /// in (`id ∘ f = f`, `f ∘ id = f`); explicit entries are kept as given.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        compose: &[(MorId, MorId, MorId)],
    ) -> Result<Self> {
        Self::from_parts_with_budget(objects, morphisms, identities, compose, DEFAULT_MORPHISM_BUDGET)
    }

    pub fn from_parts_with_budget(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        compose: &[(MorId, MorId, MorId)],
        budget: usize,
    ) -> Result<Self> {
        let n_obj = objects.len();
        let n_mor = morphisms.len();
        if n_mor > budget {
            return Err(Error::Budget {
                what: "category morphisms".into(),
                needed: n_mor,
                budget,
            });
        }
        let mut seen = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            if seen.insert(o.as_str(), i).is_some() {
                return Err(Error::shape(format!("duplicate object name {o:?}")));
            }
        }
        let mut seen = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            if m.src >= n_obj || m.dst >= n_obj {
                return Err(Error::shape(format!("morphism {:?} has a dangling endpoint", m.name)));
            }
            if seen.insert(m.name.as_str(), i).is_some() {
                return Err(Error::shape(format!("duplicate morphism name {:?}", m.name)));
            }
        }
        if identities.len() != n_obj {
            return Err(Error::shape(format!(
                "{} identities given for {} objects",
                identities.len(),
                n_obj
            )));
        }
        for (a, &id) in identities.iter().enumerate() {
            if id >= n_mor {
                return Err(Error::shape(format!("identity of {:?} is out of range", objects[a])));
            }
            if morphisms[id].src != a || morphisms[id].dst != a {
                return Err(Error::shape(format!(
                    "identity {:?} of {:?} is not an endomorphism of it",
                    morphisms[id].name, objects[a]
                )));
            }
        }
        let mut table = vec![NONE; n_mor * n_mor];
        for &(g, f, gf) in compose {
            if g >= n_mor || f >= n_mor || gf >= n_mor {
                return Err(Error::shape("composition entry refers to an unknown morphism"));
            }
            if morphisms[f].dst != morphisms[g].src {
                return Err(Error::shape(format!(
                    "composition entry ({}, {}) is not composable",
                    morphisms[g].name, morphisms[f].name
                )));
            }
            let slot = &mut table[g * n_mor + f];
            if *slot != NONE && *slot as usize != gf {
                return Err(Error::shape(format!(
                    "conflicting composition entries for ({}, {})",
                    morphisms[g].name, morphisms[f].name
                )));
            }
            *slot = gf as u32;
        }
        for (f, m) in morphisms.iter().enumerate() {
            let left = identities[m.dst] * n_mor + f;
            if table[left] == NONE {
                table[left] = f as u32;
            }
            let right = f * n_mor + identities[m.src];
            if table[right] == NONE {
                table[right] = f as u32;
            }
        }
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.src * n_obj + m.dst].push(i);
        }
        Ok(FinCategory {
            objects,
            morphisms,
            identities,
            table,
            homs,
        })
    }

    /// The category of a finite preorder on `0..n`: one morphism `a → b` iff `leq(a, b)`.
    pub fn from_preorder(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        let mut identities = vec![0; n];
        for (a, identity) in identities.iter_mut().enumerate() {
            for b in 0..n {
                if leq(a, b) {
                    index.insert((a, b), morphisms.len());
                    if a == b {
                        *identity = morphisms.len();
                    }
                    morphisms.push(Morphism {
                        name: format!("{a}<={b}"),
                        src: a,
                        dst: b,
                    });
                }
            }
        }
        for a in 0..n {
            if !index.contains_key(&(a, a)) {
                return Err(Error::shape(format!("relation is not reflexive at {a}")));
            }
        }
        let mut compose = Vec::new();
        for (&(a, b), &f) in &index {
            for c in 0..n {
                if let Some(&g) = index.get(&(b, c)) {
                    // Missing (a, c) breaks transitivity; leave the entry out so validation reports it.
                    if let Some(&gf) = index.get(&(a, c)) {
                        compose.push((g, f, gf));
                    }
                }
            }
        }
        Self::from_parts(objects, morphisms, identities, &compose)
    }

    /// The category with one object whose endomorphisms form the monoid with
    /// multiplication table `mul` (element 0 is the unit).
    pub fn from_monoid(mul: &[Vec<usize>]) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::shape("a monoid needs at least the unit"));
        }
        let morphisms = (0..n)
            .map(|i| Morphism {
                name: if i == 0 { "1".to_string() } else { format!("m{i}") },
                src: 0,
                dst: 0,
            })
            .collect();
        let mut compose = Vec::with_capacity(n * n);
        for (g, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::shape("monoid table is not square"));
            }
            for (f, &gf) in row.iter().enumerate() {
                compose.push((g, f, gf));
            }
        }
        Self::from_parts(vec!["*".into()], morphisms, vec![0], &compose)
    }

    /// The opposite category: same names, every arrow reversed.
    pub fn opposite(&self) -> FinCategory {
        let n = self.morphisms.len();
        let n_obj = self.objects.len();
        let morphisms: Vec<Morphism> = self
            .morphisms
            .iter()
            .map(|m| Morphism {
                name: m.name.clone(),
                src: m.dst,
                dst: m.src,
            })
            .collect();
        let mut table = vec![NONE; n * n];
        for g in 0..n {
            for f in 0..n {
                table[g * n + f] = self.table[f * n + g];
            }
        }
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.src * n_obj + m.dst].push(i);
        }
        FinCategory {
            objects: self.objects.clone(),
            morphisms,
            identities: self.identities.clone(),
            table,
            homs,
        }
    }

    /// The full subcategory on `members` (in the given order) and, for each
    /// of its morphisms, the morphism of `self` it came from.
    pub fn full_subcategory(&self, members: &[ObjId]) -> Result<(FinCategory, Vec<MorId>)> {
        let mut local = HashMap::new();
        for (i, &a) in members.iter().enumerate() {
            if a >= self.objects.len() || local.insert(a, i).is_some() {
                return Err(Error::shape("subcategory members must be distinct objects"));
            }
        }
        let mut parent = Vec::new();
        let mut index = HashMap::new();
        let mut morphisms = Vec::new();
        for &a in members {
            for &b in members {
                for &f in self.hom(a, b) {
                    index.insert(f, morphisms.len());
                    parent.push(f);
                    morphisms.push(Morphism {
                        name: self.morphisms[f].name.clone(),
                        src: local[&a],
                        dst: local[&b],
                    });
                }
            }
        }
        let identities = members.iter().map(|&a| index[&self.identities[a]]).collect();
        let mut compose = Vec::new();
        for (g, &pg) in parent.iter().enumerate() {
            for (f, &pf) in parent.iter().enumerate() {
                if let Some(h) = self.compose(pg, pf) {
                    compose.push((g, f, index[&h]));
                }
            }
        }
        let objects = members.iter().map(|&a| self.objects[a].clone()).collect();
        let sub = FinCategory::from_parts_with_budget(objects, morphisms, identities, &compose, usize::MAX)?;
        Ok((sub, parent))
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + '_ {
        0..self.objects.len()
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = MorId> + '_ {
        0..self.morphisms.len()
    }

    pub fn object_name(&self, a: ObjId) -> &str {
        &self.objects[a]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism(&self, f: MorId) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f].name
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.morphisms[f].src
    }

    pub fn dst(&self, f: MorId) -> ObjId {
        self.morphisms[f].dst
    }

    pub fn identity(&self, a: ObjId) -> MorId {
        self.identities[a]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities[self.src(f)] == f
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn find_morphism(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    /// The composite `g ∘ f`, if the table defines it.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        let v = self.table[g * self.morphisms.len() + f];
        (v != NONE).then_some(v as usize)
    }

    /// `g ∘ f` for a composable pair of a valid category.
    ///
    /// Panics when the table has no entry, which cannot happen after
    /// successful validation.
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        self.compose(g, f).unwrap_or_else(|| {
            panic!(
                "composite {} ∘ {} is undefined",
                self.morphisms[g].name, self.morphisms[f].name
            )
        })
    }

    /// Morphisms `a → b` in id order.
    pub fn hom(&self, a: ObjId, b: ObjId) -> &[MorId] {
        &self.homs[a * self.objects.len() + b]
    }

    /// Checks every category law and returns the failures in a fixed order.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.morphisms.len();
        let name = |f: MorId| self.morphisms[f].name.clone();
        let mut out = Vec::new();
        for g in 0..n {
            for f in 0..n {
                if self.src(g) != self.dst(f) {
                    continue;
                }
                match self.compose(g, f) {
                    None => out.push(Violation::new(Law::CompositionTotal, [name(g), name(f)])),
                    Some(gf) => {
                        if self.src(gf) != self.src(f) || self.dst(gf) != self.dst(g) {
                            out.push(Violation::new(
                                Law::CompositionEndpoints,
                                [name(g), name(f), name(gf)],
                            ));
                        }
                    }
                }
            }
        }
        for f in 0..n {
            let m = &self.morphisms[f];
            if self.compose(self.identities[m.dst], f) != Some(f) {
                out.push(Violation::new(Law::LeftIdentity, [name(f)]));
            }
            if self.compose(f, self.identities[m.src]) != Some(f) {
                out.push(Violation::new(Law::RightIdentity, [name(f)]));
            }
        }
        for h in 0..n {
            for g in 0..n {
                if self.src(h) != self.dst(g) {
                    continue;
                }
                let Some(hg) = self.compose(h, g) else { continue };
                for x in 0..self.objects.len() {
                    for &f in self.hom(x, self.src(g)) {
                        let Some(gf) = self.compose(g, f) else { continue };
                        let lhs = self.compose(h, gf);
                        let rhs = self.compose(hg, f);
                        if lhs.is_some() && rhs.is_some() && lhs != rhs {
                            out.push(Violation::new(Law::Associativity, [name(h), name(g), name(f)]));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Incremental construction of a [`FinCategory`] by name.
///
/// Every object gets an identity morphism named `id_<object>`.
#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    compose: Vec<(MorId, MorId, MorId)>,
    budget: Option<usize>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn budget(mut self, budget: usize) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn object(&mut self, name: &str) -> ObjId {
        let a = self.objects.len();
        self.objects.push(name.to_string());
        self.identities.push(self.morphisms.len());
        self.morphisms.push(Morphism {
            name: format!("id_{name}"),
            src: a,
            dst: a,
        });
        a
    }

    pub fn morphism(&mut self, name: &str, src: ObjId, dst: ObjId) -> MorId {
        self.morphisms.push(Morphism {
            name: name.to_string(),
            src,
            dst,
        });
        self.morphisms.len() - 1
    }

    pub fn identity_of(&self, a: ObjId) -> MorId {
        self.identities[a]
    }

    /// Records `g ∘ f = gf`.
    pub fn compose(&mut self, g: MorId, f: MorId, gf: MorId) -> &mut Self {
        self.compose.push((g, f, gf));
        self
    }

    pub fn build(self) -> Result<FinCategory> {
        FinCategory::from_parts_with_budget(
            self.objects,
            self.morphisms,
            self.identities,
            &self.compose,
            self.budget.unwrap_or(DEFAULT_MORPHISM_BUDGET),
        )
    }
}
