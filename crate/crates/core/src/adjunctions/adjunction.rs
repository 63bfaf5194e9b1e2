use std::sync::Arc;

use crate::error::{check, Error, Law, Result, Violation};
use crate::fincat::{FinCategory, FinFunctor, MorId, NatTrans, ObjId};
use crate::monadics::{FinComonad, FinMonad};

/// Both directions of the adjunction bijection on one pair of objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomBijection {
    /// `(f, φ(f))` for every `f : F(A) → B`.
    pub forward: Vec<(MorId, MorId)>,
    /// `(g, φ⁻¹(g))` for every `g : A → G(B)`.
    pub backward: Vec<(MorId, MorId)>,
    pub mutually_inverse: bool,
}

/// An adjunction `F ⊣ G` with `F : A → B`, `G : B → A`, unit `η : Id ⇒ GF`
/// and counit `ε : FG ⇒ Id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAdjunction {
    left: FinFunctor,
    right: FinFunctor,
    unit: NatTrans,
    counit: NatTrans,
}

impl FinAdjunction {
    pub fn new(left: FinFunctor, right: FinFunctor, unit: NatTrans, counit: NatTrans) -> Result<Self> {
        if left.source() != right.target() || left.target() != right.source() {
            return Err(Error::shape("F and G must go in opposite directions"));
        }
        let gf = FinFunctor::compose(&right, &left)?;
        let fg = FinFunctor::compose(&left, &right)?;
        if unit.source() != &FinFunctor::identity(left.source()) || unit.target() != &gf {
            return Err(Error::shape("unit must be Id ⇒ GF"));
        }
        if counit.source() != &fg || counit.target() != &FinFunctor::identity(left.target()) {
            return Err(Error::shape("counit must be FG ⇒ Id"));
        }
        Ok(FinAdjunction {
            left,
            right,
            unit,
            counit,
        })
    }

    pub fn from_components(
        left: FinFunctor,
        right: FinFunctor,
        unit: Vec<MorId>,
        counit: Vec<MorId>,
    ) -> Result<Self> {
        let gf = FinFunctor::compose(&right, &left)?;
        let fg = FinFunctor::compose(&left, &right)?;
        let unit = NatTrans::new(FinFunctor::identity(left.source()), gf, unit)?;
        let counit = NatTrans::new(fg, FinFunctor::identity(left.target()), counit)?;
        FinAdjunction::new(left, right, unit, counit)
    }

    pub fn identity(c: &Arc<FinCategory>) -> Self {
        let id = FinFunctor::identity(c);
        let ids: Vec<MorId> = c.objects().map(|a| c.identity(a)).collect();
        FinAdjunction::from_components(id.clone(), id, ids.clone(), ids).expect("identity adjunction")
    }

    /// An adjunction between thin categories (preorders) given by its object
    /// maps; fails with a shape error when the maps are not a Galois connection.
    pub fn between_preorders(
        a: &Arc<FinCategory>,
        b: &Arc<FinCategory>,
        f: &[ObjId],
        g: &[ObjId],
    ) -> Result<Self> {
        let arrow = |c: &FinCategory, x: ObjId, y: ObjId| {
            c.hom(x, y).first().copied().ok_or_else(|| {
                Error::shape(format!("no morphism {} -> {}", c.object_name(x), c.object_name(y)))
            })
        };
        if f.len() != a.num_objects() || g.len() != b.num_objects() {
            return Err(Error::shape("object maps have the wrong length"));
        }
        let fm = a
            .morphism_ids()
            .map(|m| arrow(b, f[a.src(m)], f[a.dst(m)]))
            .collect::<Result<Vec<_>>>()?;
        let gm = b
            .morphism_ids()
            .map(|m| arrow(a, g[b.src(m)], g[b.dst(m)]))
            .collect::<Result<Vec<_>>>()?;
        let unit = a.objects().map(|x| arrow(a, x, g[f[x]])).collect::<Result<Vec<_>>>()?;
        let counit = b.objects().map(|y| arrow(b, f[g[y]], y)).collect::<Result<Vec<_>>>()?;
        let left = FinFunctor::new(a.clone(), b.clone(), f.to_vec(), fm)?;
        let right = FinFunctor::new(b.clone(), a.clone(), g.to_vec(), gm)?;
        FinAdjunction::from_components(left, right, unit, counit)
    }

    /// `F`.
    pub fn left(&self) -> &FinFunctor {
        &self.left
    }

    /// `G`.
    pub fn right(&self) -> &FinFunctor {
        &self.right
    }

    pub fn unit(&self) -> &NatTrans {
        &self.unit
    }

    pub fn counit(&self) -> &NatTrans {
        &self.counit
    }

    /// The category `A` (domain of `F`).
    pub fn a(&self) -> &Arc<FinCategory> {
        self.left.source()
    }

    /// The category `B` (domain of `G`).
    pub fn b(&self) -> &Arc<FinCategory> {
        self.left.target()
    }

    /// Functor laws, naturality and the triangle identities
    /// `ε_{FA} ∘ F(η_A) = id` and `G(ε_B) ∘ η_{GB} = id`.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.left.validate();
        out.extend(self.right.validate());
        out.extend(self.unit.validate());
        out.extend(self.counit.validate());
        if !out.is_empty() {
            return out;
        }
        let (a, b) = (&**self.a(), &**self.b());
        for x in a.objects() {
            let fx = self.left.obj(x);
            if b.compose(self.counit.at(fx), self.left.mor(self.unit.at(x))) != Some(b.identity(fx)) {
                out.push(Violation::new(Law::TriangleLeft, [a.object_name(x)]));
            }
        }
        for y in b.objects() {
            let gy = self.right.obj(y);
            if a.compose(self.right.mor(self.counit.at(y)), self.unit.at(gy)) != Some(a.identity(gy)) {
                out.push(Violation::new(Law::TriangleRight, [b.object_name(y)]));
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        check(self.validate())
    }

    /// `φ(f) = G(f) ∘ η_A` for `f : F(A) → B`.
    pub fn transpose(&self, x: ObjId, f: MorId) -> MorId {
        self.a().comp(self.right.mor(f), self.unit.at(x))
    }

    /// `φ⁻¹(g) = ε_B ∘ F(g)` for `g : A → G(B)`.
    pub fn transpose_back(&self, y: ObjId, g: MorId) -> MorId {
        self.b().comp(self.counit.at(y), self.left.mor(g))
    }

    /// The bijection `Mor(F(A), B) ≅ Mor(A, G(B))` in both directions.
    pub fn hom_bijection(&self, x: ObjId, y: ObjId) -> HomBijection {
        let (a, b) = (&**self.a(), &**self.b());
        let forward: Vec<(MorId, MorId)> = b
            .hom(self.left.obj(x), y)
            .iter()
            .map(|&f| (f, self.transpose(x, f)))
            .collect();
        let backward: Vec<(MorId, MorId)> = a
            .hom(x, self.right.obj(y))
            .iter()
            .map(|&g| (g, self.transpose_back(y, g)))
            .collect();
        let round_trip = forward
            .iter()
            .all(|&(f, g)| self.transpose_back(y, g) == f)
            && backward.iter().all(|&(g, f)| self.transpose(x, f) == g);
        let mutually_inverse = round_trip && forward.len() == backward.len();
        HomBijection {
            forward,
            backward,
            mutually_inverse,
        }
    }

    /// The monad `(GF, GεF, η)` on `A`.
    pub fn induced_monad(&self) -> Result<FinMonad> {
        let gf = FinFunctor::compose(&self.right, &self.left)?;
        let mu = self.counit.whisker_right(&self.left)?.whisker_left(&self.right)?;
        FinMonad::from_components(gf, mu.components().to_vec(), self.unit.components().to_vec())
    }

    /// The comonad `(FG, FηG, ε)` on `B`.
    pub fn induced_comonad(&self) -> Result<FinComonad> {
        let fg = FinFunctor::compose(&self.left, &self.right)?;
        let delta = self.unit.whisker_right(&self.right)?.whisker_left(&self.left)?;
        FinComonad::from_components(fg, delta.components().to_vec(), self.counit.components().to_vec())
    }
}
