use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Law, Result, Violation};
use crate::fincat::{FinCategory, FinFunctor, MorId, NatTrans, ObjId};

/// A monad `(T, μ, η)` on a finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinMonad {
    t: FinFunctor,
    mu: NatTrans,
    eta: NatTrans,
}

/// A comonad `(S, δ, ε)` on a finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinComonad {
    s: FinFunctor,
    delta: NatTrans,
    eps: NatTrans,
}

/// An object with a structure morphism `ρ : T(A) → A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TModule {
    pub carrier: ObjId,
    pub structure: MorId,
}

/// An object with a costructure morphism `ρ : A → S(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SComodule {
    pub carrier: ObjId,
    pub costructure: MorId,
}

fn require_endo(f: &FinFunctor) -> Result<()> {
    if f.is_endo() {
        Ok(())
    } else {
        Err(Error::shape("a (co)monad needs an endofunctor"))
    }
}

impl FinMonad {
    pub fn new(t: FinFunctor, mu: NatTrans, eta: NatTrans) -> Result<Self> {
        require_endo(&t)?;
        let tt = FinFunctor::compose(&t, &t)?;
        if mu.source() != &tt || mu.target() != &t {
            return Err(Error::shape("multiplication must be TT ⇒ T"));
        }
        if eta.source() != &FinFunctor::identity(t.source()) || eta.target() != &t {
            return Err(Error::shape("unit must be Id ⇒ T"));
        }
        Ok(FinMonad { t, mu, eta })
    }

    pub fn from_components(t: FinFunctor, mu: Vec<MorId>, eta: Vec<MorId>) -> Result<Self> {
        require_endo(&t)?;
        let c = t.source().clone();
        let tt = FinFunctor::compose(&t, &t)?;
        let mu = NatTrans::new(tt, t.clone(), mu)?;
        let eta = NatTrans::new(FinFunctor::identity(&c), t.clone(), eta)?;
        Ok(FinMonad { t, mu, eta })
    }

    pub fn identity(c: &Arc<FinCategory>) -> Self {
        let id = FinFunctor::identity(c);
        let ids: Vec<MorId> = c.objects().map(|a| c.identity(a)).collect();
        FinMonad::from_components(id, ids.clone(), ids).expect("identity monad is well-shaped")
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        self.t.source()
    }

    pub fn functor(&self) -> &FinFunctor {
        &self.t
    }

    pub fn mu(&self) -> &NatTrans {
        &self.mu
    }

    pub fn eta(&self) -> &NatTrans {
        &self.eta
    }

    /// Functor laws, naturality, associativity and both unit laws.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.t.validate();
        out.extend(self.mu.validate());
        out.extend(self.eta.validate());
        if !out.is_empty() {
            return out;
        }
        let c = &**self.category();
        for a in c.objects() {
            let ta = self.t.obj(a);
            let mu_a = self.mu.at(a);
            let name = c.object_name(a);
            if c.compose(mu_a, self.t.mor(mu_a)) != c.compose(mu_a, self.mu.at(ta)) {
                out.push(Violation::new(Law::MonadAssociativity, [name]));
            }
            if c.compose(mu_a, self.t.mor(self.eta.at(a))) != Some(c.identity(ta)) {
                out.push(Violation::new(Law::MonadLeftUnit, [name]));
            }
            if c.compose(mu_a, self.eta.at(ta)) != Some(c.identity(ta)) {
                out.push(Violation::new(Law::MonadRightUnit, [name]));
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        crate::error::check(self.validate())
    }

    /// Whether `(a, rho)` satisfies `ρ∘η_A = id` and `ρ∘T(ρ) = ρ∘μ_A`.
    pub fn is_module(&self, a: ObjId, rho: MorId) -> bool {
        let c = &**self.category();
        c.src(rho) == self.t.obj(a)
            && c.dst(rho) == a
            && c.compose(rho, self.eta.at(a)) == Some(c.identity(a))
            && c.compose(rho, self.t.mor(rho)) == c.compose(rho, self.mu.at(a))
    }

    /// Every module, found by scanning all `T(A) → A` for every `A`.
    pub fn modules(&self) -> Vec<TModule> {
        let c = &**self.category();
        let mut out = Vec::new();
        for a in c.objects() {
            for &rho in c.hom(self.t.obj(a), a) {
                if self.is_module(a, rho) {
                    out.push(TModule {
                        carrier: a,
                        structure: rho,
                    });
                }
            }
        }
        out
    }

    /// The dual comonad on the opposite category.
    pub fn opposite(&self) -> FinComonad {
        let op = Arc::new(self.category().opposite());
        let s = self.t.opposite(&op, &op);
        FinComonad::from_components(s, self.mu.components().to_vec(), self.eta.components().to_vec())
            .expect("dual of a well-shaped monad is well-shaped")
    }
}

impl FinComonad {
    pub fn new(s: FinFunctor, delta: NatTrans, eps: NatTrans) -> Result<Self> {
        require_endo(&s)?;
        let ss = FinFunctor::compose(&s, &s)?;
        if delta.source() != &s || delta.target() != &ss {
            return Err(Error::shape("comultiplication must be S ⇒ SS"));
        }
        if eps.source() != &s || eps.target() != &FinFunctor::identity(s.source()) {
            return Err(Error::shape("counit must be S ⇒ Id"));
        }
        Ok(FinComonad { s, delta, eps })
    }

    pub fn from_components(s: FinFunctor, delta: Vec<MorId>, eps: Vec<MorId>) -> Result<Self> {
        require_endo(&s)?;
        let c = s.source().clone();
        let ss = FinFunctor::compose(&s, &s)?;
        let delta = NatTrans::new(s.clone(), ss, delta)?;
        let eps = NatTrans::new(s.clone(), FinFunctor::identity(&c), eps)?;
        Ok(FinComonad { s, delta, eps })
    }

    pub fn identity(c: &Arc<FinCategory>) -> Self {
        let id = FinFunctor::identity(c);
        let ids: Vec<MorId> = c.objects().map(|a| c.identity(a)).collect();
        FinComonad::from_components(id, ids.clone(), ids).expect("identity comonad is well-shaped")
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        self.s.source()
    }

    pub fn functor(&self) -> &FinFunctor {
        &self.s
    }

    pub fn delta(&self) -> &NatTrans {
        &self.delta
    }

    pub fn eps(&self) -> &NatTrans {
        &self.eps
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.s.validate();
        out.extend(self.delta.validate());
        out.extend(self.eps.validate());
        if !out.is_empty() {
            return out;
        }
        let c = &**self.category();
        for a in c.objects() {
            let sa = self.s.obj(a);
            let d_a = self.delta.at(a);
            let name = c.object_name(a);
            if c.compose(self.s.mor(d_a), d_a) != c.compose(self.delta.at(sa), d_a) {
                out.push(Violation::new(Law::ComonadCoassociativity, [name]));
            }
            if c.compose(self.s.mor(self.eps.at(a)), d_a) != Some(c.identity(sa)) {
                out.push(Violation::new(Law::ComonadLeftCounit, [name]));
            }
            if c.compose(self.eps.at(sa), d_a) != Some(c.identity(sa)) {
                out.push(Violation::new(Law::ComonadRightCounit, [name]));
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        crate::error::check(self.validate())
    }

    /// Whether `(a, rho)` satisfies `ε_A∘ρ = id` and `δ_A∘ρ = S(ρ)∘ρ`.
    pub fn is_comodule(&self, a: ObjId, rho: MorId) -> bool {
        let c = &**self.category();
        c.src(rho) == a
            && c.dst(rho) == self.s.obj(a)
            && c.compose(self.eps.at(a), rho) == Some(c.identity(a))
            && c.compose(self.delta.at(a), rho) == c.compose(self.s.mor(rho), rho)
    }

    pub fn comodules(&self) -> Vec<SComodule> {
        let c = &**self.category();
        let mut out = Vec::new();
        for a in c.objects() {
            for &rho in c.hom(a, self.s.obj(a)) {
                if self.is_comodule(a, rho) {
                    out.push(SComodule {
                        carrier: a,
                        costructure: rho,
                    });
                }
            }
        }
        out
    }

    /// The dual monad on the opposite category.
    pub fn opposite(&self) -> FinMonad {
        let op = Arc::new(self.category().opposite());
        let t = self.s.opposite(&op, &op);
        FinMonad::from_components(t, self.delta.components().to_vec(), self.eps.components().to_vec())
            .expect("dual of a well-shaped comonad is well-shaped")
    }
}
