use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{FinFunctor, MorId, ObjId, DEFAULT_MORPHISM_BUDGET};
use crate::monadics::{CoEilenbergMoore, EilenbergMoore, SComodule, TModule};
use crate::report::{Battery, Witness};

use super::FinAdjunction;

/// The EM category of `GF`, the comodule category of `FG` and the
/// comparison functors `Ḡ : B → A_GF`, `F̄ : A → B^FG`.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub em: EilenbergMoore,
    pub coem: CoEilenbergMoore,
    pub g_bar: FinFunctor,
    pub f_bar: FinFunctor,
}

/// `F̃ = F̄∘U_GF` and `G̃ = Ḡ∘U^FG`.
#[derive(Debug, Clone)]
pub struct Related {
    pub f_tilde: FinFunctor,
    pub g_tilde: FinFunctor,
}

fn missing(what: &str) -> Error {
    Error::shape(format!("{what} is not a (co)module; is the adjunction valid?"))
}

impl Comparison {
    pub fn new(a: &FinAdjunction) -> Result<Self> {
        Self::with_budget(a, DEFAULT_MORPHISM_BUDGET)
    }

    pub fn with_budget(a: &FinAdjunction, budget: usize) -> Result<Self> {
        a.ensure_valid()?;
        let (f, g) = (a.left(), a.right());
        let (ca, cb) = (a.a(), a.b());
        let em = EilenbergMoore::with_budget(&a.induced_monad()?, budget)?;
        let coem = CoEilenbergMoore::with_budget(&a.induced_comonad()?, budget)?;

        let g_obj = cb
            .objects()
            .map(|y| {
                em.find_module(TModule {
                    carrier: g.obj(y),
                    structure: g.mor(a.counit().at(y)),
                })
                .ok_or_else(|| missing("(G(B), Gε_B)"))
            })
            .collect::<Result<Vec<_>>>()?;
        let g_mor = cb
            .morphism_ids()
            .map(|m| {
                em.lift(g_obj[cb.src(m)], g_obj[cb.dst(m)], g.mor(m))
                    .ok_or_else(|| missing("G(g)"))
            })
            .collect::<Result<Vec<_>>>()?;
        let f_obj = ca
            .objects()
            .map(|x| {
                coem.find_comodule(SComodule {
                    carrier: f.obj(x),
                    costructure: f.mor(a.unit().at(x)),
                })
                .ok_or_else(|| missing("(F(A), Fη_A)"))
            })
            .collect::<Result<Vec<_>>>()?;
        let f_mor = ca
            .morphism_ids()
            .map(|m| {
                coem.lift(f_obj[ca.src(m)], f_obj[ca.dst(m)], f.mor(m))
                    .ok_or_else(|| missing("F(f)"))
            })
            .collect::<Result<Vec<_>>>()?;
        let g_bar = FinFunctor::new(cb.clone(), em.category.clone(), g_obj, g_mor)?;
        let f_bar = FinFunctor::new(ca.clone(), coem.category.clone(), f_obj, f_mor)?;
        Ok(Comparison {
            em,
            coem,
            g_bar,
            f_bar,
        })
    }

    pub fn related(&self) -> Result<Related> {
        Ok(Related {
            f_tilde: FinFunctor::compose(&self.f_bar, self.em.forgetful())?,
            g_tilde: FinFunctor::compose(&self.g_bar, self.coem.forgetful())?,
        })
    }

    /// The faces of the related-functors diagram, each compared on every
    /// object and morphism.
    pub fn diagram(&self, a: &FinAdjunction) -> Result<Battery> {
        let r = self.related()?;
        let u_gf = self.em.forgetful();
        let u_fg = self.coem.forgetful();
        let mut b = Battery::new("related functors diagram");
        b.push(
            "G_bar",
            "forgetful after G-bar equals G",
            functor_difference(&FinFunctor::compose(u_gf, &self.g_bar)?, a.right()),
        );
        b.push(
            "F_bar",
            "forgetful after F-bar equals F",
            functor_difference(&FinFunctor::compose(u_fg, &self.f_bar)?, a.left()),
        );
        b.push(
            "G_tilde",
            "forgetful after G-tilde equals G after forgetful",
            functor_difference(
                &FinFunctor::compose(u_gf, &r.g_tilde)?,
                &FinFunctor::compose(a.right(), u_fg)?,
            ),
        );
        b.push(
            "F_tilde",
            "forgetful after F-tilde equals F after forgetful",
            functor_difference(
                &FinFunctor::compose(u_fg, &r.f_tilde)?,
                &FinFunctor::compose(a.left(), u_gf)?,
            ),
        );
        Ok(b)
    }

    /// `F̃ ⊣ G̃` with unit `η` and counit `ε` lifted to (co)module morphisms;
    /// `None` unless `ηG` is an isomorphism.
    pub fn related_adjunction(&self, a: &FinAdjunction) -> Result<Option<FinAdjunction>> {
        let eta_g = a.unit().whisker_right(a.right())?;
        if !eta_g.is_iso() {
            return Ok(None);
        }
        let r = self.related()?;
        let gf = FinFunctor::compose(&r.g_tilde, &r.f_tilde)?;
        let fg = FinFunctor::compose(&r.f_tilde, &r.g_tilde)?;
        let mut unit = Vec::new();
        for (i, x) in self.em.modules.iter().enumerate() {
            match self.em.lift(i, gf.obj(i), a.unit().at(x.carrier)) {
                Some(e) => unit.push(e),
                None => return Ok(None),
            }
        }
        let mut counit = Vec::new();
        for (j, y) in self.coem.comodules.iter().enumerate() {
            match self.coem.lift(fg.obj(j), j, a.counit().at(y.carrier)) {
                Some(e) => counit.push(e),
                None => return Ok(None),
            }
        }
        let adj = FinAdjunction::from_components(r.f_tilde, r.g_tilde, unit, counit)?;
        Ok(adj.validate().is_empty().then_some(adj))
    }
}

/// First object, then first morphism, on which two parallel functors differ.
pub(crate) fn functor_difference(lhs: &FinFunctor, rhs: &FinFunctor) -> Option<Witness> {
    let c = lhs.source();
    if let Some(x) = c.objects().find(|&x| lhs.obj(x) != rhs.obj(x)) {
        return Some(Witness::Object {
            object: c.object_name(x).to_string(),
        });
    }
    c.morphism_ids().find(|&m| lhs.mor(m) != rhs.mor(m)).map(|m| Witness::Morphism {
        morphism: c.morphism_name(m).to_string(),
        source: c.object_name(c.src(m)).to_string(),
        target: c.object_name(c.dst(m)).to_string(),
    })
}

/// The three equivalent statements about one module `(A, ρ)` of `GF`, or
/// dually one comodule `(B, ρ^B)` of `FG`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureAnalysis {
    pub carrier: ObjId,
    pub structure: MorId,
    /// `η_A` (resp. `ε_B`) is a (co)module morphism.
    pub module_morphism: bool,
    /// `η_A` is epi (resp. `ε_B` is mono).
    pub epi_or_mono: bool,
    /// `η_A` (resp. `ε_B`) is an isomorphism.
    pub iso: bool,
    /// `ρ` is an isomorphism.
    pub structure_iso: bool,
}

impl StructureAnalysis {
    pub fn agrees(&self) -> bool {
        let v = self.module_morphism;
        self.epi_or_mono == v && self.iso == v && self.structure_iso == v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitAnalysis {
    pub modules: Vec<StructureAnalysis>,
    pub comodules: Vec<StructureAnalysis>,
}

impl UnitAnalysis {
    pub fn agrees(&self) -> bool {
        self.modules.iter().chain(&self.comodules).all(StructureAnalysis::agrees)
    }
}

pub fn analyse_units(a: &FinAdjunction, cmp: &Comparison) -> Result<UnitAnalysis> {
    let (ca, cb) = (&**a.a(), &**a.b());
    let (f, g) = (a.left(), a.right());
    let gf = FinFunctor::compose(g, f)?;
    let fg = FinFunctor::compose(f, g)?;
    let mu = a.counit().whisker_right(f)?.whisker_left(g)?;
    let delta = a.unit().whisker_right(g)?.whisker_left(f)?;
    let modules = cmp
        .em
        .modules
        .iter()
        .map(|x| {
            let eta = a.unit().at(x.carrier);
            StructureAnalysis {
                carrier: x.carrier,
                structure: x.structure,
                module_morphism: ca.compose(eta, x.structure)
                    == ca.compose(mu.at(x.carrier), gf.mor(eta)),
                epi_or_mono: ca.is_epi(eta),
                iso: ca.is_iso(eta),
                structure_iso: ca.is_iso(x.structure),
            }
        })
        .collect();
    let comodules = cmp
        .coem
        .comodules
        .iter()
        .map(|y| {
            let eps = a.counit().at(y.carrier);
            StructureAnalysis {
                carrier: y.carrier,
                structure: y.costructure,
                module_morphism: cb.compose(y.costructure, eps)
                    == cb.compose(fg.mor(eps), delta.at(y.carrier)),
                epi_or_mono: cb.is_mono(eps),
                iso: cb.is_iso(eps),
                structure_iso: cb.is_iso(y.costructure),
            }
        })
        .collect();
    Ok(UnitAnalysis { modules, comodules })
}
