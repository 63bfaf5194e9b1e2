use std::collections::HashMap;
use std::sync::Arc;

use crate::adjunctions::FinAdjunction;
use crate::error::Result;
use crate::fincat::{FinCategory, FinFunctor, MorId, Morphism, ObjId, DEFAULT_MORPHISM_BUDGET};

use super::monad::{FinComonad, FinMonad, SComodule, TModule};

/// The Eilenberg–Moore category of a monad together with the free/forgetful
/// adjunction `φ_T ⊣ U_T`.
#[derive(Debug, Clone)]
pub struct EilenbergMoore {
    pub category: Arc<FinCategory>,
    pub modules: Vec<TModule>,
    /// Underlying base morphism of every EM morphism.
    pub underlying: Vec<MorId>,
    /// `φ_T : A → A_T` on the left, `U_T : A_T → A` on the right.
    pub adjunction: FinAdjunction,
}

/// The category of comodules of a comonad together with `U^S ⊣ φ^S`.
#[derive(Debug, Clone)]
pub struct CoEilenbergMoore {
    pub category: Arc<FinCategory>,
    pub comodules: Vec<SComodule>,
    pub underlying: Vec<MorId>,
    /// `U^S : A^S → A` on the left, the cofree functor `φ^S` on the right.
    pub adjunction: FinAdjunction,
}

impl EilenbergMoore {
    pub fn new(m: &FinMonad) -> Result<Self> {
        Self::with_budget(m, DEFAULT_MORPHISM_BUDGET)
    }

    pub fn with_budget(m: &FinMonad, budget: usize) -> Result<Self> {
        let c = m.category();
        let t = m.functor();
        let modules = m.modules();
        let index: HashMap<TModule, usize> = modules.iter().enumerate().map(|(i, &x)| (x, i)).collect();

        let objects: Vec<String> = modules
            .iter()
            .map(|x| format!("({}, {})", c.object_name(x.carrier), c.morphism_name(x.structure)))
            .collect();
        let mut morphisms = Vec::new();
        let mut underlying = Vec::new();
        let mut lookup = HashMap::new();
        for (i, x) in modules.iter().enumerate() {
            for (j, y) in modules.iter().enumerate() {
                for &f in c.hom(x.carrier, y.carrier) {
                    if c.compose(f, x.structure) == c.compose(y.structure, t.mor(f)) {
                        lookup.insert((i, j, f), morphisms.len());
                        morphisms.push(Morphism {
                            name: format!("{}@{}->{}", c.morphism_name(f), i, j),
                            src: i,
                            dst: j,
                        });
                        underlying.push(f);
                    }
                }
            }
        }
        let identities: Vec<MorId> = modules
            .iter()
            .enumerate()
            .map(|(i, x)| lookup[&(i, i, c.identity(x.carrier))])
            .collect();
        let mut compose = Vec::new();
        for (g, mg) in morphisms.iter().enumerate() {
            for (f, mf) in morphisms.iter().enumerate() {
                if mf.dst == mg.src {
                    let gf = c.comp(underlying[g], underlying[f]);
                    compose.push((g, f, lookup[&(mf.src, mg.dst, gf)]));
                }
            }
        }
        let em = Arc::new(FinCategory::from_parts_with_budget(
            objects,
            morphisms,
            identities,
            &compose,
            budget,
        )?);

        let forgetful = FinFunctor::new(
            em.clone(),
            c.clone(),
            modules.iter().map(|x| x.carrier).collect(),
            underlying.clone(),
        )?;
        let free_obj: Vec<ObjId> = c
            .objects()
            .map(|a| {
                index[&TModule {
                    carrier: t.obj(a),
                    structure: m.mu().at(a),
                }]
            })
            .collect();
        let free_mor: Vec<MorId> = c
            .morphism_ids()
            .map(|f| lookup[&(free_obj[c.src(f)], free_obj[c.dst(f)], t.mor(f))])
            .collect();
        let free = FinFunctor::new(c.clone(), em.clone(), free_obj.clone(), free_mor)?;
        let unit: Vec<MorId> = m.eta().components().to_vec();
        let counit: Vec<MorId> = modules
            .iter()
            .enumerate()
            .map(|(i, x)| lookup[&(free_obj[x.carrier], i, x.structure)])
            .collect();
        let adjunction = FinAdjunction::from_components(free, forgetful, unit, counit)?;
        Ok(EilenbergMoore {
            category: em,
            modules,
            underlying,
            adjunction,
        })
    }

    pub fn free(&self) -> &FinFunctor {
        self.adjunction.left()
    }

    pub fn forgetful(&self) -> &FinFunctor {
        self.adjunction.right()
    }

    pub fn find_module(&self, x: TModule) -> Option<ObjId> {
        self.modules.iter().position(|&y| y == x)
    }

    /// The EM morphism `i → j` over the base morphism `f`, if `f` is a module morphism.
    pub fn lift(&self, i: ObjId, j: ObjId, f: MorId) -> Option<MorId> {
        self.category.hom(i, j).iter().copied().find(|&e| self.underlying[e] == f)
    }
}

impl CoEilenbergMoore {
    pub fn new(s: &FinComonad) -> Result<Self> {
        Self::with_budget(s, DEFAULT_MORPHISM_BUDGET)
    }

    /// Built as the opposite of the EM category of the dual monad.
    pub fn with_budget(s: &FinComonad, budget: usize) -> Result<Self> {
        let dual = EilenbergMoore::with_budget(&s.opposite(), budget)?;
        let adjunction = dual.adjunction.opposite();
        let base = s.category().clone();
        let category = adjunction.a().clone();
        let left = FinFunctor::new(
            category.clone(),
            base.clone(),
            adjunction.left().object_map().to_vec(),
            adjunction.left().morphism_map().to_vec(),
        )?;
        let right = FinFunctor::new(
            base,
            category.clone(),
            adjunction.right().object_map().to_vec(),
            adjunction.right().morphism_map().to_vec(),
        )?;
        let adjunction = FinAdjunction::from_components(
            left,
            right,
            adjunction.unit().components().to_vec(),
            adjunction.counit().components().to_vec(),
        )?;
        Ok(CoEilenbergMoore {
            category,
            comodules: dual
                .modules
                .iter()
                .map(|x| SComodule {
                    carrier: x.carrier,
                    costructure: x.structure,
                })
                .collect(),
            underlying: dual.underlying,
            adjunction,
        })
    }

    pub fn forgetful(&self) -> &FinFunctor {
        self.adjunction.left()
    }

    pub fn cofree(&self) -> &FinFunctor {
        self.adjunction.right()
    }

    pub fn find_comodule(&self, x: SComodule) -> Option<ObjId> {
        self.comodules.iter().position(|&y| y == x)
    }

    pub fn lift(&self, i: ObjId, j: ObjId, f: MorId) -> Option<MorId> {
        self.category.hom(i, j).iter().copied().find(|&e| self.underlying[e] == f)
    }
}
