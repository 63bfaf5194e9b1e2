use crate::error::Result;
use crate::fincat::{FinCategory, FinFunctor, MorId, NatTrans, ObjId};
use crate::report::{Battery, Witness};

use super::em::{CoEilenbergMoore, EilenbergMoore};
use super::monad::{FinComonad, FinMonad};

pub(crate) fn object(c: &FinCategory, a: ObjId) -> Witness {
    Witness::Object {
        object: c.object_name(a).to_string(),
    }
}

fn module(c: &FinCategory, carrier: ObjId, structure: MorId) -> Witness {
    Witness::Module {
        carrier: c.object_name(carrier).to_string(),
        structure: c.morphism_name(structure).to_string(),
    }
}

/// First pair of objects of `category` on which `u` is not full, or not
/// faithful, reported as a base morphism missing from (or hit twice by) the image.
pub(crate) fn full_faithful_witness(u: &FinFunctor) -> Option<Witness> {
    let (src, tgt) = (&**u.source(), &**u.target());
    for x in src.objects() {
        for y in src.objects() {
            let mut image: Vec<MorId> = src.hom(x, y).iter().map(|&f| u.mor(f)).collect();
            image.sort_unstable();
            let before = image.len();
            image.dedup();
            let target = tgt.hom(u.obj(x), u.obj(y));
            if image.len() != before || image.len() != target.len() {
                let detail = target
                    .iter()
                    .find(|g| image.binary_search(g).is_err())
                    .map(|&g| tgt.morphism_name(g).to_string())
                    .unwrap_or_else(|| "two morphisms with the same image".into());
                return Some(Witness::Morphism {
                    morphism: detail,
                    source: src.object_name(x).to_string(),
                    target: src.object_name(y).to_string(),
                });
            }
        }
    }
    None
}

pub(crate) fn non_iso(alpha: &NatTrans) -> Option<Witness> {
    alpha.first_non_iso().map(|a| object(alpha.domain(), a))
}

fn first_difference(c: &FinCategory, lhs: &[MorId], rhs: &[MorId]) -> Option<Witness> {
    (0..lhs.len()).find(|&a| lhs[a] != rhs[a]).map(|a| object(c, a))
}

/// The seven conditions of the idempotent-monad theorem, each evaluated on
/// its own; (e) is split into `Tη` iso and `ηT` iso.
pub fn monad_battery(m: &FinMonad, em: &EilenbergMoore) -> Result<Battery> {
    let c = &**m.category();
    let t = m.functor();
    let t_eta = m.eta().whisker_left(t)?;
    let eta_t = m.eta().whisker_right(t)?;
    let t_mu = m.mu().whisker_left(t)?;
    let mu_t = m.mu().whisker_right(t)?;

    let mut b = Battery::new("idempotent monad");
    b.push(
        "a",
        "forgetful functor of the Eilenberg-Moore category is full and faithful",
        full_faithful_witness(em.forgetful()),
    );
    b.push(
        "b",
        "counit of the free/forgetful adjunction is an isomorphism",
        em.adjunction
            .counit()
            .first_non_iso()
            .map(|i| module(c, em.modules[i].carrier, em.modules[i].structure)),
    );
    b.push("c", "multiplication is an isomorphism", non_iso(m.mu()));
    b.push(
        "d",
        "every module structure morphism is an isomorphism",
        em.modules
            .iter()
            .find(|x| !c.is_iso(x.structure))
            .map(|x| module(c, x.carrier, x.structure)),
    );
    b.push("e.T_eta", "T applied to the unit is an isomorphism", non_iso(&t_eta));
    b.push("e.eta_T", "the unit at T is an isomorphism", non_iso(&eta_t));
    b.push(
        "f",
        "T applied to the unit equals the unit at T",
        first_difference(c, t_eta.components(), eta_t.components()),
    );
    b.push(
        "g",
        "T applied to the multiplication equals the multiplication at T",
        first_difference(c, t_mu.components(), mu_t.components()),
    );
    Ok(b)
}

/// The dual battery for a comonad, with keys matching [`monad_battery`].
pub fn comonad_battery(s: &FinComonad, co: &CoEilenbergMoore) -> Result<Battery> {
    let c = &**s.category();
    let f = s.functor();
    let s_eps = s.eps().whisker_left(f)?;
    let eps_s = s.eps().whisker_right(f)?;
    let s_delta = s.delta().whisker_left(f)?;
    let delta_s = s.delta().whisker_right(f)?;

    let mut b = Battery::new("idempotent comonad");
    b.push(
        "a",
        "forgetful functor of the comodule category is full and faithful",
        full_faithful_witness(co.forgetful()),
    );
    b.push(
        "b",
        "unit of the forgetful/cofree adjunction is an isomorphism",
        co.adjunction
            .unit()
            .first_non_iso()
            .map(|i| module(c, co.comodules[i].carrier, co.comodules[i].costructure)),
    );
    b.push("c", "comultiplication is an isomorphism", non_iso(s.delta()));
    b.push(
        "d",
        "every comodule costructure morphism is an isomorphism",
        co.comodules
            .iter()
            .find(|x| !c.is_iso(x.costructure))
            .map(|x| module(c, x.carrier, x.costructure)),
    );
    b.push("e.S_eps", "S applied to the counit is an isomorphism", non_iso(&s_eps));
    b.push("e.eps_S", "the counit at S is an isomorphism", non_iso(&eps_s));
    b.push(
        "f",
        "S applied to the counit equals the counit at S",
        first_difference(c, s_eps.components(), eps_s.components()),
    );
    b.push(
        "g",
        "S applied to the comultiplication equals the comultiplication at S",
        first_difference(c, s_delta.components(), delta_s.components()),
    );
    Ok(b)
}
