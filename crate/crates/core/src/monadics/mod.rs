//! Monads and comonads on finite categories, their (co)module categories
//! and the idempotence batteries.

mod battery;
mod em;
pub mod json;
mod monad;

pub use battery::{comonad_battery, monad_battery};
pub(crate) use battery::{full_faithful_witness, non_iso, object};
pub use em::{CoEilenbergMoore, EilenbergMoore};
pub use monad::{FinComonad, FinMonad, SComodule, TModule};

use crate::error::{check, Result};
use crate::report::Battery;

pub fn validate_monad(m: &FinMonad) -> Result<()> {
    check(m.validate())
}

pub fn validate_comonad(s: &FinComonad) -> Result<()> {
    check(s.validate())
}

pub fn enumerate_modules(m: &FinMonad) -> Vec<TModule> {
    m.modules()
}

pub fn enumerate_comodules(s: &FinComonad) -> Vec<SComodule> {
    s.comodules()
}

pub fn build_em_adjunction(m: &FinMonad) -> Result<EilenbergMoore> {
    EilenbergMoore::new(m)
}

pub fn build_coem_adjunction(s: &FinComonad) -> Result<CoEilenbergMoore> {
    CoEilenbergMoore::new(s)
}

/// Validates the monad, builds its EM category and evaluates every condition.
pub fn idempotence_battery(m: &FinMonad) -> Result<Battery> {
    m.ensure_valid()?;
    monad_battery(m, &EilenbergMoore::new(m)?)
}

pub fn idempotence_battery_comonad(s: &FinComonad) -> Result<Battery> {
    s.ensure_valid()?;
    comonad_battery(s, &CoEilenbergMoore::new(s)?)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::error::Error;
    use crate::fincat::{FinCategory, FinFunctor, MorId, NatTrans};
    use crate::report::Verdict;

    fn chain(n: usize) -> Arc<FinCategory> {
        Arc::new(FinCategory::from_preorder(n, |a, b| a <= b).unwrap())
    }

    fn arrow(c: &FinCategory, a: usize, b: usize) -> MorId {
        c.hom(a, b)[0]
    }

    /// Monotone inflationary idempotent map on a chain as a monad.
    fn poset_monad(c: &Arc<FinCategory>, t: &[usize]) -> FinMonad {
        let mors = c.morphism_ids().map(|f| arrow(c, t[c.src(f)], t[c.dst(f)])).collect();
        let tf = FinFunctor::new(c.clone(), c.clone(), t.to_vec(), mors).unwrap();
        let mu = c.objects().map(|a| arrow(c, t[t[a]], t[a])).collect();
        let eta = c.objects().map(|a| arrow(c, a, t[a])).collect();
        FinMonad::from_components(tf, mu, eta).unwrap()
    }

    fn closure() -> FinMonad {
        poset_monad(&chain(3), &[1, 1, 2])
    }

    /// Modules by the raw law equations, without using `is_module`.
    fn module_oracle(m: &FinMonad) -> Vec<TModule> {
        let c = m.category();
        let mut out = Vec::new();
        for rho in c.morphism_ids() {
            let a = c.dst(rho);
            if c.src(rho) != m.functor().obj(a) {
                continue;
            }
            let unit = c.compose(rho, m.eta().at(a)) == Some(c.identity(a));
            let assoc = c.compose(rho, m.functor().mor(rho)) == c.compose(rho, m.mu().at(a));
            if unit && assoc {
                out.push(TModule {
                    carrier: a,
                    structure: rho,
                });
            }
        }
        out.sort();
        out
    }

    #[test]
    fn identity_monad_is_idempotent() {
        let c = chain(2);
        let m = FinMonad::identity(&c);
        validate_monad(&m).unwrap();
        let mods = enumerate_modules(&m);
        assert_eq!(mods.len(), 2);
        assert!(mods.iter().all(|x| c.is_identity(x.structure)));
        let b = idempotence_battery(&m).unwrap();
        assert_eq!(b.verdict(), Verdict::AllTrue);
        assert_eq!(b.conditions.len(), 8);
    }

    #[test]
    fn closure_monad_modules_are_the_closed_elements() {
        let m = closure();
        validate_monad(&m).unwrap();
        let carriers: Vec<_> = enumerate_modules(&m).iter().map(|x| x.carrier).collect();
        assert_eq!(carriers, vec![1, 2]);
        let mut mods = enumerate_modules(&m);
        mods.sort();
        assert_eq!(mods, module_oracle(&m));
    }

    #[test]
    fn closure_em_category_is_the_closed_subposet() {
        let m = closure();
        let em = build_em_adjunction(&m).unwrap();
        assert_eq!(em.category.num_objects(), 2);
        assert_eq!(em.category.num_morphisms(), 3);
        assert!(em.category.validate().is_empty());
        em.adjunction.ensure_valid().unwrap();
        let free0 = em.free().obj(0);
        assert_eq!(em.modules[free0].carrier, 1);
        let induced = em.adjunction.induced_monad().unwrap();
        assert_eq!(&induced, &m);
    }

    #[test]
    fn counit_at_free_module_is_mu() {
        let m = closure();
        let em = build_em_adjunction(&m).unwrap();
        for a in m.category().objects() {
            let free = em.free().obj(a);
            let eps = em.adjunction.counit().at(free);
            assert_eq!(em.underlying[eps], m.mu().at(a));
        }
    }

    #[test]
    fn closure_battery_all_true() {
        let b = idempotence_battery(&closure()).unwrap();
        assert_eq!(b.verdict(), Verdict::AllTrue, "{b}");
    }

    #[test]
    fn interior_operator_comonad_battery_all_true() {
        let s = closure().opposite();
        validate_comonad(&s).unwrap();
        let b = idempotence_battery_comonad(&s).unwrap();
        assert_eq!(b.verdict(), Verdict::AllTrue, "{b}");
        let co = build_coem_adjunction(&s).unwrap();
        co.adjunction.ensure_valid().unwrap();
        assert_eq!(enumerate_comodules(&s).len(), 2);
    }

    #[test]
    fn op_duality_preserves_verdict_vector() {
        let m = closure();
        let s = m.opposite();
        assert_eq!(
            idempotence_battery(&m).unwrap().values(),
            idempotence_battery_comonad(&s).unwrap().values()
        );
        assert_eq!(s.opposite(), m);
    }

    #[test]
    fn missing_eta_component_is_a_shape_error() {
        let c = chain(3);
        let m = closure();
        let eta = NatTrans::new(FinFunctor::identity(&c), m.functor().clone(), vec![arrow(&c, 0, 1), arrow(&c, 1, 1)]);
        assert!(matches!(eta, Err(Error::Shape(_))));
    }

    #[test]
    fn broken_unit_law_names_the_object() {
        let c = Arc::new(FinCategory::from_monoid(&[vec![0, 1], vec![1, 1]]).unwrap());
        // T = Id, μ = constant zero, η = id: μ∘Tη = zero ≠ id.
        let id = FinFunctor::identity(&c);
        let zero = c.find_morphism("m1").unwrap();
        let m = FinMonad::from_components(id, vec![zero], vec![c.identity(0)]).unwrap();
        let err = validate_monad(&m).unwrap_err();
        let Error::Invalid(v) = err else { panic!() };
        assert_eq!(v[0].witness, vec!["*".to_string()]);
    }
}
