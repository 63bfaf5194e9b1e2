//! Adjunctions between finite categories: induced (co)monads, comparison
//! and related functors, idempotent pairs, fixed subcategories and star pairs.

mod adjunction;
mod idempotent;
pub mod json;
mod opposite;
mod related;

pub use adjunction::{FinAdjunction, HomBijection};
pub use idempotent::{equivalence, fix, pair_battery, star_pair, FixSide, FixSubcategory, PairBatteryReport, StarPairReport};
pub use related::{analyse_units, Comparison, Related, StructureAnalysis, UnitAnalysis};

use crate::error::{check, Result};
use crate::fincat::ObjId;
use crate::monadics::{FinComonad, FinMonad};
use crate::report::Battery;

pub fn validate_adjunction(a: &FinAdjunction) -> Result<()> {
    check(a.validate())
}

pub fn hom_bijection(a: &FinAdjunction, x: ObjId, y: ObjId) -> HomBijection {
    a.hom_bijection(x, y)
}

pub fn induced_monad(a: &FinAdjunction) -> Result<FinMonad> {
    a.induced_monad()
}

pub fn induced_comonad(a: &FinAdjunction) -> Result<FinComonad> {
    a.induced_comonad()
}

/// `Ḡ : B → A_GF` and `F̄ : A → B^FG`, with the categories they land in.
pub fn comparison_functors(a: &FinAdjunction) -> Result<Comparison> {
    Comparison::new(a)
}

/// `F̃`, `G̃` and the check that the related-functors diagram commutes.
pub fn related_functors(a: &FinAdjunction) -> Result<(Related, Battery)> {
    let cmp = Comparison::new(a)?;
    Ok((cmp.related()?, cmp.diagram(a)?))
}

pub fn unit_module_morphism_analysis(a: &FinAdjunction) -> Result<UnitAnalysis> {
    analyse_units(a, &Comparison::new(a)?)
}

pub fn idempotent_pair_battery(a: &FinAdjunction) -> Result<PairBatteryReport> {
    pair_battery(a, &Comparison::new(a)?)
}

/// Refuses with [`crate::Error::Refused`] when the pair is not idempotent.
pub fn verify_equivalence(a: &FinAdjunction) -> Result<Battery> {
    let cmp = Comparison::new(a)?;
    let battery = pair_battery(a, &cmp)?;
    equivalence(a, &cmp, &battery)
}

pub fn star_pair_check(a: &FinAdjunction) -> Result<StarPairReport> {
    star_pair(a)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::error::{Error, Law};
    use crate::fincat::{FinCategory, FinFunctor};
    use crate::monadics::{build_em_adjunction, idempotence_battery, idempotence_battery_comonad};
    use crate::report::{Verdict, Witness};

    fn chain(n: usize) -> Arc<FinCategory> {
        Arc::new(FinCategory::from_preorder(n, |a, b| a <= b).unwrap())
    }

    /// `f(0)=0, f(1)=2` from the 2-chain into the 3-chain, with its right adjoint.
    fn embedding() -> FinAdjunction {
        FinAdjunction::between_preorders(&chain(2), &chain(3), &[0, 2], &[0, 0, 1]).unwrap()
    }

    /// Reflector onto `{1, 2}` in the 3-chain, with the inclusion as right adjoint.
    fn reflective() -> FinAdjunction {
        let a = chain(3);
        let b = chain(2);
        FinAdjunction::between_preorders(&a, &b, &[0, 0, 1], &[1, 2]).unwrap()
    }

    #[test]
    fn identity_adjunction_is_valid() {
        let a = FinAdjunction::identity(&chain(3));
        validate_adjunction(&a).unwrap();
        assert_eq!(induced_monad(&a).unwrap(), FinMonad::identity(a.a()));
        assert_eq!(induced_comonad(&a).unwrap(), FinComonad::identity(a.b()));
    }

    #[test]
    fn galois_connection_between_two_chains() {
        let c = chain(2);
        let a = FinAdjunction::between_preorders(&c, &c, &[0, 0], &[1, 1]).unwrap();
        validate_adjunction(&a).unwrap();
        let m = induced_monad(&a).unwrap();
        assert_eq!(m.functor().object_map(), &[1, 1]);
        assert!(FinAdjunction::between_preorders(&c, &c, &[1, 1], &[0, 0]).is_err());
    }

    #[test]
    fn perturbed_unit_fails_at_that_object() {
        let c = Arc::new(FinCategory::from_monoid(&[vec![0, 1], vec![1, 1]]).unwrap());
        let id = FinFunctor::identity(&c);
        let z = c.find_morphism("m1").unwrap();
        let a = FinAdjunction::from_components(id.clone(), id, vec![z], vec![c.identity(0)]).unwrap();
        let Err(Error::Invalid(v)) = validate_adjunction(&a) else { panic!() };
        assert_eq!(v[0].law, Law::TriangleLeft);
        assert_eq!(v[0].witness, vec!["*".to_string()]);
    }

    #[test]
    fn hom_bijection_identities_and_round_trip() {
        let a = embedding();
        for x in a.a().objects() {
            let fx = a.left().obj(x);
            let h = hom_bijection(&a, x, fx);
            let id = a.b().identity(fx);
            assert!(h.forward.contains(&(id, a.unit().at(x))));
        }
        for y in a.b().objects() {
            let gy = a.right().obj(y);
            let h = hom_bijection(&a, gy, y);
            let id = a.a().identity(gy);
            assert!(h.backward.contains(&(id, a.counit().at(y))));
        }
        for x in a.a().objects() {
            for y in a.b().objects() {
                assert!(hom_bijection(&a, x, y).mutually_inverse);
            }
        }
    }

    #[test]
    fn em_adjunction_induces_its_monad() {
        let m = induced_monad(&reflective()).unwrap();
        let em = build_em_adjunction(&m).unwrap();
        assert_eq!(em.adjunction.induced_monad().unwrap(), m);
    }

    #[test]
    fn comparison_lands_in_closed_elements() {
        let a = reflective();
        let cmp = comparison_functors(&a).unwrap();
        let carriers: Vec<_> = a
            .b()
            .objects()
            .map(|y| cmp.em.modules[cmp.g_bar.obj(y)].carrier)
            .collect();
        assert_eq!(carriers, vec![1, 2]);
        let u_g = FinFunctor::compose(cmp.em.forgetful(), &cmp.g_bar).unwrap();
        assert_eq!(&u_g, a.right());
        for x in a.a().objects() {
            let y = cmp.coem.comodules[cmp.f_bar.obj(x)];
            assert_eq!(y.carrier, a.left().obj(x));
            assert_eq!(y.costructure, a.left().mor(a.unit().at(x)));
        }
    }

    #[test]
    fn related_diagram_commutes() {
        for a in [embedding(), reflective(), FinAdjunction::identity(&chain(2))] {
            let (_, diagram) = related_functors(&a).unwrap();
            assert_eq!(diagram.verdict(), Verdict::AllTrue, "{diagram}");
        }
    }

    #[test]
    fn unit_analysis_agrees() {
        for a in [embedding(), reflective(), FinAdjunction::identity(&chain(3))] {
            let u = unit_module_morphism_analysis(&a).unwrap();
            assert!(u.agrees());
            assert!(u.modules.iter().all(|x| x.iso));
        }
    }

    #[test]
    fn pair_battery_on_examples() {
        for a in [embedding(), reflective(), FinAdjunction::identity(&chain(3))] {
            let r = idempotent_pair_battery(&a).unwrap();
            assert_eq!(r.verdict(), Verdict::AllTrue, "{}", r.battery);
            let m = idempotence_battery(&a.induced_monad().unwrap()).unwrap();
            let s = idempotence_battery_comonad(&a.induced_comonad().unwrap()).unwrap();
            assert_eq!(m.verdict(), r.verdict());
            assert_eq!(s.verdict(), r.verdict());
        }
    }

    #[test]
    fn fix_is_closed_elements() {
        let a = reflective();
        let f = fix(&a, FixSide::Gf).unwrap();
        assert_eq!(f.members, vec![1, 2]);
        assert!(f.coincides_with_image());
        assert_eq!(f.subcategory.num_morphisms(), 3);
        let id = FinAdjunction::identity(&chain(3));
        assert_eq!(fix(&id, FixSide::Fg).unwrap().members, vec![0, 1, 2]);
    }

    #[test]
    fn equivalences() {
        for a in [embedding(), reflective(), FinAdjunction::identity(&chain(2))] {
            let e = verify_equivalence(&a).unwrap();
            assert_eq!(e.verdict(), Verdict::AllTrue, "{e}");
        }
    }

    #[test]
    fn star_pairs() {
        let id = star_pair_check(&FinAdjunction::identity(&chain(3))).unwrap();
        assert!(id.star);
        assert!(id.closure.unwrap().conjunction());

        let codiscrete = Arc::new(FinCategory::from_preorder(2, |_, _| true).unwrap());
        let a = FinAdjunction::between_preorders(&chain(1), &codiscrete, &[0], &[0, 0]).unwrap();
        assert!(star_pair_check(&a).unwrap().star);

        let r = star_pair_check(&reflective()).unwrap();
        assert!(!r.star);
        assert!(r.unit_witness.is_some());
        assert_eq!(r.counit_witness, None);

        let r = star_pair_check(&embedding()).unwrap();
        assert!(!r.star);
        assert_eq!(r.unit_witness, None);
        assert_eq!(
            r.counit_witness,
            Some(Witness::Object { object: "1".into() })
        );
    }
}
