//! Finite categories as explicit composition tables, with functors,
//! natural transformations and exhaustive morphism classification.

mod category;
mod classify;
mod functor;
pub mod json;
mod nattrans;

pub use category::{CategoryBuilder, FinCategory, MorId, Morphism, ObjId, DEFAULT_MORPHISM_BUDGET};
pub use classify::MorphismFlags;
pub use functor::FinFunctor;
pub use nattrans::{NatTrans, Side};

use crate::error::{check, Result};

/// `Ok(())` iff every category law holds; failures name the law and witnesses.
pub fn validate_category(c: &FinCategory) -> Result<()> {
    check(c.validate())
}

pub fn classify_morphism(c: &FinCategory, m: MorId) -> MorphismFlags {
    c.classify(m)
}

pub fn validate_functor(f: &FinFunctor) -> Result<()> {
    check(f.validate())
}

pub fn validate_nattrans(alpha: &NatTrans) -> Result<()> {
    check(alpha.validate())
}

/// `after ∘ first`.
pub fn compose_functors(after: &FinFunctor, first: &FinFunctor) -> Result<FinFunctor> {
    FinFunctor::compose(after, first)
}

pub fn whisker(alpha: &NatTrans, functor: &FinFunctor, side: Side) -> Result<NatTrans> {
    alpha.whisker(functor, side)
}

/// `second ∘ first`.
pub fn vertical_compose(second: &NatTrans, first: &NatTrans) -> Result<NatTrans> {
    second.vertical(first)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::error::{Error, Law};

    fn chain(n: usize) -> Arc<FinCategory> {
        Arc::new(FinCategory::from_preorder(n, |a, b| a <= b).unwrap())
    }

    fn vect_f2_dim_le_1() -> FinCategory {
        let mut b = CategoryBuilder::new();
        let zero = b.object("0");
        let one = b.object("F2");
        let z01 = b.morphism("0->F2", zero, one);
        let z10 = b.morphism("F2->0", one, zero);
        let z11 = b.morphism("zero", one, one);
        let (id0, _) = (b.identity_of(zero), b.identity_of(one));
        b.compose(z10, z01, id0)
            .compose(z01, z10, z11)
            .compose(z11, z11, z11)
            .compose(z11, z01, z01)
            .compose(z10, z11, z10);
        b.build().unwrap()
    }

    #[test]
    fn terminal_category_is_valid() {
        let mut b = CategoryBuilder::new();
        b.object("*");
        let c = b.build().unwrap();
        assert!(validate_category(&c).is_ok());
        assert_eq!(c.num_morphisms(), 1);
    }

    #[test]
    fn chain_of_three_is_valid_with_six_morphisms() {
        let c = chain(3);
        assert_eq!(c.num_morphisms(), 6);
        assert!(validate_category(&c).is_ok());
    }

    #[test]
    fn associativity_failure_names_the_triple() {
        // Loop tables on {id, f, g} with f∘f = g and g∘f = f; search the
        // remaining entries for one that breaks associativity.
        let mut found = false;
        for fg in 0..3 {
            for gg in 0..3 {
                let mut b = CategoryBuilder::new();
                let x = b.object("x");
                let f = b.morphism("f", x, x);
                let g = b.morphism("g", x, x);
                let ids = [b.identity_of(x), f, g];
                b.compose(f, f, g).compose(g, f, f).compose(f, g, ids[fg]).compose(g, g, ids[gg]);
                let c = b.build().unwrap();
                let brute_force_ok = (0..3).all(|h| {
                    (0..3).all(|k| (0..3).all(|l| c.comp(h, c.comp(k, l)) == c.comp(c.comp(h, k), l)))
                });
                let report = c.validate();
                assert_eq!(report.is_empty(), brute_force_ok);
                if !brute_force_ok {
                    found = true;
                    let first = &report[0];
                    assert_eq!(first.law, Law::Associativity);
                    if fg != 1 {
                        // f∘(f∘f) = f∘g differs from (f∘f)∘f = g∘f = f.
                        assert_eq!(first.witness, vec!["f", "f", "f"]);
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn non_composable_entry_is_a_shape_error() {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let y = b.object("y");
        let f = b.morphism("f", x, y);
        b.compose(f, f, f);
        assert!(matches!(b.build(), Err(Error::Shape(_))));
    }

    #[test]
    fn budget_rejects_large_categories() {
        let err = FinCategory::from_parts_with_budget(
            vec!["x".into()],
            vec![Morphism { name: "id".into(), src: 0, dst: 0 }],
            vec![0],
            &[],
            0,
        );
        assert!(matches!(err, Err(Error::Budget { .. })));
    }

    #[test]
    fn identity_is_everything() {
        let c = chain(3);
        let flags = classify_morphism(&c, c.identity(1));
        assert!(flags.mono && flags.epi && flags.iso);
        assert!(flags.extremal_mono && flags.extremal_epi);
        assert!(flags.retraction && flags.coretraction);
    }

    #[test]
    fn strict_arrow_in_two_chain() {
        let c = chain(2);
        let m = c.hom(0, 1)[0];
        let flags = classify_morphism(&c, m);
        assert!(flags.mono && flags.epi);
        assert!(!flags.iso && !flags.extremal_epi && !flags.extremal_mono);
        assert!(!flags.retraction && !flags.coretraction);
    }

    #[test]
    fn zero_endomorphism_of_f2() {
        let c = vect_f2_dim_le_1();
        assert!(validate_category(&c).is_ok());
        let z = c.find_morphism("zero").unwrap();
        let flags = c.classify(z);
        assert!(!flags.mono && !flags.epi && !flags.iso);
        // 0 -> F2 is mono, F2 -> 0 is epi, and both split.
        let inj = c.classify(c.find_morphism("0->F2").unwrap());
        assert!(inj.mono && inj.coretraction && !inj.epi);
        let proj = c.classify(c.find_morphism("F2->0").unwrap());
        assert!(proj.epi && proj.retraction && !proj.mono);
    }

    #[test]
    fn classify_all_matches_classify() {
        let c = vect_f2_dim_le_1();
        let all = c.classify_all();
        for m in c.morphism_ids() {
            assert_eq!(all[m], c.classify(m));
        }
    }

    #[test]
    fn iso_witness_is_explicit() {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let y = b.object("y");
        let f = b.morphism("f", x, y);
        let g = b.morphism("g", y, x);
        let (ix, iy) = (b.identity_of(x), b.identity_of(y));
        b.compose(g, f, ix).compose(f, g, iy);
        let c = b.build().unwrap();
        assert!(validate_category(&c).is_ok());
        assert_eq!(c.iso_witness(x, y), Some((f, g)));
    }

    #[test]
    fn identity_and_constant_functors_are_valid() {
        let c = chain(3);
        assert!(validate_functor(&FinFunctor::identity(&c)).is_ok());
        let k = FinFunctor::constant(&c, &c, 2).unwrap();
        assert!(validate_functor(&k).is_ok());
    }

    #[test]
    fn non_monotone_object_map_is_reported() {
        let c = chain(3);
        // 0 ↦ 0, 1 ↦ 2, 2 ↦ 1 fails on 1 <= 2.
        let obj = [0usize, 2, 1];
        let mor = c
            .morphism_ids()
            .map(|m| {
                let (a, b) = (obj[c.src(m)], obj[c.dst(m)]);
                c.hom(a, b).first().copied().unwrap_or(c.identity(a))
            })
            .collect();
        let f = FinFunctor::new(c.clone(), c.clone(), obj.to_vec(), mor).unwrap();
        let err = validate_functor(&f).unwrap_err();
        let Error::Invalid(v) = err else { panic!("expected law failure") };
        assert_eq!(v[0].law, Law::FunctorEndpoints);
        assert_eq!(v[0].witness[0], "1<=2");
    }

    #[test]
    fn functor_shape_errors_are_distinct() {
        let c = chain(2);
        let err = FinFunctor::new(c.clone(), c.clone(), vec![0], vec![]).unwrap_err();
        assert!(err.is_input_error());
    }

    fn closure_on_chain() -> (FinFunctor, NatTrans) {
        // 0 ↦ 1, 1 ↦ 1, 2 ↦ 2 on 0 < 1 < 2.
        let c = chain(3);
        let obj = vec![1usize, 1, 2];
        let mor = c.morphism_ids().map(|m| c.hom(obj[c.src(m)], obj[c.dst(m)])[0]).collect();
        let t = FinFunctor::new(c.clone(), c.clone(), obj.clone(), mor).unwrap();
        let eta = NatTrans::new(
            FinFunctor::identity(&c),
            t.clone(),
            (0..3).map(|a| c.hom(a, obj[a])[0]).collect(),
        )
        .unwrap();
        (t, eta)
    }

    #[test]
    fn whiskered_unit_of_closure_is_symmetric() {
        let (t, eta) = closure_on_chain();
        assert!(validate_nattrans(&eta).is_ok());
        let t_eta = whisker(&eta, &t, Side::Left).unwrap();
        let eta_t = whisker(&eta, &t, Side::Right).unwrap();
        assert!(validate_nattrans(&t_eta).is_ok());
        assert!(validate_nattrans(&eta_t).is_ok());
        assert_eq!(t_eta.components(), eta_t.components());
        assert_eq!(t_eta.source(), eta_t.source());
    }

    #[test]
    fn identity_transformations_are_units() {
        let (t, eta) = closure_on_chain();
        let id_t = NatTrans::identity(&t);
        assert_eq!(whisker(&id_t, &t, Side::Left).unwrap(), NatTrans::identity(&compose_functors(&t, &t).unwrap()));
        assert_eq!(vertical_compose(&id_t, &eta).unwrap(), eta);
        let id_src = NatTrans::identity(eta.source());
        assert_eq!(vertical_compose(&eta, &id_src).unwrap(), eta);
    }

    #[test]
    fn wrong_component_breaks_naturality() {
        let c = vect_f2_dim_le_1();
        let c = Arc::new(c);
        let id = FinFunctor::identity(&c);
        let z = c.find_morphism("zero").unwrap();
        let alpha = NatTrans::new(id.clone(), id, vec![c.identity(0), z]).unwrap();
        // The zero endomorphism is natural on this category.
        assert!(validate_nattrans(&alpha).is_ok());
        let beta = NatTrans::new(
            FinFunctor::identity(&c),
            FinFunctor::identity(&c),
            vec![c.identity(0), c.find_morphism("0->F2").unwrap()],
        )
        .unwrap();
        let Error::Invalid(v) = validate_nattrans(&beta).unwrap_err() else { panic!() };
        assert_eq!(v[0].law, Law::ComponentEndpoints);
    }

    #[test]
    fn opposite_reverses_composition() {
        let c = chain(3);
        let op = c.opposite();
        assert!(validate_category(&op).is_ok());
        let f = c.hom(0, 1)[0];
        let g = c.hom(1, 2)[0];
        assert_eq!(op.compose(f, g), c.compose(g, f));
        assert_eq!(op.src(f), 1);
    }
}
