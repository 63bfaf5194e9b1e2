use std::sync::{Arc, OnceLock};

use adjforge::adjunctions::{idempotent_pair_battery, FinAdjunction};
use adjforge::algmod::{dual_numbers, enumerate_modules, upper_triangular, LeftModule, DEFAULT_BUDGET};
use adjforge::corpus::{closure_monad, closure_operators, galois_adjunction, galois_connections, Poset};
use adjforge::ffla::PrimeField;
use adjforge::monadics::{build_em_adjunction, idempotence_battery, idempotence_battery_comonad};
use adjforge::report::Verdict;
use adjforge::starlab::{star_verdict, StarContext};
use proptest::prelude::*;
use proptest::sample::Index;

/// A poset on `0..n` whose order extends the natural one: the transitive
/// closure of the chosen pairs `i < j`.
fn poset() -> impl Strategy<Value = Poset> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let mut leq = vec![false; n * n];
            for i in 0..n {
                for j in 0..n {
                    leq[i * n + j] = i == j || (i < j && bits[i * n + j]);
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if leq[i * n + k] && leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
            Poset::new(n, |a, b| leq[a * n + b])
        })
    })
}

fn galois(p: &Poset, q: &Poset, pick: Index) -> Option<FinAdjunction> {
    let all = galois_connections(p, q);
    if all.is_empty() {
        return None;
    }
    let (f, g) = pick.get(&all);
    Some(galois_adjunction(&p.category(), &q.category(), f, g).unwrap())
}

fn small_modules() -> &'static [LeftModule] {
    static MODULES: OnceLock<Vec<LeftModule>> = OnceLock::new();
    MODULES.get_or_init(|| {
        let f = PrimeField::f2();
        [Arc::new(dual_numbers(f)), Arc::new(upper_triangular(f, 2))]
            .iter()
            .flat_map(|r| enumerate_modules(r, 2, DEFAULT_BUDGET).unwrap().modules)
            .filter(|m| m.dim() > 0)
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn opposite_category_is_an_involution(p in poset()) {
        let c = p.category();
        let op = c.opposite();
        prop_assert!(op.validate().is_empty());
        let back = op.opposite();
        prop_assert_eq!(back.num_morphisms(), c.num_morphisms());
        for m in c.morphism_ids() {
            prop_assert_eq!(back.src(m), c.src(m));
            prop_assert_eq!(back.dst(m), c.dst(m));
        }
    }

    #[test]
    fn morphism_classes_are_nested(p in poset()) {
        let c = p.category();
        for m in c.morphism_ids() {
            let k = c.classify(m);
            prop_assert!(!k.iso || (k.retraction && k.coretraction));
            prop_assert!(!k.extremal_epi || k.epi);
            prop_assert!(!k.extremal_mono || k.mono);
            prop_assert!(!k.retraction || k.extremal_epi);
            prop_assert!(!k.coretraction || k.extremal_mono);
        }
    }

    #[test]
    fn closure_monads_are_idempotent_and_dualize(p in poset(), pick in any::<Index>()) {
        let c = p.category();
        let ops = closure_operators(&p);
        let t = pick.get(&ops);
        let m = closure_monad(&c, t).unwrap();
        prop_assert!(m.validate().is_empty());
        let b = idempotence_battery(&m).unwrap();
        prop_assert_eq!(b.verdict(), Verdict::AllTrue);
        let dual = idempotence_battery_comonad(&m.opposite()).unwrap();
        prop_assert_eq!(dual.values(), b.values());
        let em = build_em_adjunction(&m).unwrap();
        prop_assert!(em.adjunction.validate().is_empty());
        let fixed = (0..p.len()).filter(|&a| t[a] == a).count();
        prop_assert_eq!(em.modules.len(), fixed);
    }

    #[test]
    fn galois_connections_are_idempotent_pairs(p in poset(), q in poset(), pick in any::<Index>()) {
        let a = galois(&p, &q, pick);
        prop_assume!(a.is_some());
        let a = a.unwrap();
        prop_assert!(a.validate().is_empty());
        for x in a.a().objects() {
            for y in a.b().objects() {
                prop_assert!(a.hom_bijection(x, y).mutually_inverse);
            }
        }
        prop_assert_eq!(idempotent_pair_battery(&a).unwrap().verdict(), Verdict::AllTrue);
        prop_assert!(a.opposite().validate().is_empty());
    }

    #[test]
    fn star_contexts_satisfy_the_triangle_identities(pick in any::<Index>()) {
        let p = pick.get(small_modules());
        let ctx = StarContext::auto_end(p, 2, DEFAULT_BUDGET).unwrap();
        for x in &ctx.s_window().modules {
            prop_assert!(ctx.triangle_tensor(x).unwrap().is_identity());
        }
        for n in &ctx.r_window().modules {
            prop_assert!(ctx.triangle_hom(n).unwrap().is_identity());
        }
    }

    #[test]
    fn certificates_revalidate(pick in any::<Index>()) {
        let p = pick.get(small_modules());
        let ctx = StarContext::auto_end(p, 2, DEFAULT_BUDGET).unwrap();
        let v = star_verdict(&ctx).unwrap();
        for c in &v.certificates {
            prop_assert!(c.revalidate(ctx.p()).unwrap());
        }
        let flags: Vec<bool> = ["b", "d", "e", "f"].iter().map(|k| v.battery.get(k).unwrap()).collect();
        prop_assert!(flags.iter().all(|&b| b == flags[0]));
    }
}
