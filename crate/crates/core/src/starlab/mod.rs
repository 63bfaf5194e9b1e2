//! The adjunction `T_P ⊣ H_P` between `S`-modules and `R`-modules for an
//! `(R, S)`-bimodule `P`, checked on windows of small modules.

mod battery;
mod context;
mod presented;
mod verdict;
mod window;

pub use battery::{idempotence_battery_concrete, self_small_check, w_sigma_qp_check, QpWitness, SelfSmall, WSigmaQp};
pub use context::{injective_cogenerator, Counit, StarContext, Unit};
pub use presented::{Cocover, Cover};
pub use verdict::{revalidate_report, star_report, star_verdict, Certificate, CertificateKind, StarStatus, StarVerdict};
pub use window::{build_window_category, window_adjunction, Side, WindowAdjunction, WindowCategory};

use crate::algmod::{LeftModule, ModuleMap};
use crate::error::Result;

pub fn unit_matrix(ctx: &StarContext, x: &LeftModule) -> Result<ModuleMap> {
    ctx.unit_map(x)
}

pub fn counit_matrix(ctx: &StarContext, n: &LeftModule) -> Result<ModuleMap> {
    ctx.counit_map(n)
}

pub fn is_static(ctx: &StarContext, n: &LeftModule) -> Result<bool> {
    ctx.is_static(n)
}

pub fn is_adstatic(ctx: &StarContext, x: &LeftModule) -> Result<bool> {
    ctx.is_adstatic(x)
}

pub fn is_p_generated(ctx: &StarContext, n: &LeftModule) -> Result<bool> {
    ctx.is_p_generated(n)
}

pub fn is_p_presented(ctx: &StarContext, n: &LeftModule) -> Result<bool> {
    ctx.is_p_presented(n)
}

pub fn is_pstar_copresented(ctx: &StarContext, x: &LeftModule) -> Result<bool> {
    ctx.is_p_star_copresented(x)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algmod::{
        direct_sum, dual_numbers, endomorphism_algebra, prime_field, quotient, submodules, truncated_polynomials,
        upper_triangular, Bimodule,
        FqAlgebra, HomSpace, DEFAULT_BUDGET,
    };
    use crate::ffla::{Matrix, PrimeField};

    fn f2() -> PrimeField {
        PrimeField::f2()
    }

    fn dual() -> Arc<FqAlgebra> {
        Arc::new(dual_numbers(f2()))
    }

    fn t2() -> Arc<FqAlgebra> {
        Arc::new(upper_triangular(f2(), 2))
    }

    /// The simple module over the dual numbers: `x` acts by zero.
    fn simple(r: &Arc<FqAlgebra>) -> LeftModule {
        let one = Matrix::identity(f2(), 1);
        LeftModule::new(r, vec![one, Matrix::zeros(f2(), 1, 1)]).unwrap()
    }

    fn regular_ctx(r: &Arc<FqAlgebra>, d: usize) -> StarContext {
        StarContext::new(Bimodule::regular(r), d, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn zero_module_maps() {
        let r = dual();
        let ctx = regular_ctx(&r, 1);
        let zero_s = LeftModule::zero(ctx.s());
        let zero_r = LeftModule::zero(ctx.r());
        assert!(unit_matrix(&ctx, &zero_s).unwrap().is_iso());
        assert!(counit_matrix(&ctx, &zero_r).unwrap().is_iso());
    }

    #[test]
    fn simple_over_dual_numbers() {
        let r = dual();
        let ctx = StarContext::auto_end(&simple(&r), 2, DEFAULT_BUDGET).unwrap();
        assert!(ctx.s_is_end());
        assert_eq!(ctx.s().dim(), 1);
        let x = LeftModule::regular(ctx.s());
        let u = unit_matrix(&ctx, &x).unwrap();
        assert_eq!(u.matrix, Matrix::identity(f2(), 1));

        let reg = LeftModule::regular(&r);
        let e = counit_matrix(&ctx, &reg).unwrap();
        assert_eq!(e.matrix.shape(), (2, 1));
        assert!(e.is_injective() && !e.is_surjective());
        // The image is span{x}.
        assert_eq!(e.matrix.column(0), vec![0, 1]);

        assert!(!is_p_generated(&ctx, &reg).unwrap());
        assert!(is_static(&ctx, &simple(&r)).unwrap());
        assert!(!is_static(&ctx, &reg).unwrap());
    }

    #[test]
    fn regular_bimodule_is_morita_trivial() {
        for r in [dual(), t2(), Arc::new(prime_field(f2()))] {
            let ctx = regular_ctx(&r, 2);
            for x in &ctx.s_window().modules {
                assert!(is_adstatic(&ctx, x).unwrap());
            }
            for n in &ctx.r_window().modules {
                assert!(is_static(&ctx, n).unwrap());
                assert!(is_p_presented(&ctx, n).unwrap());
            }
            let s = LeftModule::regular(ctx.s());
            assert!(unit_matrix(&ctx, &s).unwrap().is_iso());
            assert!(counit_matrix(&ctx, &LeftModule::regular(&r)).unwrap().is_iso());
            let v = star_verdict(&ctx).unwrap();
            assert_eq!(v.status, StarStatus::StarOnWindow);
            assert!(v.battery.conjunction());
            assert!(v.closure.unwrap().conjunction());
            let qp = w_sigma_qp_check(&ctx, 1).unwrap();
            assert!(qp.holds && qp.complete);
        }
    }

    #[test]
    fn canonical_fixed_modules() {
        let r = t2();
        for p in [LeftModule::regular(&r), simple(&dual()), LeftModule::regular(&r).power(2)] {
            let ctx = StarContext::auto_end(&p, 1, DEFAULT_BUDGET).unwrap();
            assert!(is_static(&ctx, p_left(&ctx)).unwrap());
            assert!(is_adstatic(&ctx, &LeftModule::regular(ctx.s())).unwrap());
            assert!(is_adstatic(&ctx, &ctx.p_star().module).unwrap());
            assert!(is_pstar_copresented(&ctx, &ctx.p_star().module).unwrap());
            assert!(is_pstar_copresented(&ctx, &LeftModule::zero(ctx.s())).unwrap());
            assert!(is_p_presented(&ctx, &p_left(&ctx).power(2)).unwrap());
        }
    }

    fn p_left(ctx: &StarContext) -> &LeftModule {
        ctx.p().left()
    }

    #[test]
    fn triangle_identities_and_naturality() {
        let r = t2();
        let ctx = regular_ctx(&r, 2);
        let bare = StarContext::auto_end(&LeftModule::regular(&r).direct_sum(&r_simple_top(&r)).unwrap(), 2, DEFAULT_BUDGET)
            .unwrap();
        for ctx in [&ctx, &bare] {
            for x in &ctx.s_window().modules {
                assert!(ctx.triangle_tensor(x).unwrap().is_identity());
            }
            for n in &ctx.r_window().modules {
                assert!(ctx.triangle_hom(n).unwrap().is_identity());
            }
            let sw = &ctx.s_window().modules;
            for x in sw {
                for y in sw {
                    let (ux, uy) = (ctx.unit(x).unwrap(), ctx.unit(y).unwrap());
                    for h in HomSpace::compute(x, y).unwrap().basis() {
                        let th = ctx.t_map(&ux.tensor, &uy.tensor, h);
                        let hth = ctx.h_map(&ux.hom, &uy.hom, &th);
                        assert_eq!(&uy.matrix * h, &hth * &ux.matrix);
                    }
                }
            }
            let rw = &ctx.r_window().modules;
            for n in rw {
                for m in rw {
                    let (cn, cm) = (ctx.counit(n).unwrap(), ctx.counit(m).unwrap());
                    for g in HomSpace::compute(n, m).unwrap().basis() {
                        let hg = ctx.h_map(&cn.hom, &cm.hom, g);
                        let thg = ctx.t_map(&cn.tensor, &cm.tensor, &hg);
                        assert_eq!(g * &cn.matrix, &cm.matrix * &thg);
                    }
                }
            }
        }
    }

    /// The simple top of `T2`: `e11` acts by one, the rest by zero.
    fn r_simple_top(r: &Arc<FqAlgebra>) -> LeftModule {
        let (one, zero) = (Matrix::identity(f2(), 1), Matrix::zeros(f2(), 1, 1));
        LeftModule::new(r, vec![one, zero.clone(), zero]).unwrap()
    }

    #[test]
    fn projective_injective_over_t2_is_refuted() {
        let r = t2();
        // Column 2 of T2: spanned by e12, e22.
        let reg = LeftModule::regular(&r);
        let (p, _) = crate::algmod::submodule(&reg, &[vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let ctx = StarContext::auto_end(&p, 2, DEFAULT_BUDGET).unwrap();
        let v = star_verdict(&ctx).unwrap();
        assert_eq!(v.status, StarStatus::Refuted);
        for c in &v.certificates {
            assert!(c.revalidate(ctx.p()).unwrap());
        }
        let report = star_report(&ctx, &v).unwrap();
        assert!(revalidate_report(&report).unwrap().iter().all(|&ok| ok));
        for key in ["b", "d", "e", "f"] {
            assert_eq!(v.battery.get(key), Some(true), "{key}");
        }
    }

    #[test]
    fn tampered_certificate_fails() {
        let r = t2();
        let reg = LeftModule::regular(&r);
        let (p, _) = crate::algmod::submodule(&reg, &[vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let ctx = StarContext::auto_end(&p, 1, DEFAULT_BUDGET).unwrap();
        let v = star_verdict(&ctx).unwrap();
        let mut c = v.certificates[0].clone();
        let entry = &mut c.matrix[0][0];
        *entry = 1 - *entry;
        assert!(!c.revalidate(ctx.p()).unwrap());
    }

    fn qp_search(r: &Arc<FqAlgebra>, max_dim: usize) -> Option<(LeftModule, WSigmaQp)> {
        let window = crate::algmod::enumerate_modules(r, max_dim, DEFAULT_BUDGET).unwrap();
        for p in window.modules.iter().filter(|m| m.dim() > 0) {
            let ctx = StarContext::auto_end(p, 0, DEFAULT_BUDGET).unwrap();
            let qp = w_sigma_qp_check(&ctx, 2).unwrap();
            assert!(qp.complete);
            if !qp.holds {
                return Some((p.clone(), qp));
            }
        }
        None
    }

    #[test]
    fn every_small_t2_module_is_w_sigma_quasiprojective() {
        assert!(qp_search(&t2(), 3).is_none());
    }

    #[test]
    fn non_quasiprojective_witness() {
        let r = Arc::new(truncated_polynomials(f2(), 3));
        let (p, qp) = qp_search(&r, 3).expect("F₂ ⊕ F₂[x]/(x²) fails");
        assert_eq!(p.dim(), 3);
        let w = qp.witness.unwrap();
        // Recheck the witness directly: K ⊆ P^k is a P-generated submodule
        // and Hom(P, P^k) → Hom(P, P^k / K) is not onto.
        let power = p.power(w.copies);
        let kernel = Matrix::from_columns(f2(), power.dim(), &w.kernel);
        assert!(submodules(&power, DEFAULT_BUDGET).unwrap().contains(&kernel));
        let ctx = StarContext::auto_end(&p, 0, DEFAULT_BUDGET).unwrap();
        assert!(ctx.is_p_generated(&crate::algmod::submodule_on(&power, &kernel).unwrap()).unwrap());
        let (n, projection) = quotient(&power, &kernel).unwrap();
        let into_n = HomSpace::compute(&p, &n).unwrap();
        assert_eq!(into_n.dim(), w.hom_into_quotient);
        let images: Vec<Vec<u32>> = HomSpace::compute(&p, &power)
            .unwrap()
            .basis()
            .iter()
            .map(|f| (&projection * f).flatten())
            .collect();
        let rank = Matrix::from_columns(f2(), n.dim() * p.dim(), &images).rank();
        assert_eq!(rank, w.image_dim);
        assert!(rank < into_n.dim());
    }

    #[test]
    fn self_small_finite_sums() {
        let r = t2();
        let ctx = regular_ctx(&r, 0);
        let s = self_small_check(&ctx, 3).unwrap();
        assert!(s.holds);
        assert_eq!(s.checked, vec![(1, 3, 3), (2, 6, 6), (3, 9, 9)]);
    }

    #[test]
    fn window_category_over_f2() {
        let k = Arc::new(prime_field(f2()));
        let ctx = StarContext::new(Bimodule::regular(&k), 1, DEFAULT_BUDGET).unwrap();
        let w = build_window_category(&ctx, Side::R, 512).unwrap();
        let c = &w.category;
        assert_eq!(c.num_objects(), 2);
        assert_eq!(c.num_morphisms(), 5);
        assert!(c.validate().is_empty());
        // The identity of F₂ is the identity morphism.
        let one = w.modules.iter().position(|m| m.dim() == 1).unwrap();
        assert_eq!(w.morphism_of(one, one, &Matrix::identity(f2(), 1)), Some(c.identity(one)));
        // F₂ → 0 is onto, and is epi in the built category.
        let zero = 1 - one;
        let onto = w.morphism_of(one, zero, &Matrix::zeros(f2(), 0, 1)).unwrap();
        assert!(c.is_epi(onto));
    }

    #[test]
    fn window_adjunction_of_regular_bimodule() {
        let r = dual();
        let ctx = regular_ctx(&r, 2);
        let wa = window_adjunction(&ctx, 512).unwrap().expect("T and H stay in the window");
        assert!(wa.adjunction.validate().is_empty());
        assert!(wa.adjunction.unit().is_iso() && wa.adjunction.counit().is_iso());
        let (end, _) = endomorphism_algebra(&LeftModule::regular(&r)).unwrap();
        assert_eq!(end.dim(), 2);
    }

    #[test]
    fn direct_sum_of_static_is_static() {
        let r = dual();
        let ctx = StarContext::auto_end(&simple(&r), 1, DEFAULT_BUDGET).unwrap();
        let s2 = direct_sum(&[simple(&r), simple(&r)]).unwrap();
        assert!(is_static(&ctx, &s2).unwrap());
    }
}
