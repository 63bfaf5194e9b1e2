//! Finite-dimensional algebras over prime fields and their modules:
//! structure constants, representation matrices, Hom and End, tensor over
//! `S`, sub- and quotient modules, isomorphism search and enumeration of
//! all modules of bounded dimension.

mod algebra;
mod construct;
mod enumerate;
mod hom;
pub mod json;
mod module;

pub use algebra::{dual_numbers, matrix_algebra, prime_field, truncated_polynomials, upper_triangular, FqAlgebra};
pub use construct::{
    are_isomorphic, closure, direct_sum, quotient, submodule, submodule_on, submodules, IsoDecision, IsoStatus,
};
pub use enumerate::{enumerate_modules, ModuleWindow, DEFAULT_BUDGET};
pub use hom::{endomorphism_algebra, hom_as_left_s_module, hom_space, tensor_over, HomModule, HomSpace, Tensor};
pub use module::{Bimodule, LeftModule, ModuleMap};

use crate::error::{check, Result};

pub fn validate_algebra(a: &FqAlgebra) -> Result<()> {
    check(a.violations())
}

pub fn validate_module(m: &LeftModule) -> Result<()> {
    check(m.violations())
}

pub fn validate_bimodule(b: &Bimodule) -> Result<()> {
    check(b.violations())
}

pub fn validate_module_map(f: &ModuleMap) -> Result<()> {
    check(f.violations())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use proptest::prelude::*;

    use super::*;
    use crate::error::{Error, Law};
    use crate::ffla::{Matrix, PrimeField};

    fn f2() -> PrimeField {
        PrimeField::f2()
    }

    fn dual() -> Arc<FqAlgebra> {
        Arc::new(dual_numbers(f2()))
    }

    fn m(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(f2(), rows.len(), rows.first().map_or(0, Vec::len), rows).unwrap()
    }

    fn simple(r: &Arc<FqAlgebra>) -> LeftModule {
        LeftModule::new(r, vec![m(&[vec![1]]), m(&[vec![0]])]).unwrap()
    }

    #[test]
    fn small_algebras_validate() {
        validate_algebra(&prime_field(f2())).unwrap();
        validate_algebra(&dual_numbers(f2())).unwrap();
        validate_algebra(&upper_triangular(f2(), 2)).unwrap();
        assert_eq!(matrix_algebra(PrimeField::new(3).unwrap(), 2).dim(), 4);
    }

    #[test]
    fn broken_constants_are_reported() {
        // x·x = 1 + x and x·1 = 0 break both the unit and associativity.
        let c = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 0], vec![1, 1]]];
        let a = FqAlgebra::unchecked(f2(), c, vec![1, 0]).unwrap();
        let Err(Error::Invalid(v)) = validate_algebra(&a) else { panic!() };
        assert!(v.iter().any(|x| x.law == Law::AlgebraUnit && x.witness == ["b1"]));
        assert!(v.iter().any(|x| x.law == Law::AlgebraAssociativity));
    }

    #[test]
    fn hom_dimensions() {
        let field = Arc::new(prime_field(f2()));
        let v2 = LeftModule::new(&field, vec![Matrix::identity(f2(), 2)]).unwrap();
        let v3 = LeftModule::new(&field, vec![Matrix::identity(f2(), 3)]).unwrap();
        assert_eq!(hom_space(&v2, &v3).unwrap().len(), 6);

        let r = dual();
        let s = simple(&r);
        let reg = LeftModule::regular(&r);
        let h = hom_space(&s, &reg).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].matrix.column(0), vec![0, 1]);
        assert!(h.iter().all(|f| f.violations().is_empty()));
        assert_eq!(hom_space(&reg, &reg).unwrap().len(), 2);
    }

    #[test]
    fn endomorphism_algebras() {
        let r = dual();
        let (s, b) = endomorphism_algebra(&LeftModule::regular(&r)).unwrap();
        assert!(s.isomorphism_to(&r, 1 << 10).is_isomorphic());
        validate_bimodule(&b).unwrap();

        let (s, _) = endomorphism_algebra(&simple(&r)).unwrap();
        assert!(s.isomorphism_to(&prime_field(f2()), 16).is_isomorphic());

        let (s, _) = endomorphism_algebra(&LeftModule::regular(&r).power(2)).unwrap();
        assert_eq!(s.dim(), 4 * 2);
    }

    #[test]
    fn tensor_unit_laws() {
        let r = dual();
        let reg = Bimodule::regular(&r);
        let t = tensor_over(&reg, &LeftModule::regular(&r)).unwrap();
        assert!(are_isomorphic(&t.module, reg.left(), 1 << 10).unwrap().is_isomorphic());
        // p ⊗ s ↦ p·s identifies the quotient with P.
        let mult = Matrix::from_columns(
            f2(),
            2,
            &(0..4).map(|k| r.mul(&r.basis_vector(k / 2), &r.basis_vector(k % 2))).collect::<Vec<_>>(),
        );
        let induced = &mult * &t.section;
        assert!(induced.is_invertible());
        assert!((&(&induced * &t.projection) - &mult).is_zero());

        let p = simple(&r);
        let (s, b) = endomorphism_algebra(&p).unwrap();
        let x = LeftModule::regular(&s);
        let t = tensor_over(&b, &x).unwrap();
        assert!(are_isomorphic(&t.module, &p, 16).unwrap().is_isomorphic());
        assert_eq!(t.module.dim(), t.projection.cols() - t.section.rows() + t.section.cols());
    }

    #[test]
    fn hom_over_end_is_regular() {
        let r = dual();
        for p in [LeftModule::regular(&r), simple(&r), LeftModule::regular(&r).direct_sum(&simple(&r)).unwrap()] {
            let (s, b) = endomorphism_algebra(&p).unwrap();
            let h = hom_as_left_s_module(&b, &p).unwrap();
            validate_module(&h.module).unwrap();
            let reg = LeftModule::regular(&s);
            assert!(are_isomorphic(&h.module, &reg, 1 << 12).unwrap().is_isomorphic());
        }
    }

    #[test]
    fn sub_and_quotient_of_regular() {
        let r = dual();
        let reg = LeftModule::regular(&r);
        let (sub, inc) = submodule(&reg, &[vec![0, 1]]).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(are_isomorphic(&sub, &simple(&r), 4).unwrap().is_isomorphic());
        validate_module_map(&ModuleMap::new(&sub, &reg, inc.clone()).unwrap()).unwrap();
        let (q, proj) = quotient(&reg, &inc).unwrap();
        assert!(are_isomorphic(&q, &simple(&r), 4).unwrap().is_isomorphic());
        ModuleMap::new(&reg, &q, proj).unwrap();
        assert!(quotient(&reg, &m(&[vec![1], vec![0]])).is_err());
        assert_eq!(direct_sum(&[reg.clone(), q, sub]).unwrap().dim(), 4);
        assert_eq!(submodules(&reg, 16).unwrap().len(), 3);
    }

    #[test]
    fn isomorphism_search() {
        let r = dual();
        let reg = LeftModule::regular(&r);
        assert!(are_isomorphic(&reg, &reg, 16).unwrap().is_isomorphic());
        assert_eq!(are_isomorphic(&simple(&r), &reg, 16).unwrap(), IsoStatus::NotIsomorphic);
        let two = reg.power(2);
        let g = m(&[vec![0, 1, 1, 0], vec![1, 0, 1, 1], vec![0, 0, 1, 1], vec![0, 0, 0, 1]]);
        assert!(g.is_invertible());
        let moved = two.transport(&g).unwrap();
        let w = are_isomorphic(&two, &moved, 1 << 10).unwrap();
        let w = w.witness().unwrap();
        ModuleMap::new(&two, &moved, w.clone()).unwrap();
        assert!(matches!(are_isomorphic(&two, &moved, 4).unwrap(), IsoStatus::Undecided { .. }));
    }

    #[test]
    fn windows() {
        let field = Arc::new(prime_field(f2()));
        let w = enumerate_modules(&field, 2, DEFAULT_BUDGET).unwrap();
        assert!(w.complete);
        assert_eq!(w.modules.iter().map(LeftModule::dim).collect::<Vec<_>>(), vec![0, 1, 2]);

        let r = dual();
        let w = enumerate_modules(&r, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(w.modules.iter().map(LeftModule::dim).collect::<Vec<_>>(), vec![0, 1, 2, 2]);
        let ranks: Vec<usize> = w.modules.iter().map(|m| m.act(1).rank()).collect();
        assert_eq!(ranks, vec![0, 0, 0, 1]);
    }

    #[test]
    fn one_dimensional_modules_are_algebra_maps() {
        for a in [dual_numbers(f2()), upper_triangular(f2(), 2), matrix_algebra(f2(), 2), upper_triangular(f2(), 3)] {
            let f = a.field();
            let maps = (0..f.count(a.dim()).unwrap())
                .map(|k| f.vector(a.dim(), k))
                .filter(|chi| {
                    let value = |v: &[u32]| v.iter().zip(chi).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                    value(a.unit()) == 1
                        && (0..a.dim()).all(|i| {
                            (0..a.dim()).all(|j| value(a.basis_product(i, j)) == f.mul(chi[i], chi[j]))
                        })
                })
                .count();
            let a = Arc::new(a);
            let w = enumerate_modules(&a, 1, DEFAULT_BUDGET).unwrap();
            assert_eq!(w.modules.iter().filter(|m| m.dim() == 1).count(), maps);
        }
    }

    fn upper() -> Arc<FqAlgebra> {
        Arc::new(upper_triangular(f2(), 2))
    }

    fn any_invertible(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0u32..2, n * n)
            .prop_map(move |d| Matrix::from_flat(f2(), n, n, d).unwrap())
            .prop_filter("invertible", Matrix::is_invertible)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn hom_dimension_is_basis_independent(i in 0usize..16, j in 0usize..16, g in any_invertible(3), h in any_invertible(3)) {
            let r = upper();
            let w = enumerate_modules(&r, 3, DEFAULT_BUDGET).unwrap();
            let threes: Vec<&LeftModule> = w.modules.iter().filter(|m| m.dim() == 3).collect();
            let (a, b) = (threes[i % threes.len()], threes[j % threes.len()]);
            let before = hom_space(a, b).unwrap().len();
            let after = hom_space(&a.transport(&g).unwrap(), &b.transport(&h).unwrap()).unwrap().len();
            prop_assert_eq!(before, after);
        }

        #[test]
        fn hom_is_additive(i in 0usize..64, j in 0usize..64, k in 0usize..64) {
            let r = upper();
            let w = enumerate_modules(&r, 2, DEFAULT_BUDGET).unwrap();
            let pick = |x: usize| &w.modules[x % w.modules.len()];
            let (a, b, c) = (pick(i), pick(j), pick(k));
            let sum = a.direct_sum(b).unwrap();
            prop_assert_eq!(
                hom_space(&sum, c).unwrap().len(),
                hom_space(a, c).unwrap().len() + hom_space(b, c).unwrap().len()
            );
        }

        #[test]
        fn isomorphism_is_an_equivalence(i in 0usize..64, g in any_invertible(2), h in any_invertible(2)) {
            let r = dual();
            let w = enumerate_modules(&r, 2, DEFAULT_BUDGET).unwrap();
            let twos: Vec<&LeftModule> = w.modules.iter().filter(|m| m.dim() == 2).collect();
            let a = twos[i % twos.len()];
            let b = a.transport(&g).unwrap();
            let c = b.transport(&h).unwrap();
            for (x, y) in [(a, &b), (&b, a), (&b, &c), (a, &c)] {
                prop_assert!(are_isomorphic(x, y, 1 << 8).unwrap().is_isomorphic());
            }
            for other in &twos {
                let expected = *other == a;
                prop_assert_eq!(are_isomorphic(other, &c, 1 << 8).unwrap().is_isomorphic(), expected);
            }
        }
    }
}
