//! Exact linear algebra over prime fields.

mod field;
mod matrix;

pub use field::PrimeField;
pub use matrix::{Matrix, Quotient, Rref};

use crate::error::Result;

pub fn rref(m: &Matrix) -> Rref {
    m.rref()
}

pub fn solve(m: &Matrix, b: &[u32]) -> Result<Option<Vec<u32>>> {
    m.solve(b)
}

pub fn kernel_basis(m: &Matrix) -> Matrix {
    m.kernel_basis()
}

pub fn image_basis(m: &Matrix) -> Matrix {
    m.image_basis()
}

pub fn quotient_basis(field: PrimeField, n: usize, w: &Matrix) -> Result<Quotient> {
    Matrix::quotient_basis(field, n, w)
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

pub fn direct_sum(a: &Matrix, b: &Matrix) -> Matrix {
    a.direct_sum(b)
}

pub fn is_injective(m: &Matrix) -> bool {
    m.is_injective()
}

pub fn is_surjective(m: &Matrix) -> bool {
    m.is_surjective()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::error::Error;

    fn f2() -> PrimeField {
        PrimeField::f2()
    }

    #[test]
    fn rref_of_identity() {
        let id = Matrix::identity(PrimeField::new(5).unwrap(), 4);
        let r = rref(&id);
        assert_eq!(r.form, id);
        assert_eq!(r.rank, 4);
        assert_eq!(r.pivots, vec![0, 1, 2, 3]);
    }

    #[test]
    fn kernel_of_one_one() {
        let m = Matrix::from_rows(f2(), 1, 2, &[vec![1, 1]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.columns(), vec![vec![1, 1]]);
        assert_eq!(image_basis(&m).columns(), vec![vec![1]]);
    }

    #[test]
    fn quotient_of_f2_cubed_by_first_axis() {
        let w = Matrix::from_rows(f2(), 3, 1, &[vec![1], vec![0], vec![0]]).unwrap();
        let q = quotient_basis(f2(), 3, &w).unwrap();
        assert_eq!(q.projection.shape(), (2, 3));
        assert_eq!(q.projection.rank(), 2);
        assert!((&q.projection * &q.section).is_identity());
        assert!((&q.projection * &w).is_zero());
        let kernel = q.projection.kernel_basis();
        assert_eq!(kernel.cols(), 1);
        assert_eq!(kernel.column(0), vec![1, 0, 0]);
    }

    #[test]
    fn solve_reports_absence() {
        let m = Matrix::from_rows(f2(), 2, 2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(solve(&m, &[1, 0]).unwrap(), None);
        let x = solve(&m, &[1, 1]).unwrap().unwrap();
        assert_eq!(m.apply(&x), vec![1, 1]);
        assert!(matches!(solve(&m, &[1]), Err(Error::Dimension(_))));
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::zeros(f2(), 2, 3);
        assert!(a.checked_mul(&a).is_err());
        assert!(Matrix::from_flat(f2(), 2, 2, vec![1, 0, 1]).is_err());
        let b = Matrix::zeros(PrimeField::new(3).unwrap(), 3, 3);
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn direct_sum_and_inverse() {
        let f = PrimeField::new(3).unwrap();
        let a = Matrix::from_rows(f, 2, 2, &[vec![1, 2], vec![0, 1]]).unwrap();
        let s = direct_sum(&a, &Matrix::identity(f, 1));
        assert_eq!(s.shape(), (3, 3));
        let inv = s.inverse().unwrap();
        assert!((&s * &inv).is_identity());
        assert!(!is_injective(&Matrix::zeros(f, 2, 1)));
        assert!(is_surjective(&Matrix::identity(f, 2)));
    }

    fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0..p, rows * cols).prop_map(move |d| {
            Matrix::from_flat(PrimeField::new(p).unwrap(), rows, cols, d).unwrap()
        })
    }

    fn shaped() -> impl Strategy<Value = Matrix> {
        (prop_oneof![Just(2u32), Just(3), Just(5)], 0usize..5, 0usize..5)
            .prop_flat_map(|(p, r, c)| matrix(p, r, c))
    }

    proptest! {
        #[test]
        fn rank_nullity(m in shaped()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
            prop_assert!((&m * &m.kernel_basis()).is_zero());
            prop_assert!(m.kernel_basis().is_injective());
        }

        #[test]
        fn solve_hits_every_image_vector(m in shaped(), seed in any::<u64>()) {
            let f = m.field();
            let x = f.vector(m.cols(), seed % f.count(m.cols()).unwrap().max(1));
            let b = m.apply(&x);
            let y = m.solve(&b).unwrap().expect("b is in the image");
            prop_assert_eq!(m.apply(&y), b);
        }

        #[test]
        fn quotient_identities(m in shaped()) {
            let f = m.field();
            let q = Matrix::quotient_basis(f, m.rows(), &m).unwrap();
            prop_assert!((&q.projection * &q.section).is_identity());
            prop_assert!((&q.projection * &m).is_zero());
            prop_assert_eq!(q.projection.rows(), m.rows() - m.rank());
        }

        #[test]
        fn kron_mixed_product(
            (a, c) in (0usize..3, 0usize..3, 0usize..3).prop_flat_map(|(r, k, s)| (matrix(3, r, k), matrix(3, k, s))),
            (b, d) in (0usize..3, 0usize..3, 0usize..3).prop_flat_map(|(r, k, s)| (matrix(3, r, k), matrix(3, k, s))),
        ) {
            prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
        }

        #[test]
        fn left_inverse_of_injective(m in shaped()) {
            let basis = m.image_basis();
            let l = basis.left_inverse().unwrap();
            prop_assert!((&l * &basis).is_identity());
        }
    }
}
