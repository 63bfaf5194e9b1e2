use std::fmt;

use crate::error::{check, Error, Law, Result, Violation};
use crate::ffla::{Matrix, PrimeField};

use super::IsoStatus;

/// A finite-dimensional associative unital algebra over `F_p`, given by
/// structure constants `b_i · b_j = Σ_k c[i][j][k] b_k` and unit coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqAlgebra {
    field: PrimeField,
    dim: usize,
    constants: Vec<u32>,
    unit: Vec<u32>,
    names: Vec<String>,
}

impl FqAlgebra {
    /// Checks shapes and the algebra laws.
    pub fn new(field: PrimeField, constants: Vec<Vec<Vec<u32>>>, unit: Vec<u32>) -> Result<Self> {
        let a = FqAlgebra::unchecked(field, constants, unit)?;
        check(a.violations())?;
        Ok(a)
    }

    /// Checks shapes only; use [`FqAlgebra::violations`] to test the laws.
    pub fn unchecked(field: PrimeField, constants: Vec<Vec<Vec<u32>>>, unit: Vec<u32>) -> Result<Self> {
        let d = unit.len();
        if constants.len() != d || constants.iter().flatten().any(|v| v.len() != d) || constants.iter().any(|r| r.len() != d) {
            return Err(Error::dimension(format!("structure constants must be {d}x{d}x{d}")));
        }
        let p = field.p();
        Ok(FqAlgebra {
            field,
            dim: d,
            constants: constants.into_iter().flatten().flatten().map(|x| x % p).collect(),
            unit: unit.into_iter().map(|x| x % p).collect(),
            names: (0..d).map(|i| format!("b{i}")).collect(),
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::dimension(format!("{} names for dimension {}", names.len(), self.dim)));
        }
        self.names = names;
        Ok(self)
    }

    /// The subalgebra of `n x n` matrices spanned by `basis`, which must be
    /// closed under products and contain the identity.
    pub fn from_matrices(field: PrimeField, basis: &[Matrix]) -> Result<Self> {
        let n = basis.first().map_or(0, Matrix::rows);
        let stacked = Matrix::from_columns(field, n * n, &basis.iter().map(Matrix::flatten).collect::<Vec<_>>());
        let coords = |m: &Matrix| -> Result<Vec<u32>> {
            stacked
                .solve(&m.flatten())?
                .ok_or_else(|| Error::shape("matrix products leave the span of the basis"))
        };
        if stacked.rank() != basis.len() {
            return Err(Error::shape("basis matrices are linearly dependent"));
        }
        let mut constants = Vec::with_capacity(basis.len());
        for a in basis {
            let mut row = Vec::with_capacity(basis.len());
            for b in basis {
                row.push(coords(&a.checked_mul(b)?)?);
            }
            constants.push(row);
        }
        FqAlgebra::new(field, constants, coords(&Matrix::identity(field, n))?)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// `c[i][j]` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let start = (i * self.dim + j) * self.dim;
        &self.constants[start..start + self.dim]
    }

    pub fn constants(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0; self.dim];
        for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &y) in b.iter().enumerate().filter(|(_, &y)| y != 0) {
                let xy = f.mul(x, y);
                for (o, &c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    *o = f.add(*o, f.mul(xy, c));
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ b_i · x` on coordinate columns.
    pub fn left_regular(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m.set(k, j, self.constant(i, j, k));
            }
        }
        m
    }

    /// Matrix of `x ↦ x · b_i` on coordinate columns.
    pub fn right_regular(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m.set(k, j, self.constant(j, i, k));
            }
        }
        m
    }

    /// Associativity on all basis triples and two-sided unit on all basis
    /// elements, with the failing basis elements as witnesses.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let d = self.dim;
        for i in 0..d {
            let bi = self.basis_vector(i);
            if self.mul(&self.unit, &bi) != bi || self.mul(&bi, &self.unit) != bi {
                out.push(Violation::new(Law::AlgebraUnit, [self.names[i].clone()]));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..d {
                    let bk = self.basis_vector(k);
                    let left = self.mul(&ij, &bk);
                    let right = self.mul(&self.basis_vector(i), self.basis_product(j, k));
                    if left != right {
                        out.push(Violation::new(
                            Law::AlgebraAssociativity,
                            [&self.names[i], &self.names[j], &self.names[k]].map(String::clone),
                        ));
                    }
                }
            }
        }
        out
    }

    /// The algebra with reversed multiplication.
    pub fn opposite(&self) -> FqAlgebra {
        let constants = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(j, i).to_vec()).collect())
            .collect();
        FqAlgebra::unchecked(self.field, constants, self.unit.clone())
            .expect("same shape")
            .with_names(self.names.clone())
            .expect("same dimension")
    }

    /// Powers `1, a, a², …` up to the first linear dependence, returned as
    /// the coefficients of the minimal polynomial (lowest degree first, monic).
    pub fn minimal_polynomial(&self, a: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut powers = vec![self.unit.clone()];
        loop {
            let span = Matrix::from_columns(f, self.dim, &powers);
            let next = self.mul(powers.last().expect("nonempty"), a);
            if let Some(x) = span.solve(&next).expect("lengths match") {
                let mut poly: Vec<u32> = x.iter().map(|&c| f.neg(c)).collect();
                poly.push(1);
                return poly;
            }
            powers.push(next);
        }
    }

    /// An algebra isomorphism `self → other` as the matrix sending basis
    /// coordinates of `self` to those of `other`, found by exhaustive search
    /// over invertible linear maps when `p^(d²)` is within `budget`.
    pub fn isomorphism_to(&self, other: &FqAlgebra, budget: u64) -> IsoStatus {
        if self.field != other.field || self.dim != other.dim {
            return IsoStatus::NotIsomorphic;
        }
        let f = self.field;
        let d = self.dim;
        let Some(total) = f.count(d * d).filter(|&t| t <= budget) else {
            return IsoStatus::Undecided {
                needed: f.count(d * d).unwrap_or(u64::MAX),
                budget,
            };
        };
        for k in 0..total {
            let m = Matrix::from_flat(f, d, d, f.vector(d * d, k)).expect("shape");
            if m.apply(&self.unit) != other.unit || !m.is_invertible() {
                continue;
            }
            let images: Vec<Vec<u32>> = (0..d).map(|i| m.column(i)).collect();
            let preserves = (0..d).all(|i| {
                (0..d).all(|j| m.apply(self.basis_product(i, j)) == other.mul(&images[i], &images[j]))
            });
            if preserves {
                return IsoStatus::Isomorphic(m);
            }
        }
        IsoStatus::NotIsomorphic
    }
}

impl fmt::Debug for FqAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FqAlgebra({}, dim {}, basis {:?})", self.field, self.dim, self.names)
    }
}

fn named(a: FqAlgebra, names: &[&str]) -> FqAlgebra {
    a.with_names(names.iter().map(|s| s.to_string()).collect())
        .expect("name count matches")
}

/// `F_p` as a one-dimensional algebra.
pub fn prime_field(field: PrimeField) -> FqAlgebra {
    named(FqAlgebra::new(field, vec![vec![vec![1]]], vec![1]).expect("F_p is an algebra"), &["1"])
}

/// `F_p[x]/(x²)` with basis `{1, x}`.
pub fn dual_numbers(field: PrimeField) -> FqAlgebra {
    let c = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]];
    named(FqAlgebra::new(field, c, vec![1, 0]).expect("dual numbers form an algebra"), &["1", "x"])
}

/// `F_p[x]/(x^n)` with basis `{1, x, ..., x^(n-1)}`.
pub fn truncated_polynomials(field: PrimeField, n: usize) -> FqAlgebra {
    let c = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| u32::from(i + j == k)).collect())
                .collect()
        })
        .collect();
    let mut unit = vec![0; n];
    unit[0] = 1;
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x{i}"),
        })
        .collect();
    FqAlgebra::new(field, c, unit)
        .expect("truncated polynomials form an algebra")
        .with_names(names)
        .expect("name count matches")
}

fn unit_matrix(field: PrimeField, n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    m.set(i, j, 1);
    m
}

/// Upper-triangular `n x n` matrices, basis `e_ij` (`i ≤ j`) in row order.
pub fn upper_triangular(field: PrimeField, n: usize) -> FqAlgebra {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    matrix_units(field, n, &pairs)
}

/// The full matrix algebra `M_n(F_p)`, basis `e_ij` in row order.
pub fn matrix_algebra(field: PrimeField, n: usize) -> FqAlgebra {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    matrix_units(field, n, &pairs)
}

fn matrix_units(field: PrimeField, n: usize, pairs: &[(usize, usize)]) -> FqAlgebra {
    let basis: Vec<Matrix> = pairs.iter().map(|&(i, j)| unit_matrix(field, n, i, j)).collect();
    let names: Vec<String> = pairs.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    FqAlgebra::from_matrices(field, &basis)
        .expect("matrix units span a subalgebra")
        .with_names(names)
        .expect("name count matches")
}
