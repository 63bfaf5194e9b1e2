use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffla::{Matrix, PrimeField};

use super::module::same_algebra;
use super::{Bimodule, FqAlgebra, LeftModule, ModuleMap};

/// A basis of `Hom_R(P, N)` as `dim N x dim P` matrices, with a solver for
/// coordinates of arbitrary elements.
#[derive(Debug, Clone)]
pub struct HomSpace {
    field: PrimeField,
    source_dim: usize,
    target_dim: usize,
    basis: Vec<Matrix>,
    solver: Matrix,
}

impl HomSpace {
    pub fn compute(p: &LeftModule, n: &LeftModule) -> Result<Self> {
        same_algebra(p.algebra(), n.algebra())?;
        let f = p.field();
        let (np, nn) = (p.dim(), n.dim());
        // Row-major vec: vec(A X B) = (A ⊗ Bᵀ) vec(X).
        let blocks: Vec<Matrix> = (0..p.algebra().dim())
            .map(|i| {
                let lhs = Matrix::identity(f, nn).kron(&p.act(i).transpose());
                let rhs = n.act(i).kron(&Matrix::identity(f, np));
                &lhs - &rhs
            })
            .collect();
        let system = Matrix::vconcat(f, nn * np, &blocks);
        let kernel = system.kernel_basis();
        let basis = kernel
            .columns()
            .iter()
            .map(|v| Matrix::unflatten(f, nn, np, v))
            .collect();
        Ok(HomSpace::from_basis(f, np, nn, basis))
    }

    fn from_basis(field: PrimeField, source_dim: usize, target_dim: usize, basis: Vec<Matrix>) -> Self {
        let stacked = Matrix::from_columns(
            field,
            source_dim * target_dim,
            &basis.iter().map(Matrix::flatten).collect::<Vec<_>>(),
        );
        let solver = stacked.left_inverse().expect("kernel basis is independent");
        HomSpace {
            field,
            source_dim,
            target_dim,
            basis,
            solver,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// Coordinates of `m` in the basis, or `None` if `m` is not a module map.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<u32>> {
        if m.shape() != (self.target_dim, self.source_dim) {
            return None;
        }
        let v = m.flatten();
        let x = self.solver.apply(&v);
        (self.element(&x) == *m).then_some(x)
    }

    pub fn element(&self, coords: &[u32]) -> Matrix {
        let f = self.field;
        coords
            .iter()
            .zip(&self.basis)
            .filter(|(&c, _)| c != 0)
            .fold(Matrix::zeros(f, self.target_dim, self.source_dim), |acc, (&c, b)| &acc + &b.scale(c))
    }
}

/// Basis of `Hom_R(P, N)` as validated module maps.
pub fn hom_space(p: &LeftModule, n: &LeftModule) -> Result<Vec<ModuleMap>> {
    HomSpace::compute(p, n)?
        .basis
        .into_iter()
        .map(|m| ModuleMap::unchecked(p, n, m))
        .collect()
}

/// `S = End_R(P)` with endomorphisms written on the right: the product `f g`
/// means "first `f`, then `g`", so `M(f g) = M(g) · M(f)` and `P` becomes an
/// `(R, S)`-bimodule with right operators `N_f = M(f)`.
pub fn endomorphism_algebra(p: &LeftModule) -> Result<(Arc<FqAlgebra>, Bimodule)> {
    let end = HomSpace::compute(p, p)?;
    let f = p.field();
    let coords = |m: &Matrix| end.coordinates(m).expect("composite of endomorphisms");
    let constants = end
        .basis
        .iter()
        .map(|a| end.basis.iter().map(|b| coords(&(b * a))).collect())
        .collect();
    let unit = coords(&Matrix::identity(f, p.dim()));
    let names = (0..end.dim()).map(|k| format!("f{k}")).collect();
    let s = Arc::new(FqAlgebra::new(f, constants, unit)?.with_names(names)?);
    let bimodule = Bimodule::new(p.clone(), &s, end.basis.clone())?;
    Ok((s, bimodule))
}

/// `Hom_R(P, N)` as a left `S`-module via `(p)(s·f) = (p·s)f`, that is
/// `M(s·f) = M(f) · N_s`.
#[derive(Debug, Clone)]
pub struct HomModule {
    pub module: LeftModule,
    pub space: HomSpace,
}

pub fn hom_as_left_s_module(p: &Bimodule, n: &LeftModule) -> Result<HomModule> {
    let space = HomSpace::compute(p.left(), n)?;
    let s = p.right_algebra();
    let action = (0..s.dim())
        .map(|j| {
            let columns: Vec<Vec<u32>> = space
                .basis
                .iter()
                .map(|m| space.coordinates(&(m * p.right_act(j))).expect("s·f is a module map"))
                .collect();
            Matrix::from_columns(p.field(), space.dim(), &columns)
        })
        .collect();
    Ok(HomModule {
        module: LeftModule::unchecked(s, action)?,
        space,
    })
}

/// `P ⊗_S X` as the quotient of `P ⊗ X` (index `a·dim X + b`) by the
/// relations `(p·s) ⊗ x − p ⊗ (s·x)`, with the projection onto and a section
/// from the quotient coordinates.
#[derive(Debug, Clone)]
pub struct Tensor {
    pub module: LeftModule,
    pub projection: Matrix,
    pub section: Matrix,
    pub p_dim: usize,
    pub x_dim: usize,
}

impl Tensor {
    /// Quotient coordinates of `e_a ⊗ v`.
    pub fn class_of(&self, a: usize, v: &[u32]) -> Vec<u32> {
        let f = self.module.field();
        let mut e = vec![0; self.p_dim];
        e[a] = 1;
        let pure = Matrix::column_vector(f, &e).kron(&Matrix::column_vector(f, v));
        self.projection.apply(&pure.column(0))
    }
}

pub fn tensor_over(p: &Bimodule, x: &LeftModule) -> Result<Tensor> {
    same_algebra(p.right_algebra(), x.algebra())?;
    let f = p.field();
    let (np, nx) = (p.dim(), x.dim());
    let ip = Matrix::identity(f, np);
    let ix = Matrix::identity(f, nx);
    let relations: Vec<Matrix> = (0..x.algebra().dim())
        .map(|j| &p.right_act(j).kron(&ix) - &ip.kron(x.act(j)))
        .collect();
    let w = Matrix::hconcat(f, np * nx, &relations);
    let q = Matrix::quotient_basis(f, np * nx, &w)?;
    let mut action = Vec::with_capacity(p.left_algebra().dim());
    for i in 0..p.left_algebra().dim() {
        let lifted = p.left().act(i).kron(&ix);
        if !(&q.projection * &(&lifted * &w)).is_zero() {
            return Err(Error::shape("relation space is not stable under the left action"));
        }
        action.push(&(&q.projection * &lifted) * &q.section);
    }
    Ok(Tensor {
        module: LeftModule::unchecked(p.left_algebra(), action)?,
        projection: q.projection,
        section: q.section,
        p_dim: np,
        x_dim: nx,
    })
}
