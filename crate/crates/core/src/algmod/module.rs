use std::fmt;
use std::sync::Arc;

use crate::error::{check, Error, Law, Result, Violation};
use crate::ffla::{Matrix, PrimeField};

use super::FqAlgebra;

/// A left module over an [`FqAlgebra`], given by one action matrix per
/// algebra basis element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LeftModule {
    algebra: Arc<FqAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl LeftModule {
    /// Checks shapes and the module laws.
    pub fn new(algebra: &Arc<FqAlgebra>, action: Vec<Matrix>) -> Result<Self> {
        let m = LeftModule::unchecked(algebra, action)?;
        check(m.violations())?;
        Ok(m)
    }

    pub fn unchecked(algebra: &Arc<FqAlgebra>, action: Vec<Matrix>) -> Result<Self> {
        let dim = action_shape(algebra, &action)?;
        Ok(LeftModule {
            algebra: algebra.clone(),
            dim,
            action,
        })
    }

    pub fn zero(algebra: &Arc<FqAlgebra>) -> Self {
        let z = Matrix::zeros(algebra.field(), 0, 0);
        LeftModule {
            algebra: algebra.clone(),
            dim: 0,
            action: vec![z; algebra.dim()],
        }
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(algebra: &Arc<FqAlgebra>) -> Self {
        LeftModule {
            algebra: algebra.clone(),
            dim: algebra.dim(),
            action: (0..algebra.dim()).map(|i| algebra.left_regular(i)).collect(),
        }
    }

    pub fn algebra(&self) -> &Arc<FqAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn act(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act_element(&self, a: &[u32]) -> Matrix {
        linear_combination(self.field(), self.dim, a, &self.action)
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field(), self.dim)
    }

    pub fn violations(&self) -> Vec<Violation> {
        let a = &*self.algebra;
        let mut out = Vec::new();
        if !self.act_element(a.unit()).is_identity() {
            out.push(Violation::new(Law::ModuleUnit, ["unit"]));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if &self.action[i] * &self.action[j] != self.act_element(a.basis_product(i, j)) {
                    out.push(Violation::new(Law::ModuleMultiplicative, [a.name(i), a.name(j)]));
                }
            }
        }
        out
    }

    /// Ordering key: dimension first, then the action matrices row by row.
    pub fn key(&self) -> (usize, Vec<u32>) {
        (self.dim, self.action.iter().flat_map(|m| m.data().iter().copied()).collect())
    }

    pub fn direct_sum(&self, other: &LeftModule) -> Result<LeftModule> {
        same_algebra(&self.algebra, &other.algebra)?;
        Ok(LeftModule {
            algebra: self.algebra.clone(),
            dim: self.dim + other.dim,
            action: self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect(),
        })
    }

    pub fn power(&self, k: usize) -> LeftModule {
        (0..k).fold(LeftModule::zero(&self.algebra), |acc, _| {
            acc.direct_sum(self).expect("same algebra")
        })
    }

    /// Conjugates every action matrix by an invertible `g`, giving an
    /// isomorphic module with `g` as the isomorphism.
    pub fn transport(&self, g: &Matrix) -> Result<LeftModule> {
        let inv = g.inverse().ok_or_else(|| Error::shape("change of basis is not invertible"))?;
        if g.rows() != self.dim {
            return Err(Error::dimension("change of basis has the wrong size"));
        }
        Ok(LeftModule {
            algebra: self.algebra.clone(),
            dim: self.dim,
            action: self.action.iter().map(|a| &(g * a) * &inv).collect(),
        })
    }
}

impl fmt::Debug for LeftModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeftModule(dim {}, action {:?})", self.dim, self.action)
    }
}

pub(crate) fn linear_combination(field: PrimeField, n: usize, coeffs: &[u32], ms: &[Matrix]) -> Matrix {
    coeffs
        .iter()
        .zip(ms)
        .filter(|(&c, _)| c != 0)
        .fold(Matrix::zeros(field, n, n), |acc, (&c, m)| &acc + &m.scale(c))
}

pub(crate) fn same_algebra(a: &Arc<FqAlgebra>, b: &Arc<FqAlgebra>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::shape("modules over different algebras"))
    }
}

fn action_shape(algebra: &FqAlgebra, action: &[Matrix]) -> Result<usize> {
    if action.len() != algebra.dim() {
        return Err(Error::dimension(format!(
            "{} action matrices for an algebra of dimension {}",
            action.len(),
            algebra.dim()
        )));
    }
    let n = action.first().map_or(0, Matrix::rows);
    if action.iter().any(|m| m.shape() != (n, n) || m.field() != algebra.field()) {
        return Err(Error::dimension("action matrices must be square of one size over the algebra's field"));
    }
    Ok(n)
}

/// An `(R, S)`-bimodule: a left `R`-module with commuting right `S`-action.
/// The right action is stored as operators `N_s v = v · s`, so that
/// `N(s t) = N(t) N(s)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bimodule {
    left: LeftModule,
    right_algebra: Arc<FqAlgebra>,
    right_action: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(left: LeftModule, right_algebra: &Arc<FqAlgebra>, right_action: Vec<Matrix>) -> Result<Self> {
        let b = Bimodule::unchecked(left, right_algebra, right_action)?;
        check(b.violations())?;
        Ok(b)
    }

    pub fn unchecked(left: LeftModule, right_algebra: &Arc<FqAlgebra>, right_action: Vec<Matrix>) -> Result<Self> {
        let n = action_shape(right_algebra, &right_action)?;
        if right_algebra.dim() > 0 && n != left.dim() {
            return Err(Error::dimension("left and right actions on spaces of different dimension"));
        }
        Ok(Bimodule {
            left,
            right_algebra: right_algebra.clone(),
            right_action,
        })
    }

    pub fn left(&self) -> &LeftModule {
        &self.left
    }

    pub fn left_algebra(&self) -> &Arc<FqAlgebra> {
        self.left.algebra()
    }

    pub fn right_algebra(&self) -> &Arc<FqAlgebra> {
        &self.right_algebra
    }

    pub fn right_action(&self) -> &[Matrix] {
        &self.right_action
    }

    pub fn right_act(&self, j: usize) -> &Matrix {
        &self.right_action[j]
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn field(&self) -> PrimeField {
        self.left.field()
    }

    pub fn right_act_element(&self, s: &[u32]) -> Matrix {
        linear_combination(self.field(), self.dim(), s, &self.right_action)
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = self.left.violations();
        let s = &*self.right_algebra;
        if !self.right_act_element(s.unit()).is_identity() {
            out.push(Violation::new(Law::RightModuleUnit, ["unit"]));
        }
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                if &self.right_action[j] * &self.right_action[i] != self.right_act_element(s.basis_product(i, j)) {
                    out.push(Violation::new(Law::RightModuleMultiplicative, [s.name(i), s.name(j)]));
                }
            }
        }
        let r = self.left_algebra();
        for i in 0..r.dim() {
            for j in 0..s.dim() {
                let (l, n) = (self.left.act(i), &self.right_action[j]);
                if l * n != n * l {
                    out.push(Violation::new(Law::ActionsCommute, [r.name(i), s.name(j)]));
                }
            }
        }
        out
    }

    /// `R` as an `(R, R)`-bimodule, the right action by right multiplication.
    pub fn regular(algebra: &Arc<FqAlgebra>) -> Self {
        Bimodule {
            left: LeftModule::regular(algebra),
            right_algebra: algebra.clone(),
            right_action: (0..algebra.dim()).map(|i| algebra.right_regular(i)).collect(),
        }
    }
}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Bimodule(dim {}, left {:?}, right {:?})",
            self.dim(),
            self.left.action(),
            self.right_action
        )
    }
}

/// A linear map between modules over the same algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMap {
    pub source: LeftModule,
    pub target: LeftModule,
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: &LeftModule, target: &LeftModule, matrix: Matrix) -> Result<Self> {
        let m = ModuleMap::unchecked(source, target, matrix)?;
        check(m.violations())?;
        Ok(m)
    }

    pub fn unchecked(source: &LeftModule, target: &LeftModule, matrix: Matrix) -> Result<Self> {
        same_algebra(source.algebra(), target.algebra())?;
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::dimension(format!(
                "map matrix {}x{} between modules of dimension {} and {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        Ok(ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn violations(&self) -> Vec<Violation> {
        let a = self.source.algebra();
        (0..a.dim())
            .filter(|&i| &self.matrix * self.source.act(i) != self.target.act(i) * &self.matrix)
            .map(|i| Violation::new(Law::Intertwining, [a.name(i)]))
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.is_surjective()
    }

    pub fn is_iso(&self) -> bool {
        self.matrix.is_invertible()
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({} -> {}, {:?})", self.source.dim(), self.target.dim(), self.matrix)
    }
}
