use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffla::Matrix;

use super::hom::HomSpace;
use super::module::same_algebra;
use super::LeftModule;

/// Outcome of a bounded isomorphism search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoStatus {
    /// The witness is an invertible map (or algebra isomorphism).
    Isomorphic(Matrix),
    NotIsomorphic,
    /// The search space of `needed` elements exceeds `budget`.
    Undecided { needed: u64, budget: u64 },
}

impl IsoStatus {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoStatus::Isomorphic(_))
    }

    pub fn witness(&self) -> Option<&Matrix> {
        match self {
            IsoStatus::Isomorphic(m) => Some(m),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoDecision {
    Isomorphic,
    NotIsomorphic,
    Undecided,
}

impl From<&IsoStatus> for IsoDecision {
    fn from(s: &IsoStatus) -> Self {
        match s {
            IsoStatus::Isomorphic(_) => IsoDecision::Isomorphic,
            IsoStatus::NotIsomorphic => IsoDecision::NotIsomorphic,
            IsoStatus::Undecided { .. } => IsoDecision::Undecided,
        }
    }
}

pub fn direct_sum(ms: &[LeftModule]) -> Result<LeftModule> {
    let (first, rest) = ms
        .split_first()
        .ok_or_else(|| Error::shape("direct sum of an empty list"))?;
    rest.iter().try_fold(first.clone(), |acc, m| acc.direct_sum(m))
}

/// The column span of `w` closed under every action matrix, as a basis.
pub fn closure(m: &LeftModule, w: &Matrix) -> Matrix {
    let f = m.field();
    let mut basis = w.image_basis();
    loop {
        let mut blocks = vec![basis.clone()];
        blocks.extend(m.action().iter().map(|a| a * &basis));
        let next = Matrix::hconcat(f, m.dim(), &blocks).image_basis();
        if next.cols() == basis.cols() {
            return basis;
        }
        basis = next;
    }
}

/// Restriction of the action to an invariant subspace with basis `basis`.
fn restrict(m: &LeftModule, basis: &Matrix) -> Result<LeftModule> {
    let left = basis.left_inverse().expect("basis columns are independent");
    let action = m
        .action()
        .iter()
        .map(|a| {
            let image = a * basis;
            let restricted = &left * &image;
            if basis * &restricted != image {
                return Err(Error::shape("subspace is not invariant under the action"));
            }
            Ok(restricted)
        })
        .collect::<Result<Vec<_>>>()?;
    LeftModule::unchecked(m.algebra(), action)
}

/// The submodule generated by the given vectors, with its inclusion matrix.
pub fn submodule(m: &LeftModule, generators: &[Vec<u32>]) -> Result<(LeftModule, Matrix)> {
    if generators.iter().any(|v| v.len() != m.dim()) {
        return Err(Error::dimension("generator of the wrong length"));
    }
    let basis = closure(m, &Matrix::from_columns(m.field(), m.dim(), generators));
    Ok((restrict(m, &basis)?, basis))
}

/// The invariant subspace spanned by the columns of `basis` as a module.
pub fn submodule_on(m: &LeftModule, basis: &Matrix) -> Result<LeftModule> {
    restrict(m, &basis.image_basis())
}

/// `M / U` for the submodule spanned by the columns of `sub`, with the
/// projection onto quotient coordinates.
pub fn quotient(m: &LeftModule, sub: &Matrix) -> Result<(LeftModule, Matrix)> {
    if sub.rows() != m.dim() {
        return Err(Error::dimension("submodule basis of the wrong length"));
    }
    let q = Matrix::quotient_basis(m.field(), m.dim(), sub)?;
    let mut action = Vec::with_capacity(m.action().len());
    for a in m.action() {
        if !(&q.projection * &(a * sub)).is_zero() {
            return Err(Error::shape("subspace is not invariant under the action"));
        }
        action.push(&(&q.projection * a) * &q.section);
    }
    Ok((LeftModule::unchecked(m.algebra(), action)?, q.projection))
}

/// Canonical form of a subspace: the reduced row echelon form of its basis
/// written as rows.
fn canonical(basis: &Matrix) -> Vec<u32> {
    let rref = basis.transpose().rref();
    let r = rref.rank;
    rref.form.data()[..r * basis.rows()].to_vec()
}

/// Every submodule of `m` as a basis matrix, sorted by dimension and then by
/// canonical form. Fails when `p^(dim m)` or the number of sums formed
/// exceeds `budget`.
pub fn submodules(m: &LeftModule, budget: u64) -> Result<Vec<Matrix>> {
    let f = m.field();
    let n = m.dim();
    let total = f.count(n).filter(|&t| t <= budget).ok_or_else(|| Error::Budget {
        what: "vectors scanned for submodules".into(),
        needed: f.count(n).map_or(usize::MAX, |t| t as usize),
        budget: budget as usize,
    })?;
    let cyclic: Vec<Matrix> = {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for k in 1..total {
            let c = closure(m, &Matrix::column_vector(f, &f.vector(n, k)));
            if seen.insert(canonical(&c)) {
                out.push(c);
            }
        }
        out
    };
    let zero = Matrix::zeros(f, n, 0);
    let mut seen = BTreeSet::from([canonical(&zero)]);
    let mut found = vec![zero];
    let mut i = 0;
    let mut work = 0u64;
    while i < found.len() {
        work += cyclic.len() as u64;
        if work > budget {
            return Err(Error::Budget {
                what: "sums formed while enumerating submodules".into(),
                needed: (found.len() * cyclic.len()).max(work as usize),
                budget: budget as usize,
            });
        }
        let u = found[i].clone();
        for c in &cyclic {
            let sum = u.hstack(c)?.image_basis();
            if sum.cols() > u.cols() && seen.insert(canonical(&sum)) {
                found.push(sum);
            }
        }
        i += 1;
    }
    found.sort_by_cached_key(|b| (b.cols(), canonical(b)));
    Ok(found)
}

/// Cheap isomorphism invariants: dimension and the rank of every action matrix.
pub(crate) fn invariants(m: &LeftModule) -> (usize, Vec<usize>) {
    (m.dim(), m.action().iter().map(Matrix::rank).collect())
}

/// Searches `Hom(M, N)` for an invertible element, exhaustively over its
/// `p^(dim Hom)` elements when that is within `budget`.
pub fn are_isomorphic(m: &LeftModule, n: &LeftModule, budget: u64) -> Result<IsoStatus> {
    same_algebra(m.algebra(), n.algebra())?;
    if invariants(m) != invariants(n) {
        return Ok(IsoStatus::NotIsomorphic);
    }
    let hom = HomSpace::compute(m, n)?;
    if hom.dim() != HomSpace::compute(m, m)?.dim() {
        return Ok(IsoStatus::NotIsomorphic);
    }
    if m.dim() == 0 {
        return Ok(IsoStatus::Isomorphic(Matrix::zeros(m.field(), 0, 0)));
    }
    let f = m.field();
    let Some(total) = f.count(hom.dim()).filter(|&t| t <= budget) else {
        return Ok(IsoStatus::Undecided {
            needed: f.count(hom.dim()).unwrap_or(u64::MAX),
            budget,
        });
    };
    for k in 1..total {
        let candidate = hom.element(&f.vector(hom.dim(), k));
        if candidate.is_invertible() {
            return Ok(IsoStatus::Isomorphic(candidate));
        }
    }
    Ok(IsoStatus::NotIsomorphic)
}
