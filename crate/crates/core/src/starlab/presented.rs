use crate::algmod::{quotient, submodule_on, HomSpace, LeftModule};
use crate::error::Result;
use crate::ffla::Matrix;

use super::StarContext;

/// The canonical map `P^(m) → N` summing a basis of `Hom_R(P, N)`.
#[derive(Debug, Clone)]
pub struct Cover {
    pub generated: bool,
    pub matrix: Matrix,
    pub copies: usize,
}

/// The canonical map `X → (P*)^m` stacking a basis of `Hom_S(X, P*)`.
#[derive(Debug, Clone)]
pub struct Cocover {
    pub cogenerated: bool,
    pub matrix: Matrix,
    pub copies: usize,
}

impl StarContext {
    pub fn p_cover(&self, n: &LeftModule) -> Result<Cover> {
        let space = HomSpace::compute(self.p().left(), n)?;
        let matrix = Matrix::hconcat(n.field(), n.dim(), space.basis());
        Ok(Cover {
            generated: matrix.is_surjective(),
            copies: space.dim(),
            matrix,
        })
    }

    pub fn is_p_generated(&self, n: &LeftModule) -> Result<bool> {
        Ok(self.p_cover(n)?.generated)
    }

    /// Generated by the canonical cover, whose kernel is generated as well.
    pub fn is_p_presented(&self, n: &LeftModule) -> Result<bool> {
        let cover = self.p_cover(n)?;
        if !cover.generated {
            return Ok(false);
        }
        let power = self.p().left().power(cover.copies);
        let kernel = submodule_on(&power, &cover.matrix.kernel_basis())?;
        self.is_p_generated(&kernel)
    }

    pub fn p_star_cocover(&self, x: &LeftModule) -> Result<Cocover> {
        let target = &self.p_star().module;
        let space = HomSpace::compute(x, target)?;
        let matrix = Matrix::vconcat(x.field(), x.dim(), space.basis());
        Ok(Cocover {
            cogenerated: matrix.is_injective(),
            copies: space.dim(),
            matrix,
        })
    }

    pub fn is_p_star_cogenerated(&self, x: &LeftModule) -> Result<bool> {
        Ok(self.p_star_cocover(x)?.cogenerated)
    }

    /// Cogenerated by the canonical map, whose cokernel is cogenerated as well.
    pub fn is_p_star_copresented(&self, x: &LeftModule) -> Result<bool> {
        let cocover = self.p_star_cocover(x)?;
        if !cocover.cogenerated {
            return Ok(false);
        }
        let power = self.p_star().module.power(cocover.copies);
        let (cokernel, _) = quotient(&power, &cocover.matrix)?;
        self.is_p_star_cogenerated(&cokernel)
    }
}
