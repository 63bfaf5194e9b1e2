use std::sync::Arc;

use crate::algmod::{
    are_isomorphic, endomorphism_algebra, enumerate_modules, hom_as_left_s_module, tensor_over, Bimodule, FqAlgebra,
    HomModule, HomSpace, LeftModule, ModuleMap, ModuleWindow, Tensor, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::ffla::Matrix;

/// The adjunction `T_P = P ⊗_S - ⊣ H_P = Hom_R(P, -)` for an `(R, S)`-bimodule
/// `P`, with windows of small `R`- and `S`-modules to quantify over.
#[derive(Debug, Clone)]
pub struct StarContext {
    p: Bimodule,
    s_is_end: bool,
    q: LeftModule,
    p_star: HomModule,
    r_window: ModuleWindow,
    s_window: ModuleWindow,
    budget: u64,
}

/// `η_X : X → H_P T_P(X)` with the intermediate modules it was computed on.
#[derive(Debug, Clone)]
pub struct Unit {
    pub tensor: Tensor,
    pub hom: HomModule,
    pub matrix: Matrix,
}

/// `ε_N : T_P H_P(N) → N` with the intermediate modules it was computed on.
#[derive(Debug, Clone)]
pub struct Counit {
    pub hom: HomModule,
    pub tensor: Tensor,
    pub matrix: Matrix,
}

/// `D(R_R)`: the field dual of the right regular module, a left module via
/// `(b·φ)(r) = φ(r b)`.
pub fn injective_cogenerator(r: &Arc<FqAlgebra>) -> LeftModule {
    let action = (0..r.dim()).map(|i| r.right_regular(i).transpose()).collect();
    LeftModule::unchecked(r, action).expect("shapes agree")
}

fn ensure_member(window: &mut ModuleWindow, m: &LeftModule, budget: u64) -> Result<()> {
    for w in window.modules.iter().filter(|w| w.dim() == m.dim()) {
        if are_isomorphic(w, m, budget)?.is_isomorphic() {
            return Ok(());
        }
    }
    window.modules.push(m.clone());
    Ok(())
}

impl StarContext {
    pub fn new(p: Bimodule, max_dim: usize, budget: u64) -> Result<Self> {
        StarContext::with_windows(p, Some((max_dim, budget)))
    }

    fn with_windows(p: Bimodule, windows: Option<(usize, u64)>) -> Result<Self> {
        let r = p.left_algebra().clone();
        let s = p.right_algebra().clone();
        let end = HomSpace::compute(p.left(), p.left())?;
        let images: Vec<Vec<u32>> = p
            .right_action()
            .iter()
            .map(|n| end.coordinates(n).ok_or_else(|| Error::shape("right action is not R-linear")))
            .collect::<Result<_>>()?;
        let s_is_end = end.dim() == s.dim() && Matrix::from_columns(p.field(), end.dim(), &images).is_injective();
        let q = injective_cogenerator(&r);
        let p_star = hom_as_left_s_module(&p, &q)?;
        let empty = ModuleWindow {
            modules: Vec::new(),
            max_dim: 0,
            complete: false,
            gaps: vec!["no window requested".into()],
        };
        let (r_window, s_window, budget) = match windows {
            None => (empty.clone(), empty, DEFAULT_BUDGET),
            Some((max_dim, budget)) => {
                let mut r_window = enumerate_modules(&r, max_dim, budget)?;
                let mut s_window = enumerate_modules(&s, max_dim, budget)?;
                ensure_member(&mut r_window, p.left(), budget)?;
                ensure_member(&mut s_window, &LeftModule::regular(&s), budget)?;
                ensure_member(&mut s_window, &p_star.module, budget)?;
                (r_window, s_window, budget)
            }
        };
        Ok(StarContext {
            p,
            s_is_end,
            q,
            p_star,
            r_window,
            s_window,
            budget,
        })
    }

    /// A context with empty windows, enough for units, counits and the
    /// functors on individual modules.
    pub fn windowless(p: Bimodule) -> Result<Self> {
        StarContext::with_windows(p, None)
    }

    /// `S = End_R(P)` computed from `P`.
    pub fn auto_end(p: &LeftModule, max_dim: usize, budget: u64) -> Result<Self> {
        let (_, b) = endomorphism_algebra(p)?;
        StarContext::new(b, max_dim, budget)
    }

    pub fn r(&self) -> &Arc<FqAlgebra> {
        self.p.left_algebra()
    }

    pub fn s(&self) -> &Arc<FqAlgebra> {
        self.p.right_algebra()
    }

    pub fn p(&self) -> &Bimodule {
        &self.p
    }

    /// Whether `s ↦ (p ↦ p·s)` is an isomorphism `S → End_R(P)`.
    pub fn s_is_end(&self) -> bool {
        self.s_is_end
    }

    pub fn q(&self) -> &LeftModule {
        &self.q
    }

    pub fn p_star(&self) -> &HomModule {
        &self.p_star
    }

    pub fn r_window(&self) -> &ModuleWindow {
        &self.r_window
    }

    pub fn s_window(&self) -> &ModuleWindow {
        &self.s_window
    }

    pub fn max_dim(&self) -> usize {
        self.r_window.max_dim
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn windows_complete(&self) -> bool {
        self.r_window.complete && self.s_window.complete
    }

    pub fn tensor(&self, x: &LeftModule) -> Result<Tensor> {
        tensor_over(&self.p, x)
    }

    pub fn hom(&self, n: &LeftModule) -> Result<HomModule> {
        hom_as_left_s_module(&self.p, n)
    }

    /// `x ↦ [p ↦ p ⊗ x]`.
    pub fn unit(&self, x: &LeftModule) -> Result<Unit> {
        let tensor = self.tensor(x)?;
        let hom = self.hom(&tensor.module)?;
        let f = x.field();
        let columns: Vec<Vec<u32>> = (0..x.dim())
            .map(|b| {
                let mut e = vec![0; x.dim()];
                e[b] = 1;
                let image: Vec<Vec<u32>> = (0..self.p.dim()).map(|a| tensor.class_of(a, &e)).collect();
                let map = Matrix::from_columns(f, tensor.module.dim(), &image);
                hom.space.coordinates(&map).expect("p ↦ p ⊗ x is R-linear")
            })
            .collect();
        let matrix = Matrix::from_columns(f, hom.module.dim(), &columns);
        Ok(Unit { tensor, hom, matrix })
    }

    /// `p ⊗ f ↦ (p)f`.
    pub fn counit(&self, n: &LeftModule) -> Result<Counit> {
        let hom = self.hom(n)?;
        let tensor = self.tensor(&hom.module)?;
        let m = hom.space.dim();
        let f = n.field();
        let columns: Vec<Vec<u32>> = (0..self.p.dim() * m)
            .map(|k| hom.space.basis()[k % m].column(k / m))
            .collect();
        let evaluation = Matrix::from_columns(f, n.dim(), &columns);
        let matrix = &evaluation * &tensor.section;
        Ok(Counit { hom, tensor, matrix })
    }

    /// `T_P(h)` for `h : X → Y`, given both tensor products.
    pub fn t_map(&self, tx: &Tensor, ty: &Tensor, h: &Matrix) -> Matrix {
        let lifted = Matrix::identity(h.field(), self.p.dim()).kron(h);
        &(&ty.projection * &lifted) * &tx.section
    }

    /// `H_P(g)` for `g : N → N'`, given both hom modules.
    pub fn h_map(&self, hn: &HomModule, hm: &HomModule, g: &Matrix) -> Matrix {
        let columns: Vec<Vec<u32>> = hn
            .space
            .basis()
            .iter()
            .map(|f| hm.space.coordinates(&(g * f)).expect("composite is R-linear"))
            .collect();
        Matrix::from_columns(g.field(), hm.module.dim(), &columns)
    }

    pub fn unit_map(&self, x: &LeftModule) -> Result<ModuleMap> {
        let u = self.unit(x)?;
        ModuleMap::new(x, &u.hom.module, u.matrix)
    }

    pub fn counit_map(&self, n: &LeftModule) -> Result<ModuleMap> {
        let c = self.counit(n)?;
        ModuleMap::new(&c.tensor.module, n, c.matrix)
    }

    pub fn is_static(&self, n: &LeftModule) -> Result<bool> {
        Ok(self.counit(n)?.matrix.is_invertible())
    }

    pub fn is_adstatic(&self, x: &LeftModule) -> Result<bool> {
        Ok(self.unit(x)?.matrix.is_invertible())
    }

    /// `(ε T_P)_X ∘ T_P(η_X)`, which the triangle identity makes the identity.
    pub fn triangle_tensor(&self, x: &LeftModule) -> Result<Matrix> {
        let u = self.unit(x)?;
        let c = self.counit(&u.tensor.module)?;
        let t_eta = self.t_map(&u.tensor, &c.tensor, &u.matrix);
        Ok(&c.matrix * &t_eta)
    }

    /// `H_P(ε_N) ∘ η_{H_P N}`, which the triangle identity makes the identity.
    pub fn triangle_hom(&self, n: &LeftModule) -> Result<Matrix> {
        let c = self.counit(n)?;
        let u = self.unit(&c.hom.module)?;
        let h_eps = self.h_map(&u.hom, &c.hom, &c.matrix);
        Ok(&h_eps * &u.matrix)
    }
}
