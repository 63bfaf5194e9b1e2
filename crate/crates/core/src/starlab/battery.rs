use serde::Serialize;

use crate::algmod::{quotient, submodule_on, submodules, HomSpace, LeftModule};
use crate::error::{Error, Result};
use crate::ffla::Matrix;
use crate::report::{Battery, Witness};

use super::StarContext;

pub(crate) fn window_witness(side: &str, index: usize, m: &LeftModule) -> Witness {
    Witness::Detail {
        detail: format!("{side}-window module #{index} (dim {})", m.dim()),
    }
}

fn first_failure<F>(side: &str, window: &[LeftModule], mut holds: F) -> Result<Option<Witness>>
where
    F: FnMut(&LeftModule) -> Result<bool>,
{
    for (i, m) in window.iter().enumerate() {
        if !holds(m)? {
            return Ok(Some(window_witness(side, i, m)));
        }
    }
    Ok(None)
}

impl StarContext {
    /// `H_P(ε_{T_P X})`.
    fn h_eps_t(&self, x: &LeftModule) -> Result<Matrix> {
        let tx = self.tensor(x)?;
        let c = self.counit(&tx.module)?;
        let htx = self.hom(&tx.module)?;
        let hthtx = self.hom(&c.tensor.module)?;
        Ok(self.h_map(&hthtx, &htx, &c.matrix))
    }

    /// `T_P(η_{H_P N})`.
    fn t_eta_h(&self, n: &LeftModule) -> Result<Matrix> {
        let hn = self.hom(n)?;
        let u = self.unit(&hn.module)?;
        let thn = self.tensor(&hn.module)?;
        let ththn = self.tensor(&u.hom.module)?;
        Ok(self.t_map(&thn, &ththn, &u.matrix))
    }
}

/// The six equivalent idempotence conditions for `(T_P, H_P)`, each checked
/// on every module of the windows. (e) and (f) are the ones tied to
/// `S = End_R(P)`.
pub fn idempotence_battery_concrete(ctx: &StarContext) -> Result<Battery> {
    let rw = &ctx.r_window().modules;
    let sw = &ctx.s_window().modules;
    let mut b = Battery::new("idempotent pair (T_P, H_P), window-bounded");
    b.push(
        "a",
        "H_P applied to the counit at T_P(X) is an isomorphism for every X in the S-window",
        first_failure("S", sw, |x| Ok(ctx.h_eps_t(x)?.is_invertible()))?,
    );
    b.push(
        "b",
        "P ⊗_S X is P-static for every X in the S-window",
        first_failure("S", sw, |x| ctx.is_static(&ctx.tensor(x)?.module))?,
    );
    b.push(
        "c",
        "T_P applied to the unit at H_P(N) is an isomorphism for every N in the R-window",
        first_failure("R", rw, |n| Ok(ctx.t_eta_h(n)?.is_invertible()))?,
    );
    b.push(
        "d",
        "Hom_R(P, N) is P-adstatic for every N in the R-window",
        first_failure("R", rw, |n| ctx.is_adstatic(&ctx.hom(n)?.module))?,
    );
    b.push(
        "e",
        "every P-presented module in the R-window is P-static",
        first_failure("R", rw, |n| Ok(!ctx.is_p_presented(n)? || ctx.is_static(n)?))?,
    );
    b.push(
        "f",
        "every P*-copresented module in the S-window is P-adstatic",
        first_failure("S", sw, |x| Ok(!ctx.is_p_star_copresented(x)? || ctx.is_adstatic(x)?))?,
    );
    Ok(b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfSmall {
    pub holds: bool,
    /// `(λ, λ · dim End_R(P), dim Hom_R(P, P^λ))` for each λ checked.
    pub checked: Vec<(usize, usize, usize)>,
    pub note: String,
}

/// The canonical map `End_R(P)^λ → Hom_R(P, P^λ)` is an isomorphism for
/// `λ = 1..=lambda_bound`.
pub fn self_small_check(ctx: &StarContext, lambda_bound: usize) -> Result<SelfSmall> {
    let p = ctx.p().left();
    let f = p.field();
    let end = HomSpace::compute(p, p)?;
    let mut checked = Vec::new();
    let mut holds = true;
    for lambda in 1..=lambda_bound {
        let target = HomSpace::compute(p, &p.power(lambda))?;
        let mut columns = Vec::new();
        for slot in 0..lambda {
            for g in end.basis() {
                let blocks: Vec<Matrix> = (0..lambda)
                    .map(|k| if k == slot { g.clone() } else { Matrix::zeros(f, p.dim(), p.dim()) })
                    .collect();
                let stacked = Matrix::vconcat(f, p.dim(), &blocks);
                columns.push(target.coordinates(&stacked).expect("componentwise maps are R-linear"));
            }
        }
        let map = Matrix::from_columns(f, target.dim(), &columns);
        holds &= map.is_invertible();
        checked.push((lambda, lambda * end.dim(), target.dim()));
    }
    Ok(SelfSmall {
        holds,
        checked,
        note: "P is finite-dimensional, so Hom_R(P, -) commutes with all direct sums and P is self-small".into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QpWitness {
    pub copies: usize,
    /// Columns spanning the kernel `K ⊆ P^k`.
    pub kernel: Vec<Vec<u32>>,
    pub hom_into_quotient: usize,
    pub image_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WSigmaQp {
    pub holds: bool,
    pub witness: Option<QpWitness>,
    pub sequences_checked: usize,
    pub complete: bool,
}

/// For every `P`-generated submodule `K ⊆ P^k` with `k ≤ k_bound`, checks
/// that `Hom(P, P^k) → Hom(P, P^k / K)` is onto.
pub fn w_sigma_qp_check(ctx: &StarContext, k_bound: usize) -> Result<WSigmaQp> {
    let p = ctx.p().left();
    let mut out = WSigmaQp {
        holds: true,
        witness: None,
        sequences_checked: 0,
        complete: true,
    };
    for k in 1..=k_bound {
        let power = p.power(k);
        let subs = match submodules(&power, ctx.budget()) {
            Ok(s) => s,
            Err(Error::Budget { .. }) => {
                out.complete = false;
                continue;
            }
            Err(e) => return Err(e),
        };
        let into_power = HomSpace::compute(p, &power)?;
        for sub in subs {
            if !ctx.is_p_generated(&submodule_on(&power, &sub)?)? {
                continue;
            }
            out.sequences_checked += 1;
            let (n, projection) = quotient(&power, &sub)?;
            let into_n = HomSpace::compute(p, &n)?;
            let images: Vec<Matrix> = into_power.basis().iter().map(|f| &projection * f).collect();
            let image_dim = Matrix::from_columns(
                p.field(),
                n.dim() * p.dim(),
                &images.iter().map(Matrix::flatten).collect::<Vec<_>>(),
            )
            .rank();
            if image_dim < into_n.dim() {
                out.holds = false;
                out.witness = Some(QpWitness {
                    copies: k,
                    kernel: sub.columns(),
                    hom_into_quotient: into_n.dim(),
                    image_dim,
                });
                return Ok(out);
            }
        }
    }
    Ok(out)
}
