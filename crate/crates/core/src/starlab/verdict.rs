use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algmod::json::{AlgebraFile, BimoduleFile, ModuleFile};
use crate::algmod::{direct_sum, quotient, submodule_on, submodules, Bimodule, LeftModule};
use crate::error::{Error, Result};
use crate::ffla::Matrix;
use crate::fincat::json::Loader;
use crate::report::{Battery, Witness};

use super::battery::{idempotence_battery_concrete, self_small_check, w_sigma_qp_check, window_witness};
use super::StarContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    UnitNotSurjective,
    CounitNotInjective,
}

/// A module on which the unit is not onto (an `S`-module) or the counit is
/// not one-to-one (an `R`-module), with the offending matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub module: ModuleFile,
    pub shape: (usize, usize),
    pub matrix: Vec<Vec<u32>>,
}

impl Certificate {
    fn new(kind: CertificateKind, m: &LeftModule, matrix: &Matrix) -> Self {
        Certificate {
            kind,
            module: ModuleFile::from_module(m),
            shape: matrix.shape(),
            matrix: matrix.to_rows(),
        }
    }

    /// Recomputes the map from `p` and the serialized module alone and
    /// confirms both the recorded matrix and the failure.
    pub fn revalidate(&self, p: &Bimodule) -> Result<bool> {
        let ctx = StarContext::windowless(p.clone())?;
        let algebra = match self.kind {
            CertificateKind::UnitNotSurjective => p.right_algebra(),
            CertificateKind::CounitNotInjective => p.left_algebra(),
        };
        let module = self.module.build_over(algebra)?;
        if !module.violations().is_empty() {
            return Ok(false);
        }
        let (r, c) = self.shape;
        let recorded = Matrix::from_flat(p.field(), r, c, self.matrix.iter().flatten().copied().collect())?;
        let (matrix, failed) = match self.kind {
            CertificateKind::UnitNotSurjective => {
                let m = ctx.unit(&module)?.matrix;
                let failed = !m.is_surjective();
                (m, failed)
            }
            CertificateKind::CounitNotInjective => {
                let m = ctx.counit(&module)?.matrix;
                let failed = !m.is_injective();
                (m, failed)
            }
        };
        Ok(failed && matrix == recorded)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarStatus {
    StarOnWindow,
    Refuted,
    Undecided,
}

impl fmt::Display for StarStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StarStatus::StarOnWindow => "star-on-window",
            StarStatus::Refuted => "refuted",
            StarStatus::Undecided => "undecided",
        })
    }
}

#[derive(Debug, Clone)]
pub struct StarVerdict {
    pub status: StarStatus,
    pub battery: Battery,
    pub certificates: Vec<Certificate>,
    /// Closure and equivalence checks, run only on star-on-window.
    pub closure: Option<Battery>,
    pub window_dim: usize,
    pub windows_complete: bool,
}

/// Star-on-window iff every unit in the `S`-window is onto and every counit
/// in the `R`-window is one-to-one. Any failure refutes, with certificates
/// ordered by dimension and then by action matrices. Without failures the
/// verdict is undecided when a window is incomplete or empty.
pub fn star_verdict(ctx: &StarContext) -> Result<StarVerdict> {
    let battery = idempotence_battery_concrete(ctx)?;
    let mut certificates = Vec::new();
    for x in &ctx.s_window().modules {
        let u = ctx.unit(x)?;
        if !u.matrix.is_surjective() {
            certificates.push((x.key(), Certificate::new(CertificateKind::UnitNotSurjective, x, &u.matrix)));
        }
    }
    for n in &ctx.r_window().modules {
        let c = ctx.counit(n)?;
        if !c.matrix.is_injective() {
            certificates.push((n.key(), Certificate::new(CertificateKind::CounitNotInjective, n, &c.matrix)));
        }
    }
    certificates.sort_by(|a, b| a.0.cmp(&b.0));
    let certificates: Vec<Certificate> = certificates.into_iter().map(|(_, c)| c).collect();
    let status = if !certificates.is_empty() {
        StarStatus::Refuted
    } else if !ctx.windows_complete() || ctx.max_dim() == 0 {
        StarStatus::Undecided
    } else {
        StarStatus::StarOnWindow
    };
    let closure = if status == StarStatus::StarOnWindow {
        Some(closure_battery(ctx)?)
    } else {
        None
    };
    Ok(StarVerdict {
        status,
        battery,
        certificates,
        closure,
        window_dim: ctx.max_dim(),
        windows_complete: ctx.windows_complete(),
    })
}

fn find<F>(side: &str, window: &[LeftModule], mut fails: F) -> Result<Option<Witness>>
where
    F: FnMut(&LeftModule) -> Result<bool>,
{
    for (i, m) in window.iter().enumerate() {
        if fails(m)? {
            return Ok(Some(window_witness(side, i, m)));
        }
    }
    Ok(None)
}

fn submodule_list(ctx: &StarContext, m: &LeftModule) -> Result<Vec<Matrix>> {
    submodules(m, ctx.budget())
}

/// Consequences of the star property, checked on the windows: closure of
/// the fixed classes, mutual inverseness of the functors on them,
/// preservation of epis and monos, and the canonical maps on binary
/// coproducts and products.
fn closure_battery(ctx: &StarContext) -> Result<Battery> {
    let rw = &ctx.r_window().modules;
    let sw = &ctx.s_window().modules;
    let mut b = Battery::new("star consequences, window-bounded");
    b.push(
        "static_closed_under_quotients",
        "quotients of P-static modules in the R-window are P-static",
        find("R", rw, |n| {
            if !ctx.is_static(n)? {
                return Ok(false);
            }
            for sub in submodule_list(ctx, n)? {
                if !ctx.is_static(&quotient(n, &sub)?.0)? {
                    return Ok(true);
                }
            }
            Ok(false)
        })?,
    );
    b.push(
        "adstatic_closed_under_submodules",
        "submodules of P-adstatic modules in the S-window are P-adstatic",
        find("S", sw, |x| {
            if !ctx.is_adstatic(x)? {
                return Ok(false);
            }
            for sub in submodule_list(ctx, x)? {
                if !ctx.is_adstatic(&submodule_on(x, &sub)?)? {
                    return Ok(true);
                }
            }
            Ok(false)
        })?,
    );
    b.push(
        "T_H_inverse_on_fixed",
        "T_P sends P-adstatic modules to P-static ones and H_P sends P-static modules to P-adstatic ones",
        match find("S", sw, |x| Ok(ctx.is_adstatic(x)? && !ctx.is_static(&ctx.tensor(x)?.module)?))? {
            Some(w) => Some(w),
            None => find("R", rw, |n| Ok(ctx.is_static(n)? && !ctx.is_adstatic(&ctx.hom(n)?.module)?))?,
        },
    );
    b.push(
        "GF_preserves_epis",
        "H_P T_P sends every quotient map in the S-window to a surjection",
        find("S", sw, |x| {
            let hx = ctx.unit(x)?;
            for sub in submodule_list(ctx, x)? {
                let (y, pi) = quotient(x, &sub)?;
                let hy = ctx.unit(&y)?;
                let t_pi = ctx.t_map(&hx.tensor, &hy.tensor, &pi);
                if !ctx.h_map(&hx.hom, &hy.hom, &t_pi).is_surjective() {
                    return Ok(true);
                }
            }
            Ok(false)
        })?,
    );
    b.push(
        "FG_preserves_monos",
        "T_P H_P sends every submodule inclusion in the R-window to an injection",
        find("R", rw, |n| {
            let cn = ctx.counit(n)?;
            for sub in submodule_list(ctx, n)? {
                let k = submodule_on(n, &sub)?;
                let ck = ctx.counit(&k)?;
                let h_iota = ctx.h_map(&ck.hom, &cn.hom, &sub.image_basis());
                if !ctx.t_map(&ck.tensor, &cn.tensor, &h_iota).is_injective() {
                    return Ok(true);
                }
            }
            Ok(false)
        })?,
    );
    let f = ctx.p().field();
    let mut psi = None;
    'psi: for (i, x1) in sw.iter().enumerate() {
        for x2 in sw {
            let sum = direct_sum(&[x1.clone(), x2.clone()])?;
            let (u1, u2, us) = (ctx.unit(x1)?, ctx.unit(x2)?, ctx.unit(&sum)?);
            let iota1 = Matrix::identity(f, x1.dim()).vstack(&Matrix::zeros(f, x2.dim(), x1.dim()))?;
            let iota2 = Matrix::zeros(f, x1.dim(), x2.dim()).vstack(&Matrix::identity(f, x2.dim()))?;
            let g1 = ctx.h_map(&u1.hom, &us.hom, &ctx.t_map(&u1.tensor, &us.tensor, &iota1));
            let g2 = ctx.h_map(&u2.hom, &us.hom, &ctx.t_map(&u2.tensor, &us.tensor, &iota2));
            if !g1.hstack(&g2)?.is_surjective() {
                psi = Some(window_witness("S", i, x1));
                break 'psi;
            }
        }
    }
    b.push(
        "psi_epi",
        "the canonical map H_P T_P(X1) ⊕ H_P T_P(X2) → H_P T_P(X1 ⊕ X2) is onto for all pairs in the S-window",
        psi,
    );
    let mut phi = None;
    'phi: for (i, n1) in rw.iter().enumerate() {
        for n2 in rw {
            let sum = direct_sum(&[n1.clone(), n2.clone()])?;
            let (c1, c2, cs) = (ctx.counit(n1)?, ctx.counit(n2)?, ctx.counit(&sum)?);
            let pi1 = Matrix::identity(f, n1.dim()).hstack(&Matrix::zeros(f, n1.dim(), n2.dim()))?;
            let pi2 = Matrix::zeros(f, n2.dim(), n1.dim()).hstack(&Matrix::identity(f, n2.dim()))?;
            let g1 = ctx.t_map(&cs.tensor, &c1.tensor, &ctx.h_map(&cs.hom, &c1.hom, &pi1));
            let g2 = ctx.t_map(&cs.tensor, &c2.tensor, &ctx.h_map(&cs.hom, &c2.hom, &pi2));
            if !g1.vstack(&g2)?.is_injective() {
                phi = Some(window_witness("R", i, n1));
                break 'phi;
            }
        }
    }
    b.push(
        "phi_mono",
        "the canonical map T_P H_P(N1 ⊕ N2) → T_P H_P(N1) ⊕ T_P H_P(N2) is one-to-one for all pairs in the R-window",
        phi,
    );
    Ok(b)
}

/// The report written by the `star` command.
pub fn star_report(ctx: &StarContext, verdict: &StarVerdict) -> Result<Value> {
    let small = self_small_check(ctx, 2)?;
    let qp = w_sigma_qp_check(ctx, 2)?;
    let mut gaps = ctx.r_window().gaps.clone();
    gaps.extend(ctx.s_window().gaps.iter().cloned());
    Ok(json!({
        "context": {
            "R": AlgebraFile::from_algebra(ctx.r()),
            "S": AlgebraFile::from_algebra(ctx.s()),
            "P": BimoduleFile::from_bimodule(ctx.p()),
            "S_is_End_R(P)": ctx.s_is_end(),
            "Q": "D(R_R), the field dual of the right regular module",
            "P_star_dim": ctx.p_star().module.dim(),
            "windows": {
                "R": ctx.r_window().modules.len(),
                "S": ctx.s_window().modules.len(),
                "complete": verdict.windows_complete,
                "gaps": gaps,
            },
            "scope": format!(
                "claims quantify over modules of dimension at most {} together with P, S and P*",
                verdict.window_dim
            ),
        },
        "battery": verdict.battery.to_json(),
        "verdict": verdict.status,
        "window_dim": verdict.window_dim,
        "certificates": verdict.certificates,
        "closure": verdict.closure.as_ref().map(Battery::to_json),
        "self_small": small,
        "w_sigma_quasiprojective": qp,
    }))
}

/// Re-checks every certificate of a report against the bimodule recorded in
/// its context. Returns one flag per certificate.
pub fn revalidate_report(report: &Value) -> Result<Vec<bool>> {
    let p: BimoduleFile = serde_json::from_value(report["context"]["P"].clone())?;
    let p = p.build_unchecked(&Loader::new("."))?;
    if !p.violations().is_empty() {
        return Err(Error::shape("report context holds an invalid bimodule"));
    }
    let certificates: Vec<Certificate> = serde_json::from_value(report["certificates"].clone())?;
    certificates.iter().map(|c| c.revalidate(&p)).collect()
}
