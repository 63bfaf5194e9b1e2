use std::sync::Arc;

use crate::adjunctions::FinAdjunction;
use crate::algmod::{are_isomorphic, HomSpace, LeftModule};
use crate::error::{Error, Result};
use crate::ffla::Matrix;
use crate::fincat::{CategoryBuilder, FinCategory, FinFunctor, MorId, ObjId};

use super::StarContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    R,
    S,
}

impl Side {
    fn label(self) -> &'static str {
        match self {
            Side::R => "R",
            Side::S => "S",
        }
    }
}

/// The full subcategory of modules on the window modules, with every module
/// map as a morphism. Morphism `k` of `Hom(a, b)` is the map with hom-space
/// coordinates given by the base-`p` digits of `k`.
#[derive(Debug, Clone)]
pub struct WindowCategory {
    pub category: Arc<FinCategory>,
    pub modules: Vec<LeftModule>,
    homs: Vec<HomSpace>,
    ids: Vec<Vec<MorId>>,
    matrices: Vec<Matrix>,
}

impl WindowCategory {
    pub fn build(modules: Vec<LeftModule>, side: Side, morphism_budget: usize) -> Result<Self> {
        let n = modules.len();
        let Some(first) = modules.first() else {
            return Err(Error::shape("empty window"));
        };
        let f = first.field();
        let mut homs = Vec::with_capacity(n * n);
        let mut total = 0usize;
        for a in &modules {
            for b in &modules {
                let h = HomSpace::compute(a, b)?;
                total = f
                    .count(h.dim())
                    .and_then(|c| total.checked_add(c as usize))
                    .filter(|&t| t <= morphism_budget)
                    .ok_or_else(|| Error::Budget {
                        what: "window category morphisms".into(),
                        needed: total.saturating_add(f.count(h.dim()).map_or(usize::MAX, |c| c as usize)),
                        budget: morphism_budget,
                    })?;
                homs.push(h);
            }
        }
        let label = side.label();
        let mut builder = CategoryBuilder::new().budget(morphism_budget);
        let objects: Vec<ObjId> = (0..n).map(|i| builder.object(&format!("{label}{i}"))).collect();
        let mut ids = vec![Vec::new(); n * n];
        let mut by_id: Vec<(MorId, Matrix)> = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let h = &homs[a * n + b];
                let count = f.count(h.dim()).expect("bounded above") as usize;
                let mut row = Vec::with_capacity(count);
                for k in 0..count {
                    let m = h.element(&f.vector(h.dim(), k as u64));
                    let id = if a == b && m.is_identity() {
                        builder.identity_of(objects[a])
                    } else {
                        builder.morphism(&format!("{label}{a}->{label}{b}#{k}"), objects[a], objects[b])
                    };
                    by_id.push((id, m));
                    row.push(id);
                }
                ids[a * n + b] = row;
            }
        }
        by_id.sort_by_key(|(id, _)| *id);
        let matrices: Vec<Matrix> = by_id.into_iter().map(|(_, m)| m).collect();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for &g in &ids[b * n + c] {
                        for &h in &ids[a * n + b] {
                            let gh = &matrices[g] * &matrices[h];
                            let id = lookup(&homs[a * n + c], &ids[a * n + c], &gh).expect("composite of module maps");
                            builder.compose(g, h, id);
                        }
                    }
                }
            }
        }
        Ok(WindowCategory {
            category: Arc::new(builder.build()?),
            modules,
            homs,
            ids,
            matrices,
        })
    }

    pub fn matrix(&self, m: MorId) -> &Matrix {
        &self.matrices[m]
    }

    /// The morphism `a → b` with the given matrix, if it is a module map.
    pub fn morphism_of(&self, a: ObjId, b: ObjId, m: &Matrix) -> Option<MorId> {
        let n = self.modules.len();
        lookup(&self.homs[a * n + b], &self.ids[a * n + b], m)
    }

    /// The window object isomorphic to `m`, with an isomorphism `m → object`.
    pub fn locate(&self, m: &LeftModule, budget: u64) -> Result<Option<(ObjId, Matrix)>> {
        for (i, w) in self.modules.iter().enumerate() {
            if w.dim() != m.dim() {
                continue;
            }
            if let Some(g) = are_isomorphic(m, w, budget)?.witness() {
                return Ok(Some((i, g.clone())));
            }
        }
        Ok(None)
    }
}

fn lookup(h: &HomSpace, ids: &[MorId], m: &Matrix) -> Option<MorId> {
    if m.shape() != (h.target_dim(), h.source_dim()) {
        return None;
    }
    let p = u64::from(m.field().p());
    let coords = h.coordinates(m)?;
    let k = coords.iter().rev().fold(0u64, |acc, &c| acc * p + u64::from(c));
    Some(ids[k as usize])
}

/// The window category on one side of the context.
pub fn build_window_category(ctx: &StarContext, side: Side, morphism_budget: usize) -> Result<WindowCategory> {
    let modules = match side {
        Side::R => ctx.r_window().modules.clone(),
        Side::S => ctx.s_window().modules.clone(),
    };
    WindowCategory::build(modules, side, morphism_budget)
}

/// `T_P ⊣ H_P` restricted to the windows and transported along chosen
/// isomorphisms onto window objects, as an adjunction of finite categories.
#[derive(Debug, Clone)]
pub struct WindowAdjunction {
    pub s_side: WindowCategory,
    pub r_side: WindowCategory,
    pub adjunction: FinAdjunction,
}

/// `None` when `T_P` or `H_P` leaves the windows up to isomorphism.
pub fn window_adjunction(ctx: &StarContext, morphism_budget: usize) -> Result<Option<WindowAdjunction>> {
    let sw = build_window_category(ctx, Side::S, morphism_budget)?;
    let rw = build_window_category(ctx, Side::R, morphism_budget)?;
    let budget = ctx.budget();

    // T on objects: X ↦ (j, φ_X : T X → W_R[j]).
    let mut t_obj = Vec::new();
    let mut tensors = Vec::new();
    for x in &sw.modules {
        let t = ctx.tensor(x)?;
        let Some(found) = rw.locate(&t.module, budget)? else {
            return Ok(None);
        };
        t_obj.push(found);
        tensors.push(t);
    }
    let mut h_obj = Vec::new();
    let mut homs = Vec::new();
    for n in &rw.modules {
        let h = ctx.hom(n)?;
        let Some(found) = sw.locate(&h.module, budget)? else {
            return Ok(None);
        };
        h_obj.push(found);
        homs.push(h);
    }

    let s_cat = &sw.category;
    let r_cat = &rw.category;
    let mut t_mor = vec![0; s_cat.num_morphisms()];
    for m in s_cat.morphism_ids() {
        let (a, b) = (s_cat.src(m), s_cat.dst(m));
        let th = ctx.t_map(&tensors[a], &tensors[b], sw.matrix(m));
        let (ja, phi_a) = &t_obj[a];
        let (jb, phi_b) = &t_obj[b];
        let moved = &(phi_b * &th) * &phi_a.inverse().expect("isomorphism");
        t_mor[m] = rw.morphism_of(*ja, *jb, &moved).expect("T_P of a module map");
    }
    let mut h_mor = vec![0; r_cat.num_morphisms()];
    for m in r_cat.morphism_ids() {
        let (a, b) = (r_cat.src(m), r_cat.dst(m));
        let hg = ctx.h_map(&homs[a], &homs[b], rw.matrix(m));
        let (ka, chi_a) = &h_obj[a];
        let (kb, chi_b) = &h_obj[b];
        let moved = &(chi_b * &hg) * &chi_a.inverse().expect("isomorphism");
        h_mor[m] = sw.morphism_of(*ka, *kb, &moved).expect("H_P of a module map");
    }
    let left = FinFunctor::new(
        s_cat.clone(),
        r_cat.clone(),
        t_obj.iter().map(|(j, _)| *j).collect(),
        t_mor,
    )?;
    let right = FinFunctor::new(
        r_cat.clone(),
        s_cat.clone(),
        h_obj.iter().map(|(k, _)| *k).collect(),
        h_mor,
    )?;

    let mut unit = Vec::new();
    for (x, module) in sw.modules.iter().enumerate() {
        let (j, phi) = &t_obj[x];
        let (k, chi) = &h_obj[*j];
        let u = ctx.unit(module)?;
        let h_phi = ctx.h_map(&u.hom, &homs[*j], phi);
        let component = &(chi * &h_phi) * &u.matrix;
        unit.push(sw.morphism_of(x, *k, &component).expect("unit component"));
    }
    let mut counit = Vec::new();
    for (n, module) in rw.modules.iter().enumerate() {
        let (k, chi) = &h_obj[n];
        let (j, phi) = &t_obj[*k];
        let c = ctx.counit(module)?;
        let chi_inv = chi.inverse().expect("isomorphism");
        let t_chi_inv = ctx.t_map(&tensors[*k], &c.tensor, &chi_inv);
        let component = &(&c.matrix * &t_chi_inv) * &phi.inverse().expect("isomorphism");
        counit.push(rw.morphism_of(*j, n, &component).expect("counit component"));
    }
    let adjunction = FinAdjunction::from_components(left, right, unit, counit)?;
    Ok(Some(WindowAdjunction {
        s_side: sw,
        r_side: rw,
        adjunction,
    }))
}
