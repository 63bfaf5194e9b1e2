use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor, MorId, NatTrans, ObjId};
use crate::monadics::{full_faithful_witness, non_iso, object};
use crate::report::{Battery, Verdict, Witness};

use super::related::Comparison;
use super::FinAdjunction;

/// The eight conditions of the idempotent-pair theorem, plus the two
/// extremality flags used for star pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairBatteryReport {
    pub battery: Battery,
    pub unit_extremal_epi: bool,
    pub counit_extremal_mono: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counit_witness: Option<Witness>,
}

impl PairBatteryReport {
    pub fn verdict(&self) -> Verdict {
        self.battery.verdict()
    }
}

pub fn pair_battery(a: &FinAdjunction, cmp: &Comparison) -> Result<PairBatteryReport> {
    let (f, g) = (a.left(), a.right());
    let g_eps_f = a.counit().whisker_right(f)?.whisker_left(g)?;
    let eps_f = a.counit().whisker_right(f)?;
    let f_eta_g = a.unit().whisker_right(g)?.whisker_left(f)?;
    let eta_g = a.unit().whisker_right(g)?;
    let module = |c: &FinCategory, x: ObjId, rho: MorId| Witness::Module {
        carrier: c.object_name(x).to_string(),
        structure: c.morphism_name(rho).to_string(),
    };

    let mut b = Battery::new("idempotent pair");
    b.push(
        "a",
        "forgetful functor of the GF-modules is full and faithful",
        full_faithful_witness(cmp.em.forgetful()),
    );
    b.push(
        "b",
        "counit of the GF free/forgetful adjunction is an isomorphism",
        cmp.em.adjunction.counit().first_non_iso().map(|i| {
            let x = cmp.em.modules[i];
            module(a.a(), x.carrier, x.structure)
        }),
    );
    b.push("c", "G eps F is an isomorphism", non_iso(&g_eps_f));
    b.push("d", "eps F is an isomorphism", non_iso(&eps_f));
    b.push(
        "e",
        "forgetful functor of the FG-comodules is full and faithful",
        full_faithful_witness(cmp.coem.forgetful()),
    );
    b.push(
        "f",
        "unit of the FG forgetful/cofree adjunction is an isomorphism",
        cmp.coem.adjunction.unit().first_non_iso().map(|j| {
            let y = cmp.coem.comodules[j];
            module(a.b(), y.carrier, y.costructure)
        }),
    );
    b.push("g", "F eta G is an isomorphism", non_iso(&f_eta_g));
    b.push("h", "eta G is an isomorphism", non_iso(&eta_g));

    let unit_witness = first_not(a.unit(), |c, m| c.classify(m).extremal_epi);
    let counit_witness = first_not(a.counit(), |c, m| c.classify(m).extremal_mono);
    Ok(PairBatteryReport {
        battery: b,
        unit_extremal_epi: unit_witness.is_none(),
        counit_extremal_mono: counit_witness.is_none(),
        unit_witness,
        counit_witness,
    })
}

fn first_not(alpha: &NatTrans, pred: impl Fn(&FinCategory, MorId) -> bool) -> Option<Witness> {
    let d = &**alpha.codomain();
    (0..alpha.components().len())
        .find(|&x| !pred(d, alpha.at(x)))
        .map(|x| object(alpha.domain(), x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum FixSide {
    /// `Fix(GF, η)` in `A`.
    Gf,
    /// `Fix(FG, ε)` in `B`.
    Fg,
}

/// Objects whose unit (resp. counit) component is an isomorphism, as a full
/// subcategory, next to the isomorphism closure of the image of `GF` (resp. `FG`).
#[derive(Debug, Clone)]
pub struct FixSubcategory {
    pub side: FixSide,
    pub parent: Arc<FinCategory>,
    pub members: Vec<ObjId>,
    pub subcategory: Arc<FinCategory>,
    pub inclusion: FinFunctor,
    pub image_closure: Vec<ObjId>,
}

impl FixSubcategory {
    pub fn coincides_with_image(&self) -> bool {
        self.members == self.image_closure
    }

    pub fn contains(&self, x: ObjId) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

pub fn fix(a: &FinAdjunction, side: FixSide) -> Result<FixSubcategory> {
    let (parent, alpha, endo) = match side {
        FixSide::Gf => (a.a().clone(), a.unit(), FinFunctor::compose(a.right(), a.left())?),
        FixSide::Fg => (a.b().clone(), a.counit(), FinFunctor::compose(a.left(), a.right())?),
    };
    let members: Vec<ObjId> = parent.objects().filter(|&x| parent.is_iso(alpha.at(x))).collect();
    let image: Vec<ObjId> = parent.objects().map(|x| endo.obj(x)).collect();
    let image_closure: Vec<ObjId> = parent
        .objects()
        .filter(|&x| image.iter().any(|&y| parent.isomorphic(x, y)))
        .collect();
    let (sub, parent_mor) = parent.full_subcategory(&members)?;
    let subcategory = Arc::new(sub);
    let inclusion = FinFunctor::new(subcategory.clone(), parent.clone(), members.clone(), parent_mor)?;
    Ok(FixSubcategory {
        side,
        parent,
        members,
        subcategory,
        inclusion,
        image_closure,
    })
}

/// Checks that the idempotent pair restricts to an equivalence between the
/// fixed subcategories and that these are (co)reflective.
pub fn equivalence(a: &FinAdjunction, cmp: &Comparison, battery: &PairBatteryReport) -> Result<Battery> {
    if battery.verdict() != Verdict::AllTrue {
        return Err(Error::Refused(
            "the pair is not idempotent, so no equivalence is checked".into(),
        ));
    }
    let (ca, cb) = (&**a.a(), &**a.b());
    let (f, g) = (a.left(), a.right());
    let fix_a = fix(a, FixSide::Gf)?;
    let fix_b = fix(a, FixSide::Fg)?;
    let mut b = Battery::new("equivalence of fixed subcategories");

    // Reflection: every A → X with X fixed factors uniquely through η_A.
    let reflective = ca.objects().find_map(|x| {
        let gfx = g.obj(f.obj(x));
        if !fix_a.contains(gfx) {
            return Some(object(ca, x));
        }
        let eta = a.unit().at(x);
        fix_a
            .members
            .iter()
            .find(|&&y| !precompose_bijective(ca, eta, gfx, x, y))
            .map(|_| object(ca, x))
    });
    b.push("reflective", "Fix(GF) is reflective with reflection eta", reflective);
    let coreflective = cb.objects().find_map(|y| {
        let fgy = f.obj(g.obj(y));
        if !fix_b.contains(fgy) {
            return Some(object(cb, y));
        }
        let eps = a.counit().at(y);
        fix_b
            .members
            .iter()
            .find(|&&x| !postcompose_bijective(cb, eps, x, fgy, y))
            .map(|_| object(cb, y))
    });
    b.push("coreflective", "Fix(FG) is coreflective with coreflection eps", coreflective);
    b.push(
        "F_restricts",
        "F maps Fix(GF) into Fix(FG)",
        fix_a.members.iter().find(|&&x| !fix_b.contains(f.obj(x))).map(|&x| object(ca, x)),
    );
    b.push(
        "G_restricts",
        "G maps Fix(FG) into Fix(GF)",
        fix_b.members.iter().find(|&&y| !fix_a.contains(g.obj(y))).map(|&y| object(cb, y)),
    );
    b.push(
        "F_fully_faithful",
        "F is bijective on hom-sets between fixed objects",
        hom_bijective_on(f, &fix_a.members),
    );
    b.push(
        "G_fully_faithful",
        "G is bijective on hom-sets between fixed objects",
        hom_bijective_on(g, &fix_b.members),
    );
    b.push(
        "fix_gf_is_image",
        "Fix(GF) is the isomorphism closure of the image of GF",
        (!fix_a.coincides_with_image()).then(|| Witness::Detail {
            detail: format!("members {:?}, image closure {:?}", fix_a.members, fix_a.image_closure),
        }),
    );
    b.push(
        "fix_fg_is_image",
        "Fix(FG) is the isomorphism closure of the image of FG",
        (!fix_b.coincides_with_image()).then(|| Witness::Detail {
            detail: format!("members {:?}, image closure {:?}", fix_b.members, fix_b.image_closure),
        }),
    );
    let related = cmp.related_adjunction(a)?;
    let (gt_ft, ft_gt) = match &related {
        Some(r) => (non_iso(r.unit()), non_iso(r.counit())),
        None => {
            let w = Witness::Detail {
                detail: "eta and eps do not lift to the (co)module categories".into(),
            };
            (Some(w.clone()), Some(w))
        }
    };
    b.push("GtFt_iso_id", "G-tilde F-tilde is isomorphic to the identity on GF-modules", gt_ft);
    b.push("FtGt_iso_id", "F-tilde G-tilde is isomorphic to the identity on FG-comodules", ft_gt);
    Ok(b)
}

/// `Mor(target, y) → Mor(source, y)`, `h ↦ h ∘ e`, is a bijection.
fn precompose_bijective(c: &FinCategory, e: MorId, target: ObjId, source: ObjId, y: ObjId) -> bool {
    let mut image: Vec<MorId> = c.hom(target, y).iter().map(|&h| c.comp(h, e)).collect();
    image.sort_unstable();
    image.dedup();
    image.len() == c.hom(target, y).len() && image.len() == c.hom(source, y).len()
}

/// `Mor(x, source) → Mor(x, target)`, `h ↦ e ∘ h`, is a bijection.
fn postcompose_bijective(c: &FinCategory, e: MorId, x: ObjId, source: ObjId, target: ObjId) -> bool {
    let mut image: Vec<MorId> = c.hom(x, source).iter().map(|&h| c.comp(e, h)).collect();
    image.sort_unstable();
    image.dedup();
    image.len() == c.hom(x, source).len() && image.len() == c.hom(x, target).len()
}

fn hom_bijective_on(func: &FinFunctor, members: &[ObjId]) -> Option<Witness> {
    let (s, t) = (&**func.source(), &**func.target());
    for &x in members {
        for &y in members {
            let mut image: Vec<MorId> = s.hom(x, y).iter().map(|&m| func.mor(m)).collect();
            image.sort_unstable();
            image.dedup();
            if image.len() != s.hom(x, y).len() || image.len() != t.hom(func.obj(x), func.obj(y)).len() {
                return Some(Witness::Morphism {
                    morphism: "hom-set".into(),
                    source: s.object_name(x).to_string(),
                    target: s.object_name(y).to_string(),
                });
            }
        }
    }
    None
}

/// Extremality of unit and counit, with the closure properties that follow
/// when both hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarPairReport {
    pub star: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counit_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure: Option<Battery>,
}

pub fn star_pair(a: &FinAdjunction) -> Result<StarPairReport> {
    a.ensure_valid()?;
    let unit_witness = first_not(a.unit(), |c, m| c.classify(m).extremal_epi);
    let counit_witness = first_not(a.counit(), |c, m| c.classify(m).extremal_mono);
    let star = unit_witness.is_none() && counit_witness.is_none();
    let closure = if star { Some(closure_checks(a)?) } else { None };
    Ok(StarPairReport {
        star,
        unit_witness,
        counit_witness,
        closure,
    })
}

fn closure_checks(a: &FinAdjunction) -> Result<Battery> {
    let (ca, cb) = (&**a.a(), &**a.b());
    let fix_a = fix(a, FixSide::Gf)?;
    let fix_b = fix(a, FixSide::Fg)?;
    let gf = FinFunctor::compose(a.right(), a.left())?;
    let fg = FinFunctor::compose(a.left(), a.right())?;
    let morphism = |c: &FinCategory, m: MorId| Witness::Morphism {
        morphism: c.morphism_name(m).to_string(),
        source: c.object_name(c.src(m)).to_string(),
        target: c.object_name(c.dst(m)).to_string(),
    };
    let mut b = Battery::new("star pair closure");
    b.push(
        "subobjects",
        "Fix(GF) is closed under subobjects",
        ca.morphism_ids()
            .find(|&m| fix_a.contains(ca.dst(m)) && !fix_a.contains(ca.src(m)) && ca.is_mono(m))
            .map(|m| morphism(ca, m)),
    );
    b.push(
        "factor_objects",
        "Fix(FG) is closed under factor objects",
        cb.morphism_ids()
            .find(|&m| fix_b.contains(cb.src(m)) && !fix_b.contains(cb.dst(m)) && cb.is_epi(m))
            .map(|m| morphism(cb, m)),
    );
    b.push(
        "GF_preserves_epis",
        "GF preserves epimorphisms",
        ca.morphism_ids()
            .find(|&m| ca.is_epi(m) && !ca.is_epi(gf.mor(m)))
            .map(|m| morphism(ca, m)),
    );
    b.push(
        "FG_preserves_monos",
        "FG preserves monomorphisms",
        cb.morphism_ids()
            .find(|&m| cb.is_mono(m) && !cb.is_mono(fg.mor(m)))
            .map(|m| morphism(cb, m)),
    );
    Ok(b)
}
