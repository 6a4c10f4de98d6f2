//! Monads on finite categories, monad morphisms, monad 2-cells, Kleisli
//! 2-cells with their vertical and horizontal composites, Kleisli
//! categories, and distributive laws.
//!
//! The 2-cell component of a monad morphism points the Kleisli-friendly
//! way: `xi: FP => QF`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::fincat::{
    arrow_category, arrow_mor_id, CatError, FinCat, Functor, Mor, MorId, NatTrans, ObjId,
    validate_functor,
};
use crate::report::ValidationReport;

/// A monad `(P, eta, mu)` on a finite category, stored componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monad {
    pub base: FinCat,
    pub endo: Functor,
    pub unit: BTreeMap<ObjId, MorId>,
    pub mult: BTreeMap<ObjId, MorId>,
}

impl Monad {
    /// The identity monad on a category.
    pub fn identity(c: &FinCat) -> Monad {
        Monad {
            base: c.clone(),
            endo: Functor::identity(c),
            unit: c.objects.iter().map(|x| (x.clone(), c.identity[x].clone())).collect(),
            mult: c.objects.iter().map(|x| (x.clone(), c.identity[x].clone())).collect(),
        }
    }

    pub fn ob(&self, x: &ObjId) -> Result<&ObjId, CatError> {
        self.endo.ob(x)
    }

    pub fn mor(&self, f: &MorId) -> Result<&MorId, CatError> {
        self.endo.mor(f)
    }

    pub fn unit_at(&self, x: &ObjId) -> Result<&MorId, CatError> {
        self.unit.get(x).ok_or_else(|| CatError::UnknownObject(x.clone()))
    }

    pub fn mult_at(&self, x: &ObjId) -> Result<&MorId, CatError> {
        self.mult.get(x).ok_or_else(|| CatError::UnknownObject(x.clone()))
    }

    /// The unit as a `NatTrans` from the identity functor to `endo`.
    pub fn unit_nattrans(&self) -> NatTrans {
        NatTrans {
            dom: Functor::identity(&self.base),
            cod: self.endo.clone(),
            components: self.unit.clone(),
        }
    }

    /// The multiplication as a `NatTrans` from `endo . endo` to `endo`.
    pub fn mult_nattrans(&self) -> Result<NatTrans, CatError> {
        Ok(NatTrans {
            dom: self.endo.then(&self.endo)?,
            cod: self.endo.clone(),
            components: self.mult.clone(),
        })
    }
}

/// Exhaustive monad-law validation: shape of the components, naturality
/// of unit and multiplication, the two unit triangles, and associativity,
/// all checked at every object and morphism.
pub fn validate_monad(m: &Monad) -> ValidationReport {
    let mut report = ValidationReport::new();
    let fr = validate_functor(&m.endo);
    if !fr.is_valid() {
        report.merge_under("endofunctor", fr);
        return report;
    }
    if !m.endo.dom.structurally_equal(&m.base) || !m.endo.cod.structurally_equal(&m.base) {
        report.structural("endofunctor is not an endofunctor of the base category");
        return report;
    }
    let c = &m.base;
    for x in &c.objects {
        let px = &m.endo.ob_map[x];
        match m.unit.get(x) {
            None => report.structural(format!("unit has no component at `{x}`")),
            Some(u) => match c.mor(u) {
                Err(_) => report.structural(format!("unit component `{u}` at `{x}` is unknown")),
                Ok(mu) => {
                    if &mu.src != x || &mu.tgt != px {
                        report.law(format!("unit at `{x}` must be `{x}` -> `{px}`"));
                    }
                }
            },
        }
        let ppx = &m.endo.ob_map[px];
        match m.mult.get(x) {
            None => report.structural(format!("mult has no component at `{x}`")),
            Some(u) => match c.mor(u) {
                Err(_) => report.structural(format!("mult component `{u}` at `{x}` is unknown")),
                Ok(mu) => {
                    if &mu.src != ppx || &mu.tgt != px {
                        report.law(format!("mult at `{x}` must be `{ppx}` -> `{px}`"));
                    }
                }
            },
        }
    }
    if !report.is_valid() {
        return report;
    }
    // Naturality of eta and mu.
    for f in &c.morphisms {
        let pf = &m.endo.mor_map[&f.id];
        let l = c.compose(&f.id, &m.unit[&f.tgt]);
        let r = c.compose(&m.unit[&f.src], pf);
        if l.ok() != r.ok() || c.compose(&f.id, &m.unit[&f.tgt]).is_err() {
            report.law(format!("unit naturality fails at `{}`", f.id));
        }
        let ppf = &m.endo.mor_map[pf];
        let l = c.compose(ppf, &m.mult[&f.tgt]);
        let r = c.compose(&m.mult[&f.src], pf);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("mult naturality fails at `{}`", f.id));
        }
    }
    // Unit triangles and associativity.
    for x in &c.objects {
        let px = &m.endo.ob_map[x];
        let id_px = &c.identity[px];
        let eta_px = &m.unit[px];
        let p_eta_x = &m.endo.mor_map[&m.unit[x]];
        let mu_x = &m.mult[x];
        if c.compose(eta_px, mu_x).ok().as_ref() != Some(id_px) {
            report.law(format!("unit triangle (eta P ; mu) fails at `{x}`"));
        }
        if c.compose(p_eta_x, mu_x).ok().as_ref() != Some(id_px) {
            report.law(format!("unit triangle (P eta ; mu) fails at `{x}`"));
        }
        let mu_px = &m.mult[px];
        let p_mu_x = &m.endo.mor_map[mu_x];
        let l = c.compose(mu_px, mu_x);
        let r = c.compose(p_mu_x, mu_x);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("associativity square fails at `{x}`"));
        }
    }
    report
}

/// A monad morphism `(F, xi): P -> Q` with `xi: FP => QF`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonadMorphism {
    pub dom: Monad,
    pub cod: Monad,
    pub f: Functor,
    pub xi: BTreeMap<ObjId, MorId>,
}

impl MonadMorphism {
    pub fn identity(m: &Monad) -> MonadMorphism {
        MonadMorphism {
            dom: m.clone(),
            cod: m.clone(),
            f: Functor::identity(&m.base),
            xi: m.base.objects.iter().map(|x| (x.clone(), m.base.identity[&m.endo.ob_map[x]].clone())).collect(),
        }
    }

    pub fn xi_at(&self, x: &ObjId) -> Result<&MorId, CatError> {
        self.xi.get(x).ok_or_else(|| CatError::UnknownObject(x.clone()))
    }

    /// Composite "self then other" of monad morphisms, with 2-cell
    /// component `G(xi_X) ; phi_{F X}`.
    pub fn then(&self, other: &MonadMorphism) -> Result<MonadMorphism, CatError> {
        if !self.cod.base.structurally_equal(&other.dom.base) {
            return Err(CatError::Shape("monad morphism composition: base mismatch".into()));
        }
        let f = self.f.then(&other.f)?;
        let c = &other.cod.base;
        let mut xi = BTreeMap::new();
        for x in &self.dom.base.objects {
            let g_xi = other.f.mor(self.xi_at(x)?)?;
            let phi_fx = other.xi_at(self.f.ob(x)?)?;
            xi.insert(x.clone(), c.compose(g_xi, phi_fx)?);
        }
        Ok(MonadMorphism { dom: self.dom.clone(), cod: other.cod.clone(), f, xi })
    }
}

/// Validate the triangle and pentagon axioms of a monad morphism at
/// every object, plus naturality of `xi`.
pub fn validate_monad_morphism(mm: &MonadMorphism) -> ValidationReport {
    let mut report = ValidationReport::new();
    let fr = validate_functor(&mm.f);
    if !fr.is_valid() {
        report.merge_under("underlying functor", fr);
        return report;
    }
    if !mm.f.dom.structurally_equal(&mm.dom.base) || !mm.f.cod.structurally_equal(&mm.cod.base) {
        report.structural("underlying functor does not run between the monad bases");
        return report;
    }
    let d = &mm.cod.base;
    let p = &mm.dom;
    let q = &mm.cod;
    for x in &p.base.objects {
        match mm.xi.get(x) {
            None => report.structural(format!("xi has no component at `{x}`")),
            Some(u) => match d.mor(u) {
                Err(_) => report.structural(format!("xi component `{u}` at `{x}` is unknown")),
                Ok(mu) => {
                    let fpx = &mm.f.ob_map[&p.endo.ob_map[x]];
                    let qfx = &q.endo.ob_map[&mm.f.ob_map[x]];
                    if &mu.src != fpx || &mu.tgt != qfx {
                        report.law(format!("xi at `{x}` must be `{fpx}` -> `{qfx}`"));
                    }
                }
            },
        }
    }
    if !report.is_valid() {
        return report;
    }
    // Naturality of xi: F(Pf) ; xi_Y  =  xi_X ; Q(Ff).
    for f in &p.base.morphisms {
        let fpf = &mm.f.mor_map[&p.endo.mor_map[&f.id]];
        let qff = &q.endo.mor_map[&mm.f.mor_map[&f.id]];
        let l = d.compose(fpf, &mm.xi[&f.tgt]);
        let r = d.compose(&mm.xi[&f.src], qff);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("xi naturality fails at `{}`", f.id));
        }
    }
    for x in &p.base.objects {
        // triangle: F(eta_P) ; xi  =  eta_Q F
        let f_eta = &mm.f.mor_map[&p.unit[x]];
        let eta_q_fx = &q.unit[&mm.f.ob_map[x]];
        if d.compose(f_eta, &mm.xi[x]).ok().as_ref() != Some(eta_q_fx) {
            report.law(format!("triangle axiom fails at `{x}`"));
        }
        // pentagon: xi_{PX} ; Q(xi_X) ; mu_Q F  =  F(mu_P) ; xi_X
        let px = &p.endo.ob_map[x];
        let l = d.compose_path(&[&mm.xi[px], &q.endo.mor_map[&mm.xi[x]], &q.mult[&mm.f.ob_map[x]]]);
        let f_mu = &mm.f.mor_map[&p.mult[x]];
        let r = d.compose(f_mu, &mm.xi[x]);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("pentagon axiom fails at `{x}`"));
        }
    }
    report
}

/// A monad 2-cell `alpha: (F, xi) => (F', xi')` between parallel monad
/// morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonadTwoCell {
    pub dom: MonadMorphism,
    pub cod: MonadMorphism,
    pub alpha: BTreeMap<ObjId, MorId>,
}

/// A Kleisli 2-cell `alpha: (F, xi) ~> (F', xi')`, i.e. a map
/// `alpha: F => QF'` satisfying the Kleisli compatibility condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlTwoCell {
    pub dom: MonadMorphism,
    pub cod: MonadMorphism,
    pub alpha: BTreeMap<ObjId, MorId>,
}

fn parallel_check(dom: &MonadMorphism, cod: &MonadMorphism, report: &mut ValidationReport) -> bool {
    if !dom.dom.base.structurally_equal(&cod.dom.base)
        || !dom.cod.base.structurally_equal(&cod.cod.base)
        || dom.dom.endo != cod.dom.endo
        || dom.cod.endo != cod.cod.endo
    {
        report.structural("dom and cod monad morphisms are not parallel");
        return false;
    }
    true
}

/// Validate the compatibility square `xi ; Q alpha = alpha P ; xi'` of a
/// monad 2-cell at every object, plus naturality of `alpha`.
pub fn validate_monad_2cell(cell: &MonadTwoCell) -> ValidationReport {
    let mut report = ValidationReport::new();
    if !parallel_check(&cell.dom, &cell.cod, &mut report) {
        return report;
    }
    let p = &cell.dom.dom;
    let q = &cell.dom.cod;
    let d = &q.base;
    for x in &p.base.objects {
        match cell.alpha.get(x).map(|u| d.mor(u)) {
            None | Some(Err(_)) => {
                report.structural(format!("alpha component at `{x}` missing or unknown"));
            }
            Some(Ok(mu)) => {
                let fx = &cell.dom.f.ob_map[x];
                let gx = &cell.cod.f.ob_map[x];
                if &mu.src != fx || &mu.tgt != gx {
                    report.law(format!("alpha at `{x}` must be `{fx}` -> `{gx}`"));
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    for f in &p.base.morphisms {
        let l = d.compose(&cell.dom.f.mor_map[&f.id], &cell.alpha[&f.tgt]);
        let r = d.compose(&cell.alpha[&f.src], &cell.cod.f.mor_map[&f.id]);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("alpha naturality fails at `{}`", f.id));
        }
    }
    for x in &p.base.objects {
        // xi_X ; Q(alpha_X)  =  alpha_{PX} ; xi'_X
        let px = &p.endo.ob_map[x];
        let l = d.compose(&cell.dom.xi[x], &q.endo.mor_map[&cell.alpha[x]]);
        let r = d.compose(&cell.alpha[px], &cell.cod.xi[x]);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("monad 2-cell square fails at `{x}`"));
        }
    }
    report
}

/// Validate the Kleisli 2-cell condition
/// `xi ; Q alpha ; mu F' = alpha P ; Q xi' ; mu F'` at every object, plus
/// naturality of `alpha: F => QF'`.
pub fn validate_kl_2cell(cell: &KlTwoCell) -> ValidationReport {
    let mut report = ValidationReport::new();
    if !parallel_check(&cell.dom, &cell.cod, &mut report) {
        return report;
    }
    let p = &cell.dom.dom;
    let q = &cell.dom.cod;
    let d = &q.base;
    for x in &p.base.objects {
        match cell.alpha.get(x).map(|u| d.mor(u)) {
            None | Some(Err(_)) => {
                report.structural(format!("alpha component at `{x}` missing or unknown"));
            }
            Some(Ok(mu)) => {
                let fx = &cell.dom.f.ob_map[x];
                let qgx = &q.endo.ob_map[&cell.cod.f.ob_map[x]];
                if &mu.src != fx || &mu.tgt != qgx {
                    report.law(format!("alpha at `{x}` must be `{fx}` -> `{qgx}`"));
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    // Naturality as a map F => QF'.
    for f in &p.base.morphisms {
        let qgf = &q.endo.mor_map[&cell.cod.f.mor_map[&f.id]];
        let l = d.compose(&cell.dom.f.mor_map[&f.id], &cell.alpha[&f.tgt]);
        let r = d.compose(&cell.alpha[&f.src], qgf);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("alpha naturality fails at `{}`", f.id));
        }
    }
    for x in &p.base.objects {
        let px = &p.endo.ob_map[x];
        let mu_gx = &q.mult[&cell.cod.f.ob_map[x]];
        let l = d.compose_path(&[&cell.dom.xi[x], &q.endo.mor_map[&cell.alpha[x]], mu_gx]);
        let r = d.compose_path(&[&cell.alpha[px], &q.endo.mor_map[&cell.cod.xi[x]], mu_gx]);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("Kleisli 2-cell condition fails at `{x}`"));
        }
    }
    report
}

/// The identity Kleisli 2-cell on a monad morphism: `eta_Q F`.
pub fn kl_unit(mm: &MonadMorphism) -> KlTwoCell {
    let q = &mm.cod;
    let alpha = mm
        .dom
        .base
        .objects
        .iter()
        .map(|x| (x.clone(), q.unit[&mm.f.ob_map[x]].clone()))
        .collect();
    KlTwoCell { dom: mm.clone(), cod: mm.clone(), alpha }
}

/// Vertical (Kleisli-style) composite of 2-cells in a hom-category of
/// the Kleisli completion: `a_X ; Q(b_X) ; mu`.
pub fn kl_vcompose(a: &KlTwoCell, b: &KlTwoCell) -> Result<KlTwoCell, CatError> {
    if a.cod != b.dom {
        return Err(CatError::Shape("kl_vcompose: cod(a) != dom(b)".into()));
    }
    let q = &a.dom.cod;
    let d = &q.base;
    let mut alpha = BTreeMap::new();
    for x in &a.dom.dom.base.objects {
        let mu = &q.mult[&b.cod.f.ob_map[x]];
        alpha.insert(
            x.clone(),
            d.compose_path(&[&a.alpha[x], &q.endo.mor_map[&b.alpha[x]], mu])?,
        );
    }
    Ok(KlTwoCell { dom: a.dom.clone(), cod: b.cod.clone(), alpha })
}

/// Horizontal composite of `a: (F,xi) ~> (F',xi'): P -> Q` and
/// `b: (G,phi) ~> (G',phi'): Q -> R`:
/// `G(a_X) ; phi_{F'X} ; R(b_{F'X}) ; mu_R`.
pub fn kl_hcompose(a: &KlTwoCell, b: &KlTwoCell) -> Result<KlTwoCell, CatError> {
    if !a.dom.cod.base.structurally_equal(&b.dom.dom.base) || a.dom.cod.endo != b.dom.dom.endo {
        return Err(CatError::Shape("kl_hcompose: middle monad mismatch".into()));
    }
    let r = &b.dom.cod;
    let e = &r.base;
    let dom = a.dom.then(&b.dom)?;
    let cod = a.cod.then(&b.cod)?;
    let mut alpha = BTreeMap::new();
    for x in &a.dom.dom.base.objects {
        let fpx = a.cod.f.ob(x)?; // F'X
        let g_a = b.dom.f.mor(&a.alpha[x])?;
        let phi = &b.dom.xi[fpx];
        let r_b = &r.endo.mor_map[&b.alpha[fpx]];
        let mu = &r.mult[&cod.f.ob_map[x]];
        alpha.insert(x.clone(), e.compose_path(&[g_a, phi, r_b, mu])?);
    }
    Ok(KlTwoCell { dom, cod, alpha })
}

fn kleisli_mor_id(x: &ObjId, y: &ObjId, t: &MorId) -> MorId {
    MorId(format!("{x}~{y}:{t}"))
}

/// The Kleisli category of a monad: objects of the base, morphisms
/// `X ~> Y` the base morphisms `X -> PY`, identity `eta_X`, composition
/// `f ; P g ; mu`.
pub fn kleisli_category(m: &Monad) -> Result<FinCat, CatError> {
    let c = &m.base;
    let mut morphisms = Vec::new();
    let mut arrows: Vec<(ObjId, ObjId, MorId)> = Vec::new();
    for x in &c.objects {
        for y in &c.objects {
            let py = m.ob(y)?;
            for t in c.hom(x, py) {
                arrows.push((x.clone(), y.clone(), t.clone()));
            }
        }
    }
    for (x, y, t) in &arrows {
        morphisms.push(Mor { id: kleisli_mor_id(x, y, t), src: x.clone(), tgt: y.clone() });
    }
    let identity: BTreeMap<ObjId, MorId> = c
        .objects
        .iter()
        .map(|x| (x.clone(), kleisli_mor_id(x, x, &m.unit[x])))
        .collect();
    let mut comp = BTreeMap::new();
    for (x, y, t) in &arrows {
        for (y2, z, u) in &arrows {
            if y == y2 {
                let composite = c.compose_path(&[t, m.mor(u)?, m.mult_at(z)?])?;
                comp.insert(
                    (kleisli_mor_id(x, y, t), kleisli_mor_id(y2, z, u)),
                    kleisli_mor_id(x, z, &composite),
                );
            }
        }
    }
    Ok(FinCat { objects: c.objects.clone(), morphisms, identity, comp })
}

/// The monad `[2, P]` on the arrow category, acting componentwise.
pub fn arrow_monad(m: &Monad) -> Result<Monad, CatError> {
    let c = &m.base;
    let ac = arrow_category(c)?;
    let mut ob_map = BTreeMap::new();
    for f in &c.morphisms {
        ob_map.insert(ObjId(f.id.0.clone()), ObjId(m.endo.mor_map[&f.id].0.clone()));
    }
    let mut mor_map = BTreeMap::new();
    for sq in &ac.morphisms {
        // recover (f, g, a, b) from the arrow category by matching boundaries
        let (f, g) = (&sq.src, &sq.tgt);
        // parse from the id format "[a,b]:f->g"
        let (a, b) = parse_arrow_mor(&sq.id).ok_or_else(|| CatError::Shape(format!(
            "arrow morphism id `{}` not in expected format",
            sq.id
        )))?;
        let pf = MorId(ob_map[f].0.clone());
        let pg = MorId(ob_map[g].0.clone());
        let pa = m.endo.mor_map[&a].clone();
        let pb = m.endo.mor_map[&b].clone();
        mor_map.insert(sq.id.clone(), arrow_mor_id(&pf, &pg, &pa, &pb));
    }
    let endo = Functor { dom: ac.clone(), cod: ac.clone(), ob_map, mor_map };
    let mut unit = BTreeMap::new();
    let mut mult = BTreeMap::new();
    for f in &c.morphisms {
        let pf = MorId(endo.ob_map[&ObjId(f.id.0.clone())].0.clone());
        let ppf = MorId(endo.ob_map[&ObjId(pf.0.clone())].0.clone());
        unit.insert(
            ObjId(f.id.0.clone()),
            arrow_mor_id(&f.id, &pf, &m.unit[&f.src], &m.unit[&f.tgt]),
        );
        mult.insert(
            ObjId(f.id.0.clone()),
            arrow_mor_id(&ppf, &pf, &m.mult[&f.src], &m.mult[&f.tgt]),
        );
    }
    Ok(Monad { base: ac, endo, unit, mult })
}

fn parse_arrow_mor(id: &MorId) -> Option<(MorId, MorId)> {
    let s = id.0.strip_prefix('[')?;
    let (pair, _) = s.split_once("]:")?;
    let (a, b) = pair.split_once(',')?;
    Some((MorId::new(a), MorId::new(b)))
}

/// The monad morphism `(1, eta): (1, C) -> (P, C)`.
pub fn unit_monad_morphism(m: &Monad) -> MonadMorphism {
    MonadMorphism {
        dom: Monad::identity(&m.base),
        cod: m.clone(),
        f: Functor::identity(&m.base),
        xi: m.unit.clone(),
    }
}

/// The monad morphism `(P, mu): (P, C) -> (1, C)`.
pub fn mult_monad_morphism(m: &Monad) -> MonadMorphism {
    MonadMorphism {
        dom: m.clone(),
        cod: Monad::identity(&m.base),
        f: m.endo.clone(),
        xi: m.mult.clone(),
    }
}

/// A distributive law `lambda: TP => PT` of `T` over `P` on a shared
/// base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributiveLaw {
    pub t: Monad,
    pub p: Monad,
    pub lam: BTreeMap<ObjId, MorId>,
}

impl DistributiveLaw {
    pub fn lam_at(&self, x: &ObjId) -> Result<&MorId, CatError> {
        self.lam.get(x).ok_or_else(|| CatError::UnknownObject(x.clone()))
    }

    /// The monad morphism `(T, lambda): P -> P` induced by the law.
    pub fn lifted_morphism(&self) -> MonadMorphism {
        MonadMorphism {
            dom: self.p.clone(),
            cod: self.p.clone(),
            f: self.t.endo.clone(),
            xi: self.lam.clone(),
        }
    }

    /// `eta_T` as a monad 2-cell from the identity morphism on `P` to
    /// `(T, lambda)`.
    pub fn unit_two_cell(&self) -> MonadTwoCell {
        MonadTwoCell {
            dom: MonadMorphism::identity(&self.p),
            cod: self.lifted_morphism(),
            alpha: self.t.unit.clone(),
        }
    }

    /// `mu_T` as a monad 2-cell from `(T, lambda) ; (T, lambda)` to
    /// `(T, lambda)`.
    pub fn mult_two_cell(&self) -> Result<MonadTwoCell, CatError> {
        let lifted = self.lifted_morphism();
        Ok(MonadTwoCell {
            dom: lifted.then(&lifted)?,
            cod: lifted,
            alpha: self.t.mult.clone(),
        })
    }
}

/// Validate the four compatibility axioms of a distributive law at every
/// object, plus naturality of `lambda: TP => PT`.
pub fn validate_distributive_law(d: &DistributiveLaw) -> ValidationReport {
    let mut report = ValidationReport::new();
    if !d.t.base.structurally_equal(&d.p.base) {
        report.structural("T and P do not share a base category");
        return report;
    }
    let c = &d.t.base;
    let t = &d.t.endo;
    let p = &d.p.endo;
    for x in &c.objects {
        match d.lam.get(x).map(|u| c.mor(u)) {
            None | Some(Err(_)) => {
                report.structural(format!("lambda component at `{x}` missing or unknown"));
            }
            Some(Ok(mu)) => {
                let tpx = &t.ob_map[&p.ob_map[x]];
                let ptx = &p.ob_map[&t.ob_map[x]];
                if &mu.src != tpx || &mu.tgt != ptx {
                    report.law(format!("lambda at `{x}` must be `{tpx}` -> `{ptx}`"));
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    for f in &c.morphisms {
        let tpf = &t.mor_map[&p.mor_map[&f.id]];
        let ptf = &p.mor_map[&t.mor_map[&f.id]];
        let l = c.compose(tpf, &d.lam[&f.tgt]);
        let r = c.compose(&d.lam[&f.src], ptf);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("lambda naturality fails at `{}`", f.id));
        }
    }
    for x in &c.objects {
        let px = &p.ob_map[x];
        let tx = &t.ob_map[x];
        // (a) T(eta_P) ; lambda = eta_P T
        let l = c.compose(&t.mor_map[&d.p.unit[x]], &d.lam[x]);
        if l.is_err() || l.ok().as_ref() != Some(&d.p.unit[tx]) {
            report.law(format!("unit axiom (eta_P) fails at `{x}`"));
        }
        // (b) eta_T P ; lambda = P(eta_T)
        let l = c.compose(&d.t.unit[px], &d.lam[x]);
        if l.is_err() || l.ok().as_ref() != Some(&p.mor_map[&d.t.unit[x]]) {
            report.law(format!("unit axiom (eta_T) fails at `{x}`"));
        }
        // (c) T(mu_P) ; lambda = lambda P ; P lambda ; mu_P T
        let l = c.compose(&t.mor_map[&d.p.mult[x]], &d.lam[x]);
        let r = c.compose_path(&[&d.lam[px], &p.mor_map[&d.lam[x]], &d.p.mult[tx]]);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("multiplication axiom (mu_P) fails at `{x}`"));
        }
        // (d) mu_T P ; lambda = T lambda ; lambda T ; P(mu_T)
        let l = c.compose(&d.t.mult[px], &d.lam[x]);
        let r = c.compose_path(&[&t.mor_map[&d.lam[x]], &d.lam[tx], &p.mor_map[&d.t.mult[x]]]);
        if l.is_err() || l.ok() != r.ok() {
            report.law(format!("multiplication axiom (mu_T) fails at `{x}`"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fincat::{chain, validate_category};

    #[test]
    fn identity_monad_is_valid() {
        let m = Monad::identity(&chain(3));
        assert!(validate_monad(&m).is_valid());
    }

    #[test]
    fn constant_top_closure_is_valid() {
        let m = corpus::constant_top(3);
        assert!(validate_monad(&m).is_valid());
    }

    #[test]
    fn non_deflating_map_fails_mu_shape() {
        // c(0)=1, c(1)=2, c(2)=2 is monotone and inflationary but not
        // idempotent: c(c(0)) = 2 > 1 = c(0), so mu has no component at 0.
        let c = chain(3);
        let m = corpus::closure_monad(&c, &[("0", "1"), ("1", "2"), ("2", "2")]);
        let report = validate_monad(&m);
        assert!(!report.is_valid());
        assert!(report.messages().iter().any(|s| s.contains('0')));
        // oracle: c(c(x)) <= c(x) fails exactly at x = 0
        let cmap = |x: u32| if x == 0 { 1 } else { 2 };
        assert!(cmap(cmap(0)) > cmap(0));
        assert!(cmap(cmap(1)) <= cmap(1));
    }

    #[test]
    fn identity_morphism_is_valid() {
        let m = corpus::constant_top(3);
        assert!(validate_monad_morphism(&MonadMorphism::identity(&m)).is_valid());
    }

    #[test]
    fn underlying_morphism_out_of_identity_monad() {
        // (F, eta_Q F) from the identity monad corresponds to a plain functor.
        let m = corpus::constant_top(3);
        let id = Monad::identity(&m.base);
        let mm = MonadMorphism {
            dom: id,
            cod: m.clone(),
            f: Functor::identity(&m.base),
            xi: m.unit.clone(),
        };
        assert!(validate_monad_morphism(&mm).is_valid());
    }

    #[test]
    fn unit_and_mult_monad_morphisms_validate() {
        for m in [Monad::identity(&chain(2)), corpus::constant_top(3)] {
            assert!(validate_monad_morphism(&unit_monad_morphism(&m)).is_valid());
            assert!(validate_monad_morphism(&mult_monad_morphism(&m)).is_valid());
        }
        // for the identity monad both are the identity morphism
        let id = Monad::identity(&chain(2));
        assert_eq!(unit_monad_morphism(&id), MonadMorphism::identity(&id));
        assert_eq!(mult_monad_morphism(&id), MonadMorphism::identity(&id));
    }

    #[test]
    fn back_and_forth_between_identity_monads() {
        // unit then mult is an endo-morphism of the identity-monad world
        let m = corpus::constant_top(3);
        let composite = unit_monad_morphism(&m).then(&mult_monad_morphism(&m)).unwrap();
        assert!(validate_monad_morphism(&composite).is_valid());
        assert_eq!(composite.f, m.endo);
    }

    #[test]
    fn kl_2cell_between_identity_monads_is_a_nattrans() {
        // with P = Q = Id the Kleisli condition degenerates to naturality
        let c = chain(3);
        let id = Monad::identity(&c);
        let mm = MonadMorphism::identity(&id);
        let cell = KlTwoCell {
            dom: mm.clone(),
            cod: mm.clone(),
            alpha: c.objects.iter().map(|x| (x.clone(), c.identity[x].clone())).collect(),
        };
        assert!(validate_kl_2cell(&cell).is_valid());
    }

    #[test]
    fn kl_vcompose_unit_laws() {
        let m = corpus::constant_top(3);
        let mm = MonadMorphism::identity(&m);
        let unit = kl_unit(&mm);
        assert!(validate_kl_2cell(&unit).is_valid());
        assert_eq!(kl_vcompose(&unit, &unit).unwrap(), unit);
    }

    #[test]
    fn kl_hcompose_of_identities_is_identity() {
        let m = corpus::constant_top(3);
        let mm = MonadMorphism::identity(&m);
        let unit = kl_unit(&mm);
        let h = kl_hcompose(&unit, &unit).unwrap();
        assert!(validate_kl_2cell(&h).is_valid());
        assert_eq!(h.alpha, kl_unit(&mm.then(&mm).unwrap()).alpha);
    }

    #[test]
    fn kleisli_of_identity_monad_is_the_base() {
        let c = chain(3);
        let k = kleisli_category(&Monad::identity(&c)).unwrap();
        assert!(validate_category(&k).is_valid());
        assert_eq!(k.objects, c.objects);
        assert_eq!(k.morphisms.len(), c.morphisms.len());
        for x in &c.objects {
            for y in &c.objects {
                assert_eq!(k.hom(x, y).len(), c.hom(x, y).len());
            }
        }
    }

    #[test]
    fn kleisli_of_constant_top_is_codiscrete() {
        let m = corpus::constant_top(3);
        let k = kleisli_category(&m).unwrap();
        assert!(validate_category(&k).is_valid());
        assert_eq!(k.objects.len(), 3);
        assert_eq!(k.morphisms.len(), 9);
        // oracle: hom(X, Y) = base(X, top), a singleton for every pair
        for x in &k.objects {
            for y in &k.objects {
                assert_eq!(k.hom(x, y).len(), 1);
            }
        }
    }

    #[test]
    fn kleisli_hom_matches_closure_oracle() {
        // closure 0 -> 1, 1 -> 1, 2 -> 2 on the 3-chain
        let c = chain(3);
        let m = corpus::closure_monad(&c, &[("0", "1"), ("1", "1"), ("2", "2")]);
        assert!(validate_monad(&m).is_valid());
        let k = kleisli_category(&m).unwrap();
        assert!(validate_category(&k).is_valid());
        let leq = |x: &ObjId, y: &ObjId| x.0.parse::<u32>().unwrap() <= y.0.parse::<u32>().unwrap();
        for x in &c.objects {
            for y in &c.objects {
                let cy = &m.endo.ob_map[y];
                let expected = usize::from(leq(x, cy));
                assert_eq!(k.hom(x, y).len(), expected, "hom({x}, {y})");
            }
        }
    }

    #[test]
    fn arrow_monad_of_identity_is_identity() {
        let c = chain(2);
        let am = arrow_monad(&Monad::identity(&c)).unwrap();
        assert_eq!(am, Monad::identity(&am.base));
    }

    #[test]
    fn arrow_monad_of_constant_top_is_a_closure() {
        let m = corpus::constant_top(3);
        let am = arrow_monad(&m).unwrap();
        assert!(validate_monad(&am).is_valid());
        assert_eq!(am.base.objects.len(), 6);
        assert!(am.base.structurally_equal(&arrow_category(&m.base).unwrap()));
        // unit at object f is the square (eta_src, eta_tgt)
        for f in &m.base.morphisms {
            let u = &am.unit[&ObjId(f.id.0.clone())];
            let expect = arrow_mor_id(
                &f.id,
                &MorId(am.endo.ob_map[&ObjId(f.id.0.clone())].0.clone()),
                &m.unit[&f.src],
                &m.unit[&f.tgt],
            );
            assert_eq!(u, &expect);
        }
    }

    #[test]
    fn distributive_law_with_identity_p_is_valid() {
        let t = corpus::constant_top(3);
        let p = Monad::identity(&t.base);
        // lambda: T Id => Id T is the identity on T
        let lam = t
            .base
            .objects
            .iter()
            .map(|x| (x.clone(), t.base.identity[&t.endo.ob_map[x]].clone()))
            .collect();
        let d = DistributiveLaw { t, p, lam };
        assert!(validate_distributive_law(&d).is_valid());
        assert!(validate_monad_morphism(&d.lifted_morphism()).is_valid());
        assert!(validate_monad_2cell(&d.unit_two_cell()).is_valid());
        assert!(validate_monad_2cell(&d.mult_two_cell().unwrap()).is_valid());
    }

    #[test]
    fn constant_top_self_law_is_valid() {
        let d = corpus::constant_top_self_law(3);
        assert!(validate_distributive_law(&d).is_valid());
        assert!(validate_monad_morphism(&d.lifted_morphism()).is_valid());
        assert!(validate_monad_2cell(&d.unit_two_cell()).is_valid());
        assert!(validate_monad_2cell(&d.mult_two_cell().unwrap()).is_valid());
    }

    #[test]
    fn corrupted_law_component_is_reported() {
        let mut d = corpus::constant_top_self_law(3);
        // break the component at 0: redirect lambda_0 to a wrong morphism
        let x = ObjId::new("0");
        d.lam.insert(x.clone(), d.t.base.identity[&ObjId::new("0")].clone());
        let report = validate_distributive_law(&d);
        assert!(!report.is_valid());
        assert!(report.messages().iter().any(|m| m.contains('0')));
    }
}
