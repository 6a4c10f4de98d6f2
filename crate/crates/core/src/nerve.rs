//! Vertical theories and the nerve double categories they generate:
//! Kleisli arrows, P-embeddings, strong Kleisli split-epis, and
//! multi-embeddings, together with the epsilon cells, the
//! theorem-axiom suite, whiskering, faithfulness and bounded-fullness
//! searches, and the transpose with its square families.
//!
//! Every vertical cell carries a Kleisli projection `phi`: a morphism
//! `X -> PY` of the base. Squares are a property of their boundary.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::double::{
    from_property_squares, transpose, DoubleCategory, DoubleFunctor, SquareFamily,
    validate_double_functor, validate_double_nat,
};
use crate::enumerate::{
    enumerate_double_functors, enumerate_kl_twocells, enumerate_monad_morphisms,
    enumerate_monad_twocells, Budget,
};
use crate::fincat::{CatError, Mor, MorId, ObjId};
use crate::monad::{
    kl_hcompose, validate_kl_2cell, validate_monad_2cell, validate_monad_morphism, KlTwoCell,
    Monad, MonadMorphism, MonadTwoCell,
};
use crate::report::{Finding, Report, Status, ValidationReport};

/// The four built-in vertical theories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theory {
    Kleisli,
    Embedding,
    SplitEpi,
    Multi(usize),
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theory::Kleisli => f.write_str("kleisli"),
            Theory::Embedding => f.write_str("embedding"),
            Theory::SplitEpi => f.write_str("splitepi"),
            Theory::Multi(n) => write!(f, "multi:{n}"),
        }
    }
}

impl Theory {
    /// Parse a theory tag: `kleisli`, `embedding`, `splitepi`, `multi:<n>`.
    pub fn parse(s: &str) -> Option<Theory> {
        match s {
            "kleisli" => Some(Theory::Kleisli),
            "embedding" => Some(Theory::Embedding),
            "splitepi" => Some(Theory::SplitEpi),
            _ => s
                .strip_prefix("multi:")
                .and_then(|n| n.parse().ok())
                .map(Theory::Multi),
        }
    }
}

/// The variant-specific data of a vertical cell `X ~> Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellData {
    /// `tau: X -> PY`.
    Kleisli { tau: MorId },
    /// `pi: Y -> X`, `tau: X -> PY` with `pi ; tau = eta_Y`.
    Embedding { pi: MorId, tau: MorId },
    /// `s: Y -> PX`, `e: X -> PY` with `s ; Pe = eta_Y ; eta_PY`.
    SplitEpi { s: MorId, e: MorId },
    /// `pi_i: Y -> X` and `tau: X -> PY` with every `pi_i ; tau = eta_Y`.
    Multi { pis: Vec<MorId>, tau: MorId },
}

/// A vertical cell of a nerve double category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerticalCell {
    pub src: ObjId,
    pub tgt: ObjId,
    pub data: CellData,
}

impl VerticalCell {
    /// The Kleisli projection of the cell: a morphism `X -> PY`.
    pub fn phi(&self) -> &MorId {
        match &self.data {
            CellData::Kleisli { tau } => tau,
            CellData::Embedding { tau, .. } => tau,
            CellData::SplitEpi { e, .. } => e,
            CellData::Multi { tau, .. } => tau,
        }
    }

    pub fn theory(&self) -> Theory {
        match &self.data {
            CellData::Kleisli { .. } => Theory::Kleisli,
            CellData::Embedding { .. } => Theory::Embedding,
            CellData::SplitEpi { .. } => Theory::SplitEpi,
            CellData::Multi { pis, .. } => Theory::Multi(pis.len()),
        }
    }

    /// Deterministic identifier from the cell components.
    pub fn id(&self) -> MorId {
        let (x, y) = (&self.src, &self.tgt);
        match &self.data {
            CellData::Kleisli { tau } => MorId(format!("k|{x}>{y}|{tau}")),
            CellData::Embedding { pi, tau } => MorId(format!("e|{x}>{y}|{pi}|{tau}")),
            CellData::SplitEpi { s, e } => MorId(format!("s|{x}>{y}|{s}|{e}")),
            CellData::Multi { pis, tau } => {
                let joined: Vec<String> = pis.iter().map(|p| p.0.clone()).collect();
                MorId(format!("m{}|{x}>{y}|{}|{tau}", pis.len(), joined.join(";")))
            }
        }
    }
}

/// Validate the shape and the variant equation of one cell.
pub fn validate_cell(m: &Monad, cell: &VerticalCell) -> ValidationReport {
    let mut report = ValidationReport::new();
    let c = &m.base;
    let (x, y) = (&cell.src, &cell.tgt);
    if !c.has_object(x) || !c.has_object(y) {
        report.structural(format!("cell endpoints `{x}`, `{y}` unknown"));
        return report;
    }
    let py = &m.endo.ob_map[y];
    let check_mor = |report: &mut ValidationReport, name: &str, f: &MorId, src: &ObjId, tgt: &ObjId| {
        match c.mor(f) {
            Err(_) => {
                report.structural(format!("{name} component `{f}` is unknown"));
                false
            }
            Ok(mf) => {
                if &mf.src != src || &mf.tgt != tgt {
                    report.law(format!("{name} component `{f}` must be `{src}` -> `{tgt}`"));
                    false
                } else {
                    true
                }
            }
        }
    };
    match &cell.data {
        CellData::Kleisli { tau } => {
            check_mor(&mut report, "tau", tau, x, py);
        }
        CellData::Embedding { pi, tau } => {
            if check_mor(&mut report, "pi", pi, y, x) & check_mor(&mut report, "tau", tau, x, py) {
                if c.compose(pi, tau).ok().as_ref() != Some(&m.unit[y]) {
                    report.law(format!("pi ; tau is not the unit at `{y}`"));
                }
            }
        }
        CellData::SplitEpi { s, e } => {
            let px = &m.endo.ob_map[x];
            if check_mor(&mut report, "s", s, y, px) & check_mor(&mut report, "e", e, x, py) {
                let l = c.compose(s, &m.endo.mor_map[e]);
                let r = c.compose(&m.unit[y], &m.unit[py]);
                if l.is_err() || l.ok() != r.ok() {
                    report.law(format!("s ; Pe is not eta ; eta P at `{y}`"));
                }
            }
        }
        CellData::Multi { pis, tau } => {
            if check_mor(&mut report, "tau", tau, x, py) {
                for (i, pi) in pis.iter().enumerate() {
                    if check_mor(&mut report, &format!("pi_{i}"), pi, y, x)
                        && c.compose(pi, tau).ok().as_ref() != Some(&m.unit[y])
                    {
                        report.law(format!("pi_{i} ; tau is not the unit at `{y}`"));
                    }
                }
            }
        }
    }
    report
}

/// Exhaustively enumerate the cells `x ~> y` of a theory.
pub fn cells(theory: Theory, m: &Monad, x: &ObjId, y: &ObjId) -> Vec<VerticalCell> {
    let c = &m.base;
    let py = &m.endo.ob_map[y];
    let mut out = Vec::new();
    match theory {
        Theory::Kleisli => {
            for tau in c.hom(x, py) {
                out.push(VerticalCell {
                    src: x.clone(),
                    tgt: y.clone(),
                    data: CellData::Kleisli { tau: tau.clone() },
                });
            }
        }
        Theory::Embedding => {
            for pi in c.hom(y, x) {
                for tau in c.hom(x, py) {
                    if c.compose(pi, tau).ok().as_ref() == Some(&m.unit[y]) {
                        out.push(VerticalCell {
                            src: x.clone(),
                            tgt: y.clone(),
                            data: CellData::Embedding { pi: pi.clone(), tau: tau.clone() },
                        });
                    }
                }
            }
        }
        Theory::SplitEpi => {
            let px = &m.endo.ob_map[x];
            let want = c.compose(&m.unit[y], &m.unit[py]).ok();
            for s in c.hom(y, px) {
                for e in c.hom(x, py) {
                    if c.compose(s, &m.endo.mor_map[e]).ok() == want && want.is_some() {
                        out.push(VerticalCell {
                            src: x.clone(),
                            tgt: y.clone(),
                            data: CellData::SplitEpi { s: s.clone(), e: e.clone() },
                        });
                    }
                }
            }
        }
        Theory::Multi(n) => {
            for tau in c.hom(x, py) {
                let sections: Vec<MorId> = c
                    .hom(y, x)
                    .into_iter()
                    .filter(|pi| c.compose(pi, tau).ok().as_ref() == Some(&m.unit[y]))
                    .cloned()
                    .collect();
                if sections.is_empty() && n > 0 {
                    continue;
                }
                // all ordered n-tuples of sections
                let mut stack = vec![Vec::new()];
                for _ in 0..n {
                    let mut next = Vec::new();
                    for partial in &stack {
                        for s in &sections {
                            let mut p: Vec<MorId> = partial.clone();
                            p.push(s.clone());
                            next.push(p);
                        }
                    }
                    stack = next;
                }
                for pis in stack {
                    out.push(VerticalCell {
                        src: x.clone(),
                        tgt: y.clone(),
                        data: CellData::Multi { pis, tau: tau.clone() },
                    });
                }
            }
        }
    }
    out
}

/// The identity cell on an object.
pub fn identity_cell(theory: Theory, m: &Monad, x: &ObjId) -> VerticalCell {
    let eta = m.unit[x].clone();
    let id = m.base.identity[x].clone();
    let data = match theory {
        Theory::Kleisli => CellData::Kleisli { tau: eta },
        Theory::Embedding => CellData::Embedding { pi: id, tau: eta },
        Theory::SplitEpi => CellData::SplitEpi { s: m.unit[x].clone(), e: eta },
        Theory::Multi(n) => CellData::Multi { pis: vec![id; n], tau: eta },
    };
    VerticalCell { src: x.clone(), tgt: x.clone(), data }
}

/// The epsilon cell `PX ~> X`, whose Kleisli projection is `id_PX`.
pub fn epsilon(theory: Theory, m: &Monad, x: &ObjId) -> VerticalCell {
    let px = m.endo.ob_map[x].clone();
    let id_px = m.base.identity[&px].clone();
    let eta = m.unit[x].clone();
    let data = match theory {
        Theory::Kleisli => CellData::Kleisli { tau: id_px },
        Theory::Embedding => CellData::Embedding { pi: eta, tau: id_px },
        Theory::SplitEpi => {
            let s = m
                .base
                .compose(&m.unit[x], &m.unit[&px])
                .expect("unit components compose");
            CellData::SplitEpi { s, e: id_px }
        }
        Theory::Multi(n) => CellData::Multi { pis: vec![eta; n], tau: id_px },
    };
    VerticalCell { src: px, tgt: x.clone(), data }
}

/// Vertical composite of `f: X ~> Y` and `g: Y ~> Z`: Kleisli composite
/// on the projection components, plain composite on the section
/// components.
pub fn vcompose_cell(
    m: &Monad,
    f: &VerticalCell,
    g: &VerticalCell,
) -> Result<VerticalCell, CatError> {
    if f.tgt != g.src {
        return Err(CatError::Shape("vertical cell composition: endpoint mismatch".into()));
    }
    let c = &m.base;
    let z = &g.tgt;
    let kl = |a: &MorId, b: &MorId, tgt: &ObjId| {
        c.compose_path(&[a, &m.endo.mor_map[b], &m.mult[tgt]])
    };
    let data = match (&f.data, &g.data) {
        (CellData::Kleisli { tau: t1 }, CellData::Kleisli { tau: t2 }) => {
            CellData::Kleisli { tau: kl(t1, t2, z)? }
        }
        (CellData::Embedding { pi: p1, tau: t1 }, CellData::Embedding { pi: p2, tau: t2 }) => {
            CellData::Embedding { pi: c.compose(p2, p1)?, tau: kl(t1, t2, z)? }
        }
        (CellData::SplitEpi { s: s1, e: e1 }, CellData::SplitEpi { s: s2, e: e2 }) => {
            let s = c.compose_path(&[s2, &m.endo.mor_map[s1], &m.mult[&f.src]])?;
            CellData::SplitEpi { s, e: kl(e1, e2, z)? }
        }
        (CellData::Multi { pis: p1, tau: t1 }, CellData::Multi { pis: p2, tau: t2 })
            if p1.len() == p2.len() =>
        {
            let pis = p1
                .iter()
                .zip(p2)
                .map(|(a, b)| c.compose(b, a))
                .collect::<Result<Vec<_>, _>>()?;
            CellData::Multi { pis, tau: kl(t1, t2, z)? }
        }
        _ => return Err(CatError::Shape("vertical cell composition: theory mismatch".into())),
    };
    Ok(VerticalCell { src: f.src.clone(), tgt: z.clone(), data })
}

/// Apply the monad's endofunctor to a cell componentwise, giving a cell
/// `PX ~> PY`.
pub fn endo_cell(m: &Monad, f: &VerticalCell) -> VerticalCell {
    let p = |f: &MorId| m.endo.mor_map[f].clone();
    let data = match &f.data {
        CellData::Kleisli { tau } => CellData::Kleisli { tau: p(tau) },
        CellData::Embedding { pi, tau } => CellData::Embedding { pi: p(pi), tau: p(tau) },
        CellData::SplitEpi { s, e } => CellData::SplitEpi { s: p(s), e: p(e) },
        CellData::Multi { pis, tau } => {
            CellData::Multi { pis: pis.iter().map(|x| p(x)).collect(), tau: p(tau) }
        }
    };
    VerticalCell {
        src: m.endo.ob_map[&f.src].clone(),
        tgt: m.endo.ob_map[&f.tgt].clone(),
        data,
    }
}

/// Whisker a cell of the domain monad by a monad morphism `(F, xi)`,
/// giving a cell of the codomain monad.
pub fn whisker(mm: &MonadMorphism, cell: &VerticalCell) -> Result<VerticalCell, CatError> {
    let d = &mm.cod.base;
    let fx = mm.f.ob(&cell.src)?.clone();
    let fy = mm.f.ob(&cell.tgt)?.clone();
    let proj = |t: &MorId, at: &ObjId| -> Result<MorId, CatError> {
        d.compose(mm.f.mor(t)?, mm.xi_at(at)?)
    };
    let data = match &cell.data {
        CellData::Kleisli { tau } => CellData::Kleisli { tau: proj(tau, &cell.tgt)? },
        CellData::Embedding { pi, tau } => {
            CellData::Embedding { pi: mm.f.mor(pi)?.clone(), tau: proj(tau, &cell.tgt)? }
        }
        CellData::SplitEpi { s, e } => {
            CellData::SplitEpi { s: proj(s, &cell.src)?, e: proj(e, &cell.tgt)? }
        }
        CellData::Multi { pis, tau } => CellData::Multi {
            pis: pis
                .iter()
                .map(|p| mm.f.mor(p).cloned())
                .collect::<Result<Vec<_>, _>>()?,
            tau: proj(tau, &cell.tgt)?,
        },
    };
    Ok(VerticalCell { src: fx, tgt: fy, data })
}

/// The square predicate for a boundary `(top a, bottom b, left f,
/// right g)`: the Kleisli condition `a ; tau' = tau ; Pb` plus the
/// variant's section conditions.
pub fn is_square(
    m: &Monad,
    top: &MorId,
    bottom: &MorId,
    left: &VerticalCell,
    right: &VerticalCell,
) -> Result<bool, CatError> {
    let c = &m.base;
    let mt = c.mor(top)?;
    let mb = c.mor(bottom)?;
    if mt.src != left.src || mt.tgt != right.src || mb.src != left.tgt || mb.tgt != right.tgt {
        return Err(CatError::Shape("square boundary mismatch".into()));
    }
    let pb = &m.endo.mor_map[bottom];
    let kleisli = c.compose(top, right.phi())? == c.compose(left.phi(), pb)?;
    if !kleisli {
        return Ok(false);
    }
    Ok(match (&left.data, &right.data) {
        (CellData::Kleisli { .. }, CellData::Kleisli { .. }) => true,
        (CellData::Embedding { pi, .. }, CellData::Embedding { pi: pi2, .. }) => {
            c.compose(pi, top)? == c.compose(bottom, pi2)?
        }
        (CellData::SplitEpi { s, .. }, CellData::SplitEpi { s: s2, .. }) => {
            let pa = &m.endo.mor_map[top];
            c.compose(s, pa)? == c.compose(bottom, s2)?
        }
        (CellData::Multi { pis, .. }, CellData::Multi { pis: pis2, .. })
            if pis.len() == pis2.len() =>
        {
            pis.iter()
                .zip(pis2)
                .map(|(p, p2)| Ok::<bool, CatError>(c.compose(p, top)? == c.compose(bottom, p2)?))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .all(|b| b)
        }
        _ => return Err(CatError::Shape("square cells from different theories".into())),
    })
}

/// A nerve double category with its cell table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nerve {
    pub theory: Theory,
    pub monad: Monad,
    pub dc: DoubleCategory,
    pub cells: BTreeMap<MorId, VerticalCell>,
}

impl Nerve {
    pub fn cell(&self, id: &MorId) -> Result<&VerticalCell, CatError> {
        self.cells.get(id).ok_or_else(|| CatError::UnknownMorphism(id.clone()))
    }
}

/// Build the nerve double category of a monad under a theory:
/// horizontal category the base, vertical morphisms the enumerated
/// cells, squares the boundaries where [`is_square`] holds.
///
/// A vertical composite of two valid cells that leaves the cell class is
/// a closure counterexample and is returned as an error, never swallowed.
pub fn nerve_double_category(theory: Theory, m: &Monad) -> Result<Nerve, CatError> {
    let c = &m.base;
    let mut cell_map: BTreeMap<MorId, VerticalCell> = BTreeMap::new();
    let mut vmors: Vec<Mor> = Vec::new();
    for x in &c.objects {
        for y in &c.objects {
            for cell in cells(theory, m, x, y) {
                let id = cell.id();
                vmors.push(Mor { id: id.clone(), src: x.clone(), tgt: y.clone() });
                cell_map.insert(id, cell);
            }
        }
    }
    let mut identity = BTreeMap::new();
    for x in &c.objects {
        let icell = identity_cell(theory, m, x);
        let id = icell.id();
        if !cell_map.contains_key(&id) {
            return Err(CatError::Shape(format!(
                "identity cell `{id}` does not satisfy the theory equations"
            )));
        }
        identity.insert(x.clone(), id);
    }
    let mut comp = BTreeMap::new();
    for f in &vmors {
        for g in &vmors {
            if f.tgt != g.src {
                continue;
            }
            let composite = vcompose_cell(m, &cell_map[&f.id], &cell_map[&g.id])?;
            let cid = composite.id();
            if !cell_map.contains_key(&cid) {
                return Err(CatError::Shape(format!(
                    "closure counterexample: composite of `{}` and `{}` leaves the cell class",
                    f.id, g.id
                )));
            }
            comp.insert((f.id.clone(), g.id.clone()), cid);
        }
    }
    let vcat = crate::fincat::FinCat {
        objects: c.objects.clone(),
        morphisms: vmors,
        identity,
        comp,
    };
    let mut boundaries = Vec::new();
    for a in &c.morphisms {
        for b in &c.morphisms {
            for (fid, f) in &cell_map {
                if f.src != a.src || f.tgt != b.src {
                    continue;
                }
                for (gid, g) in &cell_map {
                    if g.src != a.tgt || g.tgt != b.tgt {
                        continue;
                    }
                    if is_square(m, &a.id, &b.id, f, g)? {
                        boundaries.push((a.id.clone(), b.id.clone(), fid.clone(), gid.clone()));
                    }
                }
            }
        }
    }
    let dc = from_property_squares(c, &vcat, &boundaries)?;
    Ok(Nerve { theory, monad: m.clone(), dc, cells: cell_map })
}

/// The transpose of a nerve's double category.
pub fn transpose_nerve(n: &Nerve) -> DoubleCategory {
    transpose(&n.dc)
}

/// The whiskering double functor `N(P) -> N(Q)` of a monad morphism.
pub fn whisker_double_functor(
    mm: &MonadMorphism,
    n_dom: &Nerve,
    n_cod: &Nerve,
) -> Result<DoubleFunctor, CatError> {
    if n_dom.theory != n_cod.theory {
        return Err(CatError::Shape("whisker_double_functor: theory mismatch".into()));
    }
    let mut vmor_map = BTreeMap::new();
    for (id, cell) in &n_dom.cells {
        let w = whisker(mm, cell)?;
        let wid = w.id();
        if !n_cod.cells.contains_key(&wid) {
            return Err(CatError::Shape(format!(
                "closure counterexample: whiskered cell `{wid}` leaves the cell class"
            )));
        }
        vmor_map.insert(id.clone(), wid);
    }
    let mut sq_map = BTreeMap::new();
    for s in &n_dom.dc.squares {
        let img = n_cod
            .dc
            .square_by_boundary(
                &mm.f.mor_map[&s.top],
                &mm.f.mor_map[&s.bottom],
                &vmor_map[&s.left],
                &vmor_map[&s.right],
            )
            .ok_or_else(|| {
                CatError::Shape(format!("whiskered square of `{}` has no image", s.id))
            })?;
        sq_map.insert(s.id.clone(), img.id.clone());
    }
    Ok(DoubleFunctor {
        dom: n_dom.dc.clone(),
        cod: n_cod.dc.clone(),
        ob_map: mm.f.ob_map.clone(),
        hmor_map: mm.f.mor_map.clone(),
        vmor_map,
        sq_map,
    })
}

/// Recover the 2-cell component of a monad morphism from the action of
/// a double functor: `xi_X := phi(F_dbl epsilon_X)`.
pub fn recover_xi(
    n_dom: &Nerve,
    n_cod: &Nerve,
    f: &DoubleFunctor,
) -> Result<MonadMorphism, CatError> {
    let mut xi = BTreeMap::new();
    for x in &n_dom.monad.base.objects {
        let eps = epsilon(n_dom.theory, &n_dom.monad, x).id();
        let img = f
            .vmor_map
            .get(&eps)
            .ok_or_else(|| CatError::UnknownMorphism(eps.clone()))?;
        xi.insert(x.clone(), n_cod.cell(img)?.phi().clone());
    }
    Ok(MonadMorphism {
        dom: n_dom.monad.clone(),
        cod: n_cod.monad.clone(),
        f: f.hfunctor(),
        xi,
    })
}

/// Convert an `(L, res)` presentation of a P-embedding into a `(pi,
/// tau)` cell: `pi = L`, `tau = eta_X ; res`.
///
/// Requires `PL ; res = id` and that `res` is a P-homomorphism
/// (`mu_X ; res = P res ; mu_Y`); violations are reported by name.
pub fn embedding_from_res(m: &Monad, l: &MorId, res: &MorId) -> Result<VerticalCell, CatError> {
    let c = &m.base;
    let ml = c.mor(l)?;
    let (y, x) = (ml.src.clone(), ml.tgt.clone());
    let (px, py) = (m.endo.ob_map[&x].clone(), m.endo.ob_map[&y].clone());
    let mres = c.mor(res)?;
    if mres.src != px || mres.tgt != py {
        return Err(CatError::Shape(format!("res must be `{px}` -> `{py}`")));
    }
    if c.compose(&m.endo.mor_map[l], res)? != c.identity[&py] {
        return Err(CatError::Shape("retraction equation PL ; res = id fails".into()));
    }
    let lhs = c.compose(&m.mult[&x], res)?;
    let rhs = c.compose(&m.endo.mor_map[res], &m.mult[&y])?;
    if lhs != rhs {
        return Err(CatError::Shape(
            "P-homomorphism square mu ; res = P res ; mu fails".into(),
        ));
    }
    let tau = c.compose(&m.unit[&x], res)?;
    Ok(VerticalCell { src: x, tgt: y, data: CellData::Embedding { pi: l.clone(), tau } })
}

/// The converse extraction: from a `(pi, tau)` cell to `(L, res)` with
/// `L = pi` and `res = P tau ; mu`.
pub fn embedding_to_res(m: &Monad, cell: &VerticalCell) -> Result<(MorId, MorId), CatError> {
    match &cell.data {
        CellData::Embedding { pi, tau } => {
            let res = m
                .base
                .compose(&m.endo.mor_map[tau], &m.mult[&cell.tgt])?;
            Ok((pi.clone(), res))
        }
        _ => Err(CatError::Shape("not an embedding cell".into())),
    }
}

fn kleisli_phi_compose(m: &Monad, a: &MorId, b: &MorId, tgt: &ObjId) -> Result<MorId, CatError> {
    m.base.compose_path(&[a, &m.endo.mor_map[b], &m.mult[tgt]])
}

/// The theorem axiom suite: epsilon identity (2a), the mainax square
/// for every cell (2b), degenerate-square rigidity (3a), the
/// epsilon-eta square (3b), functoriality of the Kleisli projection,
/// and the optional pasting-functoriality condition (reported under an
/// `optional-` prefix so it does not gate the verdict).
pub fn check_theorem_axioms(n: &Nerve) -> Report {
    let m = &n.monad;
    let c = &m.base;
    let mut report = Report::new();

    // 2a: phi(epsilon_X) = id_PX and epsilon_X is a cell of the class.
    let mut witnesses = Vec::new();
    for x in &c.objects {
        let eps = epsilon(n.theory, m, x);
        let px = &m.endo.ob_map[x];
        if !n.cells.contains_key(&eps.id()) {
            witnesses.push(format!("epsilon at `{x}` is not in the cell class"));
        } else if eps.phi() != &c.identity[px] {
            witnesses.push(format!("phi(epsilon) at `{x}` is not the identity on `{px}`"));
        }
    }
    report.push(Finding::from_violations("axiom-2a-epsilon", witnesses));

    // 2b: the mainax square (phi f, id_Y, f, epsilon_Y) for every cell.
    let mut witnesses = Vec::new();
    for cell in n.cells.values() {
        let eps = epsilon(n.theory, m, &cell.tgt);
        let ok = is_square(m, cell.phi(), &c.identity[&cell.tgt], cell, &eps);
        if !matches!(ok, Ok(true)) {
            witnesses.push(format!("mainax square missing for cell `{}`", cell.id()));
        }
    }
    report.push(Finding::from_violations("axiom-2b-mainax", witnesses));

    // 3a: a square with identity top and bottom forces equal cells.
    let mut witnesses = Vec::new();
    for f in n.cells.values() {
        for g in n.cells.values() {
            if f.src != g.src || f.tgt != g.tgt || f == g {
                continue;
            }
            if matches!(
                is_square(m, &c.identity[&f.src], &c.identity[&f.tgt], f, g),
                Ok(true)
            ) {
                witnesses.push(format!(
                    "distinct cells `{}` and `{}` bound a degenerate square",
                    f.id(),
                    g.id()
                ));
            }
        }
    }
    report.push(Finding::from_violations("axiom-3a-degenerate", witnesses));

    // 3b: the epsilon-eta square (eta_PX, eta_X, epsilon_X, P epsilon_X).
    let mut witnesses = Vec::new();
    for x in &c.objects {
        let eps = epsilon(n.theory, m, x);
        let peps = endo_cell(m, &eps);
        let px = &m.endo.ob_map[x];
        if !validate_cell(m, &peps).is_valid() {
            witnesses.push(format!("P epsilon at `{x}` is not a valid cell"));
            continue;
        }
        if !matches!(is_square(m, &m.unit[px], &m.unit[x], &eps, &peps), Ok(true)) {
            witnesses.push(format!("epsilon-eta square missing at `{x}`"));
        }
    }
    report.push(Finding::from_violations("axiom-3b-epsilon-eta", witnesses));

    // Functoriality of the Kleisli projection phi.
    let mut witnesses = Vec::new();
    for x in &c.objects {
        if identity_cell(n.theory, m, x).phi() != &m.unit[x] {
            witnesses.push(format!("phi(identity cell) is not the unit at `{x}`"));
        }
    }
    for f in n.cells.values() {
        for g in n.cells.values() {
            if f.tgt != g.src {
                continue;
            }
            let composite = match vcompose_cell(m, f, g) {
                Ok(cc) => cc,
                Err(e) => {
                    witnesses.push(format!("composite of `{}`, `{}` failed: {e}", f.id(), g.id()));
                    continue;
                }
            };
            let expected = kleisli_phi_compose(m, f.phi(), g.phi(), &g.tgt);
            if expected.ok().as_ref() != Some(composite.phi()) {
                witnesses.push(format!(
                    "phi not functorial on (`{}`, `{}`)",
                    f.id(),
                    g.id()
                ));
            }
        }
    }
    report.push(Finding::from_violations("phi-functoriality", witnesses));

    // Optional pasting-functoriality: the mainax square of a composite
    // equals the pasting of the constituent squares. With property-like
    // squares this reduces to existence of the two connecting squares.
    let mut witnesses = Vec::new();
    for f in n.cells.values() {
        for g in n.cells.values() {
            if f.tgt != g.src {
                continue;
            }
            let y = &g.src;
            let z = &g.tgt;
            let pz = &m.endo.ob_map[z];
            let eps_y = epsilon(n.theory, m, y);
            let eps_z = epsilon(n.theory, m, z);
            let eps_pz = epsilon(n.theory, m, pz);
            let p_phi_g = &m.endo.mor_map[g.phi()];
            let sq1 = is_square(m, p_phi_g, g.phi(), &eps_y, &eps_pz);
            let tall = vcompose_cell(m, &eps_pz, &eps_z);
            let sq2 = tall.and_then(|t| is_square(m, &m.mult[z], &c.identity[z], &t, &eps_z));
            if !matches!(sq1, Ok(true)) || !matches!(sq2, Ok(true)) {
                witnesses.push(format!(
                    "pasting squares missing for (`{}`, `{}`)",
                    f.id(),
                    g.id()
                ));
            }
        }
    }
    report.push(Finding::from_violations("optional-pasting-functoriality", witnesses));

    report
}

/// Closure of cells under vertical composition: every composite of two
/// class cells passes the variant validator (re-checked independently of
/// the nerve construction).
pub fn check_vertical_closure(n: &Nerve) -> Report {
    let mut witnesses = Vec::new();
    for f in n.cells.values() {
        for g in n.cells.values() {
            if f.tgt != g.src {
                continue;
            }
            match vcompose_cell(&n.monad, f, g) {
                Err(e) => witnesses.push(format!(
                    "composite of `{}`, `{}` failed: {e}",
                    f.id(),
                    g.id()
                )),
                Ok(cc) => {
                    if !validate_cell(&n.monad, &cc).is_valid() {
                        witnesses.push(format!(
                            "composite of `{}`, `{}` violates the cell equations",
                            f.id(),
                            g.id()
                        ));
                    }
                }
            }
        }
    }
    let mut report = Report::new();
    report.push(Finding::from_violations("vertical-closure", witnesses));
    report
}

/// Closure under whiskering: for every enumerable monad morphism
/// `p -> q`, every whiskered cell stays in the class.
pub fn check_whisker_closure(theory: Theory, p: &Monad, q: &Monad, budget: &mut Budget) -> Report {
    let mut report = Report::new();
    let n_p = match nerve_double_category(theory, p) {
        Ok(n) => n,
        Err(e) => {
            report.push(Finding::fail("whisker-closure", vec![format!("nerve failed: {e}")]));
            return report;
        }
    };
    let mms = enumerate_monad_morphisms(p, q, budget);
    let mut witnesses = Vec::new();
    for mm in &mms.items {
        for cell in n_p.cells.values() {
            match whisker(mm, cell) {
                Err(e) => witnesses.push(format!("whisker of `{}` failed: {e}", cell.id())),
                Ok(w) => {
                    if !validate_cell(q, &w).is_valid() {
                        witnesses.push(format!(
                            "whiskered cell `{}` violates the cell equations",
                            w.id()
                        ));
                    }
                }
            }
        }
    }
    if !mms.complete {
        report.push(Finding::inconclusive(
            "whisker-closure",
            format!("morphism search truncated after {} evaluations", budget.used()),
        ));
    } else {
        report.push(Finding::from_violations("whisker-closure", witnesses));
    }
    report
}

/// A general variant 2-cell between parallel monad morphisms: the
/// hom-level analogue of a vertical cell, with monad 2-cells as
/// sections and Kleisli 2-cells as projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneralCell {
    Kleisli { tau: KlTwoCell },
    Embedding { pi: MonadTwoCell, tau: KlTwoCell },
    SplitEpi { s: KlTwoCell, e: KlTwoCell },
    Multi { pis: Vec<MonadTwoCell>, tau: KlTwoCell },
}

impl GeneralCell {
    pub fn dom(&self) -> &MonadMorphism {
        match self {
            GeneralCell::Kleisli { tau }
            | GeneralCell::Embedding { tau, .. }
            | GeneralCell::Multi { tau, .. } => &tau.dom,
            GeneralCell::SplitEpi { e, .. } => &e.dom,
        }
    }

    pub fn cod(&self) -> &MonadMorphism {
        match self {
            GeneralCell::Kleisli { tau }
            | GeneralCell::Embedding { tau, .. }
            | GeneralCell::Multi { tau, .. } => &tau.cod,
            GeneralCell::SplitEpi { e, .. } => &e.cod,
        }
    }
}

/// Validate a general variant 2-cell: each part passes its own
/// validator and the variant equation holds componentwise.
pub fn validate_general_cell(cell: &GeneralCell) -> ValidationReport {
    let mut report = ValidationReport::new();
    let check_section = |report: &mut ValidationReport, name: &str, pi: &MonadTwoCell, tau: &KlTwoCell| {
        report.merge_under(name, validate_monad_2cell(pi));
        if pi.dom != tau.cod || pi.cod != tau.dom {
            report.structural(format!("{name} does not run from cod to dom"));
            return;
        }
        let q = &tau.dom.cod;
        for x in &tau.dom.dom.base.objects {
            let l = q.base.compose(&pi.alpha[x], &tau.alpha[x]);
            let unit = &q.unit[&tau.cod.f.ob_map[x]];
            if l.ok().as_ref() != Some(unit) {
                report.law(format!("{name} ; tau is not the unit at `{x}`"));
            }
        }
    };
    match cell {
        GeneralCell::Kleisli { tau } => report.merge_under("tau", validate_kl_2cell(tau)),
        GeneralCell::Embedding { pi, tau } => {
            report.merge_under("tau", validate_kl_2cell(tau));
            check_section(&mut report, "pi", pi, tau);
        }
        GeneralCell::Multi { pis, tau } => {
            report.merge_under("tau", validate_kl_2cell(tau));
            for (i, pi) in pis.iter().enumerate() {
                check_section(&mut report, &format!("pi_{i}"), pi, tau);
            }
        }
        GeneralCell::SplitEpi { s, e } => {
            report.merge_under("s", validate_kl_2cell(s));
            report.merge_under("e", validate_kl_2cell(e));
            if s.dom != e.cod || s.cod != e.dom {
                report.structural("s does not run from cod to dom");
                return report;
            }
            let q = &e.dom.cod;
            for x in &e.dom.dom.base.objects {
                let l = q
                    .base
                    .compose(&s.alpha[x], &q.endo.mor_map[&e.alpha[x]]);
                let fpx = &e.cod.f.ob_map[x];
                let r = q
                    .base
                    .compose(&q.unit[fpx], &q.unit[&q.endo.ob_map[fpx]]);
                if l.is_err() || l.ok() != r.ok() {
                    report.law(format!("s ; Q e is not eta ; eta Q at `{x}`"));
                }
            }
        }
    }
    report
}

/// Enumerate the general variant 2-cells from `a` to `b` (parallel
/// monad morphisms `p -> q`).
pub fn enumerate_general_cells(
    theory: Theory,
    a: &MonadMorphism,
    b: &MonadMorphism,
    budget: &mut Budget,
) -> Vec<GeneralCell> {
    let mut out = Vec::new();
    match theory {
        Theory::Kleisli => {
            for tau in enumerate_kl_twocells(a, b, budget).items {
                out.push(GeneralCell::Kleisli { tau });
            }
        }
        Theory::Embedding => {
            let taus = enumerate_kl_twocells(a, b, budget).items;
            let pis = enumerate_monad_twocells(b, a, budget).items;
            for tau in &taus {
                for pi in &pis {
                    let cell = GeneralCell::Embedding { pi: pi.clone(), tau: tau.clone() };
                    if validate_general_cell(&cell).is_valid() {
                        out.push(cell);
                    }
                }
            }
        }
        Theory::SplitEpi => {
            let es = enumerate_kl_twocells(a, b, budget).items;
            let ss = enumerate_kl_twocells(b, a, budget).items;
            for e in &es {
                for s in &ss {
                    let cell = GeneralCell::SplitEpi { s: s.clone(), e: e.clone() };
                    if validate_general_cell(&cell).is_valid() {
                        out.push(cell);
                    }
                }
            }
        }
        Theory::Multi(n) => {
            let taus = enumerate_kl_twocells(a, b, budget).items;
            let pis = enumerate_monad_twocells(b, a, budget).items;
            for tau in &taus {
                let sections: Vec<&MonadTwoCell> = pis
                    .iter()
                    .filter(|pi| {
                        validate_general_cell(&GeneralCell::Embedding {
                            pi: (*pi).clone(),
                            tau: tau.clone(),
                        })
                        .is_valid()
                    })
                    .collect();
                let mut stack: Vec<Vec<MonadTwoCell>> = vec![Vec::new()];
                for _ in 0..n {
                    let mut next = Vec::new();
                    for partial in &stack {
                        for s in &sections {
                            let mut p = partial.clone();
                            p.push((*s).clone());
                            next.push(p);
                        }
                    }
                    stack = next;
                }
                for pis in stack {
                    if pis.len() == n {
                        out.push(GeneralCell::Multi { pis, tau: tau.clone() });
                    }
                }
            }
        }
    }
    out
}

/// Horizontal composite of general 2-cells over `p -> q` and `q -> r`.
pub fn hcompose_general(c1: &GeneralCell, c2: &GeneralCell) -> Result<GeneralCell, CatError> {
    let compose_sections = |p1: &MonadTwoCell, p2: &MonadTwoCell| -> Result<MonadTwoCell, CatError> {
        // p1: (F', xi') => (F, xi), p2: (G', phi') => (G, phi);
        // composite G'F' => GF with components p2_{F'X} ; G(p1_X)
        let dom = p1.dom.then(&p2.dom)?;
        let cod = p1.cod.then(&p2.cod)?;
        let r_base = &p2.dom.cod.base;
        let mut alpha = BTreeMap::new();
        for x in &p1.dom.dom.base.objects {
            let fpx = &p1.dom.f.ob_map[x];
            let g_p1 = &p2.cod.f.mor_map[&p1.alpha[x]];
            alpha.insert(x.clone(), r_base.compose(&p2.alpha[fpx], g_p1)?);
        }
        Ok(MonadTwoCell { dom, cod, alpha })
    };
    match (c1, c2) {
        (GeneralCell::Kleisli { tau: t1 }, GeneralCell::Kleisli { tau: t2 }) => {
            Ok(GeneralCell::Kleisli { tau: kl_hcompose(t1, t2)? })
        }
        (GeneralCell::Embedding { pi: p1, tau: t1 }, GeneralCell::Embedding { pi: p2, tau: t2 }) => {
            Ok(GeneralCell::Embedding {
                pi: compose_sections(p1, p2)?,
                tau: kl_hcompose(t1, t2)?,
            })
        }
        (GeneralCell::SplitEpi { s: s1, e: e1 }, GeneralCell::SplitEpi { s: s2, e: e2 }) => {
            Ok(GeneralCell::SplitEpi { s: kl_hcompose(s1, s2)?, e: kl_hcompose(e1, e2)? })
        }
        (GeneralCell::Multi { pis: p1, tau: t1 }, GeneralCell::Multi { pis: p2, tau: t2 })
            if p1.len() == p2.len() =>
        {
            let pis = p1
                .iter()
                .zip(p2)
                .map(|(a, b)| compose_sections(a, b))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(GeneralCell::Multi { pis, tau: kl_hcompose(t1, t2)? })
        }
        _ => Err(CatError::Shape("horizontal composition: theory mismatch".into())),
    }
}

/// Exhaustively compose general 2-cells over `p -> q -> r` and report
/// any composite leaving the variant class.
pub fn check_horizontal_closure(
    theory: Theory,
    p: &Monad,
    q: &Monad,
    r: &Monad,
    budget: &mut Budget,
) -> Report {
    let mut report = Report::new();
    let left = enumerate_monad_morphisms(p, q, budget);
    let right = enumerate_monad_morphisms(q, r, budget);
    let mut witnesses = Vec::new();
    let mut truncated = !left.complete || !right.complete;
    'outer: for a1 in &left.items {
        for b1 in &left.items {
            let cells1 = enumerate_general_cells(theory, a1, b1, budget);
            if budget.exhausted() {
                truncated = true;
                break 'outer;
            }
            if cells1.is_empty() {
                continue;
            }
            for a2 in &right.items {
                for b2 in &right.items {
                    let cells2 = enumerate_general_cells(theory, a2, b2, budget);
                    if budget.exhausted() {
                        truncated = true;
                        break 'outer;
                    }
                    for c1 in &cells1 {
                        for c2 in &cells2 {
                            match hcompose_general(c1, c2) {
                                Err(e) => witnesses.push(format!("composition failed: {e}")),
                                Ok(cc) => {
                                    if !validate_general_cell(&cc).is_valid() {
                                        witnesses.push(format!(
                                            "horizontal composite leaves the class over (`{}`, `{}`)",
                                            c1.dom().f.ob_map.len(),
                                            c2.dom().f.ob_map.len()
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if truncated {
        report.push(Finding::inconclusive(
            "horizontal-closure",
            format!("search truncated after {} evaluations", budget.used()),
        ));
    } else {
        report.push(Finding::from_violations("horizontal-closure", witnesses));
    }
    report
}

/// Faithfulness at desk scale: enumerate monad morphisms `p -> q` and
/// verify their whiskering double functors are pairwise distinct.
pub fn check_faithfulness(theory: Theory, p: &Monad, q: &Monad, budget: &mut Budget) -> Report {
    let mut report = Report::new();
    let (n_p, n_q) = match (nerve_double_category(theory, p), nerve_double_category(theory, q)) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            let msg = [a.err(), b.err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .collect();
            report.push(Finding::fail("faithfulness", msg));
            return report;
        }
    };
    let mms = enumerate_monad_morphisms(p, q, budget);
    let mut witnesses = Vec::new();
    let mut functors = Vec::new();
    for mm in &mms.items {
        match whisker_double_functor(mm, &n_p, &n_q) {
            Ok(fd) => functors.push(fd),
            Err(e) => witnesses.push(format!("whiskering failed: {e}")),
        }
    }
    for i in 0..functors.len() {
        for j in (i + 1)..functors.len() {
            let (a, b) = (&functors[i], &functors[j]);
            if a.ob_map == b.ob_map && a.hmor_map == b.hmor_map && a.vmor_map == b.vmor_map {
                witnesses.push(format!(
                    "monad morphisms {i} and {j} induce the same double functor"
                ));
            }
        }
    }
    if !mms.complete {
        report.push(Finding::inconclusive(
            "faithfulness",
            format!("morphism search truncated after {} evaluations", budget.used()),
        ));
    } else {
        report.push(Finding::from_violations("faithfulness", witnesses));
    }
    report
}

/// The epsilon class of vertical morphisms: composites
/// `epsilon_X ; f` for every cell `f: X ~> Y`, together with the
/// endofunctor images `P f: PX ~> PY`.
pub fn epsilon_class(n: &Nerve) -> BTreeSet<MorId> {
    let mut class = BTreeSet::new();
    for cell in n.cells.values() {
        let eps = epsilon(n.theory, &n.monad, &cell.src);
        if let Ok(c) = vcompose_cell(&n.monad, &eps, cell) {
            let id = c.id();
            if n.cells.contains_key(&id) {
                class.insert(id);
            }
        }
        let pf = endo_cell(&n.monad, cell).id();
        if n.cells.contains_key(&pf) {
            class.insert(pf);
        }
    }
    class
}

/// Bounded fullness: enumerate all double functors `N(p) -> N(q)` within
/// the budget, and check that every functor determined by its action on
/// the epsilon class arises as a whiskering via the `recover_xi`
/// round-trip. Budget exhaustion yields an inconclusive finding.
///
/// The `optional-epsilon-class-probe` finding reports whether any
/// enumerated double functor was *not* determined on the class; this is
/// informational and does not gate the verdict.
pub fn check_fullness_bounded(theory: Theory, p: &Monad, q: &Monad, bound: u64) -> Report {
    let mut report = Report::new();
    let mut budget = Budget::new(bound);
    let (n_p, n_q) = match (nerve_double_category(theory, p), nerve_double_category(theory, q)) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            let msg = [a.err(), b.err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .collect();
            report.push(Finding::fail("fullness", msg));
            return report;
        }
    };
    let dfs = enumerate_double_functors(&n_p.dc, &n_q.dc, &mut budget);
    if !dfs.complete {
        report.push(Finding::inconclusive(
            "fullness",
            format!("double functor search truncated after {} evaluations (bound {bound})", budget.used()),
        ));
        return report;
    }
    let class = epsilon_class(&n_p);
    // Group functors by their restriction to objects, horizontal
    // morphisms, and class cells.
    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, f) in dfs.items.iter().enumerate() {
        let restricted: BTreeMap<&MorId, &MorId> = f
            .vmor_map
            .iter()
            .filter(|(k, _)| class.contains(*k))
            .collect();
        let key = format!("{:?}|{:?}|{:?}", f.ob_map, f.hmor_map, restricted);
        groups.entry(key).or_default().push(i);
    }
    let mut witnesses = Vec::new();
    let mut undetermined = Vec::new();
    for idxs in groups.values() {
        if idxs.len() > 1 {
            undetermined.push(format!(
                "{} double functors share one class restriction",
                idxs.len()
            ));
            continue;
        }
        let f = &dfs.items[idxs[0]];
        let mm = match recover_xi(&n_p, &n_q, f) {
            Ok(mm) => mm,
            Err(e) => {
                witnesses.push(format!("recovering xi failed: {e}"));
                continue;
            }
        };
        if !validate_monad_morphism(&mm).is_valid() {
            witnesses.push("recovered (F, xi) is not a monad morphism".to_string());
            continue;
        }
        match whisker_double_functor(&mm, &n_p, &n_q) {
            Err(e) => witnesses.push(format!("whiskering recovered morphism failed: {e}")),
            Ok(w) => {
                if w.ob_map != f.ob_map
                    || w.hmor_map != f.hmor_map
                    || w.vmor_map != f.vmor_map
                    || w.sq_map != f.sq_map
                {
                    witnesses.push(
                        "a class-determined double functor is not a whiskering".to_string(),
                    );
                }
            }
        }
    }
    report.push(Finding::from_violations("fullness", witnesses));
    report.push(if undetermined.is_empty() {
        Finding::pass("optional-epsilon-class-probe")
    } else {
        Finding {
            check: "optional-epsilon-class-probe".into(),
            status: Status::Fail,
            witnesses: undetermined,
        }
    });
    report
}

/// The square family `alpha_rho` of the transpose corollary: for a
/// monad 2-cell `alpha: (F, xi) => (G, xi')` and every cell `rho` of
/// `N(p)`, the square with top `alpha_X`, bottom `alpha_Y`, left the
/// `(F, xi)`-whiskering and right the `(G, xi')`-whiskering of `rho`.
pub fn check_corollary_family(n_p: &Nerve, n_q: &Nerve, alpha: &MonadTwoCell) -> Report {
    let mut report = Report::new();
    let vr = validate_monad_2cell(alpha);
    if !vr.is_valid() {
        report.push(Finding::fail(
            "corollary-square-family",
            vr.messages().iter().map(|s| s.to_string()).collect(),
        ));
        return report;
    }
    let (fd, gd) = match (
        whisker_double_functor(&alpha.dom, n_p, n_q),
        whisker_double_functor(&alpha.cod, n_p, n_q),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            let msg = [a.err(), b.err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .collect();
            report.push(Finding::fail("corollary-square-family", msg));
            return report;
        }
    };
    let mut squares = BTreeMap::new();
    let mut witnesses = Vec::new();
    for rho in &n_p.dc.vcat.morphisms {
        let sq = n_q.dc.square_by_boundary(
            &alpha.alpha[&rho.src],
            &alpha.alpha[&rho.tgt],
            &fd.vmor_map[&rho.id],
            &gd.vmor_map[&rho.id],
        );
        match sq {
            Some(s) => {
                squares.insert(rho.id.clone(), s.id.clone());
            }
            None => witnesses.push(format!("no square for cell `{}`", rho.id)),
        }
    }
    if witnesses.is_empty() {
        let fam = SquareFamily { components: alpha.alpha.clone(), squares };
        let vr = validate_double_nat(&fd, &gd, &fam);
        if !vr.is_valid() {
            witnesses.extend(vr.messages().iter().map(|s| s.to_string()));
        }
    }
    report.push(Finding::from_violations("corollary-square-family", witnesses));
    report
}

/// Validate that a whiskering double functor preserves all structure,
/// as a named report.
pub fn check_whisker_double_functor(
    mm: &MonadMorphism,
    n_dom: &Nerve,
    n_cod: &Nerve,
) -> Report {
    let mut report = Report::new();
    match whisker_double_functor(mm, n_dom, n_cod) {
        Err(e) => report.push(Finding::fail("whisker-double-functor", vec![e.to_string()])),
        Ok(fd) => {
            let vr = validate_double_functor(&fd);
            report.push(Finding::from_violations(
                "whisker-double-functor",
                vr.messages().iter().map(|s| s.to_string()).collect(),
            ));
        }
    }
    report
}
