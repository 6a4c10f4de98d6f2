//! Lifting a monad along a distributive law to a double monad on a
//! nerve, and assembling the result into a triple category: the 2x2
//! grid of corner categories with its source, target, and identity
//! functors in both directions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::double::{
    validate_double_functor, validate_double_nat, DoubleFunctor, SquareFamily,
    morphism_category,
};
use crate::fincat::{validate_category, validate_functor, CatError, FinCat, Functor, MorId, ObjId};
use crate::monad::{
    validate_distributive_law, validate_monad, validate_monad_morphism, DistributiveLaw, Monad,
};
use crate::nerve::{
    identity_cell, nerve_double_category, whisker_double_functor, CellData, Nerve, Theory,
    VerticalCell,
};
use crate::report::ValidationReport;

/// A monad lifted along a distributive law to a double monad on the
/// nerve of the distributed-over monad: the whiskering action together
/// with unit and multiplication square families, and the induced plain
/// monad on the category of vertical cells and squares.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedDoubleMonad {
    pub theory: Theory,
    pub law: DistributiveLaw,
    /// The nerve of the distributed-over monad under `theory`.
    pub nerve: Nerve,
    /// The whiskering double functor of the lifted monad morphism.
    pub action: DoubleFunctor,
    /// Unit square family, from the identity double functor to the action.
    pub unit: SquareFamily,
    /// Multiplication square family, from the squared action to the action.
    pub mult: SquareFamily,
    /// The lifted monad on the category of vertical cells and squares.
    pub cell_monad: Monad,
}

fn compose_double_functors(a: &DoubleFunctor, b: &DoubleFunctor) -> DoubleFunctor {
    let chain = |m: &BTreeMap<MorId, MorId>, n: &BTreeMap<MorId, MorId>| {
        m.iter().map(|(k, v)| (k.clone(), n[v].clone())).collect()
    };
    DoubleFunctor {
        dom: a.dom.clone(),
        cod: b.cod.clone(),
        ob_map: a
            .ob_map
            .iter()
            .map(|(k, v)| (k.clone(), b.ob_map[v].clone()))
            .collect(),
        hmor_map: chain(&a.hmor_map, &b.hmor_map),
        vmor_map: chain(&a.vmor_map, &b.vmor_map),
        sq_map: chain(&a.sq_map, &b.sq_map),
    }
}

/// Build the square family of a monad 2-cell-style transformation with
/// horizontal components `comps`, between double functors `f` and `g`
/// on a nerve: the square at each vertical cell is found by boundary.
fn family_by_boundary(
    n: &Nerve,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    comps: &BTreeMap<ObjId, MorId>,
    what: &str,
) -> Result<SquareFamily, CatError> {
    let mut squares = BTreeMap::new();
    for rho in &n.dc.vcat.morphisms {
        let sq = n
            .dc
            .square_by_boundary(
                &comps[&rho.src],
                &comps[&rho.tgt],
                &f.vmor_map[&rho.id],
                &g.vmor_map[&rho.id],
            )
            .ok_or_else(|| {
                CatError::Shape(format!("{what} square missing at cell `{}`", rho.id))
            })?;
        squares.insert(rho.id.clone(), sq.id.clone());
    }
    Ok(SquareFamily { components: comps.clone(), squares })
}

/// Lift a monad along a distributive law to a double monad on the nerve
/// of the distributed-over monad under `theory1`.
pub fn lifted_double_monad(
    theory1: Theory,
    d: &DistributiveLaw,
) -> Result<LiftedDoubleMonad, CatError> {
    let nerve = nerve_double_category(theory1, &d.p)?;
    let mm = d.lifted_morphism();
    let action = whisker_double_functor(&mm, &nerve, &nerve)?;
    let unit = family_by_boundary(
        &nerve,
        &DoubleFunctor::identity(&nerve.dc),
        &action,
        &d.t.unit,
        "unit",
    )?;
    let mult = family_by_boundary(
        &nerve,
        &compose_double_functors(&action, &action),
        &action,
        &d.t.mult,
        "mult",
    )?;
    // The induced monad on the category of vertical cells and squares.
    let base = morphism_category(&nerve.dc);
    let endo = Functor {
        dom: base.clone(),
        cod: base.clone(),
        ob_map: action
            .vmor_map
            .iter()
            .map(|(k, v)| (ObjId(k.0.clone()), ObjId(v.0.clone())))
            .collect(),
        mor_map: action.sq_map.clone(),
    };
    let unit_comp = base
        .objects
        .iter()
        .map(|rho| (rho.clone(), unit.squares[&MorId(rho.0.clone())].clone()))
        .collect();
    let mult_comp = base
        .objects
        .iter()
        .map(|rho| (rho.clone(), mult.squares[&MorId(rho.0.clone())].clone()))
        .collect();
    let cell_monad = Monad { base, endo, unit: unit_comp, mult: mult_comp };
    Ok(LiftedDoubleMonad {
        theory: theory1,
        law: d.clone(),
        nerve,
        action,
        unit,
        mult,
        cell_monad,
    })
}

/// Full validation of a lifted double monad: the law itself, the lifted
/// monad morphism, the action as a double functor, both square
/// families as double natural transformations, the cell-level monad
/// laws, and — for the Kleisli theory — an independent componentwise
/// recomputation of the lifted action.
pub fn validate_lifted_double_monad(l: &LiftedDoubleMonad) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.merge_under("law", validate_distributive_law(&l.law));
    let mm = l.law.lifted_morphism();
    report.merge_under("lifted-morphism", validate_monad_morphism(&mm));
    report.merge_under("action", validate_double_functor(&l.action));
    let id = DoubleFunctor::identity(&l.nerve.dc);
    report.merge_under("unit", validate_double_nat(&id, &l.action, &l.unit));
    let sq = compose_double_functors(&l.action, &l.action);
    report.merge_under("mult", validate_double_nat(&sq, &l.action, &l.mult));
    report.merge_under("cell-monad", validate_monad(&l.cell_monad));
    if l.theory == Theory::Kleisli {
        // independent oracle: the lifted action on tau: X -> PY is
        // T tau ; lambda_Y, computed directly from the tables
        let (t, p) = (&l.law.t, &l.law.p);
        for (id, cell) in &l.nerve.cells {
            if let CellData::Kleisli { tau } = &cell.data {
                let expected = t
                    .base
                    .compose(&t.endo.mor_map[tau], &l.law.lam[&cell.tgt]);
                let image = l
                    .nerve
                    .cells
                    .get(&l.action.vmor_map[id])
                    .map(|c| c.phi().clone());
                if expected.ok() != image {
                    report.law(format!("lifted action on `{id}` is not T tau ; lambda"));
                }
            }
        }
        let _ = p;
    }
    report
}

/// A triple category stored as its 2x2 grid of corner categories with
/// the connecting source/target/identity functors. `c00` is the base,
/// `c01` the cells-and-squares category of the first nerve, `c10` that
/// of the second, and `c11` that of the lifted monad's nerve. The `p0,
/// t0, t1, p1` families are the internal-category structure functors in
/// each direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleCategory {
    pub theory1: Theory,
    pub theory2: Theory,
    pub c00: FinCat,
    pub c01: FinCat,
    pub c10: FinCat,
    pub c11: FinCat,
    /// `c01 -> c00` source/target, `c00 -> c01` identity.
    pub p0_src: Functor,
    pub p0_tgt: Functor,
    pub p0_id: Functor,
    /// `c10 -> c00` source/target, `c00 -> c10` identity.
    pub t0_src: Functor,
    pub t0_tgt: Functor,
    pub t0_id: Functor,
    /// `c11 -> c01` source/target, `c01 -> c11` identity.
    pub t1_src: Functor,
    pub t1_tgt: Functor,
    pub t1_id: Functor,
    /// `c11 -> c10` source/target, `c10 -> c11` identity.
    pub p1_src: Functor,
    pub p1_tgt: Functor,
    pub p1_id: Functor,
}

fn map_cell_data(
    data: &CellData,
    f: &mut dyn FnMut(&MorId) -> Result<MorId, CatError>,
) -> Result<CellData, CatError> {
    Ok(match data {
        CellData::Kleisli { tau } => CellData::Kleisli { tau: f(tau)? },
        CellData::Embedding { pi, tau } => CellData::Embedding { pi: f(pi)?, tau: f(tau)? },
        CellData::SplitEpi { s, e } => CellData::SplitEpi { s: f(s)?, e: f(e)? },
        CellData::Multi { pis, tau } => CellData::Multi {
            pis: pis.iter().map(&mut *f).collect::<Result<Vec<_>, _>>()?,
            tau: f(tau)?,
        },
    })
}

/// The source/target/identity functors of the internal-category
/// presentation of a nerve: `morphism_category(n) -> base` and back.
fn nerve_structure_functors(n: &Nerve) -> (Functor, Functor, Functor) {
    let c1 = morphism_category(&n.dc);
    let base = n.monad.base.clone();
    let on_cells = |pick: &dyn Fn(&VerticalCell) -> ObjId| -> BTreeMap<ObjId, ObjId> {
        n.cells
            .iter()
            .map(|(id, c)| (ObjId(id.0.clone()), pick(c)))
            .collect()
    };
    let src = Functor {
        dom: c1.clone(),
        cod: base.clone(),
        ob_map: on_cells(&|c| c.src.clone()),
        mor_map: n.dc.squares.iter().map(|s| (s.id.clone(), s.top.clone())).collect(),
    };
    let tgt = Functor {
        dom: c1.clone(),
        cod: base.clone(),
        ob_map: on_cells(&|c| c.tgt.clone()),
        mor_map: n.dc.squares.iter().map(|s| (s.id.clone(), s.bottom.clone())).collect(),
    };
    let id = Functor {
        dom: base.clone(),
        cod: c1,
        ob_map: base
            .objects
            .iter()
            .map(|x| (x.clone(), ObjId(identity_cell(n.theory, &n.monad, x).id().0)))
            .collect(),
        mor_map: base
            .morphisms
            .iter()
            .map(|m| (m.id.clone(), n.dc.vid[&m.id].clone()))
            .collect(),
    };
    (src, tgt, id)
}

/// Assemble the triple category of a distributive law: the nerve of the
/// distributed-over monad under `theory1`, the nerve of the lifting
/// monad under `theory2`, and the nerve of the lifted cell-level monad
/// under `theory2`, glued along the grid functors.
pub fn triple_from_distributive_law(
    theory1: Theory,
    theory2: Theory,
    d: &DistributiveLaw,
) -> Result<TripleCategory, CatError> {
    let lifted = lifted_double_monad(theory1, d)?;
    let n_p = &lifted.nerve;
    let n_t = nerve_double_category(theory2, &d.t)?;
    let n_t1 = nerve_double_category(theory2, &lifted.cell_monad)?;

    let c00 = d.p.base.clone();
    let c01 = morphism_category(&n_p.dc);
    let c10 = morphism_category(&n_t.dc);
    let c11 = morphism_category(&n_t1.dc);

    let (p0_src, p0_tgt, p0_id) = nerve_structure_functors(n_p);
    let (t0_src, t0_tgt, t0_id) = nerve_structure_functors(&n_t);
    let (t1_src, t1_tgt, t1_id) = nerve_structure_functors(&n_t1);

    // The remaining direction: project a cell over the lifted monad to
    // its top (source) or bottom (target) components, giving a cell
    // over the lifting monad on the base.
    let project = |pick_end: &dyn Fn(&VerticalCell) -> ObjId,
                   pick_edge: &dyn Fn(&crate::double::Square) -> MorId|
     -> Result<Functor, CatError> {
        let mut ob_map = BTreeMap::new();
        for (id, cell) in &n_t1.cells {
            let end = |rho: &ObjId| -> Result<ObjId, CatError> {
                Ok(pick_end(n_p.cell(&MorId(rho.0.clone()))?))
            };
            let data = map_cell_data(&cell.data, &mut |sq| {
                Ok(pick_edge(n_p.dc.square(sq)?))
            })?;
            let image = VerticalCell { src: end(&cell.src)?, tgt: end(&cell.tgt)?, data };
            let iid = image.id();
            if !n_t.cells.contains_key(&iid) {
                return Err(CatError::Shape(format!(
                    "projected cell `{iid}` of `{id}` is not a cell over the lifting monad"
                )));
            }
            ob_map.insert(ObjId(id.0.clone()), ObjId(iid.0));
        }
        let mut mor_map = BTreeMap::new();
        for s in &n_t1.dc.squares {
            let top = pick_edge(n_p.dc.square(&s.top)?);
            let bottom = pick_edge(n_p.dc.square(&s.bottom)?);
            let left = MorId(ob_map[&ObjId(s.left.0.clone())].0.clone());
            let right = MorId(ob_map[&ObjId(s.right.0.clone())].0.clone());
            let img = n_t.dc.square_by_boundary(&top, &bottom, &left, &right).ok_or_else(|| {
                CatError::Shape(format!("projected square of `{}` does not exist", s.id))
            })?;
            mor_map.insert(s.id.clone(), img.id.clone());
        }
        Ok(Functor { dom: c11.clone(), cod: c10.clone(), ob_map, mor_map })
    };
    let p1_src = project(&|c| c.src.clone(), &|s| s.top.clone())?;
    let p1_tgt = project(&|c| c.tgt.clone(), &|s| s.bottom.clone())?;

    // Degenerate inclusion: a cell over the lifting monad on the base
    // becomes a cell over the lifted monad with identity-square data.
    let mut ob_map = BTreeMap::new();
    for (id, cell) in &n_t.cells {
        let lift_end = |x: &ObjId| ObjId(identity_cell(theory1, &d.p, x).id().0);
        let data = map_cell_data(&cell.data, &mut |u| {
            n_p.dc
                .vid
                .get(u)
                .cloned()
                .ok_or_else(|| CatError::UnknownMorphism(u.clone()))
        })?;
        let image = VerticalCell { src: lift_end(&cell.src), tgt: lift_end(&cell.tgt), data };
        let iid = image.id();
        if !n_t1.cells.contains_key(&iid) {
            return Err(CatError::Shape(format!(
                "degenerate lift `{iid}` of `{id}` is not a cell over the lifted monad"
            )));
        }
        ob_map.insert(ObjId(id.0.clone()), ObjId(iid.0));
    }
    let mut mor_map = BTreeMap::new();
    for s in &n_t.dc.squares {
        let left = MorId(ob_map[&ObjId(s.left.0.clone())].0.clone());
        let right = MorId(ob_map[&ObjId(s.right.0.clone())].0.clone());
        let img = n_t1
            .dc
            .square_by_boundary(&n_p.dc.vid[&s.top], &n_p.dc.vid[&s.bottom], &left, &right)
            .ok_or_else(|| {
                CatError::Shape(format!("degenerate lift of square `{}` does not exist", s.id))
            })?;
        mor_map.insert(s.id.clone(), img.id.clone());
    }
    let p1_id = Functor { dom: c10.clone(), cod: c11.clone(), ob_map, mor_map };

    Ok(TripleCategory {
        theory1,
        theory2,
        c00,
        c01,
        c10,
        c11,
        p0_src,
        p0_tgt,
        p0_id,
        t0_src,
        t0_tgt,
        t0_id,
        t1_src,
        t1_tgt,
        t1_id,
        p1_src,
        p1_tgt,
        p1_id,
    })
}

fn same_assignment(a: &Functor, b: &Functor) -> bool {
    a.ob_map == b.ob_map && a.mor_map == b.mor_map
}

/// Validate a triple category: every corner is a category, every
/// connecting functor is a functor, the identity functors are sections
/// of source and target, and the grid of structure functors commutes.
pub fn validate_triple_category(t: &TripleCategory) -> ValidationReport {
    let mut report = ValidationReport::new();
    for (name, c) in [("c00", &t.c00), ("c01", &t.c01), ("c10", &t.c10), ("c11", &t.c11)] {
        report.merge_under(name, validate_category(c));
    }
    let functors = [
        ("p0_src", &t.p0_src),
        ("p0_tgt", &t.p0_tgt),
        ("p0_id", &t.p0_id),
        ("t0_src", &t.t0_src),
        ("t0_tgt", &t.t0_tgt),
        ("t0_id", &t.t0_id),
        ("t1_src", &t.t1_src),
        ("t1_tgt", &t.t1_tgt),
        ("t1_id", &t.t1_id),
        ("p1_src", &t.p1_src),
        ("p1_tgt", &t.p1_tgt),
        ("p1_id", &t.p1_id),
    ];
    for (name, f) in functors {
        report.merge_under(name, validate_functor(f));
    }
    if !report.is_valid() {
        return report;
    }
    let mut check = |name: &str, lhs: Result<Functor, CatError>, rhs: Result<Functor, CatError>| {
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => {
                if !same_assignment(&a, &b) {
                    report.law(format!("grid diagram `{name}` does not commute"));
                }
            }
            _ => report.law(format!("grid diagram `{name}` does not compose")),
        }
    };
    let ok = |f: &Functor| -> Result<Functor, CatError> { Ok(f.clone()) };
    // identity functors are sections of source and target
    check("p0_id;p0_src", t.p0_id.then(&t.p0_src), ok(&Functor::identity(&t.c00)));
    check("p0_id;p0_tgt", t.p0_id.then(&t.p0_tgt), ok(&Functor::identity(&t.c00)));
    check("t0_id;t0_src", t.t0_id.then(&t.t0_src), ok(&Functor::identity(&t.c00)));
    check("t0_id;t0_tgt", t.t0_id.then(&t.t0_tgt), ok(&Functor::identity(&t.c00)));
    check("t1_id;t1_src", t.t1_id.then(&t.t1_src), ok(&Functor::identity(&t.c01)));
    check("t1_id;t1_tgt", t.t1_id.then(&t.t1_tgt), ok(&Functor::identity(&t.c01)));
    check("p1_id;p1_src", t.p1_id.then(&t.p1_src), ok(&Functor::identity(&t.c10)));
    check("p1_id;p1_tgt", t.p1_id.then(&t.p1_tgt), ok(&Functor::identity(&t.c10)));
    // the four corner squares of the grid
    check("t1_src;p0_src = p1_src;t0_src", t.t1_src.then(&t.p0_src), t.p1_src.then(&t.t0_src));
    check("t1_src;p0_tgt = p1_tgt;t0_src", t.t1_src.then(&t.p0_tgt), t.p1_tgt.then(&t.t0_src));
    check("t1_tgt;p0_src = p1_src;t0_tgt", t.t1_tgt.then(&t.p0_src), t.p1_src.then(&t.t0_tgt));
    check("t1_tgt;p0_tgt = p1_tgt;t0_tgt", t.t1_tgt.then(&t.p0_tgt), t.p1_tgt.then(&t.t0_tgt));
    // identity functors commute with the transverse structure
    check("p0_id;t1_id = t0_id;p1_id", t.p0_id.then(&t.t1_id), t.t0_id.then(&t.p1_id));
    check("p1_id;t1_src = t0_src;p0_id", t.p1_id.then(&t.t1_src), t.t0_src.then(&t.p0_id));
    check("p1_id;t1_tgt = t0_tgt;p0_id", t.p1_id.then(&t.t1_tgt), t.t0_tgt.then(&t.p0_id));
    check("t1_id;p1_src = p0_src;t0_id", t.t1_id.then(&t.p1_src), t.p0_src.then(&t.t0_id));
    check("t1_id;p1_tgt = p0_tgt;t0_id", t.t1_id.then(&t.p1_tgt), t.p0_tgt.then(&t.t0_id));
    report
}
