//! Finite double categories as explicit tables: a shared object set, a
//! horizontal and a vertical category, and a square set with two
//! compositions. Includes exhaustive validators, the transpose, double
//! functors, square families between double functors, and the
//! commuting-squares double category of an ordinary category.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::fincat::{validate_category, CatError, FinCat, Mor, MorId, ObjId};
use crate::report::ValidationReport;

/// A square with its boundary: `top: X -> X'` and `bottom: Y -> Y'`
/// horizontal, `left: X ~> Y` and `right: X' ~> Y'` vertical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Square {
    pub id: MorId,
    pub top: MorId,
    pub bottom: MorId,
    pub left: MorId,
    pub right: MorId,
}

impl Square {
    pub fn boundary(&self) -> (&MorId, &MorId, &MorId, &MorId) {
        (&self.top, &self.bottom, &self.left, &self.right)
    }
}

/// Deterministic square identifier derived from the boundary.
pub fn square_id(top: &MorId, bottom: &MorId, left: &MorId, right: &MorId) -> MorId {
    MorId(format!("[{top}|{bottom}|{left}|{right}]"))
}

/// A finite double category. `hcomp` glues squares along a shared
/// vertical edge (`a.right = b.left`), `vcomp` along a shared horizontal
/// edge (`a.bottom = b.top`). `hid` maps each vertical morphism to its
/// horizontal-identity square, `vid` each horizontal morphism to its
/// vertical-identity square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCategory {
    pub objects: Vec<ObjId>,
    pub hcat: FinCat,
    pub vcat: FinCat,
    pub squares: Vec<Square>,
    pub hcomp: BTreeMap<(MorId, MorId), MorId>,
    pub vcomp: BTreeMap<(MorId, MorId), MorId>,
    pub hid: BTreeMap<MorId, MorId>,
    pub vid: BTreeMap<MorId, MorId>,
}

impl DoubleCategory {
    pub fn square(&self, id: &MorId) -> Result<&Square, CatError> {
        self.squares
            .iter()
            .find(|s| &s.id == id)
            .ok_or_else(|| CatError::UnknownMorphism(id.clone()))
    }

    /// The square with the given boundary, if any.
    pub fn square_by_boundary(
        &self,
        top: &MorId,
        bottom: &MorId,
        left: &MorId,
        right: &MorId,
    ) -> Option<&Square> {
        self.squares.iter().find(|s| {
            &s.top == top && &s.bottom == bottom && &s.left == left && &s.right == right
        })
    }

    pub fn hcompose(&self, a: &MorId, b: &MorId) -> Result<MorId, CatError> {
        self.hcomp
            .get(&(a.clone(), b.clone()))
            .cloned()
            .ok_or_else(|| CatError::MissingComposite(a.clone(), b.clone()))
    }

    pub fn vcompose(&self, a: &MorId, b: &MorId) -> Result<MorId, CatError> {
        self.vcomp
            .get(&(a.clone(), b.clone()))
            .cloned()
            .ok_or_else(|| CatError::MissingComposite(a.clone(), b.clone()))
    }

    /// Order-insensitive equality of all tables.
    pub fn structurally_equal(&self, other: &DoubleCategory) -> bool {
        let objs: BTreeSet<_> = self.objects.iter().collect();
        let objs2: BTreeSet<_> = other.objects.iter().collect();
        let sq: BTreeSet<_> = self
            .squares
            .iter()
            .map(|s| (&s.id, s.boundary()))
            .collect();
        let sq2: BTreeSet<_> = other
            .squares
            .iter()
            .map(|s| (&s.id, s.boundary()))
            .collect();
        objs == objs2
            && self.hcat.structurally_equal(&other.hcat)
            && self.vcat.structurally_equal(&other.vcat)
            && sq == sq2
            && self.hcomp == other.hcomp
            && self.vcomp == other.vcomp
            && self.hid == other.hid
            && self.vid == other.vid
    }
}

/// Build a double category whose squares are a property of their
/// boundary: at most one square per boundary tuple, compositions derived
/// by boundary lookup.
///
/// Errors if two boundaries coincide or if a composite boundary has no
/// square — the latter is a closure counterexample and the error names
/// the offending pair.
pub fn from_property_squares(
    hcat: &FinCat,
    vcat: &FinCat,
    boundaries: &[(MorId, MorId, MorId, MorId)],
) -> Result<DoubleCategory, CatError> {
    let mut index: BTreeMap<(MorId, MorId, MorId, MorId), MorId> = BTreeMap::new();
    let mut squares = Vec::new();
    for (top, bottom, left, right) in boundaries {
        let id = square_id(top, bottom, left, right);
        if index
            .insert((top.clone(), bottom.clone(), left.clone(), right.clone()), id.clone())
            .is_some()
        {
            return Err(CatError::Shape(format!("duplicate square boundary `{id}`")));
        }
        squares.push(Square {
            id,
            top: top.clone(),
            bottom: bottom.clone(),
            left: left.clone(),
            right: right.clone(),
        });
    }
    let lookup = |top: &MorId, bottom: &MorId, left: &MorId, right: &MorId| {
        index
            .get(&(top.clone(), bottom.clone(), left.clone(), right.clone()))
            .cloned()
            .ok_or_else(|| {
                CatError::Shape(format!(
                    "no square with boundary `{}`",
                    square_id(top, bottom, left, right)
                ))
            })
    };
    let mut hcomp = BTreeMap::new();
    let mut vcomp = BTreeMap::new();
    for a in &squares {
        for b in &squares {
            if a.right == b.left {
                let top = hcat.compose(&a.top, &b.top)?;
                let bottom = hcat.compose(&a.bottom, &b.bottom)?;
                let c = lookup(&top, &bottom, &a.left, &b.right)?;
                hcomp.insert((a.id.clone(), b.id.clone()), c);
            }
            if a.bottom == b.top {
                let left = vcat.compose(&a.left, &b.left)?;
                let right = vcat.compose(&a.right, &b.right)?;
                let c = lookup(&a.top, &b.bottom, &left, &right)?;
                vcomp.insert((a.id.clone(), b.id.clone()), c);
            }
        }
    }
    let mut hid = BTreeMap::new();
    for v in &vcat.morphisms {
        let top = hcat.id(&v.src)?;
        let bottom = hcat.id(&v.tgt)?;
        hid.insert(v.id.clone(), lookup(top, bottom, &v.id, &v.id)?);
    }
    let mut vid = BTreeMap::new();
    for h in &hcat.morphisms {
        let left = vcat.id(&h.src)?;
        let right = vcat.id(&h.tgt)?;
        vid.insert(h.id.clone(), lookup(&h.id, &h.id, left, right)?);
    }
    Ok(DoubleCategory {
        objects: hcat.objects.clone(),
        hcat: hcat.clone(),
        vcat: vcat.clone(),
        squares,
        hcomp,
        vcomp,
        hid,
        vid,
    })
}

/// Exhaustive double-category validation: both underlying categories,
/// boundary coherence of every square, totality and boundary coherence
/// of both square compositions, square unit laws and associativity in
/// both directions, identity-square compatibility, and the interchange
/// law over every composable 2x2 grid.
pub fn validate_double_category(d: &DoubleCategory) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.merge_under("horizontal category", validate_category(&d.hcat));
    report.merge_under("vertical category", validate_category(&d.vcat));
    let objs: BTreeSet<_> = d.objects.iter().collect();
    if objs != d.hcat.objects.iter().collect() || objs != d.vcat.objects.iter().collect() {
        report.structural("object set differs between the two underlying categories");
    }
    let mut ids = BTreeSet::new();
    for s in &d.squares {
        if !ids.insert(&s.id) {
            report.structural(format!("duplicate square id `{}`", s.id));
        }
        let bounds_ok = d.hcat.mor(&s.top).is_ok()
            && d.hcat.mor(&s.bottom).is_ok()
            && d.vcat.mor(&s.left).is_ok()
            && d.vcat.mor(&s.right).is_ok();
        if !bounds_ok {
            report.structural(format!("square `{}` references unknown boundary morphisms", s.id));
        }
    }
    if !report.is_valid() {
        return report;
    }
    for s in &d.squares {
        let top = d.hcat.mor(&s.top).unwrap();
        let bottom = d.hcat.mor(&s.bottom).unwrap();
        let left = d.vcat.mor(&s.left).unwrap();
        let right = d.vcat.mor(&s.right).unwrap();
        if top.src != left.src || top.tgt != right.src || bottom.src != left.tgt || bottom.tgt != right.tgt
        {
            report.law(format!("square `{}` has incoherent boundary", s.id));
        }
    }
    if !report.is_valid() {
        return report;
    }
    // Totality and boundary coherence of both compositions.
    let check_comp = |report: &mut ValidationReport,
                      table: &BTreeMap<(MorId, MorId), MorId>,
                      dir: &str,
                      composable: &dyn Fn(&Square, &Square) -> bool,
                      boundary: &dyn Fn(&Square, &Square) -> Result<(MorId, MorId, MorId, MorId), CatError>| {
        for a in &d.squares {
            for b in &d.squares {
                let key = (a.id.clone(), b.id.clone());
                match (composable(a, b), table.get(&key)) {
                    (true, None) => report.law(format!(
                        "missing {dir} composite for (`{}`, `{}`)",
                        a.id, b.id
                    )),
                    (false, Some(_)) => report.law(format!(
                        "{dir} composite declared for non-composable (`{}`, `{}`)",
                        a.id, b.id
                    )),
                    (true, Some(c)) => match (d.square(c), boundary(a, b)) {
                        (Ok(sc), Ok((t, bo, l, r))) => {
                            if sc.top != t || sc.bottom != bo || sc.left != l || sc.right != r {
                                report.law(format!(
                                    "{dir} composite `{c}` of (`{}`, `{}`) has wrong boundary",
                                    a.id, b.id
                                ));
                            }
                        }
                        _ => report.law(format!(
                            "{dir} composite `{c}` of (`{}`, `{}`) is invalid",
                            a.id, b.id
                        )),
                    },
                    (false, None) => {}
                }
            }
        }
    };
    check_comp(
        &mut report,
        &d.hcomp,
        "horizontal",
        &|a, b| a.right == b.left,
        &|a, b| {
            Ok((
                d.hcat.compose(&a.top, &b.top)?,
                d.hcat.compose(&a.bottom, &b.bottom)?,
                a.left.clone(),
                b.right.clone(),
            ))
        },
    );
    check_comp(
        &mut report,
        &d.vcomp,
        "vertical",
        &|a, b| a.bottom == b.top,
        &|a, b| {
            Ok((
                a.top.clone(),
                b.bottom.clone(),
                d.vcat.compose(&a.left, &b.left)?,
                d.vcat.compose(&a.right, &b.right)?,
            ))
        },
    );
    if !report.is_valid() {
        return report;
    }
    // Identity squares: existence, boundary, and unit laws.
    for v in &d.vcat.morphisms {
        match d.hid.get(&v.id).map(|i| d.square(i)) {
            None | Some(Err(_)) => {
                report.law(format!("vertical morphism `{}` has no identity square", v.id))
            }
            Some(Ok(s)) => {
                if &s.top != d.hcat.id(&v.src).unwrap()
                    || &s.bottom != d.hcat.id(&v.tgt).unwrap()
                    || s.left != v.id
                    || s.right != v.id
                {
                    report.law(format!("identity square of vertical `{}` has wrong boundary", v.id));
                }
            }
        }
    }
    for h in &d.hcat.morphisms {
        match d.vid.get(&h.id).map(|i| d.square(i)) {
            None | Some(Err(_)) => {
                report.law(format!("horizontal morphism `{}` has no identity square", h.id))
            }
            Some(Ok(s)) => {
                if s.top != h.id
                    || s.bottom != h.id
                    || &s.left != d.vcat.id(&h.src).unwrap()
                    || &s.right != d.vcat.id(&h.tgt).unwrap()
                {
                    report
                        .law(format!("identity square of horizontal `{}` has wrong boundary", h.id));
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    for s in &d.squares {
        let lh = &d.hid[&s.left];
        let rh = &d.hid[&s.right];
        if d.hcomp.get(&(lh.clone(), s.id.clone())) != Some(&s.id)
            || d.hcomp.get(&(s.id.clone(), rh.clone())) != Some(&s.id)
        {
            report.law(format!("horizontal unit law fails for square `{}`", s.id));
        }
        let tv = &d.vid[&s.top];
        let bv = &d.vid[&s.bottom];
        if d.vcomp.get(&(tv.clone(), s.id.clone())) != Some(&s.id)
            || d.vcomp.get(&(s.id.clone(), bv.clone())) != Some(&s.id)
        {
            report.law(format!("vertical unit law fails for square `{}`", s.id));
        }
    }
    // hid of a vertical identity and vid of a horizontal identity must agree.
    for x in &d.objects {
        let hv = &d.hid[d.vcat.id(x).unwrap()];
        let vh = &d.vid[d.hcat.id(x).unwrap()];
        if hv != vh {
            report.law(format!("identity squares disagree at object `{x}`"));
        }
    }
    // Associativity in both directions.
    for a in &d.squares {
        for b in &d.squares {
            for c in &d.squares {
                if a.right == b.left && b.right == c.left {
                    let ab = &d.hcomp[&(a.id.clone(), b.id.clone())];
                    let bc = &d.hcomp[&(b.id.clone(), c.id.clone())];
                    if d.hcomp.get(&(ab.clone(), c.id.clone()))
                        != d.hcomp.get(&(a.id.clone(), bc.clone()))
                    {
                        report.law(format!(
                            "horizontal associativity fails on (`{}`, `{}`, `{}`)",
                            a.id, b.id, c.id
                        ));
                    }
                }
                if a.bottom == b.top && b.bottom == c.top {
                    let ab = &d.vcomp[&(a.id.clone(), b.id.clone())];
                    let bc = &d.vcomp[&(b.id.clone(), c.id.clone())];
                    if d.vcomp.get(&(ab.clone(), c.id.clone()))
                        != d.vcomp.get(&(a.id.clone(), bc.clone()))
                    {
                        report.law(format!(
                            "vertical associativity fails on (`{}`, `{}`, `{}`)",
                            a.id, b.id, c.id
                        ));
                    }
                }
            }
        }
    }
    // Interchange over every 2x2 grid.
    for s11 in &d.squares {
        for s12 in &d.squares {
            if s11.right != s12.left {
                continue;
            }
            for s21 in &d.squares {
                if s21.top != s11.bottom {
                    continue;
                }
                for s22 in &d.squares {
                    if s22.top != s12.bottom || s22.left != s21.right {
                        continue;
                    }
                    let row1 = &d.hcomp[&(s11.id.clone(), s12.id.clone())];
                    let row2 = &d.hcomp[&(s21.id.clone(), s22.id.clone())];
                    let col1 = &d.vcomp[&(s11.id.clone(), s21.id.clone())];
                    let col2 = &d.vcomp[&(s12.id.clone(), s22.id.clone())];
                    if d.vcomp.get(&(row1.clone(), row2.clone()))
                        != d.hcomp.get(&(col1.clone(), col2.clone()))
                    {
                        report.law(format!(
                            "interchange fails on grid (`{}`, `{}`; `{}`, `{}`)",
                            s11.id, s12.id, s21.id, s22.id
                        ));
                    }
                }
            }
        }
    }
    report
}

/// The transpose: horizontal and vertical swapped, square ids kept.
pub fn transpose(d: &DoubleCategory) -> DoubleCategory {
    DoubleCategory {
        objects: d.objects.clone(),
        hcat: d.vcat.clone(),
        vcat: d.hcat.clone(),
        squares: d
            .squares
            .iter()
            .map(|s| Square {
                id: s.id.clone(),
                top: s.left.clone(),
                bottom: s.right.clone(),
                left: s.top.clone(),
                right: s.bottom.clone(),
            })
            .collect(),
        hcomp: d.vcomp.clone(),
        vcomp: d.hcomp.clone(),
        hid: d.vid.clone(),
        vid: d.hid.clone(),
    }
}

/// The commuting-squares double category of a category: horizontal and
/// vertical morphisms are the morphisms of `c`, and a square exists for
/// each boundary `(a, b, f, g)` with `f ; b = a ; g`.
pub fn squares_double_category(c: &FinCat) -> Result<DoubleCategory, CatError> {
    let mut boundaries = Vec::new();
    for a in &c.morphisms {
        for b in &c.morphisms {
            for f in c.hom(&a.src, &b.src) {
                for g in c.hom(&a.tgt, &b.tgt) {
                    if c.compose(f, &b.id)? == c.compose(&a.id, g)? {
                        boundaries.push((a.id.clone(), b.id.clone(), f.clone(), g.clone()));
                    }
                }
            }
        }
    }
    from_property_squares(c, c, &boundaries)
}

/// A double functor between finite double categories, stored as four
/// total maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleFunctor {
    pub dom: DoubleCategory,
    pub cod: DoubleCategory,
    pub ob_map: BTreeMap<ObjId, ObjId>,
    pub hmor_map: BTreeMap<MorId, MorId>,
    pub vmor_map: BTreeMap<MorId, MorId>,
    pub sq_map: BTreeMap<MorId, MorId>,
}

impl DoubleFunctor {
    pub fn identity(d: &DoubleCategory) -> DoubleFunctor {
        DoubleFunctor {
            dom: d.clone(),
            cod: d.clone(),
            ob_map: d.objects.iter().map(|x| (x.clone(), x.clone())).collect(),
            hmor_map: d.hcat.morphisms.iter().map(|m| (m.id.clone(), m.id.clone())).collect(),
            vmor_map: d.vcat.morphisms.iter().map(|m| (m.id.clone(), m.id.clone())).collect(),
            sq_map: d.squares.iter().map(|s| (s.id.clone(), s.id.clone())).collect(),
        }
    }

    /// The horizontal underlying functor.
    pub fn hfunctor(&self) -> crate::fincat::Functor {
        crate::fincat::Functor {
            dom: self.dom.hcat.clone(),
            cod: self.cod.hcat.clone(),
            ob_map: self.ob_map.clone(),
            mor_map: self.hmor_map.clone(),
        }
    }

    /// The vertical underlying functor.
    pub fn vfunctor(&self) -> crate::fincat::Functor {
        crate::fincat::Functor {
            dom: self.dom.vcat.clone(),
            cod: self.cod.vcat.clone(),
            ob_map: self.ob_map.clone(),
            mor_map: self.vmor_map.clone(),
        }
    }
}

/// Exhaustive double-functor validation: both underlying functors, square
/// boundary preservation, preservation of identity squares and of both
/// square compositions.
pub fn validate_double_functor(f: &DoubleFunctor) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.merge_under("horizontal functor", crate::fincat::validate_functor(&f.hfunctor()));
    report.merge_under("vertical functor", crate::fincat::validate_functor(&f.vfunctor()));
    for s in &f.dom.squares {
        match f.sq_map.get(&s.id).map(|i| f.cod.square(i)) {
            None | Some(Err(_)) => {
                report.structural(format!("square `{}` has no valid image", s.id))
            }
            Some(Ok(_)) => {}
        }
    }
    if !report.is_valid() {
        return report;
    }
    for s in &f.dom.squares {
        let fs = f.cod.square(&f.sq_map[&s.id]).unwrap();
        if fs.top != f.hmor_map[&s.top]
            || fs.bottom != f.hmor_map[&s.bottom]
            || fs.left != f.vmor_map[&s.left]
            || fs.right != f.vmor_map[&s.right]
        {
            report.law(format!("boundary of square `{}` not preserved", s.id));
        }
    }
    for (v, i) in &f.dom.hid {
        if f.cod.hid.get(&f.vmor_map[v]) != f.sq_map.get(i) {
            report.law(format!("horizontal identity square of `{v}` not preserved"));
        }
    }
    for (h, i) in &f.dom.vid {
        if f.cod.vid.get(&f.hmor_map[h]) != f.sq_map.get(i) {
            report.law(format!("vertical identity square of `{h}` not preserved"));
        }
    }
    for ((a, b), c) in &f.dom.hcomp {
        let img = f.cod.hcomp.get(&(f.sq_map[a].clone(), f.sq_map[b].clone()));
        if img != f.sq_map.get(c) {
            report.law(format!("horizontal composition not preserved on (`{a}`, `{b}`)"));
        }
    }
    for ((a, b), c) in &f.dom.vcomp {
        let img = f.cod.vcomp.get(&(f.sq_map[a].clone(), f.sq_map[b].clone()));
        if img != f.sq_map.get(c) {
            report.law(format!("vertical composition not preserved on (`{a}`, `{b}`)"));
        }
    }
    report
}

/// A square family between two parallel double functors: a horizontal
/// morphism per object and a square per vertical morphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareFamily {
    pub components: BTreeMap<ObjId, MorId>,
    pub squares: BTreeMap<MorId, MorId>,
}

/// Validate a square family `alpha` between double functors `f, g`: each
/// vertical morphism `rho` of the domain must have a square with left
/// edge `f(rho)`, right edge `g(rho)`, top `alpha` at the source and
/// bottom `alpha` at the target; the family must compose vertically
/// (functorial on the vertical category) and horizontally (natural
/// against every square of the domain).
pub fn validate_double_nat(
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    fam: &SquareFamily,
) -> ValidationReport {
    let mut report = ValidationReport::new();
    let e = &f.cod;
    for x in &f.dom.objects {
        match fam.components.get(x).map(|m| e.hcat.mor(m)) {
            None | Some(Err(_)) => {
                report.structural(format!("missing or unknown component at `{x}`"))
            }
            Some(Ok(m)) => {
                if m.src != f.ob_map[x] || m.tgt != g.ob_map[x] {
                    report.law(format!("component at `{x}` has wrong endpoints"));
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    for rho in &f.dom.vcat.morphisms {
        match fam.squares.get(&rho.id).map(|i| e.square(i)) {
            None | Some(Err(_)) => {
                report.law(format!("no square assigned to vertical morphism `{}`", rho.id));
                continue;
            }
            Some(Ok(s)) => {
                if s.top != fam.components[&rho.src]
                    || s.bottom != fam.components[&rho.tgt]
                    || s.left != f.vmor_map[&rho.id]
                    || s.right != g.vmor_map[&rho.id]
                {
                    report.law(format!("square at `{}` has wrong boundary", rho.id));
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    // Vertical functoriality of the family.
    for x in &f.dom.objects {
        let idv = f.dom.vcat.id(x).unwrap();
        if fam.squares[idv] != e.vid[&fam.components[x]] {
            report.law(format!("family at the vertical identity of `{x}` is not an identity"));
        }
    }
    for ((a, b), c) in &f.dom.vcat.comp {
        let composite = e.vcomp.get(&(fam.squares[a].clone(), fam.squares[b].clone()));
        if composite != Some(&fam.squares[c]) {
            report.law(format!("family not vertically functorial on (`{a}`, `{b}`)"));
        }
    }
    // Horizontal naturality against every square of the domain.
    for s in &f.dom.squares {
        let l = e.hcomp.get(&(f.sq_map[&s.id].clone(), fam.squares[&s.right].clone()));
        let r = e.hcomp.get(&(fam.squares[&s.left].clone(), g.sq_map[&s.id].clone()));
        if l.is_none() || l != r {
            report.law(format!("naturality fails at square `{}`", s.id));
        }
    }
    report
}

/// The category of vertical morphisms and squares of a double category:
/// objects are the vertical morphisms, a square is a morphism from its
/// left edge to its right edge, composed horizontally.
pub fn morphism_category(d: &DoubleCategory) -> FinCat {
    let objects: Vec<ObjId> = d.vcat.morphisms.iter().map(|m| ObjId(m.id.0.clone())).collect();
    let morphisms: Vec<Mor> = d
        .squares
        .iter()
        .map(|s| Mor {
            id: s.id.clone(),
            src: ObjId(s.left.0.clone()),
            tgt: ObjId(s.right.0.clone()),
        })
        .collect();
    let identity = d
        .hid
        .iter()
        .map(|(v, i)| (ObjId(v.0.clone()), i.clone()))
        .collect();
    FinCat { objects, morphisms, identity, comp: d.hcomp.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::chain;

    #[test]
    fn squares_double_category_of_poset_is_valid() {
        let c = chain(3);
        let d = squares_double_category(&c).unwrap();
        assert!(validate_double_category(&d).is_valid());
        // oracle: thin category, so a square per commuting 4-tuple
        let mut count = 0;
        for a in &c.morphisms {
            for b in &c.morphisms {
                for f in &c.morphisms {
                    for g in &c.morphisms {
                        if f.src == a.src && f.tgt == b.src && g.src == a.tgt && g.tgt == b.tgt {
                            count += 1; // thin: commutativity automatic
                        }
                    }
                }
            }
        }
        assert_eq!(d.squares.len(), count);
    }

    #[test]
    fn transpose_is_an_involution() {
        let d = squares_double_category(&chain(3)).unwrap();
        let t = transpose(&d);
        assert!(validate_double_category(&t).is_valid());
        assert!(transpose(&t).structurally_equal(&d));
        // a poset's commuting squares are symmetric
        assert_eq!(t.squares.len(), d.squares.len());
    }

    #[test]
    fn corrupted_composite_is_reported() {
        let mut d = squares_double_category(&chain(2)).unwrap();
        // redirect one non-identity horizontal composite to a wrong square
        let key = d
            .hcomp
            .iter()
            .find(|((a, b), c)| c != &a && c != &b)
            .map(|(k, _)| k.clone())
            .expect("some strict composite exists");
        let wrong = d.squares[0].id.clone();
        assert_ne!(d.hcomp[&key], wrong);
        d.hcomp.insert(key.clone(), wrong);
        let report = validate_double_category(&d);
        assert!(!report.is_valid());
        assert!(report
            .messages()
            .iter()
            .any(|m| m.contains(&key.0 .0) || m.contains("horizontal")));
    }

    #[test]
    fn identity_double_functor_is_valid() {
        let d = squares_double_category(&chain(3)).unwrap();
        let f = DoubleFunctor::identity(&d);
        assert!(validate_double_functor(&f).is_valid());
    }

    #[test]
    fn identity_square_family_is_valid() {
        let d = squares_double_category(&chain(2)).unwrap();
        let f = DoubleFunctor::identity(&d);
        let fam = SquareFamily {
            components: d
                .objects
                .iter()
                .map(|x| (x.clone(), d.hcat.identity[x].clone()))
                .collect(),
            squares: d.vcat.morphisms.iter().map(|v| (v.id.clone(), d.hid[&v.id].clone())).collect(),
        };
        assert!(validate_double_nat(&f, &f, &fam).is_valid());
        // a family with one square removed reports that vertical morphism
        let mut broken = fam.clone();
        let victim = d.vcat.morphisms[1].id.clone();
        broken.squares.remove(&victim);
        let report = validate_double_nat(&f, &f, &broken);
        assert!(!report.is_valid());
        assert!(report.messages().iter().any(|m| m.contains(&victim.0)));
    }

    #[test]
    fn morphism_category_of_squares_is_valid() {
        let d = squares_double_category(&chain(2)).unwrap();
        let mc = morphism_category(&d);
        assert!(crate::fincat::validate_category(&mc).is_valid());
        assert_eq!(mc.objects.len(), d.vcat.morphisms.len());
        assert_eq!(mc.morphisms.len(), d.squares.len());
    }
}
