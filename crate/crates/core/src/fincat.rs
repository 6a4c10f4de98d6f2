//! Finite categories, functors, and natural transformations as explicit
//! tables, with exhaustive law validators.
//!
//! Composition is stored, never searched: a `FinCat` carries a closed
//! composition table and `comp` is read "f then g" (diagrammatic order)
//! throughout the crate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::report::ValidationReport;

/// Object identifier, unique within one category.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjId(pub String);

/// Morphism identifier, unique within one category.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MorId(pub String);

impl ObjId {
    pub fn new(s: impl Into<String>) -> Self {
        ObjId(s.into())
    }
}

impl MorId {
    pub fn new(s: impl Into<String>) -> Self {
        MorId(s.into())
    }
}

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<String> for ObjId {
    fn from(s: String) -> Self {
        ObjId(s)
    }
}

impl From<String> for MorId {
    fn from(s: String) -> Self {
        MorId(s)
    }
}

impl From<&str> for ObjId {
    fn from(s: &str) -> Self {
        ObjId(s.to_owned())
    }
}

impl From<&str> for MorId {
    fn from(s: &str) -> Self {
        MorId(s.to_owned())
    }
}

/// A morphism record: identifier plus source and target objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mor {
    pub id: MorId,
    pub src: ObjId,
    pub tgt: ObjId,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatError {
    #[error("unknown object `{0}`")]
    UnknownObject(ObjId),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(MorId),
    #[error("morphisms `{0}` and `{1}` are not composable")]
    NotComposable(MorId, MorId),
    #[error("missing composite for composable pair (`{0}`, `{1}`)")]
    MissingComposite(MorId, MorId),
    #[error("relation is not a poset: {0}")]
    NotPoset(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// A finite category as a closed composition table.
///
/// `comp` maps a composable pair `(f, g)` with `tgt(f) = src(g)` to the
/// composite "f then g".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinCat {
    pub objects: Vec<ObjId>,
    pub morphisms: Vec<Mor>,
    pub identity: BTreeMap<ObjId, MorId>,
    pub comp: BTreeMap<(MorId, MorId), MorId>,
}

impl FinCat {
    pub fn has_object(&self, x: &ObjId) -> bool {
        self.objects.contains(x)
    }

    pub fn mor(&self, f: &MorId) -> Result<&Mor, CatError> {
        self.morphisms
            .iter()
            .find(|m| &m.id == f)
            .ok_or_else(|| CatError::UnknownMorphism(f.clone()))
    }

    pub fn src(&self, f: &MorId) -> Result<&ObjId, CatError> {
        Ok(&self.mor(f)?.src)
    }

    pub fn tgt(&self, f: &MorId) -> Result<&ObjId, CatError> {
        Ok(&self.mor(f)?.tgt)
    }

    pub fn id(&self, x: &ObjId) -> Result<&MorId, CatError> {
        self.identity
            .get(x)
            .ok_or_else(|| CatError::UnknownObject(x.clone()))
    }

    /// All morphisms from `x` to `y`, in declared order.
    pub fn hom(&self, x: &ObjId, y: &ObjId) -> Vec<&MorId> {
        self.morphisms
            .iter()
            .filter(|m| &m.src == x && &m.tgt == y)
            .map(|m| &m.id)
            .collect()
    }

    /// Composite "f then g". Errors on a non-composable pair or a hole in
    /// the table.
    pub fn compose(&self, f: &MorId, g: &MorId) -> Result<MorId, CatError> {
        let mf = self.mor(f)?;
        let mg = self.mor(g)?;
        if mf.tgt != mg.src {
            return Err(CatError::NotComposable(f.clone(), g.clone()));
        }
        self.comp
            .get(&(f.clone(), g.clone()))
            .cloned()
            .ok_or_else(|| CatError::MissingComposite(f.clone(), g.clone()))
    }

    /// Compose a nonempty path of morphisms left to right.
    pub fn compose_path(&self, path: &[&MorId]) -> Result<MorId, CatError> {
        let mut acc = path[0].clone();
        for f in &path[1..] {
            acc = self.compose(&acc, f)?;
        }
        Ok(acc)
    }

    /// Equality of categories as sets of tables, insensitive to the order
    /// objects and morphisms were declared in.
    pub fn structurally_equal(&self, other: &FinCat) -> bool {
        let objs: BTreeSet<_> = self.objects.iter().collect();
        let objs2: BTreeSet<_> = other.objects.iter().collect();
        let mors: BTreeSet<_> = self.morphisms.iter().map(|m| (&m.id, &m.src, &m.tgt)).collect();
        let mors2: BTreeSet<_> = other.morphisms.iter().map(|m| (&m.id, &m.src, &m.tgt)).collect();
        objs == objs2 && mors == mors2 && self.identity == other.identity && self.comp == other.comp
    }

    /// Structural well-formedness: all references resolve and identifiers
    /// are unique. Law checks are only meaningful once this passes.
    pub fn structural_errors(&self) -> Vec<String> {
        let mut errs = Vec::new();
        let mut seen_obj = BTreeSet::new();
        for x in &self.objects {
            if x.0.is_empty() {
                errs.push("empty object identifier".to_string());
            }
            if !seen_obj.insert(x) {
                errs.push(format!("duplicate object `{x}`"));
            }
        }
        let mut seen_mor = BTreeSet::new();
        for m in &self.morphisms {
            if m.id.0.is_empty() {
                errs.push("empty morphism identifier".to_string());
            }
            if !seen_mor.insert(&m.id) {
                errs.push(format!("duplicate morphism `{}`", m.id));
            }
            if !self.has_object(&m.src) {
                errs.push(format!("morphism `{}` has unknown source `{}`", m.id, m.src));
            }
            if !self.has_object(&m.tgt) {
                errs.push(format!("morphism `{}` has unknown target `{}`", m.id, m.tgt));
            }
        }
        for (x, i) in &self.identity {
            if !self.has_object(x) {
                errs.push(format!("identity declared for unknown object `{x}`"));
            }
            if !seen_mor.contains(i) {
                errs.push(format!("identity `{i}` of `{x}` is not a listed morphism"));
            }
        }
        for ((f, g), fg) in &self.comp {
            for h in [f, g, fg] {
                if !seen_mor.contains(h) {
                    errs.push(format!("composition entry references unknown morphism `{h}`"));
                }
            }
        }
        errs
    }

    /// Unit at X: id_X exists with src = tgt = X.
    fn identity_errors(&self) -> Vec<String> {
        let mut errs = Vec::new();
        for x in &self.objects {
            match self.identity.get(x) {
                None => errs.push(format!("object `{x}` has no identity")),
                Some(i) => {
                    let m = self.mor(i).expect("structural check passed");
                    if &m.src != x || &m.tgt != x {
                        errs.push(format!("identity `{i}` of `{x}` is not an endomorphism of `{x}`"));
                    }
                }
            }
        }
        errs
    }
}

/// Exhaustive category-law validation: totality of the composition table,
/// endpoint coherence, unit laws, and associativity over every composable
/// triple. All violations are reported, never just the first.
pub fn validate_category(c: &FinCat) -> ValidationReport {
    let mut report = ValidationReport::new();
    let structural = c.structural_errors();
    if !structural.is_empty() {
        for e in structural {
            report.structural(e);
        }
        return report;
    }
    for e in c.identity_errors() {
        report.law(e);
    }
    // Totality and boundary coherence of the stored composites.
    for f in &c.morphisms {
        for g in &c.morphisms {
            let key = (f.id.clone(), g.id.clone());
            match c.comp.get(&key) {
                None => {
                    if f.tgt == g.src {
                        report.law(format!("missing composite for (`{}`, `{}`)", f.id, g.id));
                    }
                }
                Some(fg) => {
                    if f.tgt != g.src {
                        report.law(format!(
                            "composite declared for non-composable pair (`{}`, `{}`)",
                            f.id, g.id
                        ));
                    } else {
                        let m = c.mor(fg).expect("structural check passed");
                        if m.src != f.src || m.tgt != g.tgt {
                            report.law(format!(
                                "composite `{}` of (`{}`, `{}`) has wrong endpoints",
                                fg, f.id, g.id
                            ));
                        }
                    }
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    // Unit laws.
    for m in &c.morphisms {
        let ids = c.identity.get(&m.src);
        let idt = c.identity.get(&m.tgt);
        if let Some(i) = ids {
            if c.comp.get(&(i.clone(), m.id.clone())) != Some(&m.id) {
                report.law(format!("left unit law fails for `{}`", m.id));
            }
        }
        if let Some(i) = idt {
            if c.comp.get(&(m.id.clone(), i.clone())) != Some(&m.id) {
                report.law(format!("right unit law fails for `{}`", m.id));
            }
        }
    }
    // Associativity over all composable triples.
    for f in &c.morphisms {
        for g in &c.morphisms {
            if f.tgt != g.src {
                continue;
            }
            for h in &c.morphisms {
                if g.tgt != h.src {
                    continue;
                }
                let fg = &c.comp[&(f.id.clone(), g.id.clone())];
                let gh = &c.comp[&(g.id.clone(), h.id.clone())];
                let left = c.comp.get(&(fg.clone(), h.id.clone()));
                let right = c.comp.get(&(f.id.clone(), gh.clone()));
                if left != right {
                    report.law(format!(
                        "associativity fails on triple (`{}`, `{}`, `{}`)",
                        f.id, g.id, h.id
                    ));
                }
            }
        }
    }
    report
}

/// A functor between finite categories, stored as total object and
/// morphism maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Functor {
    pub dom: FinCat,
    pub cod: FinCat,
    pub ob_map: BTreeMap<ObjId, ObjId>,
    pub mor_map: BTreeMap<MorId, MorId>,
}

impl Functor {
    pub fn identity(c: &FinCat) -> Functor {
        Functor {
            dom: c.clone(),
            cod: c.clone(),
            ob_map: c.objects.iter().map(|x| (x.clone(), x.clone())).collect(),
            mor_map: c.morphisms.iter().map(|m| (m.id.clone(), m.id.clone())).collect(),
        }
    }

    pub fn ob(&self, x: &ObjId) -> Result<&ObjId, CatError> {
        self.ob_map.get(x).ok_or_else(|| CatError::UnknownObject(x.clone()))
    }

    pub fn mor(&self, f: &MorId) -> Result<&MorId, CatError> {
        self.mor_map.get(f).ok_or_else(|| CatError::UnknownMorphism(f.clone()))
    }

    /// Composite functor "self then g" (diagrammatic order).
    pub fn then(&self, g: &Functor) -> Result<Functor, CatError> {
        if !self.cod.structurally_equal(&g.dom) {
            return Err(CatError::Shape(
                "functor composition: codomain does not match domain".into(),
            ));
        }
        let mut ob_map = BTreeMap::new();
        for x in &self.dom.objects {
            ob_map.insert(x.clone(), g.ob(self.ob(x)?)?.clone());
        }
        let mut mor_map = BTreeMap::new();
        for m in &self.dom.morphisms {
            mor_map.insert(m.id.clone(), g.mor(self.mor(&m.id)?)?.clone());
        }
        Ok(Functor { dom: self.dom.clone(), cod: g.cod.clone(), ob_map, mor_map })
    }
}

/// Exhaustive functor-law validation: totality, boundary preservation,
/// identities, and composition on every composable pair.
pub fn validate_functor(f: &Functor) -> ValidationReport {
    let mut report = ValidationReport::new();
    for x in &f.dom.objects {
        match f.ob_map.get(x) {
            None => report.structural(format!("object `{x}` has no image")),
            Some(y) => {
                if !f.cod.has_object(y) {
                    report.structural(format!("image `{y}` of object `{x}` is unknown"));
                }
            }
        }
    }
    for m in &f.dom.morphisms {
        match f.mor_map.get(&m.id) {
            None => report.structural(format!("morphism `{}` has no image", m.id)),
            Some(n) => {
                if f.cod.mor(n).is_err() {
                    report.structural(format!("image `{}` of morphism `{}` is unknown", n, m.id));
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    for m in &f.dom.morphisms {
        let n = f.cod.mor(&f.mor_map[&m.id]).expect("checked above");
        let fs = &f.ob_map[&m.src];
        let ft = &f.ob_map[&m.tgt];
        if &n.src != fs || &n.tgt != ft {
            report.law(format!(
                "functoriality error on `{}`: image `{}` is not a morphism `{}` -> `{}`",
                m.id, n.id, fs, ft
            ));
        }
    }
    if !report.is_valid() {
        return report;
    }
    for (x, i) in &f.dom.identity {
        let fi = &f.mor_map[i];
        let want = f.cod.identity.get(&f.ob_map[x]);
        if want != Some(fi) {
            report.law(format!("identity of `{x}` is not sent to an identity"));
        }
    }
    for ((a, b), ab) in &f.dom.comp {
        let fa = &f.mor_map[a];
        let fb = &f.mor_map[b];
        let fab = &f.mor_map[ab];
        match f.cod.comp.get(&(fa.clone(), fb.clone())) {
            Some(c) if c == fab => {}
            _ => report.law(format!("composition not preserved on (`{a}`, `{b}`)")),
        }
    }
    report
}

/// A natural transformation between parallel functors, stored as its
/// component table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatTrans {
    pub dom: Functor,
    pub cod: Functor,
    pub components: BTreeMap<ObjId, MorId>,
}

impl NatTrans {
    pub fn identity(f: &Functor) -> NatTrans {
        let components = f
            .dom
            .objects
            .iter()
            .map(|x| (x.clone(), f.cod.identity[&f.ob_map[x]].clone()))
            .collect();
        NatTrans { dom: f.clone(), cod: f.clone(), components }
    }

    pub fn component(&self, x: &ObjId) -> Result<&MorId, CatError> {
        self.components.get(x).ok_or_else(|| CatError::UnknownObject(x.clone()))
    }

    /// The base category the components live in.
    pub fn base(&self) -> &FinCat {
        &self.dom.cod
    }
}

/// Exhaustive naturality validation: component boundaries and the
/// naturality square for every morphism of the domain.
pub fn validate_nattrans(a: &NatTrans) -> ValidationReport {
    let mut report = ValidationReport::new();
    if !a.dom.dom.structurally_equal(&a.cod.dom) || !a.dom.cod.structurally_equal(&a.cod.cod) {
        report.structural("dom and cod functors are not parallel".to_string());
        return report;
    }
    let base = a.base();
    for x in &a.dom.dom.objects {
        match a.components.get(x) {
            None => report.structural(format!("object `{x}` has no component")),
            Some(c) => {
                if base.mor(c).is_err() {
                    report.structural(format!("component `{c}` at `{x}` is unknown"));
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    for x in &a.dom.dom.objects {
        let c = base.mor(&a.components[x]).expect("checked above");
        let fx = &a.dom.ob_map[x];
        let gx = &a.cod.ob_map[x];
        if &c.src != fx || &c.tgt != gx {
            report.law(format!(
                "component at `{x}` is `{}` but must be a morphism `{fx}` -> `{gx}`",
                c.id
            ));
        }
    }
    if !report.is_valid() {
        return report;
    }
    for m in &a.dom.dom.morphisms {
        // F(m) ; a_tgt  =  a_src ; G(m)
        let left = base.compose(&a.dom.mor_map[&m.id], &a.components[&m.tgt]);
        let right = base.compose(&a.components[&m.src], &a.cod.mor_map[&m.id]);
        match (left, right) {
            (Ok(l), Ok(r)) if l == r => {}
            _ => report.law(format!("naturality square fails at `{}`", m.id)),
        }
    }
    report
}

/// Vertical composite of natural transformations: `a: F => G` then
/// `b: G => H`, componentwise in the codomain category.
pub fn vcompose_nattrans(a: &NatTrans, b: &NatTrans) -> Result<NatTrans, CatError> {
    if a.cod.ob_map != b.dom.ob_map || !a.base().structurally_equal(b.base()) {
        return Err(CatError::Shape("vertical composite: cod(a) != dom(b)".into()));
    }
    let base = a.base();
    let mut components = BTreeMap::new();
    for x in &a.dom.dom.objects {
        components.insert(x.clone(), base.compose(a.component(x)?, b.component(x)?)?);
    }
    Ok(NatTrans { dom: a.dom.clone(), cod: b.cod.clone(), components })
}

/// Whisker a transformation by a functor on the codomain side: for
/// `a: G => H : C -> D` and `f: D -> E`, the result is `Gf => Hf` with
/// components `f(a_X)`.
pub fn whisker_left(f: &Functor, a: &NatTrans) -> Result<NatTrans, CatError> {
    if !a.base().structurally_equal(&f.dom) {
        return Err(CatError::Shape("whisker_left: functor domain mismatch".into()));
    }
    let mut components = BTreeMap::new();
    for (x, c) in &a.components {
        components.insert(x.clone(), f.mor(c)?.clone());
    }
    Ok(NatTrans { dom: a.dom.then(f)?, cod: a.cod.then(f)?, components })
}

/// Whisker a transformation by a functor on the domain side: for
/// `a: G => H : C -> D` and `f: B -> C`, the result has components
/// `a_{f(X)}`.
pub fn whisker_right(a: &NatTrans, f: &Functor) -> Result<NatTrans, CatError> {
    if !f.cod.structurally_equal(&a.dom.dom) {
        return Err(CatError::Shape("whisker_right: functor codomain mismatch".into()));
    }
    let mut components = BTreeMap::new();
    for x in &f.dom.objects {
        components.insert(x.clone(), a.component(f.ob(x)?)?.clone());
    }
    Ok(NatTrans { dom: f.then(&a.dom)?, cod: f.then(&a.cod)?, components })
}

/// Horizontal composite of `a: F => G : C -> D` and `b: H => K : D -> E`,
/// with components `H(a_X) ; b_{G X}`.
pub fn hcompose_nattrans(a: &NatTrans, b: &NatTrans) -> Result<NatTrans, CatError> {
    let left = whisker_left(&b.dom, a)?;
    let right = whisker_right(b, &a.cod)?;
    vcompose_nattrans(&left, &right)
}

/// Build a thin category from a poset: one morphism `x<=y` per related
/// pair. The relation must be reflexive, transitive, and antisymmetric.
pub fn poset_category(elements: &[&str], leq: &[(&str, &str)]) -> Result<FinCat, CatError> {
    let elems: Vec<ObjId> = elements.iter().map(|e| ObjId::new(*e)).collect();
    let rel: BTreeSet<(ObjId, ObjId)> = leq
        .iter()
        .map(|(a, b)| (ObjId::new(*a), ObjId::new(*b)))
        .collect();
    for (a, b) in &rel {
        if !elems.contains(a) || !elems.contains(b) {
            return Err(CatError::NotPoset(format!("relation mentions unknown element in ({a}, {b})")));
        }
    }
    for x in &elems {
        if !rel.contains(&(x.clone(), x.clone())) {
            return Err(CatError::NotPoset(format!("not reflexive at {x}")));
        }
    }
    for (a, b) in &rel {
        for (c, d) in &rel {
            if b == c && !rel.contains(&(a.clone(), d.clone())) {
                return Err(CatError::NotPoset(format!("not transitive: {a} <= {b} <= {d}")));
            }
        }
        if a != b && rel.contains(&(b.clone(), a.clone())) {
            return Err(CatError::NotPoset(format!("not antisymmetric on ({a}, {b})")));
        }
    }
    let mor_id = |a: &ObjId, b: &ObjId| MorId(format!("{a}<={b}"));
    let morphisms: Vec<Mor> = rel
        .iter()
        .map(|(a, b)| Mor { id: mor_id(a, b), src: a.clone(), tgt: b.clone() })
        .collect();
    let identity = elems.iter().map(|x| (x.clone(), mor_id(x, x))).collect();
    let mut comp = BTreeMap::new();
    for (a, b) in &rel {
        for (c, d) in &rel {
            if b == c {
                comp.insert((mor_id(a, b), mor_id(c, d)), mor_id(a, d));
            }
        }
    }
    Ok(FinCat { objects: elems, morphisms, identity, comp })
}

/// Chain poset 0 < 1 < ... < n-1.
pub fn chain(n: usize) -> FinCat {
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let elements: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let mut leq = Vec::new();
    for i in 0..n {
        for j in i..n {
            leq.push((elements[i], elements[j]));
        }
    }
    poset_category(&elements, &leq).expect("chain is a poset")
}

/// Identifier of the arrow-category morphism `(a, b): f -> g`.
pub fn arrow_mor_id(f: &MorId, g: &MorId, a: &MorId, b: &MorId) -> MorId {
    MorId(format!("[{a},{b}]:{f}->{g}"))
}

/// The arrow category: objects are morphisms of `c`, morphisms are
/// commuting squares, composed componentwise.
pub fn arrow_category(c: &FinCat) -> Result<FinCat, CatError> {
    let objects: Vec<ObjId> = c.morphisms.iter().map(|m| ObjId(m.id.0.clone())).collect();
    let mut morphisms = Vec::new();
    let mut comp = BTreeMap::new();
    // squares (a, b): f -> g with f;b = a;g
    let mut squares: Vec<(MorId, MorId, MorId, MorId)> = Vec::new();
    for f in &c.morphisms {
        for g in &c.morphisms {
            for a in c.hom(&f.src, &g.src) {
                for b in c.hom(&f.tgt, &g.tgt) {
                    if c.compose(&f.id, b)? == c.compose(a, &g.id)? {
                        squares.push((f.id.clone(), g.id.clone(), a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    for (f, g, a, b) in &squares {
        morphisms.push(Mor {
            id: arrow_mor_id(f, g, a, b),
            src: ObjId(f.0.clone()),
            tgt: ObjId(g.0.clone()),
        });
    }
    let identity: BTreeMap<ObjId, MorId> = c
        .morphisms
        .iter()
        .map(|m| {
            let ia = c.identity[&m.src].clone();
            let ib = c.identity[&m.tgt].clone();
            (ObjId(m.id.0.clone()), arrow_mor_id(&m.id, &m.id, &ia, &ib))
        })
        .collect();
    for (f, g, a, b) in &squares {
        for (g2, h, a2, b2) in &squares {
            if g == g2 {
                let ca = c.compose(a, a2)?;
                let cb = c.compose(b, b2)?;
                comp.insert(
                    (arrow_mor_id(f, g, a, b), arrow_mor_id(g2, h, a2, b2)),
                    arrow_mor_id(f, h, &ca, &cb),
                );
            }
        }
    }
    Ok(FinCat { objects, morphisms, identity, comp })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_poset_is_valid() {
        let c = chain(3);
        assert_eq!(c.objects.len(), 3);
        assert_eq!(c.morphisms.len(), 6);
        assert!(validate_category(&c).is_valid());
    }

    #[test]
    fn compose_in_chain() {
        let c = chain(3);
        let f = MorId::new("0<=1");
        let g = MorId::new("1<=2");
        assert_eq!(c.compose(&f, &g).unwrap(), MorId::new("0<=2"));
        let id0 = c.id(&ObjId::new("0")).unwrap().clone();
        assert_eq!(c.compose(&id0, &f).unwrap(), f);
        let f02 = MorId::new("0<=2");
        let id2 = c.id(&ObjId::new("2")).unwrap().clone();
        assert_eq!(c.compose(&f02, &id2).unwrap(), f02);
        assert!(matches!(c.compose(&g, &f), Err(CatError::NotComposable(_, _))));
    }

    #[test]
    fn missing_composite_is_reported() {
        let mut c = chain(3);
        c.comp.remove(&(MorId::new("0<=1"), MorId::new("1<=2")));
        let report = validate_category(&c);
        assert!(!report.is_valid());
        assert!(report.messages().iter().any(|m| m.contains("missing composite")));
    }

    #[test]
    fn broken_associativity_names_the_triple() {
        // Free-ish table on one object with morphisms {1, t}, t;t = t but
        // corrupt one associativity instance by making t;t depend on order.
        let x = ObjId::new("x");
        let c = FinCat {
            objects: vec![x.clone()],
            morphisms: vec![
                Mor { id: MorId::new("1"), src: x.clone(), tgt: x.clone() },
                Mor { id: MorId::new("t"), src: x.clone(), tgt: x.clone() },
                Mor { id: MorId::new("u"), src: x.clone(), tgt: x.clone() },
            ],
            identity: [(x.clone(), MorId::new("1"))].into(),
            comp: [
                ((MorId::new("1"), MorId::new("1")), MorId::new("1")),
                ((MorId::new("1"), MorId::new("t")), MorId::new("t")),
                ((MorId::new("t"), MorId::new("1")), MorId::new("t")),
                ((MorId::new("1"), MorId::new("u")), MorId::new("u")),
                ((MorId::new("u"), MorId::new("1")), MorId::new("u")),
                ((MorId::new("t"), MorId::new("t")), MorId::new("u")),
                ((MorId::new("t"), MorId::new("u")), MorId::new("t")),
                ((MorId::new("u"), MorId::new("t")), MorId::new("u")),
                ((MorId::new("u"), MorId::new("u")), MorId::new("u")),
            ]
            .into(),
        };
        let report = validate_category(&c);
        assert!(!report.is_valid());
        // Independent oracle: re-check all triples by a triple loop.
        let mors = ["1", "t", "u"].map(MorId::new);
        let mut bad = Vec::new();
        for f in &mors {
            for g in &mors {
                for h in &mors {
                    let fg = &c.comp[&(f.clone(), g.clone())];
                    let gh = &c.comp[&(g.clone(), h.clone())];
                    if c.comp[&(fg.clone(), h.clone())] != c.comp[&(f.clone(), gh.clone())] {
                        bad.push(format!("(`{f}`, `{g}`, `{h}`)"));
                    }
                }
            }
        }
        assert!(!bad.is_empty());
        let msgs = report.messages();
        for b in &bad {
            assert!(msgs.iter().any(|m| m.contains("associativity") && m.contains(b)), "{b} not reported");
        }
        let reported = msgs.iter().filter(|m| m.contains("associativity")).count();
        assert_eq!(reported, bad.len());
    }

    #[test]
    fn monotone_map_is_a_functor() {
        let c = chain(3);
        // x -> min(x+1, 2)
        let f = Functor {
            dom: c.clone(),
            cod: c.clone(),
            ob_map: [
                (ObjId::new("0"), ObjId::new("1")),
                (ObjId::new("1"), ObjId::new("2")),
                (ObjId::new("2"), ObjId::new("2")),
            ]
            .into(),
            mor_map: c
                .morphisms
                .iter()
                .map(|m| {
                    let s = if m.src.0 == "0" { "1" } else { "2" };
                    let t = if m.tgt.0 == "0" { "1" } else { "2" };
                    (m.id.clone(), MorId(format!("{s}<={t}")))
                })
                .collect(),
        };
        assert!(validate_functor(&f).is_valid());
    }

    #[test]
    fn non_monotone_ob_map_fails() {
        // poset {bot < a, bot < b}; send bot -> a, keep a, b.
        let v = poset_category(
            &["bot", "a", "b"],
            &[("bot", "bot"), ("a", "a"), ("b", "b"), ("bot", "a"), ("bot", "b")],
        )
        .unwrap();
        let mut mor_map = BTreeMap::new();
        for m in &v.morphisms {
            let s = if m.src.0 == "bot" { "a" } else { m.src.0.as_str() };
            let t = if m.tgt.0 == "bot" { "a" } else { m.tgt.0.as_str() };
            // images may not exist; point at a placeholder and let validation flag it
            mor_map.insert(m.id.clone(), MorId(format!("{s}<={t}")));
        }
        let f = Functor {
            dom: v.clone(),
            cod: v.clone(),
            ob_map: [
                (ObjId::new("bot"), ObjId::new("a")),
                (ObjId::new("a"), ObjId::new("a")),
                (ObjId::new("b"), ObjId::new("b")),
            ]
            .into(),
            mor_map,
        };
        let report = validate_functor(&f);
        assert!(!report.is_valid());
        // oracle: the ob_map is not monotone on bot <= b (no a <= b)
        assert!(report.messages().iter().any(|m| m.contains("bot<=b")));
    }

    #[test]
    fn identity_nattrans_is_valid() {
        let c = chain(3);
        let f = Functor::identity(&c);
        let a = NatTrans::identity(&f);
        assert!(validate_nattrans(&a).is_valid());
    }

    #[test]
    fn poset_constructors() {
        let anti = poset_category(&["a", "b"], &[("a", "a"), ("b", "b")]).unwrap();
        assert_eq!(anti.morphisms.len(), 2);
        assert!(validate_category(&anti).is_valid());
        let bad = poset_category(
            &["a", "b", "c"],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")],
        );
        assert!(matches!(bad, Err(CatError::NotPoset(_))));
    }

    #[test]
    fn arrow_category_of_chain() {
        let c = chain(3);
        let ac = arrow_category(&c).unwrap();
        assert_eq!(ac.objects.len(), 6);
        assert!(validate_category(&ac).is_valid());
        // oracle: enumerate all 4-tuples and test commutativity directly
        let mut count = 0usize;
        for f in &c.morphisms {
            for g in &c.morphisms {
                for a in &c.morphisms {
                    for b in &c.morphisms {
                        if a.src == f.src && a.tgt == g.src && b.src == f.tgt && b.tgt == g.tgt {
                            let l = c.comp.get(&(f.id.clone(), b.id.clone()));
                            let r = c.comp.get(&(a.id.clone(), g.id.clone()));
                            if l.is_some() && l == r {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(ac.morphisms.len(), count);
    }

    #[test]
    fn arrow_category_of_point_is_terminal() {
        let p = poset_category(&["x"], &[("x", "x")]).unwrap();
        let ap = arrow_category(&p).unwrap();
        assert_eq!(ap.objects.len(), 1);
        assert_eq!(ap.morphisms.len(), 1);
    }

    #[test]
    fn arrow_category_of_monoid() {
        // Z/2 as a one-object category.
        let x = ObjId::new("x");
        let c = FinCat {
            objects: vec![x.clone()],
            morphisms: vec![
                Mor { id: MorId::new("1"), src: x.clone(), tgt: x.clone() },
                Mor { id: MorId::new("t"), src: x.clone(), tgt: x.clone() },
            ],
            identity: [(x.clone(), MorId::new("1"))].into(),
            comp: [
                ((MorId::new("1"), MorId::new("1")), MorId::new("1")),
                ((MorId::new("1"), MorId::new("t")), MorId::new("t")),
                ((MorId::new("t"), MorId::new("1")), MorId::new("t")),
                ((MorId::new("t"), MorId::new("t")), MorId::new("1")),
            ]
            .into(),
        };
        assert!(validate_category(&c).is_valid());
        let ac = arrow_category(&c).unwrap();
        // objects = monoid elements
        assert_eq!(ac.objects.len(), 2);
        assert!(validate_category(&ac).is_valid());
        // oracle: direct enumeration of commuting squares a;g = f;b
        let mut count = 0;
        for f in ["1", "t"] {
            for g in ["1", "t"] {
                for a in ["1", "t"] {
                    for b in ["1", "t"] {
                        let l = &c.comp[&(MorId::new(f), MorId::new(b))];
                        let r = &c.comp[&(MorId::new(a), MorId::new(g))];
                        if l == r {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(ac.morphisms.len(), count);
    }

    #[test]
    fn whisker_and_compose_identities() {
        let c = chain(3);
        let f = Functor::identity(&c);
        let idf = NatTrans::identity(&f);
        let v = vcompose_nattrans(&idf, &idf).unwrap();
        assert_eq!(v, idf);
        let h = hcompose_nattrans(&idf, &idf).unwrap();
        assert_eq!(h.components, idf.components);
    }
}
