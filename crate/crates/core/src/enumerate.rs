//! Budgeted brute-force enumeration of functors, natural
//! transformations, monad morphisms, Kleisli 2-cells, and double
//! functors over finite categories.
//!
//! Every search carries a [`Budget`]; an exhausted budget yields a
//! truncated enumeration that callers must surface as inconclusive,
//! never as a silent pass.

use std::collections::BTreeMap;

use crate::double::{DoubleCategory, DoubleFunctor};
use crate::fincat::{validate_functor, validate_nattrans, FinCat, Functor, MorId, NatTrans, ObjId};
use crate::monad::{
    validate_kl_2cell, validate_monad_2cell, validate_monad_morphism, KlTwoCell, Monad,
    MonadMorphism, MonadTwoCell,
};

/// A candidate-evaluation budget shared across one search.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

/// Default budget: one million candidate evaluations.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

impl Budget {
    pub fn new(limit: u64) -> Budget {
        Budget { limit, used: 0 }
    }

    /// Spend `n` evaluations; returns false once the limit is exceeded.
    pub fn charge(&mut self, n: u64) -> bool {
        self.used = self.used.saturating_add(n);
        self.used <= self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.used > self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

/// The result of a budgeted search: `complete` is false when the budget
/// ran out before the space was covered.
#[derive(Debug, Clone)]
pub struct Enumeration<T> {
    pub items: Vec<T>,
    pub complete: bool,
}

/// Visit the cartesian product of the choice lists in declared order.
/// Each emitted tuple costs one budget unit. Returns false if truncated.
fn product<T: Clone>(
    choices: &[Vec<T>],
    budget: &mut Budget,
    emit: &mut dyn FnMut(&[T]),
) -> bool {
    if choices.iter().any(|c| c.is_empty()) {
        return true;
    }
    let mut idx = vec![0usize; choices.len()];
    let mut current: Vec<T> = choices.iter().map(|c| c[0].clone()).collect();
    loop {
        if !budget.charge(1) {
            return false;
        }
        emit(&current);
        let mut pos = choices.len();
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                current[pos] = choices[pos][idx[pos]].clone();
                break;
            }
            idx[pos] = 0;
            current[pos] = choices[pos][0].clone();
        }
    }
}

/// All functors `dom -> cod`, by exhaustive assignment of object and
/// morphism images filtered through `validate_functor`.
pub fn enumerate_functors(dom: &FinCat, cod: &FinCat, budget: &mut Budget) -> Enumeration<Functor> {
    let mut items = Vec::new();
    let ob_choices: Vec<Vec<ObjId>> = dom.objects.iter().map(|_| cod.objects.clone()).collect();
    let mut ob_tuples: Vec<Vec<ObjId>> = Vec::new();
    product(&ob_choices, budget, &mut |obs| ob_tuples.push(obs.to_vec()));
    for obs in &ob_tuples {
        let ob_map: BTreeMap<ObjId, ObjId> = dom
            .objects
            .iter()
            .cloned()
            .zip(obs.iter().cloned())
            .collect();
        let mor_choices: Vec<Vec<MorId>> = dom
            .morphisms
            .iter()
            .map(|m| {
                cod.hom(&ob_map[&m.src], &ob_map[&m.tgt])
                    .into_iter()
                    .cloned()
                    .collect()
            })
            .collect();
        product(&mor_choices, budget, &mut |mors| {
            let mor_map: BTreeMap<MorId, MorId> = dom
                .morphisms
                .iter()
                .map(|m| m.id.clone())
                .zip(mors.iter().cloned())
                .collect();
            let f = Functor { dom: dom.clone(), cod: cod.clone(), ob_map: ob_map.clone(), mor_map };
            if validate_functor(&f).is_valid() {
                items.push(f);
            }
        });
    }
    Enumeration { items, complete: !budget.exhausted() }
}

/// All natural transformations between two parallel functors.
pub fn enumerate_nattrans(f: &Functor, g: &Functor, budget: &mut Budget) -> Enumeration<NatTrans> {
    let base = &f.cod;
    let choices: Vec<Vec<MorId>> = f
        .dom
        .objects
        .iter()
        .map(|x| base.hom(&f.ob_map[x], &g.ob_map[x]).into_iter().cloned().collect())
        .collect();
    let mut items = Vec::new();
    let complete = product(&choices, budget, &mut |comps| {
        let components: BTreeMap<ObjId, MorId> = f
            .dom
            .objects
            .iter()
            .cloned()
            .zip(comps.iter().cloned())
            .collect();
        let a = NatTrans { dom: f.clone(), cod: g.clone(), components };
        if validate_nattrans(&a).is_valid() {
            items.push(a);
        }
    });
    Enumeration { items, complete }
}

/// All monad morphisms `p -> q`, by pairing every functor between the
/// bases with every shape-correct `xi` and validating.
pub fn enumerate_monad_morphisms(
    p: &Monad,
    q: &Monad,
    budget: &mut Budget,
) -> Enumeration<MonadMorphism> {
    let functors = enumerate_functors(&p.base, &q.base, budget);
    let mut items = Vec::new();
    for f in &functors.items {
        let xi_choices: Vec<Vec<MorId>> = p
            .base
            .objects
            .iter()
            .map(|x| {
                let fpx = &f.ob_map[&p.endo.ob_map[x]];
                let qfx = &q.endo.ob_map[&f.ob_map[x]];
                q.base.hom(fpx, qfx).into_iter().cloned().collect()
            })
            .collect();
        product(&xi_choices, budget, &mut |xis| {
            let xi: BTreeMap<ObjId, MorId> = p
                .base
                .objects
                .iter()
                .cloned()
                .zip(xis.iter().cloned())
                .collect();
            let mm = MonadMorphism { dom: p.clone(), cod: q.clone(), f: f.clone(), xi };
            if validate_monad_morphism(&mm).is_valid() {
                items.push(mm);
            }
        });
    }
    Enumeration { items, complete: functors.complete && !budget.exhausted() }
}

/// All Kleisli 2-cells between two parallel monad morphisms.
pub fn enumerate_kl_twocells(
    a: &MonadMorphism,
    b: &MonadMorphism,
    budget: &mut Budget,
) -> Enumeration<KlTwoCell> {
    let q = &a.cod;
    let choices: Vec<Vec<MorId>> = a
        .dom
        .base
        .objects
        .iter()
        .map(|x| {
            let fx = &a.f.ob_map[x];
            let qgx = &q.endo.ob_map[&b.f.ob_map[x]];
            q.base.hom(fx, qgx).into_iter().cloned().collect()
        })
        .collect();
    let mut items = Vec::new();
    let complete = product(&choices, budget, &mut |comps| {
        let alpha: BTreeMap<ObjId, MorId> = a
            .dom
            .base
            .objects
            .iter()
            .cloned()
            .zip(comps.iter().cloned())
            .collect();
        let cell = KlTwoCell { dom: a.clone(), cod: b.clone(), alpha };
        if validate_kl_2cell(&cell).is_valid() {
            items.push(cell);
        }
    });
    Enumeration { items, complete }
}

/// All monad 2-cells between two parallel monad morphisms.
pub fn enumerate_monad_twocells(
    a: &MonadMorphism,
    b: &MonadMorphism,
    budget: &mut Budget,
) -> Enumeration<MonadTwoCell> {
    let q = &a.cod;
    let choices: Vec<Vec<MorId>> = a
        .dom
        .base
        .objects
        .iter()
        .map(|x| {
            q.base
                .hom(&a.f.ob_map[x], &b.f.ob_map[x])
                .into_iter()
                .cloned()
                .collect()
        })
        .collect();
    let mut items = Vec::new();
    let complete = product(&choices, budget, &mut |comps| {
        let alpha: BTreeMap<ObjId, MorId> = a
            .dom
            .base
            .objects
            .iter()
            .cloned()
            .zip(comps.iter().cloned())
            .collect();
        let cell = MonadTwoCell { dom: a.clone(), cod: b.clone(), alpha };
        if validate_monad_2cell(&cell).is_valid() {
            items.push(cell);
        }
    });
    Enumeration { items, complete }
}

/// All double functors between double categories with property-like
/// squares: pairs of a horizontal and a vertical functor sharing the
/// object map, with the square map forced by boundary lookup.
pub fn enumerate_double_functors(
    dom: &DoubleCategory,
    cod: &DoubleCategory,
    budget: &mut Budget,
) -> Enumeration<DoubleFunctor> {
    let hfunctors = enumerate_functors(&dom.hcat, &cod.hcat, budget);
    let mut items = Vec::new();
    for h in &hfunctors.items {
        let v_choices: Vec<Vec<MorId>> = dom
            .vcat
            .morphisms
            .iter()
            .map(|m| {
                cod.vcat
                    .hom(&h.ob_map[&m.src], &h.ob_map[&m.tgt])
                    .into_iter()
                    .cloned()
                    .collect()
            })
            .collect();
        product(&v_choices, budget, &mut |vs| {
            let vmor_map: BTreeMap<MorId, MorId> = dom
                .vcat
                .morphisms
                .iter()
                .map(|m| m.id.clone())
                .zip(vs.iter().cloned())
                .collect();
            let mut sq_map = BTreeMap::new();
            for s in &dom.squares {
                let img = cod.square_by_boundary(
                    &h.mor_map[&s.top],
                    &h.mor_map[&s.bottom],
                    &vmor_map[&s.left],
                    &vmor_map[&s.right],
                );
                match img {
                    Some(t) => {
                        sq_map.insert(s.id.clone(), t.id.clone());
                    }
                    None => return,
                }
            }
            let f = DoubleFunctor {
                dom: dom.clone(),
                cod: cod.clone(),
                ob_map: h.ob_map.clone(),
                hmor_map: h.mor_map.clone(),
                vmor_map,
                sq_map,
            };
            if crate::double::validate_double_functor(&f).is_valid() {
                items.push(f);
            }
        });
    }
    Enumeration { items, complete: hfunctors.complete && !budget.exhausted() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::double::squares_double_category;
    use crate::fincat::chain;

    #[test]
    fn monotone_self_maps_of_chain3() {
        // oracle: monotone maps [3] -> [3] number C(5, 3) = 10
        let c = chain(3);
        let mut budget = Budget::new(DEFAULT_BUDGET);
        let fs = enumerate_functors(&c, &c, &mut budget);
        assert!(fs.complete);
        assert_eq!(fs.items.len(), 10);
    }

    #[test]
    fn monad_morphisms_of_constant_top_self_pair() {
        // each monotone self-map admits exactly one xi on the thin base
        let m = corpus::constant_top(3);
        let mut budget = Budget::new(DEFAULT_BUDGET);
        let mms = enumerate_monad_morphisms(&m, &m, &mut budget);
        assert!(mms.complete);
        assert_eq!(mms.items.len(), 10);
    }

    #[test]
    fn exhausted_budget_is_reported() {
        let c = chain(3);
        let mut budget = Budget::new(3);
        let fs = enumerate_functors(&c, &c, &mut budget);
        assert!(!fs.complete);
        assert!(budget.exhausted());
    }

    #[test]
    fn nattrans_between_identity_functors_of_a_poset() {
        // components are forced: exactly one natural transformation
        let c = chain(2);
        let f = crate::fincat::Functor::identity(&c);
        let mut budget = Budget::new(DEFAULT_BUDGET);
        let nts = enumerate_nattrans(&f, &f, &mut budget);
        assert!(nts.complete);
        assert_eq!(nts.items.len(), 1);
    }

    #[test]
    fn double_functors_include_the_identity() {
        let d = squares_double_category(&chain(2)).unwrap();
        let mut budget = Budget::new(DEFAULT_BUDGET);
        let dfs = enumerate_double_functors(&d, &d, &mut budget);
        assert!(dfs.complete);
        let id = DoubleFunctor::identity(&d);
        assert!(dfs.items.iter().any(|f| f.ob_map == id.ob_map
            && f.hmor_map == id.hmor_map
            && f.vmor_map == id.vmor_map
            && f.sq_map == id.sq_map));
    }
}
