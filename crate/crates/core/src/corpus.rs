//! A small shared zoo of finite categories, monads, and distributive
//! laws used by tests and examples: chains, the diamond lattice, closure
//! operators as monads on posets, and the arrow-category monad.

use std::collections::BTreeMap;

use crate::fincat::{chain, poset_category, FinCat, Functor, MorId, ObjId};
use crate::monad::{DistributiveLaw, Monad};

/// The diamond lattice `bot < a, b < top` with `a` and `b` incomparable.
pub fn diamond() -> FinCat {
    poset_category(
        &["bot", "a", "b", "top"],
        &[
            ("bot", "bot"),
            ("a", "a"),
            ("b", "b"),
            ("top", "top"),
            ("bot", "a"),
            ("bot", "b"),
            ("bot", "top"),
            ("a", "top"),
            ("b", "top"),
        ],
    )
    .expect("diamond is a poset")
}

/// A closure operator on a thin category, packaged as a monad.
///
/// `map` assigns to each object its closure. Components that do not exist
/// in the category (a non-monotone image, a non-inflationary unit, a
/// non-idempotent multiplication) are simply omitted so that monad
/// validation reports exactly which law fails and where.
pub fn closure_monad(c: &FinCat, map: &[(&str, &str)]) -> Monad {
    let cl: BTreeMap<ObjId, ObjId> = map
        .iter()
        .map(|(x, y)| (ObjId::new(*x), ObjId::new(*y)))
        .collect();
    let ob_map: BTreeMap<ObjId, ObjId> = c
        .objects
        .iter()
        .map(|x| (x.clone(), cl[x].clone()))
        .collect();
    let mut mor_map = BTreeMap::new();
    for m in &c.morphisms {
        if let Some(f) = c.hom(&ob_map[&m.src], &ob_map[&m.tgt]).first() {
            mor_map.insert(m.id.clone(), (*f).clone());
        }
    }
    let endo = Functor { dom: c.clone(), cod: c.clone(), ob_map: ob_map.clone(), mor_map };
    let mut unit = BTreeMap::new();
    let mut mult = BTreeMap::new();
    for x in &c.objects {
        let cx = &ob_map[x];
        if let Some(f) = c.hom(x, cx).first() {
            unit.insert(x.clone(), (*f).clone());
        }
        let ccx = &ob_map[cx];
        if let Some(f) = c.hom(ccx, cx).first() {
            mult.insert(x.clone(), (*f).clone());
        }
    }
    Monad { base: c.clone(), endo, unit, mult }
}

/// The "everything closes to the top" operator on the `n`-chain.
pub fn constant_top(n: usize) -> Monad {
    let c = chain(n);
    let top = (n - 1).to_string();
    let map: Vec<(String, String)> = (0..n).map(|i| (i.to_string(), top.clone())).collect();
    let borrowed: Vec<(&str, &str)> = map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    closure_monad(&c, &borrowed)
}

/// The closure `0 -> 1, 1 -> 1, 2 -> 2` on the 3-chain.
pub fn step_up3() -> Monad {
    closure_monad(&chain(3), &[("0", "1"), ("1", "1"), ("2", "2")])
}

/// Constant-top closure on the diamond lattice.
pub fn diamond_top() -> Monad {
    let d = diamond();
    closure_monad(&d, &[("bot", "top"), ("a", "top"), ("b", "top"), ("top", "top")])
}

/// Round odd elements up to the next even element on the 4-chain:
/// `0 -> 0, 1 -> 2, 2 -> 2, 3 -> 3`.
pub fn round_up4() -> Monad {
    closure_monad(&chain(4), &[("0", "0"), ("1", "2"), ("2", "2"), ("3", "3")])
}

/// The self-distributive law of the constant-top closure over itself:
/// both composites land on the top element, so `lambda` is the identity
/// there.
pub fn constant_top_self_law(n: usize) -> DistributiveLaw {
    let t = constant_top(n);
    let p = t.clone();
    let lam: BTreeMap<ObjId, MorId> = t
        .base
        .objects
        .iter()
        .map(|x| {
            let tpx = &t.endo.ob_map[&p.endo.ob_map[x]];
            (x.clone(), t.base.identity[tpx].clone())
        })
        .collect();
    DistributiveLaw { t, p, lam }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_category;
    use crate::monad::validate_monad;

    #[test]
    fn fixtures_validate() {
        assert!(validate_category(&diamond()).is_valid());
        for m in [constant_top(2), constant_top(3), step_up3(), diamond_top(), round_up4()] {
            assert!(validate_monad(&m).is_valid());
        }
    }
}
