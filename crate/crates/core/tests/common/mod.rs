//! Shared corpus and independent brute-force oracles for the
//! integration suites. The oracles re-evaluate every law diagram with
//! raw table lookups and deliberately share no logic with the
//! validators they cross-check.

use std::collections::BTreeMap;

use nervecheck::fincat::{chain, FinCat, MorId, ObjId};
use nervecheck::monad::{arrow_monad, KlTwoCell, Monad, MonadMorphism};
use nervecheck::corpus;

/// The standard monad corpus: identity monads on one- to four-object
/// categories, four poset closure operators, and an arrow monad.
pub fn corpus_monads() -> Vec<Monad> {
    let mut out = vec![
        Monad::identity(&chain(1)),
        Monad::identity(&chain(2)),
        Monad::identity(&chain(3)),
        Monad::identity(&chain(4)),
        corpus::constant_top(3),
        corpus::step_up3(),
        corpus::diamond_top(),
        corpus::round_up4(),
    ];
    out.push(arrow_monad(&corpus::constant_top(2)).expect("arrow monad builds"));
    out
}

fn look<'a>(c: &'a FinCat, f: &MorId, g: &MorId) -> Option<&'a MorId> {
    c.comp.get(&(f.clone(), g.clone()))
}

fn mor_src_tgt<'a>(c: &'a FinCat, f: &MorId) -> Option<(&'a ObjId, &'a ObjId)> {
    c.morphisms.iter().find(|m| &m.id == f).map(|m| (&m.src, &m.tgt))
}

/// Independent monad-law oracle: raw table lookups only.
pub fn oracle_monad(m: &Monad) -> bool {
    let c = &m.base;
    // endofunctor: total and shape-correct on objects and morphisms
    for x in &c.objects {
        let Some(px) = m.endo.ob_map.get(x) else { return false };
        if !c.objects.contains(px) {
            return false;
        }
        let Some(idx) = c.identity.get(x) else { return false };
        if m.endo.mor_map.get(idx) != c.identity.get(px) {
            return false;
        }
    }
    for mor in &c.morphisms {
        let Some(pf) = m.endo.mor_map.get(&mor.id) else { return false };
        let Some((s, t)) = mor_src_tgt(c, pf) else { return false };
        if Some(s) != m.endo.ob_map.get(&mor.src) || Some(t) != m.endo.ob_map.get(&mor.tgt) {
            return false;
        }
    }
    for ((f, g), fg) in &c.comp {
        let (Some(pf), Some(pg), Some(pfg)) = (
            m.endo.mor_map.get(f),
            m.endo.mor_map.get(g),
            m.endo.mor_map.get(fg),
        ) else {
            return false;
        };
        if look(c, pf, pg) != Some(pfg) {
            return false;
        }
    }
    // unit and mult: shape, naturality, monad laws
    for x in &c.objects {
        let px = &m.endo.ob_map[x];
        let ppx = &m.endo.ob_map[px];
        let (Some(eta), Some(mu)) = (m.unit.get(x), m.mult.get(x)) else { return false };
        let Some((es, et)) = mor_src_tgt(c, eta) else { return false };
        if es != x || et != px {
            return false;
        }
        let Some((ms, mt)) = mor_src_tgt(c, mu) else { return false };
        if ms != ppx || mt != px {
            return false;
        }
        // unit laws
        let eta_px = m.unit.get(px);
        let p_eta = m.endo.mor_map.get(eta);
        let id_px = c.identity.get(px);
        if eta_px.and_then(|e| look(c, e, mu)) != id_px.map(|v| v)
            || p_eta.and_then(|e| look(c, e, mu)) != id_px.map(|v| v)
        {
            return false;
        }
        // associativity
        let p_mu = m.endo.mor_map.get(mu);
        let mu_px = m.mult.get(px);
        let l = p_mu.and_then(|a| look(c, a, mu));
        let r = mu_px.and_then(|a| look(c, a, mu));
        if l.is_none() || l != r {
            return false;
        }
    }
    for mor in &c.morphisms {
        let pf = &m.endo.mor_map[&mor.id];
        // unit naturality
        let l = look(c, &m.unit[&mor.src], pf);
        let r = look(c, &mor.id, &m.unit[&mor.tgt]);
        if l.is_none() || l != r {
            return false;
        }
        // mult naturality
        let ppf = &m.endo.mor_map[pf];
        let l = look(c, &m.mult[&mor.src], pf);
        let r = look(c, ppf, &m.mult[&mor.tgt]);
        if l.is_none() || l != r {
            return false;
        }
    }
    true
}

/// Independent monad-morphism oracle.
pub fn oracle_monad_morphism(mm: &MonadMorphism) -> bool {
    let (p, q) = (&mm.dom, &mm.cod);
    let d = &q.base;
    // functor laws
    for x in &p.base.objects {
        let Some(fx) = mm.f.ob_map.get(x) else { return false };
        if mm.f.mor_map.get(&p.base.identity[x]) != d.identity.get(fx) {
            return false;
        }
    }
    for mor in &p.base.morphisms {
        let Some(ff) = mm.f.mor_map.get(&mor.id) else { return false };
        let Some((s, t)) = mor_src_tgt(d, ff) else { return false };
        if Some(s) != mm.f.ob_map.get(&mor.src) || Some(t) != mm.f.ob_map.get(&mor.tgt) {
            return false;
        }
    }
    for ((f, g), fg) in &p.base.comp {
        let l = look(d, &mm.f.mor_map[f], &mm.f.mor_map[g]);
        if l != mm.f.mor_map.get(fg) {
            return false;
        }
    }
    for x in &p.base.objects {
        let Some(xi) = mm.xi.get(x) else { return false };
        let fx = &mm.f.ob_map[x];
        let fpx = &mm.f.ob_map[&p.endo.ob_map[x]];
        let qfx = &q.endo.ob_map[fx];
        let Some((s, t)) = mor_src_tgt(d, xi) else { return false };
        if s != fpx || t != qfx {
            return false;
        }
        // triangle: F(eta_P) ; xi = eta_Q at FX
        let l = look(d, &mm.f.mor_map[&p.unit[x]], xi);
        if l != q.unit.get(fx) {
            return false;
        }
        // pentagon: F(mu_P) ; xi = xi_PX ; Q(xi) ; mu_Q at FX
        let l = look(d, &mm.f.mor_map[&p.mult[x]], xi);
        let r = look(d, &mm.xi[&p.endo.ob_map[x]], &q.endo.mor_map[xi])
            .and_then(|a| look(d, a, &q.mult[fx]));
        if l.is_none() || l != r {
            return false;
        }
    }
    // naturality of xi
    for mor in &p.base.morphisms {
        let fpf = &mm.f.mor_map[&p.endo.mor_map[&mor.id]];
        let qff = &q.endo.mor_map[&mm.f.mor_map[&mor.id]];
        let l = look(d, fpf, &mm.xi[&mor.tgt]);
        let r = look(d, &mm.xi[&mor.src], qff);
        if l.is_none() || l != r {
            return false;
        }
    }
    true
}

/// Independent Kleisli 2-cell oracle.
pub fn oracle_kl_2cell(cell: &KlTwoCell) -> bool {
    let (a, b) = (&cell.dom, &cell.cod);
    let q = &a.cod;
    let d = &q.base;
    for x in &a.dom.base.objects {
        let Some(al) = cell.alpha.get(x) else { return false };
        let fx = &a.f.ob_map[x];
        let qgx = &q.endo.ob_map[&b.f.ob_map[x]];
        let Some((s, t)) = mor_src_tgt(d, al) else { return false };
        if s != fx || t != qgx {
            return false;
        }
        // xi ; Q(alpha) ; mu = alpha_P ; Q(xi') ; mu
        let px = &a.dom.endo.ob_map[x];
        let l = look(d, &a.xi[x], &q.endo.mor_map[al]).and_then(|m| look(d, m, &q.mult[&b.f.ob_map[x]]));
        let r = look(d, &cell.alpha[px], &q.endo.mor_map[&b.xi[x]])
            .and_then(|m| look(d, m, &q.mult[&b.f.ob_map[x]]));
        if l.is_none() || l != r {
            return false;
        }
    }
    // naturality of alpha
    for mor in &a.dom.base.morphisms {
        let ff = &a.f.mor_map[&mor.id];
        let qgf = &q.endo.mor_map[&b.f.mor_map[&mor.id]];
        let l = look(d, ff, &cell.alpha[&mor.tgt]);
        let r = look(d, &cell.alpha[&mor.src], qgf);
        if l.is_none() || l != r {
            return false;
        }
    }
    true
}

/// Every single-entry corruption of the unit, mult, and endofunctor
/// tables of a monad, plus the original.
pub fn monad_candidates(m: &Monad) -> Vec<Monad> {
    let mut out = vec![m.clone()];
    let keys: Vec<ObjId> = m.base.objects.clone();
    for x in &keys {
        for alt in &m.base.morphisms {
            if m.unit.get(x) != Some(&alt.id) {
                let mut c = m.clone();
                c.unit.insert(x.clone(), alt.id.clone());
                out.push(c);
            }
            if m.mult.get(x) != Some(&alt.id) {
                let mut c = m.clone();
                c.mult.insert(x.clone(), alt.id.clone());
                out.push(c);
            }
        }
    }
    let mor_keys: Vec<MorId> = m.endo.mor_map.keys().cloned().collect();
    for f in &mor_keys {
        for alt in &m.base.morphisms {
            if m.endo.mor_map.get(f) != Some(&alt.id) {
                let mut c = m.clone();
                c.endo.mor_map.insert(f.clone(), alt.id.clone());
                out.push(c);
            }
        }
    }
    out
}

/// All shape-correct `(F, xi)` candidates between two monads, generated
/// with plain nested loops (independent of the enumerate module).
pub fn monad_morphism_candidates(p: &Monad, q: &Monad) -> Vec<MonadMorphism> {
    let mut out = Vec::new();
    // all object assignments
    let n = p.base.objects.len();
    let mut idx = vec![0usize; n];
    loop {
        let ob_map: BTreeMap<ObjId, ObjId> = p
            .base
            .objects
            .iter()
            .zip(&idx)
            .map(|(x, i)| (x.clone(), q.base.objects[*i].clone()))
            .collect();
        // all morphism assignments compatible with the object map
        let mor_choices: Vec<Vec<MorId>> = p
            .base
            .morphisms
            .iter()
            .map(|m| {
                q.base
                    .morphisms
                    .iter()
                    .filter(|n| n.src == ob_map[&m.src] && n.tgt == ob_map[&m.tgt])
                    .map(|n| n.id.clone())
                    .collect()
            })
            .collect();
        if mor_choices.iter().all(|c| !c.is_empty()) {
            let mut midx = vec![0usize; mor_choices.len()];
            loop {
                let mor_map: BTreeMap<MorId, MorId> = p
                    .base
                    .morphisms
                    .iter()
                    .enumerate()
                    .map(|(k, m)| (m.id.clone(), mor_choices[k][midx[k]].clone()))
                    .collect();
                let f = nervecheck::fincat::Functor {
                    dom: p.base.clone(),
                    cod: q.base.clone(),
                    ob_map: ob_map.clone(),
                    mor_map,
                };
                // all xi assignments
                let xi_choices: Vec<Vec<MorId>> = p
                    .base
                    .objects
                    .iter()
                    .map(|x| {
                        let fpx = &f.ob_map[&p.endo.ob_map[x]];
                        let qfx = &q.endo.ob_map[&f.ob_map[x]];
                        q.base
                            .morphisms
                            .iter()
                            .filter(|n| &n.src == fpx && &n.tgt == qfx)
                            .map(|n| n.id.clone())
                            .collect()
                    })
                    .collect();
                if xi_choices.iter().all(|c| !c.is_empty()) {
                    let mut xidx = vec![0usize; xi_choices.len()];
                    loop {
                        let xi: BTreeMap<ObjId, MorId> = p
                            .base
                            .objects
                            .iter()
                            .zip(&xidx)
                            .enumerate()
                            .map(|(k, (x, i))| (x.clone(), xi_choices[k][*i].clone()))
                            .collect();
                        out.push(MonadMorphism {
                            dom: p.clone(),
                            cod: q.clone(),
                            f: f.clone(),
                            xi,
                        });
                        if !bump(&mut xidx, &xi_choices.iter().map(|c| c.len()).collect::<Vec<_>>()) {
                            break;
                        }
                    }
                }
                if !bump(&mut midx, &mor_choices.iter().map(|c| c.len()).collect::<Vec<_>>()) {
                    break;
                }
            }
        }
        if !bump(&mut idx, &vec![q.base.objects.len(); n]) {
            break;
        }
    }
    out
}

fn bump(idx: &mut [usize], sizes: &[usize]) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < sizes[i] {
            return true;
        }
        idx[i] = 0;
    }
    false
}
