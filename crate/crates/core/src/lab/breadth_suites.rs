//! Breadth-preserving removals and the reduction built from them.

use crate::error::Result;
use crate::lab::{all_sets, connected_set, k_connected, show, table_closure, Instance, Tally, MAX_ORDER, MIN_ORDER};
use crate::mask::{maximal_members, SubsetMask};
use crate::matroid::Matroid;
use crate::reduction::{
    generated_in, generated_tangle, kept_indices, reduce_to_weakly_4_connected, Generated, Removal,
};
use crate::tangle::{breadth, tangle_from_k_connected_set, tangle_rank_table, Tangle};

fn unique_breadth(g: Generated) -> Result<Option<(Tangle, usize)>> {
    match g {
        Generated::Unique(ta) => {
            let b = breadth(&ta)?.value;
            Ok(Some((ta, b)))
        }
        _ => Ok(None),
    }
}

/// Rank table of `M_T` restricted to the kept elements.
fn restricted_ranks(rt: &[u8], kept: &[usize]) -> Vec<u8> {
    (0..1u64 << kept.len())
        .map(|x| rt[SubsetMask(x).expand(kept).index()])
        .collect()
}

fn weakly_four_connected(m: &Matroid) -> Result<bool> {
    if !k_connected(m, 3)? {
        return Ok(false);
    }
    let n = m.len();
    let lam = m.lambda_table()?;
    Ok(all_sets(m).all(|a| lam[a.index()] != 2 || a.len() <= 4 || n - a.len() <= 4))
}

pub(crate) fn loops_away(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let rt = tangle_rank_table(tg)?;
        let b = breadth(tg)?.value;
        for a in m.ground().iter() {
            if rt[SubsetMask::singleton(a).index()] != 0 {
                continue;
            }
            let g = unique_breadth(generated_tangle(tg, &Removal::delete(m.label(a)))?)?;
            t.check(g.as_ref().map(|x| x.1) == Some(b), || {
                format!("order {}: deleting loop {} gives {:?}", tg.order(), m.label(a), g.map(|x| x.1))
            });
        }
    }
    Ok(())
}

pub(crate) fn loops_all(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        let rt = tangle_rank_table(tg)?;
        let loops = SubsetMask::from_indices((0..n).filter(|&i| rt[1 << i] == 0));
        let kept: Vec<usize> = (m.ground() - loops).iter().collect();
        let rest = restricted_ranks(&rt, &kept);
        let full = rest.len() - 1;
        let connected = (1..full).all(|a| rest[a] + rest[full - a] > rest[full]);
        t.check(connected, || format!("order {k}: M_T minus loops {} is disconnected", show(m, loops)));
        let b = breadth(tg)?.value;
        let g = unique_breadth(generated_in(tg, &m.delete(loops)?)?)?;
        t.check(g.as_ref().map(|x| x.1) == Some(b), || {
            format!("order {k}: deleting loops {} gives {:?}", show(m, loops), g.map(|x| x.1))
        });
    }
    Ok(())
}

pub(crate) fn series_parallel(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let lam = m.lambda_table()?;
    let connected = k_connected(m, 2)?;
    for tg in inst.tangles_between(3, MAX_ORDER)? {
        if !connected {
            t.skip();
            continue;
        }
        let candidates = all_sets(m)
            .filter(|&f| f.len() >= 2 && lam[f.index()] <= 1 && tg.is_small(f))
            .fold(SubsetMask::EMPTY, |u, f| u | f);
        let rt = tangle_rank_table(tg)?;
        let b = breadth(tg)?.value;
        for a in candidates.iter() {
            let single = SubsetMask::singleton(a);
            for (r, n) in [
                (Removal::delete(m.label(a)), m.delete(single)?),
                (Removal::contract(m.label(a)), m.contract(single)?),
            ] {
                if !k_connected(&n, 2)? {
                    t.skip();
                    continue;
                }
                let g = unique_breadth(generated_tangle(tg, &r)?)?;
                t.check(g.is_some(), || format!("order {}: {r} generates nothing unique", tg.order()));
                let Some((ta, ba)) = g else { continue };
                let kept = kept_indices(m, &n)?;
                t.check(tangle_rank_table(&ta)? == restricted_ranks(&rt, &kept), || {
                    format!("order {}: {r}: M_Ta differs from M_T minus the element", tg.order())
                });
                t.check(ba == b, || format!("order {}: {r}: breadth {ba} vs {b}", tg.order()));
            }
        }
    }
    Ok(())
}

pub(crate) fn titanic_three_separating(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    if !k_connected(m, 3)? {
        t.skip();
        return Ok(());
    }
    for f in all_sets(m) {
        if m.lam(f) != 2 {
            continue;
        }
        let tit = m.is_titanic(f)?;
        t.check(tit == (f.len() >= 4), || format!("{} titanic = {tit}", show(m, f)));
    }
    Ok(())
}

/// Maximal sets among the small sets with `λ ≤ 2`.
fn maximal_small_three_separating(tg: &Tangle, lam: &[u8]) -> Vec<SubsetMask> {
    maximal_members(all_sets(tg.matroid()).filter(|&a| lam[a.index()] <= 2 && tg.is_small(a)))
}

/// Circuits of the matroid with rank table `rt`.
fn circuits(rt: &[u8], n: usize) -> Vec<SubsetMask> {
    (1..1u64 << n)
        .map(SubsetMask)
        .filter(|&c| {
            rt[c.index()] as usize + 1 == c.len()
                && c.iter().all(|x| rt[c.without(x).index()] as usize == c.len() - 1)
        })
        .collect()
}

fn freely_placed(rt: &[u8], n: usize, circs: &[SubsetMask], z: SubsetMask, a: usize) -> bool {
    table_closure(rt, n, z.without(a)).contains(a)
        && circs
            .iter()
            .filter(|c| c.contains(a))
            .all(|&c| z.is_subset_of(table_closure(rt, n, c)))
}

/// Some flat `A ∋ a` with `a ∈ cl(A - a)` and `F ∩ A = {a}`.
fn fixed(rt: &[u8], n: usize, f: SubsetMask, a: usize) -> bool {
    (0..1u64 << n).map(SubsetMask).any(|x| {
        x.contains(a)
            && f & x == SubsetMask::singleton(a)
            && table_closure(rt, n, x) == x
            && rt[x.without(a).index()] == rt[x.index()]
    })
}

pub(crate) fn interior_free(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    let lam = m.lambda_table()?;
    let three = k_connected(m, 3)?;
    for tg in inst.tangles_between(4, MAX_ORDER)? {
        if !three {
            t.skip();
            continue;
        }
        let k = tg.order();
        let rt = tangle_rank_table(tg)?;
        let circs = circuits(&rt, n);
        for f in maximal_small_three_separating(tg, &lam) {
            if f.len() < 3 {
                continue;
            }
            t.check(rt[f.index()] == 2 && table_closure(&rt, n, f) == f, || {
                format!("order {k}: {} is not a rank-2 flat of M_T", show(m, f))
            });
            let inter = m.boundary_profile(f)?.interior;
            for a in f.iter() {
                let free = freely_placed(&rt, n, &circs, f, a);
                t.check(free != fixed(&rt, n, f, a), || {
                    format!("order {k}: circuit and flat tests disagree at {} on {}", m.label(a), show(m, f))
                });
                if inter.contains(a) {
                    t.check(free, || format!("order {k}: interior {} not free on {}", m.label(a), show(m, f)));
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn witness_lines(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    let three = k_connected(m, 3)?;
    for tg in inst.tangles_between(4, MAX_ORDER)? {
        if !three {
            t.skip();
            continue;
        }
        let k = tg.order();
        let rt = tangle_rank_table(tg)?;
        let circs = circuits(&rt, n);
        let u = breadth(tg)?.witness;
        for f in all_sets(m) {
            if f.len() < 3 || rt[f.index()] != 2 || table_closure(&rt, n, f) != f {
                continue;
            }
            t.check((u & f).len() <= 2, || format!("order {k}: witness meets {} thrice", show(m, f)));
            for a in (u & f).iter() {
                for b in (f - u).iter() {
                    if !freely_placed(&rt, n, &circs, f, b) {
                        continue;
                    }
                    let swapped = u.without(a).with(b);
                    let ok = swapped
                        .submasks()
                        .all(|s| rt[s.index()] as usize == s.len().min(k - 1));
                    t.check(ok, || format!("order {k}: swapping {} for {} on {}", m.label(a), m.label(b), show(m, f)));
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn keep_interior(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let lam = m.lambda_table()?;
    let three = k_connected(m, 3)?;
    for tg in inst.tangles_between(4, MAX_ORDER)? {
        if !three {
            t.skip();
            continue;
        }
        let b = breadth(tg)?.value;
        for f in maximal_small_three_separating(tg, &lam) {
            if f.len() < 5 {
                continue;
            }
            for a in f.iter() {
                let single = SubsetMask::singleton(a);
                for (r, n) in [
                    (Removal::delete(m.label(a)), m.delete(single)?),
                    (Removal::contract(m.label(a)), m.contract(single)?),
                ] {
                    let kept = kept_indices(m, &n)?;
                    let rest = f.without(a).compress(&kept);
                    let holds = k_connected(&n, 3)?
                        && n.lam(rest) == m.lam(f)
                        && !n.boundary_profile(rest)?.interior.is_empty();
                    if !holds {
                        t.skip();
                        continue;
                    }
                    let g = unique_breadth(generated_tangle(tg, &r)?)?;
                    t.check(g.as_ref().map(|x| x.1) == Some(b), || {
                        format!("order {}: {r} on {} gives {:?}", tg.order(), show(m, f), g.map(|x| x.1))
                    });
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn keep_three_connected(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    if !k_connected(m, 3)? {
        t.skip();
        return Ok(());
    }
    for f in all_sets(m) {
        if f.len() < 4 || m.lam(f) != 2 || !m.is_fully_closed(f) {
            continue;
        }
        let p = m.boundary_profile(f)?;
        for x in p.guts.iter() {
            let n = m.delete(SubsetMask::singleton(x))?;
            t.check(k_connected(&n, 3)?, || format!("\\{} from the guts of {}", m.label(x), show(m, f)));
        }
        for x in p.coguts.iter() {
            let n = m.contract(SubsetMask::singleton(x))?;
            t.check(k_connected(&n, 3)?, || format!("/{} from the coguts of {}", m.label(x), show(m, f)));
        }
    }
    Ok(())
}

pub(crate) fn guts_away(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let lam = m.lambda_table()?;
    let three = k_connected(m, 3)?;
    for tg in inst.tangles_between(4, MAX_ORDER)? {
        if !three {
            t.skip();
            continue;
        }
        let k = tg.order();
        let rt = tangle_rank_table(tg)?;
        let b = breadth(tg)?.value;
        for f in maximal_small_three_separating(tg, &lam) {
            // The statement for deletions, and its dual for contractions.
            for (side, contract) in [(m.guts(f), false), (m.coguts(f), true)] {
                if f.len() < 5 || side.len() < 3 {
                    t.skip();
                    continue;
                }
                let mut best = false;
                for x in side.iter() {
                    let r = if contract { Removal::contract(m.label(x)) } else { Removal::delete(m.label(x)) };
                    let g = unique_breadth(generated_tangle(tg, &r)?)?;
                    t.check(g.is_some(), || format!("order {k}: {r} on {} generates nothing unique", show(m, f)));
                    let Some((tx, bx)) = g else { continue };
                    let kept = kept_indices(m, tx.matroid())?;
                    t.check(tangle_rank_table(&tx)? == restricted_ranks(&rt, &kept), || {
                        format!("order {k}: {r}: M_Tx differs from M_T minus the element")
                    });
                    best |= bx == b;
                }
                t.check(best, || format!("order {k}: no element of {} keeps breadth {b}", show(m, side)));
            }
        }
    }
    Ok(())
}

pub(crate) fn interior_element(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    if !k_connected(m, 3)? {
        t.skip();
        return Ok(());
    }
    for f in all_sets(m) {
        if f.len() < 5 || m.lam(f) != 2 || m.r(f) <= 2 || m.r_dual(f) <= 2 || !m.is_fully_closed(f) {
            continue;
        }
        let mut found = false;
        'outer: for a in f.iter() {
            let single = SubsetMask::singleton(a);
            for n in [m.delete(single)?, m.contract(single)?] {
                if !k_connected(&n, 3)? {
                    continue;
                }
                let kept = kept_indices(m, &n)?;
                if n.boundary_profile(f.without(a).compress(&kept))?.interior.len() >= 2 {
                    found = true;
                    break 'outer;
                }
            }
        }
        t.check(found, || format!("no removal keeps two interior elements of {}", show(m, f)));
    }
    Ok(())
}

pub(crate) fn breadth_critical_step(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let weak4 = weakly_four_connected(m)?;
    for tg in inst.tangles_between(4, MAX_ORDER)? {
        if weak4 {
            t.check(true, String::new);
            continue;
        }
        let b = breadth(tg)?.value;
        let mut found = false;
        for i in m.ground().iter() {
            for r in [Removal::delete(m.label(i)), Removal::contract(m.label(i))] {
                if let Some((_, bx)) = unique_breadth(generated_tangle(tg, &r)?)? {
                    found |= bx == b;
                }
            }
            if found {
                break;
            }
        }
        t.check(found, || format!("order {}: not weakly 4-connected and no removal keeps breadth {b}", tg.order()));
    }
    Ok(())
}

pub(crate) fn reduce_end_to_end(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for tg in inst.tangles_between(4, MAX_ORDER)? {
        let k = tg.order();
        let b = breadth(tg)?.value;
        let tr = reduce_to_weakly_4_connected(tg)?;
        t.check(tr.initial_breadth == b, || format!("order {k}: initial breadth {}", tr.initial_breadth));
        let mut cur = m.clone();
        let mut prev = tg.clone();
        for s in &tr.steps {
            cur = s.removal.apply(&cur)?;
            let bs = breadth(&s.tangle)?.value;
            t.check(bs == b && s.breadth == b, || format!("order {k}: step {} has breadth {bs}", s.removal));
            let g = generated_tangle(&prev, &s.removal)?;
            t.check(g == Generated::Unique(s.tangle.clone()), || {
                format!("order {k}: step {} is not generated by the previous tangle", s.removal)
            });
            prev = s.tangle.clone();
        }
        t.check(cur.same_as(&tr.final_matroid)?, || format!("order {k}: final matroid is not the traced minor"));
        t.check(weakly_four_connected(&tr.final_matroid)?, || format!("order {k}: final minor not weakly 4-connected"));
        t.check(breadth(&tr.final_tangle)?.value == b, || format!("order {k}: final breadth changed"));
        t.check(tr.generated_directly_by(tg)?, || format!("order {k}: final tangle not generated directly"));
    }
    Ok(())
}

pub(crate) fn connected_set_pipeline(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    let lam = m.lambda_table()?;
    for k in 4..=MAX_ORDER {
        let mut zs = vec![m.ground()];
        for tg in inst.tangles(k)? {
            zs.push(breadth(tg)?.witness);
        }
        zs.sort_unstable_by_key(|z| z.0);
        zs.dedup();
        for z in zs {
            if z.len() < 7 || z.len() + 5 < 3 * k || !connected_set(&lam, n, z, k) {
                t.skip();
                continue;
            }
            let tz = tangle_from_k_connected_set(m, z, k)?;
            let tr = reduce_to_weakly_4_connected(&tz)?;
            let fin = &tr.final_matroid;
            t.check(weakly_four_connected(fin)?, || format!("order {k}: Z = {}: final minor not weakly 4-connected", show(m, z)));
            let u = breadth(&tr.final_tangle)?.witness;
            let part = SubsetMask::from_indices(u.iter().take(z.len()));
            t.check(part.len() == z.len() && fin.is_k_connected_set(part, k)?, || {
                format!("order {k}: Z = {}: witness part {} of the minor", show(m, z), show(fin, part))
            });
        }
    }
    Ok(())
}
