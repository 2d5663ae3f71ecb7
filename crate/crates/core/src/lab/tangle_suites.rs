//! Facts about a tangle and its tangle matroid.

use crate::error::Result;
use crate::lab::{all_sets, connected_set, k_connected, show, table_closure, Instance, Tally, MAX_ORDER, MIN_ORDER};
use crate::mask::{fold_supersets, SubsetMask};
use crate::tangle::{
    breadth, tangle_from_k_connected_set, tangle_matroid, tangle_rank_table, verify_tangle, Tangle,
};

fn flats_of(ranks: &[u8], n: usize) -> Vec<SubsetMask> {
    (0..1u64 << n)
        .map(SubsetMask)
        .filter(|&a| table_closure(ranks, n, a) == a)
        .collect()
}

fn hyperplanes_of(ranks: &[u8], n: usize, rank: usize) -> Vec<SubsetMask> {
    if rank == 0 {
        return Vec::new();
    }
    flats_of(ranks, n)
        .into_iter()
        .filter(|a| ranks[a.index()] as usize + 1 == rank)
        .collect()
}

fn three_cover(sets: &[SubsetMask], e: SubsetMask) -> Option<[SubsetMask; 3]> {
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate().skip(i) {
            for &c in &sets[j..] {
                if a | b | c == e {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// `M_T | Z` is uniform of rank `k-1`.
fn uniform_on(ranks: &[u8], z: SubsetMask, k: usize) -> bool {
    z.submasks().all(|s| ranks[s.index()] as usize == s.len().min(k - 1))
}

fn sorted(mut v: Vec<SubsetMask>) -> Vec<SubsetMask> {
    v.sort_unstable_by_key(|a| a.0);
    v
}

pub(crate) fn enumeration_valid(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for k in MIN_ORDER..=MAX_ORDER {
        let ts = inst.tangles(k)?;
        for (i, tg) in ts.iter().enumerate() {
            let v = verify_tangle(m, k, tg.maximal_small())?;
            t.check(v.is_none(), || format!("order {k}, tangle {i} fails {:?}", v.map(|v| v.axiom)));
            for (j, other) in ts.iter().enumerate().skip(i + 1) {
                t.check(tg.maximal_small() != other.maximal_small(), || {
                    format!("order {k}: tangles {i} and {j} coincide")
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn hyperplanes_maximal_small(inst: &Instance, t: &mut Tally) -> Result<()> {
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        let tm = tangle_matroid(tg)?;
        let p = tm.matroid();
        t.check(p.full_rank() == k - 1, || format!("order {k}: M_T has rank {}", p.full_rank()));
        let hyps = sorted(p.hyperplanes()?);
        let small = sorted(tg.maximal_small().to_vec());
        t.check(hyps == small, || {
            format!(
                "order {k}: hyperplanes {:?} vs maximal small {:?}",
                hyps.iter().map(|&h| show(p, h)).collect::<Vec<_>>(),
                small.iter().map(|&h| show(p, h)).collect::<Vec<_>>()
            )
        });
    }
    Ok(())
}

pub(crate) fn three_hyperplane_cover(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        let ranks = tangle_rank_table(tg)?;
        let hyps = hyperplanes_of(&ranks, n, k - 1);
        let cover = three_cover(&hyps, m.ground());
        t.check(cover.is_none(), || {
            format!("order {k}: M_T covered by {:?}", cover.map(|c| c.map(|h| show(m, h))))
        });
        t.check(!(n == 1 && k == 2), || "M_T is U11".into());
    }
    // Converse, constructively: the non-spanning sets of P form a tangle of
    // order r(P)+1 in P whose tangle matroid is P.
    let r = m.full_rank();
    let hyps = m.hyperplanes()?;
    if r == 0 || (n == 1 && r == 1) || three_cover(&hyps, m.ground()).is_some() {
        t.skip();
        return Ok(());
    }
    let v = verify_tangle(m, r + 1, &hyps)?;
    t.check(v.is_none(), || format!("hyperplanes fail {:?} as an order-{} tangle", v.as_ref().map(|v| v.axiom), r + 1));
    if v.is_none() {
        let tg = Tangle::new(m, r + 1, &hyps)?;
        let p = tangle_matroid(&tg)?;
        t.check(p.matroid().same_as(m)?, || "tangle matroid of the hyperplane tangle differs".into());
    }
    Ok(())
}

/// Minimum λ over small supersets, 255 when there is none.
fn min_small_superset(tg: &Tangle, lam: &[u8], n: usize) -> Vec<u8> {
    let mut table: Vec<u8> = (0..1u64 << n)
        .map(|a| {
            if tg.is_small(SubsetMask(a)) {
                lam[a as usize]
            } else {
                u8::MAX
            }
        })
        .collect();
    fold_supersets(&mut table, n, |a, b| a.min(b));
    table
}

pub(crate) fn weak_rank(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    let lam = m.lambda_table()?;
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        let top = (k - 1) as u8;
        let rt = tangle_rank_table(tg)?;
        let sup = min_small_superset(tg, &lam, n);
        for a in all_sets(m) {
            let r = rt[a.index()];
            let weak = tg.is_weak(a);
            t.check(weak == (r < top), || format!("order {k}: {} weak={weak}, r_T={r}", show(m, a)));
            let expected = if weak { sup[a.index()] } else { top };
            t.check(r == expected, || {
                format!("order {k}: r_T({}) = {r}, expected {expected}", show(m, a))
            });
            if r < top && table_closure(&rt, n, a) == a {
                t.check(tg.is_small(a) && r == lam[a.index()], || {
                    format!("order {k}: proper flat {} not small with r_T = λ", show(m, a))
                });
            }
            if a.len() == k - 1 {
                t.check((r == top) == !weak, || format!("order {k}: basis test at {}", show(m, a)));
            }
            if a.len() < k - 1 {
                let indep = r as usize == a.len();
                let expected = tg.is_small(a) && (sup[a.index()] as usize) >= a.len();
                t.check(indep == expected, || {
                    format!("order {k}: independence of {} is {indep}", show(m, a))
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn connected_unique_tangle(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    for k in MIN_ORDER..=MAX_ORDER {
        let u11 = n == 1 && m.full_rank() == 1;
        if u11 || n <= 3 * (k - 2) || !k_connected(m, k)? {
            t.skip();
            continue;
        }
        let ts = inst.tangles(k)?;
        t.check(ts.len() == 1, || format!("order {k}: {} tangles", ts.len()));
        let Some(tg) = ts.first() else { continue };
        let family_ok = all_sets(m).all(|a| tg.is_small(a) == (a.len() + 2 <= k));
        t.check(family_ok, || format!("order {k}: small sets are not the sets of size ≤ k-2"));
        let rt = tangle_rank_table(tg)?;
        t.check(uniform_on(&rt, m.ground(), k), || format!("order {k}: M_T not uniform"));
        t.check(breadth(tg)?.value == n, || format!("order {k}: breadth below |E|"));
    }
    Ok(())
}

pub(crate) fn uniform_set_connected(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    let lam = m.lambda_table()?;
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        let rt = tangle_rank_table(tg)?;
        let mut zs = vec![breadth(tg)?.witness];
        zs.extend(
            all_sets(m)
                .filter(|a| a.len() == k - 1 && rt[a.index()] as usize == k - 1)
                .take(10),
        );
        for z in zs {
            if z.len() + 1 < k || !uniform_on(&rt, z, k) {
                t.skip();
                continue;
            }
            t.check(connected_set(&lam, n, z, k), || {
                format!("order {k}: {} is not {k}-connected", show(m, z))
            });
        }
    }
    Ok(())
}

pub(crate) fn connected_set_tangle(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    let lam = m.lambda_table()?;
    for k in 3..=MAX_ORDER {
        let ts = inst.tangles(k)?;
        let mut zs = vec![(m.ground(), None)];
        for tg in ts {
            zs.push((breadth(tg)?.witness, Some(tg)));
        }
        for (z, source) in zs {
            if z.len() + 5 < 3 * k || !connected_set(&lam, n, z, k) {
                t.skip();
                continue;
            }
            let tz = tangle_from_k_connected_set(m, z, k)?;
            let family_ok = all_sets(m).all(|a| {
                tz.is_small(a) == ((lam[a.index()] as usize) + 2 <= k && (a & z).len() + 2 <= k)
            });
            t.check(family_ok, || format!("order {k}: T_Z for {} has the wrong small sets", show(m, z)));
            t.check(verify_tangle(m, k, tz.maximal_small())?.is_none(), || {
                format!("order {k}: T_Z for {} is not a tangle", show(m, z))
            });
            let rz = tangle_rank_table(&tz)?;
            t.check(uniform_on(&rz, z, k), || format!("order {k}: M_TZ|Z not uniform for {}", show(m, z)));
            if let Some(tg) = source {
                t.check(tz == *tg, || format!("order {k}: witness {} does not generate T", show(m, z)));
            }
        }
    }
    Ok(())
}

pub(crate) fn quotient(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    let rm = m.rank_table()?;
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        let rt = tangle_rank_table(tg)?;
        let d = |a: SubsetMask, b: SubsetMask| {
            rm[a.index()] as i32 - rm[b.index()] as i32 >= rt[a.index()] as i32 - rt[b.index()] as i32
        };
        for x in all_sets(m) {
            let inside = m.closure(x).is_subset_of(table_closure(&rt, n, x));
            t.check(inside, || format!("order {k}: cl_M({}) not inside cl_T", show(m, x)));
            if n <= 10 {
                for b in x.submasks() {
                    t.check(d(x, b), || format!("order {k}: A = {}, B = {}", show(m, x), show(m, b)));
                }
            } else {
                for i in (m.ground() - x).iter() {
                    t.check(d(x.with(i), x), || format!("order {k}: A = {} + {}", show(m, x), m.label(i)));
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn flats_fully_closed(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let rt = tangle_rank_table(tg)?;
        for f in flats_of(&rt, m.len()) {
            t.check(m.is_fully_closed(f), || format!("order {}: flat {} of M_T", tg.order(), show(m, f)));
        }
    }
    Ok(())
}

pub(crate) fn round(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        let rt = tangle_rank_table(tg)?;
        let hyps = hyperplanes_of(&rt, m.len(), k - 1);
        for (i, &a) in hyps.iter().enumerate() {
            for &b in &hyps[i..] {
                t.check(a | b != m.ground(), || {
                    format!("order {k}: {} and {} cover E", show(m, a), show(m, b))
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn three_connected(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let three = k_connected(m, 3)?;
    for tg in inst.tangles_between(3, MAX_ORDER)? {
        if !three {
            t.skip();
            continue;
        }
        let p = tangle_matroid(tg)?;
        t.check(k_connected(p.matroid(), 3)?, || format!("order {}: M_T not 3-connected", tg.order()));
    }
    Ok(())
}

fn solid_flat_meets(inst: &Instance, t: &mut Tally, sided: bool) -> Result<()> {
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
        let mut solid: Vec<SubsetMask> = Vec::new();
        for f in flats_of(&rt, n) {
            let r = rt[f.index()] as usize;
            if (2..k - 1).contains(&r) && m.is_solid(f)? {
                solid.push(f);
            }
        }
        for &l in solid.iter().filter(|l| rt[l.index()] == 2) {
            for &f in &solid {
                if l.is_subset_of(f) {
                    continue;
                }
                let meet = f & l;
                t.check(meet.len() <= 1, || format!("order {k}: {} meets {}", show(m, l), show(m, f)));
                for a in meet.iter() {
                    let spanned = m.closure(f.without(a)).contains(a) && m.closure(l.without(a)).contains(a);
                    let cospanned =
                        m.coclosure(f.without(a)).contains(a) && m.coclosure(l.without(a)).contains(a);
                    let ok = spanned || (sided && cospanned);
                    t.check(ok, || format!("order {k}: {} not spanned at {}", m.label(a), show(m, f)));
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn solid_lines(inst: &Instance, t: &mut Tally) -> Result<()> {
    solid_flat_meets(inst, t, false)
}

/// The same meeting, where `a` may instead be cospanned by both sides: the
/// statement has to be closed under duality, and triads of `M` are solid lines
/// of `M_T` too.
pub(crate) fn solid_lines_sided(inst: &Instance, t: &mut Tally) -> Result<()> {
    solid_flat_meets(inst, t, true)
}
