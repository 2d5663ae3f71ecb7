//! Order-4 tangles of weakly 4-connected matroids, rank-3 tangle matroids,
//! and truncation.

use crate::error::Result;
use crate::lab::{all_sets, k_connected, show, Instance, Tally, MAX_ORDER};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::tangle::{breadth, tangle_matroid, tangle_rank_table, truncate_tangle, verify_tangle};

fn weakly_four_connected(m: &Matroid) -> Result<bool> {
    if !k_connected(m, 3)? {
        return Ok(false);
    }
    let n = m.len();
    let lam = m.lambda_table()?;
    Ok(all_sets(m).all(|a| lam[a.index()] != 2 || a.len() <= 4 || n - a.len() <= 4))
}

fn simple(m: &Matroid) -> bool {
    let n = m.len();
    (0..n).all(|i| m.r(SubsetMask::singleton(i)) == 1)
        && (0..n).all(|i| (i + 1..n).all(|j| m.r(SubsetMask::singleton(i).with(j)) == 2))
}

fn lines(m: &Matroid) -> Result<Vec<SubsetMask>> {
    Ok(m.flats()?.into_iter().filter(|&f| m.r(f) == 2).collect())
}

fn covered_by_three(sets: &[SubsetMask], e: SubsetMask) -> bool {
    sets.iter().enumerate().any(|(i, &a)| {
        sets[i..]
            .iter()
            .enumerate()
            .any(|(j, &b)| sets[i + j..].iter().any(|&c| a | b | c == e))
    })
}

pub(crate) fn one_tangle(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    if m.len() < 13 || !weakly_four_connected(m)? {
        t.skip();
        return Ok(());
    }
    let ts = inst.tangles(4)?;
    t.check(ts.len() == 1, || format!("{} order-4 tangles", ts.len()));
    if let Some(tg) = ts.first() {
        let lam = m.lambda_table()?;
        let ok = all_sets(m).all(|a| tg.is_small(a) == (lam[a.index()] <= 2 && a.len() <= 4));
        t.check(ok, || "small sets are not those with λ ≤ 2 and at most four elements".into());
    }
    Ok(())
}

pub(crate) fn plane_identity(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    if m.full_rank() != 3 || !simple(m) || covered_by_three(&lines(m)?, m.ground()) {
        t.skip();
        return Ok(());
    }
    let ts = inst.tangles(4)?;
    t.check(ts.len() == 1, || format!("{} order-4 tangles", ts.len()));
    if let Some(tg) = ts.first() {
        t.check(tangle_matroid(tg)?.matroid().same_as(m)?, || "tangle matroid differs".into());
    }
    Ok(())
}

pub(crate) fn line_bound(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    if m.len() < 13 {
        t.skip();
        return Ok(());
    }
    if weakly_four_connected(m)? {
        for tg in inst.tangles(4)? {
            let p = tangle_matroid(tg)?;
            let p = p.matroid();
            let long = lines(p)?.into_iter().find(|l| l.len() > 4);
            t.check(p.full_rank() == 3 && simple(p) && long.is_none(), || {
                format!("M_T fails: rank {}, long line {:?}", p.full_rank(), long.map(|l| show(p, l)))
            });
        }
    } else {
        t.skip();
    }
    // Converse, with P = the instance itself.
    if m.full_rank() == 3 && simple(m) && lines(m)?.iter().all(|l| l.len() <= 4) {
        t.check(weakly_four_connected(m)?, || "P is not weakly 4-connected".into());
        let ts = inst.tangles(4)?;
        let own = ts.len() == 1 && tangle_matroid(&ts[0])?.matroid().same_as(m)?;
        t.check(own, || "P is not the tangle matroid of its own 4-tangle".into());
    } else {
        t.skip();
    }
    Ok(())
}

pub(crate) fn breadth_root(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    if m.len() < 13 || !weakly_four_connected(m)? {
        t.skip();
        return Ok(());
    }
    for tg in inst.tangles(4)? {
        let b = breadth(tg)?.value;
        t.check(b * b >= m.len(), || format!("breadth {b} with |E| = {}", m.len()));
    }
    Ok(())
}

pub(crate) fn truncation(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for tg in inst.tangles_between(3, MAX_ORDER)? {
        let k = tg.order();
        let p = tangle_matroid(tg)?;
        for to in 2..k {
            let tt = truncate_tangle(tg, to)?;
            t.check(verify_tangle(m, to, tt.maximal_small())?.is_none(), || {
                format!("order {k} truncated to {to} is not a tangle")
            });
            let expected = p.matroid().truncation(to - 1)?;
            let got = tangle_rank_table(&tt)?;
            t.check(*expected.rank_table()? == got[..], || format!("order {k} truncated to {to}: rank tables differ"));
        }
    }
    Ok(())
}
