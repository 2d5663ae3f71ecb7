//! Tangles carried across single-element removals.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lab::{all_sets, show, Instance, Tally, MAX_ORDER, MIN_ORDER};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::reduction::{
    classify_separation, determined_family, generated_in, generated_tangle, kept_indices,
    DeterminedFamily, FlatContext, Generated, Removal, RemovalKind,
};
use crate::tangle::{breadth, enumerate_tangles, tangle_rank_table, Tangle};

fn removals(m: &Matroid) -> Vec<Removal> {
    m.ground()
        .iter()
        .flat_map(|i| [Removal::delete(m.label(i)), Removal::contract(m.label(i))])
        .collect()
}

/// Tangles of single-element minors, computed on demand.
#[derive(Default)]
struct MinorTangles {
    cache: HashMap<(Removal, usize), (Matroid, Vec<Tangle>)>,
}

impl MinorTangles {
    fn get(&mut self, m: &Matroid, r: &Removal, k: usize) -> Result<&(Matroid, Vec<Tangle>)> {
        match self.cache.entry((r.clone(), k)) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => {
                let n = r.apply(m)?;
                let ts = enumerate_tangles(&n, k)?;
                Ok(e.insert((n, ts)))
            }
        }
    }
}

pub(crate) fn induce_up(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let lam = m.lambda_table()?;
    for r in removals(m) {
        let n = r.apply(m)?;
        let kept = kept_indices(m, &n)?;
        for k in MIN_ORDER..=MAX_ORDER {
            for tn in enumerate_tangles(&n, k)? {
                let up = crate::reduction::induce_up(m, std::slice::from_ref(&r), &tn)?;
                let v = crate::tangle::verify_tangle(m, k, up.maximal_small())?;
                t.check(v.is_none(), || format!("order {k} via {r}: induced family fails {:?}", v.map(|v| v.axiom)));
                let same = all_sets(m).all(|a| {
                    up.is_small(a) == ((lam[a.index()] as usize) + 2 <= k && tn.is_small(a.compress(&kept)))
                });
                t.check(same, || format!("order {k} via {r}: induced family differs from its definition"));
            }
        }
    }
    Ok(())
}

pub(crate) fn induce_down(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        for r in removals(m) {
            match generated_tangle(tg, &r)? {
                Generated::Unique(tn) => {
                    let up = crate::reduction::induce_up(m, std::slice::from_ref(&r), &tn)?;
                    t.check(up == *tg, || format!("order {} via {r}: induced tangle differs", tg.order()));
                }
                _ => t.skip(),
            }
        }
    }
    Ok(())
}

pub(crate) fn transitive(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        for r1 in removals(m) {
            let Generated::Unique(tn) = generated_tangle(tg, &r1)? else {
                t.skip();
                continue;
            };
            let n = tn.matroid().clone();
            for r2 in removals(&n).into_iter().take(6) {
                let Generated::Unique(tp) = generated_tangle(&tn, &r2)? else {
                    t.skip();
                    continue;
                };
                let direct = generated_in(tg, tp.matroid())?;
                t.check(direct == Generated::Unique(tp), || {
                    format!("order {}: {r1} then {r2}", tg.order())
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn add_weak(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let mut minors = MinorTangles::default();
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        for r in removals(m) {
            let (n, ts) = minors.get(m, &r, k)?;
            let kept = kept_indices(m, n)?;
            let restricted: Vec<SubsetMask> = tg.maximal_small().iter().map(|h| h.compress(&kept)).collect();
            let lam_n = n.lambda_table()?;
            let weak: Vec<SubsetMask> = all_sets(n)
                .filter(|w| (lam_n[w.index()] as usize) + 2 <= k && tg.is_weak(w.expand(&kept)))
                .collect();
            let by_small: Vec<usize> = (0..ts.len())
                .filter(|&i| restricted.iter().all(|&s| ts[i].is_weak(s)))
                .collect();
            let by_weak: Vec<usize> = (0..ts.len())
                .filter(|&i| weak.iter().all(|&w| ts[i].is_small(w)))
                .collect();
            t.check(by_small == by_weak, || {
                format!("order {k} via {r}: containing tangles {by_small:?} vs {by_weak:?}")
            });
        }
    }
    Ok(())
}

/// The matroid in which `r` is a contraction: `M` or `M*`.
fn working(m: &Matroid, r: &Removal) -> Matroid {
    match r.kind {
        RemovalKind::Contract => m.clone(),
        RemovalKind::Delete => m.dual(),
    }
}

pub(crate) fn ambiguous(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        for r in removals(m) {
            let w = working(m, &r);
            let a = m.index_of(&r.element).expect("own label");
            let nw = w.contract(SubsetMask::singleton(a))?;
            let kept: Vec<usize> = m.ground().without(a).iter().collect();
            let e = nw.ground();
            for x in all_sets(&nw) {
                if nw.lam(x) + 2 > k {
                    continue;
                }
                let (xm, ym) = (x.expand(&kept), (e - x).expand(&kept));
                let (wx, wy) = (tg.is_weak(xm), tg.is_weak(ym));
                t.check(!(wx && wy), || format!("order {k} via {r}: both sides of {} weak", show(&nw, x)));
                if !wx && !wy {
                    let ok = w.lam(xm) + 1 == k
                        && w.lam(ym) + 1 == k
                        && w.closure(xm).contains(a)
                        && w.closure(ym).contains(a);
                    t.check(ok, || format!("order {k} via {r}: unoriented {} fails λ or closure", show(&nw, x)));
                }
            }
        }
    }
    Ok(())
}

/// Every valid flat context of `tg`; contexts whose hypotheses fail are
/// counted as skips.
fn contexts(tg: &Tangle, t: &mut Tally) -> Result<Vec<FlatContext>> {
    let m = tg.matroid();
    let n = m.len();
    let k = tg.order();
    let rt = tangle_rank_table(tg)?;
    let mut out = Vec::new();
    for f in all_sets(m) {
        let r = rt[f.index()] as usize;
        if r + 2 > k || crate::lab::table_closure(&rt, n, f) != f {
            continue;
        }
        for a in f.iter() {
            for removal in [Removal::contract(m.label(a)), Removal::delete(m.label(a))] {
                match FlatContext::new(tg, f, removal) {
                    Ok(c) => out.push(c),
                    Err(Error::Precondition(_)) => t.skip(),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(out)
}

pub(crate) fn canonical_side(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let mut minors = MinorTangles::default();
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        for ctx in contexts(tg, t)? {
            let r = &ctx.removal;
            let w = working(m, r);
            let a = m.index_of(&r.element).expect("own label");
            let nw = w.contract(SubsetMask::singleton(a))?;
            let kept: Vec<usize> = m.ground().without(a).iter().collect();
            let e = nw.ground();
            let f = ctx.flat.without(a).compress(&kept);
            let g = (m.ground() - ctx.flat).compress(&kept);
            let tr = ctx.rank;
            let (_, ts) = minors.get(m, r, k)?;
            let inducing: Vec<&Tangle> = ts
                .iter()
                .filter(|tn| {
                    crate::reduction::induce_up(m, std::slice::from_ref(r), tn)
                        .map(|u| u == *tg)
                        .unwrap_or(false)
                })
                .collect();
            for x in all_sets(&nw) {
                let y = e - x;
                if nw.lam(x) + 2 != k || tg.is_weak(x.expand(&kept)) || tg.is_weak(y.expand(&kept)) {
                    continue;
                }
                let (xm, ym) = (x.expand(&kept), y.expand(&kept));
                t.check(k >= 3, || format!("order {k}: unoriented separation below order 3"));
                t.check(
                    w.lam(xm) + 1 == k && w.lam(ym) + 1 == k && w.closure(xm).contains(a) && w.closure(ym).contains(a),
                    || format!("{r}: {} fails λ or closure", show(&nw, x)),
                );
                let fits = |big: SubsetMask, low: SubsetMask| {
                    nw.lam(big & f) >= tr
                        && nw.lam(low & f) < tr
                        && nw.lam(big & g) + 2 > k
                        && nw.lam(low & g) + 2 <= k
                        && tg.is_small((low & g).expand(&kept))
                };
                let low = match (fits(x, y), fits(y, x)) {
                    (true, false) => Some(y),
                    (false, true) => Some(x),
                    _ => None,
                };
                t.check(low.is_some(), || {
                    format!("{r} over {}: {} has no unique low side", show(m, ctx.flat), show(&nw, x))
                });
                let Some(low) = low else { continue };
                let v = classify_separation(tg, r, x, Some(&ctx))?;
                t.check(v.small_side == low, || format!("{r}: classifier picks the other side of {}", show(&nw, x)));
                for tn in &inducing {
                    t.check(tn.is_small(low), || {
                        format!("{r}: low side {} large in an inducing tangle", show(&nw, low))
                    });
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn selection(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let k = tg.order();
        for ctx in contexts(tg, t)? {
            let r = &ctx.removal;
            let n = r.apply(m)?;
            let e = n.ground();
            let lam = n.lambda_table()?;
            let sep = |x: SubsetMask| (lam[x.index()] as usize) + 2 <= k;
            let mut member = vec![false; 1 << n.len()];
            for x in n.canonical_separations(k - 2)? {
                let v = classify_separation(tg, r, x, Some(&ctx))?;
                member[v.small_side.index()] = true;
            }
            for x in all_sets(&n).filter(|&x| sep(x)) {
                t.check(member[x.index()] != member[(e - x).index()], || {
                    format!("{r}: {} not oriented exactly once", show(&n, x))
                });
            }
            for x in all_sets(&n).filter(|x| member[x.index()]) {
                for b in x.submasks() {
                    if sep(b) {
                        t.check(member[b.index()], || {
                            format!("{r}: {} chosen but its subset {} is not", show(&n, x), show(&n, b))
                        });
                    }
                }
            }
            if k >= 3 {
                for i in e.iter() {
                    t.check(member[SubsetMask::singleton(i).index()], || format!("{r}: singleton {} not chosen", n.label(i)));
                }
            }
            if let Generated::Unique(gen) = generated_tangle(tg, r)? {
                let same = all_sets(&n).filter(|&x| sep(x)).all(|x| member[x.index()] == gen.is_small(x));
                t.check(same, || format!("{r} over {}: determined family differs from the generated tangle", show(m, ctx.flat)));
                let df = determined_family(tg, &ctx)?;
                t.check(df == DeterminedFamily::Tangle(gen), || format!("{r}: determined_family differs"));
            } else {
                t.skip();
            }
        }
    }
    Ok(())
}

/// Titanic contexts with their generated tangle, or a failure.
fn titanic_pairs(tg: &Tangle, t: &mut Tally) -> Result<Vec<(FlatContext, Option<Tangle>)>> {
    let mut out = Vec::new();
    for ctx in contexts(tg, t)? {
        if !ctx.titanic {
            t.skip();
            continue;
        }
        let g = generated_tangle(tg, &ctx.removal)?.unique();
        out.push((ctx, g));
    }
    Ok(out)
}

pub(crate) fn titanic_generates(inst: &Instance, t: &mut Tally) -> Result<()> {
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        for (ctx, g) in titanic_pairs(tg, t)? {
            t.check(g.is_some(), || {
                format!("order {} {} over {}: no unique generated tangle", tg.order(), ctx.removal, show(tg.matroid(), ctx.flat))
            });
        }
    }
    Ok(())
}

/// `(M_T \ a, M_{T_a})` rank tables over the minor's ground set.
fn rank_pair(tg: &Tangle, ta: &Tangle) -> Result<(Vec<u8>, Vec<u8>)> {
    let m = tg.matroid();
    let kept = kept_indices(m, ta.matroid())?;
    let rt = tangle_rank_table(tg)?;
    let ra = tangle_rank_table(ta)?;
    let del = (0..ra.len() as u64)
        .map(|x| rt[SubsetMask(x).expand(&kept).index()])
        .collect();
    Ok((del, ra))
}

pub(crate) fn freer(inst: &Instance, t: &mut Tally) -> Result<()> {
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        for (ctx, g) in titanic_pairs(tg, t)? {
            let Some(ta) = g else {
                t.skip();
                continue;
            };
            let (del, ra) = rank_pair(tg, &ta)?;
            let full = del.len() - 1;
            t.check(del[full] == ra[full], || format!("{}: ranks {} and {}", ctx.removal, del[full], ra[full]));
            for x in 0..del.len() {
                let size = (x as u64).count_ones() as u8;
                if ra[x] == size {
                    t.check(del[x] == size, || {
                        format!("{}: {} independent only in M_Ta", ctx.removal, show(ta.matroid(), SubsetMask(x as u64)))
                    });
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn breadth_down(inst: &Instance, t: &mut Tally) -> Result<()> {
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let b = breadth(tg)?.value;
        for (ctx, g) in titanic_pairs(tg, t)? {
            let Some(ta) = g else {
                t.skip();
                continue;
            };
            let ba = breadth(&ta)?.value;
            t.check(ba <= b, || format!("{}: breadth {ba} after, {b} before", ctx.removal));
        }
    }
    Ok(())
}

pub(crate) fn static_ranks(inst: &Instance, t: &mut Tally) -> Result<()> {
    for tg in inst.tangles_between(MIN_ORDER, MAX_ORDER)? {
        let m = tg.matroid();
        for (ctx, g) in titanic_pairs(tg, t)? {
            let Some(ta) = g else {
                t.skip();
                continue;
            };
            let kept = kept_indices(m, ta.matroid())?;
            let f = ctx.flat.compress(&kept);
            let gset = (m.ground() - ctx.flat).compress(&kept);
            let (del, ra) = rank_pair(tg, &ta)?;
            for x in all_sets(ta.matroid()) {
                if f.is_subset_of(x) || x.is_subset_of(gset) {
                    t.check(del[x.index()] == ra[x.index()], || {
                        format!("{}: rank of {} differs", ctx.removal, show(ta.matroid(), x))
                    });
                }
            }
        }
    }
    Ok(())
}
