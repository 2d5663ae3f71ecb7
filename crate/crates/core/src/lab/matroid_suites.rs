//! Facts about rank, closure and connectivity of a single matroid.

use crate::error::Result;
use crate::lab::{all_sets, k_connected, set_pairs, show, Instance, Tally};
use crate::mask::SubsetMask;
use crate::matroid::{Matroid, MatroidExpr};

fn kept_without(m: &Matroid, x: usize) -> Vec<usize> {
    m.ground().without(x).iter().collect()
}

pub(crate) fn lambda_symmetry(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let e = m.ground();
    let rm = m.full_rank();
    let dual = m.dual();
    // r*(X) = |X| + r(E - X) - r(E)
    let rd = |x: SubsetMask| x.len() + m.r(e - x) - rm;
    for a in all_sets(m) {
        let b = e - a;
        let lam = m.r(a) + m.r(b) - rm;
        let lam_dual = rd(a) + rd(b) - rd(e);
        t.check(
            m.lam(a) == lam && m.lam(b) == lam && lam_dual == lam && dual.lam(a) == lam,
            || format!("λ({}) = {lam}, λ(E-A) = {}, λ*(A) = {lam_dual}", show(m, a), m.lam(b)),
        );
    }
    Ok(())
}

pub(crate) fn lambda_submodular(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let lam = m.lambda_table()?;
    let l = |x: SubsetMask| lam[x.index()] as i32;
    for (a, b) in set_pairs(m) {
        t.check(l(a) + l(b) >= l(a & b) + l(a | b), || {
            format!("A = {}, B = {}: intersection and union", show(m, a), show(m, b))
        });
        t.check(l(a) + l(b) >= l(a - b) + l(b - a), || {
            format!("A = {}, B = {}: differences", show(m, a), show(m, b))
        });
    }
    Ok(())
}

pub(crate) fn coclosure_complement(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let e = m.ground();
    for a in all_sets(m) {
        let co = m.coclosure(a);
        for x in (e - a).iter() {
            let b = e - a.with(x);
            t.check(co.contains(x) != m.closure(b).contains(x), || {
                format!("A = {}, x = {}", show(m, a), m.label(x))
            });
        }
    }
    Ok(())
}

pub(crate) fn fully_closed_minor(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let fully: Vec<SubsetMask> = all_sets(m).filter(|&a| m.is_fully_closed(a)).collect();
    for x in m.ground().iter() {
        let kept = kept_without(m, x);
        let single = SubsetMask::singleton(x);
        for (op, n) in [("\\", m.delete(single)?), ("/", m.contract(single)?)] {
            for &a in &fully {
                if !a.contains(x) {
                    continue;
                }
                let rest = a.without(x).compress(&kept);
                t.check(n.is_fully_closed(rest), || {
                    format!("A = {} in M{op}{}", show(m, a), m.label(x))
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn up_down(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let e = m.ground();
    for a in all_sets(m) {
        let cl = m.closure(a);
        let co = m.coclosure(a);
        let base = m.lam(a) as i64;
        for x in (e - a).iter() {
            let expected = match (cl.contains(x), co.contains(x)) {
                (true, true) => -1,
                (false, false) => 1,
                _ => 0,
            };
            let got = m.lam(a.with(x)) as i64 - base;
            t.check(got == expected, || {
                format!("A = {}, x = {}: change {got}, expected {expected}", show(m, a), m.label(x))
            });
        }
    }
    Ok(())
}

pub(crate) fn contract_lambda(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for x in m.ground().iter() {
        if m.is_loop(x) {
            t.skip();
            continue;
        }
        let n = m.contract(SubsetMask::singleton(x))?;
        let kept = kept_without(m, x);
        for a in all_sets(&n) {
            let am = a.expand(&kept);
            let drop = usize::from(m.closure(am).contains(x));
            t.check(n.lam(a) + drop == m.lam(am), || {
                format!("A = {}, x = {}", show(m, am), m.label(x))
            });
        }
    }
    Ok(())
}

pub(crate) fn interior_pairs(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for a in all_sets(m) {
        let inter = m.boundary_profile(a)?.interior;
        t.check(inter.len() != 1, || {
            format!("X = {} has interior {}", show(m, a), show(m, inter))
        });
    }
    Ok(())
}

pub(crate) fn guts_coguts(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    if !k_connected(m, 3)? {
        t.skip();
        return Ok(());
    }
    for f in all_sets(m) {
        if f.len() < 3 || m.lam(f) > 2 || !m.is_fully_closed(f) {
            continue;
        }
        let p = m.boundary_profile(f)?;
        let (g, c, i) = (p.guts, p.coguts, p.interior);
        let w = || format!("F = {}: guts {}, coguts {}", show(m, f), show(m, g), show(m, c));
        t.check((g & c).is_empty(), w);
        if !g.is_empty() && !c.is_empty() {
            t.check(g.len() == 1 && c.len() == 1, w);
        }
        let line = m.r(f) == 2 && g == f && c.is_empty() && i.is_empty();
        let coline = m.r_dual(f) == 2 && c == f && g.is_empty() && i.is_empty();
        let fan = f.len() == 4
            && g.len() == 1
            && c.len() == 1
            && i.len() == 2
            && m.r(i | g) == 2
            && m.r_dual(i | c) == 2;
        t.check(line || coline || fan || i.len() >= 3, w);
    }
    Ok(())
}

pub(crate) fn titanic_cover(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    for a in all_sets(m) {
        let tit = m.is_titanic(a)?;
        t.check(tit == m.is_titanic_by_cover(a)?, || {
            format!("A = {}: partition and cover tests disagree", show(m, a))
        });
        if tit {
            t.check(m.is_solid(a)?, || format!("A = {} titanic but not solid", show(m, a)));
        }
    }
    Ok(())
}

/// Binary incidence representation of a graph: one row per vertex.
fn incidence(vertices: usize, edges: &[[usize; 2]], labels: Vec<String>) -> Result<Matroid> {
    let cols = edges
        .iter()
        .map(|&[u, v]| {
            let mut c = vec![0u64; vertices];
            if u != v {
                c[u] = 1;
                c[v] = 1;
            }
            c
        })
        .collect();
    Matroid::linear(2, cols, labels)
}

pub(crate) fn backend_agreement(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.matroid;
    let n = m.len();
    let table = m.rank_table()?;
    let rebuilt = Matroid::from_rank_table(m.labels().to_vec(), table.to_vec())?;
    let twice = m.dual().dual();
    let other = match m.expr() {
        MatroidExpr::Graphic { vertices, edges, .. } => {
            Some(incidence(*vertices, edges, m.labels().to_vec())?)
        }
        _ => None,
    };
    let uniform = match m.expr() {
        MatroidExpr::Uniform { rank, .. } => Some(*rank),
        _ => None,
    };
    for a in all_sets(m) {
        let r = m.r(a);
        t.check(
            rebuilt.r(a) == r && rebuilt.closure(a) == m.closure(a) && twice.r(a) == r,
            || format!("rank-table or double dual differs at {}", show(m, a)),
        );
        if let Some(o) = &other {
            t.check(o.r(a) == r, || format!("graphic and incidence ranks differ at {}", show(m, a)));
        }
        if let Some(k) = uniform {
            t.check(r == a.len().min(k), || format!("uniform rank wrong at {}", show(m, a)));
        }
    }
    for x in 0..n {
        let kept = kept_without(m, x);
        let single = SubsetMask::singleton(x);
        let d = m.delete(single)?;
        let c = m.contract(single)?;
        for a in all_sets(&d) {
            let am = a.expand(&kept);
            t.check(d.r(a) == m.r(am) && c.r(a) + m.r(single) == m.r(am | single), || {
                format!("minor ranks differ at {} removing {}", show(m, am), m.label(x))
            });
        }
    }
    Ok(())
}
