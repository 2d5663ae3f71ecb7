//! Orienting the separations of `M/a` (or `M\a`) from a tangle of `M`.
//!
//! Deletion is handled by contracting in the dual: a tangle of `M` is also a
//! tangle of `M*`, and `M*/a = (M\a)*` has the same separations as `M\a`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::reduction::{kept_indices, Removal, RemovalKind};
use crate::tangle::{verify_tangle, Tangle, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeparationType {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "II")]
    II,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Justification {
    /// Exactly one side lies inside a small set of the original tangle.
    WeakSide,
    /// Neither side does; the side meeting the flat in low connectivity wins.
    CanonY,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationVerdict {
    /// The partition, as masks over the minor's ground set.
    pub x: SubsetMask,
    pub y: SubsetMask,
    pub kind: SeparationType,
    pub small_side: SubsetMask,
    pub justification: Justification,
}

/// A flat `F` of the tangle matroid together with an element `a ∈ F` whose
/// removal keeps `λ(F - a) = λ(F)` and leaves `F - a` solid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatContext {
    /// Mask over the original ground set.
    pub flat: SubsetMask,
    /// Rank of `F` in the tangle matroid.
    pub rank: usize,
    pub removal: Removal,
    /// Whether `F - a` is titanic after the removal, which guarantees the
    /// determined family is a tangle.
    pub titanic: bool,
}

/// The matroid in which the removal is a contraction, and the contracted
/// minor.
struct Working {
    w: Matroid,
    nw: Matroid,
    n: Matroid,
    kept: Vec<usize>,
    a: usize,
}

impl Working {
    fn new(m: &Matroid, removal: &Removal) -> Result<Working> {
        let a = m
            .index_of(&removal.element)
            .ok_or_else(|| Error::structural(format!("no element {:?}", removal.element)))?;
        let w = match removal.kind {
            RemovalKind::Contract => m.clone(),
            RemovalKind::Delete => m.dual(),
        };
        let nw = w.contract(SubsetMask::singleton(a))?;
        let n = removal.apply(m)?;
        let kept = kept_indices(m, &n)?;
        Ok(Working { w, nw, n, kept, a })
    }
}

impl FlatContext {
    /// Check the hypotheses and record whether `F - a` is titanic.
    pub fn new(t: &Tangle, flat: SubsetMask, removal: Removal) -> Result<FlatContext> {
        let m = t.matroid();
        m.check_mask(flat)?;
        let k = t.order();
        let ranks = crate::tangle::tangle_rank_table(t)?;
        let rank = ranks[flat.index()] as usize;
        let e = m.ground();
        if (e - flat).iter().any(|x| ranks[flat.with(x).index()] as usize == rank) {
            return Err(Error::precondition(format!(
                "{:?} is not a flat of the tangle matroid",
                m.labels_of(flat)
            )));
        }
        if rank + 2 > k {
            return Err(Error::precondition(format!(
                "flat has rank {rank} in the tangle matroid; at most {} allowed",
                k.saturating_sub(2)
            )));
        }
        let wk = Working::new(m, &removal)?;
        if !flat.contains(wk.a) {
            return Err(Error::precondition(format!(
                "{} is not in the flat",
                removal.element
            )));
        }
        let rest = flat.without(wk.a).compress(&wk.kept);
        let before = m.lam(flat);
        let after = wk.nw.lam(rest);
        if before != rank || after != rank {
            return Err(Error::precondition(format!(
                "connectivity of the flat changes from {before} to {after} (tangle rank {rank})"
            )));
        }
        if !wk.nw.is_solid(rest)? {
            return Err(Error::precondition("the flat minus the element is not solid"));
        }
        let titanic = wk.nw.is_titanic(rest)?;
        Ok(FlatContext {
            flat,
            rank,
            removal,
            titanic,
        })
    }
}

fn classify_in(
    t: &Tangle,
    wk: &Working,
    x: SubsetMask,
    ctx: Option<&FlatContext>,
) -> Result<OrientationVerdict> {
    let k = t.order();
    let y = wk.nw.ground() - x;
    if wk.nw.lam(x) + 2 > k {
        return Err(Error::domain(format!(
            "λ = {} is above {} in the minor",
            wk.nw.lam(x),
            k.saturating_sub(2)
        )));
    }
    let xm = x.expand(&wk.kept);
    let ym = y.expand(&wk.kept);
    let dump = || {
        format!(
            "matroid: {}\ntangle: {}\nremoval: {:?}\nX: {:?}",
            t.matroid().expr().to_json(),
            serde_json::to_string(&t.to_json()).unwrap_or_default(),
            ctx.map(|c| c.removal.clone()),
            wk.nw.labels_of(x)
        )
    };
    match (t.is_weak(xm), t.is_weak(ym)) {
        (true, true) => Err(Error::internal("both sides of a separation are weak", dump())),
        (true, false) | (false, true) => {
            let small_side = if t.is_weak(xm) { x } else { y };
            Ok(OrientationVerdict {
                x,
                y,
                kind: SeparationType::I,
                small_side,
                justification: Justification::WeakSide,
            })
        }
        (false, false) => {
            let Some(ctx) = ctx else {
                return Err(Error::domain(
                    "Type II separation needs a flat context to be oriented",
                ));
            };
            let w = &wk.w;
            let a = wk.a;
            if w.lam(xm) + 1 != k
                || w.lam(ym) + 1 != k
                || !w.closure(xm).contains(a)
                || !w.closure(ym).contains(a)
            {
                return Err(Error::internal(
                    "Type II separation without λ = k-1 on both sides and the element in both closures",
                    dump(),
                ));
            }
            let f = ctx.flat.without(a).compress(&wk.kept);
            let g = (t.matroid().ground() - ctx.flat).compress(&wk.kept);
            let fits = |s: SubsetMask| wk.nw.lam(s & f) < ctx.rank && wk.nw.lam(s & g) + 2 <= k;
            let small_side = match (fits(x), fits(y)) {
                (true, false) => x,
                (false, true) => y,
                _ => {
                    return Err(Error::internal(
                        "Type II separation does not have exactly one canonical side",
                        dump(),
                    ))
                }
            };
            Ok(OrientationVerdict {
                x,
                y,
                kind: SeparationType::II,
                small_side,
                justification: Justification::CanonY,
            })
        }
    }
}

/// Orient the partition `(X, E(N) - X)` of the minor `N` reached by
/// `removal`. `x` is a mask over `N`'s ground set.
pub fn classify_separation(
    t: &Tangle,
    removal: &Removal,
    x: SubsetMask,
    ctx: Option<&FlatContext>,
) -> Result<OrientationVerdict> {
    if let Some(c) = ctx {
        if c.removal != *removal {
            return Err(Error::precondition("flat context was built for another removal"));
        }
    }
    let wk = Working::new(t.matroid(), removal)?;
    wk.nw.check_mask(x)?;
    classify_in(t, &wk, x, ctx)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeterminedFamily {
    Tangle(Tangle),
    /// The oriented sides fail an axiom (normally three of them cover the
    /// ground set).
    NotATangle(Violation),
}

/// Orient every separation of the minor and test whether the chosen sides
/// form a tangle.
pub fn determined_family(t: &Tangle, ctx: &FlatContext) -> Result<DeterminedFamily> {
    let wk = Working::new(t.matroid(), &ctx.removal)?;
    let k = t.order();
    let seps = wk.nw.canonical_separations(k.saturating_sub(2))?;
    let family = seps
        .into_iter()
        .map(|x| classify_in(t, &wk, x, Some(ctx)).map(|v| v.small_side))
        .collect::<Result<Vec<_>>>()?;
    match verify_tangle(&wk.n, k, &family)? {
        None => Ok(DeterminedFamily::Tangle(Tangle::from_family_unchecked(
            &wk.n, k, family,
        ))),
        Some(v) if ctx.titanic => Err(Error::internal(
            format!("determined family over a titanic flat fails {}", v.axiom),
            format!(
                "matroid: {}\ntangle: {}\nflat: {:?}\nremoval: {}",
                t.matroid().expr().to_json(),
                serde_json::to_string(&t.to_json()).unwrap_or_default(),
                t.matroid().labels_of(ctx.flat),
                ctx.removal
            ),
        )),
        Some(v) => Ok(DeterminedFamily::NotATangle(v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{generated_tangle, Generated};
    use crate::tangle::enumerate_tangles;

    #[test]
    fn loop_of_tangle_matroid_is_a_rank_zero_context() {
        let u = Matroid::uniform(3, 7).unwrap();
        let z = Matroid::uniform_labeled(1, vec!["z".into()]).unwrap();
        let m = Matroid::direct_sum(&[u, z]).unwrap();
        let t = &enumerate_tangles(&m, 4).unwrap()[0];
        let zi = m.index_of("z").unwrap();
        let ctx = FlatContext::new(t, SubsetMask::singleton(zi), Removal::delete("z")).unwrap();
        assert_eq!(ctx.rank, 0);
        assert!(ctx.titanic);
        let DeterminedFamily::Tangle(d) = determined_family(t, &ctx).unwrap() else {
            panic!("expected a tangle");
        };
        assert_eq!(
            generated_tangle(t, &Removal::delete("z")).unwrap(),
            Generated::Unique(d)
        );
    }

    #[test]
    fn type_two_needs_context() {
        let m = crate::corpus::breadth_critical_matroid(6).unwrap();
        let t = &enumerate_tangles(&m, 4).unwrap()[0];
        let r = Removal::contract("a");
        let n = r.apply(&m).unwrap();
        let mut type_two = 0;
        for x in n.canonical_separations(2).unwrap() {
            match classify_separation(t, &r, x, None) {
                Ok(v) => assert_eq!(v.kind, SeparationType::I),
                Err(Error::Domain(_)) => type_two += 1,
                Err(e) => panic!("{e}"),
            }
        }
        assert!(type_two > 0);
    }
}
