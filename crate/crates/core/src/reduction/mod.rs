//! Tangles across minors: induced tangles, generated tangles, the Type I/II
//! orientation of separations after contracting an element, and the
//! breadth-preserving reduction to a weakly 4-connected minor.

mod classify;
mod critical;
mod reduce;

pub use classify::{
    classify_separation, determined_family, DeterminedFamily, FlatContext, Justification,
    OrientationVerdict, SeparationType,
};
pub use critical::{
    is_breadth_critical_one_step, is_breadth_critical_recursive, CriticalityReport,
    RecursiveCriticality, RemovalOutcome,
};
pub use reduce::{reduce_to_weakly_4_connected, ReductionStep, ReductionTrace, Rule};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mask::{maximal_in_table, SubsetMask};
use crate::matroid::Matroid;
use crate::tangle::{search_tangles, verify_tangle, SearchOptions, Tangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RemovalKind {
    Delete,
    Contract,
}

/// A single-element deletion or contraction, named by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Removal {
    pub element: String,
    pub kind: RemovalKind,
}

impl Removal {
    pub fn delete(element: impl Into<String>) -> Self {
        Removal {
            element: element.into(),
            kind: RemovalKind::Delete,
        }
    }

    pub fn contract(element: impl Into<String>) -> Self {
        Removal {
            element: element.into(),
            kind: RemovalKind::Contract,
        }
    }

    pub fn apply(&self, m: &Matroid) -> Result<Matroid> {
        let x = m.mask_of(&[&self.element])?;
        match self.kind {
            RemovalKind::Delete => m.delete(x),
            RemovalKind::Contract => m.contract(x),
        }
    }
}

impl fmt::Display for Removal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RemovalKind::Delete => write!(f, "\\{}", self.element),
            RemovalKind::Contract => write!(f, "/{}", self.element),
        }
    }
}

/// Indices in `m` of the elements of the minor `n`, in `n`'s order.
pub(crate) fn kept_indices(m: &Matroid, n: &Matroid) -> Result<Vec<usize>> {
    n.labels()
        .iter()
        .map(|l| {
            m.index_of(l)
                .ok_or_else(|| Error::structural(format!("{l:?} is not an element of the larger matroid")))
        })
        .collect()
}

/// The tangle of `M` induced by a tangle of the minor reached along `path`:
/// every `A` with `λ_M(A) ≤ k-2` whose trace on the minor is small.
pub fn induce_up(m: &Matroid, path: &[Removal], tn: &Tangle) -> Result<Tangle> {
    let mut n = m.clone();
    for step in path {
        n = step.apply(&n)?;
    }
    if n.labels() != tn.matroid().labels() {
        return Err(Error::precondition(
            "the tangle does not live on the minor reached by the removal path",
        ));
    }
    let k = tn.order();
    if let Some(v) = verify_tangle(&n, k, tn.maximal_small())? {
        return Err(Error::precondition(format!(
            "the minor's family is not a tangle: {} fails",
            v.axiom
        )));
    }
    let tn = tn.on(&n)?;
    if path.is_empty() {
        return Ok(tn);
    }
    let kept = kept_indices(m, &n)?;
    let size = m.len();
    crate::limits::check_scan(size, "induced tangle")?;
    let lam = m.lambda_table()?;
    let member: Vec<bool> = (0..1u64 << size)
        .map(|a| {
            (lam[a as usize] as usize) + 2 <= k && tn.is_weak(SubsetMask(a).compress(&kept))
        })
        .collect();
    let family = maximal_in_table(&member, size);
    Ok(Tangle::from_family_unchecked(m, k, family))
}

/// Outcome of looking for the tangle generated in a minor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    /// No tangle of the minor contains every restricted member.
    None,
    Unique(Tangle),
    /// Several do; the count is exact.
    Multiple(usize),
}

impl Generated {
    pub fn unique(self) -> Option<Tangle> {
        match self {
            Generated::Unique(t) => Some(t),
            _ => None,
        }
    }
}

/// The tangle of order `k` in the single-element minor that contains
/// `A ∩ E(N)` for every small `A`.
pub fn generated_tangle(t: &Tangle, removal: &Removal) -> Result<Generated> {
    let n = removal.apply(t.matroid())?;
    generated_in(t, &n)
}

/// As [`generated_tangle`], for the minor `M \ D / C`.
pub fn generated_in_minor(t: &Tangle, delete: SubsetMask, contract: SubsetMask) -> Result<Generated> {
    let n = t.matroid().minor(delete, contract)?;
    generated_in(t, &n)
}

/// Generated tangle in an arbitrary minor `n` of `t`'s matroid.
pub fn generated_in(t: &Tangle, n: &Matroid) -> Result<Generated> {
    let m = t.matroid();
    let kept = kept_indices(m, n)?;
    let seeds = crate::mask::maximal_members(
        t.maximal_small().iter().map(|h| h.compress(&kept)),
    );
    let opts = SearchOptions {
        seeds,
        ..Default::default()
    };
    let mut found = search_tangles(n, t.order(), &opts)?;
    Ok(match found.len() {
        0 => Generated::None,
        1 => Generated::Unique(found.pop().expect("one tangle")),
        c => Generated::Multiple(c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::{breadth, enumerate_tangles, tangle_matroid};

    #[test]
    fn induced_from_u37_over_a_coloop() {
        let u = Matroid::uniform(3, 7).unwrap();
        let m = Matroid::direct_sum(&[u.clone(), Matroid::uniform_labeled(1, vec!["z".into()]).unwrap()])
            .unwrap();
        let path = [Removal::contract("z")];
        let n = path[0].apply(&m).unwrap();
        let tn = &enumerate_tangles(&n, 4).unwrap()[0];
        let up = induce_up(&m, &path, tn).unwrap();
        assert_eq!(verify_tangle(&m, 4, up.maximal_small()).unwrap(), None);
        let tm = tangle_matroid(&up).unwrap();
        let z = m.index_of("z").unwrap();
        assert!(tm.matroid().is_loop(z));
        assert_eq!(induce_up(&n, &[], tn).unwrap(), *tn);
    }

    #[test]
    fn generated_in_golden_minors() {
        let m = crate::corpus::breadth_critical_matroid(6).unwrap();
        let t = &enumerate_tangles(&m, 4).unwrap()[0];
        for r in [Removal::contract("a"), Removal::delete("a")] {
            let g = generated_tangle(t, &r).unwrap().unique().expect("unique");
            assert!(breadth(&g).unwrap().value < 12, "{r}");
        }
    }
}
