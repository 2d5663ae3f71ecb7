//! Exhaustive tangle enumeration by orienting separations.
//!
//! Each canonical separation `{A, E - A}` with `λ(A) ≤ k-2` is oriented by
//! choosing which side is small. The search keeps the set of chosen small
//! sets together with a bitmap of everything they contain, and rejects a
//! choice as soon as three small sets (repetition allowed) would cover the
//! ground set or a co-singleton would become small. Forced orientations are
//! propagated before every branch.

use crate::error::{Error, Result};
use crate::limits;
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::tangle::Tangle;

/// Search controls for [`search_tangles`].
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Sets that must be small in every reported tangle. Each needs
    /// `λ ≤ k-2`.
    pub seeds: Vec<SubsetMask>,
    /// Stop once this many tangles are found.
    pub stop_after: Option<usize>,
    /// Maximum number of branching nodes before giving up.
    pub node_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            seeds: Vec::new(),
            stop_after: None,
            node_budget: 2_000_000,
        }
    }
}

/// All tangles of order `k`, sorted by their maximal small sets.
pub fn enumerate_tangles(m: &Matroid, k: usize) -> Result<Vec<Tangle>> {
    search_tangles(m, k, &SearchOptions::default())
}

#[derive(Clone)]
struct State {
    /// Orientation per canonical separation: 0 undecided, 1 canonical side
    /// small, 2 complement small.
    orient: Vec<u8>,
    small: Vec<SubsetMask>,
    /// Bitmap over all subsets: contained in some chosen small set.
    weak: Vec<u64>,
    undecided: usize,
}

impl State {
    #[inline]
    fn is_weak(&self, a: SubsetMask) -> bool {
        let i = a.index();
        self.weak[i >> 6] >> (i & 63) & 1 == 1
    }

    fn mark(&mut self, s: SubsetMask) {
        if self.is_weak(s) {
            return;
        }
        for sub in s.submasks() {
            let i = sub.index();
            self.weak[i >> 6] |= 1 << (i & 63);
        }
    }
}

struct Search<'a> {
    full: SubsetMask,
    seps: Vec<SubsetMask>,
    /// Position of each canonical side in `seps`, indexed by mask.
    position: Vec<u32>,
    opts: &'a SearchOptions,
    nodes: u64,
    found: Vec<Vec<SubsetMask>>,
}

const NONE: u32 = u32::MAX;

impl Search<'_> {
    fn slot(&self, s: SubsetMask) -> (usize, u8) {
        let p = self.position[s.index()];
        if p != NONE {
            (p as usize, 1)
        } else {
            (self.position[(self.full - s).index()] as usize, 2)
        }
    }

    /// Whether `s` may be added as a small set.
    fn can_add(&self, st: &State, s: SubsetMask) -> bool {
        let r = self.full - s;
        if r.len() <= 1 {
            return false;
        }
        if st.is_weak(r) {
            return false;
        }
        st.small
            .iter()
            .all(|&x| x.is_disjoint(r) || !st.is_weak(r - x))
    }

    fn add(&self, st: &mut State, s: SubsetMask) {
        let (i, o) = self.slot(s);
        debug_assert_eq!(st.orient[i], 0);
        st.orient[i] = o;
        st.undecided -= 1;
        st.small.push(s);
        st.mark(s);
    }

    /// Apply forced orientations to a fixpoint. Returns false on conflict.
    fn propagate(&self, st: &mut State) -> bool {
        loop {
            let mut changed = false;
            for i in 0..self.seps.len() {
                if st.orient[i] != 0 {
                    continue;
                }
                let a = self.seps[i];
                let b = self.full - a;
                match (self.can_add(st, a), self.can_add(st, b)) {
                    (false, false) => return false,
                    (true, false) => {
                        self.add(st, a);
                        changed = true;
                    }
                    (false, true) => {
                        self.add(st, b);
                        changed = true;
                    }
                    (true, true) => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn run(&mut self, mut st: State) -> Result<()> {
        if self.opts.stop_after.is_some_and(|c| self.found.len() >= c) {
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.opts.node_budget {
            return Err(Error::resource(
                "tangle search node budget",
                format!(
                    "{} nodes explored, {} tangles found so far, {} of {} separations undecided at the current node",
                    self.nodes - 1,
                    self.found.len(),
                    st.undecided,
                    self.seps.len()
                ),
            ));
        }
        if !self.propagate(&mut st) {
            return Ok(());
        }
        let Some(i) = st.orient.iter().position(|&o| o == 0) else {
            self.found.push(st.small);
            return Ok(());
        };
        let a = self.seps[i];
        for side in [a, self.full - a] {
            if self.can_add(&st, side) {
                let mut next = st.clone();
                self.add(&mut next, side);
                self.run(next)?;
            }
        }
        Ok(())
    }
}

/// Tangles of order `k` in which every seed set is small.
pub fn search_tangles(m: &Matroid, k: usize, opts: &SearchOptions) -> Result<Vec<Tangle>> {
    if k == 0 {
        return Err(Error::domain("tangle order must be at least 1"));
    }
    for &s in &opts.seeds {
        m.check_mask(s)?;
    }
    if k == 1 {
        // Nothing has λ < 0, so the empty family is the only candidate.
        if !opts.seeds.is_empty() {
            return Ok(Vec::new());
        }
        return Ok(vec![Tangle::from_family_unchecked(m, 1, [])]);
    }
    if m.is_empty() {
        // ∅ would have to be small, and ∅ ∪ ∅ ∪ ∅ = E.
        return Ok(Vec::new());
    }
    let n = m.len();
    limits::check_scan(n, "tangle enumeration")?;
    let seps = m.canonical_separations(k - 2)?;
    let mut position = vec![NONE; 1usize << n];
    for (i, &s) in seps.iter().enumerate() {
        position[s.index()] = i as u32;
    }
    let mut search = Search {
        full: m.ground(),
        seps,
        position,
        opts,
        nodes: 0,
        found: Vec::new(),
    };
    let mut st = State {
        orient: vec![0; search.seps.len()],
        small: Vec::new(),
        weak: vec![0; (1usize << n).div_ceil(64)],
        undecided: search.seps.len(),
    };
    for &s in &opts.seeds {
        if m.lam(s) + 2 > k {
            return Err(Error::precondition(format!(
                "seed {:?} has λ = {} above {}",
                m.labels_of(s),
                m.lam(s),
                k - 2
            )));
        }
        let (i, o) = search.slot(s);
        if st.orient[i] == o {
            continue;
        }
        if st.orient[i] != 0 || !search.can_add(&st, s) {
            return Ok(Vec::new());
        }
        search.add(&mut st, s);
    }
    search.run(st)?;
    let mut out: Vec<Tangle> = search
        .found
        .into_iter()
        .map(|small| Tangle::from_family_unchecked(m, k, small))
        .collect();
    out.sort_by(|a, b| {
        a.maximal_small()
            .iter()
            .map(|s| s.iter().collect::<Vec<_>>())
            .cmp(b.maximal_small().iter().map(|s| s.iter().collect::<Vec<_>>()))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::verify_tangle;

    #[test]
    fn u37_has_one_four_tangle() {
        let m = Matroid::uniform(3, 7).unwrap();
        let ts = enumerate_tangles(&m, 4).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].maximal_small().len(), 21);
        assert!(ts[0].maximal_small().iter().all(|h| h.len() == 2));
        assert_eq!(enumerate_tangles(&m, 5).unwrap().len(), 0);
    }

    #[test]
    fn order_one_is_empty_family() {
        let m = Matroid::uniform(2, 4).unwrap();
        let ts = enumerate_tangles(&m, 1).unwrap();
        assert_eq!(ts.len(), 1);
        assert!(ts[0].maximal_small().is_empty());
    }

    #[test]
    fn components_give_order_two_tangles() {
        let u = Matroid::uniform(2, 3).unwrap();
        let m = Matroid::direct_sum(&[u.clone(), u.clone(), Matroid::uniform(0, 1).unwrap()])
            .unwrap();
        let ts = enumerate_tangles(&m, 2).unwrap();
        assert_eq!(ts.len(), 2);
        for t in &ts {
            assert_eq!(verify_tangle(&m, 2, t.maximal_small()).unwrap(), None);
        }
    }

    #[test]
    fn seeds_filter() {
        let u = Matroid::uniform(2, 3).unwrap();
        let m = Matroid::direct_sum(&[u.clone(), u]).unwrap();
        let opts = SearchOptions {
            seeds: vec![SubsetMask(0b111)],
            ..Default::default()
        };
        let ts = search_tangles(&m, 2, &opts).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].maximal_small(), &[SubsetMask(0b111)]);
    }

    #[test]
    fn budget_exhaustion_is_a_resource_error() {
        let u = Matroid::uniform(2, 3).unwrap();
        let m = Matroid::direct_sum(&[u.clone(), u]).unwrap();
        let opts = SearchOptions {
            node_budget: 1,
            ..Default::default()
        };
        assert!(matches!(
            search_tangles(&m, 2, &opts),
            Err(Error::Resource { .. })
        ));
    }
}
