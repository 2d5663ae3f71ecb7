//! Tangle matroids, breadth, cover size, and truncation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits;
use crate::mask::{fold_subsets, fold_supersets, SubsetMask};
use crate::matroid::Matroid;
use crate::tangle::Tangle;

/// The rank-`(k-1)` matroid whose hyperplanes are the maximal small sets of
/// a tangle.
#[derive(Debug, Clone)]
pub struct TangleMatroid {
    matroid: Matroid,
    source: Tangle,
}

impl TangleMatroid {
    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn source(&self) -> &Tangle {
        &self.source
    }

    /// Rank `k-1`, hyperplanes equal to the maximal small sets, and round.
    /// Returns a description of the first failed property.
    pub fn check(&self) -> Result<Option<String>> {
        let k = self.source.order();
        if self.matroid.full_rank() + 1 != k {
            return Ok(Some(format!(
                "tangle matroid has rank {}, expected {}",
                self.matroid.full_rank(),
                k - 1
            )));
        }
        let mut hs = self.matroid.hyperplanes()?;
        crate::tangle::sort_sets(&mut hs);
        if hs != self.source.maximal_small() {
            return Ok(Some("hyperplanes differ from the maximal small sets".into()));
        }
        if !self.matroid.is_round()? {
            return Ok(Some("tangle matroid is not round".into()));
        }
        Ok(None)
    }
}

/// Rank of every subset in the tangle matroid: `k-1` on strong sets, and
/// otherwise the least `λ` of a small superset.
pub(crate) fn tangle_rank_table(t: &Tangle) -> Result<Vec<u8>> {
    let m = t.matroid();
    let n = m.len();
    limits::check_scan(n, "tangle matroid")?;
    let k = t.order();
    let top = (k - 1) as u8;
    let weak = t.weak_table()?;
    let lam = m.lambda_table()?;
    let mut r: Vec<u8> = (0..1usize << n)
        .map(|a| {
            if weak[a] && (lam[a] as usize) + 2 <= k {
                lam[a]
            } else {
                top
            }
        })
        .collect();
    fold_supersets(&mut r, n, |a, b| a.min(b));
    Ok(r)
}

/// Build `M_T` and verify its defining properties.
pub fn tangle_matroid(t: &Tangle) -> Result<TangleMatroid> {
    let ranks = tangle_rank_table(t)?;
    let matroid =
        Matroid::from_rank_fn_unchecked(t.matroid().labels().to_vec(), |a| ranks[a.index()] as usize)?;
    let tm = TangleMatroid {
        matroid,
        source: t.clone(),
    };
    if let Some(problem) = tm.check()? {
        return Err(Error::internal(
            problem,
            format!(
                "matroid: {}\ntangle: {}",
                t.matroid().expr().to_json(),
                serde_json::to_string(&t.to_json()).unwrap_or_default()
            ),
        ));
    }
    Ok(tm)
}

/// Size and lexicographically least witness of a largest spanning uniform
/// restriction of the tangle matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreadthCertificate {
    pub value: usize,
    pub witness: SubsetMask,
}

/// Largest `U` with `r_T(U) = k-1` and no dependent set of size at most
/// `k-1` inside `U`, computed from the rank table of `M_T`.
pub(crate) fn breadth_of_rank_table(n: usize, rank: usize, r: &[u8]) -> BreadthCertificate {
    // bad[A]: A contains a dependent set of at most `rank` elements.
    let mut bad: Vec<bool> = (0..r.len())
        .map(|a| {
            let size = (a as u64).count_ones() as usize;
            size <= rank && (r[a] as usize) < size
        })
        .collect();
    fold_subsets(&mut bad, n, |a, b| a || b);
    let mut best: Option<SubsetMask> = None;
    for a in 0..r.len() {
        if bad[a] || r[a] as usize != rank {
            continue;
        }
        let cand = SubsetMask(a as u64);
        best = match best {
            None => Some(cand),
            Some(b) if cand.len() > b.len() => Some(cand),
            Some(b) if cand.len() == b.len() && cand.lex_cmp(b).is_lt() => Some(cand),
            keep => keep,
        };
    }
    let witness = best.expect("a basis of the tangle matroid always qualifies");
    BreadthCertificate {
        value: witness.len(),
        witness,
    }
}

pub fn breadth(t: &Tangle) -> Result<BreadthCertificate> {
    let r = tangle_rank_table(t)?;
    Ok(breadth_of_rank_table(
        t.matroid().len(),
        t.order() - 1,
        &r,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub value: usize,
    #[serde(skip)]
    pub witness: Vec<SubsetMask>,
    /// Set for orders below 3, where cover size is not a standard notion.
    pub warning: Option<String>,
}

/// Minimum number of small sets covering the ground set.
pub fn cover_size(t: &Tangle) -> Result<CoverReport> {
    let e = t.matroid().ground();
    let sets = t.maximal_small().to_vec();
    let union = sets.iter().fold(SubsetMask::EMPTY, |u, &s| u | s);
    if union != e {
        return Err(Error::domain(format!(
            "the small sets of this order-{} tangle do not cover the ground set",
            t.order()
        )));
    }
    let warning = (t.order() < 3).then(|| {
        format!(
            "cover size of an order-{} tangle; small sets need not cover the ground set at this order",
            t.order()
        )
    });
    if e.is_empty() {
        return Ok(CoverReport {
            value: 0,
            witness: Vec::new(),
            warning,
        });
    }
    let largest = sets.iter().map(|s| s.len()).max().unwrap_or(1).max(1);
    let mut best: Vec<SubsetMask> = greedy_cover(&sets, e);
    let mut chosen = Vec::new();
    exact_cover(&sets, e, SubsetMask::EMPTY, largest, &mut chosen, &mut best);
    Ok(CoverReport {
        value: best.len(),
        witness: best,
        warning,
    })
}

fn greedy_cover(sets: &[SubsetMask], e: SubsetMask) -> Vec<SubsetMask> {
    let mut covered = SubsetMask::EMPTY;
    let mut out = Vec::new();
    while covered != e {
        let s = *sets
            .iter()
            .max_by_key(|s| ((**s - covered).len(), std::cmp::Reverse(s.0)))
            .expect("nonempty family");
        covered |= s;
        out.push(s);
    }
    out
}

fn exact_cover(
    sets: &[SubsetMask],
    e: SubsetMask,
    covered: SubsetMask,
    largest: usize,
    chosen: &mut Vec<SubsetMask>,
    best: &mut Vec<SubsetMask>,
) {
    let missing = e - covered;
    let Some(x) = missing.first() else {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return;
    };
    let lower = missing.len().div_ceil(largest);
    if chosen.len() + lower >= best.len() {
        return;
    }
    for &s in sets.iter().filter(|s| s.contains(x)) {
        chosen.push(s);
        exact_cover(sets, e, covered | s, largest, chosen, best);
        chosen.pop();
    }
}

/// The order-`t` tangle made of the members with `λ ≤ t-2`.
///
/// The result is checked against the rank-`(t-1)` truncation of the tangle
/// matroid.
pub fn truncate_tangle(t: &Tangle, to: usize) -> Result<Tangle> {
    let k = t.order();
    if to < 2 || to + 1 > k {
        return Err(Error::domain(format!(
            "truncation order {to} outside 2..={} for an order-{k} tangle",
            k.saturating_sub(1)
        )));
    }
    let m = t.matroid();
    let lam = m.lambda_table()?;
    let family = t
        .small_sets()?
        .into_iter()
        .filter(|a| (lam[a.index()] as usize) + 2 <= to);
    let out = Tangle::from_family_unchecked(m, to, family);
    let expected = tangle_rank_table(t)?
        .into_iter()
        .map(|r| r.min((to - 1) as u8))
        .collect::<Vec<u8>>();
    if tangle_rank_table(&out)? != expected {
        return Err(Error::internal(
            "truncated tangle's matroid differs from the truncated tangle matroid",
            format!(
                "matroid: {}\ntangle: {}\nto: {to}",
                m.expr().to_json(),
                serde_json::to_string(&t.to_json()).unwrap_or_default()
            ),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::enumerate_tangles;

    #[test]
    fn u37_tangle_matroid_is_u37() {
        let m = Matroid::uniform(3, 7).unwrap();
        let t = &enumerate_tangles(&m, 4).unwrap()[0];
        let tm = tangle_matroid(t).unwrap();
        assert!(tm.matroid().same_as(&m).unwrap());
        let b = breadth(t).unwrap();
        assert_eq!(b.value, 7);
        assert_eq!(b.witness, m.ground());
        assert_eq!(cover_size(t).unwrap().value, 4);
    }

    #[test]
    fn k4_order_three() {
        let m = Matroid::graphic(
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            crate::matroid::default_labels(6),
        )
        .unwrap();
        let ts = enumerate_tangles(&m, 3).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(breadth(&ts[0]).unwrap().value, 6);
        assert_eq!(cover_size(&ts[0]).unwrap().value, 6);
    }

    #[test]
    fn truncation_of_u37() {
        let m = Matroid::uniform(3, 7).unwrap();
        let t = &enumerate_tangles(&m, 4).unwrap()[0];
        let t3 = truncate_tangle(t, 3).unwrap();
        assert!(t3.maximal_small().iter().all(|h| h.len() == 1));
        let tm = tangle_matroid(&t3).unwrap();
        assert_eq!(
            tm.matroid().rank_table().unwrap(),
            Matroid::uniform(2, 7).unwrap().rank_table().unwrap()
        );
        assert!(matches!(truncate_tangle(t, 4), Err(Error::Domain(_))));
        assert!(matches!(truncate_tangle(t, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn component_tangle_breadth() {
        let u = Matroid::uniform(3, 5).unwrap();
        let m = Matroid::direct_sum(&[u, Matroid::uniform(1, 3).unwrap()]).unwrap();
        let ts = enumerate_tangles(&m, 2).unwrap();
        let sizes: Vec<usize> = ts.iter().map(|t| breadth(t).unwrap().value).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![3, 5]);
    }
}
