//! Tangles: representation, axiom checks, membership, and JSON.
//!
//! A [`Tangle`] of order `k` is stored as the antichain of its maximal small
//! sets. A set `A` is small when `λ(A) ≤ k-2` and `A` lies inside a stored
//! maximal set; it is weak when it lies inside a stored maximal set,
//! whatever its connectivity.

mod enumerate;
mod kconn;
mod tmatroid;

pub use enumerate::{enumerate_tangles, search_tangles, SearchOptions};
pub use kconn::tangle_from_k_connected_set;
pub use tmatroid::{
    breadth, cover_size, tangle_matroid, truncate_tangle, BreadthCertificate, CoverReport,
    TangleMatroid,
};
pub(crate) use tmatroid::tangle_rank_table;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits;
use crate::mask::{maximal_members, SubsetMask};
use crate::matroid::{Matroid, MatroidExpr};

#[derive(Clone)]
pub struct Tangle {
    matroid: Matroid,
    order: usize,
    maximal_small: Vec<SubsetMask>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Small,
    Large,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    Weak,
    Strong,
}

/// An axiom violation found by [`verify_tangle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// One of `T1`, `T2`, `T3`, `T4`.
    pub axiom: &'static str,
    pub witness: Vec<SubsetMask>,
}

/// Sort key for lists of sets: ascending index lists, lexicographically.
pub(crate) fn sort_sets(sets: &mut [SubsetMask]) {
    sets.sort_unstable_by(|a, b| a.lex_cmp(*b));
}

impl fmt::Debug for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<Vec<String>> = self
            .maximal_small
            .iter()
            .map(|&h| self.matroid.labels_of(h))
            .collect();
        f.debug_struct("Tangle")
            .field("order", &self.order)
            .field("maximal_small", &sets)
            .finish()
    }
}

impl PartialEq for Tangle {
    /// Same order, same maximal small sets, and matroids on the same labels.
    /// Rank functions are not compared.
    fn eq(&self, other: &Tangle) -> bool {
        self.order == other.order
            && self.maximal_small == other.maximal_small
            && self.matroid.labels() == other.matroid.labels()
    }
}

impl Eq for Tangle {}

impl Tangle {
    /// Build from any family whose downward closure (within sets of
    /// connectivity at most `k-2`) is the tangle. The family is reduced to its
    /// maximal members; no axiom is checked.
    pub(crate) fn from_family_unchecked(
        matroid: &Matroid,
        order: usize,
        family: impl IntoIterator<Item = SubsetMask>,
    ) -> Tangle {
        let mut maximal_small = maximal_members(family);
        sort_sets(&mut maximal_small);
        Tangle {
            matroid: matroid.clone(),
            order,
            maximal_small,
        }
    }

    /// Build a tangle from a family of small sets (typically the maximal
    /// ones) and check every axiom.
    pub fn new(matroid: &Matroid, order: usize, family: &[SubsetMask]) -> Result<Tangle> {
        if let Some(v) = verify_tangle(matroid, order, family)? {
            return Err(Error::precondition(format!(
                "not a tangle of order {order}: {} fails on {:?}",
                v.axiom,
                v.witness
                    .iter()
                    .map(|&w| matroid.labels_of(w))
                    .collect::<Vec<_>>()
            )));
        }
        Ok(Tangle::from_family_unchecked(matroid, order, family.iter().copied()))
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Maximal small sets, sorted as ascending index lists.
    pub fn maximal_small(&self) -> &[SubsetMask] {
        &self.maximal_small
    }

    /// The same family viewed as a tangle of another matroid on the same
    /// labels (used for duals, which share every tangle).
    pub fn on(&self, matroid: &Matroid) -> Result<Tangle> {
        if matroid.labels() != self.matroid.labels() {
            return Err(Error::structural("tangle moved to a matroid with other labels"));
        }
        Ok(Tangle {
            matroid: matroid.clone(),
            order: self.order,
            maximal_small: self.maximal_small.clone(),
        })
    }

    #[inline]
    pub fn is_weak(&self, a: SubsetMask) -> bool {
        self.maximal_small.iter().any(|&h| a.is_subset_of(h))
    }

    #[inline]
    pub fn is_small(&self, a: SubsetMask) -> bool {
        self.order >= 2 && self.matroid.lam(a) + 2 <= self.order && self.is_weak(a)
    }

    pub fn strength(&self, a: SubsetMask) -> Result<Strength> {
        self.matroid.check_mask(a)?;
        Ok(if self.is_weak(a) {
            Strength::Weak
        } else {
            Strength::Strong
        })
    }

    /// Small/large (defined only when `λ(A) ≤ k-2`) and weak/strong.
    pub fn membership(&self, a: SubsetMask) -> Result<(Side, Strength)> {
        let strength = self.strength(a)?;
        let l = self.matroid.lam(a);
        if l + 2 > self.order {
            return Err(Error::domain(format!(
                "small/large is undefined for a set with λ = {l} in a tangle of order {}",
                self.order
            )));
        }
        let side = if strength == Strength::Weak {
            Side::Small
        } else {
            Side::Large
        };
        Ok((side, strength))
    }

    /// Indicator over all subsets: `weak[A]` iff `A` lies in a maximal small
    /// set.
    pub(crate) fn weak_table(&self) -> Result<Vec<bool>> {
        let n = self.matroid.len();
        limits::check_scan(n, "tangle table")?;
        let mut weak = vec![false; 1usize << n];
        for &h in &self.maximal_small {
            weak[h.index()] = true;
        }
        crate::mask::fold_supersets(&mut weak, n, |a, b| a || b);
        Ok(weak)
    }

    /// Every small set, in mask order.
    pub fn small_sets(&self) -> Result<Vec<SubsetMask>> {
        let weak = self.weak_table()?;
        let lam = self.matroid.lambda_table()?;
        let k = self.order;
        Ok((0..weak.len())
            .filter(|&a| weak[a] && (lam[a] as usize) + 2 <= k)
            .map(|a| SubsetMask(a as u64))
            .collect())
    }

    pub fn to_json(&self) -> TangleJson {
        TangleJson {
            order: self.order,
            maximal_small: self
                .maximal_small
                .iter()
                .map(|&h| self.matroid.labels_of(h))
                .collect(),
        }
    }

    /// Parse and check against `matroid`.
    pub fn from_json(matroid: &Matroid, json: &TangleJson) -> Result<Tangle> {
        let family = json
            .maximal_small
            .iter()
            .map(|set| matroid.mask_of(set))
            .collect::<Result<Vec<_>>>()?;
        Tangle::new(matroid, json.order, &family)
    }
}

/// Serialized tangle: its order and maximal small sets as label arrays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleJson {
    pub order: usize,
    pub maximal_small: Vec<Vec<String>>,
}

/// A matroid together with one of its tangles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleDocument {
    pub matroid: MatroidExpr,
    pub tangle: TangleJson,
}

impl TangleDocument {
    pub fn new(t: &Tangle) -> Self {
        TangleDocument {
            matroid: t.matroid().expr().clone(),
            tangle: t.to_json(),
        }
    }

    pub fn load(&self) -> Result<Tangle> {
        let m = self.matroid.build()?;
        Tangle::from_json(&m, &self.tangle)
    }
}

/// Check the tangle axioms for the family whose members, and every subset of
/// a member with `λ ≤ k-2`, are declared small. Reports the first violation,
/// checking T1, T4, T2, T3 in that order.
pub fn verify_tangle(m: &Matroid, k: usize, family: &[SubsetMask]) -> Result<Option<Violation>> {
    for &a in family {
        m.check_mask(a)?;
    }
    if k == 0 {
        return Err(Error::domain("tangle order must be at least 1"));
    }
    let e = m.ground();
    for &a in family {
        if m.lam(a) + 2 > k {
            return Ok(Some(Violation {
                axiom: "T1",
                witness: vec![a],
            }));
        }
    }
    for &a in family {
        let rest = e - a;
        if rest.len() == 1 {
            return Ok(Some(Violation {
                axiom: "T4",
                witness: vec![rest],
            }));
        }
    }
    if k >= 2 {
        let seps = m.canonical_separations(k - 2)?;
        let weak = |a: SubsetMask| family.iter().any(|&h| a.is_subset_of(h));
        for a in seps {
            if !weak(a) && !weak(e - a) {
                return Ok(Some(Violation {
                    axiom: "T2",
                    witness: vec![a],
                }));
            }
        }
    }
    let maximal = maximal_members(family.iter().copied());
    for (i, &x) in maximal.iter().enumerate() {
        for (j, &y) in maximal.iter().enumerate().skip(i) {
            for &z in &maximal[j..] {
                if x | y | z == e {
                    return Ok(Some(Violation {
                        axiom: "T3",
                        witness: vec![x, y, z],
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u37() -> Matroid {
        Matroid::uniform(3, 7).unwrap()
    }

    fn pairs(n: usize) -> Vec<SubsetMask> {
        (0..1u64 << n)
            .map(SubsetMask)
            .filter(|a| a.len() == 2)
            .collect()
    }

    #[test]
    fn u37_pairs_form_a_tangle() {
        let m = u37();
        assert_eq!(verify_tangle(&m, 4, &pairs(7)).unwrap(), None);
        let t = Tangle::new(&m, 4, &pairs(7)).unwrap();
        assert_eq!(
            t.membership(SubsetMask(1)).unwrap(),
            (Side::Small, Strength::Weak)
        );
        assert_eq!(
            t.membership(SubsetMask(0b11111)).unwrap(),
            (Side::Large, Strength::Strong)
        );
        assert!(matches!(t.membership(SubsetMask(0b111)), Err(Error::Domain(_))));
    }

    #[test]
    fn t4_and_t2_violations() {
        let m = u37();
        let mut fam = pairs(7);
        fam.push(SubsetMask(0b111_1110));
        let v = verify_tangle(&m, 4, &fam).unwrap().unwrap();
        assert_eq!(v.axiom, "T4");
        assert_eq!(v.witness, vec![SubsetMask(1)]);

        let missing = SubsetMask(0b11);
        let fam: Vec<_> = pairs(7).into_iter().filter(|&p| p != missing).collect();
        let v = verify_tangle(&m, 4, &fam).unwrap().unwrap();
        assert_eq!(v.axiom, "T2");
        assert_eq!(v.witness, vec![missing]);
    }

    #[test]
    fn json_round_trip() {
        let m = u37();
        let t = Tangle::new(&m, 4, &pairs(7)).unwrap();
        let doc = TangleDocument::new(&t);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.contains(r#""tangle":{"order":4,"maximal_small":[["e1","e2"],"#));
        let back: TangleDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.load().unwrap(), t);
    }
}
