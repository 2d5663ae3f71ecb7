//! The connectivity calculus: guts and coguts, solid and titanic sets,
//! roundness, connectivity levels, and k-connected sets.

use serde::Serialize;

use crate::error::Result;
use crate::limits;
use crate::mask::SubsetMask;
use crate::matroid::Matroid;

/// Guts, coguts, and interior of a set `X`, each restricted to `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryProfile {
    pub guts: SubsetMask,
    pub coguts: SubsetMask,
    pub interior: SubsetMask,
}

/// Result of an `(s0, .., st)`-connectivity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SvecVerdict {
    pub svec: Vec<usize>,
    pub holds: bool,
    /// One side of a violating partition.
    #[serde(skip)]
    pub violation: Option<SubsetMask>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub three_connected: bool,
    pub weakly_four_connected: bool,
    /// For each failed flag, one side of a separation that breaks it.
    pub connected_witness: Option<SubsetMask>,
    pub three_connected_witness: Option<SubsetMask>,
    pub weakly_four_connected_witness: Option<SubsetMask>,
    pub svec: Option<SvecVerdict>,
}

impl Matroid {
    /// `cl(X) ∩ cl(E - X)`.
    pub fn guts(&self, x: SubsetMask) -> SubsetMask {
        self.closure(x) & self.closure(x.complement(self.len()))
    }

    /// `cl*(X) ∩ cl*(E - X)`.
    pub fn coguts(&self, x: SubsetMask) -> SubsetMask {
        self.coclosure(x) & self.coclosure(x.complement(self.len()))
    }

    pub fn boundary_profile(&self, x: SubsetMask) -> Result<BoundaryProfile> {
        self.check_mask(x)?;
        let guts = self.guts(x) & x;
        let coguts = self.coguts(x) & x;
        Ok(BoundaryProfile {
            guts,
            coguts,
            interior: x - guts - coguts,
        })
    }

    /// No 2-partition of `X` (empty parts allowed) has both parts of smaller
    /// connectivity than `X`.
    pub fn is_solid(&self, x: SubsetMask) -> Result<bool> {
        self.check_mask(x)?;
        let lx = self.lam(x);
        Ok(!x
            .submasks()
            .any(|a| self.lam(a) < lx && self.lam(x - a) < lx))
    }

    /// No 3-partition of `A` (empty parts allowed) has all three parts of
    /// smaller connectivity than `A`.
    pub fn is_titanic(&self, a: SubsetMask) -> Result<bool> {
        self.check_mask(a)?;
        let la = self.lam(a);
        if la == 0 {
            return Ok(true);
        }
        for x in a.submasks() {
            if self.lam(x) >= la {
                continue;
            }
            let rest = a - x;
            for y in rest.submasks() {
                if self.lam(y) < la && self.lam(rest - y) < la {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Titanic test in cover form: no three subsets of `A` of smaller
    /// connectivity have union `A`. Equivalent to [`Matroid::is_titanic`];
    /// kept separate so the two can be cross-checked.
    pub fn is_titanic_by_cover(&self, a: SubsetMask) -> Result<bool> {
        self.check_mask(a)?;
        let la = self.lam(a);
        if la == 0 {
            return Ok(true);
        }
        let kept: Vec<usize> = a.iter().collect();
        let m = kept.len();
        let size = 1usize << m;
        // up[w]: some subset of A containing w has connectivity below λ(A).
        let mut up: Vec<bool> = (0..size as u64)
            .map(|w| self.lam(SubsetMask(w).expand(&kept)) < la)
            .collect();
        crate::mask::fold_supersets(&mut up, m, |p, q| p || q);
        // two[b]: b is covered by two such sets.
        let two: Vec<bool> = (0..size as u64)
            .map(|b| {
                SubsetMask(b)
                    .submasks()
                    .any(|w| up[w.index()] && up[(b ^ w.0) as usize])
            })
            .collect();
        let full = size as u64 - 1;
        Ok(!SubsetMask(full)
            .submasks()
            .any(|w| up[w.index()] && two[(full ^ w.0) as usize]))
    }

    /// Whether no two hyperplanes cover the ground set.
    pub fn is_round(&self) -> Result<bool> {
        let hs = self.hyperplanes()?;
        let e = self.ground();
        for (i, &h1) in hs.iter().enumerate() {
            for &h2 in &hs[i..] {
                if h1 | h2 == e {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// First set `A` (in mask order) with `λ(A) = i ≤ t` whose two sides both
    /// exceed `s_i`.
    pub fn svec_violation(&self, svec: &[usize]) -> Result<Option<SubsetMask>> {
        limits::check_scan(self.len(), "connectivity scan")?;
        let n = self.len();
        let lam = self.lambda_table()?;
        for a in 1..(1u64 << n) {
            let l = lam[a as usize] as usize;
            if let Some(&s) = svec.get(l) {
                let size = a.count_ones() as usize;
                if size > s && n - size > s {
                    return Ok(Some(SubsetMask(a)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.svec_violation(&[0])?.is_none())
    }

    /// Tutte 3-connectivity.
    pub fn is_three_connected(&self) -> Result<bool> {
        Ok(self.svec_violation(&[0, 1])?.is_none())
    }

    /// 3-connected, and every exact 3-separation has a side of at most four
    /// elements.
    pub fn is_weakly_four_connected(&self) -> Result<bool> {
        Ok(self.svec_violation(&[0, 1, 4])?.is_none())
    }

    pub fn connectivity_report(&self, svec: Option<&[usize]>) -> Result<ConnectivityReport> {
        let c = self.svec_violation(&[0])?;
        let c3 = self.svec_violation(&[0, 1])?;
        let c4 = self.svec_violation(&[0, 1, 4])?;
        let sv = match svec {
            Some(s) => {
                let v = self.svec_violation(s)?;
                Some(SvecVerdict {
                    svec: s.to_vec(),
                    holds: v.is_none(),
                    violation: v,
                })
            }
            None => None,
        };
        Ok(ConnectivityReport {
            connected: c.is_none(),
            three_connected: c3.is_none(),
            weakly_four_connected: c4.is_none(),
            connected_witness: c,
            three_connected_witness: c3,
            weakly_four_connected_witness: c4,
            svec: sv,
        })
    }

    /// Checks `λ(A) ≥ min(|A∩Z|, |Z−A|, k−1)` for every `A`. Returns the first
    /// violating `A` in mask order, or `None` if `Z` is k-connected.
    pub fn k_connected_violation(&self, z: SubsetMask, k: usize) -> Result<Option<SubsetMask>> {
        self.check_mask(z)?;
        limits::check_scan(self.len(), "k-connected set check")?;
        let lam = self.lambda_table()?;
        let cap = k.saturating_sub(1);
        for a in 0..(1u64 << self.len()) {
            let am = SubsetMask(a);
            let bound = (am & z).len().min((z - am).len()).min(cap);
            if (lam[a as usize] as usize) < bound {
                return Ok(Some(am));
            }
        }
        Ok(None)
    }

    pub fn is_k_connected_set(&self, z: SubsetMask, k: usize) -> Result<bool> {
        Ok(self.k_connected_violation(z, k)?.is_none())
    }

    /// Canonical sides of all separations with `λ(A) ≤ max_lambda`: the side
    /// with fewer elements, ties broken by smaller mask. Sorted by size, then
    /// mask.
    pub fn canonical_separations(&self, max_lambda: usize) -> Result<Vec<SubsetMask>> {
        limits::check_scan(self.len(), "separation enumeration")?;
        let n = self.len();
        let lam = self.lambda_table()?;
        let full = SubsetMask::full(n);
        let mut out: Vec<SubsetMask> = (0..(1u64 << n))
            .map(SubsetMask)
            .filter(|&a| lam[a.index()] as usize <= max_lambda && is_canonical_side(a, full))
            .collect();
        out.sort_unstable_by_key(|a| (a.len(), a.0));
        Ok(out)
    }
}

/// Whether `a` is the representative of `{a, E - a}`.
pub(crate) fn is_canonical_side(a: SubsetMask, full: SubsetMask) -> bool {
    let b = full - a;
    a.len() < b.len() || (a.len() == b.len() && a.0 < b.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rank-4 wheel: spokes s1..s4 from hub 0, rim r12, r23, r34, r41.
    fn wheel4() -> Matroid {
        let edges = [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (3, 4), (0, 4), (4, 1)];
        let labels = ["s1", "r12", "s2", "r23", "s3", "r34", "s4", "r41"]
            .map(String::from)
            .to_vec();
        Matroid::graphic(5, &edges, labels).unwrap()
    }

    #[test]
    fn wheel_fan_profile() {
        let w = wheel4();
        let x = w.mask_of(&["s1", "r12", "s2", "r23"]).unwrap();
        assert_eq!(w.lam(x), 2);
        let p = w.boundary_profile(x).unwrap();
        assert_eq!(w.labels_of(p.guts), ["s1"]);
        assert_eq!(w.labels_of(p.coguts), ["r23"]);
        assert_eq!(p.interior.len(), 2);
    }

    #[test]
    fn titanic_forms_agree_on_small_sets() {
        let u = Matroid::uniform(3, 7).unwrap();
        let a = SubsetMask(0b111);
        assert!(!u.is_titanic(a).unwrap());
        assert!(!u.is_titanic_by_cover(a).unwrap());
        let w = wheel4();
        for a in 0u64..256 {
            let a = SubsetMask(a);
            assert_eq!(w.is_titanic(a).unwrap(), w.is_titanic_by_cover(a).unwrap(), "{a:?}");
        }
    }

    #[test]
    fn round_examples() {
        assert!(Matroid::uniform(3, 7).unwrap().is_round().unwrap());
        assert!(!Matroid::uniform(2, 2).unwrap().is_round().unwrap());
    }

    #[test]
    fn weak_four_connectivity() {
        let u = Matroid::uniform(3, 7).unwrap();
        let r = u.connectivity_report(None).unwrap();
        assert!(r.connected && r.three_connected && r.weakly_four_connected);
        let two = Matroid::direct_sum(&[u.clone(), u.clone()]).unwrap();
        let r = two.connectivity_report(Some(&[0])).unwrap();
        assert!(!r.connected);
        assert!(!r.svec.unwrap().holds);
    }

    #[test]
    fn k_connected_sets() {
        let u = Matroid::uniform(3, 7).unwrap();
        assert!(u.is_k_connected_set(u.ground(), 4).unwrap());
        let two = Matroid::direct_sum(&[u.clone(), u.clone()]).unwrap();
        let z = SubsetMask(0b111 | 0b111 << 7);
        let v = two.k_connected_violation(z, 4).unwrap().unwrap();
        let bound = (v & z).len().min((z - v).len()).min(3);
        assert!(two.lam(v) < bound);
        let part = SubsetMask::full(7);
        assert_eq!(two.lam(part), 0);
        let tiny = Matroid::uniform(2, 5).unwrap();
        assert!(tiny.is_k_connected_set(SubsetMask(1), 9).unwrap());
    }

    #[test]
    fn u37_separations_at_order_four() {
        let u = Matroid::uniform(3, 7).unwrap();
        let seps = u.canonical_separations(2).unwrap();
        assert_eq!(seps.len(), 29);
        assert!(Matroid::uniform(2, 4)
            .unwrap()
            .canonical_separations(usize::MAX)
            .unwrap()
            .iter()
            .all(|a| a.len() <= 2));
    }
}
