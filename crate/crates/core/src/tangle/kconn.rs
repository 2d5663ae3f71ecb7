//! Tangles from k-connected sets.

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::tangle::tmatroid::tangle_rank_table;
use crate::tangle::Tangle;

/// The tangle `T_Z = {A : λ(A) ≤ k-2, |A ∩ Z| ≤ k-2}` of a k-connected set
/// `Z` with `|Z| ≥ 3k-5`, for `k ≥ 3`.
///
/// The result is checked to make `M_T | Z` uniform of rank `k-1`.
pub fn tangle_from_k_connected_set(m: &Matroid, z: SubsetMask, k: usize) -> Result<Tangle> {
    m.check_mask(z)?;
    if k < 3 {
        return Err(Error::domain(format!("order {k} is below 3")));
    }
    if z.len() + 5 < 3 * k {
        return Err(Error::domain(format!(
            "|Z| = {} is below 3k-5 = {}",
            z.len(),
            3 * k - 5
        )));
    }
    if let Some(a) = m.k_connected_violation(z, k)? {
        return Err(Error::domain(format!(
            "Z is not {k}-connected: λ({:?}) = {}",
            m.labels_of(a),
            m.lam(a)
        )));
    }
    let lam = m.lambda_table()?;
    let family = (0..lam.len() as u64).map(SubsetMask).filter(|&a| {
        (lam[a.index()] as usize) + 2 <= k && (a & z).len() + 2 <= k
    });
    let t = Tangle::from_family_unchecked(m, k, family);
    let r = tangle_rank_table(&t)?;
    let uniform = z
        .submasks()
        .all(|a| r[a.index()] as usize == a.len().min(k - 1));
    if !uniform {
        return Err(Error::internal(
            "tangle matroid restricted to Z is not uniform",
            format!("matroid: {}\nZ: {:?}\nk: {k}", m.expr().to_json(), m.labels_of(z)),
        ));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::enumerate_tangles;

    #[test]
    fn u37_whole_ground_set() {
        let m = Matroid::uniform(3, 7).unwrap();
        let t = tangle_from_k_connected_set(&m, m.ground(), 4).unwrap();
        assert_eq!(t, enumerate_tangles(&m, 4).unwrap()[0]);
    }

    #[test]
    fn rejects_small_z() {
        let m = Matroid::uniform(3, 7).unwrap();
        let z = SubsetMask(0b11_1111);
        assert!(matches!(
            tangle_from_k_connected_set(&m, z, 4),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            tangle_from_k_connected_set(&m, m.ground(), 2),
            Err(Error::Domain(_))
        ));
    }
}
