//! Test-only oracles, independent of the tangle engine.

#![allow(dead_code)]

use tanglekit::{Matroid, SubsetMask};

/// Every tangle of order `k`, found by orienting each separation
/// `{A, E-A}` with `λ(A) ≤ k-2` directly and keeping the orientations where
/// no three small sets cover `E` and no `E - e` is small. Returns each
/// tangle as its full list of small sets, sorted by mask.
pub fn raw_tangles(m: &Matroid, k: usize) -> Vec<Vec<u64>> {
    let n = m.len();
    assert!(n <= 10, "oracle is exponential in the number of separations");
    let full = (1u64 << n) - 1;
    let r = |a: u64| m.r(SubsetMask(a));
    let lam = |a: u64| r(a) + r(full & !a) - r(full);
    // One representative per separation; small masks first so that T3
    // prunes early.
    let mut seps: Vec<u64> = (0..=full)
        .filter(|&a| lam(a) + 2 <= k && a < (full & !a))
        .collect();
    seps.sort_by_key(|&a| (a.count_ones().min(n as u32 - a.count_ones()), a));

    let mut out = Vec::new();
    let mut small: Vec<u64> = Vec::new();
    let mut unions = vec![0u32; 1 << n];
    search(&seps, 0, full, &mut small, &mut unions, &mut out);
    for t in &mut out {
        t.sort_unstable();
    }
    out.sort();
    out
}

fn search(seps: &[u64], i: usize, full: u64, small: &mut Vec<u64>, unions: &mut [u32], out: &mut Vec<Vec<u64>>) {
    if i == seps.len() {
        out.push(small.clone());
        return;
    }
    let a = seps[i];
    for side in [a, full & !a] {
        if (full & !side).count_ones() == 1 {
            continue; // E - e is never small
        }
        // Unions of pairs that now involve `side`.
        let mut added: Vec<usize> = small.iter().map(|&b| (b | side) as usize).collect();
        added.push(side as usize);
        for &u in &added {
            unions[u] += 1;
        }
        let ok = unions
            .iter()
            .enumerate()
            .all(|(u, &c)| c == 0 || (u as u64 | side) != full);
        if ok {
            small.push(side);
            search(seps, i + 1, full, small, unions, out);
            small.pop();
        }
        for &u in &added {
            unions[u] -= 1;
        }
    }
}

/// Maximal members of a family of masks, sorted.
pub fn maximal(sets: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = sets
        .iter()
        .copied()
        .filter(|&a| !sets.iter().any(|&b| b != a && a & b == a))
        .collect();
    out.sort_unstable();
    out
}

/// Label arrays for `sets`, in the form the engine serializes.
pub fn as_labels(m: &Matroid, sets: &[u64]) -> Vec<Vec<String>> {
    let mut v: Vec<Vec<String>> = sets.iter().map(|&a| m.labels_of(SubsetMask(a))).collect();
    v.sort();
    v
}
