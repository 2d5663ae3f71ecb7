//! Fixed-width element sets.
//!
//! A [`SubsetMask`] is a bit vector over a matroid's ground-set ordering:
//! bit `i` is the element with index `i`. Ground sets are limited to 64
//! elements; exhaustive operations enforce much smaller caps (see
//! [`crate::limits`]).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub};

/// Largest ground set any matroid may have.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The full set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n >= 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        SubsetMask(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(SubsetMask::EMPTY, |m, i| m.with(i))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1u64 << i))
    }

    /// Complement relative to a ground set of `n` elements.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    #[inline]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Highest element index plus one (0 for the empty set).
    #[inline]
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, in increasing numeric order, starting with the
    /// empty set.
    pub fn submasks(self) -> Submasks {
        Submasks {
            next: Some(0),
            set: self.0,
        }
    }

    /// Compare as ascending index lists, lexicographically.
    ///
    /// `{0, 5} < {1}` and `{0} < {0, 1}`.
    pub fn lex_cmp(self, other: SubsetMask) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        // Elements below `low` agree. Whoever holds `low` has the smaller
        // next entry, unless the other list has already ended.
        let below = low - 1;
        let (holder, other_set) = if self.0 & low != 0 {
            (self, other)
        } else {
            (other, self)
        };
        let other_ended = other_set.0 & !below == 0;
        let holder_first = !other_ended;
        match (holder == self, holder_first) {
            (true, true) | (false, false) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    /// Map a mask over `kept.len()` positions to the parent ground set, where
    /// `kept[i]` is the parent index of position `i`.
    pub fn expand(self, kept: &[usize]) -> SubsetMask {
        let mut out = 0u64;
        for i in self.iter() {
            out |= 1u64 << kept[i];
        }
        SubsetMask(out)
    }

    /// Inverse of [`SubsetMask::expand`]: restrict a parent mask to `kept` and
    /// renumber. Parent elements outside `kept` are dropped.
    pub fn compress(self, kept: &[usize]) -> SubsetMask {
        let mut out = 0u64;
        for (i, &p) in kept.iter().enumerate() {
            if self.contains(p) {
                out |= 1u64 << i;
            }
        }
        SubsetMask(out)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitOrAssign for SubsetMask {
    #[inline]
    fn bitor_assign(&mut self, rhs: SubsetMask) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & rhs.0)
    }
}

impl BitAndAssign for SubsetMask {
    #[inline]
    fn bitand_assign(&mut self, rhs: SubsetMask) {
        self.0 &= rhs.0;
    }
}

impl BitXor for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitxor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 ^ rhs.0)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn sub(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !rhs.0)
    }
}

/// Iterator over the element indices of a mask, ascending.
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Carry-rippler enumeration of all submasks.
pub struct Submasks {
    next: Option<u64>,
    set: u64,
}

impl Iterator for Submasks {
    type Item = SubsetMask;

    #[inline]
    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        let nxt = cur.wrapping_sub(self.set) & self.set;
        self.next = (nxt != 0).then_some(nxt);
        Some(SubsetMask(cur))
    }
}

/// Superset-closure over a dense table indexed by mask: after the call,
/// `table[a]` is the fold of `table[b]` over all `b ⊇ a`.
pub(crate) fn fold_supersets<T: Copy>(table: &mut [T], n: usize, f: impl Fn(T, T) -> T) {
    debug_assert_eq!(table.len(), 1usize << n);
    for i in 0..n {
        let bit = 1usize << i;
        for a in 0..table.len() {
            if a & bit == 0 {
                table[a] = f(table[a], table[a | bit]);
            }
        }
    }
}

/// Subset-closure: after the call, `table[a]` folds `table[b]` over `b ⊆ a`.
pub(crate) fn fold_subsets<T: Copy>(table: &mut [T], n: usize, f: impl Fn(T, T) -> T) {
    debug_assert_eq!(table.len(), 1usize << n);
    for i in 0..n {
        let bit = 1usize << i;
        for a in 0..table.len() {
            if a & bit != 0 {
                table[a] = f(table[a], table[a ^ bit]);
            }
        }
    }
}

/// Inclusion-maximal masks among those flagged in a dense table, in mask
/// order.
pub(crate) fn maximal_in_table(member: &[bool], n: usize) -> Vec<SubsetMask> {
    debug_assert_eq!(member.len(), 1usize << n);
    // up[a]: some member contains a.
    let mut up = member.to_vec();
    fold_supersets(&mut up, n, |p, q| p || q);
    (0..member.len())
        .filter(|&a| member[a] && (0..n).all(|i| a >> i & 1 == 1 || !up[a | 1 << i]))
        .map(|a| SubsetMask(a as u64))
        .collect()
}

/// Keep only the inclusion-maximal members, sorted by mask value.
pub fn maximal_members(sets: impl IntoIterator<Item = SubsetMask>) -> Vec<SubsetMask> {
    let mut all: Vec<SubsetMask> = sets.into_iter().collect();
    all.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    all.dedup();
    let mut kept: Vec<SubsetMask> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| s.is_subset_of(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_of_0x55() {
        let got: Vec<u64> = SubsetMask(0x55).submasks().map(|m| m.0).collect();
        assert_eq!(
            got,
            [0, 1, 4, 5, 16, 17, 20, 21, 64, 65, 68, 69, 80, 81, 84, 85]
        );
        assert_eq!(SubsetMask::EMPTY.submasks().count(), 1);
    }

    #[test]
    fn lex_order_on_index_lists() {
        let a = SubsetMask::from_indices([0, 5]);
        let b = SubsetMask::from_indices([1]);
        let c = SubsetMask::from_indices([0]);
        let d = SubsetMask::from_indices([0, 1]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(a), Ordering::Greater);
        assert_eq!(c.lex_cmp(d), Ordering::Less);
        assert_eq!(d.lex_cmp(c), Ordering::Greater);
        assert_eq!(d.lex_cmp(a), Ordering::Less);
        assert_eq!(SubsetMask::EMPTY.lex_cmp(c), Ordering::Less);
    }

    #[test]
    fn expand_compress_inverse() {
        let kept = [1, 3, 4, 7];
        let m = SubsetMask::from_indices([0, 2, 3]);
        let up = m.expand(&kept);
        assert_eq!(up, SubsetMask::from_indices([1, 4, 7]));
        assert_eq!(up.compress(&kept), m);
        assert_eq!(SubsetMask::from_indices([0, 2, 5]).compress(&kept), SubsetMask::EMPTY);
    }

    #[test]
    fn maximal_members_is_antichain() {
        let sets = [0b0011u64, 0b0001, 0b0110, 0b0111, 0b1000]
            .map(SubsetMask);
        assert_eq!(
            maximal_members(sets),
            vec![SubsetMask(0b0111), SubsetMask(0b1000)]
        );
    }

    #[test]
    fn superset_fold_min() {
        let mut t = vec![9u8, 5, 7, 3];
        fold_supersets(&mut t, 2, |a, b| a.min(b));
        assert_eq!(t, vec![3, 3, 3, 3]);
        let mut t = vec![9u8, 5, 7, 8];
        fold_supersets(&mut t, 2, |a, b| a.min(b));
        assert_eq!(t, vec![5, 5, 7, 8]);
    }
}
