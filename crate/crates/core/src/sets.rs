//! Sets of hyperplane indices packed into a machine word.

use std::fmt;

/// Maximum number of hyperplanes a [`HyperplaneSet`] can hold.
pub const MAX_SET_BITS: usize = 64;

fn bit(i: usize) -> u64 {
    assert!(
        i < MAX_SET_BITS,
        "hyperplane index {i} does not fit in a set"
    );
    1u64 << i
}

/// A set of hyperplane indices, e.g. the separating set of a region.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperplaneSet(pub u64);

impl HyperplaneSet {
    pub const EMPTY: HyperplaneSet = HyperplaneSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_SET_BITS);
        if n == 64 {
            HyperplaneSet(u64::MAX)
        } else {
            HyperplaneSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        HyperplaneSet(bit(i))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(HyperplaneSet::EMPTY, |s, i| s.with(i))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_SET_BITS && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        HyperplaneSet(self.0 | bit(i))
    }

    pub fn without(self, i: usize) -> Self {
        HyperplaneSet(self.0 & !bit(i))
    }

    pub fn toggle(self, i: usize) -> Self {
        HyperplaneSet(self.0 ^ bit(i))
    }

    pub fn is_subset(self, other: HyperplaneSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: HyperplaneSet) -> Self {
        HyperplaneSet(self.0 | other.0)
    }

    pub fn intersection(self, other: HyperplaneSet) -> Self {
        HyperplaneSet(self.0 & other.0)
    }

    pub fn difference(self, other: HyperplaneSet) -> Self {
        HyperplaneSet(self.0 & !other.0)
    }

    /// Complement within `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        HyperplaneSet(!self.0 & HyperplaneSet::full(n).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for HyperplaneSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for HyperplaneSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        HyperplaneSet::from_indices(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn iter_roundtrip(bits in any::<u64>()) {
            let s = HyperplaneSet(bits);
            prop_assert_eq!(HyperplaneSet::from_indices(s.iter()), s);
            prop_assert_eq!(s.iter().count(), s.len());
        }

        #[test]
        fn complement_is_involution(bits in 0u64..(1 << 20)) {
            let s = HyperplaneSet(bits);
            prop_assert_eq!(s.complement(20).complement(20), s);
            prop_assert!(s.intersection(s.complement(20)).is_empty());
        }
    }
}
