//! Small index sets backed by a `u64` bitmask.
//!
//! Every carrier in this crate (points of a space, elements of a group,
//! arrows of a groupoid) is indexed `0..n` with `n <= 64`, so subsets are
//! single machine words. All iteration is in ascending index order, which
//! keeps downstream output deterministic.

/// Maximum carrier size supported by [`IdxSet`].
pub const MAX_INDEX: usize = 64;

/// A subset of `{0, .., 63}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IdxSet(u64);

impl IdxSet {
    pub const EMPTY: IdxSet = IdxSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> IdxSet {
        assert!(n <= MAX_INDEX, "carrier size {n} exceeds {MAX_INDEX}");
        if n == 64 {
            IdxSet(u64::MAX)
        } else {
            IdxSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> IdxSet {
        assert!(i < MAX_INDEX, "index {i} out of range");
        IdxSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> IdxSet {
        let mut s = IdxSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_INDEX, "index {i} out of range");
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < MAX_INDEX, "index {i} out of range");
        self.0 &= !(1u64 << i);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < MAX_INDEX && self.0 & (1u64 << i) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(&self, other: IdxSet) -> IdxSet {
        IdxSet(self.0 | other.0)
    }

    pub fn inter(&self, other: IdxSet) -> IdxSet {
        IdxSet(self.0 & other.0)
    }

    /// Set difference `self \ other`.
    pub fn diff(&self, other: IdxSet) -> IdxSet {
        IdxSet(self.0 & !other.0)
    }

    /// Complement within the carrier `{0, .., n-1}`.
    pub fn complement(&self, n: usize) -> IdxSet {
        IdxSet::full(n).diff(*self)
    }

    pub fn is_subset(&self, other: IdxSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(&self, other: IdxSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
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

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for IdxSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        IdxSet::from_indices(iter)
    }
}

impl std::fmt::Debug for IdxSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl std::fmt::Display for IdxSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
