//! Fixed-width membership masks over a finite carrier `0..len`.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of the carrier `0..len`.
///
/// Every binary operation requires both operands to share the same width;
/// mixing widths is a programming error and panics. Public entry points that
/// accept user-provided subsets check widths first and return
/// [`Error::SizeMismatch`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: FixedBitSet,
}

impl Subset {
    pub fn empty(len: usize) -> Self {
        Subset {
            bits: FixedBitSet::with_capacity(len),
        }
    }

    pub fn full(len: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(len);
        bits.insert_range(..);
        Subset { bits }
    }

    pub fn singleton(len: usize, i: usize) -> Self {
        let mut s = Subset::empty(len);
        s.insert(i);
        s
    }

    /// Builds a subset from member indices, rejecting indices outside the carrier.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, members: I) -> Result<Self> {
        let mut s = Subset::empty(len);
        for i in members {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, size: len });
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub fn from_bools(bools: &[bool]) -> Self {
        let mut s = Subset::empty(bools.len());
        for (i, &b) in bools.iter().enumerate() {
            if b {
                s.insert(i);
            }
        }
        s
    }

    /// Decodes the low `len` bits of `mask`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= 64);
        let mut s = Subset::empty(len);
        for i in 0..len {
            if mask >> i & 1 == 1 {
                s.insert(i);
            }
        }
        s
    }

    /// Width of the carrier, not the number of members.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        self.bits.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.bits.set(i, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.same_width(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Subset { bits }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.same_width(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Subset { bits }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.same_width(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Subset { bits }
    }

    pub fn complement(&self) -> Subset {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Subset { bits }
    }

    pub fn union_with(&mut self, other: &Subset) {
        self.same_width(other);
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        self.same_width(other);
        self.bits.intersect_with(&other.bits);
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.same_width(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.same_width(other);
        self.bits.is_disjoint(&other.bits)
    }

    pub(crate) fn check_width(&self, len: usize) -> Result<()> {
        if self.len() == len {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected: len,
                found: self.len(),
            })
        }
    }

    #[inline]
    fn same_width(&self, other: &Subset) {
        assert_eq!(self.len(), other.len(), "subset width mismatch");
    }
}

/// Canonical order: by cardinality, then lexicographically by member list.
/// Topologies store their opens in this order, so the empty set always comes
/// first and the full carrier last.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.count().cmp(&other.count()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
