use std::fmt;

/// A subset of `{0, .., n-1}` stored as a bitmask. Displayed 1-based.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= crate::MAX_VARS);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u32::MAX >> (32 - n))
        }
    }

    /// Contiguous range `{lo, .., hi-1}` (0-based).
    pub fn range(lo: usize, hi: usize) -> Self {
        VertexSet(Self::full(hi).0 & !Self::full(lo).0)
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet(1 << i)
    }

    /// Builds a set from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    /// Builds a set from 1-based labels, as used in all I/O.
    pub fn from_labels<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter.into_iter().map(|i| i - 1))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    /// 0-based members in increasing order.
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

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Every subset of `self`, the empty set first and `self` last.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some(cur.wrapping_sub(full) & full)
            };
            Some(VertexSet(cur))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Canonical order on vertex sets: lexicographic on the sorted member lists.
pub fn canonical_cmp(a: &VertexSet, b: &VertexSet) -> std::cmp::Ordering {
    a.iter().cmp(b.iter())
}
