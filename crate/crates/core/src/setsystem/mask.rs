use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

/// A subset of a ground set of at most 64 elements, one bit per element.
///
/// Masks order by `(popcount, value)`, which is the order families are kept in.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(element: usize) -> Self {
        debug_assert!(element < 64);
        SubsetMask(1 << element)
    }

    pub fn pair(a: usize, b: usize) -> Self {
        Self::singleton(a) | Self::singleton(b)
    }

    /// The first `n` elements.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub fn from_elements(elements: impl IntoIterator<Item = usize>) -> Self {
        elements
            .into_iter()
            .fold(SubsetMask::EMPTY, |m, e| m | SubsetMask::singleton(e))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, element: usize) -> bool {
        element < 64 && (self.0 >> element) & 1 == 1
    }

    pub const fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn insert(self, element: usize) -> Self {
        self | SubsetMask::singleton(element)
    }

    pub fn remove(self, element: usize) -> Self {
        self - SubsetMask::singleton(element)
    }

    /// Toggle membership of one element.
    pub fn flip(self, element: usize) -> Self {
        self ^ SubsetMask::singleton(element)
    }

    /// Elements in increasing index order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Collapse the bits selected by `keep` into a dense prefix, preserving order.
    pub fn compress(self, keep: SubsetMask) -> SubsetMask {
        let mut out = 0u64;
        for (pos, e) in keep.iter().enumerate() {
            if self.contains(e) {
                out |= 1 << pos;
            }
        }
        SubsetMask(out)
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), self.0).cmp(&(other.len(), other.0))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitXor for SubsetMask {
    type Output = SubsetMask;
    fn bitxor(self, rhs: Self) -> Self {
        SubsetMask(self.0 ^ rhs.0)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: Self) -> Self {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: Self) -> Self {
        SubsetMask(self.0 & rhs.0)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: Self) -> Self {
        SubsetMask(self.0 & !rhs.0)
    }
}

impl Not for SubsetMask {
    type Output = SubsetMask;
    fn not(self) -> Self {
        SubsetMask(!self.0)
    }
}

/// Iterator over the elements of a [`SubsetMask`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}
