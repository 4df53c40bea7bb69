use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of the ground set `{0, .., n-1}` stored as a bit vector.
///
/// Ordering is lexicographic on the increasing element lists, so
/// `{} < {0} < {0,1} < {0,1,2} < {0,2} < {1} < ..`. All "least witness"
/// tie-breaks in the crate use this order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    /// Largest supported ground set.
    pub const MAX_GROUND: usize = 64;

    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full ground set of size `n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::MAX_GROUND);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        ElementSet(1u64 << i)
    }

    /// Builds a set from element indices, checking each against `ground_size`.
    pub fn from_indices<I>(indices: I, ground_size: usize) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        check_ground(ground_size)?;
        let mut bits = 0u64;
        for index in indices {
            if index >= ground_size {
                return Err(Error::IndexOutOfRange { index, ground_size });
            }
            bits |= 1u64 << index;
        }
        Ok(ElementSet(bits))
    }

    /// Like [`from_indices`](Self::from_indices) but also requires the list to
    /// be strictly increasing, as the document formats demand.
    pub fn from_sorted_list(list: &[usize], ground_size: usize) -> Result<Self> {
        if list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "element list {list:?} is not strictly increasing"
            )));
        }
        Self::from_indices(list.iter().copied(), ground_size)
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
        i < 64 && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Least element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements strictly greater than `i`.
    #[inline]
    pub fn above(self, i: usize) -> Self {
        ElementSet(self.0 & u64::MAX.checked_shl(i as u32 + 1).unwrap_or(0))
    }

    /// True if every element is below `ground_size`.
    #[inline]
    pub fn fits(self, ground_size: usize) -> bool {
        ground_size >= 64 || self.0 >> ground_size == 0
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bit-pattern order (starting at ∅).
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// All `k`-element subsets of `self`.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = ElementSet> {
        self.subsets().filter(move |s| s.len() == k)
    }
}

fn check_ground(ground_size: usize) -> Result<()> {
    if ground_size > ElementSet::MAX_GROUND {
        Err(Error::GroundTooLarge(ground_size))
    } else {
        Ok(())
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        // Both lists agree below d. The side holding d continues with d; the
        // other side either continues with something larger (so it is
        // greater) or stops there (so it is a proper prefix, hence smaller).
        let (self_holds, other_bits) = if self.0 >> d & 1 == 1 {
            (true, other.0)
        } else {
            (false, self.0)
        };
        let other_continues = d < 63 && other_bits >> (d + 1) != 0;
        if self_holds == other_continues {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let list = Vec::<usize>::deserialize(deserializer)?;
        ElementSet::from_sorted_list(&list, ElementSet::MAX_GROUND)
            .map_err(serde::de::Error::custom)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

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

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

/// A finite multiset over the ground set. Multiplicities are always ≥ 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multiset {
    counts: BTreeMap<usize, usize>,
    cardinality: usize,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// From a list of items, repeats allowed.
    pub fn from_items<I: IntoIterator<Item = usize>>(items: I) -> Self {
        let mut m = Multiset::new();
        for i in items {
            m.add(i, 1);
        }
        m
    }

    /// From `(element, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut m = Multiset::new();
        for (e, c) in pairs {
            m.add(e, c);
        }
        m
    }

    /// Multiplicity vector of length `n` (index = element).
    pub fn from_count_vec(counts: &[usize]) -> Self {
        Self::from_counts(counts.iter().copied().enumerate())
    }

    pub fn add(&mut self, element: usize, times: usize) {
        if times == 0 {
            return;
        }
        *self.counts.entry(element).or_insert(0) += times;
        self.cardinality += times;
    }

    pub fn count(&self, element: usize) -> usize {
        self.counts.get(&element).copied().unwrap_or(0)
    }

    /// Cardinality counting multiplicities.
    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    pub fn is_empty(&self) -> bool {
        self.cardinality == 0
    }

    pub fn counts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&e, &c)| (e, c))
    }

    pub fn support(&self) -> ElementSet {
        self.counts.keys().copied().collect()
    }

    /// Items in nondecreasing order, each repeated by its multiplicity.
    pub fn items(&self) -> Vec<usize> {
        self.counts
            .iter()
            .flat_map(|(&e, &c)| std::iter::repeat_n(e, c))
            .collect()
    }

    pub fn max_element(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// Multiplicity-counted size of `set ∩ self`.
    pub fn weight_in(&self, set: ElementSet) -> usize {
        self.counts
            .iter()
            .filter(|(&e, _)| set.contains(e))
            .map(|(_, &c)| c)
            .sum()
    }
}

impl fmt::Debug for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.items())
    }
}

impl Serialize for Multiset {
    /// As a map from element index (string key) to multiplicity.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.counts.iter().map(|(e, c)| (e.to_string(), c)))
    }
}

impl<'de> Deserialize<'de> for Multiset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, usize>::deserialize(deserializer)?;
        let mut m = Multiset::new();
        for (key, count) in raw {
            let e: usize = key
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad element key {key:?}")))?;
            if count == 0 {
                return Err(serde::de::Error::custom(format!(
                    "element {e} has multiplicity 0"
                )));
            }
            m.add(e, count);
        }
        Ok(m)
    }
}
