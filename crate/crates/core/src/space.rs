use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Default cap on the number of convex sets a space may hold.
pub const DEFAULT_SIZE_CAP: usize = 1 << 20;

/// Ground sizes up to this bound get a precomputed hull for every subset.
const HULL_TABLE_MAX_GROUND: usize = 20;

/// A finite convexity space `(X, C)`.
///
/// `convex_sets` is sorted, duplicate free, contains `∅` and `X`, and is
/// closed under intersection. Values are immutable once built.
pub struct ConvexitySpace {
    ground_size: usize,
    convex_sets: Vec<ElementSet>,
    hulls: OnceLock<Vec<u64>>,
}

impl ConvexitySpace {
    /// Validates an explicit family and returns the canonical space.
    pub fn validate(ground_size: usize, sets: Vec<ElementSet>) -> Result<Self> {
        validate_space(ground_size, sets)
    }

    /// Builds a space without re-checking the axioms; callers guarantee them.
    pub(crate) fn from_canonical_unchecked(
        ground_size: usize,
        convex_sets: Vec<ElementSet>,
    ) -> Self {
        debug_assert!(convex_sets.windows(2).all(|w| w[0] < w[1]));
        ConvexitySpace {
            ground_size,
            convex_sets,
            hulls: OnceLock::new(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.ground_size)
    }

    pub fn convex_sets(&self) -> &[ElementSet] {
        &self.convex_sets
    }

    pub fn len(&self) -> usize {
        self.convex_sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.convex_sets.is_empty()
    }

    pub fn is_convex(&self, set: ElementSet) -> bool {
        self.convex_sets.binary_search(&set).is_ok()
    }

    /// Intersection of all convex sets containing `set`.
    pub fn hull(&self, set: ElementSet) -> ElementSet {
        match self.hull_table() {
            Some(table) => ElementSet::from_bits(table[set.bits() as usize]),
            None => self.hull_by_scan(set),
        }
    }

    fn hull_by_scan(&self, set: ElementSet) -> ElementSet {
        self.convex_sets
            .iter()
            .filter(|c| set.is_subset(**c))
            .fold(self.ground(), |acc, c| acc.intersection(*c))
    }

    /// Hull of every subset, indexed by bit pattern, when the ground set is
    /// small enough to tabulate.
    pub(crate) fn hull_table(&self) -> Option<&[u64]> {
        if self.ground_size > HULL_TABLE_MAX_GROUND {
            return None;
        }
        Some(self.hulls.get_or_init(|| self.build_hull_table()))
    }

    // Superset-AND transform: t[Y] = AND of t[Z] over Z ⊇ Y, seeded with
    // t[C] = C for convex C and the full set otherwise.
    fn build_hull_table(&self) -> Vec<u64> {
        let n = self.ground_size;
        let full = self.ground().bits();
        let mut table = vec![full; 1usize << n];
        for c in &self.convex_sets {
            table[c.bits() as usize] = c.bits();
        }
        for bit in 0..n {
            let step = 1usize << bit;
            for y in 0..table.len() {
                if y & step == 0 {
                    table[y] &= table[y | step];
                }
            }
        }
        table
    }

    /// Requires every member of `sets` to be convex.
    pub fn check_convex(&self, sets: &[ElementSet]) -> Result<()> {
        match sets.iter().find(|s| !self.is_convex(**s)) {
            Some(s) => Err(Error::SetNotConvex(*s)),
            None => Ok(()),
        }
    }

    pub fn check_fits(&self, set: ElementSet) -> Result<()> {
        if set.fits(self.ground_size) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: set.last().unwrap_or(0),
                ground_size: self.ground_size,
            })
        }
    }
}

impl Clone for ConvexitySpace {
    fn clone(&self) -> Self {
        ConvexitySpace {
            ground_size: self.ground_size,
            convex_sets: self.convex_sets.clone(),
            hulls: self.hulls.clone(),
        }
    }
}

impl PartialEq for ConvexitySpace {
    fn eq(&self, other: &Self) -> bool {
        self.ground_size == other.ground_size && self.convex_sets == other.convex_sets
    }
}

impl Eq for ConvexitySpace {}

impl fmt::Debug for ConvexitySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConvexitySpace")
            .field("ground_size", &self.ground_size)
            .field("convex_sets", &self.convex_sets)
            .finish()
    }
}

/// Checks the convexity-space axioms and canonicalizes the family.
///
/// Duplicates are dropped silently. A missing intersection is reported with
/// the lexicographically least violating pair.
pub fn validate_space(ground_size: usize, sets: Vec<ElementSet>) -> Result<ConvexitySpace> {
    if ground_size == 0 {
        return Err(Error::InvalidArgument(
            "ground set must be non-empty".into(),
        ));
    }
    if ground_size > ElementSet::MAX_GROUND {
        return Err(Error::GroundTooLarge(ground_size));
    }
    for s in &sets {
        if !s.fits(ground_size) {
            return Err(Error::IndexOutOfRange {
                index: s.last().unwrap_or(0),
                ground_size,
            });
        }
    }
    let canonical: Vec<ElementSet> = sets
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let full = ElementSet::full(ground_size);
    if canonical.first() != Some(&ElementSet::EMPTY) || !canonical.contains(&full) {
        return Err(Error::MissingEmptyOrFull);
    }
    let members: HashSet<u64> = canonical.iter().map(|s| s.bits()).collect();
    for (i, &a) in canonical.iter().enumerate() {
        for &b in &canonical[i + 1..] {
            let meet = a.intersection(b);
            if !members.contains(&meet.bits()) {
                return Err(Error::NotIntersectionClosed { a, b, meet });
            }
        }
    }
    Ok(ConvexitySpace::from_canonical_unchecked(
        ground_size,
        canonical,
    ))
}

/// Smallest intersection-closed family containing the generators, `∅` and `X`.
pub fn closure_from_generators(
    ground_size: usize,
    generators: &[ElementSet],
    size_cap: usize,
) -> Result<ConvexitySpace> {
    if ground_size == 0 {
        return Err(Error::InvalidArgument(
            "ground set must be non-empty".into(),
        ));
    }
    if ground_size > ElementSet::MAX_GROUND {
        return Err(Error::GroundTooLarge(ground_size));
    }
    for g in generators {
        if !g.fits(ground_size) {
            return Err(Error::IndexOutOfRange {
                index: g.last().unwrap_or(0),
                ground_size,
            });
        }
    }
    let full = ElementSet::full(ground_size);
    let mut family = intersection_fixpoint(full, generators, size_cap)?;
    family.insert(ElementSet::EMPTY);
    if family.len() > size_cap {
        return Err(Error::SizeCapExceeded {
            size: family.len(),
            cap: size_cap,
        });
    }
    Ok(ConvexitySpace::from_canonical_unchecked(
        ground_size,
        family.into_iter().collect(),
    ))
}

/// All intersections of subfamilies of `members`, where the empty subfamily
/// contributes `top`.
pub(crate) fn intersection_fixpoint(
    top: ElementSet,
    members: &[ElementSet],
    size_cap: usize,
) -> Result<BTreeSet<ElementSet>> {
    let mut family: HashSet<ElementSet> = HashSet::from([top]);
    for &m in members {
        let fresh: Vec<ElementSet> = family
            .iter()
            .map(|t| t.intersection(m))
            .filter(|t| !family.contains(t))
            .collect();
        family.extend(fresh);
        if family.len() > size_cap {
            return Err(Error::SizeCapExceeded {
                size: family.len(),
                cap: size_cap,
            });
        }
    }
    Ok(family.into_iter().collect())
}
