//! Radon and partition (Tverberg) numbers with certificates.
//!
//! All searches rely on two monotonicity facts: adding points to a part only
//! grows its hull, so a multiset admitting a Tverberg `k`-partition keeps
//! admitting one when enlarged; hence the failing multisets (and failing sets
//! for the Radon number) form a down-closed family that can be explored by
//! canonical depth-first growth.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::partitions::RestrictedGrowth;
use crate::set::{ElementSet, Multiset};
use crate::space::ConvexitySpace;

/// A `k`-partition of a multiset whose part hulls share `common_point`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TverbergWitness {
    pub parts: Vec<Multiset>,
    pub common_point: usize,
}

impl TverbergWitness {
    /// Re-checks that the parts partition `y` and each hull holds the point.
    pub fn validate(&self, space: &ConvexitySpace, y: &Multiset, k: usize) -> Result<()> {
        if self.parts.len() != k {
            return Err(Error::WitnessInvalid(format!(
                "expected {k} parts, found {}",
                self.parts.len()
            )));
        }
        let mut union = Multiset::new();
        for part in &self.parts {
            if part.is_empty() {
                return Err(Error::WitnessInvalid("empty part".into()));
            }
            if !space.hull(part.support()).contains(self.common_point) {
                return Err(Error::WitnessInvalid(format!(
                    "point {} not in hull of part {:?}",
                    self.common_point, part
                )));
            }
            for (e, c) in part.counts() {
                union.add(e, c);
            }
        }
        if &union != y {
            return Err(Error::WitnessInvalid(
                "parts do not partition the multiset".into(),
            ));
        }
        Ok(())
    }
}

/// For each ground element `x`, the inclusion-minimal sets whose hull holds `x`.
///
/// A multiset admits a Tverberg `k`-partition at `x` exactly when `k`
/// capture sets for `x` fit disjointly inside it (leftover items can join
/// any part without shrinking a hull).
#[derive(Debug, Clone)]
pub struct CaptureIndex {
    ground_size: usize,
    per_point: Vec<Vec<ElementSet>>,
}

impl CaptureIndex {
    pub fn new(space: &ConvexitySpace, budget: &mut Budget) -> Result<Self> {
        let n = space.ground_size();
        if n >= 40 {
            return Err(Error::BudgetExceeded {
                limit: budget.limit(),
            });
        }
        budget.charge(1u64 << n)?;
        let mut per_point = vec![Vec::new(); n];
        for s in space.ground().subsets() {
            if s.is_empty() {
                continue;
            }
            let hull = space.hull(s);
            budget.charge(s.len() as u64)?;
            let sub_hulls: Vec<ElementSet> = s.iter().map(|e| space.hull(s.without(e))).collect();
            for x in hull.iter() {
                if sub_hulls.iter().all(|h| !h.contains(x)) {
                    per_point[x].push(s);
                }
            }
        }
        for list in &mut per_point {
            list.sort();
        }
        Ok(CaptureIndex {
            ground_size: n,
            per_point,
        })
    }

    pub fn captures(&self, x: usize) -> &[ElementSet] {
        &self.per_point[x]
    }

    /// Least point `x` and `k` disjointly packed capture sets for it.
    fn pack(
        &self,
        counts: &[usize],
        support: ElementSet,
        k: usize,
        budget: &mut Budget,
    ) -> Result<Option<(usize, Vec<ElementSet>)>> {
        let total: usize = counts.iter().sum();
        if total < k {
            return Ok(None);
        }
        let mut remaining = counts.to_vec();
        let mut chosen = Vec::with_capacity(k);
        for x in 0..self.ground_size {
            let usable: Vec<ElementSet> = self.per_point[x]
                .iter()
                .copied()
                .filter(|c| c.is_subset(support))
                .collect();
            if usable.is_empty() {
                continue;
            }
            if pack_rec(&usable, 0, k, &mut remaining, &mut chosen, budget)? {
                return Ok(Some((x, chosen)));
            }
        }
        Ok(None)
    }

    /// Whether the multiset with multiplicities `counts` admits a `k`-partition.
    pub fn admits(&self, counts: &[usize], k: usize, budget: &mut Budget) -> Result<bool> {
        let support = support_of(counts);
        Ok(self.pack(counts, support, k, budget)?.is_some())
    }

    /// A witness built from a packing; not necessarily the least one.
    pub fn witness(
        &self,
        y: &Multiset,
        k: usize,
        budget: &mut Budget,
    ) -> Result<Option<TverbergWitness>> {
        let counts = count_vec(y, self.ground_size)?;
        let Some((x, sets)) = self.pack(&counts, y.support(), k, budget)? else {
            return Ok(None);
        };
        let mut remaining = counts;
        let mut parts: Vec<Multiset> = sets
            .iter()
            .map(|s| {
                for e in s.iter() {
                    remaining[e] -= 1;
                }
                Multiset::from_items(s.iter())
            })
            .collect();
        for (e, &c) in remaining.iter().enumerate() {
            parts[0].add(e, c);
        }
        Ok(Some(TverbergWitness {
            parts,
            common_point: x,
        }))
    }
}

fn pack_rec(
    usable: &[ElementSet],
    from: usize,
    left: usize,
    remaining: &mut [usize],
    chosen: &mut Vec<ElementSet>,
    budget: &mut Budget,
) -> Result<bool> {
    if left == 0 {
        return Ok(true);
    }
    for (i, &c) in usable.iter().enumerate().skip(from) {
        budget.tick()?;
        if c.iter().all(|e| remaining[e] > 0) {
            for e in c.iter() {
                remaining[e] -= 1;
            }
            chosen.push(c);
            let found = pack_rec(usable, i, left - 1, remaining, chosen, budget)?;
            if found {
                for e in c.iter() {
                    remaining[e] += 1;
                }
                return Ok(true);
            }
            chosen.pop();
            for e in c.iter() {
                remaining[e] += 1;
            }
        }
    }
    Ok(false)
}

fn support_of(counts: &[usize]) -> ElementSet {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(e, _)| e)
        .collect()
}

fn count_vec(y: &Multiset, n: usize) -> Result<Vec<usize>> {
    let mut counts = vec![0; n];
    for (e, c) in y.counts() {
        if e >= n {
            return Err(Error::IndexOutOfRange {
                index: e,
                ground_size: n,
            });
        }
        counts[e] = c;
    }
    Ok(counts)
}

/// The lexicographically least Tverberg `k`-partition of `y`, if one exists.
///
/// Candidates are the restricted growth strings over the items of `y` in
/// nondecreasing order; the first whose part hulls meet is returned with the
/// least common point.
pub fn find_k_partition(
    space: &ConvexitySpace,
    y: &Multiset,
    k: usize,
    budget: &mut Budget,
) -> Result<Option<TverbergWitness>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if y.is_empty() {
        return Err(Error::InvalidArgument("multiset must be non-empty".into()));
    }
    let items = y.items();
    if items.len() > ElementSet::MAX_GROUND {
        return Err(Error::InvalidArgument(format!(
            "multiset of cardinality {} is too large",
            items.len()
        )));
    }
    count_vec(y, space.ground_size())?;
    let mut gen = RestrictedGrowth::new(items.len(), k);
    while let Some(labels) = gen.next_labels() {
        budget.charge(k as u64)?;
        let mut supports = vec![ElementSet::EMPTY; k];
        for (pos, &b) in labels.iter().enumerate() {
            supports[b].insert(items[pos]);
        }
        let common = supports
            .iter()
            .fold(space.ground(), |acc, s| acc.intersection(space.hull(*s)));
        if let Some(point) = common.first() {
            let mut parts = vec![Multiset::new(); k];
            for (pos, &b) in labels.iter().enumerate() {
                parts[b].add(items[pos], 1);
            }
            let witness = TverbergWitness {
                parts,
                common_point: point,
            };
            witness.validate(space, y, k)?;
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// Radon number together with the largest set that has no Radon partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadonNumber {
    /// `None` when the whole ground set has no Radon partition.
    pub value: Option<usize>,
    /// Lexicographically least set of maximum size without a Radon partition.
    pub largest_unsplittable: ElementSet,
}

/// Least `m` such that every `m`-element subset has a Radon partition.
pub fn radon_number(space: &ConvexitySpace, budget: &mut Budget) -> Result<RadonNumber> {
    let index = CaptureIndex::new(space, budget)?;
    radon_number_with(space, &index, budget)
}

pub fn radon_number_with(
    space: &ConvexitySpace,
    index: &CaptureIndex,
    budget: &mut Budget,
) -> Result<RadonNumber> {
    let n = space.ground_size();
    let mut best = ElementSet::EMPTY;
    let mut counts = vec![0usize; n];
    grow_unsplittable(
        index,
        ElementSet::EMPTY,
        0,
        usize::MAX,
        &mut counts,
        &mut best,
        budget,
    )?;
    let value = (best.len() < n).then_some(best.len() + 1);
    Ok(RadonNumber {
        value,
        largest_unsplittable: best,
    })
}

// Depth-first over sets without a Radon partition, growing by increasing
// elements; preorder is lexicographic, so the first maximum is the least.
fn grow_unsplittable(
    index: &CaptureIndex,
    current: ElementSet,
    from: usize,
    stop_at: usize,
    counts: &mut [usize],
    best: &mut ElementSet,
    budget: &mut Budget,
) -> Result<bool> {
    if current.len() > best.len() {
        *best = current;
        if best.len() >= stop_at {
            return Ok(true);
        }
    }
    for e in from..counts.len() {
        budget.tick()?;
        counts[e] = 1;
        let next = current.with(e);
        let fails = !index.admits(counts, 2, budget)?;
        if fails && grow_unsplittable(index, next, e + 1, stop_at, counts, best, budget)? {
            counts[e] = 0;
            return Ok(true);
        }
        counts[e] = 0;
    }
    Ok(false)
}

/// Checks that every `r`-element subset has a Radon partition. Returns an
/// `r`-element subset without one when the bound fails.
pub fn refute_radon_bound(
    space: &ConvexitySpace,
    r: usize,
    budget: &mut Budget,
) -> Result<Option<ElementSet>> {
    let index = CaptureIndex::new(space, budget)?;
    let mut best = ElementSet::EMPTY;
    let mut counts = vec![0usize; space.ground_size()];
    grow_unsplittable(
        &index,
        ElementSet::EMPTY,
        0,
        r,
        &mut counts,
        &mut best,
        budget,
    )?;
    Ok((best.len() >= r).then_some(best))
}

/// `k`-th partition number with the largest multiset lacking a `k`-partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionNumber {
    pub k: usize,
    pub value: usize,
    /// `true` when `k > |X|` and the value is the `|X| + 1` convention.
    pub by_convention: bool,
    /// Lexicographically least multiset of cardinality `value - 1` with no
    /// Tverberg `k`-partition; absent under the convention.
    pub certificate: Option<Multiset>,
}

pub fn partition_number(
    space: &ConvexitySpace,
    k: usize,
    budget: &mut Budget,
) -> Result<PartitionNumber> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if k > space.ground_size() {
        return Ok(PartitionNumber {
            k,
            value: space.ground_size() + 1,
            by_convention: true,
            certificate: None,
        });
    }
    let index = CaptureIndex::new(space, budget)?;
    partition_number_with(space, &index, k, budget)
}

pub fn partition_number_with(
    space: &ConvexitySpace,
    index: &CaptureIndex,
    k: usize,
    budget: &mut Budget,
) -> Result<PartitionNumber> {
    let n = space.ground_size();
    if k > n {
        return Ok(PartitionNumber {
            k,
            value: n + 1,
            by_convention: true,
            certificate: None,
        });
    }
    let mut counts = vec![0usize; n];
    let mut best = (0usize, vec![0usize; n]);
    grow_failing_multisets(index, k, 0, 0, &mut counts, &mut best, budget)?;
    let value = best.0 + 1;
    debug_assert!(value <= (k - 1) * n + 1);
    Ok(PartitionNumber {
        k,
        value,
        by_convention: false,
        certificate: Some(Multiset::from_count_vec(&best.1)),
    })
}

fn grow_failing_multisets(
    index: &CaptureIndex,
    k: usize,
    from: usize,
    size: usize,
    counts: &mut [usize],
    best: &mut (usize, Vec<usize>),
    budget: &mut Budget,
) -> Result<()> {
    if size > best.0 {
        best.0 = size;
        best.1.copy_from_slice(counts);
    }
    for e in from..counts.len() {
        budget.tick()?;
        counts[e] += 1;
        if !index.admits(counts, k, budget)? {
            grow_failing_multisets(index, k, e, size + 1, counts, best, budget)?;
        }
        counts[e] -= 1;
    }
    Ok(())
}
