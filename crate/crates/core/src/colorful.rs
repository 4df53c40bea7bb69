//! Colorful Helly: from `m(r)` families with empty intersections, produce a
//! rainbow selection (one set per family) with empty intersection.
//!
//! The search follows the pigeonhole-over-partitions construction. With
//! `k = r - 1` and `n = k^⌈log₂ r⌉`, each family `F_i` contributes `k` sets
//! `G_i` with empty intersection and is paired with the `i`-th canonical
//! `k`-partition `P_i` of `{0, .., n-1}`. Index `t` selects from `G_i` the set
//! labelled by the block of `P_i` containing `t`, giving a rainbow family
//! `X_t`. If every `X_t` had a common point `x_t`, some `P_i` would be a
//! Tverberg partition of the points `x_t` (since `n ≥ r_k`), forcing a point
//! into all of `G_i`. So some `X_t` is empty, unless the Radon bound is false.

use num_bigint::BigUint;
use serde::Serialize;

use crate::budget::Budget;
use crate::combin::Combinations;
use crate::error::{Error, Result};
use crate::partitions::{colorful_params, RestrictedGrowth};
use crate::radon::refute_radon_bound;
use crate::set::{ElementSet, Multiset};
use crate::space::ConvexitySpace;

/// Evidence that a space's Radon number exceeds the claimed bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RefutationCertificate {
    /// An `r`-element set with no Radon partition.
    UnsplittableSet(ElementSet),
    /// The points `x_t`, of which no canonical `k`-partition is Tverberg.
    UnpartitionablePoints(Multiset),
}

impl std::fmt::Display for RefutationCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RefutationCertificate::UnsplittableSet(s) => {
                write!(f, "set {s} has no Radon partition")
            }
            RefutationCertificate::UnpartitionablePoints(y) => {
                write!(f, "points {y:?} admit no Tverberg partition")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowTrace {
    pub k: usize,
    pub n: usize,
    /// `G_i` as indices into `F_i`, padded by repetition to length `k`.
    pub chosen: Vec<Vec<usize>>,
    /// For each examined `t`, the index into `F_i` that `X_t` takes.
    pub index_families: Vec<Vec<usize>>,
    /// Least points of `⋂ X_t` for `t` before the failing index.
    pub points: Vec<usize>,
    pub failing_index: usize,
    /// Whether the Radon bound was verified rather than trusted.
    pub radon_bound_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowWitness {
    pub selection: Vec<ElementSet>,
    pub selection_indices: Vec<usize>,
    pub trace: RainbowTrace,
}

impl RainbowWitness {
    pub fn validate(&self, families: &[Vec<ElementSet>]) -> Result<()> {
        if self.selection.len() != families.len() || self.selection_indices.len() != families.len()
        {
            return Err(Error::WitnessInvalid(
                "selection length differs from family count".into(),
            ));
        }
        for (i, (&idx, &set)) in self
            .selection_indices
            .iter()
            .zip(&self.selection)
            .enumerate()
        {
            if families[i].get(idx) != Some(&set) {
                return Err(Error::WitnessInvalid(format!(
                    "selection {i} is not a member of family {i}"
                )));
            }
        }
        let meet = self
            .selection
            .iter()
            .fold(ElementSet::full(64), |acc, s| acc.intersection(*s));
        if !meet.is_empty() {
            return Err(Error::WitnessInvalid(format!(
                "rainbow selection meets in {meet}"
            )));
        }
        Ok(())
    }
}

fn meet_of(space: &ConvexitySpace, sets: impl IntoIterator<Item = ElementSet>) -> ElementSet {
    sets.into_iter()
        .fold(space.ground(), |acc, s| acc.intersection(s))
}

/// Rainbow selection with empty intersection from `colorful_m(r)` families
/// that each have empty intersection.
pub fn find_rainbow_empty(
    space: &ConvexitySpace,
    families: &[Vec<ElementSet>],
    r: usize,
    budget: &mut Budget,
) -> Result<RainbowWitness> {
    let params = colorful_params(r)?;
    let (k, n) = (params.k, params.n);
    if BigUint::from(families.len()) != params.m {
        return Err(Error::PreconditionViolation(format!(
            "expected {} families for r = {r}, got {}",
            params.m,
            families.len()
        )));
    }
    let m = families.len();
    for (i, family) in families.iter().enumerate() {
        space.check_convex(family)?;
        let meet = meet_of(space, family.iter().copied());
        if !meet.is_empty() {
            return Err(Error::PreconditionViolation(format!(
                "family {i} has non-empty intersection {meet}"
            )));
        }
    }

    let mut probe = Budget::new(budget.limit());
    let radon_bound_checked = match refute_radon_bound(space, r, &mut probe) {
        Ok(Some(set)) => {
            return Err(Error::RadonBoundRefuted(Box::new(
                RefutationCertificate::UnsplittableSet(set),
            )));
        }
        Ok(None) => true,
        Err(Error::BudgetExceeded { .. }) => false,
        Err(e) => return Err(e),
    };

    let chosen = families
        .iter()
        .map(|f| empty_subfamily(space, f, k, r, budget))
        .collect::<Result<Vec<_>>>()?;

    budget.charge((m as u64).saturating_mul(n as u64))?;
    let mut labels: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut gen = RestrictedGrowth::new(n, k);
    while let Some(l) = gen.next_labels() {
        labels.push(l.to_vec());
    }
    debug_assert_eq!(labels.len(), m);

    let mut index_families = Vec::with_capacity(n);
    let mut points = Vec::with_capacity(n);
    for t in 0..n {
        budget.charge(m as u64)?;
        let picks: Vec<usize> = (0..m).map(|i| chosen[i][labels[i][t]]).collect();
        let meet = meet_of(
            space,
            picks.iter().enumerate().map(|(i, &j)| families[i][j]),
        );
        index_families.push(picks.clone());
        match meet.first() {
            Some(x) => points.push(x),
            None => {
                let witness = RainbowWitness {
                    selection: picks
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| families[i][j])
                        .collect(),
                    selection_indices: picks,
                    trace: RainbowTrace {
                        k,
                        n,
                        chosen,
                        index_families,
                        points,
                        failing_index: t,
                        radon_bound_checked,
                    },
                };
                witness.validate(families)?;
                return Ok(witness);
            }
        }
    }

    // Every X_t meets: look for a Tverberg partition among the P_i.
    for (i, l) in labels.iter().enumerate() {
        budget.charge(n as u64)?;
        let mut blocks = vec![ElementSet::EMPTY; k];
        for (t, &b) in l.iter().enumerate() {
            blocks[b].insert(points[t]);
        }
        let common = meet_of(space, blocks.iter().map(|b| space.hull(*b)));
        if !common.is_empty() {
            return Err(Error::WitnessInvalid(format!(
                "partition {i} puts {common} in every member of G_{i}, whose intersection is empty"
            )));
        }
    }
    Err(Error::RadonBoundRefuted(Box::new(
        RefutationCertificate::UnpartitionablePoints(Multiset::from_items(points)),
    )))
}

// Smallest (then lexicographically least) subfamily with empty intersection,
// padded to `k` members by repeating its first member.
fn empty_subfamily(
    space: &ConvexitySpace,
    family: &[ElementSet],
    k: usize,
    r: usize,
    budget: &mut Budget,
) -> Result<Vec<usize>> {
    for size in 1..=k.min(family.len()) {
        let mut combos = Combinations::new(family.len(), size);
        while let Some(idx) = combos.next_combination() {
            budget.charge(size as u64)?;
            if meet_of(space, idx.iter().map(|&j| family[j])).is_empty() {
                let mut out = idx.to_vec();
                out.resize(k, idx[0]);
                return Ok(out);
            }
        }
    }
    // Helly number exceeds k: a minimal empty subfamily yields an
    // independent set with no Radon partition.
    let mut members: Vec<ElementSet> = family.to_vec();
    let mut i = 0;
    while i < members.len() {
        let rest = meet_of(
            space,
            members
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, s)| *s),
        );
        if rest.is_empty() {
            members.remove(i);
        } else {
            i += 1;
        }
    }
    let independent: ElementSet = (0..members.len())
        .filter_map(|i| {
            meet_of(
                space,
                members
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, s)| *s),
            )
            .first()
        })
        .take(r)
        .collect();
    Err(Error::RadonBoundRefuted(Box::new(
        RefutationCertificate::UnsplittableSet(independent),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{interval, powerset};

    fn s(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    #[test]
    fn two_endpoints_on_i3() {
        let space = interval(3).unwrap();
        let families = vec![vec![s(&[0]), s(&[2])]; 7];
        let w = find_rainbow_empty(&space, &families, 3, &mut Budget::default()).unwrap();
        w.validate(&families).unwrap();
        assert!(w.selection.contains(&s(&[0])) && w.selection.contains(&s(&[2])));
        assert_eq!(w.trace.failing_index, 1);
        assert_eq!(w.trace.points, vec![0]);
        assert!(w.trace.radon_bound_checked);
    }

    #[test]
    fn three_singletons_on_i3() {
        let space = interval(3).unwrap();
        let families = vec![vec![s(&[0]), s(&[1]), s(&[2])]; 7];
        let w = find_rainbow_empty(&space, &families, 3, &mut Budget::default()).unwrap();
        w.validate(&families).unwrap();
        let distinct: std::collections::BTreeSet<_> = w.selection.iter().collect();
        assert!(distinct.len() >= 2);
    }

    #[test]
    fn rejects_intersecting_family() {
        let space = interval(3).unwrap();
        let mut families = vec![vec![s(&[0]), s(&[2])]; 7];
        families[0] = vec![s(&[0, 1]), s(&[1, 2])];
        assert!(matches!(
            find_rainbow_empty(&space, &families, 3, &mut Budget::default()),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn rejects_wrong_family_count() {
        let space = interval(3).unwrap();
        let families = vec![vec![s(&[0]), s(&[2])]; 6];
        assert!(matches!(
            find_rainbow_empty(&space, &families, 3, &mut Budget::default()),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn refutes_false_radon_bound() {
        // The power set on 3 points has no Radon partition of {0,1,2}.
        let space = powerset(3).unwrap();
        let families = vec![vec![s(&[0, 1]), s(&[1, 2]), s(&[0, 2])]; 7];
        match find_rainbow_empty(&space, &families, 3, &mut Budget::default()) {
            Err(Error::RadonBoundRefuted(cert)) => {
                assert_eq!(*cert, RefutationCertificate::UnsplittableSet(s(&[0, 1, 2])));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn helly_overflow_is_refuted_even_when_trusted() {
        let space = powerset(3).unwrap();
        let families = vec![vec![s(&[0, 1]), s(&[1, 2]), s(&[0, 2])]; 7];
        let err = empty_subfamily(&space, &families[0], 2, 3, &mut Budget::default()).unwrap_err();
        match err {
            Error::RadonBoundRefuted(cert) => {
                assert_eq!(*cert, RefutationCertificate::UnsplittableSet(s(&[0, 1, 2])));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn pads_short_subfamilies() {
        let space = interval(3).unwrap();
        let picked = empty_subfamily(
            &space,
            &[s(&[1]), s(&[]), s(&[0])],
            2,
            3,
            &mut Budget::default(),
        )
        .unwrap();
        assert_eq!(picked, vec![1, 1]);
    }
}
