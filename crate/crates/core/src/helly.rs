use serde::Serialize;

use crate::budget::Budget;
use crate::combin::Combinations;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::space::ConvexitySpace;

/// Inclusion-minimal subfamily of convex sets with empty intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HellyCertificate {
    pub critical_family: Vec<ElementSet>,
    pub size: usize,
}

impl HellyCertificate {
    pub fn validate(&self, space: &ConvexitySpace) -> Result<()> {
        if self.size != self.critical_family.len() || self.size == 0 {
            return Err(Error::WitnessInvalid("certificate size mismatch".into()));
        }
        space.check_convex(&self.critical_family)?;
        let meet = |skip: Option<usize>| {
            self.critical_family
                .iter()
                .enumerate()
                .filter(|(i, _)| Some(*i) != skip)
                .fold(space.ground(), |acc, (_, s)| acc.intersection(*s))
        };
        if !meet(None).is_empty() {
            return Err(Error::WitnessInvalid("critical family intersects".into()));
        }
        for i in 0..self.size {
            if meet(Some(i)).is_empty() {
                return Err(Error::WitnessInvalid(format!(
                    "dropping member {i} still leaves an empty intersection"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HellyNumber {
    pub value: usize,
    pub certificate: HellyCertificate,
    /// Points `a_i` with `a_i` in every member except the `i`-th.
    pub independent_set: ElementSet,
}

/// Helly number via independent point sets.
///
/// A set `A` with `⋂_{a∈A} conv(A∖{a}) = ∅` yields the minimal empty family
/// `{conv(A∖{a})}`, and every minimal empty family of size `h` yields such an
/// `A` of size `h` by picking one point outside each member but inside all
/// others. So the maximum is taken over subsets of the ground set, largest
/// size first, lexicographically least set within a size.
pub fn helly_number(space: &ConvexitySpace, budget: &mut Budget) -> Result<HellyNumber> {
    let n = space.ground_size();
    for size in (1..=n).rev() {
        let mut combos = Combinations::new(n, size);
        while let Some(idx) = combos.next_combination() {
            budget.charge(size as u64)?;
            let a: ElementSet = idx.iter().copied().collect();
            let faces: Vec<ElementSet> = a.iter().map(|x| space.hull(a.without(x))).collect();
            let meet = faces
                .iter()
                .fold(space.ground(), |acc, f| acc.intersection(*f));
            if meet.is_empty() {
                let mut critical_family = faces;
                critical_family.sort();
                let certificate = HellyCertificate {
                    size: critical_family.len(),
                    critical_family,
                };
                certificate.validate(space)?;
                return Ok(HellyNumber {
                    value: size,
                    certificate,
                    independent_set: a,
                });
            }
        }
    }
    unreachable!("a singleton always satisfies conv(∅) = ∅");
}

/// Helly number by climbing subfamilies of the convex sets directly.
///
/// Only intersecting subfamilies are extended; a family that becomes empty on
/// its last addition is recorded if every one-smaller subfamily intersects.
/// Exponential in `|C|`; intended for small spaces and cross-checking.
pub fn helly_number_by_subfamilies(
    space: &ConvexitySpace,
    budget: &mut Budget,
) -> Result<(usize, HellyCertificate)> {
    let full = space.ground();
    // X never belongs to a minimal empty family and ∅ only to {∅}.
    let candidates: Vec<ElementSet> = space
        .convex_sets()
        .iter()
        .copied()
        .filter(|s| !s.is_empty() && *s != full)
        .collect();
    let mut best: Vec<ElementSet> = vec![ElementSet::EMPTY];
    let mut chosen: Vec<ElementSet> = Vec::new();
    climb(&candidates, 0, full, &mut chosen, &mut best, budget)?;
    let certificate = HellyCertificate {
        size: best.len(),
        critical_family: best,
    };
    certificate.validate(space)?;
    Ok((certificate.size, certificate))
}

fn climb(
    candidates: &[ElementSet],
    from: usize,
    meet: ElementSet,
    chosen: &mut Vec<ElementSet>,
    best: &mut Vec<ElementSet>,
    budget: &mut Budget,
) -> Result<()> {
    for i in from..candidates.len() {
        budget.tick()?;
        let c = candidates[i];
        let next = meet.intersection(c);
        chosen.push(c);
        // Subfamilies of a minimal family are irredundant, so prune any
        // family in which some member no longer shrinks the intersection.
        if is_irredundant(chosen, next, budget)? {
            if next.is_empty() {
                if chosen.len() > best.len() && is_minimal(chosen, budget)? {
                    *best = chosen.clone();
                }
            } else {
                climb(candidates, i + 1, next, chosen, best, budget)?;
            }
        }
        chosen.pop();
    }
    Ok(())
}

fn is_irredundant(family: &[ElementSet], meet: ElementSet, budget: &mut Budget) -> Result<bool> {
    budget.charge(family.len() as u64)?;
    Ok((0..family.len()).all(|skip| {
        let rest = family
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .fold(ElementSet::full(64), |acc, (_, s)| acc.intersection(*s));
        rest != meet
    }))
}

fn is_minimal(family: &[ElementSet], budget: &mut Budget) -> Result<bool> {
    budget.charge(family.len() as u64)?;
    Ok((0..family.len()).all(|skip| {
        family
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .fold(ElementSet::full(64), |acc, (_, s)| acc.intersection(*s))
            != ElementSet::EMPTY
    }))
}
