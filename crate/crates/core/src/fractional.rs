use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::budget::Budget;
use crate::combin::binomial;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::set::ElementSet;
use crate::space::ConvexitySpace;

/// Empirical fractional Helly data for a family of convex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FHStats {
    /// Fraction of intersecting `m`-tuples.
    #[serde(with = "rational")]
    pub alpha: Rational,
    /// Largest fraction of members sharing one point.
    #[serde(with = "rational")]
    pub beta: Rational,
    pub deepest_point: usize,
    /// Number of members containing `deepest_point`.
    pub depth: usize,
    #[serde(serialize_with = "rational::natural::serialize")]
    pub intersecting_tuples: BigUint,
    #[serde(serialize_with = "rational::natural::serialize")]
    pub total_tuples: BigUint,
}

pub fn fh_stats(
    space: &ConvexitySpace,
    family: &[ElementSet],
    m: usize,
    budget: &mut Budget,
) -> Result<FHStats> {
    space.check_convex(family)?;
    if m == 0 || family.len() < m {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= m <= |F|, got m = {m} with |F| = {}",
            family.len()
        )));
    }
    let mut hits = BigUint::zero();
    count_intersecting(family, 0, m, space.ground(), &mut hits, budget)?;
    let total = binomial(family.len(), m);
    let (deepest_point, depth) = deepest(space, family);
    Ok(FHStats {
        alpha: Rational::new(BigInt::from(hits.clone()), BigInt::from(total.clone())),
        beta: Rational::new(BigInt::from(depth), BigInt::from(family.len())),
        deepest_point,
        depth,
        intersecting_tuples: hits,
        total_tuples: total,
    })
}

/// Least element contained in the most members, with that count.
pub fn deepest(space: &ConvexitySpace, family: &[ElementSet]) -> (usize, usize) {
    (0..space.ground_size())
        .map(|x| (x, family.iter().filter(|s| s.contains(x)).count()))
        .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best })
}

fn count_intersecting(
    family: &[ElementSet],
    from: usize,
    left: usize,
    meet: ElementSet,
    hits: &mut BigUint,
    budget: &mut Budget,
) -> Result<()> {
    if left == 0 {
        *hits += 1u32;
        return Ok(());
    }
    for i in from..=family.len() - left {
        budget.tick()?;
        let next = meet.intersection(family[i]);
        if !next.is_empty() {
            count_intersecting(family, i + 1, left - 1, next, hits, budget)?;
        }
    }
    Ok(())
}
