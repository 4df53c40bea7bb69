use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planar::{convex_hull, hull_contains, Point};
use crate::set::ElementSet;
use crate::space::{closure_from_generators, validate_space, ConvexitySpace, DEFAULT_SIZE_CAP};

/// Largest point set the trace builders will enumerate subsets of.
pub const MAX_TRACE_POINTS: usize = 20;

/// Description of a reference space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", content = "params", rename_all = "snake_case")]
pub enum BuilderSpec {
    /// Contiguous index ranges on a path of `n` points.
    Interval { n: usize },
    /// Only `∅` and `X`.
    Free { n: usize },
    /// Every subset is convex.
    Powerset { n: usize },
    /// Trace of planar convexity on an integer point set.
    PlanarTrace { points: Vec<Vec<i64>> },
    /// Planar trace on the `w × h` integer grid, row-major indexing.
    GridTrace { w: usize, h: usize },
    Generators {
        ground_size: usize,
        generators: Vec<Vec<usize>>,
    },
    Explicit {
        ground_size: usize,
        convex_sets: Vec<Vec<usize>>,
    },
}

pub fn build(spec: &BuilderSpec) -> Result<ConvexitySpace> {
    match spec {
        BuilderSpec::Interval { n } => interval(*n),
        BuilderSpec::Free { n } => free(*n),
        BuilderSpec::Powerset { n } => powerset(*n),
        BuilderSpec::PlanarTrace { points } => {
            let pts = points
                .iter()
                .map(|p| match p.as_slice() {
                    [x, y] => Ok((*x, *y)),
                    other => Err(Error::UnsupportedDimension(other.len())),
                })
                .collect::<Result<Vec<Point>>>()?;
            planar_trace(&pts)
        }
        BuilderSpec::GridTrace { w, h } => grid_trace(*w, *h),
        BuilderSpec::Generators {
            ground_size,
            generators,
        } => {
            let gens = generators
                .iter()
                .map(|g| ElementSet::from_sorted_list(g, *ground_size))
                .collect::<Result<Vec<_>>>()?;
            closure_from_generators(*ground_size, &gens, DEFAULT_SIZE_CAP)
        }
        BuilderSpec::Explicit {
            ground_size,
            convex_sets,
        } => {
            let sets = convex_sets
                .iter()
                .map(|c| ElementSet::from_sorted_list(c, *ground_size))
                .collect::<Result<Vec<_>>>()?;
            validate_space(*ground_size, sets)
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument(
            "ground set must be non-empty".into(),
        ))
    } else if n > ElementSet::MAX_GROUND {
        Err(Error::GroundTooLarge(n))
    } else {
        Ok(())
    }
}

/// `n(n+1)/2 + 1` sets: every range `[i, j]` plus `∅`.
pub fn interval(n: usize) -> Result<ConvexitySpace> {
    check_n(n)?;
    let mut sets = vec![ElementSet::EMPTY];
    for i in 0..n {
        for j in i..n {
            sets.push((i..=j).collect());
        }
    }
    sets.sort();
    Ok(ConvexitySpace::from_canonical_unchecked(n, sets))
}

pub fn free(n: usize) -> Result<ConvexitySpace> {
    check_n(n)?;
    Ok(ConvexitySpace::from_canonical_unchecked(
        n,
        vec![ElementSet::EMPTY, ElementSet::full(n)],
    ))
}

pub fn powerset(n: usize) -> Result<ConvexitySpace> {
    check_n(n)?;
    if (1usize << n.min(40)) > DEFAULT_SIZE_CAP {
        return Err(Error::SizeCapExceeded {
            size: 1usize << n.min(40),
            cap: DEFAULT_SIZE_CAP,
        });
    }
    let mut sets: Vec<ElementSet> = ElementSet::full(n).subsets().collect();
    sets.sort();
    Ok(ConvexitySpace::from_canonical_unchecked(n, sets))
}

/// `{P ∩ conv(S) : S ⊆ P}` with exact integer hull membership.
pub fn planar_trace(points: &[Point]) -> Result<ConvexitySpace> {
    let n = points.len();
    check_n(n)?;
    if n > MAX_TRACE_POINTS {
        return Err(Error::InvalidArgument(format!(
            "planar traces are limited to {MAX_TRACE_POINTS} points, got {n}"
        )));
    }
    let distinct: BTreeSet<Point> = points.iter().copied().collect();
    if distinct.len() != n {
        return Err(Error::DegenerateInput("duplicate points".into()));
    }
    let mut family = BTreeSet::new();
    let mut chosen = Vec::with_capacity(n);
    for subset in ElementSet::full(n).subsets() {
        chosen.clear();
        chosen.extend(subset.iter().map(|i| points[i]));
        let hull = convex_hull(&chosen);
        let trace: ElementSet = (0..n)
            .filter(|&i| hull_contains(&hull, points[i]))
            .collect();
        family.insert(trace);
    }
    Ok(ConvexitySpace::from_canonical_unchecked(
        n,
        family.into_iter().collect(),
    ))
}

pub fn grid_points(w: usize, h: usize) -> Vec<Point> {
    (0..h)
        .flat_map(|y| (0..w).map(move |x| (x as i64, y as i64)))
        .collect()
}

pub fn grid_trace(w: usize, h: usize) -> Result<ConvexitySpace> {
    planar_trace(&grid_points(w, h))
}
