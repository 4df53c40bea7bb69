//! A fixed, seeded collection of small spaces for property sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builders::{free, grid_trace, interval, planar_trace, powerset};
use crate::error::Result;
use crate::planar::Point;
use crate::set::ElementSet;
use crate::space::{closure_from_generators, ConvexitySpace, DEFAULT_SIZE_CAP};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub space: ConvexitySpace,
}

fn entry(name: String, space: Result<ConvexitySpace>) -> CorpusEntry {
    CorpusEntry {
        name,
        space: space.expect("corpus members are valid by construction"),
    }
}

/// Ground size 3..=7, one to four random non-empty generators.
pub fn random_closure(seed: u64) -> Result<ConvexitySpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(3..=7usize);
    let count = rng.random_range(1..=4usize);
    let gens: Vec<ElementSet> = (0..count)
        .map(|_| ElementSet::from_bits(rng.random_range(1..(1u64 << n))))
        .collect();
    closure_from_generators(n, &gens, DEFAULT_SIZE_CAP)
}

/// Distinct points in a `7 × 7` box, between 4 and 7 of them.
pub fn random_points(seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.random_range(4..=7usize);
    let mut points: Vec<Point> = Vec::new();
    while points.len() < target {
        let p = (rng.random_range(0..7i64), rng.random_range(0..7i64));
        if !points.contains(&p) {
            points.push(p);
        }
    }
    points
}

pub fn planar_samples() -> Vec<(String, Vec<Point>)> {
    let mut out: Vec<(String, Vec<Point>)> = vec![
        ("square".into(), vec![(0, 0), (1, 0), (1, 1), (0, 1)]),
        (
            "triangle_center".into(),
            vec![(0, 0), (4, 0), (0, 4), (1, 1)],
        ),
        ("collinear4".into(), vec![(0, 0), (1, 1), (2, 2), (3, 3)]),
        (
            "pentagon_center".into(),
            vec![(0, 2), (2, 0), (4, 1), (4, 3), (2, 4), (2, 2)],
        ),
        (
            "hexagon".into(),
            vec![(1, 0), (3, 0), (4, 2), (3, 4), (1, 4), (0, 2)],
        ),
        ("kite".into(), vec![(0, 0), (2, 1), (4, 0), (2, 4), (2, 2)]),
    ];
    for seed in 1..=6u64 {
        out.push((format!("random_points_{seed}"), random_points(seed)));
    }
    out
}

/// Intervals, free and power-set spaces, planar traces on at most seven
/// points, and closures of random generators for seeds `1..=100`.
pub fn standard() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push(entry(format!("interval({n})"), interval(n)));
    }
    for n in 2..=6 {
        out.push(entry(format!("free({n})"), free(n)));
    }
    for n in 2..=4 {
        out.push(entry(format!("powerset({n})"), powerset(n)));
    }
    out.push(entry("grid_trace(2,3)".into(), grid_trace(2, 3)));
    out.push(entry("grid_trace(3,2)".into(), grid_trace(3, 2)));
    for (name, points) in planar_samples() {
        out.push(entry(
            format!("planar_trace({name})"),
            planar_trace(&points),
        ));
    }
    for seed in 1..=100 {
        out.push(entry(
            format!("random_closure(seed={seed})"),
            random_closure(seed),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_large_and_small_enough() {
        let corpus = standard();
        assert!(corpus.len() >= 120);
        assert!(corpus.iter().all(|e| e.space.ground_size() <= 8));
    }

    #[test]
    fn seeds_are_reproducible() {
        assert_eq!(random_closure(17).unwrap(), random_closure(17).unwrap());
        assert_eq!(random_points(3), random_points(3));
    }
}
