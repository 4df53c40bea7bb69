use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use convexity::transversal::{tau, tau_star, SetSystem};
use convexity::{Budget, ElementSet};

// Every `w`-window of a cycle on `n` points.
fn windows(n: usize, w: usize) -> SetSystem {
    let members = (0..n)
        .map(|i| (0..w).map(|j| (i + j) % n).collect::<ElementSet>())
        .collect();
    SetSystem::new(n, members).unwrap()
}

fn fractional(c: &mut Criterion) {
    let mut group = c.benchmark_group("tau_star_cycle_windows");
    for n in [6, 10, 14] {
        let system = windows(n, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &system, |b, s| {
            b.iter(|| tau_star(black_box(s), &mut Budget::default()).unwrap())
        });
    }
    group.finish();
}

fn integral(c: &mut Criterion) {
    let mut group = c.benchmark_group("tau_cycle_windows");
    for n in [10, 16, 22] {
        let system = windows(n, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &system, |b, s| {
            b.iter(|| tau(black_box(s), &mut Budget::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, fractional, integral);
criterion_main!(benches);
