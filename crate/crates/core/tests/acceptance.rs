//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Each criterion recomputes what it checks through an oracle that does not
//! share code with the search it is checking (naive hulls, closed forms,
//! brute-force enumeration, vertex enumeration for the LP).

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use convexity::bounds::verify_bounds;
use convexity::builders::interval;
use convexity::colorful::find_rainbow_empty;
use convexity::combin::Combinations;
use convexity::corpus::{self, CorpusEntry};
use convexity::fractional::fh_stats;
use convexity::helly::{helly_number, helly_number_by_subfamilies};
use convexity::hypergraph::{
    clique_count, clique_number, find_complete_missing_tuple, intersection_hypergraph, Hypergraph,
};
use convexity::partitions::{colorful_m, stirling_table};
use convexity::radon::{find_k_partition, partition_number};
use convexity::rational::{ratio, Rational};
use convexity::transversal::{tau, tau_star, weak_net, NetRequest, SetSystem};
use convexity::{Budget, ConvexitySpace, ElementSet, Error, Multiset};

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: convexity::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("library error: {e}"))
}

fn big_budget() -> Budget {
    Budget::new(2_000_000_000)
}

// ---- oracles ----------------------------------------------------------------

fn naive_hull(space: &ConvexitySpace, y: ElementSet) -> ElementSet {
    space
        .convex_sets()
        .iter()
        .filter(|c| y.is_subset(**c))
        .fold(space.ground(), |acc, c| acc.intersection(*c))
}

fn naive_splits(space: &ConvexitySpace, s: ElementSet) -> bool {
    s.subsets()
        .filter(|a| !a.is_empty() && *a != s)
        .any(|a| naive_hull(space, a).intersects(naive_hull(space, s.difference(a))))
}

fn naive_radon(space: &ConvexitySpace) -> Option<usize> {
    let ground = space.ground();
    (1..=space.ground_size()).find(|&m| ground.subsets_of_size(m).all(|s| naive_splits(space, s)))
}

// In a path, parts meeting at x: one per copy of x plus one per pair of
// points straddling it.
fn interval_parts_at(counts: &[usize], x: usize) -> usize {
    let below: usize = counts[..x].iter().sum();
    let above: usize = counts[x + 1..].iter().sum();
    counts[x] + below.min(above)
}

fn interval_admits(counts: &[usize], k: usize) -> bool {
    (0..counts.len()).any(|x| interval_parts_at(counts, x) >= k)
}

fn multisets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for c in (0..=left).rev() {
            cur.push(c);
            rec(n, i + 1, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, size, &mut Vec::new(), &mut out);
    out
}

fn brute_min_hitting_set(ground_size: usize, members: &[ElementSet]) -> (usize, ElementSet) {
    let mut all: Vec<ElementSet> = ElementSet::full(ground_size).subsets().collect();
    all.sort_by_key(|s| (s.len(), *s));
    let t = all
        .into_iter()
        .find(|t| members.iter().all(|m| m.intersects(*t)))
        .expect("the ground set hits every non-empty member");
    (t.len(), t)
}

fn to_r64(r: &Rational) -> Rational64 {
    Rational64::new(r.numer().to_i64().unwrap(), r.denom().to_i64().unwrap())
}

// Minimum of Σf over 0 ≤ f ≤ 1, Σ_{x∈S} f(x) ≥ 1, by enumerating every basic
// solution: choose n tight constraints, solve, keep the feasible ones.
fn lp_by_vertices(n: usize, members: &[ElementSet]) -> Rational64 {
    let mut rows: Vec<(Vec<Rational64>, Rational64)> = Vec::new();
    let one = Rational64::one();
    let zero = Rational64::zero();
    for m in members {
        rows.push((
            (0..n)
                .map(|x| if m.contains(x) { one } else { zero })
                .collect(),
            one,
        ));
    }
    for x in 0..n {
        rows.push((
            (0..n).map(|y| if y == x { one } else { zero }).collect(),
            zero,
        ));
        rows.push((
            (0..n).map(|y| if y == x { one } else { zero }).collect(),
            one,
        ));
    }
    let feasible = |f: &[Rational64]| {
        f.iter().all(|v| *v >= zero && *v <= one)
            && members
                .iter()
                .all(|m| m.iter().map(|x| f[x]).sum::<Rational64>() >= one)
    };
    let mut best: Option<Rational64> = None;
    let mut combos = Combinations::new(rows.len(), n);
    while let Some(idx) = combos.next_combination() {
        let mut a: Vec<Vec<Rational64>> = idx
            .iter()
            .map(|&i| {
                let mut r = rows[i].0.clone();
                r.push(rows[i].1);
                r
            })
            .collect();
        let mut singular = false;
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                singular = true;
                break;
            };
            a.swap(col, p);
            let pivot = a[col][col];
            for v in a[col].iter_mut() {
                *v /= pivot;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col];
                    let pivot_row = a[col].clone();
                    for (v, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                        *v -= factor * p;
                    }
                }
            }
        }
        if singular {
            continue;
        }
        let f: Vec<Rational64> = (0..n).map(|r| a[r][n]).collect();
        if feasible(&f) {
            let value: Rational64 = f.iter().sum();
            if best.is_none_or(|b| value < b) {
                best = Some(value);
            }
        }
    }
    best.expect("f = 1 everywhere is a basic feasible solution")
}

fn naive_is_clique(h: &Hypergraph, s: ElementSet) -> bool {
    s.subsets_of_size(h.uniformity()).all(|e| h.has_edge(e))
}

fn naive_clique_count(h: &Hypergraph, m: usize) -> usize {
    h.vertices()
        .subsets_of_size(m)
        .filter(|s| naive_is_clique(h, *s))
        .count()
}

fn naive_clique_number(h: &Hypergraph) -> (usize, ElementSet) {
    let mut all: Vec<ElementSet> = h
        .vertices()
        .subsets()
        .filter(|s| naive_is_clique(h, *s))
        .collect();
    all.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    (all[0].len(), all[0])
}

fn naive_missing_tuple(h: &Hypergraph, m: usize) -> Option<Vec<ElementSet>> {
    let mut missing: Vec<ElementSet> = h
        .vertices()
        .subsets_of_size(h.uniformity())
        .filter(|e| !h.has_edge(*e))
        .collect();
    missing.sort();
    let mut combos = Combinations::new(missing.len(), m);
    while let Some(idx) = combos.next_combination() {
        let taus: Vec<ElementSet> = idx.iter().map(|&i| missing[i]).collect();
        let disjoint = (0..m).all(|i| (i + 1..m).all(|j| !taus[i].intersects(taus[j])));
        if !disjoint {
            continue;
        }
        let mut transversals = vec![ElementSet::EMPTY];
        for t in &taus {
            transversals = transversals
                .iter()
                .flat_map(|base| t.iter().map(move |v| base.with(v)))
                .collect();
        }
        if transversals.iter().all(|s| naive_is_clique(h, *s)) {
            return Some(taus);
        }
    }
    None
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> ElementSet {
    ElementSet::from_bits(rng.random_range(1..(1u64 << n)))
}

fn random_convex(rng: &mut ChaCha8Rng, space: &ConvexitySpace) -> ElementSet {
    let sets = space.convex_sets();
    sets[rng.random_range(1..sets.len())]
}

fn random_interval(rng: &mut ChaCha8Rng, n: usize) -> ElementSet {
    let a = rng.random_range(0..n);
    let b = rng.random_range(a..n);
    (a..=b).collect()
}

// ---- criteria ---------------------------------------------------------------

type Reports = Vec<(CorpusEntry, convexity::bounds::BoundsReport)>;

fn corpus_reports() -> std::result::Result<Reports, String> {
    corpus::standard()
        .into_iter()
        .map(|e| {
            let report = lib(verify_bounds(&e.space, 5, &mut big_budget()))?;
            Ok((e, report))
        })
        .collect()
}

fn levi(reports: &Reports) -> Outcome {
    let mut finite = 0;
    for (e, rep) in reports {
        let naive = naive_radon(&e.space);
        ensure(naive == rep.r2, || {
            format!("{}: r2 {:?} but naive {:?}", e.name, rep.r2, naive)
        })?;
        let (h, cert) = lib(helly_number_by_subfamilies(&e.space, &mut big_budget()))
            .map_err(|m| format!("{}: {m}", e.name))?;
        ensure(h == rep.helly, || {
            format!("{}: h {} but subfamily climb {h}", e.name, rep.helly)
        })?;
        lib(cert.validate(&e.space))?;
        if let Some(r2) = rep.r2 {
            finite += 1;
            ensure(rep.helly < r2, || {
                format!("{}: h = {} >= r2 = {r2}", e.name, rep.helly)
            })?;
        }
    }
    ensure(reports.len() >= 120, || {
        format!("corpus has only {} spaces", reports.len())
    })?;
    Ok(format!(
        "{} spaces, {finite} with finite r2, h < r2 on all",
        reports.len()
    ))
}

fn jamison(reports: &Reports) -> Outcome {
    let mut checked = 0;
    let mut monotone = 0;
    for (e, rep) in reports {
        let n = e.space.ground_size();
        for k in 2..=5 {
            let rk = rep
                .partition_number(k)
                .ok_or_else(|| format!("{}: r{k} missing", e.name))?;
            ensure(rk <= (k - 1) * n + 1, || {
                format!("{}: r{k} = {rk} above pigeonhole", e.name)
            })?;
            if let (Some(r2), 3..=4) = (rep.r2, k) {
                let bound = r2.pow(k.next_power_of_two().trailing_zeros());
                ensure(rk <= bound, || {
                    format!("{}: r{k} = {rk} > r2^ceil(log2 k) = {bound}", e.name)
                })?;
                checked += 1;
            }
            let conv = |k: usize| rep.by_convention.contains(&k);
            if k < 5 && !conv(k) && !conv(k + 1) {
                let next = rep.partition_number(k + 1).unwrap();
                ensure(rk <= next, || {
                    format!("{}: r{k} = {rk} > r{} = {next}", e.name, k + 1)
                })?;
                monotone += 1;
            }
        }
        ensure(rep.checks.all_ok(), || {
            format!("{}: report checks not all ok", e.name)
        })?;
    }
    Ok(format!(
        "{checked} Jamison checks, {monotone} monotone pairs"
    ))
}

fn interval_tverberg() -> Outcome {
    let space = interval(7).unwrap();
    for k in 2..=4 {
        let p = lib(partition_number(&space, k, &mut big_budget()))?;
        ensure(p.value == 2 * k - 1 && !p.by_convention, || {
            format!("r{k} = {}", p.value)
        })?;
        for size in 1..=2 * k - 1 {
            for counts in multisets(7, size) {
                let y = Multiset::from_count_vec(&counts);
                let w = lib(find_k_partition(&space, &y, k, &mut big_budget()))?;
                let expect = interval_admits(&counts, k);
                ensure(w.is_some() == expect, || {
                    format!(
                        "k = {k}, Y = {counts:?}: search {} closed form {expect}",
                        w.is_some()
                    )
                })?;
                if let Some(w) = w {
                    lib(w.validate(&space, &y, k))?;
                    ensure(interval_parts_at(&counts, w.common_point) >= k, || {
                        "bad common point".into()
                    })?;
                }
            }
            let all = multisets(7, size).iter().all(|c| interval_admits(c, k));
            ensure(all == (size >= 2 * k - 1), || {
                format!("closed form disagrees at size {size}")
            })?;
        }
    }
    Ok("r2, r3, r4 of interval(7) = 3, 5, 7; every multiset up to 2k-1 agrees with the closed form".into())
}

fn forced_empty_family(rng: &mut ChaCha8Rng, n: usize) -> Vec<ElementSet> {
    let size = rng.random_range(1..=4);
    let mut family: Vec<ElementSet> = (0..size).map(|_| random_interval(rng, n)).collect();
    let meet = family
        .iter()
        .fold(ElementSet::full(n), |a, s| a.intersection(*s));
    if let (Some(a), Some(b)) = (meet.first(), meet.last()) {
        if a > 0 {
            family.push((0..a).collect());
        } else if b + 1 < n {
            family.push((b + 1..n).collect());
        } else {
            family.push(ElementSet::singleton(0));
            family.push(ElementSet::singleton(n - 1));
        }
    }
    family.shuffle(rng);
    family
}

fn colorful_contrapositive() -> Outcome {
    let space = interval(5).unwrap();
    let mut refuted = 0;
    for trial in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + trial);
        let families: Vec<Vec<ElementSet>> =
            (0..7).map(|_| forced_empty_family(&mut rng, 5)).collect();
        match find_rainbow_empty(&space, &families, 3, &mut Budget::default()) {
            Ok(w) => {
                lib(w.validate(&families))?;
                let meet = w
                    .selection
                    .iter()
                    .fold(space.ground(), |a, s| a.intersection(*s));
                ensure(meet.is_empty(), || {
                    format!("trial {trial}: rainbow meets in {meet}")
                })?;
                for (i, (&j, s)) in w.selection_indices.iter().zip(&w.selection).enumerate() {
                    ensure(families[i][j] == *s, || {
                        format!("trial {trial}: selection {i} misindexed")
                    })?;
                }
            }
            Err(Error::RadonBoundRefuted(_)) => refuted += 1,
            Err(e) => return Err(format!("trial {trial}: {e}")),
        }
    }
    ensure(refuted == 0, || {
        format!("RadonBoundRefuted fired {refuted} times")
    })?;
    Ok("200 trials, every witness empty and re-validated, 0 refutations".into())
}

// Families are unordered for this property, so multisets of family types
// cover every ordered configuration.
fn colorful_direct() -> Outcome {
    let space = interval(3).unwrap();
    let c: Vec<ElementSet> = space.convex_sets().to_vec();
    let mut types: Vec<Vec<ElementSet>> = c.iter().map(|s| vec![*s]).collect();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            types.push(vec![c[i], c[j]]);
        }
    }
    let meet = |sets: &[ElementSet]| sets.iter().fold(space.ground(), |a, s| a.intersection(*s));
    let empty_types: Vec<usize> = (0..types.len())
        .filter(|&t| meet(&types[t]).is_empty())
        .collect();

    let mut configs = 0u64;
    let mut all_rainbows_meet = 0u64;
    let mut library_checked = 0u64;
    let mut pick = [0usize; 7];
    loop {
        configs += 1;
        let families: Vec<&Vec<ElementSet>> = pick.iter().map(|&t| &types[t]).collect();
        let some_common = families.iter().any(|f| !meet(f).is_empty());
        if !some_common {
            // Conclusion fails, so some rainbow must be empty.
            let mut any_empty = false;
            let choices: usize = families.iter().map(|f| f.len()).product();
            for code in 0..choices {
                let mut rest = code;
                let mut acc = space.ground();
                for f in &families {
                    acc = acc.intersection(f[rest % f.len()]);
                    rest /= f.len();
                }
                if acc.is_empty() {
                    any_empty = true;
                    break;
                }
            }
            ensure(any_empty, || {
                format!("configuration {pick:?}: all rainbows meet, no common point")
            })?;
            let owned: Vec<Vec<ElementSet>> = families.iter().map(|f| f.to_vec()).collect();
            let w = lib(find_rainbow_empty(
                &space,
                &owned,
                3,
                &mut Budget::default(),
            ))?;
            lib(w.validate(&owned))?;
            library_checked += 1;
        } else {
            all_rainbows_meet += 1;
        }
        // Next nondecreasing 7-tuple of type indices.
        let Some(pos) = (0..7).rev().find(|&p| pick[p] + 1 < types.len()) else {
            break;
        };
        let v = pick[pos] + 1;
        for slot in pick.iter_mut().skip(pos) {
            *slot = v;
        }
    }
    ensure(library_checked > 0 && empty_types.len() == 12, || {
        "unexpected family types".into()
    })?;
    Ok(format!(
        "{configs} configurations of {} family types; {library_checked} with all families empty each have an empty rainbow; {all_rainbows_meet} others have a common point",
        types.len()
    ))
}

fn lp_duality() -> Outcome {
    let mut vertex_checked = 0;
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(2000 + seed);
        let n = rng.random_range(1..=10);
        let count = rng.random_range(1..=12);
        let members: Vec<ElementSet> = (0..count).map(|_| random_subset(&mut rng, n)).collect();
        let system = SetSystem::new(n, members.clone()).unwrap();
        let ft = lib(tau_star(&system, &mut big_budget()))?;
        lib(ft.validate(&system))?;
        ensure(ft.value == ft.dual_value, || {
            format!("seed {seed}: primal != dual")
        })?;
        let (t, hit) = lib(tau(&system, &mut big_budget()))?;
        let brute = brute_min_hitting_set(n, &members);
        ensure((t, hit) == brute, || {
            format!("seed {seed}: tau {t} {hit} but brute force {brute:?}")
        })?;
        ensure(ft.value <= Rational::from_integer(t.into()), || {
            format!("seed {seed}: tau* > tau")
        })?;
        if n <= 5 {
            let v = lp_by_vertices(n, &members);
            ensure(v == to_r64(&ft.value), || {
                format!("seed {seed}: simplex {} vertices {v}", ft.value)
            })?;
            vertex_checked += 1;
        }
    }
    let mut interval_cases = 0;
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(3000 + seed);
        let n = rng.random_range(1..=10);
        let count = rng.random_range(1..=12);
        let members: Vec<ElementSet> = (0..count).map(|_| random_interval(&mut rng, n)).collect();
        let system = SetSystem::new(n, members).unwrap();
        let ft = lib(tau_star(&system, &mut big_budget()))?;
        let (t, _) = lib(tau(&system, &mut big_budget()))?;
        ensure(ft.value == Rational::from_integer(t.into()), || {
            format!("interval seed {seed}: tau* = {} but tau = {t}", ft.value)
        })?;
        interval_cases += 1;
    }
    Ok(format!(
        "100 random systems (primal = dual, tau* <= tau, {vertex_checked} against vertex enumeration), {interval_cases} interval systems with tau = tau*"
    ))
}

fn hypergraph_oracle() -> Outcome {
    let mut tuples_found = 0;
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(4000 + seed);
        let k = if seed % 2 == 0 { 2 } else { 3 };
        let n = rng.random_range(k..=12);
        let density = rng.random_range(0.3..0.95);
        let edges: Vec<ElementSet> = ElementSet::full(n)
            .subsets_of_size(k)
            .filter(|_| rng.random_bool(density))
            .collect();
        let h = Hypergraph::new(n, k, edges).unwrap();
        for m in k..=n {
            let c = lib(clique_count(&h, m, &mut big_budget()))?;
            let naive = naive_clique_count(&h, m);
            ensure(c == BigUint::from(naive), || {
                format!("seed {seed}: c_{m} = {c}, naive {naive}")
            })?;
        }
        let omega = lib(clique_number(&h, &mut big_budget()))?;
        let naive = naive_clique_number(&h);
        ensure(omega == naive, || {
            format!("seed {seed}: omega {omega:?}, naive {naive:?}")
        })?;
        let max_m = if k == 2 { 3 } else { 2 };
        for m in 1..=max_m {
            let got = lib(find_complete_missing_tuple(&h, m, &mut big_budget()))?.map(|t| t.tuples);
            let naive = naive_missing_tuple(&h, m);
            ensure(got == naive, || {
                format!("seed {seed}, m = {m}: {got:?} vs naive {naive:?}")
            })?;
            tuples_found += usize::from(got.is_some());
        }
    }
    Ok(format!(
        "100 hypergraphs agree on c_m, omega and missing tuples ({tuples_found} tuples found)"
    ))
}

fn stirling() -> Outcome {
    let table = stirling_table(12);
    let mut expect = vec![vec![0u128; 13]; 13];
    expect[0][0] = 1;
    for n in 1..=12 {
        for k in 1..=n {
            expect[n][k] = k as u128 * expect[n - 1][k] + expect[n - 1][k - 1];
        }
    }
    for n in 0..=12 {
        for k in 0..=n {
            ensure(table[n][k] == BigUint::from(expect[n][k]), || {
                format!("S({n},{k}) = {}", table[n][k])
            })?;
        }
    }
    let m3 = lib(colorful_m(3))?;
    let m4 = lib(colorful_m(4))?;
    ensure(m3 == BigUint::from(7u32), || {
        format!("colorful_m(3) = {m3}")
    })?;
    ensure(m4 == BigUint::from(3025u32), || {
        format!("colorful_m(4) = {m4}")
    })?;
    Ok("S(n,k) for n <= 12 matches recurrence; colorful_m(3) = 7, colorful_m(4) = 3025".into())
}

fn weak_nets() -> Outcome {
    let space = interval(6).unwrap();
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(5000 + seed);
        let size = rng.random_range(1..=8);
        let y = Multiset::from_items((0..size).map(|_| rng.random_range(0..6)));
        let q = rng.random_range(1..=6i64);
        let p = rng.random_range(1..=q);
        let req = NetRequest::new(y.clone(), ratio(p, q)).unwrap();
        let out = lib(weak_net(&space, &req, None, &mut big_budget()))?;
        let heavy: Vec<ElementSet> = space
            .convex_sets()
            .iter()
            .copied()
            .filter(|s| {
                let weight: usize = s.iter().map(|x| y.count(x)).sum();
                weight as i64 * q >= p * y.cardinality() as i64
            })
            .collect();
        ensure(out.heavy.members() == heavy.as_slice(), || {
            format!("seed {seed}: heavy family differs")
        })?;
        ensure(heavy.iter().all(|s| s.intersects(out.net)), || {
            format!("seed {seed}: net misses a heavy set")
        })?;
        let (best, _) = brute_min_hitting_set(6, &heavy);
        ensure(out.net.len() == best, || {
            format!("seed {seed}: net size {} vs minimum {best}", out.net.len())
        })?;
    }
    Ok("50 requests: nets hit every heavy set at brute-force minimum size".into())
}

fn fractional_helly_smoke(reports: &Reports) -> Outcome {
    let mut saturated = 0;
    let mut hypergraphs = 0;
    for (idx, (e, rep)) in reports.iter().enumerate() {
        let space = &e.space;
        if space.len() < 2 {
            continue;
        }
        let h = lib(helly_number(space, &mut big_budget()))?.value;
        let mut rng = ChaCha8Rng::seed_from_u64(6000 + idx as u64);
        for round in 0..6 {
            let size = rng.random_range(h.max(2)..=h.max(2) + 4);
            let family: Vec<ElementSet> = if round % 2 == 0 {
                (0..size).map(|_| random_convex(&mut rng, space)).collect()
            } else {
                // Sets through a common point, so alpha = 1 occurs.
                let x = rng.random_range(0..space.ground_size());
                let through: Vec<ElementSet> = space
                    .convex_sets()
                    .iter()
                    .copied()
                    .filter(|c| c.contains(x))
                    .collect();
                (0..size)
                    .map(|_| through[rng.random_range(0..through.len())])
                    .collect()
            };
            for m in h.max(1)..=size {
                let stats = lib(fh_stats(space, &family, m, &mut big_budget()))?;
                if stats.alpha.is_one() {
                    ensure(stats.beta.is_one(), || {
                        format!("{}: alpha = 1, beta = {} at m = {m}", e.name, stats.beta)
                    })?;
                    saturated += 1;
                }
            }
        }
        if rep.r2.is_some_and(|r2| r2 <= 3) {
            let m = lib(colorful_m(3))?.to_usize().unwrap();
            for _ in 0..3 {
                let size = rng.random_range(2 * m..=2 * m + 3);
                let family: Vec<ElementSet> =
                    (0..size).map(|_| random_convex(&mut rng, space)).collect();
                let hg = lib(intersection_hypergraph(
                    space,
                    &family,
                    2,
                    &mut big_budget(),
                ))?;
                let found = lib(find_complete_missing_tuple(&hg, m, &mut big_budget()))?;
                ensure(found.is_none(), || {
                    format!("{}: complete {m}-tuple of missing edges found", e.name)
                })?;
                hypergraphs += 1;
            }
        }
    }
    ensure(saturated > 0 && hypergraphs > 0, || {
        "no instances exercised".into()
    })?;
    Ok(format!(
        "{saturated} alpha = 1 instances all with beta = 1; {hypergraphs} intersection hypergraphs with no complete missing tuple"
    ))
}

fn main() -> ExitCode {
    let mut results: BTreeMap<usize, (&str, Outcome, Duration, Option<Duration>)> = BTreeMap::new();
    let mut run =
        |id: usize, name: &'static str, limit: Option<u64>, f: &mut dyn FnMut() -> Outcome| {
            let start = Instant::now();
            let outcome = f();
            let elapsed = start.elapsed();
            results.insert(id, (name, outcome, elapsed, limit.map(Duration::from_secs)));
        };

    let start = Instant::now();
    let reports = corpus_reports();
    let corpus_time = start.elapsed();
    match &reports {
        Ok(reports) => {
            run(1, "levi", Some(120), &mut || {
                levi(reports).map(|s| format!("{s} (corpus sweep {corpus_time:.1?})"))
            });
            run(2, "jamison", None, &mut || jamison(reports));
        }
        Err(e) => {
            run(1, "levi", None, &mut || Err(e.clone()));
            run(2, "jamison", None, &mut || Err(e.clone()));
        }
    }
    run(3, "interval-tverberg", Some(30), &mut interval_tverberg);
    run(
        4,
        "colorful-contrapositive",
        Some(60),
        &mut colorful_contrapositive,
    );
    run(5, "colorful-direct", None, &mut colorful_direct);
    run(6, "lp-duality", Some(60), &mut lp_duality);
    run(7, "hypergraph-oracle", None, &mut hypergraph_oracle);
    run(8, "stirling", Some(1), &mut stirling);
    run(9, "weak-net", None, &mut weak_nets);
    match &reports {
        Ok(reports) => run(10, "fractional-helly-smoke", None, &mut || {
            fractional_helly_smoke(reports)
        }),
        Err(e) => run(10, "fractional-helly-smoke", None, &mut || Err(e.clone())),
    }

    let mut failed = 0;
    for (id, (name, outcome, elapsed, limit)) in &results {
        let mut elapsed_total = *elapsed;
        if *id == 1 {
            elapsed_total += corpus_time;
        }
        let over = limit.is_some_and(|l| elapsed_total > l);
        let (status, detail) = match outcome {
            Ok(msg) if !over => ("PASS", msg.clone()),
            Ok(msg) => ("FAIL", format!("{msg}; exceeded {:?}", limit.unwrap())),
            Err(msg) => ("FAIL", msg.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {id:>2} {name:<24} {status} [{elapsed_total:.2?}] {detail}");
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
