//! Transversal numbers, fractional transversals, weak ε-nets and the
//! `(p, q)` condition.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::combin::Combinations;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::set::{ElementSet, Multiset};
use crate::simplex::{maximize, LpOutcome};
use crate::space::{intersection_fixpoint, ConvexitySpace, DEFAULT_SIZE_CAP};

/// A finite family of subsets of `{0, .., ground_size - 1}`; order matters
/// for member indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SystemDoc", into = "SystemDoc")]
pub struct SetSystem {
    ground_size: usize,
    members: Vec<ElementSet>,
}

/// Wire form: `{"ground_size": N, "members": [[..], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemDoc {
    pub ground_size: usize,
    pub members: Vec<Vec<usize>>,
}

impl TryFrom<SystemDoc> for SetSystem {
    type Error = Error;

    fn try_from(doc: SystemDoc) -> Result<Self> {
        let members = doc
            .members
            .iter()
            .map(|m| ElementSet::from_sorted_list(m, doc.ground_size))
            .collect::<Result<Vec<_>>>()?;
        SetSystem::new(doc.ground_size, members)
    }
}

impl From<SetSystem> for SystemDoc {
    fn from(s: SetSystem) -> Self {
        SystemDoc {
            ground_size: s.ground_size,
            members: s.members.iter().map(|m| m.to_vec()).collect(),
        }
    }
}

impl SetSystem {
    pub fn new(ground_size: usize, members: Vec<ElementSet>) -> Result<Self> {
        if ground_size > ElementSet::MAX_GROUND {
            return Err(Error::GroundTooLarge(ground_size));
        }
        if let Some(bad) = members.iter().find(|m| !m.fits(ground_size)) {
            return Err(Error::IndexOutOfRange {
                index: bad.last().unwrap_or(0),
                ground_size,
            });
        }
        Ok(SetSystem {
            ground_size,
            members,
        })
    }

    pub fn of_space(space: &ConvexitySpace) -> Self {
        SetSystem {
            ground_size: space.ground_size(),
            members: space.convex_sets().to_vec(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.ground_size)
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_hit_by(&self, t: ElementSet) -> bool {
        self.members.iter().all(|m| m.intersects(t))
    }

    fn check_nonempty_members(&self) -> Result<()> {
        match self.members.iter().position(|m| m.is_empty()) {
            Some(i) => Err(Error::Infeasible(i)),
            None => Ok(()),
        }
    }

    fn check_space(&self, space: &ConvexitySpace) -> Result<()> {
        if self.ground_size != space.ground_size() {
            return Err(Error::InvalidArgument(format!(
                "system ground size {} differs from space ground size {}",
                self.ground_size,
                space.ground_size()
            )));
        }
        space.check_convex(&self.members)
    }
}

/// `τ(F)` and the lexicographically least minimum transversal.
pub fn tau(system: &SetSystem, budget: &mut Budget) -> Result<(usize, ElementSet)> {
    system.check_nonempty_members()?;
    let members = reduce(system.members());
    if members.is_empty() {
        return Ok((0, ElementSet::EMPTY));
    }
    let greedy = greedy_cover(&members);
    let lp_floor = fractional_lower_bound(system.ground_size(), &members, budget)?;
    let optimum = if greedy.len() <= lp_floor {
        greedy.len()
    } else {
        let mut best = greedy.len();
        let all = system.ground();
        branch(&members, all, 0, &mut best, budget)?;
        best
    };

    // Fix elements one at a time, smallest feasible first.
    let mut chosen = ElementSet::EMPTY;
    let mut unhit = members;
    let mut floor = 0usize;
    for slot in 0..optimum {
        let left_after = optimum - slot - 1;
        let mut picked = None;
        for e in floor..system.ground_size() {
            let rest: Vec<ElementSet> = unhit.iter().copied().filter(|m| !m.contains(e)).collect();
            let allowed = system.ground().above(e);
            if hittable_within(&rest, allowed, left_after, budget)? {
                picked = Some((e, rest));
                break;
            }
        }
        let (e, rest) = picked.ok_or_else(|| {
            Error::WitnessInvalid("optimum could not be realised lexicographically".into())
        })?;
        chosen.insert(e);
        unhit = rest;
        floor = e + 1;
    }
    if !system.is_hit_by(chosen) || chosen.len() != optimum {
        return Err(Error::WitnessInvalid(format!(
            "{chosen} is not a transversal of size {optimum}"
        )));
    }
    Ok((optimum, chosen))
}

// Drops duplicates and members that contain another member.
fn reduce(members: &[ElementSet]) -> Vec<ElementSet> {
    let mut sorted: Vec<ElementSet> = members.to_vec();
    sorted.sort_by_key(|m| (m.len(), *m));
    sorted.dedup();
    let mut kept: Vec<ElementSet> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|k| k.is_subset(m)) {
            kept.push(m);
        }
    }
    kept
}

fn highest_degree(members: &[ElementSet], allowed: ElementSet) -> Option<usize> {
    let mut degree = [0usize; 64];
    for m in members {
        for e in m.intersection(allowed).iter() {
            degree[e] += 1;
        }
    }
    allowed
        .iter()
        .filter(|&e| degree[e] > 0)
        .fold(None, |best: Option<usize>, e| match best {
            Some(b) if degree[b] >= degree[e] => Some(b),
            _ => Some(e),
        })
}

fn greedy_cover(members: &[ElementSet]) -> ElementSet {
    let mut unhit: Vec<ElementSet> = members.to_vec();
    let mut cover = ElementSet::EMPTY;
    while let Some(e) = highest_degree(&unhit, ElementSet::full(64)) {
        cover.insert(e);
        unhit.retain(|m| !m.contains(e));
    }
    cover
}

// Members pairwise disjoint within `allowed` each need their own element.
fn packing_bound(members: &[ElementSet], allowed: ElementSet) -> usize {
    let mut used = ElementSet::EMPTY;
    let mut count = 0;
    let mut by_size: Vec<ElementSet> = members.iter().map(|m| m.intersection(allowed)).collect();
    by_size.sort_by_key(|m| m.len());
    for m in by_size {
        if !m.intersects(used) {
            used = used.union(m);
            count += 1;
        }
    }
    count
}

// ⌈τ*⌉ from the exact LP.
fn fractional_lower_bound(
    ground_size: usize,
    members: &[ElementSet],
    budget: &mut Budget,
) -> Result<usize> {
    let system = SetSystem {
        ground_size,
        members: members.to_vec(),
    };
    let ft = solve_fractional(&system, budget)?;
    let ceil = ft.value.ceil().to_integer();
    Ok(usize::try_from(ceil).unwrap_or(usize::MAX))
}

// Branch and bound on the highest-degree element: take it, or forbid it.
// Improves `best` when a strictly smaller transversal exists.
fn branch(
    unhit: &[ElementSet],
    allowed: ElementSet,
    size: usize,
    best: &mut usize,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    if unhit.is_empty() {
        *best = (*best).min(size);
        return Ok(());
    }
    if unhit.iter().any(|m| !m.intersects(allowed)) {
        return Ok(());
    }
    if size + packing_bound(unhit, allowed) >= *best {
        return Ok(());
    }
    let Some(e) = highest_degree(unhit, allowed) else {
        return Ok(());
    };
    let rest: Vec<ElementSet> = unhit.iter().copied().filter(|m| !m.contains(e)).collect();
    branch(&rest, allowed.without(e), size + 1, best, budget)?;
    branch(unhit, allowed.without(e), size, best, budget)
}

fn hittable_within(
    members: &[ElementSet],
    allowed: ElementSet,
    limit: usize,
    budget: &mut Budget,
) -> Result<bool> {
    let mut best = limit + 1;
    branch(members, allowed, 0, &mut best, budget)?;
    Ok(best <= limit)
}

/// Optimal fractional transversal with a matching dual certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FractionalTransversal {
    #[serde(with = "rational")]
    pub value: Rational,
    /// `f(x)` for every ground element.
    #[serde(serialize_with = "rational::seq::serialize")]
    pub weights: BTreeMap<usize, Rational>,
    /// Dual weight of every member (a fractional packing).
    #[serde(serialize_with = "rational::seq::serialize")]
    pub dual_weights: BTreeMap<usize, Rational>,
    /// Duals of the bounds `f(x) ≤ 1`.
    #[serde(serialize_with = "rational::seq::serialize")]
    pub bound_duals: BTreeMap<usize, Rational>,
    #[serde(with = "rational")]
    pub dual_value: Rational,
}

impl FractionalTransversal {
    /// Substitutes both solutions back into their constraints.
    pub fn validate(&self, system: &SetSystem) -> Result<()> {
        let zero = Rational::zero();
        let one = Rational::one();
        let bad = |why: String| Err(Error::WitnessInvalid(why));
        for (x, f) in &self.weights {
            if f < &zero || f > &one {
                return bad(format!(
                    "f({x}) = {} outside [0, 1]",
                    rational::format_ratio(f)
                ));
            }
        }
        for (i, m) in system.members().iter().enumerate() {
            let cover: Rational = m.iter().map(|x| self.weights[&x].clone()).sum();
            if cover < one {
                return bad(format!(
                    "member {i} is covered only {}",
                    rational::format_ratio(&cover)
                ));
            }
        }
        if self
            .dual_weights
            .values()
            .chain(self.bound_duals.values())
            .any(|y| y.is_negative())
        {
            return bad("negative dual weight".into());
        }
        for x in 0..system.ground_size() {
            let load: Rational = system
                .members()
                .iter()
                .enumerate()
                .filter(|(_, m)| m.contains(x))
                .map(|(i, _)| self.dual_weights[&i].clone())
                .sum();
            if load - &self.bound_duals[&x] > one {
                return bad(format!("dual constraint at element {x} violated"));
            }
        }
        let primal: Rational = self.weights.values().cloned().sum();
        let dual: Rational = self.dual_weights.values().cloned().sum::<Rational>()
            - self.bound_duals.values().cloned().sum::<Rational>();
        if primal != self.value || dual != self.dual_value || primal != dual {
            return bad("objective values disagree".into());
        }
        Ok(())
    }
}

/// `τ*(F)` by exact simplex, primal and dual cross-validated.
pub fn tau_star(system: &SetSystem, budget: &mut Budget) -> Result<FractionalTransversal> {
    system.check_nonempty_members()?;
    let ft = solve_fractional(system, budget)?;
    ft.validate(system)?;
    Ok(ft)
}

// The simplex runs on the dual packing LP
//   max Σ y_S − Σ z_x  s.t.  Σ_{S∋x} y_S − z_x ≤ 1,  y, z ≥ 0,
// whose slack basis is feasible; the row prices are the optimal f, and the
// z columns enforce f(x) ≤ 1.
fn solve_fractional(system: &SetSystem, budget: &mut Budget) -> Result<FractionalTransversal> {
    let n = system.ground_size();
    let members = system.members();
    let m = members.len();
    let one = Rational::one();
    let mut objective = vec![one.clone(); m];
    objective.extend(std::iter::repeat_n(-one.clone(), n));
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|x| {
            let mut row: Vec<Rational> = members
                .iter()
                .map(|s| {
                    if s.contains(x) {
                        one.clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            row.extend((0..n).map(|z| {
                if z == x {
                    -one.clone()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    let rhs = vec![one.clone(); n];
    let sol = match maximize(&objective, &rows, &rhs, budget)? {
        LpOutcome::Optimal(sol) => sol,
        LpOutcome::Unbounded => {
            let empty = members.iter().position(|s| s.is_empty()).unwrap_or(0);
            return Err(Error::Infeasible(empty));
        }
    };
    let weights = sol.dual.iter().cloned().enumerate().collect();
    let dual_weights = sol.primal[..m].iter().cloned().enumerate().collect();
    let bound_duals = sol.primal[m..].iter().cloned().enumerate().collect();
    let value: Rational = sol.dual.iter().cloned().sum();
    Ok(FractionalTransversal {
        value,
        weights,
        dual_weights,
        bound_duals,
        dual_value: sol.value,
    })
}

/// A multiset and an exact `ε ∈ (0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetRequest {
    #[serde(rename = "Y")]
    pub y: Multiset,
    #[serde(with = "rational")]
    pub epsilon: Rational,
}

impl NetRequest {
    pub fn new(y: Multiset, epsilon: Rational) -> Result<Self> {
        let req = NetRequest { y, epsilon };
        req.check()?;
        Ok(req)
    }

    fn check(&self) -> Result<()> {
        if self.y.is_empty() {
            return Err(Error::InvalidArgument("Y must be non-empty".into()));
        }
        if !rational::is_unit_interval(&self.epsilon) {
            return Err(Error::InvalidArgument(format!(
                "epsilon {} is not in (0, 1]",
                rational::format_ratio(&self.epsilon)
            )));
        }
        Ok(())
    }

    /// `|S ∩ Y| ≥ ε|Y|`, multiplicities counted, compared in integers.
    pub fn is_heavy(&self, s: ElementSet) -> bool {
        let weight = BigInt::from(self.y.weight_in(s)) * self.epsilon.denom();
        let threshold = BigInt::from(self.y.cardinality()) * self.epsilon.numer();
        weight >= threshold
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakNet {
    pub net: ElementSet,
    pub size: usize,
    pub heavy: SetSystem,
}

/// A minimum weak ε-net for `Y` with respect to `family` (default: all
/// convex sets). The net may use any ground element, not only points of `Y`.
pub fn weak_net(
    space: &ConvexitySpace,
    request: &NetRequest,
    family: Option<&SetSystem>,
    budget: &mut Budget,
) -> Result<WeakNet> {
    request.check()?;
    if let Some(max) = request.y.max_element() {
        if max >= space.ground_size() {
            return Err(Error::IndexOutOfRange {
                index: max,
                ground_size: space.ground_size(),
            });
        }
    }
    let all = SetSystem::of_space(space);
    let family = family.unwrap_or(&all);
    family.check_space(space)?;
    let heavy_members: Vec<ElementSet> = family
        .members()
        .iter()
        .copied()
        .filter(|s| request.is_heavy(*s))
        .collect();
    let heavy = SetSystem::new(space.ground_size(), heavy_members)?;
    if let Some(i) = heavy.members().iter().position(|s| s.is_empty()) {
        return Err(Error::Infeasible(i));
    }
    let (size, net) = tau(&heavy, budget)?;
    Ok(WeakNet { net, size, heavy })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionClosure {
    /// All distinct intersections of subfamilies, canonically ordered.
    pub system: SetSystem,
    /// The ground set is present only because the empty subfamily was
    /// taken to intersect to `X`.
    pub ground_from_empty_subfamily: bool,
}

/// `F^∩`, with the empty subfamily contributing the ground set.
pub fn intersection_closure(system: &SetSystem, size_cap: usize) -> Result<IntersectionClosure> {
    let full = system.ground();
    let family = intersection_fixpoint(full, system.members(), size_cap)?;
    let ground_from_empty_subfamily = !system.members().contains(&full);
    Ok(IntersectionClosure {
        system: SetSystem {
            ground_size: system.ground_size(),
            members: family.into_iter().collect(),
        },
        ground_from_empty_subfamily,
    })
}

pub fn intersection_closure_default(system: &SetSystem) -> Result<IntersectionClosure> {
    intersection_closure(system, DEFAULT_SIZE_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PqOutcome {
    pub holds: bool,
    /// `τ(F)` when the condition holds and every member is non-empty.
    pub tau: Option<usize>,
    pub transversal: Option<ElementSet>,
    /// Least `p` member indices with no point in `q` of them.
    pub violation: Option<Vec<usize>>,
}

/// Whether among any `p` members some `q` share a point.
pub fn pq_check(
    space: &ConvexitySpace,
    system: &SetSystem,
    p: usize,
    q: usize,
    budget: &mut Budget,
) -> Result<PqOutcome> {
    if q == 0 || p < q {
        return Err(Error::InvalidArgument(format!(
            "need p >= q >= 1, got p = {p}, q = {q}"
        )));
    }
    if system.len() < p {
        return Err(Error::InvalidArgument(format!(
            "family has {} members, fewer than p = {p}",
            system.len()
        )));
    }
    system.check_space(space)?;
    let members = system.members();
    let mut combos = Combinations::new(members.len(), p);
    while let Some(idx) = combos.next_combination() {
        budget.charge(p as u64)?;
        let deepest = (0..space.ground_size())
            .map(|x| idx.iter().filter(|&&i| members[i].contains(x)).count())
            .max()
            .unwrap_or(0);
        if deepest < q {
            return Ok(PqOutcome {
                holds: false,
                tau: None,
                transversal: None,
                violation: Some(idx.to_vec()),
            });
        }
    }
    let (tau, transversal) = match tau(system, budget) {
        Ok((t, s)) => (Some(t), Some(s)),
        Err(Error::Infeasible(_)) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(PqOutcome {
        holds: true,
        tau,
        transversal,
        violation: None,
    })
}
