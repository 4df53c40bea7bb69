use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::space::ConvexitySpace;

/// A `k`-uniform hypergraph on vertices `0..n` (`n ≤ 64`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphDoc", into = "HypergraphDoc")]
pub struct Hypergraph {
    vertex_count: usize,
    uniformity: usize,
    edges: Vec<ElementSet>,
    lookup: HashSet<ElementSet>,
}

/// Wire form: `{"n": .., "k": .., "edges": [[..], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypergraphDoc {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphDoc> for Hypergraph {
    type Error = Error;

    fn try_from(doc: HypergraphDoc) -> Result<Self> {
        let edges = doc
            .edges
            .iter()
            .map(|e| ElementSet::from_sorted_list(e, doc.n))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(doc.n, doc.k, edges)
    }
}

impl From<Hypergraph> for HypergraphDoc {
    fn from(h: Hypergraph) -> Self {
        HypergraphDoc {
            n: h.vertex_count,
            k: h.uniformity,
            edges: h.edges.iter().map(|e| e.to_vec()).collect(),
        }
    }
}

impl Hypergraph {
    pub fn new(vertex_count: usize, uniformity: usize, edges: Vec<ElementSet>) -> Result<Self> {
        if uniformity < 2 {
            return Err(Error::InvalidArgument(format!(
                "uniformity must be at least 2, got {uniformity}"
            )));
        }
        if vertex_count > ElementSet::MAX_GROUND {
            return Err(Error::GroundTooLarge(vertex_count));
        }
        for e in &edges {
            if !e.fits(vertex_count) {
                return Err(Error::IndexOutOfRange {
                    index: e.last().unwrap_or(0),
                    ground_size: vertex_count,
                });
            }
            if e.len() != uniformity {
                return Err(Error::InvalidArgument(format!(
                    "edge {e} does not have {uniformity} vertices"
                )));
            }
        }
        let lookup: HashSet<ElementSet> = edges.iter().copied().collect();
        let mut edges: Vec<ElementSet> = lookup.iter().copied().collect();
        edges.sort();
        Ok(Hypergraph {
            vertex_count,
            uniformity,
            edges,
            lookup,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn edges(&self) -> &[ElementSet] {
        &self.edges
    }

    pub fn has_edge(&self, e: ElementSet) -> bool {
        self.lookup.contains(&e)
    }

    pub fn vertices(&self) -> ElementSet {
        ElementSet::full(self.vertex_count)
    }

    /// Every `k`-subset of `s` is an edge (vacuous below `k` vertices).
    pub fn is_clique(&self, s: ElementSet) -> bool {
        s.len() < self.uniformity || s.subsets_of_size(self.uniformity).all(|e| self.has_edge(e))
    }

    /// Non-edges among the `k`-subsets, in canonical order.
    pub fn missing_edges(&self) -> Vec<ElementSet> {
        let mut missing: Vec<ElementSet> = self
            .vertices()
            .subsets_of_size(self.uniformity)
            .filter(|e| !self.has_edge(*e))
            .collect();
        missing.sort();
        missing
    }

    // Given that `base` and `base ∪ {u}` and `base ∪ {v}` are cliques, checks
    // the k-subsets of `base ∪ {u, v}` that contain both `u` and `v`.
    fn joins(&self, base: ElementSet, u: usize, v: usize) -> bool {
        let k = self.uniformity;
        if base.len() + 2 < k {
            return true;
        }
        let pair = ElementSet::singleton(u).with(v);
        base.subsets_of_size(k - 2)
            .all(|t| self.has_edge(t.union(pair)))
    }

    // Whether `base ∪ {t}` is a clique given that `base` already is one.
    fn extends(&self, base: ElementSet, t: usize) -> bool {
        let k = self.uniformity;
        base.len() + 1 < k
            || base
                .subsets_of_size(k - 1)
                .all(|r| self.has_edge(r.with(t)))
    }
}

/// `c_m(H)`: number of cliques on exactly `m` vertices (`m ≥ k`).
pub fn clique_count(h: &Hypergraph, m: usize, budget: &mut Budget) -> Result<BigUint> {
    if m < h.uniformity {
        return Err(Error::InvalidArgument(format!(
            "clique size {m} is below the uniformity {}",
            h.uniformity
        )));
    }
    let mut total = BigUint::zero();
    count_rec(h, ElementSet::EMPTY, h.vertices(), m, &mut total, budget)?;
    Ok(total)
}

fn count_rec(
    h: &Hypergraph,
    clique: ElementSet,
    candidates: ElementSet,
    m: usize,
    total: &mut BigUint,
    budget: &mut Budget,
) -> Result<()> {
    let need = m - clique.len();
    if need == 0 {
        *total += 1u32;
        return Ok(());
    }
    if candidates.len() < need {
        return Ok(());
    }
    if need == 1 {
        *total += candidates.len();
        return Ok(());
    }
    for u in candidates.iter() {
        budget.charge(candidates.len() as u64)?;
        let later = candidates.above(u);
        let next: ElementSet = later.iter().filter(|&v| h.joins(clique, u, v)).collect();
        count_rec(h, clique.with(u), next, m, total, budget)?;
    }
    Ok(())
}

/// `ω(H)` and a lexicographically least maximum clique. Vertex sets smaller
/// than `k` count as cliques, so an edgeless graph has `ω = min(n, k - 1)`.
pub fn clique_number(h: &Hypergraph, budget: &mut Budget) -> Result<(usize, ElementSet)> {
    let mut best = ElementSet::EMPTY;
    max_rec(h, ElementSet::EMPTY, h.vertices(), &mut best, budget)?;
    Ok((best.len(), best))
}

fn max_rec(
    h: &Hypergraph,
    clique: ElementSet,
    candidates: ElementSet,
    best: &mut ElementSet,
    budget: &mut Budget,
) -> Result<()> {
    if clique.len() > best.len() {
        *best = clique;
    }
    for u in candidates.iter() {
        let later = candidates.above(u);
        if clique.len() + 1 + later.len() <= best.len() {
            return Ok(());
        }
        budget.charge(later.len() as u64 + 1)?;
        let next: ElementSet = later.iter().filter(|&v| h.joins(clique, u, v)).collect();
        max_rec(h, clique.with(u), next, best, budget)?;
    }
    Ok(())
}

/// Pairwise-disjoint missing edges every transversal of which is a clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingTuple {
    pub tuples: Vec<ElementSet>,
}

impl MissingTuple {
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        let mut used = ElementSet::EMPTY;
        for t in &self.tuples {
            if t.len() != h.uniformity || h.has_edge(*t) {
                return Err(Error::WitnessInvalid(format!("{t} is not a missing edge")));
            }
            if t.intersects(used) {
                return Err(Error::WitnessInvalid(format!(
                    "{t} overlaps an earlier tuple"
                )));
            }
            used = used.union(*t);
        }
        let transversals = self.tuples.iter().fold(vec![ElementSet::EMPTY], |acc, t| {
            acc.iter()
                .flat_map(|base| t.iter().map(move |v| base.with(v)))
                .collect()
        });
        match transversals.into_iter().find(|s| !h.is_clique(*s)) {
            Some(bad) => Err(Error::WitnessInvalid(format!(
                "transversal {bad} is not a clique"
            ))),
            None => Ok(()),
        }
    }
}

/// The lexicographically least complete `m`-tuple of missing edges, if any.
pub fn find_complete_missing_tuple(
    h: &Hypergraph,
    m: usize,
    budget: &mut Budget,
) -> Result<Option<MissingTuple>> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let missing = h.missing_edges();
    budget.charge(missing.len() as u64)?;
    let mut chosen = Vec::with_capacity(m);
    let found = missing_rec(
        h,
        &missing,
        0,
        m,
        ElementSet::EMPTY,
        &[ElementSet::EMPTY],
        &mut chosen,
        budget,
    )?;
    if !found {
        return Ok(None);
    }
    let tuple = MissingTuple { tuples: chosen };
    tuple.validate(h)?;
    Ok(Some(tuple))
}

#[allow(clippy::too_many_arguments)]
fn missing_rec(
    h: &Hypergraph,
    missing: &[ElementSet],
    from: usize,
    m: usize,
    used: ElementSet,
    transversals: &[ElementSet],
    chosen: &mut Vec<ElementSet>,
    budget: &mut Budget,
) -> Result<bool> {
    if chosen.len() == m {
        return Ok(true);
    }
    let need = m - chosen.len();
    for (i, &tau) in missing.iter().enumerate().skip(from) {
        if missing.len() - i < need {
            break;
        }
        if tau.intersects(used) {
            continue;
        }
        budget.charge(transversals.len() as u64 * tau.len() as u64)?;
        let mut grown = Vec::with_capacity(transversals.len() * tau.len());
        let mut ok = true;
        'outer: for &base in transversals {
            for t in tau.iter() {
                if !h.extends(base, t) {
                    ok = false;
                    break 'outer;
                }
                grown.push(base.with(t));
            }
        }
        if !ok {
            continue;
        }
        chosen.push(tau);
        if missing_rec(
            h,
            missing,
            i + 1,
            m,
            used.union(tau),
            &grown,
            chosen,
            budget,
        )? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// The `k`-uniform hypergraph on the members of `family` whose edges are the
/// intersecting `k`-tuples.
pub fn intersection_hypergraph(
    space: &ConvexitySpace,
    family: &[ElementSet],
    k: usize,
    budget: &mut Budget,
) -> Result<Hypergraph> {
    space.check_convex(family)?;
    if k < 2 || k > family.len() {
        return Err(Error::InvalidArgument(format!(
            "uniformity {k} must lie in 2..={}",
            family.len()
        )));
    }
    if family.len() > ElementSet::MAX_GROUND {
        return Err(Error::GroundTooLarge(family.len()));
    }
    let mut edges = Vec::new();
    tuples_rec(
        family,
        0,
        k,
        space.ground(),
        ElementSet::EMPTY,
        &mut edges,
        budget,
    )?;
    Hypergraph::new(family.len(), k, edges)
}

fn tuples_rec(
    family: &[ElementSet],
    from: usize,
    k: usize,
    meet: ElementSet,
    picked: ElementSet,
    out: &mut Vec<ElementSet>,
    budget: &mut Budget,
) -> Result<()> {
    if picked.len() == k {
        out.push(picked);
        return Ok(());
    }
    for i in from..family.len() {
        budget.tick()?;
        let next = meet.intersection(family[i]);
        if !next.is_empty() {
            tuples_rec(family, i + 1, k, next, picked.with(i), out, budget)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::interval;

    fn s(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    fn graph(n: usize, edges: &[[usize; 2]]) -> Hypergraph {
        Hypergraph::new(n, 2, edges.iter().map(|e| s(e)).collect()).unwrap()
    }

    fn complete(n: usize, k: usize) -> Hypergraph {
        Hypergraph::new(n, k, ElementSet::full(n).subsets_of_size(k).collect()).unwrap()
    }

    #[test]
    fn k4_minus_edge() {
        let h = graph(4, &[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]);
        let mut b = Budget::default();
        assert_eq!(clique_count(&h, 3, &mut b).unwrap(), BigUint::from(2u32));
        assert_eq!(clique_count(&h, 2, &mut b).unwrap(), BigUint::from(5u32));
        assert_eq!(clique_number(&h, &mut b).unwrap(), (3, s(&[0, 1, 2])));
    }

    #[test]
    fn complete_three_uniform() {
        let h = complete(5, 3);
        let mut b = Budget::default();
        assert_eq!(clique_count(&h, 4, &mut b).unwrap(), BigUint::from(5u32));
        assert_eq!(clique_number(&h, &mut b).unwrap().0, 5);
        assert_eq!(find_complete_missing_tuple(&h, 1, &mut b).unwrap(), None);
    }

    #[test]
    fn edgeless_omega_is_vacuous() {
        let h = Hypergraph::new(6, 2, vec![]).unwrap();
        let mut b = Budget::default();
        assert_eq!(clique_number(&h, &mut b).unwrap().0, 1);
        let h3 = Hypergraph::new(6, 3, vec![]).unwrap();
        assert_eq!(clique_number(&h3, &mut b).unwrap().0, 2);
    }

    #[test]
    fn missing_tuple_examples() {
        let mut b = Budget::default();
        let h = graph(4, &[[0, 2], [0, 3], [1, 2], [1, 3]]);
        let t = find_complete_missing_tuple(&h, 2, &mut b).unwrap().unwrap();
        assert_eq!(t.tuples, vec![s(&[0, 1]), s(&[2, 3])]);

        let path = graph(3, &[[0, 1], [1, 2]]);
        assert_eq!(find_complete_missing_tuple(&path, 2, &mut b).unwrap(), None);
        let single = find_complete_missing_tuple(&path, 1, &mut b)
            .unwrap()
            .unwrap();
        assert_eq!(single.tuples, vec![s(&[0, 2])]);
    }

    #[test]
    fn interval_family_hypergraph() {
        let space = interval(7).unwrap();
        let family = [s(&[0, 1]), s(&[1, 2]), s(&[3, 4])];
        let mut b = Budget::default();
        let h = intersection_hypergraph(&space, &family, 2, &mut b).unwrap();
        assert_eq!(h.edges(), &[s(&[0, 1])]);
        let whole = intersection_hypergraph(&space, &family, 3, &mut b).unwrap();
        assert!(whole.edges().is_empty());
        assert!(matches!(
            intersection_hypergraph(&space, &[s(&[0, 2])], 2, &mut b),
            Err(Error::SetNotConvex(_))
        ));
    }

    #[test]
    fn common_point_gives_complete_hypergraph() {
        let space = interval(7).unwrap();
        let family = [
            s(&[0, 1, 2, 3]),
            s(&[2, 3]),
            s(&[3, 4, 5]),
            s(&[1, 2, 3, 4]),
        ];
        let mut b = Budget::default();
        let h = intersection_hypergraph(&space, &family, 3, &mut b).unwrap();
        assert_eq!(h, complete(4, 3));
    }

    #[test]
    fn rejects_malformed() {
        assert!(Hypergraph::new(3, 1, vec![]).is_err());
        assert!(Hypergraph::new(3, 2, vec![s(&[0, 1, 2])]).is_err());
        assert!(Hypergraph::new(3, 2, vec![s(&[0, 3])]).is_err());
        let h: Hypergraph = serde_json::from_str(r#"{"n":3,"k":2,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"n":3,"k":2,"edges":[[0,1],[1,2]]}"#
        );
    }
}
