//! Brute-force ground truth: exhaustive enumeration of maximal independent
//! sets and minimal dominating sets, and everything derived from them.

use std::ops::ControlFlow;

use num_traits::Num;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{indicator, ExactField, Matrix, Subspace};
use crate::set::VertexSet;

/// Environment variable overriding the vertex limits of [`Budget`].
pub const BUDGET_ENV: &str = "WELLDOM_BUDGET";

/// Enumeration limits. Exceeding any of them is reported as
/// [`Error::Resource`]; families are never silently truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Largest graph for maximal independent set enumeration.
    pub max_independent_vertices: usize,
    /// Largest graph for minimal dominating set enumeration.
    pub max_dominating_vertices: usize,
    /// Largest family size either enumerator may produce.
    pub max_sets: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_independent_vertices: 24,
            max_dominating_vertices: 20,
            max_sets: 1_000_000,
        }
    }
}

impl Budget {
    /// Both vertex limits set to `n`.
    pub fn with_vertex_limit(n: usize) -> Self {
        Budget {
            max_independent_vertices: n,
            max_dominating_vertices: n,
            ..Budget::default()
        }
    }

    /// Flag value, then `WELLDOM_BUDGET`, then the defaults.
    pub fn resolve(flag: Option<usize>) -> Result<Self> {
        if let Some(n) = flag {
            return Ok(Budget::with_vertex_limit(n));
        }
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => raw
                .trim()
                .parse()
                .map(Budget::with_vertex_limit)
                .map_err(|_| Error::parse(BUDGET_ENV, format!("`{raw}` is not a vertex count"))),
            Err(_) => Ok(Budget::default()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    MaximalIndependent,
    MinimalDominating,
}

/// A complete family of vertex sets in ascending bitmask order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetFamily {
    pub kind: FamilyKind,
    pub sets: Vec<VertexSet>,
}

impl SetFamily {
    fn new(kind: FamilyKind, mut sets: Vec<VertexSet>) -> Self {
        sets.sort_unstable();
        sets.dedup();
        SetFamily { kind, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    pub fn min_size(&self) -> Option<usize> {
        self.sets.iter().map(|s| s.len()).min()
    }

    pub fn max_size(&self) -> Option<usize> {
        self.sets.iter().map(|s| s.len()).max()
    }
}

/// Visits every maximal independent set of the subgraph induced by `within`
/// (pivoting Bron–Kerbosch on the complement). Returns `Ok(false)` if the
/// visitor stopped early.
pub fn for_each_maximal_independent_set<F>(
    g: &Graph,
    within: VertexSet,
    max_sets: usize,
    mut visit: F,
) -> Result<bool>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    let mut seen = 0usize;
    let flow = independent_rec(g, VertexSet::EMPTY, within, VertexSet::EMPTY, &mut |s| {
        seen += 1;
        if seen > max_sets {
            return ControlFlow::Break(Err(Error::resource(
                "maximal independent sets enumerated",
                max_sets,
            )));
        }
        visit(s).map_break(Ok)
    });
    match flow {
        ControlFlow::Continue(()) => Ok(true),
        ControlFlow::Break(Ok(())) => Ok(false),
        ControlFlow::Break(Err(e)) => Err(e),
    }
}

fn independent_rec<B>(
    g: &Graph,
    chosen: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    visit: &mut dyn FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if candidates.is_empty() {
        if excluded.is_empty() {
            return visit(chosen);
        }
        return ControlFlow::Continue(());
    }
    let pivot = (candidates | excluded)
        .iter()
        .min_by_key(|&u| (candidates & g.closed_neighbors(u)).len())
        .expect("non-empty");
    for v in candidates & g.closed_neighbors(pivot) {
        let blocked = g.closed_neighbors(v);
        independent_rec(g, chosen.with(v), candidates - blocked, excluded - blocked, visit)?;
        candidates.remove(v);
        excluded.insert(v);
    }
    ControlFlow::Continue(())
}

pub fn enumerate_maximal_independent_sets(g: &Graph, budget: &Budget) -> Result<SetFamily> {
    if g.n() > budget.max_independent_vertices {
        return Err(Error::resource(
            format!("maximal independent set enumeration on {} vertices", g.n()),
            budget.max_independent_vertices,
        ));
    }
    let mut sets = Vec::new();
    for_each_maximal_independent_set(g, g.vertices(), budget.max_sets, |s| {
        sets.push(s);
        ControlFlow::Continue(())
    })?;
    Ok(SetFamily::new(FamilyKind::MaximalIndependent, sets))
}

/// Whether every member of `s` has a private neighbor, i.e. some vertex of
/// its closed neighborhood that no other member dominates.
pub fn every_member_has_private_neighbor(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|u| {
        let others = g.closed_neighbors_of_set(s.without(u));
        !(g.closed_neighbors(u) - others).is_empty()
    })
}

pub fn is_minimal_dominating(g: &Graph, s: VertexSet) -> bool {
    g.is_dominating(s) && every_member_has_private_neighbor(g, s)
}

pub fn enumerate_minimal_dominating_sets(g: &Graph, budget: &Budget) -> Result<SetFamily> {
    if g.n() > budget.max_dominating_vertices {
        return Err(Error::resource(
            format!("minimal dominating set enumeration on {} vertices", g.n()),
            budget.max_dominating_vertices,
        ));
    }
    let mut sets = Vec::new();
    dominating_rec(g, VertexSet::EMPTY, VertexSet::EMPTY, budget.max_sets, &mut sets)?;
    sets.retain(|&s| every_member_has_private_neighbor(g, s));
    Ok(SetFamily::new(FamilyKind::MinimalDominating, sets))
}

// Branch on which vertex covers the lowest uncovered vertex. Candidates tried
// earlier are forbidden in later branches, so each set is reached once.
// Private neighbors only disappear as the set grows, so a member without one
// kills the branch.
fn dominating_rec(
    g: &Graph,
    chosen: VertexSet,
    forbidden: VertexSet,
    max_sets: usize,
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    let uncovered = g.vertices() - g.closed_neighbors_of_set(chosen);
    let Some(u) = uncovered.first() else {
        if out.len() == max_sets {
            return Err(Error::resource("minimal dominating sets enumerated", max_sets));
        }
        out.push(chosen);
        return Ok(());
    };
    let mut forbidden = forbidden;
    for c in g.closed_neighbors(u) - forbidden {
        let next = chosen.with(c);
        if every_member_has_private_neighbor(g, next) {
            dominating_rec(g, next, forbidden, max_sets, out)?;
        }
        forbidden.insert(c);
    }
    Ok(())
}

/// `(γ, Γ, i, α)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DominationNumbers {
    /// Minimum size of a dominating set.
    pub gamma: usize,
    /// Maximum size of a minimal dominating set.
    pub upper_gamma: usize,
    /// Minimum size of a maximal independent set.
    pub independent_domination: usize,
    /// Maximum size of an independent set.
    pub alpha: usize,
}

impl DominationNumbers {
    pub fn from_families(independent: &SetFamily, dominating: &SetFamily) -> Self {
        DominationNumbers {
            gamma: dominating.min_size().expect("non-empty family"),
            upper_gamma: dominating.max_size().expect("non-empty family"),
            independent_domination: independent.min_size().expect("non-empty family"),
            alpha: independent.max_size().expect("non-empty family"),
        }
    }

    pub fn chain_holds(&self) -> bool {
        self.gamma <= self.independent_domination
            && self.independent_domination <= self.alpha
            && self.alpha <= self.upper_gamma
    }

    pub fn well_covered(&self) -> bool {
        self.independent_domination == self.alpha
    }

    pub fn well_dominated(&self) -> bool {
        self.gamma == self.upper_gamma
    }
}

pub fn domination_numbers(g: &Graph, budget: &Budget) -> Result<DominationNumbers> {
    let independent = enumerate_maximal_independent_sets(g, budget)?;
    let dominating = enumerate_minimal_dominating_sets(g, budget)?;
    Ok(DominationNumbers::from_families(&independent, &dominating))
}

pub fn is_well_covered_oracle(g: &Graph, budget: &Budget) -> Result<bool> {
    let family = enumerate_maximal_independent_sets(g, budget)?;
    Ok(family.min_size() == family.max_size())
}

pub fn is_well_dominated_oracle(g: &Graph, budget: &Budget) -> Result<bool> {
    let family = enumerate_minimal_dominating_sets(g, budget)?;
    Ok(family.min_size() == family.max_size())
}

/// Extreme weights over the two enumerated families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalWeights<T> {
    /// Minimum weight of a minimal dominating set.
    pub min_dominating: T,
    /// Minimum weight of a maximal independent set.
    pub min_independent: T,
    /// Maximum weight of a maximal independent set.
    pub max_independent: T,
    /// Maximum weight of a minimal dominating set.
    pub max_dominating: T,
}

impl<T: PartialOrd> ExtremalWeights<T> {
    pub fn chain_holds(&self) -> bool {
        self.min_dominating <= self.min_independent
            && self.min_independent <= self.max_independent
            && self.max_independent <= self.max_dominating
    }
}

fn weight_range<T: Clone + Num + PartialOrd>(w: &[T], family: &SetFamily) -> (T, T) {
    let mut weights = family
        .sets
        .iter()
        .map(|s| s.iter().fold(T::zero(), |acc, v| acc + w[v].clone()));
    let first = weights.next().expect("families are never empty");
    weights.fold((first.clone(), first), |(lo, hi), x| {
        let lo = if x < lo { x.clone() } else { lo };
        let hi = if x > hi { x } else { hi };
        (lo, hi)
    })
}

pub fn extremal_weights_of<T: Clone + Num + PartialOrd>(
    w: &[T],
    independent: &SetFamily,
    dominating: &SetFamily,
) -> ExtremalWeights<T> {
    let (min_independent, max_independent) = weight_range(w, independent);
    let (min_dominating, max_dominating) = weight_range(w, dominating);
    ExtremalWeights { min_dominating, min_independent, max_independent, max_dominating }
}

pub fn extremal_weights<T: Clone + Num + PartialOrd>(
    g: &Graph,
    w: &[T],
    budget: &Budget,
) -> Result<ExtremalWeights<T>> {
    if w.len() != g.n() {
        return Err(Error::domain(format!(
            "weight vector has length {}, graph has {} vertices",
            w.len(),
            g.n()
        )));
    }
    let independent = enumerate_maximal_independent_sets(g, budget)?;
    let dominating = enumerate_minimal_dominating_sets(g, budget)?;
    Ok(extremal_weights_of(w, &independent, &dominating))
}

/// Weight functions under which every set of `family` has the same weight.
pub fn weight_space_from_family<T: ExactField>(family: &SetFamily, n: usize) -> Result<Subspace<T>> {
    let (first, rest) = family
        .sets
        .split_first()
        .ok_or_else(|| Error::domain("weight space of an empty family is undefined"))?;
    let base: Vec<T> = indicator(*first, n);
    let mut constraints = Matrix::new(n);
    for s in rest {
        let row = indicator::<T>(*s, n)
            .into_iter()
            .zip(&base)
            .map(|(a, b)| a - b.clone())
            .collect();
        constraints.push_row(row);
    }
    Ok(constraints.nullspace())
}

/// Weight space over maximal independent sets.
pub fn wcw_oracle<T: ExactField>(g: &Graph, budget: &Budget) -> Result<Subspace<T>> {
    weight_space_from_family(&enumerate_maximal_independent_sets(g, budget)?, g.n())
}

/// Weight space over minimal dominating sets.
pub fn wwd_oracle<T: ExactField>(g: &Graph, budget: &Budget) -> Result<Subspace<T>> {
    weight_space_from_family(&enumerate_minimal_dominating_sets(g, budget)?, g.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn single_vertex_and_edge() {
        let b = Budget::default();
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(enumerate_maximal_independent_sets(&k1, &b).unwrap().sets, vec![set(&[0])]);
        let k2 = Graph::complete(2);
        assert_eq!(
            enumerate_minimal_dominating_sets(&k2, &b).unwrap().sets,
            vec![set(&[0]), set(&[1])]
        );
        assert!(is_well_covered_oracle(&k1, &b).unwrap());
        assert!(is_well_dominated_oracle(&k1, &b).unwrap());
    }

    #[test]
    fn empty_graph_families() {
        let b = Budget::default();
        let g = Graph::empty(0).unwrap();
        assert_eq!(enumerate_maximal_independent_sets(&g, &b).unwrap().sets, vec![VertexSet::EMPTY]);
        assert_eq!(enumerate_minimal_dominating_sets(&g, &b).unwrap().sets, vec![VertexSet::EMPTY]);
    }

    #[test]
    fn budgets_are_enforced() {
        let g = Graph::path(6);
        let tight = Budget::with_vertex_limit(5);
        assert!(matches!(enumerate_maximal_independent_sets(&g, &tight), Err(Error::Resource { .. })));
        assert!(matches!(enumerate_minimal_dominating_sets(&g, &tight), Err(Error::Resource { .. })));
        let few = Budget { max_sets: 2, ..Budget::default() };
        assert!(matches!(enumerate_maximal_independent_sets(&g, &few), Err(Error::Resource { .. })));
        assert!(matches!(enumerate_minimal_dominating_sets(&g, &few), Err(Error::Resource { .. })));
    }

    #[test]
    fn visitor_can_stop_early() {
        let g = Graph::cycle(7);
        let mut count = 0;
        let done = for_each_maximal_independent_set(&g, g.vertices(), 100, |_| {
            count += 1;
            if count == 2 { ControlFlow::Break(()) } else { ControlFlow::Continue(()) }
        })
        .unwrap();
        assert!(!done);
        assert_eq!(count, 2);
    }

    #[test]
    fn maximal_within_subset() {
        // P4 restricted to {0, 1, 3}: edge 0-1 plus isolated 3.
        let g = Graph::path(4);
        let mut found = Vec::new();
        for_each_maximal_independent_set(&g, set(&[0, 1, 3]), 100, |s| {
            found.push(s);
            ControlFlow::Continue(())
        })
        .unwrap();
        found.sort();
        assert_eq!(found, vec![set(&[0, 3]), set(&[1, 3])]);
    }

    #[test]
    fn weight_space_examples() {
        let fam = SetFamily::new(FamilyKind::MaximalIndependent, vec![set(&[0]), set(&[1])]);
        let ws: Subspace<Rational64> = weight_space_from_family(&fam, 2).unwrap();
        assert_eq!(ws, Subspace::constants(2));
        let single = SetFamily::new(FamilyKind::MaximalIndependent, vec![set(&[0])]);
        assert_eq!(weight_space_from_family::<Rational64>(&single, 3).unwrap().dim(), 3);
        let empty = SetFamily::new(FamilyKind::MaximalIndependent, vec![]);
        assert!(weight_space_from_family::<Rational64>(&empty, 3).is_err());
    }

    #[test]
    fn extremal_weight_length_mismatch() {
        let g = Graph::path(3);
        assert!(extremal_weights(&g, &[1i64, 2], &Budget::default()).is_err());
    }

    #[test]
    fn budget_resolution_prefers_flag() {
        assert_eq!(Budget::resolve(Some(7)).unwrap().max_dominating_vertices, 7);
    }
}
