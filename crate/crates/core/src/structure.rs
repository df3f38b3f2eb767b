//! Structural sets and predicates: simplicial vertices, family F
//! certificates, `L(G)`, `D(v)`, `L*(G)` and the independence number.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{for_each_maximal_independent_set, Budget};
use crate::set::VertexSet;

/// Vertices whose closed neighborhood is a clique. Isolated vertices count.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n())
        .filter(|&v| g.is_clique(g.closed_neighbors(v)))
        .collect()
}

/// Simplicial centers whose closed neighborhoods partition the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFCertificate {
    pub centers: Vec<usize>,
    pub cells: Vec<VertexSet>,
}

impl FamilyFCertificate {
    /// Checks every invariant against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let simplicial = simplicial_vertices(g);
        let mut covered = VertexSet::EMPTY;
        for (&x, &cell) in self.centers.iter().zip(&self.cells) {
            if !simplicial.contains(x) || cell != g.closed_neighbors(x) || !covered.is_disjoint(cell) {
                return false;
            }
            covered |= cell;
        }
        self.centers.len() == self.cells.len() && covered == g.vertices()
    }
}

/// Searches for a family F certificate by exact cover: the lowest uncovered
/// vertex is covered by a simplicial center tried in ascending order.
pub fn family_f_certificate(g: &Graph) -> Option<FamilyFCertificate> {
    let simplicial = simplicial_vertices(g);
    let mut centers = Vec::new();
    if cover_rec(g, simplicial, g.vertices(), &mut centers) {
        let cells = centers.iter().map(|&x| g.closed_neighbors(x)).collect();
        Some(FamilyFCertificate { centers, cells })
    } else {
        None
    }
}

fn cover_rec(g: &Graph, simplicial: VertexSet, uncovered: VertexSet, centers: &mut Vec<usize>) -> bool {
    let Some(u) = uncovered.first() else {
        return true;
    };
    for x in simplicial & g.closed_neighbors(u) {
        let cell = g.closed_neighbors(x);
        if !cell.is_subset(uncovered) {
            continue;
        }
        centers.push(x);
        if cover_rec(g, simplicial, uncovered - cell, centers) {
            return true;
        }
        centers.pop();
    }
    false
}

/// For a degree-2 vertex on a triangle, its two triangle partners.
pub fn triangle_partners(g: &Graph, v: usize) -> Option<(usize, usize)> {
    if g.degree(v) != 2 {
        return None;
    }
    let mut it = g.neighbors(v).iter();
    let (a, b) = (it.next()?, it.next()?);
    g.has_edge(a, b).then_some((a, b))
}

/// `L(G)`: vertices of degree 1, or of degree 2 lying on a triangle.
pub fn l_set(g: &Graph) -> VertexSet {
    (0..g.n())
        .filter(|&v| g.degree(v) == 1 || triangle_partners(g, v).is_some())
        .collect()
}

/// `D(v) = N(v) \ N(N_2(v))`.
pub fn d_set(g: &Graph, v: usize) -> VertexSet {
    let second = second_neighborhood(g, v);
    g.neighbors(v) - g.neighbors_of_set(second)
}

fn second_neighborhood(g: &Graph, v: usize) -> VertexSet {
    g.neighbors_of_set(g.neighbors(v)) - g.closed_neighbors(v)
}

/// Decides membership of a degree-2 triangle vertex in `L*(G)`: every maximal
/// independent set of `G - N_2[v]` must dominate `N(v1) ∩ N_2(v)` or
/// `N(v2) ∩ N_2(v)`. Returns `None` when the enumeration budget runs out.
fn triangle_vertex_in_lstar(g: &Graph, v: usize, (a, b): (usize, usize), max_sets: usize) -> Option<bool> {
    let second = second_neighborhood(g, v);
    let ball = second | g.closed_neighbors(v);
    let targets = (g.neighbors(a) & second, g.neighbors(b) & second);
    let mut holds = true;
    let finished = for_each_maximal_independent_set(g, g.vertices() - ball, max_sets, |s| {
        if g.dominates(s, targets.0) || g.dominates(s, targets.1) {
            ControlFlow::Continue(())
        } else {
            holds = false;
            ControlFlow::Break(())
        }
    });
    match finished {
        Ok(_) => Some(holds),
        Err(_) => None,
    }
}

/// `L*(G)`: degree-1 vertices plus the degree-2 triangle vertices passing the
/// domination test. At most `budget.max_sets` maximal independent sets are
/// visited per vertex.
pub fn lstar_set(g: &Graph, budget: &Budget) -> Result<VertexSet> {
    let mut out = VertexSet::EMPTY;
    for v in l_set(g) {
        let member = match triangle_partners(g, v) {
            None => true,
            Some(pair) => triangle_vertex_in_lstar(g, v, pair, budget.max_sets).ok_or(
                Error::LstarBudget { vertex: v, limit: budget.max_sets, partial: out },
            )?,
        };
        if member {
            out.insert(v);
        }
    }
    Ok(out)
}

/// `α(G)` by branch and bound.
pub fn independence_number(g: &Graph, budget: &Budget) -> Result<usize> {
    if g.n() > budget.max_independent_vertices {
        return Err(Error::resource(
            format!("independence number on {} vertices", g.n()),
            budget.max_independent_vertices,
        ));
    }
    let mut best = 0;
    alpha_rec(g, g.vertices(), 0, &mut best);
    Ok(best)
}

fn alpha_rec(g: &Graph, open: VertexSet, taken: usize, best: &mut usize) {
    if taken + open.len() <= *best {
        return;
    }
    if open.is_empty() {
        *best = taken;
        return;
    }
    let deg = |v: usize| (g.neighbors(v) & open).len();
    // A vertex of degree <= 1 is in some maximum independent set.
    if let Some(v) = open.iter().find(|&v| deg(v) <= 1) {
        return alpha_rec(g, open - g.closed_neighbors(v), taken + 1, best);
    }
    let v = open.iter().max_by_key(|&v| deg(v)).expect("non-empty");
    alpha_rec(g, open - g.closed_neighbors(v), taken + 1, best);
    alpha_rec(g, open.without(v), taken, best);
}

/// All structural sets of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub l: VertexSet,
    pub lstar: VertexSet,
    /// `D(v)` for every `v` outside `L(G)`.
    pub d: BTreeMap<usize, VertexSet>,
    /// Triangle partners of the degree-2 triangle vertices in `L(G)`.
    pub triangle_partners: BTreeMap<usize, (usize, usize)>,
}

pub fn structure_report(g: &Graph, budget: &Budget) -> Result<StructureReport> {
    let l = l_set(g);
    let lstar = lstar_set(g, budget)?;
    let d = (g.vertices() - l).iter().map(|v| (v, d_set(g, v))).collect();
    let triangle_partners = l
        .iter()
        .filter_map(|v| triangle_partners(g, v).map(|p| (v, p)))
        .collect();
    Ok(StructureReport { l, lstar, d, triangle_partners })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    /// Triangle 0-1-2 with pendant 3 on vertex 0.
    fn paw() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap()
    }

    fn bull() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn simplicial() {
        assert_eq!(simplicial_vertices(&Graph::path(3)), set(&[0, 2]));
        assert_eq!(simplicial_vertices(&Graph::cycle(7)), VertexSet::EMPTY);
        assert_eq!(simplicial_vertices(&Graph::complete(4)), VertexSet::full(4));
        assert_eq!(simplicial_vertices(&Graph::empty(2).unwrap()), VertexSet::full(2));
    }

    #[test]
    fn family_f() {
        let cert = family_f_certificate(&Graph::complete(2)).unwrap();
        assert_eq!(cert.centers.len(), 1);
        assert!(cert.is_valid_for(&Graph::complete(2)));
        assert!(family_f_certificate(&Graph::cycle(7)).is_none());
        assert!(family_f_certificate(&Graph::star(3)).is_none());
        let p4 = family_f_certificate(&Graph::path(4)).unwrap();
        assert_eq!(p4.centers, vec![0, 3]);
        // Isolated vertices form their own cell.
        let iso = family_f_certificate(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(iso.cells, vec![set(&[0]), set(&[1])]);
    }

    #[test]
    fn l_sets() {
        assert_eq!(l_set(&Graph::path(3)), set(&[0, 2]));
        assert_eq!(l_set(&paw()), set(&[1, 2, 3]));
        assert_eq!(l_set(&Graph::cycle(7)), VertexSet::EMPTY);
        assert_eq!(l_set(&Graph::empty(1).unwrap()), VertexSet::EMPTY);
    }

    #[test]
    fn d_sets() {
        assert_eq!(d_set(&Graph::star(3), 0), set(&[1, 2, 3]));
        assert_eq!(d_set(&Graph::path(4), 1), set(&[0]));
        for v in 0..7 {
            assert_eq!(d_set(&Graph::cycle(7), v), VertexSet::EMPTY);
        }
    }

    #[test]
    fn lstar_small() {
        let b = Budget::default();
        assert_eq!(lstar_set(&Graph::path(5), &b).unwrap(), set(&[0, 4]));
        // Both degree-2 triangle vertices of the paw pass vacuously.
        assert_eq!(lstar_set(&paw(), &b).unwrap(), set(&[1, 2, 3]));
        let net = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(lstar_set(&net, &b).unwrap(), set(&[3, 4, 5]));
        assert_eq!(l_set(&net), set(&[3, 4, 5]));
    }

    #[test]
    fn lstar_excludes_bridging_triangle_vertex() {
        // Vertex 0 sits on triangle 0-1-2 and 1, 2 each carry a pendant.
        // G - N_2[0] is empty, and the empty set dominates neither pendant.
        let g = bull();
        let b = Budget::default();
        assert!(l_set(&g).contains(0));
        assert!(!lstar_set(&g, &b).unwrap().contains(0));
    }

    #[test]
    fn lstar_budget_error_carries_partial() {
        let g = bull();
        let b = Budget { max_sets: 0, ..Budget::default() };
        match lstar_set(&g, &b) {
            Err(Error::LstarBudget { vertex: 0, partial, .. }) => assert!(partial.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn alpha() {
        let b = Budget::default();
        assert_eq!(independence_number(&Graph::cycle(7), &b).unwrap(), 3);
        assert_eq!(independence_number(&Graph::complete_bipartite(3, 3), &b).unwrap(), 3);
        assert_eq!(independence_number(&Graph::empty(0).unwrap(), &b).unwrap(), 0);
        assert_eq!(independence_number(&Graph::complete(5), &b).unwrap(), 1);
        assert!(independence_number(&Graph::path(30), &b).is_err());
    }
}
