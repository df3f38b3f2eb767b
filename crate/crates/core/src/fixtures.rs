//! Named example graphs with expected values, and a runner that checks them.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::Subspace;
use crate::oracle::{
    enumerate_maximal_independent_sets, enumerate_minimal_dominating_sets, is_minimal_dominating, weight_space_from_family, Budget, DominationNumbers,
};
use crate::set::VertexSet;
use crate::structure::{l_set, lstar_set};
use crate::weightspace::{is_well_covered_c4c5, wcw_basis_c4c5c6, wwd_basis_c4c5c6};
use crate::{Rational, SubspaceBasis};

/// Template graphs recognized by the characterizations.
pub mod templates {
    use crate::graph::Graph;

    pub fn c7() -> Graph {
        Graph::cycle(7)
    }

    /// Vertex order: L1 L2 L3 R1 R2 R3 M1 M2 M3 M4. Two paths L1-L2-L3 and
    /// R1-R2-R3, a middle path M1-M2-M3-M4, the triangle L1-R1-M1, and M4
    /// joined to both L3 and R3.
    pub fn t10() -> Graph {
        Graph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (0, 3),
                (0, 6),
                (6, 3),
                (3, 4),
                (4, 5),
                (6, 7),
                (7, 8),
                (8, 9),
                (2, 9),
                (9, 5),
            ],
        )
        .expect("valid template")
    }

    pub const T10_LABELS: [&str; 10] = ["L1", "L2", "L3", "R1", "R2", "R3", "M1", "M2", "M3", "M4"];
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Stated in the literature the tool implements.
    Published,
    /// Immediate from the construction of the graph.
    Construction,
    /// Computed once by exhaustive enumeration and frozen.
    Enumeration,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    EdgeCount(usize),
    CycleFree(Vec<usize>),
    ContainsCycle(usize),
    Gamma(usize),
    UpperGamma(usize),
    IndependentDomination(usize),
    Alpha(usize),
    WellCovered(bool),
    WellDominated(bool),
    /// Structural decision on connected graphs without C4 and C5.
    CharacterizedWellCovered(bool),
    /// Every maximal independent set has this size.
    UniformIndependentSize(usize),
    /// The given set is a minimal dominating set.
    MinimalDominating(VertexSet),
    LSet(VertexSet),
    LStarSet(VertexSet),
    WcwDim(usize),
    WwdDim(usize),
    /// The enumerated `WWD` equals the span of these integer vectors.
    WwdSpannedBy(Vec<Vec<i64>>),
    /// Constraint-built bases agree with the enumerated ones.
    CharacterizationMatchesOracle,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expectation {
    pub check: Check,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    #[serde(skip)]
    pub graph: Graph,
    pub labels: Vec<String>,
    pub expected: Vec<Expectation>,
}

impl Fixture {
    fn new(name: &'static str, description: &'static str, graph: Graph) -> Self {
        let labels = (0..graph.n()).map(|v| v.to_string()).collect();
        Fixture { name, description, graph, labels, expected: Vec::new() }
    }

    fn labelled(mut self, labels: &[&str]) -> Self {
        assert_eq!(labels.len(), self.graph.n());
        self.labels = labels.iter().map(|s| s.to_string()).collect();
        self
    }

    fn expect(mut self, provenance: Provenance, check: Check) -> Self {
        self.expected.push(Expectation { check, provenance });
        self
    }

    /// Index of the vertex labelled `label`.
    pub fn vertex(&self, label: &str) -> usize {
        self.labels
            .iter()
            .position(|l| l == label)
            .unwrap_or_else(|| panic!("fixture {} has no vertex {label}", self.name))
    }

    pub fn set(&self, labels: &[&str]) -> VertexSet {
        labels.iter().map(|l| self.vertex(l)).collect()
    }
}

/// Three disjoint 5-cycles `x`, `y`, `z` plus the triangle `x1 y1 z1`.
pub fn three_pentagons_with_triangle() -> (Graph, Vec<String>) {
    let labels: Vec<String> = ["x", "y", "z"]
        .iter()
        .flat_map(|p| (1..=5).map(move |i| format!("{p}{i}")))
        .collect();
    let mut edges = Vec::new();
    for c in 0..3 {
        for i in 0..5 {
            edges.push((5 * c + i, 5 * c + (i + 1) % 5));
        }
    }
    edges.extend([(0, 5), (5, 10), (10, 0)]);
    (Graph::from_edges(15, edges).expect("valid fixture"), labels)
}

/// Two edge-disjoint 6-cycles `v1..v6` and `v6..v11` sharing `v6`.
pub fn two_hexagons() -> (Graph, Vec<String>) {
    let labels = (1..=11).map(|i| format!("v{i}")).collect();
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 1)).collect();
    edges.push((5, 0));
    edges.extend((5..10).map(|i| (i, i + 1)));
    edges.push((10, 5));
    (Graph::from_edges(11, edges).expect("valid fixture"), labels)
}

pub fn builtin_fixtures() -> Vec<Fixture> {
    use Check::*;
    use Provenance::*;

    let set = |vs: &[usize]| vs.iter().collect::<VertexSet>();
    let mut out = Vec::new();

    out.push(
        Fixture::new("c7", "the 7-cycle", templates::c7())
            .expect(Construction, CycleFree(vec![4, 5, 6]))
            .expect(Published, Gamma(3))
            .expect(Published, UpperGamma(3))
            .expect(Enumeration, IndependentDomination(3))
            .expect(Construction, Alpha(3))
            .expect(Published, WellCovered(true))
            .expect(Published, WellDominated(true))
            .expect(Published, CharacterizedWellCovered(true))
            .expect(Published, WcwDim(1))
            .expect(Published, WwdDim(1))
            .expect(Published, CharacterizationMatchesOracle),
    );

    out.push(
        Fixture::new("t10", "the 10-vertex graph T10", templates::t10())
            .labelled(&templates::T10_LABELS)
            .expect(Construction, EdgeCount(12))
            .expect(Enumeration, CycleFree(vec![4, 5, 6]))
            .expect(Published, Gamma(4))
            .expect(Published, UpperGamma(4))
            .expect(Enumeration, IndependentDomination(4))
            .expect(Enumeration, Alpha(4))
            .expect(Published, WellCovered(true))
            .expect(Published, WellDominated(true))
            .expect(Published, CharacterizedWellCovered(true))
            .expect(Published, WcwDim(1))
            .expect(Published, WwdDim(1))
            .expect(Published, CharacterizationMatchesOracle),
    );

    out.push(
        Fixture::new("k33", "complete bipartite K3,3", Graph::complete_bipartite(3, 3))
            .labelled(&["a1", "a2", "a3", "b1", "b2", "b3"])
            .expect(Construction, ContainsCycle(4))
            .expect(Construction, CycleFree(vec![5]))
            .expect(Published, Gamma(2))
            .expect(Published, UpperGamma(3))
            .expect(Published, IndependentDomination(3))
            .expect(Published, Alpha(3))
            .expect(Published, UniformIndependentSize(3))
            .expect(Published, MinimalDominating(set(&[0, 3])))
            .expect(Published, WellCovered(true))
            .expect(Published, WellDominated(false))
            .expect(Enumeration, WcwDim(5))
            .expect(Enumeration, WwdDim(0)),
    );

    let (g, labels) = three_pentagons_with_triangle();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    let f = Fixture::new("c5x3-triangle", "three 5-cycles joined by a triangle", g).labelled(&labels);
    let witness = f.set(&["x1", "x2", "x5", "y3", "y4", "z3", "z4"]);
    out.push(
        f.expect(Construction, EdgeCount(18))
            .expect(Published, CycleFree(vec![4]))
            .expect(Construction, ContainsCycle(5))
            .expect(Published, UniformIndependentSize(6))
            .expect(Published, MinimalDominating(witness))
            .expect(Published, WellCovered(true))
            .expect(Published, WellDominated(false)),
    );

    let (g, labels) = two_hexagons();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    let f = Fixture::new("two-c6", "two 6-cycles sharing one vertex", g).labelled(&labels);
    // v1 v2 v3 v4 v5 v6 v7 v8 v9 v10 v11
    let left = vec![1, 1, 0, -1, -1, 0, 0, 0, 0, 0, 0];
    let right = vec![0, 0, 0, 0, 0, 0, 1, 1, 0, -1, -1];
    out.push(
        f.expect(Construction, EdgeCount(12))
            .expect(Published, CycleFree(vec![4, 5]))
            .expect(Construction, ContainsCycle(6))
            .expect(Published, LSet(VertexSet::EMPTY))
            .expect(Published, LStarSet(VertexSet::EMPTY))
            .expect(Published, WwdSpannedBy(vec![left, right]))
            .expect(Published, WwdDim(2)),
    );

    out.push(
        Fixture::new(
            "net",
            "triangle with one pendant vertex at each corner",
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).expect("valid"),
        )
        .expect(Construction, LSet(set(&[3, 4, 5])))
        .expect(Construction, LStarSet(set(&[3, 4, 5])))
        .expect(Enumeration, WcwDim(3))
        .expect(Enumeration, WwdDim(3))
        .expect(Enumeration, WellDominated(true))
        .expect(Published, CharacterizedWellCovered(true))
        .expect(Published, CharacterizationMatchesOracle),
    );

    out.push(
        Fixture::new(
            "paw",
            "triangle with a single pendant vertex",
            Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).expect("valid"),
        )
        .expect(Construction, LSet(set(&[1, 2, 3])))
        .expect(Construction, LStarSet(set(&[1, 2, 3])))
        .expect(Enumeration, WcwDim(2))
        .expect(Enumeration, WwdDim(2))
        .expect(Published, CharacterizationMatchesOracle),
    );

    out.push(
        Fixture::new(
            "bull",
            "triangle with pendants on two corners",
            Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).expect("valid"),
        )
        .expect(Construction, LSet(set(&[0, 3, 4])))
        .expect(Enumeration, LStarSet(set(&[3, 4])))
        .expect(Enumeration, WcwDim(3))
        .expect(Enumeration, WwdDim(2))
        .expect(Published, CharacterizationMatchesOracle),
    );

    out.push(
        Fixture::new("p3", "path on 3 vertices", Graph::path(3))
            .expect(Construction, LSet(set(&[0, 2])))
            .expect(Enumeration, WwdDim(2))
            .expect(Published, CharacterizationMatchesOracle),
    );
    out.push(
        Fixture::new("p4", "path on 4 vertices", Graph::path(4))
            .expect(Enumeration, WellCovered(true))
            .expect(Published, CharacterizedWellCovered(true))
            .expect(Construction, LStarSet(set(&[0, 3])))
            .expect(Enumeration, WwdDim(2))
            .expect(Published, CharacterizationMatchesOracle),
    );
    out.push(
        Fixture::new("p5", "path on 5 vertices", Graph::path(5))
            .expect(Enumeration, WellCovered(false))
            .expect(Published, CharacterizedWellCovered(false))
            .expect(Enumeration, WcwDim(2))
            .expect(Published, CharacterizationMatchesOracle),
    );
    out.push(
        Fixture::new("k13", "star with three leaves", Graph::star(3))
            .expect(Construction, WellCovered(false))
            .expect(Enumeration, WcwDim(3))
            .expect(Published, CharacterizationMatchesOracle),
    );
    out.push(
        Fixture::new("k1", "single vertex", Graph::empty(1).expect("valid"))
            .expect(Construction, WellCovered(true))
            .expect(Construction, WellDominated(true))
            .expect(Construction, WwdDim(1))
            .expect(Published, CharacterizationMatchesOracle),
    );
    out.push(
        Fixture::new("k2", "single edge", Graph::complete(2))
            .expect(Construction, MinimalDominating(set(&[0])))
            .expect(Construction, MinimalDominating(set(&[1])))
            .expect(Construction, Gamma(1))
            .expect(Construction, UpperGamma(1))
            .expect(Published, CharacterizationMatchesOracle),
    );
    out.push(
        Fixture::new("k3", "triangle", Graph::complete(3))
            .expect(Published, UpperGamma(1))
            .expect(Published, WwdDim(1))
            .expect(Published, CharacterizationMatchesOracle),
    );

    out
}

pub fn fixture(name: &str) -> Option<Fixture> {
    builtin_fixtures().into_iter().find(|f| f.name == name)
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub provenance: Provenance,
    pub passed: bool,
    pub detail: String,
}

fn outcome<T: PartialEq + std::fmt::Debug>(e: &Expectation, expected: T, actual: T) -> CheckOutcome {
    CheckOutcome {
        check: e.check.clone(),
        provenance: e.provenance,
        passed: expected == actual,
        detail: format!("expected {expected:?}, computed {actual:?}"),
    }
}

/// Evaluates every expectation of `fixture`.
pub fn run_fixture(fixture: &Fixture, budget: &Budget) -> Result<Vec<CheckOutcome>> {
    let g = &fixture.graph;
    let independent = enumerate_maximal_independent_sets(g, budget)?;
    let dominating = enumerate_minimal_dominating_sets(g, budget)?;
    let numbers = DominationNumbers::from_families(&independent, &dominating);
    let wcw: SubspaceBasis = weight_space_from_family(&independent, g.n())?;
    let wwd: SubspaceBasis = weight_space_from_family(&dominating, g.n())?;

    let mut out = Vec::new();
    for e in &fixture.expected {
        let o = match &e.check {
            Check::EdgeCount(m) => outcome(e, *m, g.edge_count()),
            Check::CycleFree(ks) => {
                let found: Vec<usize> = ks
                    .iter()
                    .copied()
                    .filter(|&k| g.contains_cycle_of_length(k).unwrap_or(true))
                    .collect();
                outcome(e, Vec::new(), found)
            }
            Check::ContainsCycle(k) => outcome(e, true, g.contains_cycle_of_length(*k)?),
            Check::Gamma(x) => outcome(e, *x, numbers.gamma),
            Check::UpperGamma(x) => outcome(e, *x, numbers.upper_gamma),
            Check::IndependentDomination(x) => outcome(e, *x, numbers.independent_domination),
            Check::Alpha(x) => outcome(e, *x, numbers.alpha),
            Check::WellCovered(b) => outcome(e, *b, numbers.well_covered()),
            Check::WellDominated(b) => outcome(e, *b, numbers.well_dominated()),
            Check::CharacterizedWellCovered(b) => outcome(e, *b, is_well_covered_c4c5(g)?.well_covered),
            Check::UniformIndependentSize(k) => {
                let mut sizes: Vec<usize> = independent.sets.iter().map(|s| s.len()).collect();
                sizes.sort_unstable();
                sizes.dedup();
                outcome(e, vec![*k], sizes)
            }
            Check::MinimalDominating(s) => {
                let ok = is_minimal_dominating(g, *s) && dominating.contains(*s);
                outcome(e, true, ok)
            }
            Check::LSet(s) => outcome(e, *s, l_set(g)),
            Check::LStarSet(s) => outcome(e, *s, lstar_set(g, budget)?),
            Check::WcwDim(d) => outcome(e, *d, wcw.dim()),
            Check::WwdDim(d) => outcome(e, *d, wwd.dim()),
            Check::WwdSpannedBy(vectors) => {
                let rows = vectors
                    .iter()
                    .map(|v| v.iter().map(|&x| Rational::from_integer(x.into())).collect())
                    .collect();
                let expected = Subspace::span(g.n(), rows)?;
                outcome(e, true, expected == wwd)
            }
            Check::CharacterizationMatchesOracle => {
                let c_wcw = wcw_basis_c4c5c6(g)?.basis;
                let c_wwd = wwd_basis_c4c5c6(g, budget)?.basis;
                outcome(e, (true, true), (c_wcw.as_ref() == Some(&wcw), c_wwd.as_ref() == Some(&wwd)))
            }
        };
        out.push(o);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t10_template_validates() {
        // The template must pass its own checks before anything relies on it.
        let t10 = fixture("t10").unwrap();
        for o in run_fixture(&t10, &Budget::default()).unwrap() {
            assert!(o.passed, "{:?}: {}", o.check, o.detail);
        }
    }

    #[test]
    fn every_builtin_fixture_passes() {
        for f in builtin_fixtures() {
            for o in run_fixture(&f, &Budget::default()).unwrap() {
                assert!(o.passed, "{} {:?}: {}", f.name, o.check, o.detail);
            }
        }
    }

    #[test]
    fn labels_resolve() {
        let f = fixture("c5x3-triangle").unwrap();
        assert_eq!(f.vertex("y1"), 5);
        assert_eq!(f.set(&["x1", "z5"]).to_vec(), vec![0, 14]);
    }
}
