//! Characterization engine for graphs without short cycles.
//!
//! On connected graphs with no `C4` and no `C5`, well-coveredness is decided
//! structurally (the graph is `C7`, `T10`, or in family F) and coincides with
//! well-dominatedness. With `C6` also excluded, `WCW(G)` and `WWD(G)` are the
//! nullspaces of explicit constraint systems built from `L(G)`, `L*(G)` and
//! `D(v)`.

use std::ops::ControlFlow;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::templates;
use crate::graph::Graph;
use crate::oracle::{for_each_maximal_independent_set, Budget};
use crate::set::VertexSet;
use crate::structure::{d_set, family_f_certificate, independence_number, l_set, lstar_set, FamilyFCertificate};
use crate::{Rational, RationalMatrix, SubspaceBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialForm {
    C7,
    T10,
    /// `K1`, `K2` or `K3`.
    CompleteSmall,
    General,
}

pub fn special_form(g: &Graph) -> SpecialForm {
    let iso = |t: &Graph| g.n() == t.n() && g.is_isomorphic_small(t).unwrap_or(false);
    if iso(&templates::c7()) {
        SpecialForm::C7
    } else if iso(&templates::t10()) {
        SpecialForm::T10
    } else if g.n() >= 1 && g.n() <= 3 && g.is_complete() {
        SpecialForm::CompleteSmall
    } else {
        SpecialForm::General
    }
}

/// Fails unless `g` is connected and has no cycle of any length in `excluded`.
pub fn check_family(g: &Graph, excluded: &[usize]) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::domain("the empty graph is not covered by the characterization"));
    }
    if !g.is_connected() {
        return Err(Error::domain("graph is disconnected"));
    }
    for &k in excluded {
        if g.contains_cycle_of_length(k)? {
            return Err(Error::domain(format!("graph contains a C{k}")));
        }
    }
    Ok(())
}

/// Which clause of the well-covered characterization applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WellCoveredClause {
    C7,
    T10,
    FamilyF(FamilyFCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WellCoveredVerdict {
    pub well_covered: bool,
    pub clause: Option<WellCoveredClause>,
}

/// Well-coveredness of a connected graph without `C4` and `C5`.
pub fn is_well_covered_c4c5(g: &Graph) -> Result<WellCoveredVerdict> {
    check_family(g, &[4, 5])?;
    let clause = match special_form(g) {
        SpecialForm::C7 => Some(WellCoveredClause::C7),
        SpecialForm::T10 => Some(WellCoveredClause::T10),
        _ => family_f_certificate(g).map(WellCoveredClause::FamilyF),
    };
    Ok(WellCoveredVerdict { well_covered: clause.is_some(), clause })
}

/// On connected graphs without `C4` and `C5`, well-dominated and well-covered coincide.
pub fn is_well_dominated_c4c5(g: &Graph) -> Result<bool> {
    Ok(is_well_covered_c4c5(g)?.well_covered)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharacterizationOutcome {
    pub applicable: bool,
    pub special_form: Option<SpecialForm>,
    pub basis: Option<SubspaceBasis>,
    pub notes: Vec<String>,
}

impl CharacterizationOutcome {
    pub fn inapplicable(reason: impl Into<String>) -> Self {
        CharacterizationOutcome {
            applicable: false,
            special_form: None,
            basis: None,
            notes: vec![reason.into()],
        }
    }

    fn applicable(form: SpecialForm, basis: SubspaceBasis, notes: Vec<String>) -> Self {
        CharacterizationOutcome { applicable: true, special_form: Some(form), basis: Some(basis), notes }
    }

    pub fn dim(&self) -> Option<usize> {
        self.basis.as_ref().map(|b| b.dim())
    }
}

fn unit_row(n: usize, v: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); n];
    row[v] = Rational::one();
    row
}

/// `e_v - χ(M)`.
fn balance_row(n: usize, v: usize, m: VertexSet) -> Vec<Rational> {
    let mut row = unit_row(n, v);
    for u in m {
        row[u] -= Rational::one();
    }
    row
}

/// Greedy maximal independent subset of `s`, ascending index order.
fn greedy_maximal_independent(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().fold(VertexSet::EMPTY, |acc, v| {
        if g.neighbors(v).is_disjoint(acc) { acc.with(v) } else { acc }
    })
}

/// Constraints shared by both weight spaces: equal weights inside each
/// component of `G[L]`, and `w(v) = w(M(v))` outside `L`, with `M(v)` the
/// greedy maximal independent subset of `D(v)`. Every other choice of `M(v)`
/// is checked to give a constraint already implied by the system.
fn covered_constraints(g: &Graph, l: VertexSet, notes: &mut Vec<String>) -> Result<RationalMatrix> {
    let n = g.n();
    let mut m = RationalMatrix::new(n);
    for comp in g.components_within(l) {
        let mut members = comp.iter();
        let first = members.next().expect("components are non-empty");
        for other in members {
            let mut row = unit_row(n, first);
            row[other] = -Rational::one();
            m.push_row(row);
        }
    }
    let mut alternatives = Vec::new();
    for v in g.vertices() - l {
        let d = d_set(g, v);
        m.push_row(balance_row(n, v, greedy_maximal_independent(g, d)));
        alternatives.push((v, d));
    }

    let span = SubspaceBasis::span(n, m.rows().to_vec())?;
    for (v, d) in alternatives {
        let mut choices = 0usize;
        let mut bad = None;
        for_each_maximal_independent_set(g, d, usize::MAX, |alt| {
            choices += 1;
            if span.contains_vector(&balance_row(n, v, alt)) {
                ControlFlow::Continue(())
            } else {
                bad = Some(alt);
                ControlFlow::Break(())
            }
        })?;
        if let Some(alt) = bad {
            return Err(Error::Inconsistent(format!(
                "choices of M({v}) inside D({v}) = {d} are not equivalent: {alt} yields an independent constraint"
            )));
        }
        if choices > 1 {
            notes.push(format!("M({v}) has {choices} equivalent choices in D({v}) = {d}"));
        }
    }
    Ok(m)
}

fn constants_outcome(g: &Graph, form: SpecialForm) -> CharacterizationOutcome {
    let note = match form {
        SpecialForm::C7 | SpecialForm::T10 => "special form: only constant weights qualify",
        _ => "complete graph on at most 3 vertices: only constant weights qualify",
    };
    CharacterizationOutcome::applicable(form, SubspaceBasis::constants(g.n()), vec![note.to_string()])
}

/// `WCW(G)` for a connected graph without `C4`, `C5`, `C6`.
pub fn wcw_basis_c4c5c6(g: &Graph) -> Result<CharacterizationOutcome> {
    check_family(g, &[4, 5, 6])?;
    let form = special_form(g);
    if form != SpecialForm::General {
        return Ok(constants_outcome(g, form));
    }
    let mut notes = Vec::new();
    let m = covered_constraints(g, l_set(g), &mut notes)?;
    Ok(CharacterizationOutcome::applicable(form, m.nullspace(), notes))
}

/// `WWD(G)` for a connected graph without `C4`, `C5`, `C6`: the `WCW`
/// constraints plus `w(v) = 0` on `L(G) \ L*(G)`.
pub fn wwd_basis_c4c5c6(g: &Graph, budget: &Budget) -> Result<CharacterizationOutcome> {
    check_family(g, &[4, 5, 6])?;
    let form = special_form(g);
    if form != SpecialForm::General {
        return Ok(constants_outcome(g, form));
    }
    let mut notes = Vec::new();
    let l = l_set(g);
    let lstar = lstar_set(g, budget)?;
    let mut m = covered_constraints(g, l, &mut notes)?;
    for v in l - lstar {
        m.push_row(unit_row(g.n(), v));
        notes.push(format!("w({v}) = 0 since {v} is in L \\ L*"));
    }
    Ok(CharacterizationOutcome::applicable(form, m.nullspace(), notes))
}

/// Dimension identities relating the weight spaces to `L`, `L*` and `α(G[L])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub special_form: SpecialForm,
    pub lstar_size: usize,
    /// Number of connected components of `G[L*]`.
    pub lstar_components: usize,
    pub alpha_of_l: usize,
    pub wwd_dim: usize,
    pub wcw_dim: usize,
    /// `dim WWD = |L*|`.
    pub wwd_dim_equals_lstar: bool,
    /// `dim WWD` equals the number of components of `G[L*]`.
    pub wwd_dim_equals_lstar_components: bool,
    /// `dim WCW = α(G[L])`.
    pub wcw_dim_equals_alpha: bool,
    /// `dim WWD <= dim WCW`.
    pub dims_ordered: bool,
    pub diagnostics: Vec<String>,
}

impl DimensionReport {
    /// The identities are only claimed for graphs outside the special forms.
    pub fn is_flagged(&self) -> bool {
        self.special_form != SpecialForm::General
    }
}

pub fn dim_checks(g: &Graph, budget: &Budget) -> Result<DimensionReport> {
    let wcw = wcw_basis_c4c5c6(g)?;
    let wwd = wwd_basis_c4c5c6(g, budget)?;
    let form = wwd.special_form.expect("applicable outcome");
    let l = l_set(g);
    let lstar = lstar_set(g, budget)?;
    let (gl, _) = g.induced_subgraph(l);
    let alpha_of_l = independence_number(&gl, budget)?;
    let wwd_dim = wwd.dim().expect("applicable outcome");
    let wcw_dim = wcw.dim().expect("applicable outcome");
    let lstar_components = g.components_within(lstar).len();

    let mut report = DimensionReport {
        special_form: form,
        lstar_size: lstar.len(),
        lstar_components,
        alpha_of_l,
        wwd_dim,
        wcw_dim,
        wwd_dim_equals_lstar: wwd_dim == lstar.len(),
        wwd_dim_equals_lstar_components: wwd_dim == lstar_components,
        wcw_dim_equals_alpha: wcw_dim == alpha_of_l,
        dims_ordered: wwd_dim <= wcw_dim,
        diagnostics: Vec::new(),
    };
    if report.is_flagged() {
        report.diagnostics.push(format!(
            "special form {form:?}: constant weights only, dimension identities not claimed"
        ));
    }
    if !report.wwd_dim_equals_lstar {
        report
            .diagnostics
            .push(format!("dim WWD = {wwd_dim} but |L*| = {}", lstar.len()));
    }
    if !report.wcw_dim_equals_alpha {
        report
            .diagnostics
            .push(format!("dim WCW = {wcw_dim} but α(G[L]) = {alpha_of_l}"));
    }
    if !report.dims_ordered {
        report.diagnostics.push(format!("dim WWD = {wwd_dim} exceeds dim WCW = {wcw_dim}"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::templates;
    use crate::oracle::{wcw_oracle, wwd_oracle};

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn family_checks() {
        assert!(matches!(check_family(&Graph::cycle(4), &[4, 5]), Err(Error::Domain(m)) if m.contains("C4")));
        assert!(matches!(check_family(&Graph::empty(2).unwrap(), &[4]), Err(Error::Domain(m)) if m.contains("disconnected")));
        assert!(is_well_covered_c4c5(&Graph::complete_bipartite(3, 3)).is_err());
    }

    #[test]
    fn well_covered_examples() {
        let c7 = is_well_covered_c4c5(&templates::c7()).unwrap();
        assert_eq!(c7.clause, Some(WellCoveredClause::C7));
        let t10 = is_well_covered_c4c5(&templates::t10()).unwrap();
        assert_eq!(t10.clause, Some(WellCoveredClause::T10));
        assert!(matches!(
            is_well_covered_c4c5(&Graph::complete(2)).unwrap().clause,
            Some(WellCoveredClause::FamilyF(ref c)) if c.centers.len() == 1
        ));
        // Every maximal independent set of P4 has size 2.
        assert!(is_well_covered_c4c5(&Graph::path(4)).unwrap().well_covered);
        assert!(!is_well_covered_c4c5(&Graph::path(5)).unwrap().well_covered);
        assert!(!is_well_dominated_c4c5(&Graph::star(3)).unwrap());
    }

    #[test]
    fn special_forms() {
        assert_eq!(special_form(&Graph::empty(1).unwrap()), SpecialForm::CompleteSmall);
        assert_eq!(special_form(&Graph::complete(3)), SpecialForm::CompleteSmall);
        assert_eq!(special_form(&Graph::complete(4)), SpecialForm::General);
        assert_eq!(special_form(&templates::t10().relabel(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0])), SpecialForm::T10);
    }

    #[test]
    fn wcw_examples() {
        let c7 = wcw_basis_c4c5c6(&templates::c7()).unwrap();
        assert_eq!(c7.basis.unwrap(), SubspaceBasis::constants(7));
        let star = wcw_basis_c4c5c6(&Graph::star(3)).unwrap().basis.unwrap();
        assert_eq!(star.dim(), 3);
        assert_eq!(star, wcw_oracle::<Rational>(&Graph::star(3), &b()).unwrap());
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(wcw_basis_c4c5c6(&k1).unwrap().dim(), Some(1));
        assert_eq!(wcw_oracle::<Rational>(&k1, &b()).unwrap().dim(), 1);
    }

    #[test]
    fn wwd_examples() {
        let k3 = wwd_basis_c4c5c6(&Graph::complete(3), &b()).unwrap();
        assert_eq!(k3.basis.unwrap(), SubspaceBasis::constants(3));
        let bull = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap();
        let wwd = wwd_basis_c4c5c6(&bull, &b()).unwrap().basis.unwrap();
        assert_eq!(wwd, wwd_oracle::<Rational>(&bull, &b()).unwrap());
        assert!(wwd.basis().iter().all(|v| v[0].is_zero()));
        let wcw = wcw_basis_c4c5c6(&bull).unwrap().basis.unwrap();
        assert!(wcw.contains(&wwd).unwrap() && !wcw.equals(&wwd).unwrap());
    }

    #[test]
    fn dims_on_trees_and_net() {
        let p4 = dim_checks(&Graph::path(4), &b()).unwrap();
        assert_eq!((p4.lstar_size, p4.wwd_dim), (2, 2));
        let net = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        let r = dim_checks(&net, &b()).unwrap();
        assert_eq!((r.lstar_size, r.wwd_dim, r.alpha_of_l), (3, 3, 3));
        let c7 = dim_checks(&templates::c7(), &b()).unwrap();
        assert!(c7.is_flagged());
        assert_eq!((c7.lstar_size, c7.wwd_dim), (0, 1));
    }

    #[test]
    fn dims_on_pendant_triangle() {
        // Triangle 0-1-2 with pendant 3: both degree-2 triangle vertices are
        // in L*, yet they share one free weight.
        let paw = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let r = dim_checks(&paw, &b()).unwrap();
        assert_eq!(r.wwd_dim, wwd_oracle::<Rational>(&paw, &b()).unwrap().dim());
        assert_eq!((r.lstar_size, r.lstar_components, r.wwd_dim), (3, 2, 2));
        assert!(!r.wwd_dim_equals_lstar);
        assert!(r.wwd_dim_equals_lstar_components && r.wcw_dim_equals_alpha);
    }
}
