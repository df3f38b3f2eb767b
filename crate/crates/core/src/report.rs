//! Full analysis of one graph, serialized as a stable JSON document.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{
    enumerate_maximal_independent_sets, enumerate_minimal_dominating_sets, weight_space_from_family, Budget,
    DominationNumbers,
};
use crate::set::VertexSet;
use crate::structure::{family_f_certificate, simplicial_vertices, structure_report, FamilyFCertificate, StructureReport};
use crate::weightspace::{
    check_family, dim_checks, is_well_covered_c4c5, special_form, wcw_basis_c4c5c6, wwd_basis_c4c5c6,
    CharacterizationOutcome, DimensionReport, SpecialForm, WellCoveredClause,
};
use crate::SubspaceBasis;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    pub budget: Budget,
    /// Skip the enumeration oracle entirely.
    pub skip_oracle: bool,
}

/// Headline answers: characterization when it applies, oracle otherwise.
#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub well_covered: Option<bool>,
    pub well_dominated: Option<bool>,
    pub wcw_dim: Option<usize>,
    pub wwd_dim: Option<usize>,
    pub source: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentCharacterization {
    pub vertices: VertexSet,
    pub special_form: SpecialForm,
    pub clause: Option<WellCoveredClause>,
    pub dims: Option<DimensionReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Characterization {
    /// Every component is free of `C4` and `C5`.
    pub c4c5_free: bool,
    /// Every component is free of `C4`, `C5` and `C6`.
    pub c4c5c6_free: bool,
    pub well_covered: Option<bool>,
    pub well_dominated: Option<bool>,
    pub components: Vec<ComponentCharacterization>,
    pub wcw: CharacterizationOutcome,
    pub wwd: CharacterizationOutcome,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSection {
    pub maximal_independent_sets: usize,
    pub minimal_dominating_sets: usize,
    pub numbers: DominationNumbers,
    pub well_covered: bool,
    pub well_dominated: bool,
    pub wcw: SubspaceBasis,
    pub wwd: SubspaceBasis,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CrossChecks {
    pub wwd_within_wcw: Option<bool>,
    pub well_covered_agrees: Option<bool>,
    pub well_dominated_agrees: Option<bool>,
    pub wcw_agrees: Option<bool>,
    pub wwd_agrees: Option<bool>,
}

impl CrossChecks {
    pub fn all_pass(&self) -> bool {
        [
            self.wwd_within_wcw,
            self.well_covered_agrees,
            self.well_dominated_agrees,
            self.wcw_agrees,
            self.wwd_agrees,
        ]
        .iter()
        .all(|c| c.unwrap_or(true))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub n: usize,
    pub edge_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
    pub components: Vec<VertexSet>,
    /// Presence of a cycle of each length 3 to 7.
    pub cycles: BTreeMap<usize, bool>,
    pub summary: Summary,
    pub structure: StructureReport,
    pub simplicial: VertexSet,
    pub family_f: Option<FamilyFCertificate>,
    pub characterization: Characterization,
    pub oracle: Option<OracleSection>,
    pub oracle_skipped: Option<String>,
    pub cross_checks: CrossChecks,
}

/// Result of a per-component characterization, combined as a direct sum.
fn characterize(g: &Graph, budget: &Budget) -> Result<Characterization> {
    let comps = g.components();
    let mut notes = Vec::new();
    let mut c45 = g.n() > 0;
    let mut c456 = g.n() > 0;
    let mut components = Vec::new();
    let mut wcw = Some(SubspaceBasis::zero(g.n()));
    let mut wwd = Some(SubspaceBasis::zero(g.n()));
    let mut well_covered = true;

    if g.n() == 0 {
        notes.push("empty graph".to_string());
    }
    for comp in &comps {
        let (h, _) = g.induced_subgraph(*comp);
        let coords = comp.to_vec();
        let mut entry = ComponentCharacterization {
            vertices: *comp,
            special_form: special_form(&h),
            clause: None,
            dims: None,
        };
        match check_family(&h, &[4, 5]) {
            Ok(()) => {
                let verdict = is_well_covered_c4c5(&h)?;
                well_covered &= verdict.well_covered;
                entry.clause = verdict.clause;
            }
            Err(Error::Domain(why)) => {
                c45 = false;
                notes.push(format!("component {comp}: {why}"));
            }
            Err(e) => return Err(e),
        }
        if c45 && check_family(&h, &[6]).is_ok() {
            let a = wcw_basis_c4c5c6(&h)?.basis.expect("applicable");
            let b = wwd_basis_c4c5c6(&h, budget)?.basis.expect("applicable");
            wcw = wcw.map(|s| s.sum(&a.embed(&coords, g.n())).expect("same ambient"));
            wwd = wwd.map(|s| s.sum(&b.embed(&coords, g.n())).expect("same ambient"));
            entry.dims = Some(dim_checks(&h, budget)?);
        } else {
            if c45 {
                notes.push(format!("component {comp}: graph contains a C6"));
            }
            c456 = false;
        }
        components.push(entry);
    }

    let outcome = |basis: Option<SubspaceBasis>| match basis {
        Some(b) if c456 => CharacterizationOutcome {
            applicable: true,
            special_form: None,
            basis: Some(b),
            notes: Vec::new(),
        },
        _ => CharacterizationOutcome::inapplicable("requires every component to be free of C4, C5 and C6"),
    };
    let mut wcw = outcome(wcw);
    let mut wwd = outcome(wwd);
    if let [only] = &components[..] {
        wcw.special_form = wcw.applicable.then_some(only.special_form);
        wwd.special_form = wwd.applicable.then_some(only.special_form);
    }
    Ok(Characterization {
        c4c5_free: c45,
        c4c5c6_free: c456,
        well_covered: c45.then_some(well_covered),
        well_dominated: c45.then_some(well_covered),
        components,
        wcw,
        wwd,
        notes,
    })
}

fn run_oracle(g: &Graph, budget: &Budget) -> Result<OracleSection> {
    let independent = enumerate_maximal_independent_sets(g, budget)?;
    let dominating = enumerate_minimal_dominating_sets(g, budget)?;
    let numbers = DominationNumbers::from_families(&independent, &dominating);
    Ok(OracleSection {
        maximal_independent_sets: independent.len(),
        minimal_dominating_sets: dominating.len(),
        numbers,
        well_covered: numbers.well_covered(),
        well_dominated: numbers.well_dominated(),
        wcw: weight_space_from_family(&independent, g.n())?,
        wwd: weight_space_from_family(&dominating, g.n())?,
    })
}

pub fn analyze(g: &Graph, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let budget = &opts.budget;
    let cycles = (3..=7)
        .map(|k| Ok((k, g.contains_cycle_of_length(k)?)))
        .collect::<Result<_>>()?;
    let characterization = characterize(g, budget)?;

    let (oracle, oracle_skipped) = if opts.skip_oracle {
        (None, Some("disabled".to_string()))
    } else {
        match run_oracle(g, budget) {
            Ok(o) => (Some(o), None),
            Err(e @ Error::Resource { .. }) => (None, Some(e.to_string())),
            Err(e) => return Err(e),
        }
    };

    let mut cross = CrossChecks::default();
    if let Some(o) = &oracle {
        cross.wwd_within_wcw = Some(o.wcw.contains(&o.wwd)?);
        let c = &characterization;
        cross.well_covered_agrees = c.well_covered.map(|x| x == o.well_covered);
        cross.well_dominated_agrees = c.well_dominated.map(|x| x == o.well_dominated);
        cross.wcw_agrees = c.wcw.basis.as_ref().map(|b| b == &o.wcw);
        cross.wwd_agrees = c.wwd.basis.as_ref().map(|b| b == &o.wwd);
    }

    let c = &characterization;
    let summary = match (c.c4c5_free, oracle.as_ref()) {
        (false, Some(o)) => Summary {
            well_covered: Some(o.well_covered),
            well_dominated: Some(o.well_dominated),
            wcw_dim: Some(o.wcw.dim()),
            wwd_dim: Some(o.wwd.dim()),
            source: "oracle",
        },
        _ => Summary {
            well_covered: c.well_covered.or(oracle.as_ref().map(|o| o.well_covered)),
            well_dominated: c.well_dominated.or(oracle.as_ref().map(|o| o.well_dominated)),
            wcw_dim: c.wcw.dim().or(oracle.as_ref().map(|o| o.wcw.dim())),
            wwd_dim: c.wwd.dim().or(oracle.as_ref().map(|o| o.wwd.dim())),
            source: if c.c4c5_free { "characterization" } else { "none" },
        },
    };

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        n: g.n(),
        edge_count: g.edge_count(),
        edges: g.edges().collect(),
        connected: g.is_connected(),
        components: g.components(),
        cycles,
        summary,
        structure: structure_report(g, budget)?,
        simplicial: simplicial_vertices(g),
        family_f: family_f_certificate(g),
        characterization,
        oracle,
        oracle_skipped,
        cross_checks: cross,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, templates};

    #[test]
    fn c7_report() {
        let r = analyze(&templates::c7(), &AnalysisOptions::default()).unwrap();
        assert_eq!(r.summary.well_dominated, Some(true));
        assert_eq!(r.summary.wwd_dim, Some(1));
        assert_eq!(r.characterization.wwd.special_form, Some(SpecialForm::C7));
        assert!(r.cross_checks.all_pass());
        assert!(r.cycles[&7]);
    }

    #[test]
    fn k33_report_uses_oracle() {
        let r = analyze(&Graph::complete_bipartite(3, 3), &AnalysisOptions::default()).unwrap();
        assert!(!r.characterization.c4c5_free);
        assert!(!r.characterization.wcw.applicable);
        let o = r.oracle.unwrap();
        assert!(o.well_covered && !o.well_dominated);
        assert_eq!(r.summary.source, "oracle");
    }

    #[test]
    fn two_c6_report() {
        let f = fixture("two-c6").unwrap();
        let r = analyze(&f.graph, &AnalysisOptions::default()).unwrap();
        assert!(r.characterization.c4c5_free && !r.characterization.c4c5c6_free);
        assert_eq!(r.oracle.unwrap().wwd.dim(), 2);
        assert_eq!(r.summary.wwd_dim, Some(2));
    }

    #[test]
    fn disconnected_direct_sum() {
        // C7 plus a disjoint P3.
        let mut g = Graph::empty(10).unwrap();
        for i in 0..7 {
            g.add_edge(i, (i + 1) % 7).unwrap();
        }
        g.add_edge(7, 8).unwrap();
        g.add_edge(8, 9).unwrap();
        let r = analyze(&g, &AnalysisOptions::default()).unwrap();
        assert!(!r.connected);
        assert_eq!(r.characterization.wwd.dim(), Some(3));
        assert!(r.cross_checks.all_pass(), "{:?}", r.cross_checks);
        assert_eq!(r.cross_checks.wwd_agrees, Some(true));
    }

    #[test]
    fn oracle_skipped_over_budget() {
        let opts = AnalysisOptions { budget: Budget::with_vertex_limit(5), skip_oracle: false };
        let r = analyze(&Graph::path(8), &opts).unwrap();
        assert!(r.oracle.is_none());
        assert!(r.oracle_skipped.unwrap().contains("limit 5"));
        assert_eq!(r.summary.wwd_dim, Some(2));
    }

    #[test]
    fn json_is_stable() {
        let g = templates::t10();
        let a = serde_json::to_string(&analyze(&g, &AnalysisOptions::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&analyze(&g, &AnalysisOptions::default()).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with(r#"{"schema_version":1,"n":10"#));
    }
}
