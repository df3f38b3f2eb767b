//! Oracle-backed property runs over a seeded graph stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::format::to_graph6;
use crate::generate::{generate_family, GeneratorConfig};
use crate::graph::Graph;
use crate::oracle::{
    enumerate_maximal_independent_sets, enumerate_minimal_dominating_sets, extremal_weights_of,
    weight_space_from_family, Budget, DominationNumbers,
};
use crate::weightspace::{is_well_dominated_c4c5, wcw_basis_c4c5c6, wwd_basis_c4c5c6};
use crate::{Rational, SubspaceBasis};

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub graphs: usize,
    pub connected: usize,
    /// Connected instances checked for well-dominated = well-covered.
    pub equivalence_checked: usize,
    /// Connected instances whose weight-space bases were compared.
    pub bases_checked: usize,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteFailure {
    pub graph6: String,
    pub property: String,
}

/// Random weight vector with entries `p/q`, `0 <= p <= 9`, `1 <= q <= 4`.
pub fn random_nonnegative_weights<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| Rational::new(rng.gen_range(0..10).into(), rng.gen_range(1..5).into()))
        .collect()
}

fn check_graph(
    g: &Graph,
    cfg: &GeneratorConfig,
    budget: &Budget,
    rng: &mut ChaCha8Rng,
    report: &mut SuiteReport,
) -> Result<()> {
    let mut fail = |property: String| {
        report.failures.push(SuiteFailure { graph6: to_graph6(g), property });
    };
    let independent = enumerate_maximal_independent_sets(g, budget)?;
    let dominating = enumerate_minimal_dominating_sets(g, budget)?;
    let numbers = DominationNumbers::from_families(&independent, &dominating);
    if !numbers.chain_holds() {
        fail(format!("cardinality chain violated: {numbers:?}"));
    }
    if numbers.well_dominated() && !numbers.well_covered() {
        fail("well-dominated but not well-covered".into());
    }
    if let Some(s) = independent.sets.iter().find(|s| !dominating.contains(**s)) {
        fail(format!("maximal independent set {s} is not minimal dominating"));
    }
    let w = random_nonnegative_weights(rng, g.n());
    let ext = extremal_weights_of(&w, &independent, &dominating);
    if !ext.chain_holds() {
        fail(format!("weighted chain violated: {ext:?}"));
    }
    let wcw: SubspaceBasis = weight_space_from_family(&independent, g.n())?;
    let wwd: SubspaceBasis = weight_space_from_family(&dominating, g.n())?;
    if !wcw.contains(&wwd)? {
        fail("WWD is not a subspace of WCW".into());
    }

    if !g.is_connected() || g.n() == 0 {
        return Ok(());
    }
    report.connected += 1;
    let forbids = |ks: &[usize]| ks.iter().all(|k| cfg.forbidden_cycles.contains(k));
    if forbids(&[4, 5]) {
        report.equivalence_checked += 1;
        let characterized = is_well_dominated_c4c5(g)?;
        if characterized != numbers.well_dominated() || characterized != numbers.well_covered() {
            fail(format!(
                "characterized well-dominated = {characterized}, oracle well-dominated = {}, well-covered = {}",
                numbers.well_dominated(),
                numbers.well_covered()
            ));
        }
    }
    if forbids(&[4, 5, 6]) {
        report.bases_checked += 1;
        if wcw_basis_c4c5c6(g)?.basis.as_ref() != Some(&wcw) {
            fail("constraint-built WCW differs from enumeration".into());
        }
        if wwd_basis_c4c5c6(g, budget)?.basis.as_ref() != Some(&wwd) {
            fail("constraint-built WWD differs from enumeration".into());
        }
    }
    Ok(())
}

/// Runs every applicable property on `cfg.count` generated graphs.
pub fn run_suite(cfg: GeneratorConfig, budget: &Budget) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed_5eed);
    let mut report = SuiteReport::default();
    for g in generate_family(cfg.clone())? {
        let g = g?;
        report.graphs += 1;
        check_graph(&g, &cfg, budget, &mut rng, &mut report)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let r = run_suite(GeneratorConfig::new(9, &[4, 5, 6], 7, 60), &Budget::default()).unwrap();
        assert_eq!(r.graphs, 60);
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.bases_checked > 0 && r.bases_checked == r.equivalence_checked);
    }

    #[test]
    fn weights_are_nonnegative() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let w = random_nonnegative_weights(&mut rng, 50);
        assert!(w.iter().all(|x| *x >= Rational::from_integer(0.into())));
    }
}
