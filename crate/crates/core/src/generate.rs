//! Seeded random graph streams with forbidden cycle lengths.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::MAX_VERTICES;

/// Attempts per emitted graph before giving up.
pub const REJECTION_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub max_n: usize,
    /// Cycle lengths that must not occur as subgraphs.
    pub forbidden_cycles: BTreeSet<usize>,
    pub seed: u64,
    pub count: usize,
    /// Only emit connected graphs.
    pub connected: bool,
}

impl GeneratorConfig {
    pub fn new(max_n: usize, forbidden: &[usize], seed: u64, count: usize) -> Self {
        GeneratorConfig {
            max_n,
            forbidden_cycles: forbidden.iter().copied().collect(),
            seed,
            count,
            connected: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_n > MAX_VERTICES {
            return Err(Error::domain(format!("max_n must lie in 1..={MAX_VERTICES}")));
        }
        if let Some(&k) = self.forbidden_cycles.iter().find(|&&k| k < 3) {
            return Err(Error::domain(format!("cannot forbid cycles of length {k}")));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Erdős–Rényi with about `1.3 n` expected edges.
    Sparse,
    Tree,
    /// Random tree plus a few extra edges.
    TreePlusEdges,
    /// Random tree with triangles hung off some of its leaves.
    PendantTriangles,
    /// Random tree grown with triangle ears over existing edges.
    Ears,
}

const SHAPES: [Shape; 5] = [
    Shape::Sparse,
    Shape::Tree,
    Shape::TreePlusEdges,
    Shape::PendantTriangles,
    Shape::Ears,
];

/// Deterministic stream of graphs satisfying a [`GeneratorConfig`].
pub struct GraphStream {
    cfg: GeneratorConfig,
    rng: ChaCha8Rng,
    emitted: usize,
    failed: bool,
}

pub fn generate_family(cfg: GeneratorConfig) -> Result<GraphStream> {
    cfg.validate()?;
    let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok(GraphStream { cfg, rng, emitted: 0, failed: false })
}

fn accepts(cfg: &GeneratorConfig, g: &Graph) -> bool {
    (!cfg.connected || g.is_connected())
        && cfg
            .forbidden_cycles
            .iter()
            .all(|&k| !g.contains_cycle_of_length(k).expect("validated length"))
}

impl Iterator for GraphStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        if self.failed || self.emitted == self.cfg.count {
            return None;
        }
        let cfg = &self.cfg;
        let drawn = draw(&mut self.rng, cfg.max_n, REJECTION_LIMIT, |g| accepts(cfg, g));
        match drawn {
            Ok(_) => self.emitted += 1,
            Err(_) => self.failed = true,
        }
        Some(drawn)
    }
}

fn draw<R: Rng>(rng: &mut R, max_n: usize, limit: usize, accept: impl Fn(&Graph) -> bool) -> Result<Graph> {
    for _ in 0..limit {
        let shape = *SHAPES.choose(rng).expect("non-empty");
        let g = random_graph(rng, shape, max_n);
        if accept(&g) {
            return Ok(g);
        }
    }
    Err(Error::resource(
        "rejected samples in a row; lower max_n or forbid fewer cycle lengths",
        limit,
    ))
}

fn random_tree_edges<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

fn shuffled(rng: &mut impl Rng, n: usize, edges: &[(usize, usize)]) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.iter().map(|&(u, v)| (perm[u], perm[v]))).expect("simple by construction")
}

/// One unfiltered sample of the given shape with at most `max_n` vertices.
pub fn random_graph<R: Rng>(rng: &mut R, shape: Shape, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let mut edges = Vec::new();
    let order = match shape {
        Shape::Sparse => {
            let pairs = n * n.saturating_sub(1) / 2;
            let p = if pairs == 0 { 0.0 } else { (1.3 * n as f64 / pairs as f64).min(1.0) };
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            n
        }
        Shape::Tree => {
            edges = random_tree_edges(rng, n);
            n
        }
        Shape::TreePlusEdges => {
            edges = random_tree_edges(rng, n);
            if n >= 3 {
                for _ in 0..rng.gen_range(0..=n / 3) {
                    let u = rng.gen_range(0..n);
                    let v = rng.gen_range(0..n);
                    if u != v && !edges.contains(&(u.min(v), u.max(v))) && !edges.contains(&(u.max(v), u.min(v))) {
                        edges.push((u.min(v), u.max(v)));
                    }
                }
            }
            n
        }
        Shape::PendantTriangles => {
            let base = rng.gen_range(1..=n.max(1));
            edges = random_tree_edges(rng, base);
            let mut degree = vec![0usize; base];
            for &(u, v) in &edges {
                degree[u] += 1;
                degree[v] += 1;
            }
            let mut next = base;
            for (leaf, &d) in degree.iter().enumerate().take(base) {
                if d <= 1 && next + 2 <= max_n && rng.gen_bool(0.6) {
                    edges.extend([(leaf, next), (leaf, next + 1), (next, next + 1)]);
                    next += 2;
                }
            }
            next
        }
        Shape::Ears => {
            let base = rng.gen_range(1..=n.max(1));
            edges = random_tree_edges(rng, base);
            let mut next = base;
            while next < max_n && rng.gen_bool(0.7) {
                if !edges.is_empty() && rng.gen_bool(0.5) {
                    let (u, v) = edges[rng.gen_range(0..edges.len())];
                    edges.extend([(u, next), (v, next)]);
                } else {
                    edges.push((rng.gen_range(0..next), next));
                }
                next += 1;
            }
            next
        }
    };
    shuffled(rng, order, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forbidden_cycles_never_emitted() {
        let cfg = GeneratorConfig::new(10, &[4, 5, 6], 1, 200);
        for g in generate_family(cfg).unwrap() {
            let g = g.unwrap();
            assert!(g.n() <= 10);
            for k in [4, 5, 6] {
                assert!(!g.contains_cycle_of_length(k).unwrap());
            }
        }
    }

    #[test]
    fn reproducible_per_seed() {
        let a: Vec<Graph> = generate_family(GeneratorConfig::new(9, &[4], 42, 50)).unwrap().map(|g| g.unwrap()).collect();
        let b: Vec<Graph> = generate_family(GeneratorConfig::new(9, &[4], 42, 50)).unwrap().map(|g| g.unwrap()).collect();
        let c: Vec<Graph> = generate_family(GeneratorConfig::new(9, &[4], 43, 50)).unwrap().map(|g| g.unwrap()).collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn unrestricted_and_connected() {
        let graphs: Vec<Graph> = generate_family(GeneratorConfig::new(8, &[], 3, 100).connected())
            .unwrap()
            .map(|g| g.unwrap())
            .collect();
        assert_eq!(graphs.len(), 100);
        assert!(graphs.iter().all(Graph::is_connected));
    }

    #[test]
    fn trees_are_cycle_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let t = random_graph(&mut rng, Shape::Tree, 12);
            assert!(t.is_connected());
            assert_eq!(t.edge_count() + 1, t.n());
            for k in 3..=t.n().max(3) {
                assert!(!t.contains_cycle_of_length(k).unwrap());
            }
        }
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(generate_family(GeneratorConfig::new(0, &[], 0, 1)).is_err());
        assert!(generate_family(GeneratorConfig::new(5, &[2], 0, 1)).is_err());
    }

    #[test]
    fn exhausted_rejection_budget_is_an_error() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let err = draw(&mut rng, 6, 50, |_| false).unwrap_err();
        assert!(matches!(err, Error::Resource { limit: 50, .. }));
    }
}
