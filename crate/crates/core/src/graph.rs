//! Simple undirected graphs over dense vertex indices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

/// Largest order accepted by [`Graph::is_isomorphic_small`].
pub const ISOMORPHISM_LIMIT: usize = 12;

/// A finite simple graph. Adjacency is stored as one [`VertexSet`] per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::domain(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::domain(format!(
                "edge ({u}, {v}) has an endpoint outside [0, {n})"
            )));
        }
        if u == v {
            return Err(Error::domain(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("valid complete graph")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("valid complete bipartite graph")
    }

    /// `K_{1,k}` with the center at index 0.
    pub fn star(k: usize) -> Self {
        Graph::complete_bipartite(1, k)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// `N(S)` in the open sense: union of neighborhoods, members of `S` included
    /// only if adjacent to another member.
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// `N[S]`.
    pub fn closed_neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        self.neighbors_of_set(s) | s
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// Whether `s` dominates `t`, i.e. `t ⊆ N[s]`.
    pub fn dominates(&self, s: VertexSet, t: VertexSet) -> bool {
        t.is_subset(self.closed_neighbors_of_set(s))
    }

    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.dominates(s, self.vertices())
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::domain(format!(
                "vertex {v} out of range for graph on {} vertices",
                self.n()
            )))
        } else {
            Ok(())
        }
    }

    /// BFS layers from `s`: `layers[i]` is `N_i(S)`.
    fn bfs_layers(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut layers = Vec::new();
        let mut seen = s;
        let mut frontier = s;
        while !frontier.is_empty() {
            layers.push(frontier);
            let next = self.neighbors_of_set(frontier) - seen;
            seen |= next;
            frontier = next;
        }
        layers
    }

    /// Shortest-path distance, or `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::from([u]);
        dist[u] = 0;
        while let Some(x) = queue.pop_front() {
            if x == v {
                return Ok(Some(dist[x]));
            }
            for y in self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }

    fn check_source(&self, s: VertexSet) -> Result<()> {
        if s.is_empty() {
            return Err(Error::domain("distance to the empty set is undefined"));
        }
        if !s.is_subset(self.vertices()) {
            return Err(Error::domain(format!("{s} is not a vertex subset")));
        }
        Ok(())
    }

    /// `N_i(S) = {x : d(x, S) = i}`.
    pub fn n_exact(&self, s: VertexSet, i: usize) -> Result<VertexSet> {
        self.check_source(s)?;
        Ok(self.bfs_layers(s).get(i).copied().unwrap_or_default())
    }

    /// `N_i[S] = {x : d(x, S) <= i}`.
    pub fn n_ball(&self, s: VertexSet, i: usize) -> Result<VertexSet> {
        self.check_source(s)?;
        Ok(self
            .bfs_layers(s)
            .into_iter()
            .take(i + 1)
            .fold(VertexSet::EMPTY, |acc, l| acc | l))
    }

    /// Subgraph induced by `s`, with vertices relabelled in ascending order.
    /// The returned map sends old indices to new ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n()];
        let members = (s & self.vertices()).to_vec();
        for (new, &old) in members.iter().enumerate() {
            map[old] = Some(new);
        }
        let adj = members
            .iter()
            .map(|&old| {
                (self.adj[old] & s)
                    .iter()
                    .map(|u| map[u].expect("member"))
                    .collect()
            })
            .collect();
        (Graph { adj }, map)
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(root) = rest.first() {
            let mut comp = VertexSet::singleton(root);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = (self.neighbors_of_set(frontier) & within) - comp;
                comp |= next;
                frontier = next;
            }
            rest -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the graph has a (not necessarily induced) cycle on exactly `k`
    /// vertices.
    pub fn contains_cycle_of_length(&self, k: usize) -> Result<bool> {
        if k < 3 {
            return Err(Error::domain(format!("cycle length must be at least 3, got {k}")));
        }
        if k > self.n() {
            return Ok(false);
        }
        // Each cycle is found from its smallest vertex, walking only through
        // larger vertices.
        for start in 0..self.n() {
            let allowed = self.vertices() - VertexSet::full(start + 1);
            if self.closes_cycle(start, start, VertexSet::singleton(start), allowed, k) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn closes_cycle(
        &self,
        start: usize,
        at: usize,
        on_path: VertexSet,
        allowed: VertexSet,
        k: usize,
    ) -> bool {
        if on_path.len() == k {
            return self.has_edge(at, start);
        }
        for next in self.adj[at] & allowed {
            if self.closes_cycle(start, next, on_path.with(next), allowed.without(next), k) {
                return true;
            }
        }
        false
    }

    /// Exact isomorphism test for graphs with at most [`ISOMORPHISM_LIMIT`] vertices.
    pub fn is_isomorphic_small(&self, other: &Graph) -> Result<bool> {
        let limit = ISOMORPHISM_LIMIT;
        if self.n() > limit || other.n() > limit {
            return Err(Error::domain(format!(
                "isomorphism is limited to {limit} vertices (got {} and {})",
                self.n(),
                other.n()
            )));
        }
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let mut da: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..other.n()).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return Ok(false);
        }
        // Map high-degree vertices first; they constrain the search most.
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut mapping = vec![usize::MAX; self.n()];
        Ok(self.extend_isomorphism(other, &order, 0, &mut mapping, VertexSet::EMPTY))
    }

    fn extend_isomorphism(
        &self,
        other: &Graph,
        order: &[usize],
        depth: usize,
        mapping: &mut [usize],
        used: VertexSet,
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for image in other.vertices() - used {
            if other.degree(image) != self.degree(v) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| self.has_edge(u, v) == other.has_edge(mapping[u], image));
            if !consistent {
                continue;
            }
            mapping[v] = image;
            if self.extend_isomorphism(other, order, depth + 1, mapping, used.with(image)) {
                return true;
            }
        }
        mapping[v] = usize::MAX;
        false
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("permutation keeps the graph simple")
    }
}
