//! Simple undirected graphs with dense `0..n` vertex ids, and matchings on them.

mod blossom;
pub mod enumerate;
mod io;
mod line;
mod random;

pub use blossom::{alternating_cycle_through, maximum_matching};
pub use io::{parse_graph, parse_matching, write_graph, write_matching};
pub use line::{line_graph, root_graph, LineGraph, RootGraph};
pub use random::random_graph;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Unordered edge stored with `0 <= .0 < .1`.
pub type Edge = (usize, usize);

#[inline]
pub fn norm(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::contract(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::contract(format!("self-loop at vertex {u}")));
            }
            list.push(norm(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::contract(format!(
                "duplicate edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            labels: None,
        })
    }

    /// Like [`Graph::new`] but silently drops duplicates and loops. Used by generators.
    pub(crate) fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<Edge> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| norm(u, v))
            .collect();
        list.sort_unstable();
        list.dedup();
        Graph::new(n, list).expect("sanitized edge list")
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        Graph::new(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::contract(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&norm(u, v)).ok()
    }

    /// Subgraph induced by `keep`, renumbered in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let mut g = Graph::new(keep.len(), edges).expect("induced subgraph of a simple graph");
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::new(self.n + other.n, edges).unwrap()
    }
}

/// A set of pairwise vertex-disjoint edges of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Validates that `edges` exist in `g` and share no endpoint.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut used = vec![false; g.vertex_count()];
        let mut list = Vec::new();
        for (u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::contract(format!("{u}-{v} is not an edge of the graph")));
            }
            for w in [u, v] {
                if std::mem::replace(&mut used[w], true) {
                    return Err(Error::contract(format!(
                        "vertex {w} is covered by two matching edges"
                    )));
                }
            }
            list.push(norm(u, v));
        }
        list.sort_unstable();
        Ok(Matching { edges: list })
    }

    /// Skips host validation. Callers guarantee the invariants.
    pub(crate) fn from_sorted_unchecked(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&norm(u, v)).is_ok()
    }

    /// `mate[v]` is the partner of `v`, if saturated.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// Saturated vertices in increasing order.
    pub fn saturated(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }
}
