//! Canonical forms and exhaustive enumeration of small graphs up to isomorphism.

use super::Graph;
use std::collections::BTreeMap;

/// Isomorphism-invariant key: the lexicographically largest column-major
/// upper-triangle adjacency string over orderings that respect colour refinement.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    n: usize,
    bits: Vec<bool>,
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        color = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct Canon<'g> {
    g: &'g Graph,
    cell_of: Vec<usize>,
    slots: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    cur: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl Canon<'_> {
    fn run(g: &Graph) -> Vec<bool> {
        let cell_of = refine(g);
        let mut slots = cell_of.clone();
        slots.sort_unstable();
        let mut c = Canon {
            g,
            cell_of,
            slots,
            order: Vec::new(),
            used: vec![false; g.vertex_count()],
            cur: Vec::new(),
            best: None,
        };
        c.dfs(0);
        c.best.unwrap_or_default()
    }

    fn dfs(&mut self, depth: usize) {
        let n = self.g.vertex_count();
        if depth == n {
            if self.best.as_ref().is_none_or(|b| self.cur > *b) {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        let cell = self.slots[depth];
        for v in 0..n {
            if self.used[v] || self.cell_of[v] != cell {
                continue;
            }
            let start = self.cur.len();
            for i in 0..depth {
                let bit = self.g.has_edge(self.order[i], v);
                self.cur.push(bit);
            }
            let behind = self
                .best
                .as_ref()
                .is_some_and(|b| self.cur[..] < b[..self.cur.len()]);
            if !behind {
                self.used[v] = true;
                self.order.push(v);
                self.dfs(depth + 1);
                self.order.pop();
                self.used[v] = false;
            }
            self.cur.truncate(start);
        }
    }
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    CanonicalKey {
        n: g.vertex_count(),
        bits: Canon::run(g),
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_key(a) == canonical_key(b)
}

fn dedup(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut by_key = BTreeMap::new();
    for g in graphs {
        by_key.entry(canonical_key(&g)).or_insert(g);
    }
    by_key.into_values().collect()
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "exhaustive enumeration is limited to nine vertices");
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        // Every connected graph on k vertices has a non-cut vertex; removing it
        // leaves a connected graph on k-1 vertices.
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u32..(1 << (k - 1)) {
                let edges = g
                    .edges()
                    .iter()
                    .copied()
                    .chain((0..k - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k - 1)));
                next.push(Graph::new(k, edges).unwrap());
            }
        }
        level = dedup(next);
    }
    level
}

/// All connected graphs with between 1 and `max_edges` edges, one per isomorphism class.
pub fn connected_graphs_by_edges(max_edges: usize) -> Vec<Graph> {
    let mut all = Vec::new();
    let mut level = vec![Graph::path(2)];
    for m in 1..=max_edges {
        if m > 1 {
            let mut next = Vec::new();
            for g in &level {
                let n = g.vertex_count();
                for u in 0..n {
                    for v in u + 1..n {
                        if !g.has_edge(u, v) {
                            next.push(Graph::new(n, g.edges().iter().copied().chain([(u, v)])).unwrap());
                        }
                    }
                    next.push(Graph::new(n + 1, g.edges().iter().copied().chain([(u, n)])).unwrap());
                }
            }
            level = dedup(next);
        }
        all.extend(level.iter().cloned());
    }
    all
}
