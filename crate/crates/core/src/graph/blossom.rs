//! Edmonds' blossom search for augmenting paths in general graphs.

use super::{Graph, Matching};

const NONE: usize = usize::MAX;

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>], mate: Vec<usize>) -> Self {
        let n = adj.len();
        Search {
            adj,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS from the exposed vertex `root`; returns the exposed endpoint of an
    /// augmenting path (accepted by `target`) if one exists.
    fn find_path(&mut self, root: usize, target: impl Fn(usize) -> bool) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        if target(to) {
                            return Some(to);
                        }
                        continue;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// Vertex sequence of the augmenting path ending at `end`, from `end` back to the root.
    fn path_from(&self, end: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            path.push(v);
            path.push(pv);
            v = self.mate[pv];
        }
        path
    }

    fn augment(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect()
}

/// Maximum-cardinality matching.
pub fn maximum_matching(g: &Graph) -> Matching {
    let adj = adjacency(g);
    maximum_matching_adj(&adj)
}

pub(crate) fn maximum_matching_adj(adj: &[Vec<usize>]) -> Matching {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = adj[v].iter().find(|&&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut search = Search::new(adj, mate);
    for v in 0..n {
        if search.mate[v] == NONE {
            if let Some(end) = search.find_path(v, |_| true) {
                search.augment(end);
            }
        }
    }
    let edges = (0..n)
        .filter(|&v| search.mate[v] != NONE && v < search.mate[v])
        .map(|v| (v, search.mate[v]))
        .collect();
    Matching::from_sorted_unchecked(edges)
}

/// Looks for an alternating cycle through the matched edge `ab`.
///
/// `mate` describes a matching of `g` that contains `ab`. Only edges between
/// saturated vertices are considered. An alternating cycle through `ab` exists
/// iff `G[V_M] - ab` has a perfect matching, i.e. iff `M - ab` has an augmenting
/// path from `a` to `b` that avoids the edge `ab`. The returned sequence starts at
/// `a`, ends at `b`, and the closing edge `b a` is the matched one.
pub fn alternating_cycle_through(
    g: &Graph,
    mate: &[Option<usize>],
    (a, b): (usize, usize),
) -> Option<Vec<usize>> {
    debug_assert_eq!(mate[a], Some(b));
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            if mate[v].is_none() {
                return Vec::new();
            }
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| mate[w].is_some())
                .filter(|&w| !((v == a && w == b) || (v == b && w == a)))
                .collect()
        })
        .collect();
    let mut m: Vec<usize> = mate.iter().map(|x| x.unwrap_or(NONE)).collect();
    m[a] = NONE;
    m[b] = NONE;
    let mut search = Search::new(&adj, m);
    let end = search.find_path(a, |v| v == b)?;
    let mut path = search.path_from(end);
    path.reverse();
    Some(path)
}
