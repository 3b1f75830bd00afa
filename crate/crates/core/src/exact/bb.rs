use super::{greedy_urm, UrmSolution};
use crate::graph::{maximum_matching, Graph, Matching};
use crate::verify::extension_stays_unique;
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

/// Search limits. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub nodes: Option<u64>,
    pub time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(n: u64) -> Self {
        Budget {
            nodes: Some(n),
            time: None,
        }
    }

    pub fn time(t: Duration) -> Self {
        Budget {
            nodes: None,
            time: Some(t),
        }
    }
}

/// Branch and bound over edges sorted by descending degree sum.
///
/// The bound at a node is the partial size plus a maximum matching of the
/// residual graph (later edges with both endpoints free). With `lower_bound`
/// set, branches that cannot reach it are pruned; if the search then completes
/// without reaching it, `search_complete` is set and `optimal` is not, which
/// certifies the optimum is below `lower_bound`.
pub fn max_urm_bb(g: &Graph, budget: Budget, lower_bound: Option<usize>) -> UrmSolution {
    let start = Instant::now();
    let mut order = g.edges().to_vec();
    order.sort_by_key(|&(u, v)| (std::cmp::Reverse(g.degree(u) + g.degree(v)), u, v));
    let seed = greedy_urm(g, &order);
    let mut s = Search {
        g,
        order,
        mates: vec![None; g.vertex_count()],
        cur: Vec::new(),
        best: seed.edges().to_vec(),
        floor: lower_bound.unwrap_or(0),
        nodes: 0,
        budget,
        start,
        aborted: false,
    };
    let root_ub = maximum_matching(g).len();
    if s.best.len() < root_ub {
        s.go(0);
    }
    let complete = !s.aborted;
    let reached = s.best.len() >= lower_bound.unwrap_or(0);
    let mut sol = UrmSolution::new(
        Matching::from_sorted_unchecked(s.best),
        complete && reached,
        s.nodes,
        start.elapsed(),
    );
    sol.search_complete = complete;
    sol
}

struct Search<'g> {
    g: &'g Graph,
    order: Vec<(usize, usize)>,
    mates: Vec<Option<usize>>,
    cur: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
    floor: usize,
    nodes: u64,
    budget: Budget,
    start: Instant,
    aborted: bool,
}

impl Search<'_> {
    fn out_of_budget(&self) -> bool {
        if self.budget.nodes.is_some_and(|n| self.nodes >= n) {
            return true;
        }
        // Clock reads are cheap next to a matching computation, but still sampled.
        self.nodes % 64 == 0 && self.budget.time.is_some_and(|t| self.start.elapsed() >= t)
    }

    fn residual_bound(&self, from: usize) -> usize {
        let free = |v: usize| self.mates[v].is_none();
        let edges = self.order[from..].iter().copied().filter(|&(u, v)| free(u) && free(v));
        let r = Graph::from_edges_lossy(self.g.vertex_count(), edges);
        maximum_matching(&r).len()
    }

    fn go(&mut self, from: usize) {
        if self.aborted {
            return;
        }
        if self.out_of_budget() {
            self.aborted = true;
            return;
        }
        self.nodes += 1;
        if self.cur.len() > self.best.len() {
            self.best = self.cur.clone();
        }
        let need = (self.best.len() + 1).max(self.floor);
        if self.cur.len() + self.residual_bound(from) < need {
            return;
        }
        for i in from..self.order.len() {
            let (u, v) = self.order[i];
            if self.mates[u].is_some() || self.mates[v].is_some() {
                continue;
            }
            if !extension_stays_unique(self.g, &mut self.mates, (u, v)) {
                continue;
            }
            self.mates[u] = Some(v);
            self.mates[v] = Some(u);
            self.cur.push((u, v));
            self.go(i + 1);
            self.cur.pop();
            self.mates[u] = None;
            self.mates[v] = None;
            if self.aborted {
                return;
            }
            let need = (self.best.len() + 1).max(self.floor);
            if self.cur.len() + self.residual_bound(i + 1) < need {
                return;
            }
        }
    }
}
