//! Ground-truth maximum uniquely restricted matchings.

mod bb;
mod brute;
mod reduce;

pub use bb::{max_urm_bb, Budget};
pub use brute::{max_urm_brute, max_urm_brute_capped, BRUTE_VERTEX_CAP};
pub use reduce::{approx_vertex_cover, reduce_dominated, sperner_bound, Reduction};

use crate::graph::{Edge, Graph, Matching};
use crate::verify::extension_stays_unique;
use serde::{Deserialize, Serialize};
use std::time::Duration;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UrmSolution {
    pub size: usize,
    pub matching: Matching,
    /// `size` is the maximum.
    pub optimal: bool,
    /// The search visited its whole (pruned) tree without hitting a budget.
    pub search_complete: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl UrmSolution {
    pub(crate) fn new(matching: Matching, optimal: bool, nodes: u64, elapsed: Duration) -> Self {
        UrmSolution {
            size: matching.len(),
            matching,
            optimal,
            search_complete: optimal,
            nodes_explored: nodes,
            elapsed,
        }
    }
}

/// Adds edges in the given order whenever the matching stays uniquely restricted.
pub fn greedy_urm(g: &Graph, order: &[Edge]) -> Matching {
    let mut mates = vec![None; g.vertex_count()];
    let mut picked = Vec::new();
    for &(u, v) in order {
        if mates[u].is_none() && mates[v].is_none() && extension_stays_unique(g, &mut mates, (u, v)) {
            mates[u] = Some(v);
            mates[v] = Some(u);
            picked.push((u, v));
        }
    }
    Matching::from_sorted_unchecked(picked)
}
