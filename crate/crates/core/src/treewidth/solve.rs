//! Running the table operations over a nice tree decomposition.

use super::decomposition::{heuristic_tree_decomposition, TreeDecomposition};
use super::dp::{dp_forget, dp_introduce_edge, dp_introduce_vertex, dp_join, dp_leaf, Back, DpState, DpTable, TableCounters};
use super::nice::{to_nice, validate_nice, NiceTreeDecomposition, NodeKind};
use crate::error::{Error, Result};
use crate::exact::UrmSolution;
use crate::graph::{Graph, Matching};
use crate::verify::{verify_urm_cycle, verify_urm_pm, PM_VERIFIER_CAP};
use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Debug, Default, Serialize)]
pub struct TwStats {
    pub width: usize,
    pub nodes: usize,
    pub total_states: usize,
    /// Largest per-node counts.
    pub max: TableCounters,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwSolution {
    pub solution: UrmSolution,
    pub stats: TwStats,
}

pub fn run_tables(g: &Graph, ntd: &NiceTreeDecomposition, max_states: Option<usize>) -> Result<Vec<DpTable>> {
    validate_nice(ntd, g)?;
    let mut tables: Vec<DpTable> = Vec::with_capacity(ntd.nodes.len());
    for node in &ntd.nodes {
        let c = &node.children;
        let t = match node.kind {
            NodeKind::Leaf => dp_leaf(),
            NodeKind::IntroduceVertex(v) => dp_introduce_vertex(&tables[c[0]], v)?,
            NodeKind::IntroduceEdge(u, v) => dp_introduce_edge(&tables[c[0]], u, v)?,
            NodeKind::Forget(v) => dp_forget(&tables[c[0]], v)?,
            NodeKind::Join => dp_join(&tables[c[0]], &tables[c[1]])?,
        };
        if let Some(cap) = max_states {
            if t.len() > cap {
                return Err(Error::Resource {
                    what: "table size",
                    limit: cap,
                    hint: Some("use a narrower decomposition or the exact search"),
                });
            }
        }
        tables.push(t);
    }
    Ok(tables)
}

/// Maximum uniquely restricted matching, exact for any valid nice decomposition.
pub fn solve_treewidth(g: &Graph, ntd: &NiceTreeDecomposition) -> Result<TwSolution> {
    solve_treewidth_capped(g, ntd, None)
}

pub fn solve_treewidth_capped(g: &Graph, ntd: &NiceTreeDecomposition, max_states: Option<usize>) -> Result<TwSolution> {
    let start = Instant::now();
    let tables = run_tables(g, ntd, max_states)?;
    let root = ntd.root();
    let empty = DpState::new(&[], Vec::new());
    let Some(value) = tables[root].get(&empty) else {
        return Err(Error::Internal("root table lacks the empty state".into()));
    };
    if value % 2 == 1 {
        return Err(Error::Internal(format!("odd root value {value}")));
    }
    let idx = tables[root].entries().iter().position(|e| e.state == empty).unwrap();
    let mut edges = Vec::new();
    let mut stack = vec![(root, idx)];
    while let Some((x, i)) = stack.pop() {
        let node = &ntd.nodes[x];
        match tables[x].entries()[i].back {
            Back::Leaf => {}
            Back::Single(j) => stack.push((node.children[0], j)),
            Back::Matched(j) => {
                let NodeKind::IntroduceEdge(u, v) = node.kind else {
                    return Err(Error::Internal("matched backpointer off an edge node".into()));
                };
                edges.push((u, v));
                stack.push((node.children[0], j));
            }
            Back::Join(a, b) => {
                stack.push((node.children[0], a));
                stack.push((node.children[1], b));
            }
        }
    }
    let m = Matching::new(g, edges)?;
    if 2 * m.len() != value as usize {
        return Err(Error::Internal(format!("witness has {} edges, table says {}", m.len(), value / 2)));
    }
    let unique = verify_urm_cycle(g, &m)?.is_unique()
        && (2 * m.len() > PM_VERIFIER_CAP || verify_urm_pm(g, &m)?.is_unique());
    if !unique {
        return Err(Error::Internal("witness matching is not uniquely restricted".into()));
    }
    let mut stats = TwStats {
        width: ntd.width(),
        nodes: ntd.nodes.len(),
        ..TwStats::default()
    };
    for t in &tables {
        let c = t.counters();
        stats.total_states += c.states;
        stats.max.states = stats.max.states.max(c.states);
        stats.max.colorings = stats.max.colorings.max(c.colorings);
        stats.max.matrices = stats.max.matrices.max(c.matrices);
    }
    let solution = UrmSolution {
        size: m.len(),
        matching: m,
        optimal: true,
        search_complete: true,
        nodes_explored: stats.total_states as u64,
        elapsed: start.elapsed(),
    };
    Ok(TwSolution { solution, stats })
}

/// Solves with a min-fill decomposition, or the given one.
pub fn solve_with_decomposition(g: &Graph, td: Option<&TreeDecomposition>) -> Result<TwSolution> {
    let own;
    let td = match td {
        Some(t) => t,
        None => {
            own = heuristic_tree_decomposition(g);
            &own
        }
    };
    solve_treewidth(g, &to_nice(td, g)?)
}
