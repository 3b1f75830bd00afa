//! Exact dynamic programming over tree decompositions.

mod decomposition;
mod dp;
mod nice;
mod solve;

pub use decomposition::{decomposition_from_order, heuristic_tree_decomposition, min_fill_order, parse_td, write_td, TreeDecomposition};
pub use dp::{dp_forget, dp_introduce_edge, dp_introduce_vertex, dp_join, dp_leaf, Back, DpState, DpTable, Entry, TableCounters, MAX_BAG};
pub use nice::{to_nice, validate_nice, NiceNode, NiceTreeDecomposition, NodeKind};
pub use solve::{run_tables, solve_treewidth, solve_treewidth_capped, solve_with_decomposition, TwSolution, TwStats};
