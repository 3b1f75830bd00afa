//! Composition of Exact-3-Cover instances into one matching instance.

mod build;
mod check;
mod e3c;

pub use build::{build_gadget, EdgeType, GadgetLayout, GadgetMetadata, Role, RoleEntry, Side};
pub use check::{check_structural_bounds, diamond_edges, extract_cover, cover_matching, vertex_cover_witness, StructuralReport};
pub use e3c::{e3c_solve, parse_e3c_json, E3CInstance, Triple, E3C_TRIPLE_CAP};
