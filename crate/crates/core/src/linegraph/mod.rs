//! Deciding uniquely restricted matchings of size `ℓ` in line graphs by
//! packing paths of length two into the root graph.

mod decide;
mod embed;
mod filter;
mod forests;
mod partitions;
mod trees;

pub use decide::{max_line_urm, urm_line_decide, LineDecision, LineWitness};
pub use embed::{
    color_coding_embed, color_coding_embed_counted, embed_backtrack, may_embed, trial_count, Embedding,
};
pub use filter::{
    p3_filter, p3_filter_oracle, p3_filter_with, FilterVariant, P3Decomposition, ORACLE_EDGE_CAP,
};
pub use forests::{candidate_forests, CandidateForest};
pub use partitions::{integer_partitions, partition_count, partitions_bounded};
pub use trees::{
    centroids, free_tree_keys, free_trees, rooted_key, rooted_trees, tree_from_levels, tree_key, LevelSeq,
    FREE_TREE_CAP,
};
