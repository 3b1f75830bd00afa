use super::partitions::partitions_bounded;
use super::trees::{free_tree_keys, tree_from_levels, tree_key, LevelSeq};
use crate::error::Result;
use crate::graph::Graph;
use serde::Serialize;

/// An unlabelled forest that may carry `ℓ` edge-disjoint paths of length two.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateForest {
    #[serde(skip)]
    pub forest: Graph,
    /// Vertex count of each tree, non-increasing.
    pub tree_sizes: Vec<usize>,
    pub canonical_key: String,
}

impl CandidateForest {
    /// Wraps an arbitrary forest, computing its key.
    pub fn from_forest(forest: Graph) -> Self {
        let mut parts: Vec<(usize, LevelSeq)> = forest
            .components()
            .into_iter()
            .map(|c| (c.len(), tree_key(&forest.induced(&c))))
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CandidateForest {
            tree_sizes: parts.iter().map(|p| p.0).collect(),
            canonical_key: key_text(parts.iter().map(|p| &p.1)),
            forest,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.forest.vertex_count()
    }
}

fn key_text<'a>(trees: impl Iterator<Item = &'a LevelSeq>) -> String {
    let digit = |l: &u8| char::from_digit(*l as u32, 36).expect("level below 36");
    trees.map(|t| t.iter().map(digit).collect::<String>()).collect::<Vec<_>>().join("|")
}

/// Forests with `2ℓ` edges, `2ℓ+1..=3ℓ` vertices and every tree on at least
/// three vertices, one per isomorphism class.
pub fn candidate_forests(l: usize) -> Result<Vec<CandidateForest>> {
    let mut out = Vec::new();
    for k in 2 * l + 1..=3 * l {
        let t = k - 2 * l;
        for parts in partitions_bounded(k, k, 3).into_iter().filter(|p| p.len() == t) {
            let per_part: Vec<Vec<LevelSeq>> = parts.iter().map(|&s| free_tree_keys(s)).collect::<Result<_>>()?;
            let mut pick = vec![0usize; t];
            choose(&parts, &per_part, 0, &mut pick, &mut out);
        }
    }
    Ok(out)
}

/// Multiset choices: equal consecutive parts take non-decreasing tree indices.
fn choose(parts: &[usize], trees: &[Vec<LevelSeq>], i: usize, pick: &mut Vec<usize>, out: &mut Vec<CandidateForest>) {
    if i == parts.len() {
        let chosen: Vec<&LevelSeq> = (0..parts.len()).map(|j| &trees[j][pick[j]]).collect();
        let mut forest = Graph::empty(0);
        for l in &chosen {
            forest = forest.disjoint_union(&tree_from_levels(l));
        }
        let mut keyed: Vec<&LevelSeq> = chosen.clone();
        keyed.sort_unstable_by(|a, b| (b.len(), *b).cmp(&(a.len(), *a)));
        out.push(CandidateForest {
            tree_sizes: parts.to_vec(),
            canonical_key: key_text(keyed.into_iter()),
            forest,
        });
        return;
    }
    let start = if i > 0 && parts[i] == parts[i - 1] { pick[i - 1] } else { 0 };
    for idx in start..trees[i].len() {
        pick[i] = idx;
        choose(parts, trees, i + 1, pick, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn one_path_for_l1() {
        let fs = candidate_forests(1).unwrap();
        assert_eq!(fs.len(), 1);
        assert!(crate::graph::enumerate::are_isomorphic(&fs[0].forest, &Graph::path(3)));
    }

    #[test]
    fn l2_forests() {
        let fs = candidate_forests(2).unwrap();
        // Three trees on five vertices plus the pair of paths.
        assert_eq!(fs.len(), 4);
        for f in &fs {
            assert_eq!(f.forest.edge_count(), 4);
            assert!(f.forest.is_forest());
            assert!((5..=6).contains(&f.vertex_count()));
        }
        let keys: Vec<&str> = fs.iter().map(|f| f.canonical_key.as_str()).collect();
        assert!(keys.contains(&"01212"));
        assert!(keys.contains(&"01111"));
        assert!(keys.contains(&"01211"));
        assert!(keys.contains(&"011|011"));
    }

    #[test]
    fn keys_are_distinct_and_recomputable() {
        for l in 1..=4 {
            let fs = candidate_forests(l).unwrap();
            let keys: HashSet<&String> = fs.iter().map(|f| &f.canonical_key).collect();
            assert_eq!(keys.len(), fs.len());
            for f in &fs {
                assert_eq!(CandidateForest::from_forest(f.forest.clone()).canonical_key, f.canonical_key);
            }
        }
    }
}
