//! Unlabelled trees as canonical level sequences.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const FREE_TREE_CAP: usize = 16;

/// Level sequence of a rooted tree in preorder; the root has level 0.
pub type LevelSeq = Vec<u8>;

/// Tree with parent of vertex `i` being the last earlier vertex one level up.
pub fn tree_from_levels(levels: &[u8]) -> Graph {
    let mut edges = Vec::new();
    let mut last_at = Vec::<usize>::new();
    for (i, &l) in levels.iter().enumerate() {
        let l = l as usize;
        last_at.truncate(l);
        if l > 0 {
            edges.push((last_at[l - 1], i));
        }
        last_at.push(i);
    }
    Graph::new(levels.len(), edges).expect("level sequence describes a tree")
}

/// Lexicographically largest level sequence of `t` rooted at `root`.
pub fn rooted_key(t: &Graph, root: usize) -> LevelSeq {
    fn walk(t: &Graph, v: usize, parent: usize, depth: u8) -> LevelSeq {
        let mut kids: Vec<LevelSeq> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| walk(t, w, v, depth + 1))
            .collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![depth];
        for k in kids {
            out.extend(k);
        }
        out
    }
    walk(t, root, usize::MAX, 0)
}

/// Vertices minimising the largest component left after their removal.
pub fn centroids(t: &Graph) -> Vec<usize> {
    let n = t.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &w in t.neighbors(v) {
            if w != parent[v] {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let heaviest = |v: usize| {
        let below = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent[v])
            .map(|&w| size[w])
            .max()
            .unwrap_or(0);
        below.max(n - size[v])
    };
    let best = (0..n).map(heaviest).min().unwrap();
    (0..n).filter(|&v| heaviest(v) == best).collect()
}

/// Isomorphism-invariant key of a tree: centroid-rooted canonical level
/// sequence, the larger one when there are two centroids.
pub fn tree_key(t: &Graph) -> LevelSeq {
    centroids(t).into_iter().map(|c| rooted_key(t, c)).max().unwrap_or_default()
}

/// Successor of a canonical rooted level sequence, or `None` after the star.
fn next_rooted(l: &mut [u8]) -> bool {
    let Some(p) = l.iter().rposition(|&x| x > 1) else {
        return false;
    };
    let q = l[..p].iter().rposition(|&x| x == l[p] - 1).unwrap();
    for i in p..l.len() {
        l[i] = l[i - (p - q)];
    }
    true
}

/// Every rooted tree on `s` vertices as its canonical level sequence.
pub fn rooted_trees(s: usize) -> Vec<LevelSeq> {
    if s == 0 {
        return Vec::new();
    }
    let mut l: LevelSeq = (0..s as u8).collect();
    let mut out = vec![l.clone()];
    while next_rooted(&mut l) {
        out.push(l.clone());
    }
    out
}

/// One level sequence per unlabelled tree on `s` vertices, in decreasing order.
pub fn free_tree_keys(s: usize) -> Result<Vec<LevelSeq>> {
    if s == 0 || s > FREE_TREE_CAP {
        return Err(Error::Resource {
            what: "free tree size",
            limit: FREE_TREE_CAP,
            hint: None,
        });
    }
    Ok(rooted_trees(s)
        .into_iter()
        .filter(|l| tree_key(&tree_from_levels(l)) == *l)
        .collect())
}

pub fn free_trees(s: usize) -> Result<Vec<Graph>> {
    Ok(free_tree_keys(s)?.iter().map(|l| tree_from_levels(l)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_counts() {
        let counts: Vec<usize> = (1..=8).map(|s| rooted_trees(s).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115]);
    }

    #[test]
    fn free_counts() {
        let counts: Vec<usize> = (1..=10).map(|s| free_trees(s).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(free_trees(17).is_err());
    }

    #[test]
    fn keys_ignore_labels() {
        let a = Graph::new(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let b = Graph::new(5, [(4, 3), (3, 2), (2, 1), (3, 0)]).unwrap();
        assert_eq!(tree_key(&a), tree_key(&b));
        assert_ne!(tree_key(&a), tree_key(&Graph::path(5)));
    }

    #[test]
    fn round_trip() {
        for l in free_tree_keys(7).unwrap() {
            assert_eq!(tree_key(&tree_from_levels(&l)), l);
        }
    }
}
