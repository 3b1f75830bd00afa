use crate::error::{Error, Result};
use crate::graph::Graph;

/// Endpoints of a greedy maximal matching over `g.edges()` in order.
pub fn approx_vertex_cover(g: &Graph) -> Vec<usize> {
    let mut used = vec![false; g.vertex_count()];
    for &(u, v) in g.edges() {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
        }
    }
    (0..g.vertex_count()).filter(|&v| used[v]).collect()
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    /// Removed vertices (original ids) in removal order.
    pub removed: Vec<usize>,
    /// `kept[i]` is the original id of vertex `i` of `graph`.
    pub kept: Vec<usize>,
    /// Independent-side vertices remaining after the reduction.
    pub independent_left: usize,
}

/// Largest antichain size the remaining independent side may have: `2^t / sqrt(t)`.
pub fn sperner_bound(t: usize) -> f64 {
    2f64.powi(t as i32) / (t as f64).sqrt()
}

/// Removes an independent-side vertex `x` whenever another independent-side `y`
/// has `N(x) ⊆ N(y)`; on equal neighbourhoods the lower id goes.
pub fn reduce_dominated(g: &Graph, cover: &[usize]) -> Result<Reduction> {
    let n = g.vertex_count();
    let mut in_cover = vec![false; n];
    for &c in cover {
        if c >= n {
            return Err(Error::contract(format!("cover vertex {c} is out of range")));
        }
        in_cover[c] = true;
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| !in_cover[u] && !in_cover[v]) {
        return Err(Error::contract(format!("edge {u}-{v} is not covered")));
    }
    let t = in_cover.iter().filter(|&&c| c).count();
    let indep: Vec<usize> = (0..n).filter(|&v| !in_cover[v]).collect();
    // Neighbourhoods lie inside the cover, so removals never change them and
    // domination is transitive: one pass over the original side reaches the fixpoint.
    let subset = |x: usize, y: usize| {
        let ny = g.neighbors(y);
        g.neighbors(x).iter().all(|w| ny.binary_search(w).is_ok())
    };
    let removed: Vec<usize> = indep
        .iter()
        .copied()
        .filter(|&x| {
            indep.iter().any(|&y| {
                y != x && subset(x, y) && (g.degree(x) < g.degree(y) || x < y)
            })
        })
        .collect();
    let mut gone = vec![false; n];
    for &x in &removed {
        gone[x] = true;
    }
    let kept: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
    let independent_left = indep.len() - removed.len();
    if t >= 2 && independent_left as f64 > sperner_bound(t) {
        return Err(Error::Internal(format!(
            "{independent_left} independent vertices survive with a cover of {t}"
        )));
    }
    Ok(Reduction {
        graph: g.induced(&kept),
        removed,
        kept,
        independent_left,
    })
}
