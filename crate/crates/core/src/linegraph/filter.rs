//! Splitting a forest into edge-disjoint paths of length two with distinct middles.

use crate::error::{Error, Result};
use crate::graph::{norm, Graph};
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P3Decomposition {
    /// `(a, b, c)` with `b` in the middle.
    pub paths: Vec<(usize, usize, usize)>,
    pub center_usage: BTreeMap<usize, usize>,
}

impl P3Decomposition {
    fn from_paths(paths: Vec<(usize, usize, usize)>) -> Self {
        let mut center_usage = BTreeMap::new();
        for p in &paths {
            *center_usage.entry(p.1).or_insert(0) += 1;
        }
        P3Decomposition { paths, center_usage }
    }

    /// Exact edge cover of `f` by the paths, and no middle vertex used twice.
    pub fn is_valid_for(&self, f: &Graph) -> bool {
        let mut seen = HashSet::new();
        for &(a, b, c) in &self.paths {
            if a == c || !f.has_edge(a, b) || !f.has_edge(b, c) {
                return false;
            }
            if !seen.insert(norm(a, b)) || !seen.insert(norm(b, c)) {
                return false;
            }
        }
        seen.len() == f.edge_count() && self.center_usage.values().all(|&n| n == 1)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FilterVariant {
    /// Deepest leaf first, with middle-vertex tracking.
    #[default]
    Tracked,
    /// Lowest-numbered leaf first, no tracking.
    Literal,
}

pub fn p3_filter(f: &Graph) -> Option<P3Decomposition> {
    p3_filter_with(f, FilterVariant::Tracked)
}

struct Rooted {
    parent: Vec<usize>,
    depth: Vec<usize>,
    alive: HashSet<(usize, usize)>,
    deg: Vec<usize>,
}

impl Rooted {
    fn new(f: &Graph) -> Self {
        let n = f.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0; n];
        for comp in f.components() {
            let mut stack = vec![comp[0]];
            while let Some(v) = stack.pop() {
                for &w in f.neighbors(v) {
                    if w != parent[v] {
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        stack.push(w);
                    }
                }
            }
        }
        Rooted {
            parent,
            depth,
            alive: f.edges().iter().copied().collect(),
            deg: (0..n).map(|v| f.degree(v)).collect(),
        }
    }

    fn live(&self, u: usize, v: usize) -> bool {
        self.alive.contains(&norm(u, v))
    }

    fn cut(&mut self, u: usize, v: usize) {
        self.alive.remove(&norm(u, v));
        self.deg[u] -= 1;
        self.deg[v] -= 1;
    }

    fn live_neighbors<'a>(&'a self, f: &'a Graph, v: usize) -> impl Iterator<Item = usize> + 'a {
        f.neighbors(v).iter().copied().filter(move |&w| self.live(v, w))
    }
}

pub fn p3_filter_with(f: &Graph, variant: FilterVariant) -> Option<P3Decomposition> {
    let mut r = Rooted::new(f);
    let mut paths = Vec::new();
    let mut centers = vec![0usize; f.vertex_count()];
    while !r.alive.is_empty() {
        let (x, c) = match variant {
            FilterVariant::Tracked => {
                let x = (0..f.vertex_count()).filter(|&v| r.deg[v] > 0).max_by_key(|&v| (r.depth[v], v))?;
                (x, r.parent[x])
            }
            FilterVariant::Literal => {
                let x = (0..f.vertex_count()).find(|&v| r.deg[v] == 1)?;
                (x, r.live_neighbors(f, x).next()?)
            }
        };
        let pendant: Vec<usize> = match variant {
            FilterVariant::Tracked => r.live_neighbors(f, c).filter(|&w| r.parent[w] == c).collect(),
            FilterVariant::Literal => r.live_neighbors(f, c).filter(|&w| r.deg[w] == 1).collect(),
        };
        let path = match pendant.len() {
            0 => return None,
            1 => {
                let p = r.parent[c];
                if p == usize::MAX || p == x || !r.live(c, p) {
                    return None;
                }
                (x, c, p)
            }
            2 => (pendant[0], c, pendant[1]),
            _ => return None,
        };
        if variant == FilterVariant::Tracked {
            centers[c] += 1;
            if centers[c] > 1 {
                return None;
            }
        }
        r.cut(path.0, path.1);
        r.cut(path.1, path.2);
        paths.push(path);
    }
    Some(P3Decomposition::from_paths(paths))
}

pub const ORACLE_EDGE_CAP: usize = 20;

/// Exhaustive search: the lowest uncovered edge joins a path through either endpoint.
pub fn p3_filter_oracle(f: &Graph) -> Result<Option<P3Decomposition>> {
    if f.edge_count() > ORACLE_EDGE_CAP {
        return Err(Error::Resource {
            what: "forest edge count",
            limit: ORACLE_EDGE_CAP,
            hint: None,
        });
    }
    let mut used = vec![false; f.edge_count()];
    let mut centered = vec![false; f.vertex_count()];
    let mut paths = Vec::new();
    Ok(oracle(f, &mut used, &mut centered, &mut paths).then(|| P3Decomposition::from_paths(paths)))
}

fn oracle(f: &Graph, used: &mut [bool], centered: &mut [bool], paths: &mut Vec<(usize, usize, usize)>) -> bool {
    let Some(e) = used.iter().position(|&u| !u) else {
        return true;
    };
    let (u, v) = f.edges()[e];
    for (mid, end) in [(u, v), (v, u)] {
        if centered[mid] {
            continue;
        }
        for &w in f.neighbors(mid) {
            let e2 = f.edge_index(mid, w).unwrap();
            if w == end || used[e2] {
                continue;
            }
            used[e] = true;
            used[e2] = true;
            centered[mid] = true;
            paths.push((end, mid, w));
            if oracle(f, used, centered, paths) {
                return true;
            }
            paths.pop();
            used[e] = false;
            used[e2] = false;
            centered[mid] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spider() -> Graph {
        Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn star_rejected() {
        assert!(p3_filter(&Graph::star(4)).is_none());
        assert!(p3_filter_oracle(&Graph::star(4)).unwrap().is_none());
    }

    #[test]
    fn path_accepted() {
        let p5 = Graph::path(5);
        let d = p3_filter(&p5).unwrap();
        assert!(d.is_valid_for(&p5));
        let mut centers: Vec<usize> = d.paths.iter().map(|p| p.1).collect();
        centers.sort();
        assert_eq!(centers, vec![1, 3]);
    }

    #[test]
    fn spider_legs() {
        let s = spider();
        let d = p3_filter(&s).unwrap();
        assert!(d.is_valid_for(&s));
        let mut centers: Vec<usize> = d.paths.iter().map(|p| p.1).collect();
        centers.sort();
        assert_eq!(centers, vec![1, 3, 5]);
        assert!(p3_filter_oracle(&s).unwrap().unwrap().is_valid_for(&s));
    }

    #[test]
    fn oracle_on_p3() {
        let d = p3_filter_oracle(&Graph::path(3)).unwrap().unwrap();
        assert_eq!(d.paths.len(), 1);
        assert_eq!(d.paths[0].1, 1);
    }

    #[test]
    fn oracle_edge_cap() {
        assert!(p3_filter_oracle(&Graph::path(22)).is_err());
    }
}
