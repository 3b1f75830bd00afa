//! Nice tree decompositions with one introduce-edge node per edge, placed
//! directly below the forget node of the endpoint that leaves first.

use super::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{norm, Graph};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Leaf,
    IntroduceVertex(usize),
    IntroduceEdge(usize, usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug, Serialize)]
pub struct NiceNode {
    pub kind: NodeKind,
    /// Sorted.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Nodes are stored children-first; the last node is the root.
#[derive(Clone, Debug, Serialize)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn parents(&self) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.nodes.len()];
        for (i, n) in self.nodes.iter().enumerate() {
            for &c in &n.children {
                parent[c] = i;
            }
        }
        parent
    }
}

struct Builder<'g> {
    g: &'g Graph,
    nodes: Vec<NiceNode>,
    introduced: Vec<bool>,
}

impl Builder<'_> {
    fn push(&mut self, kind: NodeKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    fn introduce(&mut self, top: usize, v: usize) -> usize {
        let mut bag = self.nodes[top].bag.clone();
        let at = bag.binary_search(&v).unwrap_err();
        bag.insert(at, v);
        self.push(NodeKind::IntroduceVertex(v), bag, vec![top])
    }

    /// Introduces the pending edges of `v` inside the current bag, then forgets `v`.
    fn forget(&mut self, mut top: usize, v: usize) -> usize {
        let bag = self.nodes[top].bag.clone();
        for &w in &bag {
            if w == v || !self.g.has_edge(v, w) {
                continue;
            }
            let e = self.g.edge_index(v, w).unwrap();
            if !self.introduced[e] {
                self.introduced[e] = true;
                let (a, b) = norm(v, w);
                top = self.push(NodeKind::IntroduceEdge(a, b), bag.clone(), vec![top]);
            }
        }
        let rest: Vec<usize> = bag.into_iter().filter(|&w| w != v).collect();
        self.push(NodeKind::Forget(v), rest, vec![top])
    }

    /// Moves from the bag at `top` to `target` by forgetting, then introducing.
    fn reshape(&mut self, mut top: usize, target: &[usize]) -> usize {
        let cur = self.nodes[top].bag.clone();
        for &v in cur.iter().filter(|v| target.binary_search(v).is_err()) {
            top = self.forget(top, v);
        }
        for &v in target.iter().filter(|v| cur.binary_search(v).is_err()) {
            top = self.introduce(top, v);
        }
        top
    }

    fn build(&mut self, td: &TreeDecomposition, adj: &[Vec<usize>], t: usize, parent: usize) -> usize {
        let target = &td.bags[t];
        let kids: Vec<usize> = adj[t].iter().copied().filter(|&c| c != parent).collect();
        let mut tops: Vec<usize> = Vec::new();
        for c in kids {
            let below = self.build(td, adj, c, t);
            tops.push(self.reshape(below, target));
        }
        if tops.is_empty() {
            let leaf = self.push(NodeKind::Leaf, Vec::new(), Vec::new());
            tops.push(self.reshape(leaf, target));
        }
        let mut acc = tops[0];
        for &other in &tops[1..] {
            acc = self.push(NodeKind::Join, target.clone(), vec![acc, other]);
        }
        acc
    }
}

/// Converts a valid decomposition of `g` into a nice one rooted at bag 0.
pub fn to_nice(td: &TreeDecomposition, g: &Graph) -> Result<NiceTreeDecomposition> {
    td.validate(g)?;
    let mut b = Builder {
        g,
        nodes: Vec::new(),
        introduced: vec![false; g.edge_count()],
    };
    let adj = td.adjacency();
    let top = b.build(td, &adj, 0, usize::MAX);
    let root = b.reshape(top, &[]);
    debug_assert_eq!(root, b.nodes.len() - 1);
    Ok(NiceTreeDecomposition { nodes: b.nodes })
}

fn sub(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

/// Structural audit of a nice decomposition against `g`.
pub fn validate_nice(ntd: &NiceTreeDecomposition, g: &Graph) -> Result<()> {
    let bad = |i: usize, msg: String| Err(Error::contract(format!("node {i}: {msg}")));
    let nodes = &ntd.nodes;
    if nodes.is_empty() {
        return Err(Error::contract("empty decomposition"));
    }
    let root = ntd.root();
    if !nodes[root].bag.is_empty() {
        return bad(root, "root bag is not empty".into());
    }
    let parent = ntd.parents();
    if (0..root).any(|i| parent[i] == usize::MAX || parent[i] <= i) {
        return Err(Error::contract("nodes are not a single tree stored children-first"));
    }
    let mut edge_seen = vec![0usize; g.edge_count()];
    for (i, n) in nodes.iter().enumerate() {
        if n.bag.windows(2).any(|w| w[0] >= w[1]) {
            return bad(i, "bag is not sorted".into());
        }
        let child = |j: usize| &nodes[n.children[j]].bag;
        match n.kind {
            NodeKind::Leaf => {
                if !n.children.is_empty() || !n.bag.is_empty() {
                    return bad(i, "leaf must be childless with an empty bag".into());
                }
            }
            NodeKind::IntroduceVertex(v) => {
                if n.children.len() != 1 || child(0).contains(&v) || sub(&n.bag, child(0)) != vec![v] || !sub(child(0), &n.bag).is_empty() {
                    return bad(i, format!("introduce {v} does not add exactly {v}"));
                }
            }
            NodeKind::IntroduceEdge(u, v) => {
                if n.children.len() != 1 || *child(0) != n.bag {
                    return bad(i, "introduce-edge must keep its child's bag".into());
                }
                if n.bag.binary_search(&u).is_err() || n.bag.binary_search(&v).is_err() {
                    return bad(i, format!("edge {u}-{v} introduced outside its bag"));
                }
                match g.edge_index(u, v) {
                    Some(e) => edge_seen[e] += 1,
                    None => return bad(i, format!("{u}-{v} is not an edge")),
                }
            }
            NodeKind::Forget(v) => {
                if n.children.len() != 1 || sub(child(0), &n.bag) != vec![v] || !sub(&n.bag, child(0)).is_empty() {
                    return bad(i, format!("forget {v} does not remove exactly {v}"));
                }
            }
            NodeKind::Join => {
                if n.children.len() != 2 || *child(0) != n.bag || *child(1) != n.bag {
                    return bad(i, "join children must share its bag".into());
                }
            }
        }
    }
    if let Some(e) = edge_seen.iter().position(|&c| c != 1) {
        let (u, v) = g.edges()[e];
        return Err(Error::contract(format!("edge {u}-{v} introduced {} times", edge_seen[e])));
    }
    // Every vertex occurs in one connected piece: exactly one top occurrence,
    // and it is the child of that vertex's forget node.
    let n = g.vertex_count();
    let mut tops = vec![0usize; n];
    for (i, node) in nodes.iter().enumerate() {
        for &v in &node.bag {
            if v >= n {
                return bad(i, format!("unknown vertex {v}"));
            }
            let p = parent[i];
            if p == usize::MAX || nodes[p].bag.binary_search(&v).is_err() {
                tops[v] += 1;
            }
        }
    }
    if let Some(v) = tops.iter().position(|&c| c != 1) {
        return Err(Error::contract(format!("vertex {v} has {} separate occurrence regions", tops[v])));
    }
    // Introduce-edge nodes sit in a run directly below a forget of an endpoint.
    for (i, node) in nodes.iter().enumerate() {
        if let NodeKind::IntroduceEdge(u, v) = node.kind {
            let mut p = parent[i];
            while matches!(nodes[p].kind, NodeKind::IntroduceEdge(..)) {
                p = parent[p];
            }
            if nodes[p].kind != NodeKind::Forget(u) && nodes[p].kind != NodeKind::Forget(v) {
                return bad(i, format!("edge {u}-{v} is not introduced as late as possible"));
            }
        }
    }
    // No edge between two vertices of a join bag is introduced below the join.
    for (i, node) in nodes.iter().enumerate() {
        if node.kind != NodeKind::Join {
            continue;
        }
        let mut stack = node.children.clone();
        while let Some(j) = stack.pop() {
            if let NodeKind::IntroduceEdge(u, v) = nodes[j].kind {
                if node.bag.binary_search(&u).is_ok() && node.bag.binary_search(&v).is_ok() {
                    return bad(i, format!("edge {u}-{v} between join-bag vertices is introduced below the join"));
                }
            }
            stack.extend(&nodes[j].children);
        }
    }
    let w = ntd.width();
    let limit = 4 * (w + 1) * n.max(1) + g.edge_count() + 1;
    if nodes.len() > limit {
        return Err(Error::contract(format!("{} nodes exceed the size bound {limit}", nodes.len())));
    }
    Ok(())
}
