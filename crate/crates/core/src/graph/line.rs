//! Line graphs and root-graph recognition by Krausz clique partitions.

use super::{Edge, Graph};
use crate::error::{Error, Result};
use std::collections::HashSet;

/// `L(H)` together with the edge of `H` behind each of its vertices.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// `host_edge[i]` is the edge of `H` represented by vertex `i`.
    pub host_edge: Vec<Edge>,
}

/// Vertex `i` of `L(H)` is edge `H.edges()[i]`. Isolated vertices of `H` are ignored.
pub fn line_graph(h: &Graph) -> LineGraph {
    let host_edge = h.edges().to_vec();
    let mut edges = Vec::new();
    for v in 0..h.vertex_count() {
        let inc: Vec<usize> = h
            .neighbors(v)
            .iter()
            .map(|&w| h.edge_index(v, w).unwrap())
            .collect();
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                edges.push((inc[i], inc[j]));
            }
        }
    }
    // Two distinct edges of a simple graph share at most one endpoint.
    let graph = Graph::new(host_edge.len(), edges).expect("line graph is simple");
    LineGraph { graph, host_edge }
}

/// A graph `H` with `L(H)` equal to the input under an explicit correspondence.
#[derive(Clone, Debug)]
pub struct RootGraph {
    pub root: Graph,
    /// `edge_of[v]` is the edge of `root` represented by input vertex `v`.
    pub edge_of: Vec<Edge>,
}

pub const ROOT_GRAPH_VERTEX_CAP: usize = 5_000;

/// Finds a root graph of the connected graph `g`, or `None` if `g` is not a line graph.
pub fn root_graph(g: &Graph) -> Result<Option<RootGraph>> {
    if g.vertex_count() > ROOT_GRAPH_VERTEX_CAP {
        return Err(Error::Resource {
            what: "root graph input",
            limit: ROOT_GRAPH_VERTEX_CAP,
            hint: None,
        });
    }
    if !g.is_connected() {
        return Err(Error::contract(
            "root graph recognition needs a connected graph; split into components first",
        ));
    }
    let mut search = Krausz::new(g);
    let Some(cliques) = search.solve(KrauszState::new(g)) else {
        return Ok(None);
    };
    let rg = assemble(g, &cliques);
    if !is_line_graph_of(g, &rg) {
        return Err(Error::Internal("assembled root graph does not reproduce the input".into()));
    }
    Ok(Some(rg))
}

fn assemble(g: &Graph, cliques: &[Vec<usize>]) -> RootGraph {
    let n = g.vertex_count();
    let mut sides: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ci, c) in cliques.iter().enumerate() {
        for &v in c {
            sides[v].push(ci);
        }
    }
    let mut nodes = cliques.len();
    let mut edge_of = Vec::with_capacity(n);
    for s in &mut sides {
        while s.len() < 2 {
            s.push(nodes);
            nodes += 1;
        }
        edge_of.push(super::norm(s[0], s[1]));
    }
    let root = Graph::new(nodes, edge_of.iter().copied()).expect("Krausz partition yields a simple root");
    RootGraph { root, edge_of }
}

/// Checks the correspondence vertex-by-vertex rather than up to isomorphism.
pub(crate) fn is_line_graph_of(g: &Graph, rg: &RootGraph) -> bool {
    let n = g.vertex_count();
    if rg.edge_of.len() != n || rg.root.edge_count() != n {
        return false;
    }
    let share = |a: Edge, b: Edge| a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    (0..n).all(|x| (x + 1..n).all(|y| g.has_edge(x, y) == share(rg.edge_of[x], rg.edge_of[y])))
}

#[derive(Clone)]
struct KrauszState {
    covered: Vec<u64>,
    count: Vec<u8>,
    open_degree: Vec<usize>,
    cliques: Vec<Vec<usize>>,
}

impl KrauszState {
    fn new(g: &Graph) -> Self {
        KrauszState {
            covered: vec![0; g.edge_count().div_ceil(64)],
            count: vec![0; g.vertex_count()],
            open_degree: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
            cliques: Vec::new(),
        }
    }

    fn is_covered(&self, e: usize) -> bool {
        self.covered[e / 64] >> (e % 64) & 1 == 1
    }
}

struct Krausz<'g> {
    g: &'g Graph,
    failed: HashSet<(Vec<u64>, Vec<u8>)>,
}

impl<'g> Krausz<'g> {
    fn new(g: &'g Graph) -> Self {
        Krausz {
            g,
            failed: HashSet::new(),
        }
    }

    fn open_neighbors(&self, s: &KrauszState, u: usize) -> Vec<usize> {
        self.g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| !s.is_covered(self.g.edge_index(u, w).unwrap()))
            .collect()
    }

    /// Adds clique `q` if all its edges are open and no member exceeds two cliques.
    fn add_clique(&self, s: &mut KrauszState, q: Vec<usize>) -> bool {
        if q.iter().any(|&v| s.count[v] >= 2) {
            return false;
        }
        for i in 0..q.len() {
            for j in i + 1..q.len() {
                match self.g.edge_index(q[i], q[j]) {
                    Some(e) if !s.is_covered(e) => {}
                    _ => return false,
                }
            }
        }
        for i in 0..q.len() {
            for j in i + 1..q.len() {
                let e = self.g.edge_index(q[i], q[j]).unwrap();
                s.covered[e / 64] |= 1 << (e % 64);
                s.open_degree[q[i]] -= 1;
                s.open_degree[q[j]] -= 1;
            }
        }
        for &v in &q {
            s.count[v] += 1;
        }
        s.cliques.push(q);
        true
    }

    /// Applies forced cliques; `false` on contradiction.
    fn propagate(&self, s: &mut KrauszState) -> bool {
        loop {
            let mut forced = None;
            for v in 0..s.count.len() {
                if s.open_degree[v] == 0 {
                    continue;
                }
                match s.count[v] {
                    2 => return false,
                    1 => {
                        forced = Some(v);
                        break;
                    }
                    _ => {}
                }
            }
            let Some(u) = forced else { return true };
            let mut q = self.open_neighbors(s, u);
            q.push(u);
            q.sort_unstable();
            if !self.add_clique(s, q) {
                return false;
            }
        }
    }

    fn solve(&mut self, mut s: KrauszState) -> Option<Vec<Vec<usize>>> {
        if !self.propagate(&mut s) {
            return None;
        }
        let Some(u) = (0..s.count.len()).find(|&v| s.open_degree[v] > 0) else {
            return Some(s.cliques);
        };
        let key = (s.covered.clone(), s.count.clone());
        if self.failed.contains(&key) {
            return None;
        }
        // u has no clique yet; branch on the clique holding its first open edge.
        let open = self.open_neighbors(&s, u);
        let v = open[0];
        let pool: Vec<usize> = open[1..]
            .iter()
            .copied()
            .filter(|&w| self.g.has_edge(v, w) && s.count[w] < 2)
            .filter(|&w| !s.is_covered(self.g.edge_index(v, w).unwrap()))
            .collect();
        let mut extensions = Vec::new();
        cliques_within(self.g, &pool, &mut Vec::new(), 0, &mut extensions);
        extensions.sort_by_key(|c| std::cmp::Reverse(c.len()));
        for ext in extensions {
            let mut next = s.clone();
            let mut q = ext;
            q.push(u);
            q.push(v);
            q.sort_unstable();
            if self.add_clique(&mut next, q) {
                if let Some(found) = self.solve(next) {
                    return Some(found);
                }
            }
        }
        self.failed.insert(key);
        None
    }
}

/// All cliques (including the empty one) among `pool[from..]` extending `cur`.
fn cliques_within(g: &Graph, pool: &[usize], cur: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
    out.push(cur.clone());
    for i in from..pool.len() {
        let w = pool[i];
        if cur.iter().all(|&c| g.has_edge(c, w)) {
            cur.push(w);
            cliques_within(g, pool, cur, i + 1, out);
            cur.pop();
        }
    }
}
