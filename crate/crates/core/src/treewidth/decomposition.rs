//! Tree decompositions: min-fill construction, validation and the `.td` format.
//!
//! ```text
//! c comment
//! s td <bags> <max bag size> <vertices>
//! b <bag id> <v> ...      (bag ids from 1, vertex ids from 0 as in graph files)
//! <bag id> <bag id>       (tree edges)
//! ```

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeSet;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted vertex sets.
    pub bags: Vec<Vec<usize>>,
    /// Tree edges between bag indices.
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one; `-1` is reported as 0.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks that the bags form a tree that covers every vertex and edge, and
    /// that the bags holding any one vertex are connected.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let k = self.bags.len();
        if k == 0 {
            return Err(Error::contract("decomposition has no bags"));
        }
        if self.edges.len() != k - 1 {
            return Err(Error::contract(format!("{} bags joined by {} tree edges", k, self.edges.len())));
        }
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| a >= k || b >= k || a == b) {
            return Err(Error::contract(format!("bad tree edge {a}-{b}")));
        }
        let adj = self.adjacency();
        if reach(&adj, 0, |_| true).len() != k {
            return Err(Error::contract("bags do not form a connected tree"));
        }
        let n = g.vertex_count();
        let mut holders = vec![Vec::new(); n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return Err(Error::contract(format!("bag {} holds unknown vertex {v}", i + 1)));
                }
                holders[v].push(i);
            }
        }
        if let Some(v) = (0..n).find(|&v| holders[v].is_empty()) {
            return Err(Error::contract(format!("coverage: vertex {v} is in no bag")));
        }
        for &(u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok()) {
                return Err(Error::contract(format!("edge coverage: no bag holds both {u} and {v}")));
            }
        }
        for v in 0..n {
            let inside = |i: usize| self.bags[i].binary_search(&v).is_ok();
            if reach(&adj, holders[v][0], inside).len() != holders[v].len() {
                return Err(Error::contract(format!("connectivity: bags holding vertex {v} are not connected")));
            }
        }
        Ok(())
    }
}

fn reach(adj: &[Vec<usize>], start: usize, inside: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        let a = out[i];
        i += 1;
        for &b in &adj[a] {
            if !seen[b] && inside(b) {
                seen[b] = true;
                out.push(b);
            }
        }
    }
    out
}

/// Elimination order chosen greedily by fewest fill edges, then lowest degree,
/// then lowest id.
pub fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let fill = |v: usize| {
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut missing = 0;
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if !adj[nb[i]].contains(&nb[j]) {
                        missing += 1;
                    }
                }
            }
            missing
        };
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (fill(v), adj[v].len(), v)).unwrap();
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &a in &nb {
            adj[a].remove(&v);
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        adj[v].clear();
        alive[v] = false;
        order.push(v);
    }
    order
}

/// Tree decomposition from an elimination order: one bag per vertex holding it
/// and its later neighbours in the filled graph.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.vertex_count();
    if n == 0 {
        return TreeDecomposition {
            bags: vec![Vec::new()],
            edges: Vec::new(),
        };
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&w| pos[w] > i).collect();
        for &a in &later {
            for &b in &later {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        if let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) {
            parent[i] = pos[p];
        }
        let mut bag = later;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    let mut edges = Vec::new();
    let mut last_root = None;
    for i in 0..n {
        if parent[i] != usize::MAX {
            edges.push((i, parent[i]));
        } else {
            if let Some(r) = last_root {
                edges.push((r, i));
            }
            last_root = Some(i);
        }
    }
    TreeDecomposition { bags, edges }
}

pub fn heuristic_tree_decomposition(g: &Graph) -> TreeDecomposition {
    decomposition_from_order(g, &min_fill_order(g))
}

pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_ascii_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::parse(no, format!("`{t}` is not a number")));
        match toks[0] {
            "s" => {
                if header.is_some() {
                    return Err(Error::parse(no, "second `s td` line"));
                }
                let ["s", "td", b, w, n] = toks.as_slice() else {
                    return Err(Error::parse(no, "header must be `s td <bags> <max bag> <vertices>`"));
                };
                let h = (num(b)?, num(w)?, num(n)?);
                bags = vec![None; h.0];
                header = Some(h);
            }
            "b" => {
                let Some((nb, _, n)) = header else {
                    return Err(Error::parse(no, "bag before header"));
                };
                let id = num(toks.get(1).ok_or_else(|| Error::parse(no, "missing bag id"))?)?;
                if id == 0 || id > nb {
                    return Err(Error::parse(no, format!("bag id {id} outside 1..={nb}")));
                }
                let mut bag = toks[2..].iter().map(|t| num(t)).collect::<Result<Vec<_>>>()?;
                if let Some(&v) = bag.iter().find(|&&v| v >= n) {
                    return Err(Error::parse(no, format!("vertex {v} outside 0..{n}")));
                }
                bag.sort_unstable();
                bag.dedup();
                if bags[id - 1].replace(bag).is_some() {
                    return Err(Error::parse(no, format!("bag {id} listed twice")));
                }
            }
            _ => {
                let Some((nb, _, _)) = header else {
                    return Err(Error::parse(no, "tree edge before header"));
                };
                let [a, b] = toks.as_slice() else {
                    return Err(Error::parse(no, "tree edge must be `<bag> <bag>`"));
                };
                let (a, b) = (num(a)?, num(b)?);
                if a == 0 || b == 0 || a > nb || b > nb {
                    return Err(Error::parse(no, format!("tree edge {a} {b} names a missing bag")));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let Some((_, width, _)) = header else {
        return Err(Error::parse(1, "missing `s td` header"));
    };
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(0, format!("bag {} never listed", i + 1))))
        .collect::<Result<_>>()?;
    let td = TreeDecomposition { bags, edges };
    if td.bags.iter().map(Vec::len).max().unwrap_or(0) > width {
        return Err(Error::parse(1, "a bag exceeds the announced size"));
    }
    Ok(td)
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    let max = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    writeln!(out, "s td {} {} {}", td.bags.len(), max, n).unwrap();
    for (i, b) in td.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in b {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}
