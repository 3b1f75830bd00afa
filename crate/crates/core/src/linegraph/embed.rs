//! Finding a forest as a (not necessarily induced) subgraph of a host graph.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// `map[a]` is the host vertex of forest vertex `a`.
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn is_valid(&self, f: &Graph, h: &Graph) -> bool {
        if self.map.len() != f.vertex_count() || self.map.iter().any(|&x| x >= h.vertex_count()) {
            return false;
        }
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.map.len() && f.edges().iter().all(|&(a, b)| h.has_edge(self.map[a], self.map[b]))
    }
}

/// Cheap necessary conditions: counts, and every forest degree can be matched
/// to a distinct host vertex of at least that degree.
pub fn may_embed(f: &Graph, h: &Graph) -> bool {
    if f.vertex_count() > h.vertex_count() || f.edge_count() > h.edge_count() {
        return false;
    }
    let mut df: Vec<usize> = (0..f.vertex_count()).map(|v| f.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.vertex_count()).map(|v| h.degree(v)).collect();
    df.sort_unstable_by(|a, b| b.cmp(a));
    dh.sort_unstable_by(|a, b| b.cmp(a));
    df.iter().zip(&dh).all(|(a, b)| a <= b)
}

/// `⌈e^k · ln(1/δ)⌉`.
pub fn trial_count(k: usize, delta: f64) -> u64 {
    ((k as f64).exp() * (1.0 / delta).ln()).ceil() as u64
}

pub fn coloring(n: usize, k: usize, seed: u64, trial: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial));
    (0..n).map(|_| rng.gen_range(0..k) as u8).collect()
}

/// Colourful-subtree dynamic program for one forest, reusable across colourings.
pub struct ColorfulDp<'a> {
    f: &'a Graph,
    h: &'a Graph,
    roots: Vec<usize>,
    /// Forest vertices with children before parents.
    post: Vec<usize>,
    children: Vec<Vec<usize>>,
}

struct Tables {
    /// Sorted colour sets per (forest vertex, host vertex).
    sets: Vec<Vec<Vec<u32>>>,
    /// Colour sets after each prefix of children, for reconstruction.
    partial: Vec<Vec<Vec<Vec<u32>>>>,
}

impl<'a> ColorfulDp<'a> {
    pub fn new(f: &'a Graph, h: &'a Graph) -> Self {
        let n = f.vertex_count();
        let mut children = vec![Vec::new(); n];
        let mut roots = Vec::new();
        let mut post = Vec::with_capacity(n);
        for comp in f.components() {
            let r = comp[0];
            roots.push(r);
            let mut order = vec![r];
            let mut parent = vec![usize::MAX; n];
            let mut i = 0;
            while i < order.len() {
                let v = order[i];
                i += 1;
                for &w in f.neighbors(v) {
                    if w != parent[v] {
                        parent[w] = v;
                        children[v].push(w);
                        order.push(w);
                    }
                }
            }
            post.extend(order.into_iter().rev());
        }
        ColorfulDp {
            f,
            h,
            roots,
            post,
            children,
        }
    }

    /// A colourful embedding under `colors`, if any.
    pub fn run(&self, colors: &[u8]) -> Option<Embedding> {
        let k = self.f.vertex_count();
        if k == 0 {
            return Some(Embedding { map: Vec::new() });
        }
        let hn = self.h.vertex_count();
        let mut stamp = vec![0u32; 1 << k];
        let mut epoch = 0u32;
        let mut dedup = |list: &mut Vec<u32>| {
            epoch += 1;
            list.retain(|&s| std::mem::replace(&mut stamp[s as usize], epoch) != epoch);
            list.sort_unstable();
        };
        let mut t = Tables {
            sets: vec![vec![Vec::new(); hn]; k],
            partial: vec![vec![Vec::new(); hn]; k],
        };
        for &a in &self.post {
            for x in 0..hn {
                let mut cur = vec![1u32 << colors[x]];
                let mut steps = vec![cur.clone()];
                for &b in &self.children[a] {
                    let mut cand: Vec<u32> = self.h.neighbors(x).iter().flat_map(|&y| t.sets[b][y].iter().copied()).collect();
                    dedup(&mut cand);
                    let mut next: Vec<u32> = cur
                        .iter()
                        .flat_map(|&s| cand.iter().filter(move |&&c| s & c == 0).map(move |&c| s | c))
                        .collect();
                    dedup(&mut next);
                    cur = next;
                    steps.push(cur.clone());
                    if cur.is_empty() {
                        break;
                    }
                }
                t.sets[a][x] = cur;
                t.partial[a][x] = steps;
            }
        }
        // Combine trees with pairwise disjoint colour sets.
        let mut acc: Vec<Vec<u32>> = vec![vec![0]];
        for &r in &self.roots {
            let mut at_root: Vec<u32> = (0..hn).flat_map(|x| t.sets[r][x].iter().copied()).collect();
            dedup(&mut at_root);
            let prev = acc.last().unwrap();
            let mut next: Vec<u32> = prev
                .iter()
                .flat_map(|&s| at_root.iter().filter(move |&&c| s & c == 0).map(move |&c| s | c))
                .collect();
            dedup(&mut next);
            if next.is_empty() {
                return None;
            }
            acc.push(next);
        }
        let mut map = vec![usize::MAX; k];
        let mut mask = acc.last().unwrap()[0];
        for (i, &r) in self.roots.iter().enumerate().rev() {
            let (a, x, s) = acc[i]
                .iter()
                .filter(|&&p| p & mask == p)
                .find_map(|&p| {
                    let s = mask & !p;
                    (0..hn).find(|&x| t.sets[r][x].binary_search(&s).is_ok()).map(|x| (p, x, s))
                })
                .expect("combined set decomposes");
            self.place(&t, r, x, s, &mut map);
            mask = a;
        }
        let emb = Embedding { map };
        emb.is_valid(self.f, self.h).then_some(emb)
    }

    fn place(&self, t: &Tables, a: usize, x: usize, mut s: u32, map: &mut [usize]) {
        map[a] = x;
        let steps = &t.partial[a][x];
        for (j, &b) in self.children[a].iter().enumerate().rev() {
            let (prev, y, rest) = steps[j]
                .iter()
                .filter(|&&p| p & s == p)
                .find_map(|&p| {
                    let rest = s & !p;
                    self.h
                        .neighbors(x)
                        .iter()
                        .find(|&&y| t.sets[b][y].binary_search(&rest).is_ok())
                        .map(|&y| (p, y, rest))
                })
                .expect("partial set decomposes");
            self.place(t, b, y, rest, map);
            s = prev;
        }
    }
}

/// Randomised colour coding with `⌈e^k · ln(1/δ)⌉` trials, trial `i` seeded by
/// `seed + i`. The lowest successful trial wins, so serial and parallel runs agree.
pub fn color_coding_embed(f: &Graph, h: &Graph, delta: f64, seed: u64) -> Result<Option<Embedding>> {
    Ok(color_coding_embed_counted(f, h, delta, seed)?.0)
}

/// Like [`color_coding_embed`], also returning the number of trials run.
pub fn color_coding_embed_counted(f: &Graph, h: &Graph, delta: f64, seed: u64) -> Result<(Option<Embedding>, u64)> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::contract(format!("failure probability {delta} is outside (0, 1)")));
    }
    let k = f.vertex_count();
    if k > 24 {
        return Err(Error::Resource {
            what: "forest size for colour coding",
            limit: 24,
            hint: None,
        });
    }
    if !may_embed(f, h) {
        return Ok((None, 0));
    }
    let dp = ColorfulDp::new(f, h);
    let trials = trial_count(k, delta);
    let found = (0..trials)
        .into_par_iter()
        .find_map_first(|i| dp.run(&coloring(h.vertex_count(), k, seed, i)).map(|e| (i, e)));
    Ok(match found {
        Some((i, e)) => (Some(e), i + 1),
        None => (None, trials),
    })
}

/// Exact subgraph search by backtracking with degree pruning.
pub fn embed_backtrack(f: &Graph, h: &Graph) -> Result<Option<Embedding>> {
    if h.vertex_count() > 14 && f.vertex_count() > 8 {
        return Err(Error::Resource {
            what: "backtracking embedding size",
            limit: 14,
            hint: Some("host must have at most 14 vertices or the forest at most 8"),
        });
    }
    if !may_embed(f, h) {
        return Ok(None);
    }
    let n = f.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    for comp in f.components() {
        let start = order.len();
        order.push(comp[0]);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in f.neighbors(v) {
                if w != parent[v] {
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; h.vertex_count()];
    let ok = backtrack(f, h, &order, &parent, 0, &mut map, &mut used);
    Ok(ok.then_some(Embedding { map }))
}

fn backtrack(
    f: &Graph,
    h: &Graph,
    order: &[usize],
    parent: &[usize],
    i: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&a) = order.get(i) else {
        return true;
    };
    let cands: Vec<usize> = if parent[a] == usize::MAX {
        (0..h.vertex_count()).collect()
    } else {
        h.neighbors(map[parent[a]]).to_vec()
    };
    for x in cands {
        if used[x] || h.degree(x) < f.degree(a) {
            continue;
        }
        used[x] = true;
        map[a] = x;
        if backtrack(f, h, order, parent, i + 1, map, used) {
            return true;
        }
        used[x] = false;
        map[a] = usize::MAX;
    }
    false
}
