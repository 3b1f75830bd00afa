//! Table operations of the tree-decomposition dynamic program.
//!
//! A partial solution below a node is a vertex set `S` of the processed
//! subgraph `G_x` that will end up saturated, and a matching `M` of `G_x[S]`.
//! Bag vertices get colour 0 (outside `S`), 1 (matched by `M`) or 2 (in `S`,
//! matched later). Vertices already forgotten are never colour 2.
//!
//! Besides the colouring, a state keeps the *open-set family*: every bag set
//! `A` such that some matching `N != M` of `G_x[S]` covers exactly `S \ A`.
//! `A` is the set of bag vertices `N` leaves uncovered. The symmetric difference
//! `N △ M` is a system of vertex-disjoint alternating paths whose endpoints in
//! the bag are `A △ two`, `two` being the colour-2 vertices; its pairwise
//! projection is the classic alternating-path matrix. A state whose family
//! contains `two` itself has a second matching covering what `M` covers, that
//! is, an alternating cycle, and is dropped.

use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};

pub const MAX_BAG: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DpState {
    colors: u64,
    family: Vec<u32>,
}

impl DpState {
    pub fn new(colors: &[u8], mut family: Vec<u32>) -> Self {
        family.sort_unstable();
        family.dedup();
        let packed = colors.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | (c as u64) << (2 * i));
        DpState { colors: packed, family }
    }

    pub fn color(&self, pos: usize) -> u8 {
        (self.colors >> (2 * pos) & 3) as u8
    }

    pub fn colors(&self, len: usize) -> Vec<u8> {
        (0..len).map(|p| self.color(p)).collect()
    }

    /// Open sets as bitmasks over bag positions.
    pub fn open_sets(&self) -> &[u32] {
        &self.family
    }

    fn mask_of(&self, len: usize, pred: impl Fn(u8) -> bool) -> u32 {
        (0..len).filter(|&p| pred(self.color(p))).fold(0, |m, p| m | 1 << p)
    }

    pub fn two_mask(&self, len: usize) -> u32 {
        self.mask_of(len, |c| c == 2)
    }

    pub fn saturated_mask(&self, len: usize) -> u32 {
        self.mask_of(len, |c| c != 0)
    }

    /// Bag endpoints of each alternating path system.
    pub fn endpoint_sets(&self, len: usize) -> Vec<u32> {
        let two = self.two_mask(len);
        self.family.iter().map(|a| a ^ two).collect()
    }

    /// `P[a][b]`: a single alternating path joins bag positions `a` and `b`,
    /// ending in a matched edge at a colour-1 end and an unmatched edge at a
    /// colour-2 end.
    pub fn path_matrix(&self, len: usize) -> Vec<Vec<bool>> {
        let mut p = vec![vec![false; len]; len];
        for t in self.endpoint_sets(len) {
            if t.count_ones() == 2 {
                let a = t.trailing_zeros() as usize;
                let b = 31 - t.leading_zeros() as usize;
                p[a][b] = true;
                p[b][a] = true;
            }
        }
        p
    }
}

/// Where an entry came from, for rebuilding the matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Back {
    Leaf,
    Single(usize),
    /// Introduce-edge node that put its edge into the matching.
    Matched(usize),
    Join(usize, usize),
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub state: DpState,
    /// Number of saturated vertices (colour 1 or 2) in `G_x`.
    pub value: u32,
    pub back: Back,
}

/// Sparse table: states not present have value minus infinity.
#[derive(Clone, Debug)]
pub struct DpTable {
    pub bag: Vec<usize>,
    entries: Vec<Entry>,
    index: HashMap<DpState, usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct TableCounters {
    pub states: usize,
    pub colorings: usize,
    pub matrices: usize,
}

impl DpTable {
    fn new(bag: Vec<usize>) -> Self {
        DpTable {
            bag,
            entries: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn offer(&mut self, state: DpState, value: u32, back: Back) {
        let two = state.two_mask(self.bag.len());
        if state.family.binary_search(&two).is_ok() {
            return;
        }
        match self.index.get(&state) {
            Some(&i) => {
                if value > self.entries[i].value {
                    self.entries[i].value = value;
                    self.entries[i].back = back;
                }
            }
            None => {
                self.index.insert(state.clone(), self.entries.len());
                self.entries.push(Entry { state, value, back });
            }
        }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `None` stands for minus infinity.
    pub fn get(&self, s: &DpState) -> Option<u32> {
        self.index.get(s).map(|&i| self.entries[i].value)
    }

    pub fn counters(&self) -> TableCounters {
        let len = self.bag.len();
        let colorings: HashSet<u64> = self.entries.iter().map(|e| e.state.colors).collect();
        let matrices: HashSet<Vec<Vec<bool>>> = self.entries.iter().map(|e| e.state.path_matrix(len)).collect();
        TableCounters {
            states: self.entries.len(),
            colorings: colorings.len(),
            matrices: matrices.len(),
        }
    }

    fn pos(&self, v: usize) -> Option<usize> {
        self.bag.binary_search(&v).ok()
    }
}

fn insert_bit(m: u32, p: usize, bit: bool) -> u32 {
    let low = m & ((1 << p) - 1);
    let high = m >> p;
    low | (bit as u32) << p | high << (p + 1)
}

fn remove_bit(m: u32, p: usize) -> u32 {
    let low = m & ((1 << p) - 1);
    low | (m >> (p + 1)) << p
}

fn insert_color(c: u64, p: usize, col: u8) -> u64 {
    let low = c & ((1u64 << (2 * p)) - 1);
    let high = c >> (2 * p);
    low | (col as u64) << (2 * p) | high << (2 * p + 2)
}

fn remove_color(c: u64, p: usize) -> u64 {
    let low = c & ((1u64 << (2 * p)) - 1);
    low | (c >> (2 * p + 2)) << (2 * p)
}

fn set_color(c: u64, p: usize, col: u8) -> u64 {
    c & !(3u64 << (2 * p)) | (col as u64) << (2 * p)
}

pub fn dp_leaf() -> DpTable {
    let mut t = DpTable::new(Vec::new());
    t.offer(DpState::new(&[], Vec::new()), 0, Back::Leaf);
    t
}

pub fn dp_introduce_vertex(child: &DpTable, v: usize) -> Result<DpTable> {
    let p = match child.bag.binary_search(&v) {
        Ok(_) => return Err(Error::contract(format!("vertex {v} is already in the bag"))),
        Err(p) => p,
    };
    if child.bag.len() >= MAX_BAG {
        return Err(Error::Resource {
            what: "bag size",
            limit: MAX_BAG,
            hint: None,
        });
    }
    let mut bag = child.bag.clone();
    bag.insert(p, v);
    let mut t = DpTable::new(bag);
    for (i, e) in child.entries.iter().enumerate() {
        let fam0 = e.state.family.iter().map(|&a| insert_bit(a, p, false)).collect();
        let s0 = DpState {
            colors: insert_color(e.state.colors, p, 0),
            family: fam0,
        };
        t.offer(s0, e.value, Back::Single(i));
        // An isolated saturated vertex stays uncovered by every matching.
        let fam2 = e.state.family.iter().map(|&a| insert_bit(a, p, true)).collect();
        let s2 = DpState {
            colors: insert_color(e.state.colors, p, 2),
            family: fam2,
        };
        t.offer(s2, e.value + 1, Back::Single(i));
    }
    Ok(t)
}

pub fn dp_introduce_edge(child: &DpTable, u: usize, v: usize) -> Result<DpTable> {
    let (Some(pu), Some(pv)) = (child.pos(u), child.pos(v)) else {
        return Err(Error::contract(format!("edge {u}-{v} is not inside the bag")));
    };
    let len = child.bag.len();
    let uv = 1u32 << pu | 1u32 << pv;
    let mut t = DpTable::new(child.bag.clone());
    for (i, e) in child.entries.iter().enumerate() {
        let (cu, cv) = (e.state.color(pu), e.state.color(pv));
        if cu == 0 || cv == 0 {
            t.offer(e.state.clone(), e.value, Back::Single(i));
            continue;
        }
        let two = e.state.two_mask(len);
        let fam = &e.state.family;
        // Edge stays out of M: other matchings may now use it.
        let mut unmatched = fam.clone();
        unmatched.extend(fam.iter().chain([&two]).filter(|&&a| a & uv == uv).map(|&a| a & !uv));
        t.offer(DpState::new_packed(e.state.colors, unmatched), e.value, Back::Single(i));
        if cu == 2 && cv == 2 {
            // Edge joins M: every old matching, M included, now differs from M.
            let mut matched: Vec<u32> = fam.iter().filter(|&&a| a & uv == uv).map(|&a| a & !uv).collect();
            matched.extend(fam.iter().copied());
            matched.push(two);
            let colors = set_color(set_color(e.state.colors, pu, 1), pv, 1);
            t.offer(DpState::new_packed(colors, matched), e.value, Back::Matched(i));
        }
    }
    Ok(t)
}

impl DpState {
    fn new_packed(colors: u64, mut family: Vec<u32>) -> Self {
        family.sort_unstable();
        family.dedup();
        DpState { colors, family }
    }
}

pub fn dp_forget(child: &DpTable, u: usize) -> Result<DpTable> {
    let Some(p) = child.pos(u) else {
        return Err(Error::contract(format!("vertex {u} is not in the bag")));
    };
    let mut bag = child.bag.clone();
    bag.remove(p);
    let mut t = DpTable::new(bag);
    for (i, e) in child.entries.iter().enumerate() {
        if e.state.color(p) == 2 {
            continue;
        }
        // A forgotten vertex has no edges left, so other matchings must cover it.
        let fam = e.state.family.iter().filter(|&&a| a >> p & 1 == 0).map(|&a| remove_bit(a, p)).collect();
        t.offer(DpState::new_packed(remove_color(e.state.colors, p), fam), e.value, Back::Single(i));
    }
    Ok(t)
}

pub fn dp_join(left: &DpTable, right: &DpTable) -> Result<DpTable> {
    if left.bag != right.bag {
        return Err(Error::contract("join children have different bags"));
    }
    let len = left.bag.len();
    let mut by_colors: HashMap<u64, Vec<usize>> = HashMap::new();
    for (j, e) in right.entries.iter().enumerate() {
        by_colors.entry(e.state.colors).or_default().push(j);
    }
    let mut t = DpTable::new(left.bag.clone());
    for (i, l) in left.entries.iter().enumerate() {
        let twos: Vec<usize> = (0..len).filter(|&p| l.state.color(p) == 2).collect();
        let ones: Vec<usize> = (0..len).filter(|&p| l.state.color(p) == 1).collect();
        let sat = l.state.saturated_mask(len);
        for sel in 0u32..1 << twos.len() {
            // Colour 1 at the join is matched on exactly one side.
            let mut rc = l.state.colors;
            let mut xc = l.state.colors;
            for &p in &ones {
                rc = set_color(rc, p, 2);
            }
            for (b, &p) in twos.iter().enumerate() {
                if sel >> b & 1 == 1 {
                    rc = set_color(rc, p, 1);
                    xc = set_color(xc, p, 1);
                }
            }
            let Some(js) = by_colors.get(&rc) else { continue };
            for &j in js {
                let r = &right.entries[j];
                let side = |s: &DpState| {
                    let mut v: Vec<(u32, bool)> = s.family.iter().map(|&a| (a, false)).collect();
                    v.push((s.two_mask(len), true));
                    v
                };
                let ls = side(&l.state);
                let rs = side(&r.state);
                let mut fam = Vec::new();
                for &(a1, same1) in &ls {
                    for &(a2, same2) in &rs {
                        if !(same1 && same2) && a1 | a2 == sat {
                            fam.push(a1 & a2);
                        }
                    }
                }
                let value = l.value + r.value - sat.count_ones();
                t.offer(DpState::new_packed(xc, fam), value, Back::Join(i, j));
            }
        }
    }
    Ok(t)
}
