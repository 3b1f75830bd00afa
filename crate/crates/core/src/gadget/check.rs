//! Witness matchings and structural checks on the composed graph.

use super::build::{EdgeType, GadgetLayout, Role, Side};
use super::e3c::Triple;
use crate::error::{Error, Result};
use crate::graph::{norm, Matching};
use crate::verify::verify_urm_cycle;
use serde::Serialize;

/// The matching of size `ell` built from an exact cover of instance `q`.
pub fn cover_matching(layout: &GadgetLayout, q: usize, cover: &[Triple]) -> Result<Matching> {
    let inst = layout
        .instances
        .get(q)
        .ok_or_else(|| Error::contract(format!("no instance {q}")))?;
    if !inst.is_exact_cover(cover) {
        return Err(Error::contract(format!("{cover:?} is not an exact cover of instance {q}")));
    }
    let v = |r| layout.vertex(r).expect("role present");
    let mut edges = Vec::new();
    for a in 1..=layout.n {
        edges.push((v(Role::U { element: a }), v(Role::UPrime { element: a })));
    }
    let covered: Vec<usize> = cover.iter().map(|t| layout.gadget_of(t).expect("triple in collection")).collect();
    for &j in &covered {
        for &a in &layout.collection[j] {
            edges.push((v(Role::V { element: a }), v(Role::Interface { gadget: j, element: a, side: Side::First })));
            edges.push((v(Role::VPrime { element: a }), v(Role::Interface { gadget: j, element: a, side: Side::Second })));
        }
    }
    for j in 0..layout.collection.len() {
        for side in [Side::First, Side::Second] {
            edges.push((v(Role::W1 { gadget: j, side }), v(Role::W2 { gadget: j, side })));
        }
        let (p, qq, r, s) = (
            v(Role::P { gadget: j }),
            v(Role::Q { gadget: j }),
            v(Role::R { gadget: j }),
            v(Role::S { gadget: j }),
        );
        if covered.contains(&j) {
            edges.push((qq, r));
        } else {
            edges.push((p, qq));
            edges.push((r, s));
        }
    }
    edges.push((v(Role::X { instance: q }), v(Role::Y)));
    let m = Matching::new(&layout.graph, edges)?;
    if m.len() != layout.ell {
        return Err(Error::Internal(format!("built {} edges, expected {}", m.len(), layout.ell)));
    }
    if !verify_urm_cycle(&layout.graph, &m)?.is_unique() {
        return Err(Error::Internal("constructed matching has an alternating cycle".into()));
    }
    Ok(m)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub size: usize,
    pub type_i: usize,
    pub type_ii: usize,
    pub type_iii: usize,
    pub type_iv: usize,
    pub type_v: usize,
    /// Type-II edges per element, index 0 unused.
    pub index_usage: Vec<usize>,
    /// Per gadget: at most one matched diamond edge.
    pub sad: Vec<bool>,
}

impl StructuralReport {
    pub fn sad_count(&self) -> usize {
        self.sad.iter().filter(|&&s| s).count()
    }
}

fn falsified(lemma: &'static str, detail: String) -> Error {
    Error::Falsified { lemma, detail }
}

fn require_urm(layout: &GadgetLayout, m: &Matching) -> Result<()> {
    if verify_urm_cycle(&layout.graph, m)?.is_unique() {
        Ok(())
    } else {
        Err(Error::contract("matching is not uniquely restricted"))
    }
}

/// Counts matched edges per type and checks the upper bounds that hold for
/// every uniquely restricted matching, plus the equalities forced at size `ell`.
pub fn check_structural_bounds(layout: &GadgetLayout, m: &Matching) -> Result<StructuralReport> {
    require_urm(layout, m)?;
    let n = layout.n;
    let c = layout.collection.len();
    let mut rep = StructuralReport {
        size: m.len(),
        index_usage: vec![0; n + 1],
        sad: vec![true; c],
        ..Default::default()
    };
    for &(u, v) in m.edges() {
        match layout.edge_type(u, v).expect("matching edge in graph") {
            EdgeType::I => rep.type_i += 1,
            EdgeType::IIVertical | EdgeType::IIHorizontal => {
                rep.type_ii += 1;
                let element = [u, v]
                    .iter()
                    .find_map(|&x| match layout.roles[x] {
                        Role::Interface { element, .. } => Some(element),
                        _ => None,
                    })
                    .expect("type-II edge touches an interface vertex");
                rep.index_usage[element] += 1;
            }
            EdgeType::III => rep.type_iii += 1,
            EdgeType::IV => rep.type_iv += 1,
            EdgeType::V => rep.type_v += 1,
        }
    }
    if rep.type_i > n {
        return Err(falsified("type-I bound", format!("{} > {n}", rep.type_i)));
    }
    if rep.type_iii > 2 * c {
        return Err(falsified("type-III bound", format!("{} > {}", rep.type_iii, 2 * c)));
    }
    if rep.type_iv > 2 * c {
        return Err(falsified("type-IV bound", format!("{} > {}", rep.type_iv, 2 * c)));
    }
    if rep.type_v > 1 {
        return Err(falsified("type-V bound", format!("{} > 1", rep.type_v)));
    }
    if let Some(a) = (1..=n).find(|&a| rep.index_usage[a] > 2) {
        return Err(falsified("type-II index usage", format!("element {a} used {} times", rep.index_usage[a])));
    }
    if rep.type_ii > 2 * n {
        return Err(falsified("type-II bound", format!("{} > {}", rep.type_ii, 2 * n)));
    }
    for j in 0..c {
        let d = layout.diamond(j);
        let inside: Vec<(usize, usize)> = d.iter().copied().filter(|&(u, v)| m.contains(u, v)).collect();
        rep.sad[j] = inside.len() <= 1;
        if inside.len() == 2 && !(inside.contains(&d[0]) && inside.contains(&d[2])) {
            return Err(falsified("happy gadget shape", format!("gadget {j} matches {inside:?}")));
        }
    }
    if m.len() >= layout.ell {
        if rep.type_ii != 2 * n {
            return Err(falsified("type-II count at target size", format!("{} != {}", rep.type_ii, 2 * n)));
        }
        if rep.sad_count() != n / 3 {
            return Err(falsified("sad gadget count", format!("{} != {}", rep.sad_count(), n / 3)));
        }
        if rep.type_v != 1 {
            return Err(falsified("type-V count at target size", format!("{} != 1", rep.type_v)));
        }
    }
    Ok(rep)
}

/// Reads an exact cover of some instance off a matching of size at least `ell`.
pub fn extract_cover(layout: &GadgetLayout, m: &Matching) -> Result<(usize, Vec<Triple>)> {
    if m.len() < layout.ell {
        return Err(Error::contract(format!("matching has {} < {} edges", m.len(), layout.ell)));
    }
    require_urm(layout, m)?;
    let y = layout.vertex(Role::Y).expect("y present");
    let q = m
        .edges()
        .iter()
        .find_map(|&(u, v)| match (layout.roles[u], layout.roles[v]) {
            (Role::X { instance }, _) | (_, Role::X { instance }) if u == y || v == y => Some(instance),
            _ => None,
        })
        .ok_or_else(|| falsified("selector edge present", "no x-y edge in the matching".into()))?;
    let cover: Vec<Triple> = (0..layout.collection.len())
        .filter(|&j| layout.diamond(j).iter().filter(|&&(u, v)| m.contains(u, v)).count() <= 1)
        .map(|j| layout.collection[j])
        .collect();
    if cover.len() != layout.n / 3 {
        return Err(falsified("sad gadget count", format!("{} sad gadgets, expected {}", cover.len(), layout.n / 3)));
    }
    if !layout.instances[q].is_exact_cover(&cover) {
        return Err(falsified("sad gadgets form a cover", format!("{cover:?} does not cover instance {q}")));
    }
    Ok((q, cover))
}

/// All vertices except the selector leaves.
pub fn vertex_cover_witness(layout: &GadgetLayout) -> Result<Vec<usize>> {
    let is_x = |v: usize| matches!(layout.roles[v], Role::X { .. });
    let y: Vec<usize> = (0..layout.graph.vertex_count()).filter(|&v| !is_x(v)).collect();
    let c = layout.collection.len();
    let n = layout.n;
    if let Some(&(u, v)) = layout.graph.edges().iter().find(|&&(u, v)| is_x(u) && is_x(v)) {
        return Err(Error::Internal(format!("selector leaves {u} and {v} are adjacent")));
    }
    if y.len() != 4 * n + 14 * c + 1 {
        return Err(Error::Internal(format!("cover has {} vertices", y.len())));
    }
    let binom = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    if c > binom {
        return Err(Error::Internal(format!("{c} distinct triples exceed C({n},3)")));
    }
    Ok(y)
}

/// Matched edges inside the diamond of gadget `j`.
pub fn diamond_edges(layout: &GadgetLayout, m: &Matching, j: usize) -> Vec<(usize, usize)> {
    layout.diamond(j).into_iter().filter(|&(u, v)| m.contains(u, v)).map(|(u, v)| norm(u, v)).collect()
}
