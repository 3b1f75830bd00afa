//! The composed graph built from several Exact-3-Cover instances.

use super::e3c::{E3CInstance, Triple};
use crate::error::{Error, Result};
use crate::graph::{norm, Graph};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    First,
    Second,
}

/// Vertex roles. Elements are 1-based, gadgets and instances 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Role {
    V { element: usize },
    VPrime { element: usize },
    U { element: usize },
    UPrime { element: usize },
    P { gadget: usize },
    Q { gadget: usize },
    R { gadget: usize },
    S { gadget: usize },
    Interface { gadget: usize, element: usize, side: Side },
    W1 { gadget: usize, side: Side },
    W2 { gadget: usize, side: Side },
    X { instance: usize },
    Y,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tick = |s: &Side| if *s == Side::Second { "'" } else { "" };
        match self {
            Role::V { element } => write!(f, "v_{element}"),
            Role::VPrime { element } => write!(f, "v'_{element}"),
            Role::U { element } => write!(f, "u_{element}"),
            Role::UPrime { element } => write!(f, "u'_{element}"),
            Role::P { gadget } => write!(f, "p_{gadget}"),
            Role::Q { gadget } => write!(f, "q_{gadget}"),
            Role::R { gadget } => write!(f, "r_{gadget}"),
            Role::S { gadget } => write!(f, "s_{gadget}"),
            Role::Interface { gadget, element, side } => write!(f, "w{}_{gadget},{element}", tick(side)),
            Role::W1 { gadget, side } => write!(f, "w{}1_{gadget}", tick(side)),
            Role::W2 { gadget, side } => write!(f, "w{}2_{gadget}", tick(side)),
            Role::X { instance } => write!(f, "x_{instance}"),
            Role::Y => write!(f, "y"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeType {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "II-vertical")]
    IIVertical,
    #[serde(rename = "II-horizontal")]
    IIHorizontal,
    #[serde(rename = "III")]
    III,
    #[serde(rename = "IV")]
    IV,
    #[serde(rename = "V")]
    V,
}

#[derive(Clone, Debug)]
pub struct GadgetLayout {
    pub graph: Graph,
    pub ell: usize,
    pub n: usize,
    /// `roles[v]` for every vertex.
    pub roles: Vec<Role>,
    /// Indexed like `graph.edges()`.
    pub edge_types: Vec<EdgeType>,
    /// Distinct triples over all instances, sorted.
    pub collection: Vec<Triple>,
    pub instances: Vec<E3CInstance>,
    index: HashMap<Role, usize>,
}

impl GadgetLayout {
    pub fn t(&self) -> usize {
        self.instances.len()
    }

    pub fn vertex(&self, r: Role) -> Option<usize> {
        self.index.get(&r).copied()
    }

    pub fn edge_type(&self, u: usize, v: usize) -> Option<EdgeType> {
        self.graph.edge_index(u, v).map(|i| self.edge_types[i])
    }

    /// Index of a triple in the collection.
    pub fn gadget_of(&self, t: &Triple) -> Option<usize> {
        let mut s = *t;
        s.sort_unstable();
        self.collection.binary_search(&s).ok()
    }

    /// The four edges of the diamond `{p, q, r, s}` of gadget `j`.
    pub fn diamond(&self, j: usize) -> [(usize, usize); 4] {
        let v = |r| self.index[&r];
        let (p, q, r, s) = (
            v(Role::P { gadget: j }),
            v(Role::Q { gadget: j }),
            v(Role::R { gadget: j }),
            v(Role::S { gadget: j }),
        );
        [norm(p, q), norm(q, r), norm(r, s), norm(p, r)]
    }

    pub fn metadata(&self) -> GadgetMetadata {
        GadgetMetadata {
            ell: self.ell,
            n: self.n,
            t: self.t(),
            collection_size: self.collection.len(),
            collection: self.collection.clone(),
            roles: self.roles.iter().enumerate().map(|(v, r)| RoleEntry { vertex: v, label: r.to_string(), role: *r }).collect(),
            edge_types: self.graph.edges().iter().zip(&self.edge_types).map(|(&(u, v), &t)| (u, v, t)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RoleEntry {
    pub vertex: usize,
    pub label: String,
    pub role: Role,
}

#[derive(Clone, Debug, Serialize)]
pub struct GadgetMetadata {
    pub ell: usize,
    pub n: usize,
    pub t: usize,
    pub collection_size: usize,
    pub collection: Vec<Triple>,
    pub roles: Vec<RoleEntry>,
    pub edge_types: Vec<(usize, usize, EdgeType)>,
}

struct Builder {
    roles: Vec<Role>,
    index: HashMap<Role, usize>,
    edges: HashMap<(usize, usize), EdgeType>,
}

impl Builder {
    fn add(&mut self, r: Role) -> usize {
        let v = self.roles.len();
        self.roles.push(r);
        self.index.insert(r, v);
        v
    }

    fn v(&self, r: Role) -> usize {
        self.index[&r]
    }

    fn edge(&mut self, a: Role, b: Role, t: EdgeType) -> Result<()> {
        let e = norm(self.v(a), self.v(b));
        match self.edges.insert(e, t) {
            Some(old) if old != t => Err(Error::Internal(format!("edge {a}-{b} typed both {old:?} and {t:?}"))),
            _ => Ok(()),
        }
    }
}

pub fn build_gadget(instances: &[E3CInstance]) -> Result<GadgetLayout> {
    let Some(first) = instances.first() else {
        return Err(Error::contract("no instances given"));
    };
    let n = first.n;
    if n == 0 {
        return Err(Error::contract("empty universe"));
    }
    if let Some(bad) = instances.iter().find(|i| i.n != n) {
        return Err(Error::contract(format!("universe sizes {n} and {} differ", bad.n)));
    }
    for (i, a) in instances.iter().enumerate() {
        if let Some(j) = instances[..i].iter().position(|b| b.triples == a.triples) {
            return Err(Error::contract(format!("instances {j} and {i} have the same collection")));
        }
    }
    let mut collection: Vec<Triple> = instances.iter().flat_map(|i| i.triples.iter().copied()).collect();
    collection.sort_unstable();
    collection.dedup();

    use EdgeType::*;
    use Side::*;
    let mut b = Builder {
        roles: Vec::new(),
        index: HashMap::new(),
        edges: HashMap::new(),
    };
    for element in 1..=n {
        b.add(Role::V { element });
        b.add(Role::VPrime { element });
        b.add(Role::U { element });
        b.add(Role::UPrime { element });
    }
    for (gadget, t) in collection.iter().enumerate() {
        b.add(Role::P { gadget });
        b.add(Role::Q { gadget });
        b.add(Role::R { gadget });
        b.add(Role::S { gadget });
        for side in [First, Second] {
            for &element in t {
                b.add(Role::Interface { gadget, element, side });
            }
            b.add(Role::W1 { gadget, side });
            b.add(Role::W2 { gadget, side });
        }
    }
    b.add(Role::Y);
    for instance in 0..instances.len() {
        b.add(Role::X { instance });
    }

    for element in 1..=n {
        let ring = [
            Role::V { element },
            Role::VPrime { element },
            Role::UPrime { element },
            Role::U { element },
        ];
        for k in 0..4 {
            b.edge(ring[k], ring[(k + 1) % 4], I)?;
        }
    }
    for (j, t) in collection.iter().enumerate() {
        let g = j;
        let (p, q, r, s) = (Role::P { gadget: g }, Role::Q { gadget: g }, Role::R { gadget: g }, Role::S { gadget: g });
        for (side, hub) in [(First, p), (Second, s)] {
            let w1 = Role::W1 { gadget: g, side };
            let w2 = Role::W2 { gadget: g, side };
            b.edge(w1, w2, III)?;
            b.edge(w2, hub, III)?;
            for &element in t {
                let w = Role::Interface { gadget: g, element, side };
                b.edge(w, w1, III)?;
                b.edge(w, hub, III)?;
            }
        }
        b.edge(p, q, IV)?;
        b.edge(q, r, IV)?;
        b.edge(r, s, IV)?;
        b.edge(p, r, IV)?;
        for &element in t {
            b.edge(Role::Interface { gadget: g, element, side: First }, Role::V { element }, IIVertical)?;
            b.edge(Role::Interface { gadget: g, element, side: Second }, Role::VPrime { element }, IIVertical)?;
            for (k, other) in collection.iter().enumerate() {
                if k != j && other.contains(&element) {
                    b.edge(
                        Role::Interface { gadget: g, element, side: First },
                        Role::Interface { gadget: k, element, side: Second },
                        IIHorizontal,
                    )?;
                }
            }
        }
    }
    for (i, inst) in instances.iter().enumerate() {
        let x = Role::X { instance: i };
        b.edge(x, Role::Y, V)?;
        for (g, t) in collection.iter().enumerate() {
            if inst.triples.binary_search(t).is_ok() {
                continue;
            }
            b.edge(x, Role::W2 { gadget: g, side: First }, III)?;
            b.edge(Role::Y, Role::W2 { gadget: g, side: Second }, III)?;
            for &element in t {
                b.edge(x, Role::Interface { gadget: g, element, side: First }, III)?;
                b.edge(Role::Y, Role::Interface { gadget: g, element, side: Second }, III)?;
            }
        }
    }

    let graph = Graph::new(b.roles.len(), b.edges.keys().copied())?;
    let edge_types = graph.edges().iter().map(|e| b.edges[e]).collect();
    let ell = 4 * collection.len() + 8 * n / 3 + 1;
    Ok(GadgetLayout {
        graph,
        ell,
        n,
        roles: b.roles,
        edge_types,
        collection,
        instances: instances.to_vec(),
        index: b.index,
    })
}
