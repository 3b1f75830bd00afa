//! Deciding whether a matching is uniquely restricted, with checkable witnesses.

use crate::error::{Error, Result};
use crate::graph::{alternating_cycle_through, norm, Graph, Matching};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    UniquelyRestricted,
    NotUniquelyRestricted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Vertex sequence of an alternating cycle; the edge from the first to the
    /// second vertex is matched.
    Cycle(Vec<usize>),
    /// A perfect matching of `G[V_M]` other than `M`.
    SecondMatching(Matching),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UrmCertificate {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl UrmCertificate {
    fn unique() -> Self {
        UrmCertificate {
            verdict: Verdict::UniquelyRestricted,
            witness: None,
        }
    }

    fn broken(w: Witness) -> Self {
        UrmCertificate {
            verdict: Verdict::NotUniquelyRestricted,
            witness: Some(w),
        }
    }

    pub fn is_unique(&self) -> bool {
        self.verdict == Verdict::UniquelyRestricted
    }
}

pub const PM_VERIFIER_CAP: usize = 40;

fn check_matching(g: &Graph, m: &Matching) -> Result<()> {
    Matching::new(g, m.edges().iter().copied()).map(|_| ())
}

/// Searches for an alternating cycle through each matched edge in turn.
pub fn verify_urm_cycle(g: &Graph, m: &Matching) -> Result<UrmCertificate> {
    check_matching(g, m)?;
    let mates = m.mates(g.vertex_count());
    for &(a, b) in m.edges() {
        if let Some(path) = alternating_cycle_through(g, &mates, (a, b)) {
            return Ok(UrmCertificate::broken(Witness::Cycle(path_to_cycle(path))));
        }
    }
    Ok(UrmCertificate::unique())
}

/// `path` runs `a .. b` with `ab` matched; reorder as `a, b, .., x1`.
fn path_to_cycle(path: Vec<usize>) -> Vec<usize> {
    let a = path[0];
    let mut cyc = vec![a];
    cyc.extend(path[1..].iter().rev());
    cyc
}

/// True when `M ∪ {e}` stays uniquely restricted, given that `M` is.
pub fn extension_stays_unique(g: &Graph, mates: &mut [Option<usize>], (u, v): (usize, usize)) -> bool {
    mates[u] = Some(v);
    mates[v] = Some(u);
    let ok = alternating_cycle_through(g, mates, (u, v)).is_none();
    mates[u] = None;
    mates[v] = None;
    ok
}

/// Enumerates perfect matchings of `G[V_M]`, stopping at the first one that differs from `M`.
pub fn verify_urm_pm(g: &Graph, m: &Matching) -> Result<UrmCertificate> {
    verify_urm_pm_capped(g, m, PM_VERIFIER_CAP)
}

pub fn verify_urm_pm_capped(g: &Graph, m: &Matching, cap: usize) -> Result<UrmCertificate> {
    check_matching(g, m)?;
    let vm = m.saturated();
    if vm.len() > cap {
        return Err(Error::Resource {
            what: "saturated vertex count",
            limit: cap,
            hint: Some("use verify_urm_cycle for large matchings"),
        });
    }
    let h = g.induced(&vm);
    let mut mate = vec![usize::MAX; vm.len()];
    let target: Vec<(usize, usize)> = m
        .edges()
        .iter()
        .map(|&(u, v)| {
            let iu = vm.binary_search(&u).unwrap();
            let iv = vm.binary_search(&v).unwrap();
            norm(iu, iv)
        })
        .collect();
    let mut target = target;
    target.sort_unstable();
    let mut found = None;
    pm_search(&h, &mut mate, &target, &mut found);
    Ok(match found {
        None => UrmCertificate::unique(),
        Some(edges) => {
            let lifted = edges.into_iter().map(|(a, b): (usize, usize)| (vm[a], vm[b]));
            UrmCertificate::broken(Witness::SecondMatching(Matching::new(g, lifted)?))
        }
    })
}

fn pm_search(h: &Graph, mate: &mut [usize], target: &[(usize, usize)], found: &mut Option<Vec<(usize, usize)>>) {
    if found.is_some() {
        return;
    }
    let Some(v) = mate.iter().position(|&x| x == usize::MAX) else {
        let mut edges: Vec<(usize, usize)> = (0..mate.len()).filter(|&v| v < mate[v]).map(|v| (v, mate[v])).collect();
        edges.sort_unstable();
        if edges != target {
            *found = Some(edges);
        }
        return;
    };
    for &w in h.neighbors(v) {
        if mate[w] == usize::MAX {
            mate[v] = w;
            mate[w] = v;
            pm_search(h, mate, target, found);
            mate[v] = usize::MAX;
            mate[w] = usize::MAX;
            if found.is_some() {
                return;
            }
        }
    }
}

/// Checks that a negative certificate's witness is genuine.
pub fn validate_witness(g: &Graph, m: &Matching, w: &Witness) -> Result<()> {
    let bad = |msg: String| Err(Error::Internal(format!("invalid witness: {msg}")));
    match w {
        Witness::Cycle(c) => {
            let k = c.len();
            if k < 4 || k % 2 != 0 {
                return bad(format!("cycle length {k}"));
            }
            let mut seen = c.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != k {
                return bad("cycle repeats a vertex".into());
            }
            let mates = m.mates(g.vertex_count());
            if c.iter().any(|&v| v >= g.vertex_count() || mates[v].is_none()) {
                return bad("cycle leaves the saturated set".into());
            }
            for i in 0..k {
                let (u, v) = (c[i], c[(i + 1) % k]);
                if !g.has_edge(u, v) {
                    return bad(format!("{u}-{v} is not an edge"));
                }
                if m.contains(u, v) != (i % 2 == 0) {
                    return bad(format!("edge {u}-{v} breaks alternation"));
                }
            }
            Ok(())
        }
        Witness::SecondMatching(n) => {
            check_matching(g, n)?;
            if n.saturated() != m.saturated() {
                return bad("second matching saturates a different vertex set".into());
            }
            if n == m {
                return bad("second matching equals the first".into());
            }
            Ok(())
        }
    }
}

/// Certificate from the cycle verifier, checked against the enumeration
/// verifier whenever the latter is within its cap.
pub fn verify_urm(g: &Graph, m: &Matching) -> Result<UrmCertificate> {
    let cert = verify_urm_cycle(g, m)?;
    if let Some(w) = &cert.witness {
        validate_witness(g, m, w)?;
    }
    Ok(cert)
}
