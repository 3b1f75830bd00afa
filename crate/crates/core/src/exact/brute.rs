use super::UrmSolution;
use crate::error::{Error, Result};
use crate::graph::{Graph, Matching};
use crate::verify::extension_stays_unique;
use std::time::Instant;

pub const BRUTE_VERTEX_CAP: usize = 16;

pub fn max_urm_brute(g: &Graph) -> Result<UrmSolution> {
    max_urm_brute_capped(g, BRUTE_VERTEX_CAP)
}

/// Exhaustive search over uniquely restricted matchings by ordered edge inclusion.
/// A branch dies as soon as its partial matching has an alternating cycle, since
/// every superset keeps that cycle.
pub fn max_urm_brute_capped(g: &Graph, cap: usize) -> Result<UrmSolution> {
    if g.vertex_count() > cap {
        return Err(Error::Resource {
            what: "vertex count for exhaustive search",
            limit: cap,
            hint: Some("use max_urm_bb"),
        });
    }
    let start = Instant::now();
    let mut s = Brute {
        g,
        mates: vec![None; g.vertex_count()],
        cur: Vec::new(),
        best: Vec::new(),
        nodes: 0,
    };
    s.go(0);
    let m = Matching::from_sorted_unchecked(s.best);
    Ok(UrmSolution::new(m, true, s.nodes, start.elapsed()))
}

struct Brute<'g> {
    g: &'g Graph,
    mates: Vec<Option<usize>>,
    cur: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
    nodes: u64,
}

impl Brute<'_> {
    fn go(&mut self, from: usize) {
        self.nodes += 1;
        if self.cur.len() > self.best.len() {
            self.best = self.cur.clone();
        }
        for i in from..self.g.edge_count() {
            let (u, v) = self.g.edges()[i];
            if self.mates[u].is_some() || self.mates[v].is_some() {
                continue;
            }
            if !extension_stays_unique(self.g, &mut self.mates, (u, v)) {
                continue;
            }
            self.mates[u] = Some(v);
            self.mates[v] = Some(u);
            self.cur.push((u, v));
            self.go(i + 1);
            self.cur.pop();
            self.mates[u] = None;
            self.mates[v] = None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_urm_cycle;

    fn mu(g: &Graph) -> usize {
        let s = max_urm_brute(g).unwrap();
        assert!(verify_urm_cycle(g, &s.matching).unwrap().is_unique());
        s.size
    }

    #[test]
    fn small_values() {
        assert_eq!(mu(&Graph::complete(4)), 1);
        assert_eq!(mu(&Graph::cycle(4)), 1);
        assert_eq!(mu(&Graph::path(4)), 2);
        assert_eq!(mu(&Graph::cycle(6)), 2);
        assert_eq!(mu(&Graph::empty(3)), 0);
        assert_eq!(mu(&Graph::path(7)), 3);
    }

    #[test]
    fn cap() {
        assert!(max_urm_brute_capped(&Graph::path(5), 4).is_err());
    }
}
