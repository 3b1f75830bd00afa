//! Exact-3-Cover instances.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Sorted triple of elements in `1..=n`.
pub type Triple = [usize; 3];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E3CInstance {
    pub n: usize,
    /// Sorted, without repeats.
    pub triples: Vec<Triple>,
}

impl E3CInstance {
    pub fn new(n: usize, triples: impl IntoIterator<Item = [usize; 3]>) -> Result<Self> {
        if n % 3 != 0 {
            return Err(Error::contract(format!("universe size {n} is not divisible by 3")));
        }
        let mut list = Vec::new();
        for mut t in triples {
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::contract(format!("triple {t:?} repeats an element")));
            }
            if t[0] == 0 || t[2] > n {
                return Err(Error::contract(format!("triple {t:?} leaves 1..={n}")));
            }
            list.push(t);
        }
        list.sort_unstable();
        list.dedup();
        Ok(E3CInstance { n, triples: list })
    }

    /// True when `cover` is drawn from this instance and partitions the universe.
    pub fn is_exact_cover(&self, cover: &[Triple]) -> bool {
        let mut seen = vec![false; self.n + 1];
        cover.len() * 3 == self.n
            && cover.iter().all(|t| {
                let mut s = *t;
                s.sort_unstable();
                self.triples.binary_search(&s).is_ok()
                    && t.iter().all(|&a| a <= self.n && !std::mem::replace(&mut seen[a], true))
            })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct E3CDocument {
    n: usize,
    instances: Vec<Vec<[usize; 3]>>,
}

/// `{"n": int, "instances": [[[a,b,c], ...], ...]}` with elements in `1..=n`.
pub fn parse_e3c_json(text: &str) -> Result<Vec<E3CInstance>> {
    let doc: E3CDocument = serde_json::from_str(text)?;
    doc.instances.into_iter().map(|ts| E3CInstance::new(doc.n, ts)).collect()
}

pub const E3C_TRIPLE_CAP: usize = 20;

/// An exact cover, found by branching on the smallest uncovered element.
pub fn e3c_solve(inst: &E3CInstance) -> Result<Option<Vec<Triple>>> {
    if inst.triples.len() > E3C_TRIPLE_CAP {
        return Err(Error::Resource {
            what: "triple count",
            limit: E3C_TRIPLE_CAP,
            hint: None,
        });
    }
    let mut covered = vec![false; inst.n + 1];
    let mut chosen = Vec::new();
    Ok(search(inst, &mut covered, &mut chosen).then_some(chosen))
}

fn search(inst: &E3CInstance, covered: &mut [bool], chosen: &mut Vec<Triple>) -> bool {
    let Some(a) = (1..=inst.n).find(|&a| !covered[a]) else {
        return true;
    };
    for t in &inst.triples {
        if t.contains(&a) && t.iter().all(|&b| !covered[b]) {
            t.iter().for_each(|&b| covered[b] = true);
            chosen.push(*t);
            if search(inst, covered, chosen) {
                return true;
            }
            chosen.pop();
            t.iter().for_each(|&b| covered[b] = false);
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solver_examples() {
        let one = E3CInstance::new(3, [[1, 2, 3]]).unwrap();
        assert_eq!(e3c_solve(&one).unwrap(), Some(vec![[1, 2, 3]]));
        let two = E3CInstance::new(6, [[1, 2, 3], [4, 5, 6]]).unwrap();
        assert_eq!(e3c_solve(&two).unwrap().unwrap().len(), 2);
        let none = E3CInstance::new(6, [[1, 2, 3], [3, 4, 5]]).unwrap();
        assert_eq!(e3c_solve(&none).unwrap(), None);
    }

    #[test]
    fn validation() {
        assert!(E3CInstance::new(4, [[1, 2, 3]]).is_err());
        assert!(E3CInstance::new(3, [[1, 1, 2]]).is_err());
        assert!(E3CInstance::new(3, [[0, 1, 2]]).is_err());
        assert!(E3CInstance::new(3, [[1, 2, 4]]).is_err());
        let t: Vec<[usize; 3]> = (0..21).map(|i| [1 + i, 22, 23]).collect();
        let big = E3CInstance::new(24, t).unwrap();
        assert!(matches!(e3c_solve(&big), Err(Error::Resource { .. })));
    }

    #[test]
    fn parses_json() {
        let v = parse_e3c_json(r#"{"n": 6, "instances": [[[3,2,1],[4,5,6]], [[1,2,3]]]}"#).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[0].triples, vec![[1, 2, 3], [4, 5, 6]]);
        assert!(parse_e3c_json(r#"{"n": 6}"#).is_err());
    }

    #[test]
    fn cover_check() {
        let two = E3CInstance::new(6, [[1, 2, 3], [4, 5, 6], [1, 4, 5]]).unwrap();
        assert!(two.is_exact_cover(&[[4, 5, 6], [1, 2, 3]]));
        assert!(!two.is_exact_cover(&[[1, 2, 3], [1, 4, 5]]));
        assert!(!two.is_exact_cover(&[[1, 2, 3]]));
    }
}
