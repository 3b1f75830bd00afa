use super::embed::{coloring, may_embed, trial_count, ColorfulDp, Embedding};
use super::filter::{p3_filter, P3Decomposition};
use super::forests::{candidate_forests, CandidateForest};
use crate::error::{Error, Result};
use crate::graph::{line_graph, norm, Graph, Matching};
use crate::verify::verify_urm_cycle;

#[derive(Clone, Debug)]
pub struct LineWitness {
    pub forest: CandidateForest,
    pub decomposition: P3Decomposition,
    pub embedding: Embedding,
    /// Uniquely restricted matching of `L(h)`, one edge per path.
    pub matching: Matching,
}

#[derive(Clone, Debug)]
pub struct LineDecision {
    pub accepted: bool,
    pub witness: Option<LineWitness>,
    pub forests_considered: usize,
    pub forests_surviving: usize,
    pub trials: u64,
}

/// Decides whether `L(h)` has a uniquely restricted matching of size `l`.
///
/// Filter-surviving forests are grouped by vertex count; each colouring trial
/// is shared across a group and the first success (by trial, then forest
/// order) is returned.
pub fn urm_line_decide(h: &Graph, l: usize, delta: f64, seed: u64) -> Result<LineDecision> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::contract(format!("failure probability {delta} is outside (0, 1)")));
    }
    let mut out = LineDecision {
        accepted: false,
        witness: None,
        forests_considered: 0,
        forests_surviving: 0,
        trials: 0,
    };
    if l == 0 {
        out.accepted = true;
        return Ok(out);
    }
    if 2 * l > h.edge_count() || 2 * l + 1 > h.vertex_count() {
        return Ok(out);
    }
    let forests = candidate_forests(l)?;
    out.forests_considered = forests.len();
    let mut groups: Vec<Vec<(CandidateForest, P3Decomposition)>> = vec![Vec::new(); 3 * l + 1];
    for f in forests {
        if let Some(d) = p3_filter(&f.forest) {
            out.forests_surviving += 1;
            if may_embed(&f.forest, h) {
                let k = f.vertex_count();
                groups[k].push((f, d));
            }
        }
    }
    for (k, group) in groups.iter().enumerate() {
        if group.is_empty() {
            continue;
        }
        let dps: Vec<ColorfulDp> = group.iter().map(|(f, _)| ColorfulDp::new(&f.forest, h)).collect();
        for trial in 0..trial_count(k, delta) {
            out.trials += 1;
            let colors = coloring(h.vertex_count(), k, seed, trial);
            for (dp, (f, d)) in dps.iter().zip(group) {
                if let Some(embedding) = dp.run(&colors) {
                    let matching = implied_matching(h, &embedding, d)?;
                    out.accepted = true;
                    out.witness = Some(LineWitness {
                        forest: f.clone(),
                        decomposition: d.clone(),
                        embedding,
                        matching,
                    });
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// Each path `a b c` becomes the `L(h)` edge between host edges `ab` and `bc`.
fn implied_matching(h: &Graph, e: &Embedding, d: &P3Decomposition) -> Result<Matching> {
    let lg = line_graph(h);
    let edges = d.paths.iter().map(|&(a, b, c)| {
        let (x, y, z) = (e.map[a], e.map[b], e.map[c]);
        let i = h.edge_index(x, y).expect("embedded edge");
        let j = h.edge_index(y, z).expect("embedded edge");
        norm(i, j)
    });
    let m = Matching::new(&lg.graph, edges)?;
    if !verify_urm_cycle(&lg.graph, &m)?.is_unique() {
        return Err(Error::Falsified {
            lemma: "path packing yields a uniquely restricted matching",
            detail: format!("matching {:?} of the line graph has an alternating cycle", m.edges()),
        });
    }
    Ok(m)
}

/// Largest `l` accepted by [`urm_line_decide`], probing `l = 1, 2, ..` until a rejection.
pub fn max_line_urm(h: &Graph, delta: f64, seed: u64) -> Result<(usize, Option<LineWitness>)> {
    let mut best = (0, None);
    for l in 1.. {
        let d = urm_line_decide(h, l, delta, seed)?;
        if !d.accepted {
            break;
        }
        best = (l, d.witness);
    }
    Ok(best)
}
