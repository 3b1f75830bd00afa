//! Acceptance criteria. Each test writes one `criterion N: PASS|FAIL` line to stderr.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};
use urm::exact::{approx_vertex_cover, max_urm_bb, max_urm_brute, reduce_dominated, sperner_bound, Budget};
use urm::gadget::{
    build_gadget, check_structural_bounds, e3c_solve, extract_cover, cover_matching, vertex_cover_witness, E3CInstance,
};
use urm::graph::enumerate::{canonical_key, connected_graphs, connected_graphs_by_edges};
use urm::graph::{line_graph, random_graph, Graph, Matching};
use urm::linegraph::{
    candidate_forests, free_trees, integer_partitions, max_line_urm, p3_filter, p3_filter_oracle, p3_filter_with,
    FilterVariant,
};
use urm::treewidth::{heuristic_tree_decomposition, solve_with_decomposition, to_nice, validate_nice};
use urm::verify::{verify_urm_cycle, verify_urm_pm, PM_VERIFIER_CAP};

/// Writes past the test harness capture so the line shows on every run.
fn line(n: u32, pass: bool, detail: impl AsRef<str>) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {n}: {verdict} {}", detail.as_ref());
}

fn all_matchings(g: &Graph) -> Vec<Matching> {
    fn go(g: &Graph, i: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        if i == g.edge_count() {
            out.push(Matching::new(g, cur.iter().copied()).unwrap());
            return;
        }
        go(g, i + 1, used, cur, out);
        let (u, v) = g.edges()[i];
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            cur.push((u, v));
            go(g, i + 1, used, cur, out);
            cur.pop();
            used[u] = false;
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    go(g, 0, &mut vec![false; g.vertex_count()], &mut Vec::new(), &mut out);
    out
}

fn random_matching(g: &Graph, rng: &mut ChaCha8Rng) -> Matching {
    let mut edges = g.edges().to_vec();
    edges.shuffle(rng);
    let keep = rng.gen_range(0..=edges.len());
    let mut used = vec![false; g.vertex_count()];
    let mut m = Vec::new();
    for &(u, v) in &edges[..keep] {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            m.push((u, v));
        }
    }
    Matching::new(g, m).unwrap()
}

#[test]
fn criterion_1_verifier_agreement() {
    let t = Instant::now();
    let (mut checked, mut bad) = (0usize, Vec::new());
    for n in 1..=7 {
        for g in connected_graphs(n) {
            for m in all_matchings(&g) {
                checked += 1;
                let a = verify_urm_cycle(&g, &m).unwrap().is_unique();
                let b = verify_urm_pm(&g, &m).unwrap().is_unique();
                if a != b {
                    bad.push((g.edges().to_vec(), m.edges().to_vec()));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(n, p, rng.gen()).unwrap();
        let m = random_matching(&g, &mut rng);
        checked += 1;
        let a = verify_urm_cycle(&g, &m).unwrap().is_unique();
        let b = verify_urm_pm(&g, &m).unwrap().is_unique();
        if a != b {
            bad.push((g.edges().to_vec(), m.edges().to_vec()));
        }
    }
    let pass = bad.is_empty();
    line(1, pass, format!("{checked} (graph, matching) pairs, {} disagreements, {:?}", bad.len(), t.elapsed()));
    assert!(pass, "first disagreement: {:?}", bad.first());
}

#[test]
fn criterion_2_treewidth_dp() {
    let t = Instant::now();
    let mut cases: Vec<Graph> = (1..=7).flat_map(connected_graphs).collect();
    let exhaustive = cases.len();
    for i in 0..500u64 {
        let p = [0.2, 0.35, 0.5][(i % 3) as usize];
        let n = 1 + (i as usize) % 12;
        cases.push(random_graph(n, p, 2000 + i).unwrap());
    }
    let mut bad = Vec::new();
    let mut max_states = 0;
    for g in &cases {
        let s = solve_with_decomposition(g, None).unwrap();
        max_states = max_states.max(s.stats.max.states);
        let want = max_urm_brute(g).unwrap().size;
        let m = &s.solution.matching;
        let witness_ok = verify_urm_cycle(g, m).unwrap().is_unique()
            && (2 * m.len() > PM_VERIFIER_CAP || verify_urm_pm(g, m).unwrap().is_unique());
        if s.solution.size != want || !witness_ok {
            bad.push((g.edges().to_vec(), s.solution.size, want));
        }
    }
    let pass = bad.is_empty();
    line(
        2,
        pass,
        format!(
            "{exhaustive} exhaustive + 500 random graphs, {} mismatches, largest table {max_states} states, {:?}",
            bad.len(),
            t.elapsed()
        ),
    );
    assert!(pass, "{:?}", bad.first());
}

#[test]
fn criterion_3_line_graph_pipeline() {
    let t = Instant::now();
    let delta = 1e-3;
    let mut hosts = connected_graphs_by_edges(8);
    let exhaustive = hosts.len();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    while hosts.len() < exhaustive + 200 {
        let n = rng.gen_range(3..=10);
        let h = random_graph(n, rng.gen_range(0.2..0.6), rng.gen()).unwrap();
        if (1..=12).contains(&h.edge_count()) {
            hosts.push(h);
        }
    }
    let (mut over, mut under) = (Vec::new(), 0usize);
    let mut budget = 0.0;
    for (i, h) in hosts.iter().enumerate() {
        let (l, _) = max_line_urm(h, delta, i as u64).unwrap();
        let mu = max_urm_brute(&line_graph(h).graph).unwrap().size;
        let l_max = h.edge_count() / 2;
        budget += delta * l_max as f64;
        if l > mu {
            over.push(h.edges().to_vec());
        } else if l < mu {
            under += 1;
        }
    }
    // Misses are one-sided; allow the expected count plus three standard deviations.
    let allowed = (budget + 3.0 * budget.sqrt()).ceil() as usize;
    let pass = over.is_empty() && under <= allowed;
    line(
        3,
        pass,
        format!(
            "{exhaustive} exhaustive + 200 random hosts, {} overshoots, {under} misses (allowed {allowed}), {:?}",
            over.len(),
            t.elapsed()
        ),
    );
    assert!(pass, "overshoots {over:?}");
}

#[test]
fn criterion_4_filter_completeness() {
    let t = Instant::now();
    let (mut total, mut bad, mut literal_diff) = (0, Vec::new(), 0);
    for l in 1..=4 {
        for f in candidate_forests(l).unwrap() {
            total += 1;
            let greedy = p3_filter(&f.forest);
            let oracle = p3_filter_oracle(&f.forest).unwrap();
            let valid = greedy.as_ref().is_none_or(|d| d.is_valid_for(&f.forest));
            if greedy.is_some() != oracle.is_some() || !valid {
                bad.push(f.canonical_key.clone());
            }
            let literal = p3_filter_with(&f.forest, FilterVariant::Literal);
            let literal_ok = literal.as_ref().is_some_and(|d| d.is_valid_for(&f.forest));
            if literal_ok != oracle.is_some() {
                literal_diff += 1;
            }
        }
    }
    let pass = bad.is_empty();
    line(
        4,
        pass,
        format!(
            "{total} forests for l <= 4, {} disagreements (literal greedy differs on {literal_diff}), {:?}",
            bad.len(),
            t.elapsed()
        ),
    );
    assert!(pass, "{bad:?}");
}

fn partition_recurrence(k: usize) -> u64 {
    // p(j, m): partitions of j into parts of size at most m.
    let mut p = vec![vec![0u64; k + 1]; k + 1];
    for m in 0..=k {
        p[0][m] = 1;
    }
    for j in 1..=k {
        for m in 1..=k {
            p[j][m] = p[j][m - 1] + if j >= m { p[j - m][m] } else { 0 };
        }
    }
    p[k][k]
}

/// Trees on `s` vertices grown leaf by leaf at every position, deduplicated by canonical form.
fn trees_by_extension(s: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for k in 2..=s {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..k - 1 {
                let g = Graph::new(k, t.edges().iter().copied().chain([(v, k - 1)])).unwrap();
                if seen.insert(canonical_key(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

#[test]
fn criterion_5_counting() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for k in 1..=40 {
        let got = integer_partitions(k).len() as u64;
        if got != partition_recurrence(k) || got as f64 > (3.0 * (k as f64).sqrt()).exp() {
            bad.push(format!("p({k})"));
        }
    }
    let mut counts = Vec::new();
    for s in 1..=10 {
        let ours: BTreeSet<_> = free_trees(s).unwrap().iter().map(canonical_key).collect();
        let oracle: BTreeSet<_> = trees_by_extension(s).iter().map(canonical_key).collect();
        counts.push(ours.len());
        if ours != oracle || free_trees(s).unwrap().len() != ours.len() {
            bad.push(format!("trees({s})"));
        }
    }
    if counts[3..6] != [2, 3, 6] {
        bad.push("trees 4..6".into());
    }
    let pass = bad.is_empty();
    line(5, pass, format!("partitions k <= 40, free trees s <= 10 {counts:?}, {:?}", t.elapsed()));
    assert!(pass, "{bad:?}");
}

fn yes_families() -> Vec<Vec<E3CInstance>> {
    let i = |n, ts: &[[usize; 3]]| E3CInstance::new(n, ts.iter().copied()).unwrap();
    let a = i(6, &[[1, 2, 3], [4, 5, 6]]);
    let b = i(6, &[[1, 2, 3], [1, 4, 5]]);
    let c = i(6, &[[1, 2, 4], [3, 5, 6], [1, 2, 5]]);
    vec![
        vec![i(3, &[[1, 2, 3]])],
        vec![a.clone()],
        vec![a.clone(), b.clone()],
        vec![b, c, a],
    ]
}

#[test]
fn criterion_6_gadget_yes_direction() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut built = 0;
    for family in yes_families() {
        let layout = build_gadget(&family).unwrap();
        let n = layout.n;
        let c = layout.collection.len();
        if layout.ell != 4 * c + 8 * n / 3 + 1 || layout.graph.vertex_count() != 4 * n + 14 * c + 1 + family.len() {
            bad.push(format!("sizes n={n} t={}", family.len()));
        }
        if vertex_cover_witness(&layout).map(|y| y.len()).ok() != Some(4 * n + 14 * c + 1) {
            bad.push(format!("cover n={n} t={}", family.len()));
        }
        for (q, inst) in family.iter().enumerate() {
            let Some(cover) = e3c_solve(inst).unwrap() else { continue };
            built += 1;
            let m = cover_matching(&layout, q, &cover).unwrap();
            let unique = verify_urm_cycle(&layout.graph, &m).unwrap().is_unique()
                && (2 * m.len() > PM_VERIFIER_CAP || verify_urm_pm(&layout.graph, &m).unwrap().is_unique());
            let rep = check_structural_bounds(&layout, &m);
            let sad_ok = rep.as_ref().is_ok_and(|r| r.sad_count() == n / 3);
            let mut sorted = cover.clone();
            sorted.sort_unstable();
            let round_trip = extract_cover(&layout, &m).map(|(qq, mut cv)| {
                cv.sort_unstable();
                qq == q && cv == sorted
            });
            if m.len() != layout.ell || !unique || !sad_ok || !matches!(round_trip, Ok(true)) {
                bad.push(format!("n={n} t={} q={q}: {rep:?}", family.len()));
            }
        }
    }
    let pass = bad.is_empty() && built > 0;
    line(6, pass, format!("{built} witness matchings of size ell checked, {:?}", t.elapsed()));
    assert!(pass, "{bad:?}");
}

#[test]
#[ignore = "extended: branch and bound on a 54-vertex gadget; budget from URM_NO_DIRECTION_SECS (default 3600)"]
fn criterion_7_gadget_no_direction() {
    let secs: u64 = std::env::var("URM_NO_DIRECTION_SECS").ok().and_then(|s| s.parse().ok()).unwrap_or(3600);
    let inst = E3CInstance::new(6, [[1, 2, 3], [1, 4, 5]]).unwrap();
    assert_eq!(e3c_solve(&inst).unwrap(), None);
    let layout = build_gadget(&[inst]).unwrap();
    assert_eq!(layout.ell, 25);
    let s = max_urm_bb(&layout.graph, Budget::time(Duration::from_secs(secs)), Some(layout.ell));
    check_structural_bounds(&layout, &s.matching).unwrap();
    if s.size >= layout.ell {
        // An exact cover cannot exist, so extraction must fail here.
        let r = extract_cover(&layout, &s.matching);
        line(7, false, format!("size {} URM found; extraction gave {r:?}", s.size));
        panic!("size-ell matching on an unsolvable instance: {:?}", s.matching);
    }
    // Independent exact value from the decomposition solver.
    let dp = solve_with_decomposition(&layout.graph, None).unwrap().solution.size;
    let detail = if s.search_complete {
        format!("certified mu < {} in {} nodes, {:?}; exact mu = {dp}", layout.ell, s.nodes_explored, s.elapsed)
    } else {
        format!("budget {secs}s exhausted without a size-{} URM, not certified; exact mu = {dp}", layout.ell)
    };
    let pass = dp < layout.ell;
    line(7, pass, detail);
    assert!(pass);
}

#[test]
fn criterion_8_reduction_soundness() {
    let t = Instant::now();
    let (mut lost, mut sperner_bad, mut fired) = (Vec::new(), 0, 0);
    for i in 0..200u64 {
        let n = 2 + (i as usize) % 11;
        let g = random_graph(n, 0.4, 5000 + i).unwrap();
        let cover = approx_vertex_cover(&g);
        let r = match reduce_dominated(&g, &cover) {
            Ok(r) => r,
            Err(_) => {
                sperner_bad += 1;
                continue;
            }
        };
        if cover.len() >= 2 && r.independent_left as f64 > sperner_bound(cover.len()) {
            sperner_bad += 1;
        }
        if !r.removed.is_empty() {
            fired += 1;
        }
        let before = max_urm_brute(&g).unwrap().size;
        let after = max_urm_brute(&r.graph).unwrap().size;
        if before != after {
            lost.push((g.edges().to_vec(), before, after));
        }
    }
    lost.sort_by_key(|c| c.0.len());
    let pass = lost.is_empty() && sperner_bad == 0;
    line(
        8,
        pass,
        format!(
            "rule fired on {fired}/200 graphs, optimum changed on {}, Sperner violations {sperner_bad}, {:?}; smallest: {:?}",
            lost.len(),
            t.elapsed(),
            lost.first()
        ),
    );
    assert!(pass, "dominated-vertex removal changed the optimum on {} graphs: {:?}", lost.len(), lost.first());
}

#[test]
fn criterion_9_decomposition_validity() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bad = Vec::new();
    let mut widest = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=30);
        let g = random_graph(n, rng.gen_range(0.05..0.4), rng.gen()).unwrap();
        let td = heuristic_tree_decomposition(&g);
        widest = widest.max(td.width());
        let ok = td.validate(&g).is_ok() && to_nice(&td, &g).and_then(|ntd| validate_nice(&ntd, &g)).is_ok();
        if !ok {
            bad.push(g.edges().to_vec());
        }
    }
    let pass = bad.is_empty();
    line(9, pass, format!("200 random graphs n <= 30, widest bag {}, {:?}", widest + 1, t.elapsed()));
    assert!(pass, "{:?}", bad.first());
}
