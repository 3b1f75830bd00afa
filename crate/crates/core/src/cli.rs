//! The `urm` command line.
//!
//! Exit codes: 0 yes, 1 no, 2 input error, 3 internal falsification.

use crate::error::{Error, Result};
use crate::exact::{max_urm_bb, max_urm_brute, Budget};
use crate::gadget::{build_gadget, parse_e3c_json, vertex_cover_witness};
use crate::graph::{line_graph, parse_graph, parse_matching, random_graph, root_graph, write_graph, Edge, Graph};
use crate::linegraph::{candidate_forests, p3_filter, urm_line_decide};
use crate::report::{digest, ReportResult, RunReport, Verdict};
use crate::treewidth::{parse_td, solve_with_decomposition};
use crate::verify::{validate_witness, verify_urm_cycle, verify_urm_pm, Witness, PM_VERIFIER_CAP};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_FALSIFIED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "urm", version, about = "Maximum uniquely restricted matchings")]
pub struct Cli {
    /// Worker threads.
    #[arg(long, global = true, env = "URM_JOBS")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a matching is uniquely restricted.
    Verify { graph: PathBuf, matching: PathBuf },
    /// Compute a maximum uniquely restricted matching, or decide size `--l`.
    Solve(SolveArgs),
    /// Write generated instances.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Dump filter-surviving candidate forests.
    Forests {
        #[arg(long)]
        l: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    Brute,
    Bb,
    Treewidth,
    Linegraph,
}

#[derive(clap::Args, Debug)]
pub struct SolveArgs {
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Tree decomposition in `.td` format.
    #[arg(long)]
    pub td: Option<PathBuf>,
    /// Target size for the line-graph decision.
    #[arg(long)]
    pub l: Option<usize>,
    /// The input is the root graph `H`; solve on its line graph.
    #[arg(long)]
    pub root: bool,
    #[arg(long, default_value_t = 1e-3)]
    pub delta: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Time budget for branch and bound, e.g. `30s`, `500ms`, `2m`, `1h`.
    #[arg(long, value_parser = parse_duration)]
    pub budget: Option<Duration>,
    /// Node budget for branch and bound.
    #[arg(long)]
    pub node_budget: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Composed graph from Exact-3-Cover instances: writes `<out>.gr` and `<out>.json`.
    Gadget {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Erdős–Rényi graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

pub fn parse_duration(s: &str) -> std::result::Result<Duration, String> {
    let s = s.trim();
    let split = s.find(|c: char| !c.is_ascii_digit() && c != '.').unwrap_or(s.len());
    let (num, unit) = s.split_at(split);
    let x: f64 = num.parse().map_err(|_| format!("bad duration {s:?}"))?;
    let secs = match unit {
        "ms" => x / 1e3,
        "" | "s" => x,
        "m" => x * 60.0,
        "h" => x * 3600.0,
        _ => return Err(format!("unknown duration unit {unit:?}")),
    };
    Ok(Duration::from_secs_f64(secs))
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Falsified { .. } | Error::Internal(_) => EXIT_FALSIFIED,
        _ => EXIT_INPUT,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_YES };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let jobs = cli.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())).max(1);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let mut buf = Vec::new();
    let r = pool.install(|| dispatch(&cli.command, jobs, &mut buf));
    let _ = out.write_all(&buf);
    match r {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: &Command, jobs: usize, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Verify { graph, matching } => cmd_verify(graph, matching, jobs, out),
        Command::Solve(a) => cmd_solve(a, jobs, out),
        Command::Gen(GenCommand::Gadget { input, out: prefix }) => cmd_gen_gadget(input, prefix, jobs, out),
        Command::Gen(GenCommand::Random { n, p, seed, out: path }) => cmd_gen_random(*n, *p, *seed, path, jobs, out),
        Command::Forests { l } => cmd_forests(*l, out),
    }
}

fn emit(out: &mut dyn Write, r: &RunReport) -> Result<()> {
    writeln!(out, "{}", r.to_json())?;
    Ok(())
}

pub fn cmd_verify(graph: &Path, matching: &Path, jobs: usize, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let (gt, mt) = (read(graph)?, read(matching)?);
    let g = parse_graph(&gt)?;
    let m = parse_matching(&g, &mt)?;
    let cyc = verify_urm_cycle(&g, &m)?;
    if let Some(w) = &cyc.witness {
        validate_witness(&g, &m, w)?;
    }
    if 2 * m.len() <= PM_VERIFIER_CAP {
        let pm = verify_urm_pm(&g, &m)?;
        if pm.is_unique() != cyc.is_unique() {
            return Err(Error::Falsified {
                lemma: "verifier agreement",
                detail: format!("cycle search says {:?}, enumeration says {:?}", cyc.verdict, pm.verdict),
            });
        }
    }
    let mut res = ReportResult::new(if cyc.is_unique() { Verdict::Yes } else { Verdict::No });
    res.size = Some(m.len());
    if cyc.is_unique() {
        res.witness = Some(m.edges().to_vec());
    } else if let Some(Witness::Cycle(c)) = &cyc.witness {
        res.cycle = Some(c.clone());
    }
    let rep = RunReport::new("verify", digest(&[gt.as_bytes(), mt.as_bytes()]), jobs, res, start.elapsed()).checked(&g)?;
    emit(out, &rep)?;
    Ok(if cyc.is_unique() { EXIT_YES } else { EXIT_NO })
}

/// Root graph of every component, glued into one graph, with the input vertex
/// behind each root edge.
fn recognize(g: &Graph) -> Result<(Graph, Vec<(Edge, usize)>)> {
    let mut h = Graph::empty(0);
    let mut back = Vec::new();
    for comp in g.components() {
        let sub = g.induced(&comp);
        let Some(r) = root_graph(&sub)? else {
            return Err(Error::contract(format!(
                "not a line graph: the component containing vertex {} has no root graph",
                comp[0]
            )));
        };
        let off = h.vertex_count();
        h = h.disjoint_union(&r.root);
        for (i, &(a, b)) in r.edge_of.iter().enumerate() {
            back.push(((a + off, b + off), comp[i]));
        }
    }
    back.sort_unstable();
    Ok((h, back))
}

pub fn cmd_solve(a: &SolveArgs, jobs: usize, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let gt = read(&a.graph)?;
    let input = parse_graph(&gt)?;
    let mut parts: Vec<Vec<u8>> = vec![gt.clone().into_bytes()];
    let mut counters = crate::report::Counters::default();
    let mut res;
    let mut seed = None;
    let mut g = input.clone();
    match a.algo {
        Algo::Brute | Algo::Bb | Algo::Treewidth if a.root => {
            g = line_graph(&input).graph;
        }
        _ => {}
    }
    let code = match a.algo {
        Algo::Brute => {
            let s = max_urm_brute(&g)?;
            counters.nodes = Some(s.nodes_explored);
            res = ReportResult::new(Verdict::Yes);
            res.size = Some(s.size);
            res.witness = Some(s.matching.edges().to_vec());
            res.optimal = Some(s.optimal);
            EXIT_YES
        }
        Algo::Bb => {
            let budget = Budget {
                nodes: a.node_budget,
                time: a.budget,
            };
            let s = max_urm_bb(&g, budget, None);
            counters.nodes = Some(s.nodes_explored);
            res = ReportResult::new(Verdict::Yes);
            res.size = Some(s.size);
            res.witness = Some(s.matching.edges().to_vec());
            res.optimal = Some(s.optimal);
            EXIT_YES
        }
        Algo::Treewidth => {
            let td = match &a.td {
                Some(p) => {
                    let text = read(p)?;
                    parts.push(text.clone().into_bytes());
                    Some(parse_td(&text)?)
                }
                None => None,
            };
            let s = solve_with_decomposition(&g, td.as_ref())?;
            counters.states = Some(s.stats.total_states as u64);
            res = ReportResult::new(Verdict::Yes);
            res.size = Some(s.solution.size);
            res.witness = Some(s.solution.matching.edges().to_vec());
            res.optimal = Some(true);
            res.details = Some(serde_json::to_value(&s.stats)?);
            EXIT_YES
        }
        Algo::Linegraph => {
            let l = a.l.ok_or_else(|| Error::contract("--algo linegraph needs --l"))?;
            parts.push(format!("l={l} delta={} seed={} root={}", a.delta, a.seed, a.root).into_bytes());
            seed = Some(a.seed);
            let (h, back) = if a.root { (input.clone(), Vec::new()) } else { recognize(&input)? };
            if a.root {
                g = line_graph(&h).graph;
            }
            let d = urm_line_decide(&h, l, a.delta, a.seed)?;
            counters.trials = Some(d.trials);
            res = ReportResult::new(if d.accepted { Verdict::Yes } else { Verdict::No });
            res.target = Some(l);
            res.optimal = None;
            res.details = Some(serde_json::json!({
                "forests_considered": d.forests_considered,
                "forests_surviving": d.forests_surviving,
            }));
            if let Some(w) = &d.witness {
                let lg = line_graph(&h);
                let to_input = |i: usize| -> usize {
                    if a.root {
                        i
                    } else {
                        let e = lg.host_edge[i];
                        back[back.binary_search_by_key(&e, |x| x.0).expect("root edge maps back")].1
                    }
                };
                let edges: Vec<Edge> = w.matching.edges().iter().map(|&(x, y)| (to_input(x), to_input(y))).collect();
                res.size = Some(edges.len());
                res.witness = Some(edges);
                res.details.as_mut().unwrap()["forest"] = serde_json::json!(w.forest.canonical_key);
                res.details.as_mut().unwrap()["host_paths"] = serde_json::json!(w
                    .decomposition
                    .paths
                    .iter()
                    .map(|&(x, y, z)| [w.embedding.map[x], w.embedding.map[y], w.embedding.map[z]])
                    .collect::<Vec<_>>());
            } else if l == 0 {
                res.size = Some(0);
                res.witness = Some(Vec::new());
            }
            if d.accepted {
                EXIT_YES
            } else {
                EXIT_NO
            }
        }
    };
    let refs: Vec<&[u8]> = parts.iter().map(|p| p.as_slice()).collect();
    let mut rep = RunReport::new("solve", digest(&refs), jobs, res, start.elapsed());
    rep.algorithm = Some(format!("{:?}", a.algo).to_lowercase());
    rep.seed = seed;
    rep.counters = counters;
    let rep = rep.checked(&g)?;
    emit(out, &rep)?;
    Ok(code)
}

pub fn cmd_gen_gadget(input: &Path, prefix: &Path, jobs: usize, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let text = read(input)?;
    let instances = parse_e3c_json(&text)?;
    let layout = build_gadget(&instances)?;
    vertex_cover_witness(&layout)?;
    let gr = prefix.with_extension("gr");
    let js = prefix.with_extension("json");
    write_file(&gr, &write_graph(&layout.graph))?;
    write_file(&js, &serde_json::to_string_pretty(&layout.metadata())?)?;
    let mut res = ReportResult::new(Verdict::Yes);
    res.target = Some(layout.ell);
    res.details = Some(serde_json::json!({
        "vertices": layout.graph.vertex_count(),
        "edges": layout.graph.edge_count(),
        "collection_size": layout.collection.len(),
        "t": layout.t(),
        "graph_file": gr.display().to_string(),
        "metadata_file": js.display().to_string(),
    }));
    emit(out, &RunReport::new("gen-gadget", digest(&[text.as_bytes()]), jobs, res, start.elapsed()))?;
    Ok(EXIT_YES)
}

pub fn cmd_gen_random(n: usize, p: f64, seed: u64, path: &Path, jobs: usize, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let g = random_graph(n, p, seed)?;
    write_file(path, &write_graph(&g))?;
    let mut res = ReportResult::new(Verdict::Yes);
    res.details = Some(serde_json::json!({ "vertices": n, "edges": g.edge_count(), "p": p, "file": path.display().to_string() }));
    let mut rep = RunReport::new("gen-random", digest(&[format!("{n} {p} {seed}").as_bytes()]), jobs, res, start.elapsed());
    rep.seed = Some(seed);
    emit(out, &rep)?;
    Ok(EXIT_YES)
}

pub const FOREST_DUMP_CAP: usize = 6;

pub fn cmd_forests(l: usize, out: &mut dyn Write) -> Result<i32> {
    if l > FOREST_DUMP_CAP {
        return Err(Error::Resource {
            what: "forest dump size",
            limit: FOREST_DUMP_CAP,
            hint: None,
        });
    }
    let mut dump = Vec::new();
    for f in candidate_forests(l)? {
        if let Some(d) = p3_filter(&f.forest) {
            dump.push(serde_json::json!({
                "canonical_key": f.canonical_key,
                "tree_sizes": f.tree_sizes,
                "vertices": f.forest.vertex_count(),
                "edges": f.forest.edges(),
                "paths": d.paths,
            }));
        }
    }
    writeln!(out, "{}", serde_json::to_string_pretty(&serde_json::json!({ "l": l, "forests": dump }))?)?;
    Ok(EXIT_YES)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn durations() {
        assert_eq!(parse_duration("0s").unwrap(), Duration::ZERO);
        assert_eq!(parse_duration("500ms").unwrap(), Duration::from_millis(500));
        assert_eq!(parse_duration("2m").unwrap(), Duration::from_secs(120));
        assert_eq!(parse_duration("1h").unwrap(), Duration::from_secs(3600));
        assert!(parse_duration("3 parsecs").is_err());
    }

    #[test]
    fn forests_for_one() {
        let mut buf = Vec::new();
        assert_eq!(cmd_forests(1, &mut buf).unwrap(), EXIT_YES);
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["forests"].as_array().unwrap().len(), 1);
        assert_eq!(v["forests"][0]["vertices"], 3);
    }

    #[test]
    fn recognition_maps_back() {
        let h = Graph::path(5);
        let g = line_graph(&h).graph;
        let (root, back) = recognize(&g).unwrap();
        assert_eq!(root.edge_count(), 4);
        assert_eq!(back.len(), 4);
        assert!(recognize(&Graph::star(3)).is_err());
    }
}
