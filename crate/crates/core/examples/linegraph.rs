//! Randomized decision on line graphs: recognise a root, then search for a witness forest.

use urm::exact::max_urm_brute;
use urm::graph::{line_graph, root_graph, Graph};
use urm::linegraph::{max_line_urm, urm_line_decide};

fn main() -> urm::Result<()> {
    let h = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 7), (1, 6)])?;
    let lg = line_graph(&h).graph;
    let root = root_graph(&lg)?.expect("a line graph");
    println!("L(H) has {} vertices; recovered root has {} edges", lg.vertex_count(), root.root.edge_count());
    for l in 1..=4 {
        let d = urm_line_decide(&root.root, l, 1e-3, 0)?;
        println!(
            "l={l}: {} ({} of {} forests pass the filter, {} trials)",
            if d.accepted { "yes" } else { "no" },
            d.forests_surviving,
            d.forests_considered,
            d.trials
        );
        if let Some(w) = d.witness {
            println!("  forest {} paths {:?}", w.forest.canonical_key, w.decomposition.paths);
        }
    }
    let (best, _) = max_line_urm(&h, 1e-3, 0)?;
    println!("largest accepted l = {best}, exact optimum = {}", max_urm_brute(&lg)?.size);
    Ok(())
}
