//! Exact solving over a tree decomposition, with table statistics.

use urm::graph::{random_graph, Graph};
use urm::treewidth::{heuristic_tree_decomposition, solve_with_decomposition, write_td};

fn main() -> urm::Result<()> {
    let grid = {
        let (w, h) = (4, 6);
        let id = |x: usize, y: usize| y * w + x;
        let mut e = Vec::new();
        for y in 0..h {
            for x in 0..w {
                if x + 1 < w {
                    e.push((id(x, y), id(x + 1, y)));
                }
                if y + 1 < h {
                    e.push((id(x, y), id(x, y + 1)));
                }
            }
        }
        Graph::new(w * h, e)?
    };
    let td = heuristic_tree_decomposition(&grid);
    print!("{}", write_td(&td, grid.vertex_count()));
    for (name, g) in [("4x6 grid", grid), ("G(40, 0.08)", random_graph(40, 0.08, 3)?)] {
        let s = solve_with_decomposition(&g, None)?;
        println!(
            "{name}: mu={} width={} nodes={} largest table={}",
            s.solution.size, s.stats.width, s.stats.nodes, s.stats.max.states
        );
    }
    Ok(())
}
