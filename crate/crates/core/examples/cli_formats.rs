//! Round-trip the text formats used by the command line tool.

use urm::graph::{parse_graph, parse_matching, write_graph, write_matching, Graph, Matching};
use urm::treewidth::{heuristic_tree_decomposition, parse_td, write_td};

fn main() -> urm::Result<()> {
    let g = Graph::cycle(6);
    let text = write_graph(&g);
    print!("{text}");
    assert_eq!(parse_graph(&text)?, g);
    let m = Matching::new(&g, [(0, 1), (2, 3)])?;
    let mt = write_matching(&m);
    print!("{mt}");
    assert_eq!(parse_matching(&g, &mt)?, m);
    let td = write_td(&heuristic_tree_decomposition(&g), g.vertex_count());
    print!("{td}");
    parse_td(&td)?;
    Ok(())
}
