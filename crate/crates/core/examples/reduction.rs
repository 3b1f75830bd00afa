//! Removing dominated independent vertices can lower the optimum.

use urm::exact::{approx_vertex_cover, max_urm_brute, reduce_dominated, sperner_bound};
use urm::graph::Graph;

fn main() -> urm::Result<()> {
    let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2)])?;
    let cover = approx_vertex_cover(&g);
    let r = reduce_dominated(&g, &cover)?;
    println!("cover {cover:?}, removed {:?}, kept {:?}", r.removed, r.kept);
    println!(
        "optimum before {} after {}",
        max_urm_brute(&g)?.size,
        max_urm_brute(&r.graph)?.size
    );
    println!("independent vertices left {} (antichain bound {:.1})", r.independent_left, sperner_bound(cover.len()));
    Ok(())
}
