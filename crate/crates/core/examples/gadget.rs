//! Build the reduction graph for a collection of exact-cover instances and turn covers into matchings.

use urm::gadget::{
    build_gadget, check_structural_bounds, cover_matching, e3c_solve, extract_cover, vertex_cover_witness, E3CInstance,
};
use urm::verify::verify_urm;

fn main() -> urm::Result<()> {
    let instances = vec![
        E3CInstance::new(6, [[1, 2, 3], [1, 4, 5]])?,
        E3CInstance::new(6, [[1, 2, 3], [4, 5, 6], [2, 4, 6]])?,
    ];
    let layout = build_gadget(&instances)?;
    println!(
        "{} vertices, {} edges, target size {}, vertex cover of size {}",
        layout.graph.vertex_count(),
        layout.graph.edge_count(),
        layout.ell,
        vertex_cover_witness(&layout)?.len()
    );
    for (q, inst) in instances.iter().enumerate() {
        let Some(cover) = e3c_solve(inst)? else {
            println!("instance {q}: no exact cover");
            continue;
        };
        let m = cover_matching(&layout, q, &cover)?;
        assert!(verify_urm(&layout.graph, &m)?.is_unique());
        let report = check_structural_bounds(&layout, &m)?;
        println!("instance {q}: cover {cover:?} gives a matching of size {} with {} sad gadgets", m.len(), report.sad_count());
        println!("  recovered {:?}", extract_cover(&layout, &m)?);
    }
    Ok(())
}
