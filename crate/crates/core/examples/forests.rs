//! Integer partitions, free trees and the candidate forests they generate.

use urm::linegraph::{candidate_forests, free_trees, integer_partitions, p3_filter, partition_count};

fn main() -> urm::Result<()> {
    println!("partitions of 6: {:?}", integer_partitions(6));
    println!("p(1..=12): {:?}", (1..=12).map(partition_count).collect::<Vec<_>>());
    println!("free trees on 1..=10 vertices: {:?}", (1..=10).map(|s| free_trees(s).map(|t| t.len())).collect::<Result<Vec<_>, _>>()?);
    for l in 1..=4 {
        let fs = candidate_forests(l)?;
        let surviving = fs.iter().filter(|f| p3_filter(&f.forest).is_some()).count();
        println!("l={l}: {} forests, {surviving} split into paths on three vertices", fs.len());
    }
    for f in candidate_forests(2)? {
        println!("  {} sizes {:?} split {:?}", f.canonical_key, f.tree_sizes, p3_filter(&f.forest).map(|d| d.paths));
    }
    Ok(())
}
