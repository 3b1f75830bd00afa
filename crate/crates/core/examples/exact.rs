//! Maximum uniquely restricted matchings by exhaustive search and branch and bound.

use std::time::Duration;
use urm::exact::{max_urm_bb, max_urm_brute, Budget};
use urm::graph::random_graph;

fn main() -> urm::Result<()> {
    for seed in 0..5 {
        let g = random_graph(12, 0.3, seed)?;
        let brute = max_urm_brute(&g)?;
        let bb = max_urm_bb(&g, Budget::unlimited(), None);
        assert_eq!(brute.size, bb.size);
        println!(
            "seed {seed}: m={} mu={} brute nodes {} bb nodes {}",
            g.edge_count(),
            bb.size,
            brute.nodes_explored,
            bb.nodes_explored
        );
    }
    let g = random_graph(60, 0.1, 1)?;
    let s = max_urm_bb(&g, Budget::time(Duration::from_millis(200)), None);
    println!("n=60 under 200 ms: size {} optimal {}", s.size, s.optimal);
    Ok(())
}
