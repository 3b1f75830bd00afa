//! Check matchings with both verifiers and print the alternating cycle when one exists.

use urm::graph::{Graph, Matching};
use urm::verify::{verify_urm_cycle, verify_urm_pm, Witness};

fn main() -> urm::Result<()> {
    let c4 = Graph::cycle(4);
    let p4 = Graph::path(4);
    for (name, g, edges) in [("C4", &c4, vec![(0, 1), (2, 3)]), ("P4", &p4, vec![(0, 1), (2, 3)]), ("C4", &c4, vec![(0, 1)])] {
        let m = Matching::new(g, edges)?;
        let by_cycle = verify_urm_cycle(g, &m)?;
        let by_pm = verify_urm_pm(g, &m)?;
        assert_eq!(by_cycle.is_unique(), by_pm.is_unique());
        print!("{name} {:?}: ", m.edges());
        match by_cycle.witness {
            None => println!("uniquely restricted"),
            Some(Witness::Cycle(c)) => println!("alternating cycle {c:?}"),
            Some(Witness::SecondMatching(n)) => println!("second matching {:?}", n.edges()),
        }
    }
    Ok(())
}
