//! Best block sizes for an r-partite family of n subcubes, compared with the
//! Turán number.

use subcube::constructions::turan_number;
use subcube::optimizer::optimal_partite_profile;
use subcube::IntersectionGraph;

fn main() -> subcube::Result<()> {
    println!("{:>4} {:>3} {:>3} {:>14} {:>14} {:>8}  blocks / class sizes", "n", "d", "r", "edges", "turan", "ratio");
    for (n, d, r) in [(8, 4, 2), (5, 2, 3), (40, 8, 3), (100, 10, 4), (1000, 16, 3)] {
        let s = optimal_partite_profile(n, d, r)?;
        let t = turan_number(n, r as u64);
        println!(
            "{n:>4} {d:>3} {r:>3} {:>14} {:>14} {:>8.4}  {:?} / {:?}",
            s.edges,
            t,
            s.edges as f64 / t as f64,
            s.profile.part_dims,
            s.profile.part_sizes
        );
    }
    let s = optimal_partite_profile(20, 6, 3)?;
    let f = s.profile.realize(6)?;
    println!("realized n=20 d=6 r=3: {} edges", IntersectionGraph::build(&f).edge_count());
    Ok(())
}
