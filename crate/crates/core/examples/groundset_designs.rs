//! Set systems over a finite ground set: Latin squares, pair covers and
//! pair packings, with their intersection graphs.

use subcube::groundset::{mols_family, pair_cover_family, pair_packing_family};

fn main() -> subcube::Result<()> {
    for (q, r) in [(2, 3), (3, 4), (5, 6)] {
        let f = mols_family(q, r)?;
        println!(
            "mols q={q} r={r}: {} sets over {} points, {} edges",
            f.len(),
            f.ground_size,
            f.intersection_graph().edge_count()
        );
    }
    for n in [5, 7, 9, 13] {
        let f = pair_cover_family(n, 3)?;
        println!("cover n={n} r=3: m={} blocks, {} edges", f.ground_size, f.intersection_graph().edge_count());
    }
    for n in [6, 7, 10] {
        let f = pair_packing_family(n, 3)?;
        println!("packing n={n} r=3: m={} blocks, {} edges", f.ground_size, f.intersection_graph().edge_count());
    }
    println!("{}", pair_packing_family(6, 3)?.to_json());
    Ok(())
}
