//! Extremal K_{r+1}-free families and their closed-form edge counts.

use subcube::constructions::{
    full_codim_family, large_n_edges, large_n_family, mixed_partite_edges, mixed_partite_family, partite_family,
    partition_family, turan_number,
};
use subcube::IntersectionGraph;

fn edges(f: &subcube::CubeFamily) -> usize {
    IntersectionGraph::build(f).edge_count()
}

fn main() -> subcube::Result<()> {
    for (n, d, k) in [(8, 4, 2), (6, 6, 3), (10, 6, 2)] {
        let f = partite_family(n, d, k)?;
        println!("partite n={n} d={d} k={k}: {} edges, Turan number {}", edges(&f), turan_number(n, k));
    }
    for (d, r) in [(2, 2), (4, 2), (6, 3)] {
        let f = full_codim_family(d, r)?;
        println!("full-codim d={d} r={r}: {} subcubes, {} edges", f.len(), edges(&f));
    }
    let f = large_n_family(8, 4, 2)?;
    println!("large-n n=8 d=4 k=2: {} edges (formula {})", edges(&f), large_n_edges(4, 2));

    let sets = vec![vec![0, 1], vec![1, 2, 3], vec![4]];
    let f = mixed_partite_family(5, &sets)?;
    println!("mixed {sets:?}: {} edges (formula {})", edges(&f), mixed_partite_edges(&sets));

    let f = partition_family(6, &[2, 2, 2])?;
    let g = IntersectionGraph::build(&f);
    println!("three classes on 2+2+2 coordinates: {} triangles, clique number {}", g.count_cliques(3), g.clique_number().0);
    Ok(())
}
