//! Seeded random subcube families against the analytic edge probability.

use subcube::random::{edge_probability, sample_family, sample_family_codim, RandomModelParams};
use subcube::IntersectionGraph;

fn main() -> subcube::Result<()> {
    let (n, d, p) = (200, 8, 0.25);
    let f = sample_family(&RandomModelParams::new(n, d, p, 2024))?;
    let g = IntersectionGraph::build(&f);
    let pairs = (n * (n - 1) / 2) as f64;
    println!(
        "n={n} d={d} p={p}: edge density {:.4}, expected {:.5}",
        g.edge_count() as f64 / pairs,
        edge_probability(d, p)
    );

    let uniform = vec![1.0 / 7.0; 7];
    let params = RandomModelParams::new(10_000, 6, 0.0, 7).with_codim_distribution(uniform);
    let f = sample_family_codim(&params)?;
    let mut hist = [0usize; 7];
    for m in f.members() {
        hist[m.codimension()] += 1;
    }
    println!("codimension histogram over 10000 draws: {hist:?}");
    println!("provenance: {}", params.provenance());
    Ok(())
}
