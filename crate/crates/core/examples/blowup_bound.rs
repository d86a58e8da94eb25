//! Lower bounds on R_d(k, l) by blowing up small Ramsey graphs, next to the
//! closed-form upper bounds.

use subcube::ramsey::{lower_bound_blowup, upper_bound_eval, witness_catalog};

fn main() -> subcube::Result<()> {
    for entry in witness_catalog() {
        let d = entry.graph.vertex_count();
        for k in [entry.x, 2 * entry.x, 3 * entry.x] {
            let (bound, family) = lower_bound_blowup(d, k, entry.l, &entry.graph, entry.x)?;
            let upper = upper_bound_eval(d, k, entry.l, None)?;
            println!(
                "{:>4}: d={d} k={k} l={}  {} < R  <= {:.3}  ({}; {} subcubes)",
                entry.name,
                entry.l,
                bound,
                upper.value,
                upper.formula,
                family.len()
            );
        }
    }
    for (d, k, l) in [(16, 10, 3), (3, 5, 4), (2, 3, 4)] {
        println!("upper bound d={d} k={k} l={l}: {}", upper_bound_eval(d, k, l, None)?.value);
    }
    Ok(())
}
