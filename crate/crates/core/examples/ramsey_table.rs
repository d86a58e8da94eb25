//! Exact subcube Ramsey numbers for d = 2 and d = 3 with their witnesses.
//!
//! Run with `cargo run --release --example ramsey_table`.

use subcube::ramsey::{ramsey_exact, verify_witness, RamseyConfig};

fn main() -> subcube::Result<()> {
    let config = RamseyConfig::default();
    println!("d=2: R_2(k,l) for k in 2..=5, l in 2..=4");
    for k in 2..=5 {
        let row: Vec<String> = (2..=4)
            .map(|l| ramsey_exact(2, k, l, &config).map(|r| r.value.to_string()))
            .collect::<subcube::Result<_>>()?;
        println!("  k={k}: {}", row.join(" "));
    }
    println!("d=3:");
    for (k, l) in [(3, 3), (4, 3), (5, 3), (6, 3), (3, 4), (4, 4)] {
        let r = ramsey_exact(3, k, l, &config)?;
        let members: Vec<String> = r.witness.members().iter().map(|m| format!("({m})")).collect();
        println!(
            "  ({k},{l}) = {:>2}  nodes={:<9} {:.2}s  verified={}  {}",
            r.value,
            r.nodes_explored,
            r.elapsed_seconds,
            verify_witness(&r.witness, k, l)?,
            members.join(",")
        );
    }
    Ok(())
}
