//! Interrupting an exact Ramsey search and resuming it from its checkpoint.

use subcube::ramsey::{ramsey_exact, RamseyConfig};
use subcube::Error;

fn main() -> subcube::Result<()> {
    let dir = std::env::temp_dir().join(format!("subcube-checkpoint-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("r3-5-3.json");
    let _ = std::fs::remove_file(&path);

    let partial = RamseyConfig {
        checkpoint: Some(path.clone()),
        max_branches: Some(5),
        ..Default::default()
    };
    match ramsey_exact(3, 5, 3, &partial) {
        Err(Error::Resource(msg)) => println!("first run: {msg}"),
        other => println!("first run finished early: {:?}", other.map(|r| r.value)),
    }
    let resume = RamseyConfig {
        checkpoint: Some(path.clone()),
        ..Default::default()
    };
    let resumed = ramsey_exact(3, 5, 3, &resume)?;
    let fresh = ramsey_exact(3, 5, 3, &RamseyConfig::default())?;
    println!(
        "resumed: R_3(5,3) = {} ({} nodes); uninterrupted: {} ({} nodes); same witness: {}",
        resumed.value,
        resumed.nodes_explored,
        fresh.value,
        fresh.nodes_explored,
        resumed.witness == fresh.witness
    );
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
