//! Subcube Ramsey numbers.
//!
//! `R_d(k, l)` is the least `n` such that every multiset of `n` subcubes of
//! `{0,1}^d` contains `k` pairwise intersecting members or `l` pairwise
//! disjoint ones. [`ramsey_exact`] computes it by exhaustive orderly search
//! up to the symmetries of the cube and returns a largest family avoiding
//! both patterns as a witness.

mod bounds;
mod checkpoint;
mod search;
mod symmetry;

use std::path::PathBuf;
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use bounds::{catalog_entry, lower_bound_blowup, upper_bound_eval, witness_catalog, CatalogEntry, UpperBound};
pub use checkpoint::{config_hash, SearchCheckpoint, CHECKPOINT_FORMAT};
pub use search::{BranchResult, MAX_SEARCH_DIMENSION};
pub use symmetry::{hyperoctahedral_group, CubeSymmetry};

use crate::cube::{Point, Subcube};
use crate::error::{Error, Result};
use crate::family::CubeFamily;
use crate::graph::IntersectionGraph;
use search::{all_subcubes, explore, frontier, Universe};

const SEARCH_VERSION: u32 = 1;

/// True iff the family has no `k` pairwise intersecting members and no `l`
/// pairwise disjoint ones.
pub fn verify_witness(family: &CubeFamily, k: usize, l: usize) -> Result<bool> {
    if k < 2 || l < 2 {
        return Err(Error::InvalidArgument("k and l must be at least 2".into()));
    }
    let g = IntersectionGraph::build(family);
    Ok(g.clique_number().0 < k && g.independence_number() < l)
}

#[derive(Clone, Debug)]
pub struct RamseyConfig {
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    pub checkpoint: Option<PathBuf>,
    pub dimension_cap: usize,
    /// Permutation of the candidate subcubes (positions in lexicographic
    /// text order) defining the search order.
    pub universe_order: Option<Vec<usize>>,
    pub symmetry: bool,
    /// Depth of the branch roots distributed over workers.
    pub branch_depth: usize,
    /// Stop with a resource error after finishing this many new branches.
    pub max_branches: Option<usize>,
}

impl Default for RamseyConfig {
    fn default() -> Self {
        RamseyConfig {
            workers: None,
            checkpoint: None,
            dimension_cap: MAX_SEARCH_DIMENSION,
            universe_order: None,
            symmetry: true,
            branch_depth: 3,
            max_branches: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RamseyResult {
    pub d: usize,
    pub k: usize,
    pub l: usize,
    pub value: usize,
    pub witness: CubeFamily,
    pub nodes_explored: u64,
    pub branches: usize,
    pub elapsed_seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RamseyResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }
}

fn check_args(d: usize, k: usize, l: usize) -> Result<()> {
    if d < 1 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    if k < 2 || l < 2 {
        return Err(Error::InvalidArgument("k and l must be at least 2".into()));
    }
    Ok(())
}

/// Computes `R_d(k, l)` with a verified witness of size `R_d(k, l) - 1`.
pub fn ramsey_exact(d: usize, k: usize, l: usize, config: &RamseyConfig) -> Result<RamseyResult> {
    check_args(d, k, l)?;
    let started = Instant::now();
    if d < usize::BITS as usize && l > 1 << d {
        // No family has more than 2^d pairwise disjoint members.
        let mut witness = CubeFamily::new(d);
        for x in 0..1u64 << d {
            for _ in 0..k - 1 {
                witness.push(Subcube::singleton(&Point::from_index(d, x))?)?;
            }
        }
        return Ok(RamseyResult {
            d,
            k,
            l,
            value: (k - 1) * (1 << d) + 1,
            witness,
            nodes_explored: 0,
            branches: 0,
            elapsed_seconds: started.elapsed().as_secs_f64(),
            note: Some("l > 2^d: only the clique condition can be met, value (k-1) 2^d + 1".into()),
        });
    }
    let cap = config.dimension_cap.min(MAX_SEARCH_DIMENSION);
    if d > cap {
        return Err(Error::Resource(format!("exact search supports d <= {cap}, asked for d = {d}")));
    }
    let mut cubes = all_subcubes(d);
    if let Some(order) = &config.universe_order {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..cubes.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(format!(
                "universe order must be a permutation of 0..{}",
                cubes.len()
            )));
        }
        cubes = order.iter().map(|&i| cubes[i].clone()).collect();
    }
    let description = format!(
        "v{SEARCH_VERSION};d={d};k={k};l={l};order={:?};symmetry={};depth={}",
        config.universe_order, config.symmetry, config.branch_depth
    );
    let hash = config_hash(&description);
    let universe = Universe::new(cubes, k, l, config.symmetry);

    let cp = match &config.checkpoint {
        Some(path) if path.exists() => SearchCheckpoint::load(path, &hash)?,
        _ => {
            let (prelude, roots) = frontier(&universe, config.branch_depth);
            SearchCheckpoint {
                format: CHECKPOINT_FORMAT.into(),
                config_hash: hash,
                d,
                k,
                l,
                prelude,
                frontier: roots,
                completed: Default::default(),
            }
        }
    };
    if let Some(path) = &config.checkpoint {
        cp.save(path)?;
    }

    let mut pending = cp.pending();
    let interrupted = config.max_branches.is_some_and(|m| m < pending.len());
    if let Some(m) = config.max_branches {
        pending.truncate(m);
    }
    let shared = Mutex::new(cp);
    let work = || -> Result<()> {
        let roots = shared.lock().expect("checkpoint lock").frontier.clone();
        pending.par_iter().try_for_each(|&i| {
            let result = explore(&universe, &roots[i]);
            let mut cp = shared.lock().expect("checkpoint lock");
            cp.completed.insert(i, result);
            match &config.checkpoint {
                Some(path) => cp.save(path),
                None => Ok(()),
            }
        })
    };
    match config.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Resource(e.to_string()))?
            .install(work)?,
        None => work()?,
    }
    let cp = shared.into_inner().expect("checkpoint lock");
    if interrupted {
        return Err(Error::Resource(format!(
            "search stopped with {} of {} branches finished; resume from the checkpoint",
            cp.completed.len(),
            cp.frontier.len()
        )));
    }

    let mut total = cp.prelude.clone();
    for branch in cp.completed.values() {
        total.absorb(branch);
    }
    let members = total.best.iter().map(|&t| universe.cubes[t as usize].clone()).collect();
    let witness = CubeFamily::from_members(d, members)?;
    if !verify_witness(&witness, k, l)? {
        return Err(Error::InvalidWitness("search produced an invalid witness".into()));
    }
    Ok(RamseyResult {
        d,
        k,
        l,
        value: witness.len() + 1,
        witness,
        nodes_explored: total.nodes,
        branches: cp.frontier.len(),
        elapsed_seconds: started.elapsed().as_secs_f64(),
        note: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(d: usize, k: usize, l: usize) -> RamseyResult {
        ramsey_exact(d, k, l, &RamseyConfig::default()).unwrap()
    }

    #[test]
    fn verify_examples() {
        let c5 = CubeFamily::parse_members(&["0**", "*0*", "1*0", "11*", "*11"]).unwrap();
        assert!(verify_witness(&c5, 3, 3).unwrap());
        let printed = CubeFamily::parse_members(&["**0", "**0", "*11", "0*1", "11*"]).unwrap();
        assert!(!verify_witness(&printed, 3, 3).unwrap());
        let single = CubeFamily::parse_members(&["***"]).unwrap();
        assert!(verify_witness(&single, 2, 3).unwrap());
    }

    #[test]
    fn two_dimensional_values() {
        for k in 2..=5 {
            for l in 2..=4 {
                assert_eq!(exact(2, k, l).value, (k - 1) * (l - 1) + 1, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn small_three_dimensional_values() {
        assert_eq!(exact(3, 3, 3).value, 6);
        assert_eq!(exact(3, 4, 2).value, 4);
        assert_eq!(exact(3, 2, 9).value, 9);
    }

    #[test]
    fn parallel_and_serial_agree() {
        let one = ramsey_exact(
            3,
            4,
            3,
            &RamseyConfig {
                workers: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        let many = ramsey_exact(
            3,
            4,
            3,
            &RamseyConfig {
                workers: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one.value, 8);
        assert_eq!((one.value, one.nodes_explored), (many.value, many.nodes_explored));
        assert_eq!(one.witness, many.witness);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(ramsey_exact(3, 1, 3, &RamseyConfig::default()).is_err());
        assert!(matches!(
            ramsey_exact(5, 3, 3, &RamseyConfig::default()),
            Err(Error::Resource(_))
        ));
    }
}
