//! Subcube intersection graphs of the discrete cube `{0,1}^d`.
//!
//! A family of subcubes (words over `{0,1,*}`) defines an intersection graph
//! with one vertex per subcube. This crate provides the subcube algebra,
//! exact clique and independence machinery that exploits the Helly property,
//! the extremal Turán-type constructions for `K_{r+1}`-free families, the
//! corresponding constructions over arbitrary finite ground sets (Latin
//! squares, pair covers and packings), an exact symmetry-reduced search for
//! the subcube Ramsey numbers `R_d(k, l)`, and a seeded random subcube model.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod cli;
pub mod constructions;
pub mod cube;
pub mod error;
pub mod export;
pub mod family;
pub mod graph;
pub mod groundset;
pub mod optimizer;
pub mod ramsey;
pub mod random;
pub mod report;

pub use cube::{parse_subcube_list, Coord, Point, Subcube};
pub use error::{Error, Result};
pub use family::CubeFamily;
pub use graph::{grow_family, represent_graph, CliqueWitness, Graph, IntersectionGraph};
pub use report::{analyze, AnalysisReport};

/// `n choose 2`.
pub fn choose2(n: u64) -> u128 {
    let n = n as u128;
    n * n.saturating_sub(1) / 2
}

/// `n choose k` for small arguments, saturating on overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
