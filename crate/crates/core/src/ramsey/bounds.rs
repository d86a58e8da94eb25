//! Closed-form upper bounds, the blow-up lower bound, and a catalog of
//! small Ramsey witness graphs.

use serde::Serialize;

use super::verify_witness;
use crate::error::{Error, Result};
use crate::family::CubeFamily;
use crate::graph::{find_ramsey_graph, represent_graph, Graph};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UpperBound {
    pub value: f64,
    pub formula: String,
}

/// Evaluates the applicable upper bound on `R_d(k, l)` (logarithms base 2).
///
/// * `l = 3`, `d >= 3`: `2 d k / (log d - log log d)`; with `alpha` given,
///   `(d / alpha + 2^alpha) k` instead.
/// * `d = 2`: `2 k (l - 1)`.
/// * otherwise: `2 d^{l-2} k`.
pub fn upper_bound_eval(d: usize, k: usize, l: usize, alpha: Option<f64>) -> Result<UpperBound> {
    if d < 1 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    if k < 2 || l < 2 {
        return Err(Error::InvalidArgument("k and l must be at least 2".into()));
    }
    let (df, kf) = (d as f64, k as f64);
    if l == 3 && d >= 3 {
        if let Some(a) = alpha {
            if a.is_nan() || a <= 0.0 {
                return Err(Error::InvalidArgument(format!("alpha = {a} must be positive")));
            }
            return Ok(UpperBound {
                value: (df / a + a.exp2()) * kf,
                formula: format!("(d/alpha + 2^alpha) k with alpha = {a}"),
            });
        }
        let denom = df.log2() - df.log2().log2();
        return Ok(UpperBound {
            value: 2.0 * df * kf / denom,
            formula: "2 d k / (log d - log log d)".into(),
        });
    }
    if d == 2 {
        return Ok(UpperBound {
            value: (2 * k * (l - 1)) as f64,
            formula: "2 k (l - 1)".into(),
        });
    }
    Ok(UpperBound {
        value: 2.0 * df.powi(l as i32 - 2) * kf,
        formula: "2 d^(l-2) k".into(),
    })
}

/// Blows up a graph with no `K_x` and no independent `l`-set: `floor(k/x)`
/// copies of each subcube of its representation. The result has
/// `d floor(k/x)` members, no `K_k` and no independent `l`-set, so
/// `R_d(k, l)` exceeds its size.
pub fn lower_bound_blowup(d: usize, k: usize, l: usize, graph: &Graph, x: usize) -> Result<(usize, CubeFamily)> {
    if graph.vertex_count() != d {
        return Err(Error::InvalidArgument(format!(
            "witness graph has {} vertices, expected {d}",
            graph.vertex_count()
        )));
    }
    if x < 1 || l < 1 {
        return Err(Error::InvalidArgument("x and l must be positive".into()));
    }
    let omega = graph.clique_number();
    let alpha = graph.independence_number();
    if omega >= x || alpha >= l {
        return Err(Error::InvalidWitness(format!(
            "graph has clique number {omega} and independence number {alpha}, needs < {x} and < {l}"
        )));
    }
    let copies = k / x;
    let family = if copies == 0 {
        CubeFamily::new(d)
    } else {
        represent_graph(graph)?.blow_up(copies)
    };
    if copies > 0 && !verify_witness(&family, k, l)? {
        return Err(Error::InvalidWitness("blown-up family fails verification".into()));
    }
    Ok((d * copies, family))
}

/// A graph with no `K_x` and no independent `l`-set.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub x: usize,
    pub l: usize,
    pub graph: Graph,
}

/// Built-in witness graphs, each re-verified here.
pub fn witness_catalog() -> Vec<CatalogEntry> {
    let entries = vec![
        CatalogEntry {
            name: "k1",
            x: 2,
            l: 2,
            graph: Graph::empty(1),
        },
        CatalogEntry {
            name: "c5",
            x: 3,
            l: 3,
            graph: Graph::cycle(5),
        },
        CatalogEntry {
            name: "r43",
            x: 4,
            l: 3,
            graph: find_ramsey_graph(8, 4, 3).expect("R(4,3) = 9"),
        },
    ];
    for e in &entries {
        assert!(
            e.graph.clique_number() < e.x && e.graph.independence_number() < e.l,
            "catalog entry {} fails verification",
            e.name
        );
    }
    entries
}

pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    witness_catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("no catalog graph named {name:?}")))
}
