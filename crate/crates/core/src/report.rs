//! Structured analysis of a subcube family.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::family::CubeFamily;
use crate::graph::{CliqueWitness, IntersectionGraph};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub d: usize,
    pub edges: usize,
    pub clique_number: usize,
    pub clique_witness: Option<CliqueWitness>,
    pub independence_number: usize,
    /// Number of cliques by size (keys are sizes).
    pub clique_counts: BTreeMap<usize, u64>,
}

/// Analyzes `family`, counting cliques of each size in `clique_sizes`.
pub fn analyze(family: &CubeFamily, clique_sizes: &[usize]) -> AnalysisReport {
    let g = IntersectionGraph::build(family);
    let (clique_number, clique_witness) = g.clique_number();
    let clique_counts = clique_sizes
        .iter()
        .filter(|&&s| s >= 1)
        .map(|&s| (s, g.count_cliques(s)))
        .collect();
    AnalysisReport {
        n: family.len(),
        d: family.width(),
        edges: g.edge_count(),
        clique_number,
        clique_witness,
        independence_number: g.independence_number(),
        clique_counts,
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain two-column table.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<22}{}", "vertices (n)", self.n);
        let _ = writeln!(out, "{:<22}{}", "dimension (d)", self.d);
        let _ = writeln!(out, "{:<22}{}", "edges", self.edges);
        let _ = writeln!(out, "{:<22}{}", "clique number", self.clique_number);
        if let Some(w) = &self.clique_witness {
            let _ = writeln!(out, "{:<22}{} via {:?}", "witness point", w.point, w.vertices);
        }
        let _ = writeln!(out, "{:<22}{}", "independence number", self.independence_number);
        for (size, count) in &self.clique_counts {
            let _ = writeln!(out, "{:<22}{}", format!("K_{size} count"), count);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_family_report() {
        let r = analyze(&CubeFamily::new(0), &[2, 3]);
        assert_eq!(r.n, 0);
        assert_eq!(r.edges, 0);
        assert_eq!(r.clique_number, 0);
        assert_eq!(r.independence_number, 0);
        assert!(r.clique_counts.values().all(|&c| c == 0));
        assert!(r.to_json().contains("\"n\": 0"));
    }
}
