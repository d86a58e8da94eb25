//! Graph exchange formats: graph6 and DIMACS edge lists.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Encodes a graph in graph6 format (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes: Vec<u8> = Vec::new();
    if n < 63 {
        bytes.push(n as u8 + 63);
    } else if n < 258_048 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 is printable ASCII")
}

/// Decodes a graph6 string; an optional `>>graph6<<` header is accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(pos, "byte outside the graph6 range"));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::parse(0, "empty graph6 string")),
        [126, 126, rest @ ..] if rest.len() >= 6 => {
            (rest[..6].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize), &rest[6..])
        }
        [126, rest @ ..] if rest.len() >= 3 => {
            (rest[..3].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize), &rest[3..])
        }
        [126, ..] => return Err(Error::parse(0, "truncated graph6 size")),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    if body.len() != bits_needed.div_ceil(6) {
        return Err(Error::parse(
            bytes.len() - body.len(),
            format!("expected {} data bytes for {n} vertices, got {}", bits_needed.div_ceil(6), body.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// DIMACS edge format: `p edge <n> <m>` then `e <u> <v>` lines, 1-based.
pub fn to_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), edges.len());
    for (a, b) in edges {
        let _ = writeln!(out, "e {} {}", a + 1, b + 1);
    }
    out
}

pub fn from_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (lineno, line) in text.lines().enumerate() {
        let mut parts = line.split_whitespace();
        match parts.next() {
            None | Some("c") => continue,
            Some("p") => {
                let kind = parts.next();
                let n = parts.next().and_then(|s| s.parse::<usize>().ok());
                match (kind, n) {
                    (Some("edge") | Some("col"), Some(n)) => graph = Some(Graph::empty(n)),
                    _ => return Err(Error::parse(lineno + 1, "malformed problem line")),
                }
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(lineno + 1, "edge before problem line"))?;
                let ends: Vec<usize> = parts.filter_map(|s| s.parse().ok()).collect();
                match ends[..] {
                    [a, b] if a >= 1 && b >= 1 && a <= g.vertex_count() && b <= g.vertex_count() && a != b => {
                        g.add_edge(a - 1, b - 1)
                    }
                    _ => return Err(Error::parse(lineno + 1, "malformed edge line")),
                }
            }
            Some(other) => return Err(Error::parse(lineno + 1, format!("unknown line type {other:?}"))),
        }
    }
    graph.ok_or_else(|| Error::parse(0, "missing problem line"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_graph6_strings() {
        // Reference encodings from the nauty format description.
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(from_graph6(">>graph6<<Dhc").unwrap(), Graph::cycle(5));
        assert!(from_graph6("D").is_err());
    }

    #[test]
    fn dimacs_layout() {
        let text = to_dimacs(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(text, "p edge 3 2\ne 1 2\ne 2 3\n");
        assert!(from_dimacs("e 1 2\n").is_err());
    }

    proptest! {
        #[test]
        fn formats_round_trip(n in 0usize..80, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n);
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(0.3) {
                        g.add_edge(i, j);
                    }
                }
            }
            prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
            prop_assert_eq!(&from_dimacs(&to_dimacs(&g)).unwrap(), &g);
        }
    }
}
