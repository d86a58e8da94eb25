//! Families of subsets of a finite ground set `{1..m}`.
//!
//! Three constructions are provided. [`mols_family`] uses rows, columns and
//! the symbol classes of cyclic Latin squares. [`pair_cover_family`] and
//! [`pair_packing_family`] take the dual of a block design: for blocks
//! `S_1..S_m` of `[n]`, member `i` is `A_i = {a : i in S_a}`, so members `i`
//! and `j` intersect exactly when some block contains both.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest number of candidate blocks the greedy designs will scan.
pub const MAX_CANDIDATE_BLOCKS: u128 = 2_000_000;

/// Subsets of the ground set `{1..ground_size}`; member `i` is vertex `i` of
/// the intersection graph.
///
/// For dual families `blocks` holds the design the members were derived
/// from; it is empty otherwise. A dual member is empty when its element of
/// `[n]` lies in no block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetFamily {
    pub ground_size: usize,
    pub members: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<Vec<usize>>,
}

impl SetFamily {
    /// Validates and normalizes (sorts, dedups) the members.
    pub fn new(ground_size: usize, members: Vec<Vec<usize>>) -> Result<Self> {
        let members = members
            .into_iter()
            .map(|m| normalize(ground_size, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(SetFamily {
            ground_size,
            members,
            blocks: Vec::new(),
        })
    }

    /// The dual of `blocks` over `[n]`: member `i` lists the indices
    /// (1-based) of the blocks containing `i`.
    pub fn dual(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let blocks = blocks
            .into_iter()
            .map(|b| normalize(n, b))
            .collect::<Result<Vec<_>>>()?;
        let mut members = vec![Vec::new(); n];
        for (a, block) in blocks.iter().enumerate() {
            for &i in block {
                members[i - 1].push(a + 1);
            }
        }
        Ok(SetFamily {
            ground_size: blocks.len(),
            members,
            blocks,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Largest number of members containing one ground element.
    pub fn max_multiplicity(&self) -> usize {
        let mut counts = vec![0usize; self.ground_size + 1];
        for m in &self.members {
            for &x in m {
                counts[x] += 1;
            }
        }
        counts.into_iter().max().unwrap_or(0)
    }

    pub fn intersection_graph(&self) -> Graph {
        let n = self.members.len();
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if sorted_meet(&self.members[i], &self.members[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("set family serializes")
    }
}

fn normalize(ground: usize, mut set: Vec<usize>) -> Result<Vec<usize>> {
    set.sort_unstable();
    set.dedup();
    if let Some(&x) = set.iter().find(|&&x| x == 0 || x > ground) {
        return Err(Error::InvalidArgument(format!("element {x} outside 1..={ground}")));
    }
    Ok(set)
}

fn sorted_meet(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|p| p * p <= q).all(|p| !q.is_multiple_of(p))
}

/// The cyclic Latin square `L_k(i, j) = k i + j mod q`.
pub fn latin_square(q: usize, k: usize) -> Vec<Vec<usize>> {
    (0..q).map(|i| (0..q).map(|j| (k * i + j) % q).collect()).collect()
}

/// Whether superimposing the two squares yields every ordered symbol pair.
pub fn are_orthogonal(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let q = a.len();
    let mut seen = vec![false; q * q];
    for i in 0..q {
        for j in 0..q {
            let slot = a[i][j] * q + b[i][j];
            if seen[slot] {
                return false;
            }
            seen[slot] = true;
        }
    }
    true
}

/// Rows, columns and the symbol classes of `r - 2` mutually orthogonal
/// Latin squares of prime order `q`, over the `q x q` grid.
///
/// Cell `(i, j)` is ground element `i q + j + 1`. The intersection graph is
/// the Turán graph `T_r(rq)`.
pub fn mols_family(q: usize, r: usize) -> Result<SetFamily> {
    if !is_prime(q) {
        return Err(Error::Unsupported(format!("order {q} is not prime")));
    }
    if r < 2 {
        return Err(Error::InvalidArgument("r must be at least 2".into()));
    }
    if r > q + 1 {
        return Err(Error::InvalidArgument(format!(
            "at most {} classes exist for order {q}, asked for {r}",
            q + 1
        )));
    }
    let cell = |i: usize, j: usize| i * q + j + 1;
    let mut members = Vec::with_capacity(r * q);
    for i in 0..q {
        members.push((0..q).map(|j| cell(i, j)).collect());
    }
    for j in 0..q {
        members.push((0..q).map(|i| cell(i, j)).collect());
    }
    for k in 1..r - 1 {
        let square = latin_square(q, k);
        for s in 0..q {
            let mut class = Vec::with_capacity(q);
            for (i, row) in square.iter().enumerate() {
                for (j, &sym) in row.iter().enumerate() {
                    if sym == s {
                        class.push(cell(i, j));
                    }
                }
            }
            members.push(class);
        }
    }
    SetFamily::new(q * q, members)
}

/// Known designs where every pair of `[n]` lies in exactly one block.
fn catalog_design(n: usize, r: usize) -> Option<Vec<Vec<usize>>> {
    if r == n {
        return Some(vec![(1..=n).collect()]);
    }
    if r == 2 {
        return Some((1..=n).flat_map(|i| (i + 1..=n).map(move |j| vec![i, j])).collect());
    }
    if r != 3 {
        return None;
    }
    match n {
        // Lines of a projective space over F_2: {a, b, a xor b}.
        7 | 15 => {
            let mut lines = BTreeSet::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    let mut l = vec![a, b, a ^ b];
                    l.sort_unstable();
                    lines.insert(l);
                }
            }
            Some(lines.into_iter().collect())
        }
        9 => {
            // Lines of the affine plane over Z_3; point (x, y) is 3x + y + 1.
            let pt = |x: usize, y: usize| 3 * (x % 3) + (y % 3) + 1;
            let mut lines = BTreeSet::new();
            for x in 0..3 {
                lines.insert(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
            }
            for slope in 0..3 {
                for c in 0..3 {
                    let mut l: Vec<usize> = (0..3).map(|x| pt(x, slope * x + c)).collect();
                    l.sort_unstable();
                    lines.insert(l);
                }
            }
            Some(lines.into_iter().collect())
        }
        13 => {
            let mut blocks = BTreeSet::new();
            for base in [[0, 1, 4], [0, 2, 8]] {
                for s in 0..13 {
                    let mut b: Vec<usize> = base.iter().map(|x| (x + s) % 13 + 1).collect();
                    b.sort_unstable();
                    blocks.insert(b);
                }
            }
            Some(blocks.into_iter().collect())
        }
        _ => None,
    }
}

/// All `r`-subsets of `[n]` in lexicographic order.
fn subsets(n: usize, r: usize) -> Result<Vec<Vec<usize>>> {
    if crate::binomial(n as u64, r as u64) > MAX_CANDIDATE_BLOCKS {
        return Err(Error::Resource(format!(
            "C({n},{r}) candidate blocks exceed the limit {MAX_CANDIDATE_BLOCKS}"
        )));
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=r).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..r).rev().find(|&i| cur[i] < n - (r - 1 - i)) else {
            return Ok(out);
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

struct PairTable {
    n: usize,
    used: Vec<bool>,
}

impl PairTable {
    fn new(n: usize) -> Self {
        PairTable {
            n,
            used: vec![false; (n + 1) * (n + 1)],
        }
    }

    fn pairs(block: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
        block
            .iter()
            .enumerate()
            .flat_map(move |(a, &x)| block[a + 1..].iter().map(move |&y| (x, y)))
    }

    fn is_used(&self, x: usize, y: usize) -> bool {
        self.used[x * (self.n + 1) + y]
    }

    fn mark(&mut self, block: &[usize]) {
        for (x, y) in Self::pairs(block) {
            self.used[x * (self.n + 1) + y] = true;
        }
    }

    fn fresh(&self, block: &[usize]) -> usize {
        Self::pairs(block).filter(|&(x, y)| !self.is_used(x, y)).count()
    }
}

fn check_design_args(n: usize, r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidArgument("r must be at least 2".into()));
    }
    if n < r {
        return Err(Error::Infeasible(format!("no {r}-subsets of a {n}-set")));
    }
    Ok(())
}

/// Blocks covering every pair of `[n]` at least once: a catalog design when
/// one is known, otherwise greedy (most uncovered pairs, first in
/// lexicographic order on ties).
pub fn pair_cover_blocks(n: usize, r: usize) -> Result<Vec<Vec<usize>>> {
    check_design_args(n, r)?;
    if let Some(d) = catalog_design(n, r) {
        return Ok(d);
    }
    let candidates = subsets(n, r)?;
    let mut table = PairTable::new(n);
    let mut uncovered = n * (n - 1) / 2;
    let mut blocks = Vec::new();
    while uncovered > 0 {
        let (best, gain) = candidates
            .iter()
            .map(|b| (b, table.fresh(b)))
            .fold((&candidates[0], 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        table.mark(best);
        uncovered -= gain;
        blocks.push(best.clone());
    }
    Ok(blocks)
}

/// Blocks covering every pair of `[n]` at most once: a catalog design when
/// one is known, otherwise the maximal packing obtained by scanning
/// `r`-subsets in lexicographic order.
pub fn pair_packing_blocks(n: usize, r: usize) -> Result<Vec<Vec<usize>>> {
    check_design_args(n, r)?;
    if let Some(d) = catalog_design(n, r) {
        return Ok(d);
    }
    let mut table = PairTable::new(n);
    let mut blocks = Vec::new();
    let pairs_per_block = r * (r - 1) / 2;
    for b in subsets(n, r)? {
        if table.fresh(&b) == pairs_per_block {
            table.mark(&b);
            blocks.push(b);
        }
    }
    Ok(blocks)
}

/// Dual of a pair cover: every element of the ground set lies in exactly
/// `r` members and the intersection graph is complete.
pub fn pair_cover_family(n: usize, r: usize) -> Result<SetFamily> {
    SetFamily::dual(n, pair_cover_blocks(n, r)?)
}

/// Dual of a pair packing: members pairwise share at most one element and
/// the graph has `C(r,2) m` edges.
pub fn pair_packing_family(n: usize, r: usize) -> Result<SetFamily> {
    SetFamily::dual(n, pair_packing_blocks(n, r)?)
}

/// Replaces member `index` by its parts inside and outside `part`, placed at
/// `index` and `index + 1`. Edges are never lost.
pub fn split_member(family: &SetFamily, index: usize, part: &[usize]) -> Result<SetFamily> {
    let member = family
        .members
        .get(index)
        .ok_or_else(|| Error::InvalidArgument(format!("no member {index}")))?;
    let (inside, outside): (Vec<usize>, Vec<usize>) = member.iter().partition(|x| part.contains(x));
    if inside.is_empty() || outside.is_empty() {
        return Err(Error::InvalidArgument("split must leave both parts nonempty".into()));
    }
    let mut out = family.clone();
    out.members[index] = inside;
    out.members.insert(index + 1, outside);
    out.blocks.clear();
    Ok(out)
}
