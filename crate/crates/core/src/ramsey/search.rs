//! Orderly generation of multisets of subcubes avoiding `K_k` and an
//! independent `l`-set.
//!
//! A multiset is stored as its sorted sequence of ranks in the candidate
//! universe. It is canonical when no symmetry maps it to a lexicographically
//! smaller sorted sequence. Removing the largest element of a canonical
//! sequence leaves a canonical sequence, so extending canonical sequences by
//! an element no smaller than their maximum and keeping the canonical
//! results visits every orbit exactly once. Both forbidden patterns are
//! hereditary, so invalid sequences are never extended.

use serde::{Deserialize, Serialize};

use super::symmetry::rank_maps;
use crate::cube::{Coord, Subcube};

/// Largest dimension the search supports: disjointness masks are `u128`.
pub const MAX_SEARCH_DIMENSION: usize = 4;

/// The candidate subcubes with precomputed incidence data.
pub(crate) struct Universe {
    pub cubes: Vec<Subcube>,
    points: Vec<Vec<u8>>,
    disjoint: Vec<u128>,
    maps: Vec<Vec<u8>>,
    k: usize,
    l: usize,
}

/// All `3^d` subcubes in lexicographic order of the text form, `0 < 1 < *`.
pub(crate) fn all_subcubes(d: usize) -> Vec<Subcube> {
    let total = 3usize.pow(d as u32);
    (0..total)
        .map(|mut code| {
            let mut c = Subcube::full(d).expect("positive width");
            for i in (0..d).rev() {
                let coord = match code % 3 {
                    0 => Coord::Zero,
                    1 => Coord::One,
                    _ => Coord::Free,
                };
                c.set(i, coord);
                code /= 3;
            }
            c
        })
        .collect()
}

impl Universe {
    pub fn new(cubes: Vec<Subcube>, k: usize, l: usize, symmetry: bool) -> Self {
        let d = cubes[0].width();
        debug_assert!(d <= MAX_SEARCH_DIMENSION);
        let points = cubes
            .iter()
            .map(|c| {
                let (fixed, values) = c.masks();
                (0..1u64 << d).filter(|x| (x ^ values) & fixed == 0).map(|x| x as u8).collect()
            })
            .collect();
        let disjoint = cubes
            .iter()
            .map(|a| {
                cubes
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| !a.meets(b))
                    .fold(0u128, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let maps = if symmetry { rank_maps(&cubes) } else { Vec::new() };
        Universe {
            cubes,
            points,
            disjoint,
            maps,
            k,
            l,
        }
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }
}

/// Mutable search state for one sequence.
#[derive(Clone)]
pub(crate) struct State {
    pub seq: Vec<u8>,
    counts: Vec<u8>,
    loads: Vec<u8>,
    support: u128,
}

impl State {
    pub fn empty(u: &Universe) -> Self {
        let d = u.cubes[0].width();
        State {
            seq: Vec::new(),
            counts: vec![0; u.len()],
            loads: vec![0; 1 << d],
            support: 0,
        }
    }

    /// Whether appending `t` keeps the multiset free of `K_k` and of an
    /// independent `l`-set.
    fn admits(&self, u: &Universe, t: usize) -> bool {
        if u.points[t].iter().any(|&p| self.loads[p as usize] as usize + 1 >= u.k) {
            return false;
        }
        // Copies of one subcube intersect, so only a new type can complete
        // an independent set, and that set contains it.
        self.counts[t] > 0 || !has_disjoint_set(u, self.support & u.disjoint[t], u.l - 1)
    }

    fn push(&mut self, u: &Universe, t: usize) {
        self.seq.push(t as u8);
        self.counts[t] += 1;
        self.support |= 1 << t;
        for &p in &u.points[t] {
            self.loads[p as usize] += 1;
        }
    }

    fn pop(&mut self, u: &Universe) {
        let t = self.seq.pop().expect("nonempty") as usize;
        self.counts[t] -= 1;
        if self.counts[t] == 0 {
            self.support &= !(1 << t);
        }
        for &p in &u.points[t] {
            self.loads[p as usize] -= 1;
        }
    }

    /// Replays a sequence; `None` if it is invalid or noncanonical.
    pub fn replay(u: &Universe, seq: &[u8]) -> Option<Self> {
        let mut s = State::empty(u);
        for &t in seq {
            if !s.admits(u, t as usize) {
                return None;
            }
            s.push(u, t as usize);
        }
        s.is_canonical(u).then_some(s)
    }

    fn is_canonical(&self, u: &Universe) -> bool {
        // The image of the count vector under g has count c[g(t)] at rank t
        // for the inverse action; ranging over the whole group covers both.
        'group: for map in &u.maps {
            for (t, &c) in self.counts.iter().enumerate() {
                let image = self.counts[map[t] as usize];
                if image != c {
                    if image > c {
                        return false;
                    }
                    continue 'group;
                }
            }
        }
        true
    }
}

/// Whether `cand` contains `size` pairwise disjoint types.
fn has_disjoint_set(u: &Universe, cand: u128, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < size {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_disjoint_set(u, rest & u.disjoint[v], size - 1) {
            return true;
        }
    }
    false
}

/// Statistics and best sequence for one part of the search tree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchResult {
    pub nodes: u64,
    pub best: Vec<u8>,
}

impl BranchResult {
    /// Longer sequences win; ties go to the lexicographically smaller one,
    /// which is the one a sequential depth-first search reaches first.
    pub fn absorb(&mut self, other: &BranchResult) {
        self.nodes += other.nodes;
        if other.best.len() > self.best.len()
            || (other.best.len() == self.best.len() && other.best < self.best)
        {
            self.best = other.best.clone();
        }
    }

    fn visit(&mut self, seq: &[u8]) {
        self.nodes += 1;
        if seq.len() > self.best.len() {
            self.best = seq.to_vec();
        }
    }
}

/// Visits the nodes above depth `depth` and returns them as statistics
/// together with the canonical sequences of length exactly `depth`, in
/// search order.
pub(crate) fn frontier(u: &Universe, depth: usize) -> (BranchResult, Vec<Vec<u8>>) {
    let mut stats = BranchResult::default();
    let mut out = Vec::new();
    let mut state = State::empty(u);
    collect(u, &mut state, depth, &mut stats, &mut out);
    (stats, out)
}

fn collect(u: &Universe, state: &mut State, depth: usize, stats: &mut BranchResult, out: &mut Vec<Vec<u8>>) {
    if state.seq.len() == depth {
        out.push(state.seq.clone());
        return;
    }
    stats.visit(&state.seq);
    for_each_child(u, state, |u, s| collect(u, s, depth, stats, out));
}

/// Exhausts the subtree rooted at a canonical sequence.
pub(crate) fn explore(u: &Universe, root: &[u8]) -> BranchResult {
    let mut stats = BranchResult::default();
    if let Some(mut state) = State::replay(u, root) {
        descend(u, &mut state, &mut stats);
    }
    stats
}

fn descend(u: &Universe, state: &mut State, stats: &mut BranchResult) {
    stats.visit(&state.seq);
    for_each_child(u, state, |u, s| descend(u, s, stats));
}

fn for_each_child(u: &Universe, state: &mut State, mut f: impl FnMut(&Universe, &mut State)) {
    let start = state.seq.last().map_or(0, |&t| t as usize);
    for t in start..u.len() {
        if !state.admits(u, t) {
            continue;
        }
        state.push(u, t);
        if state.is_canonical(u) {
            f(u, state);
        }
        state.pop(u);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(d: usize, k: usize, l: usize, symmetry: bool) -> BranchResult {
        let u = Universe::new(all_subcubes(d), k, l, symmetry);
        explore(&u, &[])
    }

    #[test]
    fn universe_order() {
        let text: Vec<String> = all_subcubes(2).iter().map(|c| c.to_string()).collect();
        assert_eq!(text, ["00", "01", "0*", "10", "11", "1*", "*0", "*1", "**"]);
    }

    #[test]
    fn small_values() {
        assert_eq!(run(1, 3, 2, true).best.len(), 2);
        assert_eq!(run(2, 3, 3, true).best.len(), 4);
        assert_eq!(run(2, 2, 4, true).best.len(), 3);
    }

    #[test]
    fn symmetry_only_prunes_isomorphs() {
        for (k, l) in [(2, 2), (3, 2), (3, 3), (4, 3), (3, 4)] {
            let a = run(2, k, l, true);
            let b = run(2, k, l, false);
            assert_eq!(a.best.len(), b.best.len());
            assert!(a.nodes < b.nodes);
        }
    }
}
