//! The hyperoctahedral group acting on the subcubes of `{0,1}^d`.

use std::collections::HashMap;

use crate::cube::{Coord, Subcube};

/// One symmetry: coordinate `i` moves to `perm[i]`, and its value is
/// swapped `0 <-> 1` first when bit `i` of `flips` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeSymmetry {
    pub perm: Vec<usize>,
    pub flips: u64,
}

impl CubeSymmetry {
    pub fn apply(&self, u: &Subcube) -> Subcube {
        let d = u.width();
        let mut v = Subcube::full(d).expect("positive width");
        for i in 0..d {
            let c = match (u.coord(i), self.flips >> i & 1 == 1) {
                (Coord::Free, _) => Coord::Free,
                (c, false) => c,
                (Coord::Zero, true) => Coord::One,
                (Coord::One, true) => Coord::Zero,
            };
            v.set(self.perm[i], c);
        }
        v
    }
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for pos in 0..d {
            let mut q = p.clone();
            q.insert(pos, d - 1);
            out.push(q);
        }
    }
    out
}

/// All `2^d d!` symmetries, identity first.
pub fn hyperoctahedral_group(d: usize) -> Vec<CubeSymmetry> {
    let mut perms = permutations(d);
    perms.sort();
    let mut out = Vec::with_capacity(perms.len() << d);
    for perm in perms {
        for flips in 0..1u64 << d {
            out.push(CubeSymmetry {
                perm: perm.clone(),
                flips,
            });
        }
    }
    out
}

/// The group as permutations of positions in `cubes`; `maps[g][t]` is the
/// position of the image of `cubes[t]` under `g`.
pub fn rank_maps(cubes: &[Subcube]) -> Vec<Vec<u8>> {
    let Some(first) = cubes.first() else {
        return Vec::new();
    };
    let index: HashMap<&Subcube, u8> = cubes.iter().enumerate().map(|(i, c)| (c, i as u8)).collect();
    hyperoctahedral_group(first.width())
        .iter()
        .map(|g| cubes.iter().map(|c| index[&g.apply(c)]).collect())
        .collect()
}
