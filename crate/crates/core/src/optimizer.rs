//! Exact optimizer for multipartite constructions based on disjoint blocks.
//!
//! Given `n`, `d` and `r`, choose block sizes `d_1 >= ... >= d_r >= 0` with
//! `Σ d_i <= d` and class sizes `n_i <= 2^{d_i}` with `Σ n_i = n` to minimize
//! `Σ C(n_i, 2)`. The resulting family is complete `r`-partite and misses
//! exactly the within-class pairs, so it has `C(n,2) - objective` edges.
//!
//! For fixed block sizes the best class sizes are the capacity-clipped water
//! filling. The block sizes are found by exhaustive enumeration of
//! nonincreasing compositions, pruned by cumulative capacity.

use serde::Serialize;

use crate::choose2;
use crate::constructions::class_cubes;
use crate::error::{Error, Result};
use crate::family::CubeFamily;

/// Limits on the enumeration.
pub const MAX_WIDTH: usize = 64;
pub const MAX_CLASSES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartiteProfile {
    pub r: usize,
    pub part_dims: Vec<usize>,
    pub part_sizes: Vec<u64>,
    pub objective: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileSolution {
    pub n: u64,
    pub d: usize,
    pub profile: PartiteProfile,
    pub edges: u128,
    /// Number of block-size vectors evaluated.
    pub profiles_evaluated: u64,
}

impl ProfileSolution {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serializes")
    }
}

fn capacity(dim: usize) -> u64 {
    if dim >= 64 {
        u64::MAX
    } else {
        1u64 << dim
    }
}

impl PartiteProfile {
    /// Builds the profile for fixed block sizes using water filling; `None`
    /// when the blocks cannot hold `n` subcubes.
    pub fn water_fill(n: u64, part_dims: &[usize]) -> Option<PartiteProfile> {
        let caps: Vec<u64> = part_dims.iter().map(|&d| capacity(d)).collect();
        let total: u128 = caps.iter().map(|&c| c as u128).sum();
        if total < n as u128 {
            return None;
        }
        let filled = |level: u64| -> u128 { caps.iter().map(|&c| c.min(level) as u128).sum() };
        // Largest level with filled(level) <= n.
        let (mut lo, mut hi) = (0u64, n);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if filled(mid) <= n as u128 {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let mut sizes: Vec<u64> = caps.iter().map(|&c| c.min(lo)).collect();
        let mut left = n - filled(lo) as u64;
        for (s, &c) in sizes.iter_mut().zip(&caps) {
            if left == 0 {
                break;
            }
            if c > lo {
                *s += 1;
                left -= 1;
            }
        }
        debug_assert_eq!(left, 0);
        let objective = sizes.iter().map(|&s| choose2(s)).sum();
        Some(PartiteProfile {
            r: part_dims.len(),
            part_dims: part_dims.to_vec(),
            part_sizes: sizes,
            objective,
        })
    }

    pub fn n(&self) -> u64 {
        self.part_sizes.iter().sum()
    }

    pub fn recompute_objective(&self) -> u128 {
        self.part_sizes.iter().map(|&s| choose2(s)).sum()
    }

    pub fn edges(&self) -> u128 {
        choose2(self.n()) - self.objective
    }

    /// Materializes the profile in `{0,1}^d`: block `i` is the next `d_i`
    /// coordinates and class `i` its first `n_i` subcubes.
    pub fn realize(&self, d: usize) -> Result<CubeFamily> {
        if self.part_dims.iter().sum::<usize>() > d {
            return Err(Error::InvalidArgument("blocks exceed the width".into()));
        }
        let mut family = CubeFamily::new(d);
        let mut next = 0;
        for (&dim, &size) in self.part_dims.iter().zip(&self.part_sizes) {
            let block: Vec<usize> = (next..next + dim).collect();
            next += dim;
            for c in class_cubes(d, &block, Some(size))? {
                family.push(c)?;
            }
        }
        Ok(family)
    }
}

/// Global optimum of the partite-profile problem.
///
/// Ties are broken towards the lexicographically smallest block-size vector.
pub fn optimal_partite_profile(n: u64, d: usize, r: usize) -> Result<ProfileSolution> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    if d > MAX_WIDTH || r > MAX_CLASSES {
        return Err(Error::Resource(format!(
            "enumeration supports d <= {MAX_WIDTH} and r <= {MAX_CLASSES}"
        )));
    }
    // Total capacity is convex in the block sizes, so one full block is best.
    let max_n = capacity(d) as u128 + (r as u128 - 1);
    if n as u128 > max_n {
        return Err(Error::Infeasible(format!(
            "n = {n} exceeds {max_n}, the most subcubes {r} disjoint blocks in {{0,1}}^{d} can hold"
        )));
    }
    let mut search = Search {
        n,
        r,
        best: None,
        evaluated: 0,
        dims: Vec::with_capacity(r),
    };
    search.descend(d, d);
    let profile = search.best.ok_or_else(|| Error::Infeasible("no feasible profile".into()))?;
    Ok(ProfileSolution {
        n,
        d,
        edges: profile.edges(),
        profile,
        profiles_evaluated: search.evaluated,
    })
}

struct Search {
    n: u64,
    r: usize,
    best: Option<PartiteProfile>,
    evaluated: u64,
    dims: Vec<usize>,
}

impl Search {
    /// Chooses the next block size, at most `max_part` and `budget` in total.
    /// Sizes are tried in increasing order so that the first optimum found is
    /// lexicographically smallest.
    fn descend(&mut self, budget: usize, max_part: usize) {
        let placed = self.dims.len();
        if placed == self.r {
            self.evaluated += 1;
            if let Some(p) = PartiteProfile::water_fill(self.n, &self.dims) {
                let better = self.best.as_ref().is_none_or(|b| p.objective < b.objective);
                if better {
                    self.best = Some(p);
                }
            }
            return;
        }
        let cap_so_far: u128 = self.dims.iter().map(|&d| capacity(d) as u128).sum();
        let remaining = (self.r - placed) as u128;
        for part in 0..=max_part.min(budget) {
            // The remaining blocks are no larger than this one.
            if cap_so_far + remaining * capacity(part) as u128 >= self.n as u128 {
                self.dims.push(part);
                self.descend(budget - part, part);
                self.dims.pop();
            }
        }
    }
}
