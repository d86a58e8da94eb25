//! Extremal `K_{r+1}`-free subcube families.
//!
//! Every construction here takes all subcubes whose fixed set is one of a
//! few chosen coordinate sets, one class per set. Two subcubes with the same
//! fixed set are disjoint unless equal, so each class is independent and the
//! graph is multipartite with one part per class.
//!
//! Within a class, subcubes are listed in lexicographic order of their text
//! form. Coordinate sets are drawn from the lowest coordinates first.

use crate::cube::{Coord, Subcube};
use crate::error::{Error, Result};
use crate::family::CubeFamily;
use crate::graph::grow_family;
use crate::{binomial, choose2};

/// Largest class this module will materialize.
pub const MAX_CLASS_SIZE: u64 = 1 << 24;

/// Edge count of the balanced complete `r`-partite graph on `n` vertices.
pub fn turan_number(n: u64, r: u64) -> u128 {
    assert!(r >= 1, "r must be at least 1");
    let q = n / r;
    let rem = n % r;
    choose2(n) - (rem as u128 * choose2(q + 1) + (r - rem) as u128 * choose2(q))
}

/// `2^e` as `u128`, saturating for huge exponents.
fn pow2(e: usize) -> u128 {
    if e >= 127 {
        u128::MAX
    } else {
        1u128 << e
    }
}

/// The first `count` subcubes (all when `None`) with fixed set exactly
/// `fixed`, in lexicographic order of the text form.
pub(crate) fn class_cubes(d: usize, fixed: &[usize], count: Option<u64>) -> Result<Vec<Subcube>> {
    let total = pow2(fixed.len());
    let take = count.map_or(total, |c| (c as u128).min(total));
    if take > MAX_CLASS_SIZE as u128 {
        return Err(Error::Resource(format!(
            "class of {take} subcubes exceeds the materialization limit {MAX_CLASS_SIZE}"
        )));
    }
    let m = fixed.len();
    let mut out = Vec::with_capacity(take as usize);
    for v in 0..take as u64 {
        let mut c = Subcube::full(d)?;
        for (j, &coord) in fixed.iter().enumerate() {
            let bit = (v >> (m - 1 - j)) & 1 == 1;
            c.set(coord, if bit { Coord::One } else { Coord::Zero });
        }
        out.push(c);
    }
    Ok(out)
}

/// Consecutive disjoint coordinate blocks with the given sizes.
fn consecutive_sets(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut next = 0;
    sizes
        .iter()
        .map(|&s| {
            let set: Vec<usize> = (next..next + s).collect();
            next += s;
            set
        })
        .collect()
}

/// Balanced class sizes for `n` vertices over `k` classes; the first
/// `n mod k` classes get the extra vertex.
fn balanced_sizes(n: u64, k: u64) -> Vec<u64> {
    (0..k).map(|i| n / k + u64::from(i < n % k)).collect()
}

/// Turán graph `T_k(n)` as a subcube family (`2 <= k`, `n <= k 2^{floor(d/k)}`).
///
/// The `k` fixed sets are disjoint blocks of `t` coordinates, `t` the least
/// value with `k 2^t >= n`; a balanced selection of `n` subcubes is taken,
/// dropping from the last classes first. The graph is `T_k(n)`.
pub fn partite_family(n: u64, d: usize, k: u64) -> Result<CubeFamily> {
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2".into()));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let max_t = d / k as usize;
    if n as u128 > (k as u128).saturating_mul(pow2(max_t)) {
        return Err(Error::Infeasible(format!(
            "n = {n} exceeds k 2^floor(d/k) = {}",
            (k as u128).saturating_mul(pow2(max_t))
        )));
    }
    let t = (0..=max_t)
        .find(|&t| (k as u128) * pow2(t) >= n as u128)
        .expect("bounded by the feasibility check");
    let sets = consecutive_sets(&vec![t; k as usize]);
    let mut family = CubeFamily::new(d);
    for (set, size) in sets.iter().zip(balanced_sizes(n, k)) {
        for c in class_cubes(d, set, Some(size))? {
            family.push(c)?;
        }
    }
    Ok(family)
}

/// Complete multipartite family from a partition-like list of disjoint
/// block sizes: all subcubes whose fixed set is one of the consecutive
/// blocks. With `sizes = [x; r-1] ++ [d - (r-1)x]` this is the
/// `(r-1)` equal parts plus one small part family, which contains exactly
/// `2^d` copies of `K_r` when the blocks cover `[d]`.
pub fn partition_family(d: usize, sizes: &[usize]) -> Result<CubeFamily> {
    if sizes.iter().sum::<usize>() > d {
        return Err(Error::InvalidArgument(format!("block sizes {sizes:?} exceed d = {d}")));
    }
    mixed_partite_family(d, &consecutive_sets(sizes))
}

/// The absolute-bound construction: fixed sets `[d] \ P_i` for disjoint
/// `P_i` of size `floor(d/r)`. Every point is covered exactly `r` times and
/// the graph has `C(r,2) 2^d` edges, each intersecting pair meeting in a
/// single point.
pub fn full_codim_family(d: usize, r: usize) -> Result<CubeFamily> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    complement_family(d, &vec![d / r; r])
}

/// All subcubes whose fixed set is the complement of one of the consecutive
/// blocks with the given sizes.
fn complement_family(d: usize, block_sizes: &[usize]) -> Result<CubeFamily> {
    let mut family = CubeFamily::new(d);
    for p in consecutive_sets(block_sizes) {
        let fixed: Vec<usize> = (0..d).filter(|i| !p.contains(i)).collect();
        for c in class_cubes(d, &fixed, None)? {
            family.push(c)?;
        }
    }
    Ok(family)
}

/// Smallest `n` for which [`large_n_family`] can reach `C(k,2) 2^d` edges:
/// the base size for the most balanced disjoint blocks.
pub fn large_n_threshold(d: usize, k: usize) -> u128 {
    let sizes = balanced_blocks(d, k);
    sizes.iter().map(|&s| pow2(d - s)).sum()
}

fn balanced_blocks(d: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| d / k + usize::from(i < d % k)).collect()
}

/// A `K_{k+1}`-free family of `n` subcubes with `C(k,2) 2^d` edges.
///
/// Uses fixed sets `R_i = [d] \ P_i` for disjoint blocks `P_i` of size `t`,
/// `t` the least value with `k 2^{d-t} <= n`. When `tk > d` the blocks are
/// the balanced split of `[d]` instead. The base family is then grown to `n`
/// members by splitting and duplicating, which never loses an edge.
pub fn large_n_family(n: u64, d: usize, k: usize) -> Result<CubeFamily> {
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2".into()));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    if n as u128 > (k as u128).saturating_mul(pow2(d)) {
        return Err(Error::Infeasible(format!("n = {n} exceeds k 2^d")));
    }
    let t = (0..=d).find(|&t| (k as u128) * pow2(d - t) <= n as u128);
    let blocks = match t {
        Some(t) if t * k <= d => vec![t; k],
        _ => balanced_blocks(d, k),
    };
    let base_size: u128 = blocks.iter().map(|&s| pow2(d - s)).sum();
    if base_size > n as u128 {
        return Err(Error::Infeasible(format!(
            "n = {n} is below the construction threshold {}",
            large_n_threshold(d, k)
        )));
    }
    let base = complement_family(d, &blocks)?;
    grow_family(&base, n as usize, k)
}

/// Closed-form edge count of [`large_n_family`].
pub fn large_n_edges(d: usize, k: u64) -> u128 {
    binomial(k, 2) * pow2(d)
}

/// All subcubes whose fixed set is `R_i`, one class per set.
///
/// Classes `i` and `j` are joined by exactly `2^{|R_i ∪ R_j|}` edges and
/// there are no edges inside a class.
pub fn mixed_partite_family(d: usize, fixed_sets: &[Vec<usize>]) -> Result<CubeFamily> {
    if fixed_sets.is_empty() {
        return Err(Error::InvalidArgument("at least one class is required".into()));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let mut family = CubeFamily::new(d);
    for set in fixed_sets {
        let mut set = set.clone();
        set.sort_unstable();
        set.dedup();
        if let Some(&bad) = set.iter().find(|&&c| c >= d) {
            return Err(Error::InvalidArgument(format!("coordinate {bad} out of range for d = {d}")));
        }
        for c in class_cubes(d, &set, None)? {
            family.push(c)?;
        }
    }
    Ok(family)
}

/// `Σ_{i<j} 2^{|R_i ∪ R_j|}`.
pub fn mixed_partite_edges(fixed_sets: &[Vec<usize>]) -> u128 {
    let mut total = 0;
    for i in 0..fixed_sets.len() {
        for j in i + 1..fixed_sets.len() {
            total += pow2(union_size(&fixed_sets[i], &fixed_sets[j]));
        }
    }
    total
}

pub(crate) fn union_size(a: &[usize], b: &[usize]) -> usize {
    let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u.len()
}
