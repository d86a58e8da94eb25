//! Random subcube families.
//!
//! Member `i` is drawn from its own ChaCha8 stream: the generator is seeded
//! with `seed` and switched to stream `i`. Output therefore depends only on
//! the parameters, not on how many threads sample.
//!
//! In the coordinate model each coordinate is drawn from one uniform `f64`
//! `u`: `0` if `u < p`, `1` if `p <= u < 2p`, `*` otherwise. In the
//! codimension model a member draws its codimension from the distribution,
//! then a uniform fixed set of that size, then uniform values on it.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cube::{Coord, Subcube};
use crate::error::{Error, Result};
use crate::family::CubeFamily;

/// Tolerance on the total mass of a codimension distribution.
pub const DISTRIBUTION_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomModelParams {
    pub n: usize,
    pub d: usize,
    pub p: f64,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codim_distribution: Option<Vec<f64>>,
}

impl RandomModelParams {
    pub fn new(n: usize, d: usize, p: f64, seed: u64) -> Self {
        RandomModelParams {
            n,
            d,
            p,
            seed,
            codim_distribution: None,
        }
    }

    pub fn with_codim_distribution(mut self, dist: Vec<f64>) -> Self {
        self.codim_distribution = Some(dist);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidArgument("d must be at least 1".into()));
        }
        if !(0.0..=0.5).contains(&self.p) {
            return Err(Error::InvalidArgument(format!("p = {} is outside [0, 1/2]", self.p)));
        }
        if let Some(dist) = &self.codim_distribution {
            if dist.len() != self.d + 1 {
                return Err(Error::InvalidArgument(format!(
                    "codimension distribution needs {} entries, got {}",
                    self.d + 1,
                    dist.len()
                )));
            }
            if dist.iter().any(|&w| !w.is_finite() || w < 0.0) {
                return Err(Error::InvalidArgument("distribution entries must be nonnegative".into()));
            }
            let total: f64 = dist.iter().sum();
            if (total - 1.0).abs() > DISTRIBUTION_TOLERANCE {
                return Err(Error::InvalidArgument(format!("distribution sums to {total}, not 1")));
            }
        }
        Ok(())
    }

    /// One-line description for the `#` header of emitted family files.
    pub fn provenance(&self) -> String {
        let mut s = format!(
            "random subcubes: n={} d={} p={} seed={} rng=chacha8 stream=member-index",
            self.n, self.d, self.p, self.seed
        );
        if let Some(dist) = &self.codim_distribution {
            s.push_str(&format!(" codim_distribution={dist:?}"));
        }
        s
    }

    fn member_rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }
}

/// `n` independent subcubes from the coordinate model.
pub fn sample_family(params: &RandomModelParams) -> Result<CubeFamily> {
    params.validate()?;
    let members = (0..params.n)
        .into_par_iter()
        .map(|i| {
            let mut rng = params.member_rng(i);
            let mut c = Subcube::full(params.d)?;
            for coord in 0..params.d {
                let u: f64 = rng.random();
                if u < params.p {
                    c.set(coord, Coord::Zero);
                } else if u < 2.0 * params.p {
                    c.set(coord, Coord::One);
                }
            }
            Ok(c)
        })
        .collect::<Result<Vec<_>>>()?;
    CubeFamily::from_members(params.d, members)
}

/// `n` independent subcubes from the codimension model.
pub fn sample_family_codim(params: &RandomModelParams) -> Result<CubeFamily> {
    params.validate()?;
    let dist = params
        .codim_distribution
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("no codimension distribution given".into()))?;
    let weights = WeightedIndex::new(dist).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let members = (0..params.n)
        .into_par_iter()
        .map(|i| {
            let mut rng = params.member_rng(i);
            let codim = weights.sample(&mut rng);
            let mut fixed = sample(&mut rng, params.d, codim).into_vec();
            fixed.sort_unstable();
            Subcube::with_fixed(params.d, fixed.into_iter().map(|c| (c, rng.random_bool(0.5))))
        })
        .collect::<Result<Vec<_>>>()?;
    CubeFamily::from_members(params.d, members)
}

/// Probability that two independent members of the coordinate model meet:
/// a coordinate conflicts with probability `2p^2`.
pub fn edge_probability(d: usize, p: f64) -> f64 {
    (1.0 - 2.0 * p * p).powi(d as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_probability_examples() {
        assert_eq!(edge_probability(5, 0.0), 1.0);
        assert!((edge_probability(6, 0.5) - 1.0 / 64.0).abs() < 1e-15);
        assert!((edge_probability(1, 0.3) - 0.82).abs() < 1e-12);
        assert!((edge_probability(8, 0.25) - 0.343_608_915_805_816_65).abs() < 1e-15);
    }

    #[test]
    fn degenerate_probabilities() {
        let f = sample_family(&RandomModelParams::new(20, 5, 0.0, 1)).unwrap();
        assert!(f.members().iter().all(|m| m.codimension() == 0));
        let f = sample_family(&RandomModelParams::new(20, 5, 0.5, 1)).unwrap();
        assert!(f.members().iter().all(Subcube::is_singleton));
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let params = RandomModelParams::new(300, 12, 0.2, 99);
        let a = sample_family(&params).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| sample_family(&params).unwrap());
        assert_eq!(a, b);
        assert_ne!(a, sample_family(&RandomModelParams::new(300, 12, 0.2, 100)).unwrap());
    }

    #[test]
    fn invalid_params() {
        assert!(sample_family(&RandomModelParams::new(1, 3, 0.6, 0)).is_err());
        assert!(sample_family(&RandomModelParams::new(1, 3, -0.1, 0)).is_err());
        let bad = RandomModelParams::new(1, 2, 0.1, 0).with_codim_distribution(vec![0.5, 0.4, 0.0]);
        assert!(sample_family_codim(&bad).is_err());
        let short = RandomModelParams::new(1, 2, 0.1, 0).with_codim_distribution(vec![1.0]);
        assert!(sample_family_codim(&short).is_err());
    }

    #[test]
    fn codimension_point_masses() {
        let full = RandomModelParams::new(10, 4, 0.0, 3).with_codim_distribution(vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(sample_family_codim(&full).unwrap().members().iter().all(|m| m.codimension() == 0));
        let points = RandomModelParams::new(10, 4, 0.0, 3).with_codim_distribution(vec![0.0, 0.0, 0.0, 0.0, 1.0]);
        assert!(sample_family_codim(&points).unwrap().members().iter().all(Subcube::is_singleton));
    }
}
