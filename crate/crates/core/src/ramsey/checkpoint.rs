//! Resumable search state on disk.
//!
//! A checkpoint records the branch list of a run and the result of every
//! finished branch. It is rewritten atomically (temporary file, then rename)
//! after each branch, and refused when its configuration hash differs from
//! the current run.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::search::BranchResult;
use crate::error::{Error, Result};

pub const CHECKPOINT_FORMAT: &str = "subcube-ramsey-checkpoint/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCheckpoint {
    pub format: String,
    pub config_hash: String,
    pub d: usize,
    pub k: usize,
    pub l: usize,
    /// Statistics of the nodes above the branch roots.
    pub prelude: BranchResult,
    /// Branch roots as rank sequences, in search order.
    pub frontier: Vec<Vec<u8>>,
    /// Finished branches by index into `frontier`.
    pub completed: BTreeMap<usize, BranchResult>,
}

impl SearchCheckpoint {
    pub fn explored(&self) -> u64 {
        self.prelude.nodes + self.completed.values().map(|b| b.nodes).sum::<u64>()
    }

    pub fn pending(&self) -> Vec<usize> {
        (0..self.frontier.len()).filter(|i| !self.completed.contains_key(i)).collect()
    }

    /// Loads a checkpoint written for the configuration `config_hash`.
    pub fn load(path: &Path, config_hash: &str) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let cp: SearchCheckpoint =
            serde_json::from_str(&text).map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        if cp.format != CHECKPOINT_FORMAT {
            return Err(Error::Checkpoint(format!("unknown format {:?}", cp.format)));
        }
        if cp.config_hash != config_hash {
            return Err(Error::Checkpoint(format!(
                "{} belongs to a different configuration ({} != {config_hash})",
                path.display(),
                cp.config_hash
            )));
        }
        Ok(cp)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        fs::write(&tmp, serde_json::to_string(self)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

/// Hex SHA-256 of a canonical description of the run.
pub fn config_hash(description: &str) -> String {
    hex::encode(Sha256::digest(description.as_bytes()))
}
