use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A system given by its superselection blocks `(n₁, …, n_k)`.
///
/// States are block-diagonal Hermitian matrices with one `nᵢ × nᵢ` block
/// per sector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SystemSpec {
    blocks: Vec<usize>,
}

impl SystemSpec {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidSystem("a system needs at least one block".into()));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidSystem(format!("block dimensions must be positive: {blocks:?}")));
        }
        Ok(Self { blocks })
    }

    /// The trivial system `(1)`.
    pub fn trivial() -> Self {
        Self { blocks: vec![1] }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> usize {
        self.blocks[i]
    }

    /// Number of blocks `k`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `N = Σ nᵢ`, the size of any maximal perfectly distinguishable set.
    pub fn rank(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// `D = Σ nᵢ²`, the real dimension of the state space.
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|n| n * n).sum()
    }

    pub fn is_classical(&self) -> bool {
        self.num_blocks() == self.rank()
    }

    pub fn is_fully_quantum(&self) -> bool {
        self.num_blocks() == 1
    }

    /// Offset of block `l` in the `μ(l, s, t)` enumeration of the basis.
    pub fn basis_offset(&self, l: usize) -> usize {
        self.blocks[..l].iter().map(|n| n * n).sum()
    }
}

impl TryFrom<Vec<usize>> for SystemSpec {
    type Error = Error;
    fn try_from(blocks: Vec<usize>) -> Result<Self> {
        Self::new(blocks)
    }
}

impl From<SystemSpec> for Vec<usize> {
    fn from(s: SystemSpec) -> Self {
        s.blocks
    }
}

impl fmt::Display for SystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SystemSpec {
    type Err = Error;

    /// Parses `"1,2,4"`; surrounding parentheses and spaces are accepted.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let blocks = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSystem(format!("cannot parse block {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }
}
