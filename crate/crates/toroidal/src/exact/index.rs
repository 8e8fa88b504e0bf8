//! Integer multi-indices n̲ = (n₁,…,n_r).

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector for the loop variables t₁,…,t_r.
///
/// Rank 0 (the empty index) is the affine specialization used internally by
/// restricted-module factors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex(Vec<i64>);

impl MultiIndex {
    pub fn new(entries: Vec<i64>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(rank: usize) -> Self {
        MultiIndex(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&n| n == 0)
    }

    pub fn checked_add(&self, other: &MultiIndex) -> Result<MultiIndex> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        Ok(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn neg(&self) -> MultiIndex {
        MultiIndex(self.0.iter().map(|n| -n).collect())
    }

    /// Adds k to the i-th entry (0-based).
    pub fn bump(&self, i: usize, k: i64) -> MultiIndex {
        let mut v = self.0.clone();
        v[i] += k;
        MultiIndex(v)
    }
}

impl Index<usize> for MultiIndex {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for MultiIndex {
    fn from(v: Vec<i64>) -> Self {
        MultiIndex(v)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
