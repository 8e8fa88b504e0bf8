//! Formal distribution calculus: exponent windows, delta-function identities,
//! generating series of module actions, and the projection ψ that splits a
//! series into its restricted and polynomial-annihilated parts.
//!
//! All identities between doubly-infinite series are verified coefficient-wise
//! on finite windows; nothing here ever claims an identity outside the window
//! it was checked on.

mod commutator;
mod delta;
mod series;

pub use commutator::{commutator_series_check, eq_bracket_series_coefficient};
pub use delta::{
    delta_derivative_coefficient, delta_identity_check, delta_substitution_check, residue_poly,
};
pub use series::{decompose_series, psi_project, GeneratingSeries, SeriesFloor};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::MultiIndex;

/// Finite exponent ranges, one for x₀ and one per loop variable.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExponentWindow {
    /// Inclusive bounds for the x₀ exponent.
    pub x0: (i64, i64),
    /// Inclusive bounds for x₁,…,x_r.
    pub x: Vec<(i64, i64)>,
}

impl ExponentWindow {
    pub fn new(x0: (i64, i64), x: Vec<(i64, i64)>) -> Result<Self> {
        if x0.0 > x0.1 || x.iter().any(|(lo, hi)| lo > hi) {
            return Err(Error::InvalidDescriptor("window bounds must satisfy lo ≤ hi".into()));
        }
        Ok(ExponentWindow { x0, x })
    }

    /// The same range [-bound, bound] for x₀ and each of r loop variables.
    pub fn symmetric(rank: usize, bound: i64) -> Self {
        ExponentWindow {
            x0: (-bound, bound),
            x: vec![(-bound, bound); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.x.len()
    }

    pub fn x0_range(&self) -> impl Iterator<Item = i64> {
        self.x0.0..=self.x0.1
    }

    /// All multi-indices in the loop-variable box.
    pub fn multi_indices(&self) -> Vec<MultiIndex> {
        let mut out = vec![Vec::new()];
        for (lo, hi) in &self.x {
            let mut next = Vec::new();
            for prefix in &out {
                for v in *lo..=*hi {
                    let mut p = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(MultiIndex::new).collect()
    }

    /// All (n₀, n̲) pairs in the window.
    pub fn pairs(&self) -> Vec<(i64, MultiIndex)> {
        let indices = self.multi_indices();
        self.x0_range()
            .flat_map(|n0| indices.iter().map(move |n| (n0, n.clone())))
            .collect()
    }
}
