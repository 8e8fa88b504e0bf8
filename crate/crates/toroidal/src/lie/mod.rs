//! The finite-dimensional simple Lie algebra 𝔤 and the toroidal algebra τ
//! built over it.

mod simple;
mod toroidal;

pub use simple::{GVector, SimpleLieData};
pub use toroidal::{GeneratorKey, ToroidalElement};
