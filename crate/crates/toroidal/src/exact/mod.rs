//! Exact arithmetic core: rational scalars, sparse Laurent polynomials,
//! truncated power series, and multi-indices.
//!
//! Everything downstream builds on these; none of it ever rounds.

mod index;
mod laurent;
mod scalar;
mod series;

pub use index::MultiIndex;
pub use laurent::{poly_divmod, poly_gcd, LaurentPoly};
pub use scalar::Scalar;
pub use series::TruncatedPowerSeries;
