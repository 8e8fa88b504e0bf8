//! Truncated power series: dense prefixes of Taylor expansions.

use std::fmt;

use crate::exact::laurent::LaurentPoly;
use crate::exact::scalar::Scalar;

/// The first `window + 1` Taylor coefficients of a power series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedPowerSeries {
    coeffs: Vec<Scalar>,
}

impl TruncatedPowerSeries {
    /// Wraps coefficients for exponents 0..=window. Must be nonempty.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series stores at least the constant term");
        TruncatedPowerSeries { coeffs }
    }

    pub fn window(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, exp: usize) -> Scalar {
        self.coeffs.get(exp).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// View as a Laurent polynomial supported on 0..=window.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64, c.clone())),
        )
    }
}

impl fmt::Display for TruncatedPowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(x^{})", self.to_laurent(), self.window() + 1)
    }
}
