//! Exact Vandermonde factor recovery.
//!
//! A combined tensor-module action sampled at consecutive loop exponents
//! n = 0..N−1 has the form s_n = Σⱼ zⱼⁿ·cⱼ with the zⱼ distinct and nonzero.
//! Solving the N×N Vandermonde system in exact arithmetic recovers the
//! per-factor contributions cⱼ.

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::modules::ModuleVector;

/// Recovers the factor contributions from samples at exponents 0..N−1.
///
/// `samples` must contain at least as many entries as `points`; the first N
/// are used. Points must be pairwise distinct and nonzero; an exactly
/// singular system is reported as such.
#[allow(clippy::needless_range_loop)]
pub fn vandermonde_separate(
    samples: &[ModuleVector],
    points: &[Scalar],
) -> Result<Vec<ModuleVector>> {
    let n = points.len();
    if n == 0 || samples.len() < n {
        return Err(Error::DimensionMismatch { expected: n, got: samples.len() });
    }
    if points.iter().any(Scalar::is_zero) {
        return Err(Error::ZeroPoint);
    }
    // rows: Σ_j points[j]^k · c_j = samples[k]
    let mut matrix: Vec<Vec<Scalar>> = (0..n)
        .map(|k| {
            points
                .iter()
                .map(|z| z.pow(k as i64).expect("nonzero point"))
                .collect()
        })
        .collect();
    let mut rhs: Vec<ModuleVector> = samples[..n].to_vec();

    // forward elimination with exact pivoting
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !matrix[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        matrix.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        let pivot = matrix[col][col].clone();
        for r in 0..n {
            if r == col || matrix[r][col].is_zero() {
                continue;
            }
            let factor = &matrix[r][col] / &pivot;
            for c in col..n {
                let sub = &factor * &matrix[col][c];
                matrix[r][c] = &matrix[r][c] - &sub;
            }
            let scaled = rhs[col].scale(&factor);
            rhs[r] = rhs[r].sub(&scaled);
        }
    }
    Ok((0..n)
        .map(|j| {
            let inv = matrix[j][j].inverse().expect("pivot nonzero");
            rhs[j].scale(&inv)
        })
        .collect())
}

/// Σⱼ zⱼᵏ·cⱼ, the resubstitution of recovered contributions at exponent k.
pub fn vandermonde_recombine(
    contributions: &[ModuleVector],
    points: &[Scalar],
    k: i64,
) -> Result<ModuleVector> {
    let mut out = ModuleVector::zero();
    for (c, z) in contributions.iter().zip(points) {
        out.add_scaled(c, &z.pow(k)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn vec_of(pairs: &[(usize, i64)]) -> ModuleVector {
        let mut v = ModuleVector::zero();
        for &(i, c) in pairs {
            v.add_term(i, s(c));
        }
        v
    }

    #[test]
    fn single_point_returns_sample() {
        let sample = vec_of(&[(0, 3), (2, -5)]);
        let out = vandermonde_separate(std::slice::from_ref(&sample), &[s(4)]).unwrap();
        assert_eq!(out, vec![sample]);
    }

    #[test]
    fn two_point_closed_form() {
        // points (1,2): c1 = 2s0 − s1, c2 = s1 − s0
        let c1 = vec_of(&[(0, 7)]);
        let c2 = vec_of(&[(1, -3)]);
        let s0 = c1.add(&c2);
        let s1 = c1.add(&c2.scale(&s(2)));
        let out = vandermonde_separate(&[s0.clone(), s1.clone()], &[s(1), s(2)]).unwrap();
        assert_eq!(out[0], s0.scale(&s(2)).sub(&s1));
        assert_eq!(out[1], s1.sub(&s0));
        assert_eq!(out[0], c1);
        assert_eq!(out[1], c2);
    }

    #[test]
    fn three_point_recovery_and_resubstitution() {
        let cs = [vec_of(&[(0, 1)]), vec_of(&[(1, 2), (2, 1)]), vec_of(&[(3, -4)])];
        let points = [Scalar::ratio(1, 2), s(3), s(-2)];
        let samples: Vec<ModuleVector> = (0..3)
            .map(|k| vandermonde_recombine(&cs, &points, k as i64).unwrap())
            .collect();
        let out = vandermonde_separate(&samples, &points).unwrap();
        assert_eq!(out.as_slice(), &cs);
        // resubstitution residual is exactly zero on extra exponents too
        for k in 0..6 {
            let back = vandermonde_recombine(&out, &points, k).unwrap();
            let expected = vandermonde_recombine(&cs, &points, k).unwrap();
            assert!(back.sub(&expected).is_zero());
        }
    }

    #[test]
    fn duplicate_points_are_singular() {
        let sample = vec_of(&[(0, 1)]);
        let err = vandermonde_separate(&[sample.clone(), sample.clone()], &[s(2), s(2)]);
        assert!(matches!(err, Err(Error::SingularSystem)));
    }

    #[test]
    fn zero_point_rejected() {
        let sample = vec_of(&[(0, 1)]);
        let err = vandermonde_separate(&[sample.clone(), sample], &[s(0), s(2)]);
        assert!(matches!(err, Err(Error::ZeroPoint)));
    }
}
