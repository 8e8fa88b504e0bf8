//! Delta-function calculus.
//!
//! The formal delta function is δ(x) = Σ_{n∈ℤ} xⁿ. Deltas are never expanded
//! into stored data: every check below queries coefficients on demand from
//! closed forms and compares exactly on a finite window.

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, Scalar};
use crate::formal::ExponentWindow;

/// Coefficient of x₁^p x₂^q in (∂/∂x₂)ⁿ x₂⁻¹ δ(x₁/x₂).
///
/// The series is Σ_k (−k−1)(−k−2)⋯(−k−n) x₁^k x₂^{−k−1−n}, so the
/// coefficient is nonzero only on the diagonal q = −p−1−n.
pub fn delta_derivative_coefficient(n: u32, p: i64, q: i64) -> Scalar {
    if q != -p - 1 - n as i64 {
        return Scalar::zero();
    }
    let mut c = Scalar::one();
    for t in 1..=n as i64 {
        c *= &Scalar::from(-p - t);
    }
    c
}

fn factorial(n: u32) -> Scalar {
    let mut f = Scalar::one();
    for t in 2..=n as i64 {
        f *= &Scalar::from(t);
    }
    f
}

fn binomial(m: u32, k: u32) -> Scalar {
    let mut b = Scalar::one();
    for t in 0..k {
        b = b * Scalar::from((m - t) as i64) / Scalar::from((t + 1) as i64);
    }
    b
}

/// Coefficient of x₁^p x₂^q in (x₁−x₂)^m (1/n!) (∂/∂x₂)ⁿ x₂⁻¹ δ(x₁/x₂).
fn lhs_coefficient(m: u32, n: u32, p: i64, q: i64) -> Scalar {
    let inv_fact = factorial(n).inverse().expect("factorial is nonzero");
    let mut acc = Scalar::zero();
    for k in 0..=m {
        // (x₁−x₂)^m = Σ_k C(m,k) x₁^k (−x₂)^{m−k}
        let sign = if (m - k).is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
        let shift = delta_derivative_coefficient(n, p - k as i64, q - (m - k) as i64);
        acc += &(&(&binomial(m, k) * &sign) * &shift);
    }
    acc * inv_fact
}

/// Verifies the derivative identities on the window:
/// for m > n ≥ 0 the product (x₁−x₂)^m (∂/∂x₂)ⁿ x₂⁻¹δ(x₁/x₂) vanishes;
/// for 0 ≤ m ≤ n it equals (1/(n−m)!) (∂/∂x₂)^{n−m} x₂⁻¹δ(x₁/x₂)
/// (with the 1/n! normalization on the left).
///
/// The window's x₀ range bounds the x₁ exponent and its first loop range
/// bounds the x₂ exponent.
pub fn delta_identity_check(m: u32, n: u32, window: &ExponentWindow) -> Result<bool> {
    let (lo2, hi2) = *window
        .x
        .first()
        .ok_or_else(|| Error::InvalidDescriptor("two-variable window required".into()))?;
    for p in window.x0_range() {
        for q in lo2..=hi2 {
            let lhs = lhs_coefficient(m, n, p, q);
            let rhs = if m > n {
                Scalar::zero()
            } else {
                let inv = factorial(n - m).inverse().expect("factorial is nonzero");
                delta_derivative_coefficient(n - m, p, q) * inv
            };
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Verifies the substitution property f(x)δ(a/x) = f(a)δ(a/x) on the window's
/// x₀ range of exponents. The point a must be nonzero.
pub fn delta_substitution_check(f: &LaurentPoly, a: &Scalar, window: &ExponentWindow) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroPoint);
    }
    let fa = f.eval(a)?;
    for k in window.x0_range() {
        // δ(a/x) = Σ_n aⁿ x^{−n}: coefficient of x^k is a^{−k}
        let mut lhs = Scalar::zero();
        for (j, c) in f.iter() {
            lhs += &(c * &a.pow(j - k)?);
        }
        let rhs = &fa * &a.pow(-k)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Res_x of x^power · p: the coefficient of x^{−power−1} in p.
pub fn residue_poly(p: &LaurentPoly, power: i64) -> Scalar {
    p.coefficient(-power - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn window2(bound: i64) -> ExponentWindow {
        ExponentWindow::new((-bound, bound), vec![(-bound, bound)]).unwrap()
    }

    #[test]
    fn vanishing_base_case() {
        // (x1 - x2)·x2^{-1}δ(x1/x2) = 0
        assert!(delta_identity_check(1, 0, &window2(6)).unwrap());
    }

    #[test]
    fn trivial_m0_n0() {
        assert!(delta_identity_check(0, 0, &window2(6)).unwrap());
    }

    #[test]
    fn derivative_reduction_case() {
        // (x1-x2)·(1/2!)(∂2)² x2^{-1}δ = (∂2)x2^{-1}δ
        assert!(delta_identity_check(1, 2, &window2(6)).unwrap());
    }

    #[test]
    fn all_small_orders() {
        let w = window2(5);
        for m in 0..=3 {
            for n in 0..=3 {
                assert!(delta_identity_check(m, n, &w).unwrap(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn identity_is_sharp() {
        // dropping the 1/(n-m)! factor must fail: check a deliberately wrong
        // comparison to make sure the checker can falsify
        let w = window2(4);
        for p in w.x0_range() {
            for q in -4..=4 {
                let lhs = lhs_coefficient(1, 2, p, q);
                let wrong_rhs = delta_derivative_coefficient(1, p, q) * s(2);
                if lhs != wrong_rhs {
                    return; // found the expected disagreement
                }
            }
        }
        panic!("wrong normalization went undetected");
    }

    #[test]
    fn substitution_examples() {
        let w = window2(6);
        // f = x, a = 2
        let f = LaurentPoly::monomial(1, s(1));
        assert!(delta_substitution_check(&f, &s(2), &w).unwrap());
        // f = 1
        assert!(delta_substitution_check(&LaurentPoly::one(), &s(7), &w).unwrap());
        // f = x - a: both sides vanish
        let f = LaurentPoly::linear_root(&s(3));
        assert!(delta_substitution_check(&f, &s(3), &w).unwrap());
        for k in -6..=6 {
            let mut lhs = Scalar::zero();
            for (j, c) in f.iter() {
                lhs += &(c * &s(3).pow(j - k).unwrap());
            }
            assert!(lhs.is_zero());
        }
        // zero point rejected
        assert!(matches!(
            delta_substitution_check(&f, &s(0), &w),
            Err(Error::ZeroPoint)
        ));
    }

    #[test]
    fn substitution_with_laurent_f() {
        // negative exponents in f are fine since a ≠ 0
        let f = LaurentPoly::from_terms([(-2, s(3)), (0, s(-1)), (1, s(5))]);
        assert!(delta_substitution_check(&f, &Scalar::ratio(2, 3), &window2(5)).unwrap());
    }

    #[test]
    fn residues() {
        // Res_x x^0 δ(x) = 1: the delta has coefficient 1 at x^{-1}
        assert_eq!(delta_derivative_coefficient(0, -1, 0), s(1));
        // Res_x x^n of a Laurent polynomial is its coefficient at x^{-n-1}
        let p = LaurentPoly::from_terms([(-3, s(4)), (-1, s(7)), (2, s(9))]);
        assert_eq!(residue_poly(&p, 0), s(7));
        assert_eq!(residue_poly(&p, 2), s(4));
        assert_eq!(residue_poly(&p, -3), s(9));
        assert_eq!(residue_poly(&p, 5), s(0));
    }
}
