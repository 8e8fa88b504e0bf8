//! Sparse univariate Laurent polynomials over exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::scalar::{is_negative, Scalar};
use crate::exact::series::TruncatedPowerSeries;

/// Laurent polynomial keyed by integer exponent. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, Scalar::one())
    }

    /// c·x^k (the zero polynomial when c = 0).
    pub fn monomial(exp: i64, c: Scalar) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    /// x − z.
    pub fn linear_root(z: &Scalar) -> Self {
        let mut p = LaurentPoly::monomial(1, Scalar::one());
        p.add_term(0, -z);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Scalar)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> Scalar {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Degree of an ordinary polynomial (max exponent); None for 0.
    pub fn degree(&self) -> Option<i64> {
        self.max_exp()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Evaluate at a point; z must be nonzero when negative exponents are present.
    pub fn eval(&self, z: &Scalar) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (e, c) in &self.coeffs {
            acc += &(c * &z.pow(*e)?);
        }
        Ok(acc)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .map(|(e, c)| (e - 1, c * &Scalar::from(*e))),
        )
    }

    /// Splits `p = x^shift · q` with `q(0) ≠ 0` and `q` free of negative exponents.
    pub fn strip_monomial_factor(&self) -> Result<(i64, LaurentPoly)> {
        let shift = self.min_exp().ok_or(Error::EmptyPolynomial)?;
        Ok((shift, self.shift(-shift)))
    }

    /// True iff all nonzero roots are simple. Zero roots are exempt.
    ///
    /// Tested exactly via gcd(q, q') being constant, where q is the
    /// monomial-stripped part; no root finding is involved.
    pub fn nonzero_roots_multiplicity_free(&self) -> Result<bool> {
        let (_, q) = self.strip_monomial_factor()?;
        if q.degree() == Some(0) {
            return Ok(true);
        }
        let g = poly_gcd(&q, &q.derivative());
        Ok(g.degree() == Some(0))
    }

    /// Squarefree companion: same distinct roots, all simple (q / gcd(q, q')).
    ///
    /// Input must have no negative exponents; zero roots are preserved once.
    pub fn squarefree_part(&self) -> Result<LaurentPoly> {
        let (shift, q) = self.strip_monomial_factor()?;
        if shift < 0 {
            return Err(Error::NegativeExponent);
        }
        let g = poly_gcd(&q, &q.derivative());
        let (sf, rem) = poly_divmod(&q, &g)?;
        debug_assert!(rem.is_zero());
        if shift > 0 {
            Ok(sf.shift(1))
        } else {
            Ok(sf)
        }
    }

    /// Exact divisibility test for ordinary polynomials.
    pub fn divides(&self, other: &LaurentPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        if other.is_zero() {
            return true;
        }
        match poly_divmod(other, self) {
            Ok((_, rem)) => rem.is_zero(),
            Err(_) => false,
        }
    }

    /// Power-series inverse truncated at x^window: returns q with p·q ≡ 1 (mod x^{window+1}).
    pub fn expand_inverse(&self, window: usize) -> Result<TruncatedPowerSeries> {
        if self.is_zero() {
            return Err(Error::EmptyPolynomial);
        }
        let min = self.min_exp().unwrap();
        if min < 0 {
            return Err(Error::NegativeExponent);
        }
        if min > 0 {
            return Err(Error::ConstantTermZero);
        }
        let p0 = self.coefficient(0);
        let p0_inv = p0.inverse()?;
        let deg = self.degree().unwrap() as usize;
        let mut out = Vec::with_capacity(window + 1);
        out.push(p0_inv.clone());
        for n in 1..=window {
            // q_n = -(Σ_{k=1..min(n,deg)} p_k q_{n-k}) / p_0
            let mut acc = Scalar::zero();
            for k in 1..=n.min(deg) {
                let pk = self.coefficient(k as i64);
                if !pk.is_zero() {
                    acc += &(&pk * &out[n - k]);
                }
            }
            out.push(-(acc) * &p0_inv);
        }
        Ok(TruncatedPowerSeries::new(out))
    }

    /// Serializes as a JSON map {"exponent": "scalar"}.
    pub fn to_json(&self) -> serde_json::Value {
        let map: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect();
        serde_json::to_value(map).expect("string map serializes")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in map {
            let exp: i64 = e.parse().map_err(serde::de::Error::custom)?;
            let coeff: Scalar = c.parse().map_err(serde::de::Error::custom)?;
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let shown = if i == 0 {
                c.clone()
            } else {
                write!(f, "{}", if is_negative(c) { " - " } else { " + " })?;
                if is_negative(c) {
                    -c
                } else {
                    c.clone()
                }
            };
            match (*e, shown.is_one()) {
                (0, _) => write!(f, "{shown}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{shown}·x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{shown}·x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Euclidean division of ordinary polynomials (no negative exponents): (quotient, remainder).
pub fn poly_divmod(num: &LaurentPoly, den: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    if den.is_zero() {
        return Err(Error::EmptyPolynomial);
    }
    if num.min_exp().is_some_and(|m| m < 0) || den.min_exp().is_some_and(|m| m < 0) {
        return Err(Error::NegativeExponent);
    }
    let mut rem = num.clone();
    let mut quot = LaurentPoly::zero();
    let dd = den.degree().unwrap();
    let lead = den.coefficient(dd);
    while let Some(rd) = rem.degree() {
        if rd < dd {
            break;
        }
        let c = &rem.coefficient(rd) / &lead;
        let t = LaurentPoly::monomial(rd - dd, c);
        quot = &quot + &t;
        rem = &rem - &(&t * den);
    }
    Ok((quot, rem))
}

/// Monic gcd of ordinary polynomials over the rationals.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = poly_divmod(&x, &y).expect("gcd operates on ordinary polynomials");
        x = y;
        y = r;
    }
    if let Some(d) = x.degree() {
        let lead = x.coefficient(d);
        x.scale(&lead.inverse().expect("leading coefficient nonzero"))
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, s(c))))
    }

    #[test]
    fn geometric_series() {
        // 1/(1-x) = 1 + x + x^2 + x^3
        let p = poly(&[(0, 1), (1, -1)]);
        let q = p.expand_inverse(3).unwrap();
        assert_eq!(q.coefficients(), &[s(1), s(1), s(1), s(1)]);
    }

    #[test]
    fn constant_inverse() {
        let p = poly(&[(0, 1)]);
        let q = p.expand_inverse(5).unwrap();
        assert_eq!(q.coefficients(), &[s(1), s(0), s(0), s(0), s(0), s(0)]);
    }

    #[test]
    fn inverse_of_product_checked_by_long_division() {
        // (1-2x)(1-3x) = 1 - 5x + 6x^2; long-division oracle gives 1 + 5x + 19x^2
        let p = poly(&[(0, 1), (1, -5), (2, 6)]);
        let q = p.expand_inverse(2).unwrap();
        assert_eq!(q.coefficients(), &[s(1), s(5), s(19)]);
        // multiply back: p·q ≡ 1 mod x^3
        let prod = &p * &q.to_laurent();
        assert_eq!(prod.coefficient(0), s(1));
        assert_eq!(prod.coefficient(1), s(0));
        assert_eq!(prod.coefficient(2), s(0));
    }

    #[test]
    fn expand_inverse_errors() {
        assert_eq!(LaurentPoly::zero().expand_inverse(1), Err(Error::EmptyPolynomial));
        let p = poly(&[(1, 1)]); // x
        assert_eq!(p.expand_inverse(1), Err(Error::ConstantTermZero));
        let p = poly(&[(-1, 1), (0, 1)]);
        assert_eq!(p.expand_inverse(1), Err(Error::NegativeExponent));
    }

    #[test]
    fn strip_monomial_examples() {
        // x^2(1-x) -> (2, 1-x)
        let p = poly(&[(2, 1), (3, -1)]);
        let (k, q) = p.strip_monomial_factor().unwrap();
        assert_eq!(k, 2);
        assert_eq!(q, poly(&[(0, 1), (1, -1)]));
        // x^{-1} + 1 -> (-1, 1 + x)
        let p = poly(&[(-1, 1), (0, 1)]);
        let (k, q) = p.strip_monomial_factor().unwrap();
        assert_eq!(k, -1);
        assert_eq!(q, poly(&[(0, 1), (1, 1)]));
        // 3x^3 -> (3, 3)
        let p = poly(&[(3, 3)]);
        let (k, q) = p.strip_monomial_factor().unwrap();
        assert_eq!(k, 3);
        assert_eq!(q, poly(&[(0, 3)]));
        assert_eq!(LaurentPoly::zero().strip_monomial_factor(), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn multiplicity_free_examples() {
        // (x-2)(x-3)
        let p = &LaurentPoly::linear_root(&s(2)) * &LaurentPoly::linear_root(&s(3));
        assert!(p.nonzero_roots_multiplicity_free().unwrap());
        // (x-2)^2
        let q = &LaurentPoly::linear_root(&s(2)) * &LaurentPoly::linear_root(&s(2));
        assert!(!q.nonzero_roots_multiplicity_free().unwrap());
        // x^3(x-5): zero roots exempt
        let r = LaurentPoly::linear_root(&s(5)).shift(3);
        assert!(r.nonzero_roots_multiplicity_free().unwrap());
        assert_eq!(
            LaurentPoly::zero().nonzero_roots_multiplicity_free(),
            Err(Error::EmptyPolynomial)
        );
    }

    /// Brute-force oracle: rational-root search with multiplicity counting,
    /// valid for polynomials that split over small rationals.
    fn multiplicity_free_by_root_search(p: &LaurentPoly) -> bool {
        let (_, mut q) = p.strip_monomial_factor().unwrap();
        // candidate roots a/b with a | constant, b | leading (small search space)
        let mut roots: Vec<(Scalar, usize)> = Vec::new();
        'outer: loop {
            if q.degree() == Some(0) {
                break 'outer;
            }
            for a in -30i64..=30 {
                for b in 1i64..=12 {
                    if a == 0 {
                        continue;
                    }
                    let cand = Scalar::ratio(a, b);
                    if q.eval(&cand).unwrap().is_zero() {
                        let lin = LaurentPoly::linear_root(&cand);
                        let (div, rem) = poly_divmod(&q, &lin).unwrap();
                        assert!(rem.is_zero());
                        q = div;
                        match roots.iter_mut().find(|(r, _)| *r == cand) {
                            Some((_, m)) => *m += 1,
                            None => roots.push((cand, 1)),
                        }
                        continue 'outer;
                    }
                }
            }
            break;
        }
        roots.iter().all(|(_, m)| *m == 1)
    }

    proptest! {
        #[test]
        fn inverse_times_poly_is_one(coeffs in proptest::collection::vec(-4i64..=4, 1..5), w in 0usize..8) {
            let mut p = LaurentPoly::monomial(0, s(1)); // force p(0) = 1
            for (i, c) in coeffs.iter().enumerate() {
                p.add_term(i as i64 + 1, s(*c));
            }
            let q = p.expand_inverse(w).unwrap();
            let prod = &p * &q.to_laurent();
            prop_assert_eq!(prod.coefficient(0), s(1));
            for k in 1..=w as i64 {
                prop_assert_eq!(prod.coefficient(k), s(0));
            }
        }

        #[test]
        fn strip_round_trip(exps in proptest::collection::btree_map(-5i64..=5, -6i64..=6, 1..5)) {
            let p = LaurentPoly::from_terms(exps.into_iter().map(|(e, c)| (e, s(c))));
            prop_assume!(!p.is_zero());
            let (k, q) = p.strip_monomial_factor().unwrap();
            prop_assert_eq!(q.shift(k), p);
            prop_assert!(!q.coefficient(0).is_zero());
        }

        #[test]
        fn multiplicity_free_matches_root_search(
            roots in proptest::collection::vec((-4i64..=4, 1i64..=3), 1..4),
            zero_power in 0i64..3,
        ) {
            let mut p = LaurentPoly::monomial(zero_power, s(1));
            for (a, b) in &roots {
                prop_assume!(*a != 0);
                p = &p * &LaurentPoly::linear_root(&Scalar::ratio(*a, *b));
            }
            prop_assert_eq!(
                p.nonzero_roots_multiplicity_free().unwrap(),
                multiplicity_free_by_root_search(&p)
            );
        }
    }
}
