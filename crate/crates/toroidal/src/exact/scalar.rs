//! Exact rational scalars.
//!
//! Every number in the crate is a reduced fraction of arbitrary-precision
//! integers. There is no floating point anywhere; equality of scalars is
//! mathematical equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, kept in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// Fraction n/d. Panics if d = 0.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(self.0.recip()))
    }

    /// Integer power, with negative exponents allowed on nonzero scalars.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp == 0 {
            return Ok(Scalar::one());
        }
        if self.is_zero() {
            if exp < 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(Scalar::zero());
        }
        let base = if exp < 0 { self.0.recip() } else { self.0.clone() };
        let mut acc = BigRational::one();
        for _ in 0..exp.unsigned_abs() {
            acc *= &base;
        }
        Ok(Scalar(acc))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar(BigRational::from_integer(n))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0 $op rhs.0)
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0 $op &rhs.0)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(&self.0 $op rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero scalar");
        Scalar(self.0 / rhs.0)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero scalar");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, s| acc + s)
    }
}

impl fmt::Display for Scalar {
    /// Renders as `p/q`, or `p` when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            t.parse::<BigInt>().map_err(|_| Error::InvalidScalar(s.to_string()))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let num = parse_int(n)?;
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(Error::InvalidScalar(s.to_string()));
                }
                Ok(Scalar(BigRational::new(num, den)))
            }
            None => Ok(Scalar(BigRational::from_integer(parse_int(s)?))),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| de::Error::custom(format!("{e}")))
    }
}

/// Sign test used by the display code of composite types.
pub(crate) fn is_negative(s: &Scalar) -> bool {
    s.0.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display_round_trip() {
        for lit in ["0", "7", "-3", "2/3", "-5/9", "10/4"] {
            let s: Scalar = lit.parse().unwrap();
            let back: Scalar = s.to_string().parse().unwrap();
            assert_eq!(s, back);
        }
        // normalization: 10/4 reduces and displays reduced
        let s: Scalar = "10/4".parse().unwrap();
        assert_eq!(s.to_string(), "5/2");
        let s: Scalar = "4/2".parse().unwrap();
        assert_eq!(s.to_string(), "2");
        // negative denominator normalizes to positive
        let s: Scalar = "3/-6".parse().unwrap();
        assert_eq!(s.to_string(), "-1/2");
    }

    #[test]
    fn rejects_bad_literals() {
        assert!("".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("a/2".parse::<Scalar>().is_err());
    }

    #[test]
    fn negative_powers() {
        let two = Scalar::from(2);
        assert_eq!(two.pow(-3).unwrap(), Scalar::ratio(1, 8));
        assert_eq!(two.pow(0).unwrap(), Scalar::one());
        assert!(Scalar::zero().pow(-1).is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..=50, 1i64..=20).prop_map(|(n, d)| Scalar::ratio(n, d))
    }

    proptest! {
        #[test]
        fn associativity_and_distributivity(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn normalization_after_arithmetic(a in arb_scalar(), b in arb_scalar()) {
            use num::Integer;
            let s = &a * &b;
            prop_assert!(s.denominator() > &BigInt::from(0));
            prop_assert!(s.numerator().gcd(s.denominator()).is_one() || s.is_zero());
        }
    }
}
