//! Canonical exact rational numbers.
//!
//! [`Rational`] is the scalar type for everything in this crate that needs a
//! field: matrix entries, polynomial coefficients, decomposition weights.
//! Values are always held in canonical form (fully reduced, positive
//! denominator, zero as `0/1`), so structural equality coincides with
//! mathematical equality and results are byte-stable when printed.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An exact rational number in canonical form.
///
/// Invariants, maintained by every constructor and operation:
/// - the denominator is strictly positive,
/// - numerator and denominator are coprime,
/// - zero is represented as `0/1`.
///
/// Numerator and denominator are arbitrary-precision integers, so no
/// operation can overflow or round.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, reducing to canonical form.
    ///
    /// Panics if `den` is zero. Input read from untrusted sources should go
    /// through [`FromStr`] instead, which reports the error.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "rational denominator must be nonzero");
        Rational(BigRational::new(num.into(), den))
    }

    /// The integer `n` as a rational (`n/1`).
    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always strictly positive.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
// Division by zero panics, like integer division.
binop!(Div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Prints `p/q`, or just `p` when the denominator is 1.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("`{0}` is not an integer")]
    InvalidInteger(String),
    #[error("denominator is zero")]
    ZeroDenominator,
}

fn parse_bigint(s: &str) -> Result<BigInt, ParseRationalError> {
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    s.parse::<BigInt>()
        .map_err(|_| ParseRationalError::InvalidInteger(s.to_owned()))
}

/// Parses `p/q` or a bare integer `p`. The input is reduced to canonical
/// form, so `"2/4"` parses equal to `"1/2"`.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_bigint(s)?)),
            Some((num, den)) => {
                let num = parse_bigint(num)?;
                let den = parse_bigint(den)?;
                if den.is_zero() {
                    return Err(ParseRationalError::ZeroDenominator);
                }
                Ok(Rational::new(num, den))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn r(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    #[test]
    fn addition_is_exact_and_canonical() {
        assert_eq!(r(1, 3) + r(1, 6), r(1, 2));
        assert_eq!(Rational::zero() + r(7, 9), r(7, 9));
        let sum = r(2, 3) + r(-2, 3);
        assert_eq!(sum, Rational::zero());
        // canonical zero is 0/1
        assert_eq!(sum.numerator(), &BigInt::from(0));
        assert_eq!(sum.denominator(), &BigInt::from(1));
    }

    #[test]
    fn multiplication_cancels() {
        assert_eq!(r(2, 3) * r(3, 4), r(1, 2));
        assert_eq!(Rational::one() * r(5, 7), r(5, 7));
        assert_eq!(r(-1, 2) * r(-1, 2), r(1, 4));
    }

    #[test]
    fn comparison_matches_real_order() {
        assert_eq!(r(1, 3).cmp(&r(1, 2)), Ordering::Less);
        assert_eq!(r(2, 4).cmp(&r(1, 2)), Ordering::Equal);
        assert_eq!(r(-1, 5).cmp(&Rational::zero()), Ordering::Less);
    }

    #[test]
    fn construction_normalizes() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(1, -2), r(-1, 2));
        assert!(r(1, -2).denominator() > &BigInt::from(0));
        assert_eq!(r(0, 17), Rational::zero());
    }

    #[test]
    fn display_round_trips() {
        for s in ["-3/7", "2", "0", "1/2", "-11"] {
            let v: Rational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        // non-canonical input prints canonically
        assert_eq!("2/4".parse::<Rational>().unwrap().to_string(), "1/2");
        assert_eq!("3/-6".parse::<Rational>().unwrap().to_string(), "-1/2");
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert_eq!("".parse::<Rational>(), Err(ParseRationalError::Empty));
        assert_eq!("1/".parse::<Rational>(), Err(ParseRationalError::Empty));
        assert_eq!("/2".parse::<Rational>(), Err(ParseRationalError::Empty));
        assert_eq!(
            "1/0".parse::<Rational>(),
            Err(ParseRationalError::ZeroDenominator)
        );
        assert!(matches!(
            "1.5".parse::<Rational>(),
            Err(ParseRationalError::InvalidInteger(_))
        ));
        assert!(matches!(
            "a/b".parse::<Rational>(),
            Err(ParseRationalError::InvalidInteger(_))
        ));
        assert!(matches!(
            " 1/2".parse::<Rational>(),
            Err(ParseRationalError::InvalidInteger(_))
        ));
    }

    #[test]
    fn division_is_exact() {
        assert_eq!(r(1, 2) / r(3, 4), r(2, 3));
        assert_eq!(r(5, 6) / Rational::one(), r(5, 6));
    }
}
