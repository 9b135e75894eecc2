//! Exact rational numbers.
//!
//! [`Rat`] wraps an arbitrary-precision [`BigRational`], which is always kept
//! in lowest terms with a positive denominator. The text form is `p` or
//! `p/q`, and parsing followed by printing is the identity on canonical text.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    /// Zero.
    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    /// One.
    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    /// The integer `n`.
    pub fn int(n: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// The fraction `p/q`, reduced. Panics if `q == 0`.
    pub fn frac(p: i64, q: i64) -> Rat {
        assert!(q != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// One half.
    pub fn half() -> Rat {
        Rat::frac(1, 2)
    }

    /// Wraps a big rational.
    pub fn from_big(r: BigRational) -> Rat {
        Rat(r)
    }

    /// The underlying big rational.
    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Numerator in lowest terms.
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator in lowest terms, always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True for strictly positive values.
    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// True for strictly negative values.
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True when the denominator is one.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Absolute value.
    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Sign as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Exact division; errors on a zero divisor.
    pub fn checked_div(&self, other: &Rat) -> Result<Rat, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &other.0))
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// The value as `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Denominator as `i64` when it fits.
    pub fn denom_i64(&self) -> Option<i64> {
        self.0.denom().to_i64()
    }

    /// Multiplies by an integer and returns the result as `i64` if integral.
    pub fn scaled_i64(&self, scale: i64) -> Option<i64> {
        let v = &self.0 * BigRational::from_integer(BigInt::from(scale));
        if v.is_integer() {
            v.numer().to_i64()
        } else {
            None
        }
    }
}

/// Least common multiple of the denominators of the given values.
pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat, Error> {
        let t = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        let int = |x: &str| -> Result<BigInt, Error> {
            let x = x.trim();
            let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse::<BigInt>().map_err(|_| bad())
        };
        match t.split_once('/') {
            None => Ok(Rat(BigRational::from_integer(int(t)?))),
            Some((p, q)) => {
                let q = int(q)?;
                if q.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Rat(BigRational::new(int(p)?, q)))
            }
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::int(n as i64)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(&self.0 $op rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Rat> for &Rat {
    type Output = Rat;
    /// Panics on a zero divisor; use [`Rat::checked_div`] to get an error.
    fn div(self, rhs: &Rat) -> Rat {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["0", "5", "-3", "5/2", "-7/4"] {
            assert_eq!(s.parse::<Rat>().unwrap().to_string(), s);
        }
        assert_eq!("4/2".parse::<Rat>().unwrap().to_string(), "2");
        assert_eq!("3/-6".parse::<Rat>().unwrap().to_string(), "-1/2");
    }

    #[test]
    fn rejects_garbage_and_zero_denominator() {
        assert!("x".parse::<Rat>().is_err());
        assert!("1/".parse::<Rat>().is_err());
        assert!("1.5".parse::<Rat>().is_err());
        assert!(matches!("1/0".parse::<Rat>(), Err(Error::DivisionByZero)));
        assert!(Rat::one().checked_div(&Rat::zero()).is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = Rat::frac(1, 3);
        let b = Rat::frac(1, 6);
        assert_eq!(&a + &b, Rat::half());
        assert_eq!(&a * &b, Rat::frac(1, 18));
        assert_eq!(&a / &b, Rat::int(2));
        assert_eq!(Rat::frac(-3, 2).floor(), BigInt::from(-2));
    }
}
