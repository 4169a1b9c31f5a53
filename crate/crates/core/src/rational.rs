//! Normalized arbitrary-precision rationals, the exact base field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    Parse(String),
}

/// A rational number `num/den` kept in lowest terms with `den > 0`.
///
/// Zero is always `0/1`, so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigRational(Ratio<BigInt>);

impl BigRational {
    /// Builds `num/den`, moving the sign to the numerator and dividing out the gcd.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, RationalError> {
        if den.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(BigRational(Ratio::new(num, den)))
    }

    pub fn from_i64s(num: i64, den: i64) -> Result<Self, RationalError> {
        Self::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        BigRational(Ratio::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        BigRational(Ratio::zero())
    }

    pub fn one() -> Self {
        BigRational(Ratio::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigRational(self.0.abs())
    }

    pub fn inverse(&self) -> Result<Self, RationalError> {
        if self.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(BigRational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, RationalError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        // Ratio<BigInt>::to_f64 scales before dividing, so huge terms do not overflow.
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The rational `r >= 0` with `r^2 = self`, if one exists.
    pub fn perfect_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_root(self.numer(), 2)?;
        let d = exact_root(self.denom(), 2)?;
        Some(BigRational(Ratio::new(n, d)))
    }

    /// The real rational `r` with `r^3 = self`, if one exists (sign preserved).
    pub fn perfect_cbrt(&self) -> Option<Self> {
        let mag = exact_root(&self.numer().abs(), 3)?;
        let d = exact_root(self.denom(), 3)?;
        let n = if self.is_negative() { -mag } else { mag };
        Some(BigRational(Ratio::new(n, d)))
    }
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    debug_assert!(n.sign() != Sign::Minus);
    let r = n.nth_root(k);
    if r.pow(k) == *n {
        Some(r)
    } else {
        None
    }
}

impl fmt::Display for BigRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for BigRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BigRational {
    type Err = RationalError;

    /// Accepts `n` or `n/d` with optional leading sign on `n`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RationalError::Parse(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Self::new(n, d)
    }
}

impl From<i64> for BigRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for BigRational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&BigRational> for &BigRational {
            type Output = BigRational;
            fn $method(self, rhs: &BigRational) -> BigRational {
                BigRational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<BigRational> for BigRational {
            type Output = BigRational;
            fn $method(self, rhs: BigRational) -> BigRational {
                BigRational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&BigRational> for BigRational {
            type Output = BigRational;
            fn $method(self, rhs: &BigRational) -> BigRational {
                BigRational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for BigRational {
    type Output = BigRational;
    fn neg(self) -> BigRational {
        BigRational(-self.0)
    }
}

impl Neg for &BigRational {
    type Output = BigRational;
    fn neg(self) -> BigRational {
        BigRational(-&self.0)
    }
}

impl BigRational {
    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        self.0.abs().cmp(&other.0.abs())
    }
}
