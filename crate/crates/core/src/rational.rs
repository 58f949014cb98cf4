//! Exact non-negative rational numbers.
//!
//! All coordinates, resolutions and noise magnitudes in this crate are
//! non-negative rationals; arithmetic is exact and values are kept in
//! lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul};
use std::str::FromStr;

use num::rational::Ratio;
use num::{One, Zero};

use crate::error::{Error, Result};

/// A non-negative rational number in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Precondition("rational denominator must be positive".into()));
        }
        Ok(Rational(Ratio::new(numerator as i64, denominator as i64)))
    }

    pub fn from_integer(n: u64) -> Self {
        Rational(Ratio::from_integer(n as i64))
    }

    pub fn zero() -> Self {
        Rational(Ratio::zero())
    }

    pub fn one() -> Self {
        Rational(Ratio::one())
    }

    pub fn numerator(&self) -> u64 {
        *self.0.numer() as u64
    }

    pub fn denominator(&self) -> u64 {
        *self.0.denom() as u64
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `self - other`, or `None` when the difference would be negative.
    pub fn checked_sub(&self, other: &Rational) -> Option<Rational> {
        if self.0 >= other.0 {
            Some(Rational(self.0 - other.0))
        } else {
            None
        }
    }

    pub fn abs_diff(&self, other: &Rational) -> Rational {
        if self.0 >= other.0 {
            Rational(self.0 - other.0)
        } else {
            Rational(other.0 - self.0)
        }
    }

    /// Largest natural number `k` with `k * divisor <= self`.
    pub fn floor_div(&self, divisor: &Rational) -> Result<u64> {
        if divisor.is_zero() {
            return Err(Error::Precondition("division by zero rational".into()));
        }
        Ok((self.0 / divisor.0).floor().to_integer() as u64)
    }

    /// True when `self / divisor` is a natural number.
    pub fn is_multiple_of(&self, divisor: &Rational) -> bool {
        !divisor.is_zero() && (self.0 / divisor.0).is_integer()
    }

    /// Denominator of `self / divisor` in lowest terms; the grid refinement
    /// factor needed to express `self` on a `divisor`-grid.
    pub fn refinement_against(&self, divisor: &Rational) -> Result<u64> {
        if divisor.is_zero() {
            return Err(Error::Precondition("division by zero rational".into()));
        }
        Ok(*(self.0 / divisor.0).denom() as u64)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |s: &str| Error::Parse(format!("invalid rational token {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: u64 = n.trim().parse().map_err(|_| bad(s))?;
                let d: u64 = d.trim().parse().map_err(|_| bad(s))?;
                Rational::new(n, d)
            }
            None => {
                let n: u64 = s.trim().parse().map_err(|_| bad(s))?;
                Ok(Rational::from_integer(n))
            }
        }
    }
}

/// Least common multiple of a list of naturals, treating the empty list as 1.
pub fn lcm_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(1, num::integer::lcm)
}
