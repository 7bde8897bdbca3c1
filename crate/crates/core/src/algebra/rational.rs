use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, FieldDescriptor, FieldElement, RootExtraction};
use crate::error::{Error, Result};

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
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
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` with optional surrounding whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidCoefficient {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad("numerator is not an integer"))?;
        let d: BigInt = d
            .parse()
            .map_err(|_| bad("denominator is not an integer"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational(BigRational::zero())
    }

    fn one(&self) -> Rational {
        Rational(BigRational::one())
    }

    fn from_bigint(&self, n: &BigInt) -> Rational {
        Rational::from_integer(n.clone())
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Rational> {
        Rational::from_bigints(num.clone(), den.clone())
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }
}

impl FieldElement for Rational {
    type Field = Rationals;

    fn field(&self) -> Rationals {
        Rationals
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn plus(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn minus(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn times(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn negated(&self) -> Self {
        Rational(-&self.0)
    }

    fn inverse(&self) -> Result<Self> {
        if self.0.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    fn value_text(&self) -> String {
        self.to_string()
    }

    fn is_negative_literal(&self) -> bool {
        self.0.is_negative()
    }
}

/// Exact m-th root of a nonnegative integer, if it exists.
pub(crate) fn exact_integer_root(n: &BigInt, m: u32) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.nth_root(m);
    if num_traits::pow(r.clone(), m as usize) == *n {
        Some(r)
    } else {
        None
    }
}

impl RootExtraction for Rational {
    fn nth_roots(&self, m: u32) -> Vec<Self> {
        assert!(m >= 1, "root index must be positive");
        if self.0.is_zero() {
            return vec![self.clone()];
        }
        let negative = self.0.is_negative();
        if negative && m % 2 == 0 {
            return Vec::new();
        }
        let (n, d) = (self.0.numer().abs(), self.0.denom().clone());
        let (Some(rn), Some(rd)) = (exact_integer_root(&n, m), exact_integer_root(&d, m)) else {
            return Vec::new();
        };
        let r = Rational(BigRational::new(rn, rd));
        if negative {
            vec![r.negated()]
        } else if m % 2 == 0 {
            let neg = r.negated();
            vec![r, neg]
        } else {
            vec![r]
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $via:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$via(rhs)
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$via(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.negated()
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.negated()
    }
}
