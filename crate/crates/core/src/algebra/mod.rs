//! Exact field arithmetic.
//!
//! Three families of fields are supported: the rationals, prime fields `F_p`
//! and quadratic extensions `K(sqrt(D))` of either. A field is a value
//! implementing [`Field`] (it knows its modulus or discriminant), and every
//! element implementing [`FieldElement`] carries enough context to recover
//! its field, so mixing elements of different fields is detectable at
//! runtime.

mod prime;
mod quadratic;
mod rational;

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};

pub use prime::{is_prime_u64, PrimeField, PrimeFieldElement};
pub use quadratic::{try_descend, QuadExtElement, QuadraticExtension};
pub use rational::{Rational, Rationals};

/// A concrete field: a factory for its elements plus its invariants.
pub trait Field: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    type Elem: FieldElement<Field = Self>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn characteristic(&self) -> u64;
    fn descriptor(&self) -> FieldDescriptor;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    /// Image of `num/den` in this field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        let d = self.from_bigint(den).inverse()?;
        Ok(self.from_bigint(num).times(&d))
    }

    /// Rejects characteristic 2, where the Chebyshev and Pell machinery breaks down.
    fn require_odd_characteristic(&self, reason: &'static str) -> Result<()> {
        if self.characteristic() == 2 {
            Err(Error::char_two(reason))
        } else {
            Ok(())
        }
    }

    /// Rejects exponents divisible by the characteristic.
    fn require_coprime_exponent(&self, m: u64, reason: &'static str) -> Result<()> {
        let p = self.characteristic();
        if p != 0 && m % p == 0 {
            Err(Error::UnsupportedCharacteristic {
                characteristic: p,
                reason,
            })
        } else {
            Ok(())
        }
    }
}

/// An element of a [`Field`].
///
/// The arithmetic methods assume both operands live in the same field and
/// panic otherwise; the free functions [`field_add`] and friends check first.
pub trait FieldElement: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    type Field: Field<Elem = Self>;

    fn field(&self) -> Self::Field;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Result<Self>;

    /// Plain text of the value without a field annotation.
    fn value_text(&self) -> String;

    /// True when the canonical text starts with a minus sign that a printer
    /// may fold into the preceding operator.
    fn is_negative_literal(&self) -> bool {
        false
    }

    fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    fn divide(&self, rhs: &Self) -> Result<Self> {
        Ok(self.times(&rhs.inverse()?))
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.times(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// Fields where m-th roots of elements can be decided and extracted.
pub trait RootExtraction: FieldElement {
    /// Every m-th root of `self` in the field, in canonical order.
    ///
    /// Over the rationals positive roots come first; over `F_p` roots are
    /// sorted by residue.
    fn nth_roots(&self, m: u32) -> Vec<Self>;

    /// A square root in the same field, when one exists.
    fn sqrt_in_field(&self) -> Option<Self> {
        self.nth_roots(2).into_iter().next()
    }
}

/// Serializable description of a field, used for reporting and JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldDescriptor {
    Rationals,
    PrimeField {
        p: u64,
    },
    QuadraticExtension {
        base: Box<FieldDescriptor>,
        discriminant: String,
    },
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField { p } => *p,
            FieldDescriptor::QuadraticExtension { base, .. } => base.characteristic(),
        }
    }
}

impl Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField { p } => write!(f, "F_{p}"),
            FieldDescriptor::QuadraticExtension { base, discriminant } => {
                write!(f, "{base}(sqrt({discriminant}))")
            }
        }
    }
}

fn same_field<E: FieldElement>(x: &E, y: &E) -> Result<()> {
    let (fx, fy) = (x.field(), y.field());
    if fx == fy {
        Ok(())
    } else {
        Err(Error::mismatch(fx, fy))
    }
}

pub fn field_add<E: FieldElement>(x: &E, y: &E) -> Result<E> {
    same_field(x, y)?;
    Ok(x.plus(y))
}

pub fn field_sub<E: FieldElement>(x: &E, y: &E) -> Result<E> {
    same_field(x, y)?;
    Ok(x.minus(y))
}

pub fn field_mul<E: FieldElement>(x: &E, y: &E) -> Result<E> {
    same_field(x, y)?;
    Ok(x.times(y))
}

pub fn field_neg<E: FieldElement>(x: &E) -> E {
    x.negated()
}

pub fn field_inv<E: FieldElement>(x: &E) -> Result<E> {
    x.inverse()
}

pub fn sqrt_in_field<E: RootExtraction>(d: &E) -> Option<E> {
    d.sqrt_in_field()
}
