//! Dense univariate polynomials over any [`Field`].

mod euclid;
mod root;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{Field, FieldDescriptor, FieldElement};
use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial stored as its coefficient vector, lowest degree first.
/// The last stored coefficient is never zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<E: FieldElement> {
    coeffs: Vec<E>,
    field: E::Field,
}

impl<E: FieldElement> Polynomial<E> {
    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    ///
    /// Panics if a coefficient belongs to a different field.
    pub fn new(field: E::Field, coeffs: Vec<E>) -> Self {
        for c in &coeffs {
            assert!(c.field() == field, "coefficient {c:?} is not in {field:?}");
        }
        Self::from_raw(field, coeffs)
    }

    pub(crate) fn from_raw(field: E::Field, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs, field }
    }

    pub fn try_new(field: E::Field, coeffs: Vec<E>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::mismatch(c.field(), field));
        }
        Ok(Self::from_raw(field, coeffs))
    }

    pub fn from_i64s(field: E::Field, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Self::from_raw(field, cs)
    }

    pub fn zero(field: E::Field) -> Self {
        Polynomial {
            coeffs: Vec::new(),
            field,
        }
    }

    pub fn one(field: E::Field) -> Self {
        let one = field.one();
        Self::constant(field, one)
    }

    pub fn constant(field: E::Field, c: E) -> Self {
        Self::from_raw(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: E::Field) -> Self {
        Self::monomial(field.one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: E, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::from_raw(field, coeffs)
    }

    pub fn field(&self) -> &E::Field {
        &self.field
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.field.descriptor()
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> E {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::mismatch(&self.field, &other.field))
        }
    }

    fn assert_field(&self, other: &Self) {
        assert!(
            self.field == other.field,
            "polynomials over {:?} and {:?}",
            self.field,
            other.field
        );
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_raw(self.field.clone(), coeffs)
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.minus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.negated(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_raw(self.field.clone(), coeffs)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Self::from_raw(self.field.clone(), coeffs)
    }

    pub fn scale(&self, c: &E) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.times(c)).collect();
        Self::from_raw(self.field.clone(), coeffs)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `self(inner(x))`, by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_field(inner)?;
        let mut acc = Self::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(inner);
            acc = acc.add_unchecked(&Self::constant(self.field.clone(), c.clone()));
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| acc.times(x).plus(c))
    }

    /// Formal derivative; in characteristic p the terms `x^(kp)` vanish.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.times(&self.field.from_i64(i as i64)))
            .collect();
        Self::from_raw(self.field.clone(), coeffs)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?;
        if lead.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scale(&lead.inverse()?))
    }

    /// Applies `f` to every coefficient, producing a polynomial over `field`.
    pub fn map_coeffs<T: FieldElement>(
        &self,
        field: T::Field,
        f: impl Fn(&E) -> T,
    ) -> Polynomial<T> {
        let coeffs = self.coeffs.iter().map(f).collect();
        Polynomial::from_raw(field, coeffs)
    }
}

impl<E: FieldElement> fmt::Display for Polynomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_poly(self))
    }
}

impl<E: FieldElement> fmt::Debug for Polynomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.descriptor())
    }
}

// Operators panic on field mismatch; use the `try_*` methods to get an error.
macro_rules! poly_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<E: FieldElement> $tr<&Polynomial<E>> for &Polynomial<E> {
            type Output = Polynomial<E>;
            fn $method(self, rhs: &Polynomial<E>) -> Polynomial<E> {
                self.assert_field(rhs);
                self.$inner(rhs)
            }
        }
        impl<E: FieldElement> $tr for Polynomial<E> {
            type Output = Polynomial<E>;
            fn $method(self, rhs: Polynomial<E>) -> Polynomial<E> {
                (&self).$method(&rhs)
            }
        }
        impl<E: FieldElement> $tr<&Polynomial<E>> for Polynomial<E> {
            type Output = Polynomial<E>;
            fn $method(self, rhs: &Polynomial<E>) -> Polynomial<E> {
                (&self).$method(rhs)
            }
        }
    };
}

poly_binop!(Add, add, add_unchecked);
poly_binop!(Sub, sub, sub_unchecked);
poly_binop!(Mul, mul, mul_unchecked);

impl<E: FieldElement> Neg for &Polynomial<E> {
    type Output = Polynomial<E>;
    fn neg(self) -> Polynomial<E> {
        let coeffs = self.coeffs.iter().map(|c| c.negated()).collect();
        Polynomial::from_raw(self.field.clone(), coeffs)
    }
}

impl<E: FieldElement> Neg for Polynomial<E> {
    type Output = Polynomial<E>;
    fn neg(self) -> Polynomial<E> {
        -&self
    }
}
