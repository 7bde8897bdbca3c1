use std::fmt;

use num_bigint::BigInt;

use super::{Field, FieldDescriptor, FieldElement, RootExtraction};
use crate::error::{Error, Result};

/// The ring `K[s]/(s^2 - D)`, written `K(sqrt(D))`.
///
/// When `D` is a nonsquare in `K` this is a field. When `D` happens to be a
/// square the representation is still valid, but elements of zero norm are
/// not invertible; descending to `K` is always explicit via [`try_descend`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticExtension<F: Field> {
    base: F,
    d: F::Elem,
}

impl<F: Field> QuadraticExtension<F> {
    pub fn new(base: F, d: F::Elem) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InvalidInput(
                "quadratic extension needs D != 0".into(),
            ));
        }
        if d.field() != base {
            return Err(Error::mismatch(d.field(), base));
        }
        Ok(QuadraticExtension { base, d })
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn discriminant(&self) -> &F::Elem {
        &self.d
    }

    /// The element `u + v*sqrt(D)`.
    pub fn element(&self, u: F::Elem, v: F::Elem) -> QuadExtElement<F::Elem> {
        QuadExtElement {
            u,
            v,
            d: self.d.clone(),
        }
    }

    /// Base-field element viewed in the extension.
    pub fn embed(&self, u: F::Elem) -> QuadExtElement<F::Elem> {
        self.element(u, self.base.zero())
    }

    /// The adjoined square root `0 + 1*sqrt(D)`.
    pub fn sqrt_d(&self) -> QuadExtElement<F::Elem> {
        self.element(self.base.zero(), self.base.one())
    }
}

/// `u + v*sqrt(D)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExtElement<E: FieldElement> {
    u: E,
    v: E,
    d: E,
}

impl<E: FieldElement> QuadExtElement<E> {
    /// The rational part `u`.
    pub fn base_part(&self) -> &E {
        &self.u
    }

    /// The coefficient `v` of `sqrt(D)`.
    pub fn radical_part(&self) -> &E {
        &self.v
    }

    pub fn discriminant(&self) -> &E {
        &self.d
    }

    pub fn is_in_base(&self) -> bool {
        self.v.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadExtElement {
            u: self.u.clone(),
            v: self.v.negated(),
            d: self.d.clone(),
        }
    }

    /// `u^2 - D v^2`.
    pub fn norm(&self) -> E {
        self.u
            .times(&self.u)
            .minus(&self.d.times(&self.v).times(&self.v))
    }

    #[inline]
    fn check(&self, rhs: &Self) {
        assert!(
            self.d == rhs.d,
            "arithmetic between sqrt({:?}) and sqrt({:?})",
            self.d,
            rhs.d
        );
    }
}

/// Returns the base-field value of `x` when it has one.
///
/// A zero radical part descends directly. Otherwise, if `D` is a square
/// `s^2` in the base field, `sqrt(D)` is substituted by `s` (the canonical
/// root of [`RootExtraction::sqrt_in_field`]).
pub fn try_descend<E: RootExtraction>(x: &QuadExtElement<E>) -> Option<E> {
    if x.v.is_zero() {
        return Some(x.u.clone());
    }
    let s = x.d.sqrt_in_field()?;
    Some(x.u.plus(&x.v.times(&s)))
}

impl<E: FieldElement> fmt::Display for QuadExtElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*sqrt({})",
            self.u.value_text(),
            self.v.value_text(),
            self.d.value_text()
        )
    }
}

impl<E: FieldElement> fmt::Debug for QuadExtElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> Field for QuadraticExtension<F> {
    type Elem = QuadExtElement<F::Elem>;

    fn zero(&self) -> Self::Elem {
        self.embed(self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        self.embed(self.base.one())
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.embed(self.base.from_bigint(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::QuadraticExtension {
            base: Box::new(self.base.descriptor()),
            discriminant: self.d.value_text(),
        }
    }
}

impl<E: FieldElement> FieldElement for QuadExtElement<E> {
    type Field = QuadraticExtension<E::Field>;

    fn field(&self) -> Self::Field {
        QuadraticExtension {
            base: self.d.field(),
            d: self.d.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        QuadExtElement {
            u: self.u.plus(&rhs.u),
            v: self.v.plus(&rhs.v),
            d: self.d.clone(),
        }
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        QuadExtElement {
            u: self.u.minus(&rhs.u),
            v: self.v.minus(&rhs.v),
            d: self.d.clone(),
        }
    }

    fn times(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let u = self
            .u
            .times(&rhs.u)
            .plus(&self.d.times(&self.v).times(&rhs.v));
        let v = self.u.times(&rhs.v).plus(&self.v.times(&rhs.u));
        QuadExtElement {
            u,
            v,
            d: self.d.clone(),
        }
    }

    fn negated(&self) -> Self {
        QuadExtElement {
            u: self.u.negated(),
            v: self.v.negated(),
            d: self.d.clone(),
        }
    }

    /// Fails for zero and, when `D` is a square, for zero divisors.
    fn inverse(&self) -> Result<Self> {
        let n = self.norm().inverse()?;
        Ok(QuadExtElement {
            u: self.u.times(&n),
            v: self.v.negated().times(&n),
            d: self.d.clone(),
        })
    }

    /// Elements of `K` print as in `K`; others as `(u + v*sqrt(D))` with
    /// zero `u` dropped and the sign of `v` folded.
    fn value_text(&self) -> String {
        if self.v.is_zero() {
            return self.u.value_text();
        }
        let d = self.d.value_text();
        let (op, v) = if self.v.is_negative_literal() {
            ("-", self.v.negated())
        } else {
            ("+", self.v.clone())
        };
        let radical = if v.is_one() {
            format!("sqrt({d})")
        } else {
            format!("{}*sqrt({d})", v.value_text())
        };
        match (self.u.is_zero(), op) {
            (true, "+") => format!("({radical})"),
            (true, _) => format!("(-{radical})"),
            (false, op) => format!("({} {op} {radical})", self.u.value_text()),
        }
    }

    fn is_negative_literal(&self) -> bool {
        self.v.is_zero() && self.u.is_negative_literal()
    }
}
