use super::{Degree, Polynomial};
use crate::algebra::{Field, FieldElement};
use crate::error::{Error, Result};

impl<E: FieldElement> Polynomial<E> {
    /// Euclidean division: `self = divisor * quotient + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_field(divisor)?;
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead.inverse()?;
        let dn = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return Ok((Self::zero(self.field.clone()), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dn - 1].times(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].minus(&c.times(d));
            }
            quot[k] = c;
        }
        rem.truncate(dn - 1);
        Ok((
            Self::from_raw(self.field.clone(), quot),
            Self::from_raw(self.field.clone(), rem),
        ))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic greatest common divisor, normalizing to monic at every step.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidInput("gcd(0, 0) is undefined".into()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        if !a.is_zero() {
            a = a.monic()?;
        }
        if !b.is_zero() {
            b = b.monic()?;
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = if r.is_zero() { r } else { r.monic()? };
        }
        Ok(a)
    }

    /// True iff `gcd(p, p')` is constant. Constant inputs are rejected.
    pub fn is_separable(&self) -> Result<bool> {
        if self.is_constant() {
            return Err(Error::InvalidInput(
                "separability is only defined for nonconstant polynomials".into(),
            ));
        }
        Ok(self.gcd(&self.derivative())?.degree() == Degree::Finite(0))
    }
}

#[cfg(test)]
mod tests {
    use crate::error::Error;
    use crate::poly::tests::{fp, qp};

    #[test]
    fn divrem_examples() {
        assert_eq!(
            qp(&[-1, 0, 1]).div_rem(&qp(&[-1, 1])).unwrap(),
            (qp(&[1, 1]), qp(&[]))
        );
        assert_eq!(
            qp(&[0, 0, 1]).div_rem(&qp(&[1, 1])).unwrap(),
            (qp(&[-1, 1]), qp(&[1]))
        );
        let big = qp(&[1, 0, 9, 0, 24, 0, 16]);
        let (q, r) = big.div_rem(&qp(&[1, 0, 1])).unwrap();
        assert_eq!((q.clone(), r), (qp(&[1, 0, 8, 0, 16]), qp(&[])));
        assert_eq!(q * qp(&[1, 0, 1]), big);
        assert_eq!(qp(&[1, 2]).div_rem(&qp(&[])), Err(Error::DivisionByZero));
        assert_eq!(
            qp(&[1, 2]).div_rem(&qp(&[0, 0, 1])).unwrap(),
            (qp(&[]), qp(&[1, 2]))
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(qp(&[-1, 0, 1]).gcd(&qp(&[-1, 1])).unwrap(), qp(&[-1, 1]));
        assert_eq!(qp(&[1, 0, 1]).gcd(&qp(&[0, 2])).unwrap(), qp(&[1]));
        // x(x-1)^2 = x^3 - 2x^2 + x, derivative (x-1)(3x-1)
        let f = qp(&[0, 1, -2, 1]);
        assert_eq!(f.derivative(), qp(&[1, -4, 3]));
        assert_eq!(f.gcd(&f.derivative()).unwrap(), qp(&[-1, 1]));
        assert!(matches!(qp(&[]).gcd(&qp(&[])), Err(Error::InvalidInput(_))));
        assert_eq!(qp(&[]).gcd(&qp(&[4, 2])).unwrap(), qp(&[2, 1]));
    }

    #[test]
    fn separability_examples() {
        assert!(qp(&[1, 0, 1]).is_separable().unwrap());
        assert!(!qp(&[0, 1, -2, 1]).is_separable().unwrap());
        assert!(!fp(2, &[-1, 0, 1]).is_separable().unwrap());
        assert!(!fp(3, &[0, 0, 0, 1]).is_separable().unwrap());
        assert!(matches!(
            qp(&[3]).is_separable(),
            Err(Error::InvalidInput(_))
        ));
    }
}
