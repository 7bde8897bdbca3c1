//! Chebyshev polynomials of the first and second kind over fields of odd or
//! zero characteristic, generated by their three-term recurrences.

use serde::Serialize;

use crate::algebra::{Field, FieldElement};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// `T_n` and `U_n` for one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebyshevPair<E: FieldElement> {
    pub n: usize,
    pub first_kind: Polynomial<E>,
    pub second_kind: Polynomial<E>,
}

/// Every pair `(T_k, U_k)` for `0 <= k <= n`, computed in one ascending pass.
///
/// Both kinds satisfy `P_{k+2} = 2x P_{k+1} - P_k`; the seeds are
/// `T_0 = 1, T_1 = x` and `U_0 = 1, U_1 = 2x`.
pub fn chebyshev_ladder<F: Field>(n: usize, field: &F) -> Result<Vec<ChebyshevPair<F::Elem>>> {
    field.require_odd_characteristic("Chebyshev recurrences need char != 2")?;
    let one = Polynomial::one(field.clone());
    let two_x = Polynomial::monomial(field.from_i64(2), 1);
    let mut ladder = Vec::with_capacity(n + 1);
    ladder.push(ChebyshevPair {
        n: 0,
        first_kind: one.clone(),
        second_kind: one,
    });
    if n >= 1 {
        ladder.push(ChebyshevPair {
            n: 1,
            first_kind: Polynomial::x(field.clone()),
            second_kind: two_x.clone(),
        });
    }
    for k in 2..=n {
        let (prev, last) = (&ladder[k - 2], &ladder[k - 1]);
        let first_kind = &two_x * &last.first_kind - &prev.first_kind;
        let second_kind = &two_x * &last.second_kind - &prev.second_kind;
        ladder.push(ChebyshevPair {
            n: k,
            first_kind,
            second_kind,
        });
    }
    Ok(ladder)
}

/// `T_n` over `field`.
pub fn chebyshev_t<F: Field>(n: usize, field: &F) -> Result<Polynomial<F::Elem>> {
    Ok(chebyshev_ladder(n, field)?
        .pop()
        .expect("ladder is nonempty")
        .first_kind)
}

/// `U_n` over `field`, for `n >= -1`, with `U_{-1} = 0`.
pub fn chebyshev_u<F: Field>(n: i64, field: &F) -> Result<Polynomial<F::Elem>> {
    field.require_odd_characteristic("Chebyshev recurrences need char != 2")?;
    match n {
        -1 => Ok(Polynomial::zero(field.clone())),
        n if n < -1 => Err(Error::InvalidInput(format!(
            "U_n is defined for n >= -1, got {n}"
        ))),
        n => Ok(chebyshev_ladder(n as usize, field)?
            .pop()
            .expect("ladder is nonempty")
            .second_kind),
    }
}

/// Which powers of `x` occur in a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    EvenPowersOnly,
    OddPowersOnly,
    Mixed,
}

/// Classifies `p` by the parity of its nonzero coefficient indices. The
/// zero polynomial counts as even.
pub fn parity_profile<E: FieldElement>(p: &Polynomial<E>) -> Parity {
    let mut even = false;
    let mut odd = false;
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            if i % 2 == 0 {
                even = true;
            } else {
                odd = true;
            }
        }
    }
    match (even, odd) {
        (_, false) => Parity::EvenPowersOnly,
        (false, true) => Parity::OddPowersOnly,
        (true, true) => Parity::Mixed,
    }
}
