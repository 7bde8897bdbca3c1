//! Lexicographic enumeration of polynomials over a prime field.

use crate::algebra::{Field, PrimeField, PrimeFieldElement};
use crate::poly::Polynomial;

/// All polynomials of exact degree `degree` over `field`.
///
/// With `lead = Some(c)` only those with leading coefficient `c` are
/// produced. Order is lexicographic in `(c_d, c_{d-1}, ..., c_0)` by residue.
pub fn polynomials_of_degree(
    field: PrimeField,
    degree: usize,
    lead: Option<PrimeFieldElement>,
) -> impl Iterator<Item = Polynomial<PrimeFieldElement>> {
    let p = field.modulus();
    let leads: Vec<u64> = match lead {
        Some(c) => {
            assert!(c.residue() != 0, "leading coefficient must be nonzero");
            vec![c.residue()]
        }
        None => (1..p).collect(),
    };
    leads.into_iter().flat_map(move |c| {
        LowerTuples::new(p, degree).map(move |low| {
            let mut coeffs: Vec<_> = low.into_iter().map(|r| field.element(r)).collect();
            coeffs.push(field.element(c));
            Polynomial::new(field, coeffs)
        })
    })
}

/// Monic polynomials of exact degree `degree`.
pub fn monic_polynomials(
    field: PrimeField,
    degree: usize,
) -> impl Iterator<Item = Polynomial<PrimeFieldElement>> {
    polynomials_of_degree(field, degree, Some(field.one()))
}

/// Base-`p` counter over `len` digits with `c_0` least significant.
struct LowerTuples {
    p: u64,
    digits: Option<Vec<u64>>,
}

impl LowerTuples {
    fn new(p: u64, len: usize) -> Self {
        LowerTuples {
            p,
            digits: Some(vec![0; len]),
        }
    }
}

impl Iterator for LowerTuples {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.digits.clone()?;
        let digits = self.digits.as_mut().expect("checked above");
        let mut i = 0;
        loop {
            if i == digits.len() {
                self.digits = None;
                break;
            }
            digits[i] += 1;
            if digits[i] < self.p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        Some(current)
    }
}
