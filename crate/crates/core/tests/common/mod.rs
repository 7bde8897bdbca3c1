#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use polycomp::algebra::{Field, PrimeField, PrimeFieldElement, Rational, Rationals};
use polycomp::poly::Polynomial;
use polycomp::text::parse_poly;

pub fn q(s: &str) -> Polynomial<Rational> {
    parse_poly(s, &Rationals).unwrap()
}

pub fn fp(p: u64, s: &str) -> Polynomial<PrimeFieldElement> {
    parse_poly(s, &PrimeField::new(p).unwrap()).unwrap()
}

pub fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// `(f, g, h)` for each row of the table of quadratic examples.
pub const TABLE: [(&str, &str, &str); 6] = [
    ("x^2+1", "4x^3+3x", "4x^2+1"),
    ("x^2-1", "4x^3-3x", "4x^2-1"),
    ("x^2+2", "2x^3+3x", "2x^2+1"),
    ("x^2-2", "2x^3-3x", "2x^2-1"),
    ("x^2+4", "x^3+3x", "x^2+1"),
    ("x^2-4", "x^3-3x", "x^2-1"),
];

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_into(acc: &mut Vec<BigInt>, t: &[BigInt]) {
    if acc.len() < t.len() {
        acc.resize(t.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(t) {
        *a += b;
    }
}

fn power(base: &[BigInt], k: usize) -> Vec<BigInt> {
    (0..k).fold(vec![BigInt::from(1)], |acc, _| mul(&acc, base))
}

fn monomial(k: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); k + 1];
    v[k] = BigInt::from(1);
    v
}

/// Integer coefficients of `T_n` and `U_{n-1}` from the binomial expansion
/// of `(x + sqrt(x^2 - 1))^n`, independent of any recurrence.
pub fn chebyshev_closed(n: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let x2m1 = [BigInt::from(-1), BigInt::zero(), BigInt::from(1)];
    let mut t = Vec::new();
    let mut u = Vec::new();
    for j in 0..=n {
        let c = binomial(BigInt::from(n), BigInt::from(j));
        let k = j / 2;
        let term = mul(&power(&x2m1, k), &monomial(n - j));
        let term: Vec<BigInt> = term.into_iter().map(|v| v * &c).collect();
        if j % 2 == 0 {
            add_into(&mut t, &term);
        } else {
            add_into(&mut u, &term);
        }
    }
    (t, u)
}

pub fn to_poly<F: Field>(coeffs: &[BigInt], field: &F) -> Polynomial<F::Elem> {
    Polynomial::new(
        field.clone(),
        coeffs.iter().map(|c| field.from_bigint(c)).collect(),
    )
}
