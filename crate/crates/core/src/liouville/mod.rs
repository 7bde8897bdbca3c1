//! The Liouville function `λ(n) = (-1)^Ω(n)` and its behaviour along
//! orbits `k_{j+1} = g(k_j)` of a composition identity.
//!
//! If `f(g(x)) = f(x) h(x)^m` with `m` even, then
//! `λ(f(g(k))) = λ(f(k)) λ(h(k))^m = λ(f(k))`, so the sign is constant on
//! every orbit that avoids the roots of `f`.

mod factor;

pub use factor::{big_omega, big_omega_trial_division, is_probable_prime};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::identity::CompositionIdentity;
use crate::poly::Polynomial;
use crate::sign::Sign;

/// A value of `λ`.
pub type LambdaValue = Sign;

pub const DEFAULT_DIGIT_LIMIT: usize = 60;

/// `λ(|n|)` for `n != 0`.
pub fn lambda_int(n: &BigInt) -> Result<LambdaValue> {
    if n.is_zero() {
        return Err(Error::InvalidInput("λ(0) is undefined".into()));
    }
    Ok(Sign::from_parity(big_omega(&n.abs())? % 2 == 1))
}

/// `λ(|p|) λ(q)` for `r = p/q` in lowest terms, `r != 0`.
pub fn lambda_rational(r: &Rational) -> Result<LambdaValue> {
    if r.signum() == 0 {
        return Err(Error::InvalidInput("λ(0) is undefined".into()));
    }
    Ok(lambda_int(r.numer())? * lambda_int(r.denom())?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitOptions {
    /// Largest number of decimal digits allowed for `k_j` or `f(k_j)`.
    pub digit_limit: usize,
    /// Stop quietly at the limit instead of failing.
    pub truncate_at_limit: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            digit_limit: DEFAULT_DIGIT_LIMIT,
            truncate_at_limit: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitEntry {
    pub step: usize,
    #[serde(serialize_with = "as_string")]
    pub k: BigInt,
    #[serde(serialize_with = "as_string")]
    pub value: BigInt,
    pub lambda: LambdaValue,
}

fn as_string<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaOrbit {
    pub f: Polynomial<Rational>,
    pub g: Polynomial<Rational>,
    pub seed: BigInt,
    pub entries: Vec<OrbitEntry>,
    /// True when the digit limit cut the orbit short.
    pub truncated: bool,
}

impl LambdaOrbit {
    /// The common sign, or `None` for an empty orbit.
    pub fn sign(&self) -> Option<LambdaValue> {
        self.entries.first().map(|e| e.lambda)
    }

    pub fn is_constant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].lambda == w[1].lambda)
    }
}

fn integer_coeffs(p: &Polynomial<Rational>, name: &str) -> Result<Vec<BigInt>> {
    p.coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.numer().clone())
            } else {
                Err(Error::InvalidInput(format!(
                    "{name} = {p} has a non-integer coefficient {c}"
                )))
            }
        })
        .collect()
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn decimal_digits(n: &BigInt) -> usize {
    n.magnitude().to_str_radix(10).len()
}

/// Follows the orbit of `seed` under `g` for `steps` steps with the default
/// 60-digit limit, failing if the limit is exceeded.
pub fn lambda_orbit(
    identity: &CompositionIdentity<Rational>,
    seed: &BigInt,
    steps: usize,
) -> Result<LambdaOrbit> {
    lambda_orbit_with(identity, seed, steps, &OrbitOptions::default())
}

pub fn lambda_orbit_with(
    identity: &CompositionIdentity<Rational>,
    seed: &BigInt,
    steps: usize,
    options: &OrbitOptions,
) -> Result<LambdaOrbit> {
    if identity.m() % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "λ propagates along orbits only for even m (got m = {})",
            identity.m()
        )));
    }
    let f = integer_coeffs(identity.f(), "f")?;
    let g = integer_coeffs(identity.g(), "g")?;

    let mut points = Vec::with_capacity(steps + 1);
    let mut truncated = false;
    let mut k = seed.clone();
    for step in 0..=steps {
        let value = eval_int(&f, &k);
        let limit = options.digit_limit;
        if decimal_digits(&k) > limit || decimal_digits(&value) > limit {
            if options.truncate_at_limit {
                truncated = true;
                break;
            }
            return Err(Error::OrbitOverflowLimit { step, limit });
        }
        if value.is_zero() {
            return Err(Error::OrbitHitsRoot(step));
        }
        let next = eval_int(&g, &k);
        points.push((step, k, value));
        k = next;
    }

    let entries = points
        .into_par_iter()
        .map(|(step, k, value)| {
            let lambda = lambda_int(&value)?;
            Ok(OrbitEntry {
                step,
                k,
                value,
                lambda,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let orbit = LambdaOrbit {
        f: identity.f().clone(),
        g: identity.g().clone(),
        seed: seed.clone(),
        entries,
        truncated,
    };
    if !orbit.is_constant() {
        return Err(Error::VerificationFailed(format!(
            "λ(f(k_j)) changes sign along the orbit of {seed}"
        )));
    }
    Ok(orbit)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub from: i64,
    pub to: i64,
    /// Pairs `(n, n+1)` with `λ(f(n)) != λ(f(n+1))`, both values nonzero.
    pub changes: Vec<(i64, i64)>,
    /// Points with `f(n) = 0`, skipped.
    pub zeros: Vec<i64>,
}

/// Sign changes of `λ(f(n))` for `from <= n <= to`.
pub fn sign_change_scan(f: &Polynomial<Rational>, from: i64, to: i64) -> Result<ScanReport> {
    let signs: Vec<(i64, Option<LambdaValue>)> = (from..=to)
        .into_par_iter()
        .map(|n| {
            let v = f.eval(&Rational::from(n));
            if v.signum() == 0 {
                Ok((n, None))
            } else {
                Ok((n, Some(lambda_rational(&v)?)))
            }
        })
        .collect::<Result<_>>()?;
    let zeros = signs
        .iter()
        .filter(|(_, s)| s.is_none())
        .map(|(n, _)| *n)
        .collect();
    let changes = signs
        .windows(2)
        .filter_map(|w| match (w[0].1, w[1].1) {
            (Some(a), Some(b)) if a != b => Some((w[0].0, w[1].0)),
            _ => None,
        })
        .collect();
    Ok(ScanReport {
        from,
        to,
        changes,
        zeros,
    })
}
