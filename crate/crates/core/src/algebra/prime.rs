use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Field, FieldDescriptor, FieldElement, RootExtraction};
use crate::error::{Error, Result};

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn element(&self, residue: u64) -> PrimeFieldElement {
        PrimeFieldElement {
            residue: residue % self.p,
            modulus: self.p,
        }
    }

    /// All elements in ascending residue order.
    pub fn elements(&self) -> impl Iterator<Item = PrimeFieldElement> + '_ {
        (0..self.p).map(move |r| self.element(r))
    }
}

/// A residue class modulo a prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    fn check(&self, rhs: &Self) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "arithmetic between F_{} and F_{}",
            self.modulus, rhs.modulus
        );
    }

    #[inline]
    fn with(&self, residue: u64) -> Self {
        PrimeFieldElement {
            residue,
            modulus: self.modulus,
        }
    }

    fn is_square(&self) -> bool {
        self.residue == 0
            || self.modulus == 2
            || pow_mod(self.residue, (self.modulus - 1) / 2, self.modulus) == 1
    }

    /// Tonelli-Shanks; returns either root, callers normalize.
    fn tonelli_shanks(&self) -> Option<u64> {
        let (a, p) = (self.residue, self.modulus);
        if a == 0 || p == 2 {
            return Some(a);
        }
        if !self.is_square() {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p)
            .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
            .expect("odd prime has a non-residue");
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(a, q, p);
        let mut r = pow_mod(a, (q + 1) / 2, p);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, p);
                i += 1;
            }
            let b = pow_mod(c, 1 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        Some(r)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PrimeFieldElement {
    type Err = Error;

    /// Parses `r mod p`; `r` may be any integer and is reduced.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidCoefficient {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let (r, p) = s
            .split_once("mod")
            .ok_or_else(|| bad("expected `r mod p`"))?;
        let r: BigInt = r
            .trim()
            .parse()
            .map_err(|_| bad("residue is not an integer"))?;
        let p: u64 = p
            .trim()
            .parse()
            .map_err(|_| bad("modulus is not an integer"))?;
        Ok(PrimeField::new(p)?.from_bigint(&r))
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElement;

    fn zero(&self) -> PrimeFieldElement {
        self.element(0)
    }

    fn one(&self) -> PrimeFieldElement {
        self.element(1)
    }

    fn from_i64(&self, n: i64) -> PrimeFieldElement {
        self.element((n as i128).rem_euclid(self.p as i128) as u64)
    }

    fn from_bigint(&self, n: &BigInt) -> PrimeFieldElement {
        let r = n.mod_floor(&BigInt::from(self.p));
        self.element(r.to_u64().expect("residue fits in u64"))
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::PrimeField { p: self.p }
    }
}

impl FieldElement for PrimeFieldElement {
    type Field = PrimeField;

    fn field(&self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    #[inline]
    fn is_one(&self) -> bool {
        self.residue == 1
    }

    #[inline]
    fn plus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let s = self.residue as u128 + rhs.residue as u128;
        self.with((s % self.modulus as u128) as u64)
    }

    #[inline]
    fn minus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.residue >= rhs.residue {
            self.with(self.residue - rhs.residue)
        } else {
            self.with(self.modulus - (rhs.residue - self.residue))
        }
    }

    #[inline]
    fn times(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.with(mul_mod(self.residue, rhs.residue, self.modulus))
    }

    #[inline]
    fn negated(&self) -> Self {
        if self.residue == 0 {
            *self
        } else {
            self.with(self.modulus - self.residue)
        }
    }

    fn inverse(&self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.with(pow_mod(self.residue, self.modulus - 2, self.modulus)))
    }

    fn value_text(&self) -> String {
        self.residue.to_string()
    }

    fn pow(&self, exp: u64) -> Self {
        self.with(pow_mod(self.residue, exp, self.modulus))
    }
}

impl RootExtraction for PrimeFieldElement {
    fn nth_roots(&self, m: u32) -> Vec<Self> {
        assert!(m >= 1, "root index must be positive");
        let p = self.modulus;
        if self.residue == 0 {
            return vec![*self];
        }
        if m == 2 {
            return match self.tonelli_shanks() {
                Some(r) => {
                    let (lo, hi) = (r.min(p - r), r.max(p - r));
                    if lo == hi {
                        vec![self.with(lo)]
                    } else {
                        vec![self.with(lo), self.with(hi)]
                    }
                }
                None => Vec::new(),
            };
        }
        let g = (m as u64).gcd(&(p - 1));
        if g == 1 {
            // x -> x^m is a bijection; invert the exponent modulo p - 1.
            let inv = mod_inverse(m as u64 % (p - 1), p - 1).expect("coprime exponent");
            return vec![self.with(pow_mod(self.residue, inv, p))];
        }
        if pow_mod(self.residue, (p - 1) / g, p) != 1 {
            return Vec::new();
        }
        // TODO: Adleman-Manders-Miller would avoid this O(p) scan for large p.
        (1..p)
            .filter(|&x| pow_mod(x, m as u64, p) == self.residue)
            .map(|x| self.with(x))
            .collect()
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}
