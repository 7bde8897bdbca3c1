//! Counting prime factors with multiplicity.
//!
//! Small primes are removed by trial division. What is left has only large
//! prime factors and is split by a probable-prime test, perfect-power
//! detection and Pollard-Brent rho, in that order.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::is_prime_u64;
use crate::error::{Error, Result};

const TRIAL_BOUND: u32 = 1 << 16;
const RHO_BUDGET: u64 = 1 << 22;
const RHO_ATTEMPTS: u64 = 6;
const MR_BASES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut composite = vec![false; n + 1];
        let mut out = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                out.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

/// `Ω(n)` for `n >= 1`.
pub fn big_omega(n: &BigInt) -> Result<u32> {
    if n.sign() != Sign::Plus {
        return Err(Error::InvalidInput(format!(
            "Ω is defined for n >= 1, got {n}"
        )));
    }
    let mut rest = n.magnitude().clone();
    let mut count = 0u32;
    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            count += 1;
        }
    }
    if rest.is_one() {
        return Ok(count);
    }
    let bound = BigUint::from(TRIAL_BOUND);
    if rest < &bound * &bound {
        return Ok(count + 1);
    }
    Ok(count + omega_without_small_factors(&rest)?)
}

/// Ω of a number with no prime factor below [`TRIAL_BOUND`].
fn omega_without_small_factors(n: &BigUint) -> Result<u32> {
    if n.is_one() {
        return Ok(0);
    }
    if is_probable_prime(n) {
        return Ok(1);
    }
    // factors exceed 2^16, so the exponent is at most bits / 16
    for k in 2..=(n.bits() / 16) as u32 {
        let r = n.nth_root(k);
        if r.pow(k) == *n {
            return Ok(k * omega_without_small_factors(&r)?);
        }
    }
    for c in 1..=RHO_ATTEMPTS {
        if let Some(d) = pollard_brent(n, c, RHO_BUDGET) {
            let other = n / &d;
            return Ok(omega_without_small_factors(&d)? + omega_without_small_factors(&other)?);
        }
    }
    Err(Error::FactorizationBudget(n.to_string()))
}

/// Miller-Rabin. Deterministic below 2^64, probabilistic with sixteen
/// fixed bases above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;
    'bases: for a in MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn abs_diff(a: &BigUint, b: &BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// Brent's variant of Pollard rho with `y -> y^2 + c`. Returns a proper
/// divisor, or `None` when the budget runs out or the cycle degenerates.
fn pollard_brent(n: &BigUint, c: u64, budget: u64) -> Option<BigUint> {
    const BATCH: u64 = 128;
    let c = BigUint::from(c);
    let step = |v: &BigUint| (v * v + &c) % n;
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = one.clone();
    let mut g = one.clone();
    let mut r = 1u64;
    let mut spent = 0u64;
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = step(&y);
                q = q * abs_diff(&x, &y) % n;
            }
            g = q.gcd(n);
            k += BATCH;
        }
        spent += 2 * r;
        if spent > budget {
            return None;
        }
        r *= 2;
    }
    if g == *n {
        loop {
            ys = step(&ys);
            g = abs_diff(&x, &ys).gcd(n);
            if g != one {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

/// Ω by trial division alone. Slow; kept as an independent reference.
pub fn big_omega_trial_division(n: u64) -> u32 {
    assert!(n >= 1, "n must be positive");
    let mut n = n;
    let mut count = 0;
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        while n % d == 0 {
            n /= d;
            count += 1;
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega(n: u64) -> u32 {
        big_omega(&BigInt::from(n)).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(omega(1), 0);
        assert_eq!(omega(12), 3);
        assert_eq!(omega(50), 3);
        assert!(big_omega(&BigInt::from(0)).is_err());
        assert!(big_omega(&BigInt::from(-4)).is_err());
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 1..5000u64 {
            assert_eq!(omega(n), big_omega_trial_division(n), "n = {n}");
        }
        for n in [
            4294967291u64 * 3,
            65537 * 65537,
            65539 * 65543 * 3,
            999999999989,
        ] {
            assert_eq!(omega(n), big_omega_trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn large_semiprimes_and_powers() {
        let p: BigUint = "1000000000000000000117".parse().unwrap();
        let q: BigUint = "68695320375992321441".parse().unwrap();
        assert!(is_probable_prime(&p));
        let n = BigInt::from(&q * &q * 12u32);
        assert_eq!(big_omega(&n).unwrap(), 5);
        let r: BigUint = "4294967311".parse().unwrap();
        let n = BigInt::from(&p * &r);
        assert_eq!(big_omega(&n).unwrap(), 2);
    }

    #[test]
    fn probable_prime_rejects_carmichael() {
        let carmichael: BigUint = "3825123056546413051".parse().unwrap();
        assert!(!is_probable_prime(&carmichael));
        let m127 = (BigUint::one() << 127) - BigUint::one();
        assert!(is_probable_prime(&m127));
        let m128_c = (BigUint::one() << 128) + BigUint::one();
        assert!(!is_probable_prime(&m128_c));
    }
}
