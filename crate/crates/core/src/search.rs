//! Exhaustive search for composition identities over small prime fields.
//!
//! For every monic `f` of a fixed degree and every `g` in a degree window,
//! `f(g)` is divided by `f` and the quotient tested for being an exact
//! `m`-th power. Restricting to monic `f` loses nothing: the equation is
//! linear in `f`.

use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{PrimeField, PrimeFieldElement, Rational, Rationals};
use crate::enumerate::{monic_polynomials, polynomials_of_degree};
use crate::error::{Error, Result};
use crate::identity::CompositionIdentity;
use crate::poly::Polynomial;

pub const DEFAULT_SEARCH_CEILING: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub p: u64,
    pub deg_f: usize,
    pub deg_g_min: usize,
    pub deg_g_max: usize,
    pub m: u32,
    pub require_separable: bool,
    pub require_nonzero_derivative: bool,
    pub iteration_ceiling: u128,
}

impl SearchConfig {
    /// Both filters on, default ceiling.
    pub fn new(p: u64, deg_f: usize, deg_g: RangeInclusive<usize>, m: u32) -> Self {
        SearchConfig {
            p,
            deg_f,
            deg_g_min: *deg_g.start(),
            deg_g_max: *deg_g.end(),
            m,
            require_separable: true,
            require_nonzero_derivative: true,
            iteration_ceiling: DEFAULT_SEARCH_CEILING,
        }
    }

    /// Number of `(f, g)` pairs the search would visit before filtering.
    pub fn estimated_pairs(&self) -> u128 {
        let p = self.p as u128;
        let f_count = p.checked_pow(self.deg_f as u32);
        let g_count = (self.deg_g_min..=self.deg_g_max).try_fold(0u128, |acc, d| {
            let n = p.checked_pow(d as u32)?.checked_mul(p - 1)?;
            acc.checked_add(n)
        });
        match (f_count, g_count) {
            (Some(f), Some(g)) => f.checked_mul(g).unwrap_or(u128::MAX),
            _ => u128::MAX,
        }
    }

    /// Checks the configuration and returns the field.
    pub fn validate(&self) -> Result<PrimeField> {
        let field = PrimeField::new(self.p)?;
        if self.p == 2 {
            return Err(Error::InvalidConfig("p must be an odd prime".into()));
        }
        if self.deg_f < 1 {
            return Err(Error::InvalidConfig("deg f must be at least 1".into()));
        }
        if self.deg_g_min < 2 || self.deg_g_min > self.deg_g_max {
            return Err(Error::InvalidConfig(format!(
                "deg g range {}..{} must be nonempty with minimum at least 2",
                self.deg_g_min, self.deg_g_max
            )));
        }
        if self.m < 2 {
            return Err(Error::InvalidConfig("m must be at least 2".into()));
        }
        if self.m as u64 % self.p == 0 {
            return Err(Error::InvalidConfig(format!(
                "p = {} divides m = {}; the m-th root test is undefined",
                self.p, self.m
            )));
        }
        let estimated = self.estimated_pairs();
        if estimated > self.iteration_ceiling {
            return Err(Error::SearchTooLarge {
                estimated,
                ceiling: self.iteration_ceiling,
            });
        }
        Ok(field)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchCounters {
    /// Monic `f` enumerated, and how many passed the separability filter.
    pub f_enumerated: u64,
    pub f_kept: u64,
    /// `g` enumerated, and how many passed the derivative filter.
    pub g_enumerated: u64,
    pub g_kept: u64,
    pub pairs: u64,
    /// Pairs with `f | f(g)`.
    pub divisible: u64,
    /// Pairs whose quotient is an exact `m`-th power.
    pub power: u64,
    pub solutions: u64,
}

impl SearchCounters {
    fn merge(self, o: SearchCounters) -> SearchCounters {
        SearchCounters {
            f_enumerated: self.f_enumerated + o.f_enumerated,
            f_kept: self.f_kept + o.f_kept,
            g_enumerated: self.g_enumerated + o.g_enumerated,
            g_kept: self.g_kept + o.g_kept,
            pairs: self.pairs + o.pairs,
            divisible: self.divisible + o.divisible,
            power: self.power + o.power,
            solutions: self.solutions + o.solutions,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub config: SearchConfig,
    /// Always true; `f` ranges over monic polynomials only.
    pub monic_f_only: bool,
    pub solutions: Vec<CompositionIdentity<PrimeFieldElement>>,
    pub counters: SearchCounters,
    pub duration: Duration,
}

type Poly = Polynomial<PrimeFieldElement>;

fn scan_f(
    f: &Poly,
    gs: &[Poly],
    m: u32,
) -> Result<(Vec<CompositionIdentity<PrimeFieldElement>>, SearchCounters)> {
    let mut hits = Vec::new();
    let mut c = SearchCounters::default();
    for g in gs {
        c.pairs += 1;
        let Some(quotient) = f.compose(g)?.exact_div(f)? else {
            continue;
        };
        c.divisible += 1;
        let Some(h) = quotient.nth_root(m)? else {
            continue;
        };
        c.power += 1;
        hits.push(CompositionIdentity::new(f.clone(), g.clone(), h, m)?);
    }
    c.solutions = hits.len() as u64;
    Ok((hits, c))
}

/// Runs the exhaustive search described by `config`.
pub fn search_solutions(config: &SearchConfig) -> Result<SearchReport> {
    let start = Instant::now();
    let field = config.validate()?;

    let mut g_enumerated = 0u64;
    let mut gs = Vec::new();
    for d in config.deg_g_min..=config.deg_g_max {
        for g in polynomials_of_degree(field, d, None) {
            g_enumerated += 1;
            if !config.require_nonzero_derivative || !g.derivative().is_zero() {
                gs.push(g);
            }
        }
    }

    let fs: Vec<Poly> = monic_polynomials(field, config.deg_f).collect();
    let f_enumerated = fs.len() as u64;
    let mut kept = Vec::with_capacity(fs.len());
    for f in fs {
        if !config.require_separable || f.is_separable()? {
            kept.push(f);
        }
    }

    let per_f = kept
        .par_iter()
        .map(|f| scan_f(f, &gs, config.m))
        .collect::<Result<Vec<_>>>()?;

    let mut counters = SearchCounters {
        f_enumerated,
        f_kept: kept.len() as u64,
        g_enumerated,
        g_kept: gs.len() as u64,
        ..SearchCounters::default()
    };
    let mut solutions = Vec::new();
    for (hits, c) in per_f {
        counters = counters.merge(c);
        solutions.extend(hits);
    }

    Ok(SearchReport {
        config: config.clone(),
        monic_f_only: true,
        solutions,
        counters,
        duration: start.elapsed(),
    })
}

/// The witness `f = g = x(x-1)^m`, `h = g - 1` over the rationals: the
/// identity holds although `f` has a repeated root.
pub fn verify_counterexample_separability(m: u32) -> Result<CompositionIdentity<Rational>> {
    if m < 2 {
        return Err(Error::InvalidInput("m must be at least 2".into()));
    }
    let x = Polynomial::x(Rationals);
    let x_minus_1 = Polynomial::from_i64s(Rationals, &[-1, 1]);
    let f = &x * &x_minus_1.pow(m as u64);
    let h = &f - &Polynomial::one(Rationals);
    let id = CompositionIdentity::new(f.clone(), f.clone(), h, m)?;
    if f.is_separable()? {
        return Err(Error::VerificationFailed(format!(
            "{f} unexpectedly separable"
        )));
    }
    Ok(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::tests::{fp, qp};

    #[test]
    fn config_validation() {
        assert!(matches!(
            SearchConfig::new(4, 2, 2..=3, 2).validate(),
            Err(Error::NotPrime(4))
        ));
        assert!(matches!(
            SearchConfig::new(2, 2, 2..=3, 3).validate(),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            SearchConfig::new(3, 2, 1..=3, 2).validate(),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            SearchConfig::new(3, 2, 2..=3, 3).validate(),
            Err(Error::InvalidConfig(_))
        ));
        let mut big = SearchConfig::new(11, 4, 2..=6, 2);
        big.iteration_ceiling = 1000;
        assert!(matches!(big.validate(), Err(Error::SearchTooLarge { .. })));
    }

    #[test]
    fn estimate_counts_pairs() {
        // 3^2 monic f, 2*9 + 2*27 g
        assert_eq!(SearchConfig::new(3, 2, 2..=3, 2).estimated_pairs(), 9 * 72);
    }

    #[test]
    fn cubic_f_over_f3_has_no_solutions() {
        let r = search_solutions(&SearchConfig::new(3, 3, 2..=3, 2)).unwrap();
        assert!(r.solutions.is_empty());
        assert_eq!(r.counters.f_enumerated, 27);
        assert_eq!(r.counters.g_enumerated, 72);
    }

    #[test]
    fn frobenius_counterexample_with_derivative_filter_off() {
        let mut cfg = SearchConfig::new(3, 2, 3..=3, 2);
        cfg.require_nonzero_derivative = false;
        let r = search_solutions(&cfg).unwrap();
        let f = fp(3, &[-1, 0, 1]);
        let g = fp(3, &[0, 0, 0, 1]);
        let hit = r
            .solutions
            .iter()
            .find(|id| id.f() == &f && id.g() == &g)
            .expect("x^3 found");
        assert_eq!(hit.h(), &fp(3, &[-1, 0, 1]));
        assert!(!hit.hypotheses().g_derivative_nonzero);
    }

    #[test]
    fn separability_witness() {
        for m in 2..=4 {
            let id = verify_counterexample_separability(m).unwrap();
            assert_eq!(id.f(), id.g());
            assert!(!id.f().is_separable().unwrap());
        }
        let id = verify_counterexample_separability(2).unwrap();
        assert_eq!(id.f(), &qp(&[0, 1, -2, 1]));
        assert_eq!(id.h(), &qp(&[-1, 1, -2, 1]));
    }
}
