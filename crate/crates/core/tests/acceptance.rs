//! Acceptance run. Prints one PASS/FAIL line per criterion with its elapsed
//! time against the budget, and exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{chebyshev_closed, q, r, to_poly, TABLE};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use polycomp::algebra::{Field, FieldElement, PrimeField, QuadraticExtension, Rational, Rationals};
use polycomp::chebyshev::chebyshev_ladder;
use polycomp::identity::{check_identity, generate_lyg, generate_quadratic, CompositionIdentity};
use polycomp::liouville::{lambda_int, lambda_orbit_with, OrbitOptions};
use polycomp::pell::{pell_check, pell_enumerate_bruteforce, DEFAULT_PELL_CEILING};
use polycomp::poly::Polynomial;
use polycomp::search::{search_solutions, verify_counterexample_separability, SearchConfig};
use polycomp::sign::Sign;
use polycomp::text::{parse_poly, print_poly};
use polycomp::Error;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn disc(a: &Rational, b: &Rational, c: &Rational) -> Rational {
    b.times(b).minus(&r(4).times(a).times(c))
}

fn table_rows() -> Outcome {
    for (f, g, h) in TABLE {
        let (fp, gp, hp) = (q(f), q(g), q(h));
        ensure(
            check_identity(&fp, &gp, &hp, 2).map_err(|e| e.to_string())?,
            format!("{f}: identity"),
        )?;
        let (a, b, c) = (fp.coeff(2), fp.coeff(1), fp.coeff(0));
        let id = generate_lyg(&a, &b, &c).map_err(|e| e.to_string())?;
        let matches = if disc(&a, &b, &c).signum() > 0 {
            (id.g(), id.h()) == (&gp, &hp)
        } else {
            (id.g(), id.h()) == (&gp, &hp) || (id.g(), id.h()) == (&-gp.clone(), &-hp.clone())
        };
        ensure(matches, format!("{f}: got g = {}, h = {}", id.g(), id.h()))?;
    }
    Ok("6 rows".into())
}

fn cubic_cross_check() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let coeff = |rng: &mut StdRng| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    let mut done = 0;
    while done < 100 {
        let (a, b, c) = (coeff(&mut rng), coeff(&mut rng), coeff(&mut rng));
        if a.is_zero() || disc(&a, &b, &c).is_zero() {
            continue;
        }
        let lyg = generate_lyg(&a, &b, &c).map_err(|e| e.to_string())?;
        let quad =
            generate_quadratic(&a, &b, &c, 3, Sign::Plus, Sign::Plus).map_err(|e| e.to_string())?;
        ensure(quad.base() == Some(&lyg), format!("({a}, {b}, {c})"))?;
        done += 1;
    }
    Ok("100 triples".into())
}

fn pell_ladder<F: Field>(field: &F, label: &str) -> Result<(), String> {
    let ladder = chebyshev_ladder(50, field).map_err(|e| e.to_string())?;
    for n in 1..=50 {
        let ok = pell_check(&ladder[n].first_kind, &ladder[n - 1].second_kind)
            .map_err(|e| e.to_string())?;
        ensure(ok, format!("n = {n} over {label}"))?;
    }
    Ok(())
}

fn pell_soundness() -> Outcome {
    pell_ladder(&Rationals, "Q")?;
    for p in [3u64, 5, 7, 11, 13] {
        pell_ladder(&PrimeField::new(p).unwrap(), &format!("F_{p}"))?;
    }
    Ok("n <= 50 over Q and 5 prime fields".into())
}

fn pell_completeness() -> Outcome {
    let mut sizes = Vec::new();
    for (p, max_deg) in [(3u64, 4usize), (5, 2)] {
        let field = PrimeField::new(p).unwrap();
        let sols = pell_enumerate_bruteforce(p, max_deg, DEFAULT_PELL_CEILING)
            .map_err(|e| e.to_string())?;
        let found: BTreeSet<_> = sols
            .iter()
            .map(|s| (print_poly(&s.p), print_poly(&s.q)))
            .collect();
        let mut family = BTreeSet::new();
        for n in 0..=max_deg {
            let (t, u) = chebyshev_closed(n);
            let (t, u) = (to_poly(&t, &field), to_poly(&u, &field));
            for sp in Sign::BOTH {
                for sq in Sign::BOTH {
                    family.insert((print_poly(&sp.apply(&t)), print_poly(&sq.apply(&u))));
                }
            }
        }
        ensure(
            found.len() == sols.len(),
            format!("p = {p}: duplicate solutions"),
        )?;
        ensure(
            found == family,
            format!("p = {p}: {} found, {} expected", found.len(), family.len()),
        )?;
        sizes.push(format!("p = {p}: {}", found.len()));
    }
    Ok(sizes.join(", "))
}

fn nonexistence() -> Outcome {
    let mut parts = Vec::new();
    for p in [3u64, 5] {
        let start = Instant::now();
        let report =
            search_solutions(&SearchConfig::new(p, 3, 2..=3, 2)).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure(
            report.solutions.is_empty(),
            format!("p = {p}: {} solutions", report.solutions.len()),
        )?;
        ensure(
            took < Duration::from_secs(60),
            format!("p = {p}: {took:.2?}"),
        )?;
        parts.push(format!(
            "p = {p}: {} pairs in {took:.2?}",
            report.counters.pairs
        ));
    }
    Ok(parts.join(", "))
}

fn sharpness() -> Outcome {
    let field = PrimeField::new(3).unwrap();
    let mut cfg = SearchConfig::new(3, 2, 3..=3, 2);
    cfg.require_nonzero_derivative = false;
    let report = search_solutions(&cfg).map_err(|e| e.to_string())?;
    let (f, g) = (
        parse_poly("x^2-1", &field).unwrap(),
        parse_poly("x^3", &field).unwrap(),
    );
    let hit = report
        .solutions
        .iter()
        .find(|id| id.f() == &f && id.g() == &g);
    ensure(hit.is_some(), "x^3 not found for x^2-1")?;

    let id = verify_counterexample_separability(2).map_err(|e| e.to_string())?;
    ensure(
        id.f() == &q("x^3-2x^2+x") && id.g() == id.f(),
        "witness shape",
    )?;
    ensure(
        !id.hypotheses().f_nonconstant_separable,
        "witness f is separable",
    )?;
    Ok(format!(
        "{} solutions without the filter",
        report.solutions.len()
    ))
}

fn rationality() -> Outcome {
    for n in [2usize, 3, 4, 5, 7] {
        let id = generate_quadratic(&r(1), &r(0), &r(1), n, Sign::Plus, Sign::Plus)
            .map_err(|e| e.to_string())?;
        if n % 2 == 1 {
            ensure(id.base().is_some(), format!("n = {n} has a radical"))?;
        } else {
            ensure(id.has_radical_coefficient(), format!("n = {n} is rational"))?;
        }
    }
    Ok("odd n rational, even n radical".into())
}

fn orbits() -> Outcome {
    let options = OrbitOptions {
        truncate_at_limit: true,
        ..OrbitOptions::default()
    };
    let mut skipped = Vec::new();
    let mut count = 0;
    for (f, g, h) in TABLE {
        let id = CompositionIdentity::new(q(f), q(g), q(h), 2).map_err(|e| e.to_string())?;
        for seed in 1..=50 {
            match lambda_orbit_with(&id, &BigInt::from(seed), 3, &options) {
                Ok(orbit) => {
                    ensure(orbit.is_constant(), format!("{f} seed {seed}"))?;
                    count += 1;
                    if f == "x^2+1" && seed == 1 {
                        let values: Vec<_> =
                            orbit.entries.iter().map(|e| e.value.clone()).collect();
                        ensure(
                            values[..3] == [2, 50, 1940450].map(BigInt::from),
                            "x^2+1 seed 1 values",
                        )?;
                        ensure(orbit.sign() == Some(Sign::Minus), "x^2+1 seed 1 sign")?;
                    }
                }
                Err(Error::OrbitHitsRoot(step)) => skipped.push(format!("{f}@{seed}/step {step}")),
                Err(e) => return Err(format!("{f} seed {seed}: {e}")),
            }
        }
    }
    Ok(format!(
        "{count} orbits constant; skipped roots of f: {}",
        skipped.join(" ")
    ))
}

fn run<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: 500,
            failure_persistence: None,
            ..Config::default()
        },
        rng,
    );
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn axioms<E: FieldElement>(a: &E, b: &E, c: &E) -> Result<(), TestCaseError> {
    let one = a.field().one();
    prop_assert_eq!(a.plus(b), b.plus(a));
    prop_assert_eq!(a.times(b).times(c), a.times(&b.times(c)));
    prop_assert_eq!(a.times(&b.plus(c)), a.times(b).plus(&a.times(c)));
    prop_assert_eq!(a.times(&one), a.clone());
    prop_assert!(a.plus(&a.negated()).is_zero());
    if !a.is_zero() {
        prop_assert!(a.times(&a.inverse().unwrap()).is_one());
    }
    Ok(())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn rational_poly(max_len: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(|cs| Polynomial::new(Rationals, cs))
}

fn property_suites() -> Outcome {
    run(
        "rational axioms",
        (rational(), rational(), rational()),
        |(a, b, c)| axioms(&a, &b, &c),
    )?;
    let fp = prop::sample::select(vec![2u64, 3, 5, 7, 101])
        .prop_flat_map(|p| (Just(PrimeField::new(p).unwrap()), 0..p, 0..p, 0..p));
    run("prime field axioms", fp, |(f, a, b, c)| {
        axioms(&f.element(a), &f.element(b), &f.element(c))
    })?;
    let ext = (
        prop::sample::select(vec![-3i64, -1, 2, 5]),
        prop::array::uniform6(rational()),
    );
    run("extension axioms", ext, |(d, [a, b, c, e, g, h])| {
        let k = QuadraticExtension::new(Rationals, Rational::from(d)).unwrap();
        axioms(&k.element(a, b), &k.element(c, e), &k.element(g, h))
    })?;
    run("divrem", (rational_poly(8), rational_poly(5)), |(a, b)| {
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        prop_assert!(rem.degree() < b.degree());
        Ok(())
    })?;
    run(
        "gcd",
        (rational_poly(5), rational_poly(5), rational_poly(3)),
        |(a, b, c)| {
            let (a, b) = (&a * &c, &b * &c);
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd(&b).unwrap();
            prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
            prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
            if !c.is_zero() {
                prop_assert!(g.div_rem(&c).unwrap().1.is_zero());
            }
            Ok(())
        },
    )?;
    run("nth root", (rational_poly(4), 1u32..=4), |(p, m)| {
        let power = p.pow(m as u64);
        let root = power.nth_root(m).unwrap();
        prop_assert_eq!(root.map(|x| x.pow(m as u64)), Some(power));
        Ok(())
    })?;
    run(
        "lambda multiplicativity",
        (1u64..2_000_000, 1u64..2_000_000),
        |(a, b)| {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            prop_assert_eq!(
                lambda_int(&(&a * &b)).unwrap(),
                lambda_int(&a).unwrap() * lambda_int(&b).unwrap()
            );
            Ok(())
        },
    )?;
    run("parse/print", rational_poly(8), |p| {
        prop_assert_eq!(parse_poly(&print_poly(&p), &Rationals).unwrap(), p);
        Ok(())
    })?;
    Ok("8 suites x 500 cases".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 9] = [
        ("table rows", 1, table_rows),
        ("closed-form cubic vs family", 5, cubic_cross_check),
        ("pell soundness", 5, pell_soundness),
        ("pell completeness", 30, pell_completeness),
        ("cubic f has no solutions", 120, nonexistence),
        ("hypothesis sharpness", 10, sharpness),
        ("rationality by parity", 5, rationality),
        ("lambda orbit invariance", 60, orbits),
        ("property suites", 60, property_suites),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (status, detail) = match outcome {
            Ok(d) if took < limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("over budget; {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} {} {name} ({took:.2?} / {limit:?}): {detail}",
            i + 1
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
