use num_bigint::BigInt;
use proptest::prelude::*;

use polycomp::algebra::{
    Field, FieldElement, PrimeField, PrimeFieldElement, QuadExtElement, QuadraticExtension,
    Rational, Rationals,
};
use polycomp::liouville::{big_omega, big_omega_trial_division, lambda_int, lambda_rational};
use polycomp::poly::{Degree, Polynomial};
use polycomp::sign::Sign;
use polycomp::text::{parse_poly, print_poly};

const PRIMES: [u64; 7] = [2, 3, 5, 7, 11, 13, 101];
const NONSQUARES: [i64; 6] = [-4, -3, -1, 2, 3, 5];

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn prime_triple() -> impl Strategy<Value = (PrimeField, u64, u64, u64)> {
    prop::sample::select(PRIMES.to_vec())
        .prop_flat_map(|p| (Just(PrimeField::new(p).unwrap()), 0..p, 0..p, 0..p))
}

fn quad_triple() -> impl Strategy<Value = [QuadExtElement<Rational>; 3]> {
    (
        prop::sample::select(NONSQUARES.to_vec()),
        prop::array::uniform6(rational()),
    )
        .prop_map(|(d, c)| {
            let ext = QuadraticExtension::new(Rationals, Rational::from(d)).unwrap();
            let [a, b, c0, d0, e, f] = c;
            [ext.element(a, b), ext.element(c0, d0), ext.element(e, f)]
        })
}

fn rational_poly(max_len: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(|cs| Polynomial::new(Rationals, cs))
}

fn prime_poly_pair(
    max_len: usize,
) -> impl Strategy<Value = (Polynomial<PrimeFieldElement>, Polynomial<PrimeFieldElement>)> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13]).prop_flat_map(move |p| {
        let f = PrimeField::new(p).unwrap();
        let coeffs = prop::collection::vec(0..p, 0..=max_len);
        (coeffs.clone(), coeffs).prop_map(move |(a, b)| {
            let mk =
                |v: Vec<u64>| Polynomial::new(f, v.into_iter().map(|r| f.element(r)).collect());
            (mk(a), mk(b))
        })
    })
}

fn check_axioms<E: FieldElement>(a: &E, b: &E, c: &E) -> Result<(), TestCaseError> {
    let field = a.field();
    let (zero, one) = (field.zero(), field.one());
    prop_assert_eq!(a.plus(b), b.plus(a));
    prop_assert_eq!(a.times(b), b.times(a));
    prop_assert_eq!(a.plus(b).plus(c), a.plus(&b.plus(c)));
    prop_assert_eq!(a.times(b).times(c), a.times(&b.times(c)));
    prop_assert_eq!(a.times(&b.plus(c)), a.times(b).plus(&a.times(c)));
    prop_assert_eq!(a.plus(&zero), a.clone());
    prop_assert_eq!(a.times(&one), a.clone());
    prop_assert!(a.plus(&a.negated()).is_zero());
    prop_assert_eq!(a.minus(b), a.plus(&b.negated()));
    if a.is_zero() {
        prop_assert!(a.inverse().is_err());
    } else {
        prop_assert!(a.times(&a.inverse().unwrap()).is_one());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn prime_field_axioms((f, a, b, c) in prime_triple()) {
        check_axioms(&f.element(a), &f.element(b), &f.element(c))?;
    }

    #[test]
    fn quadratic_extension_axioms([a, b, c] in quad_triple()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn conjugation_is_a_ring_homomorphism([a, b, _c] in quad_triple()) {
        prop_assert_eq!(a.times(&b).conjugate(), a.conjugate().times(&b.conjugate()));
        prop_assert_eq!(a.plus(&b).conjugate(), a.conjugate().plus(&b.conjugate()));
        prop_assert_eq!(a.times(&b).norm(), a.norm().times(&b.norm()));
    }

    #[test]
    fn prime_field_matches_integer_arithmetic((f, a, b, _c) in prime_triple()) {
        let p = f.modulus();
        prop_assert_eq!(f.element(a).times(&f.element(b)).residue(), a * b % p);
        prop_assert_eq!(f.element(a).plus(&f.element(b)).residue(), (a + b) % p);
    }

    #[test]
    fn divrem_round_trip(a in rational_poly(8), b in rational_poly(5)) {
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        prop_assert!(rem.degree() < b.degree());
    }

    #[test]
    fn divrem_round_trip_mod_p((a, b) in prime_poly_pair(8)) {
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        prop_assert!(rem.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in rational_poly(6), b in rational_poly(6), c in rational_poly(3)) {
        let (a, b) = (&a * &c, &b * &c);
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.leading().unwrap().is_one());
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
        if !c.is_zero() {
            prop_assert!(g.div_rem(&c).unwrap().1.is_zero());
        }
    }

    #[test]
    fn gcd_divides_both_mod_p((a, b) in prime_poly_pair(7)) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b).unwrap();
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn nth_root_round_trip(p in rational_poly(4), m in 1u32..=4) {
        let power = p.pow(m as u64);
        let root = power.nth_root(m).unwrap().expect("a perfect power has a root");
        prop_assert_eq!(root.pow(m as u64), power);
    }

    #[test]
    fn nth_root_round_trip_mod_p((a, _b) in prime_poly_pair(4), m in 2u32..=4) {
        let p = a.field().characteristic();
        prop_assume!(m as u64 % p != 0);
        let power = a.pow(m as u64);
        let root = power.nth_root(m).unwrap().expect("a perfect power has a root");
        prop_assert_eq!(root.pow(m as u64), power);
    }

    #[test]
    fn compose_degree_law(f in rational_poly(5), g in rational_poly(4)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let comp = f.compose(&g).unwrap();
        match (f.degree(), g.degree()) {
            (Degree::Finite(df), Degree::Finite(dg)) if dg > 0 => {
                prop_assert_eq!(comp.degree(), Degree::Finite(df * dg));
            }
            _ => prop_assert!(comp.is_constant()),
        }
        let x = Rational::new(3, 7);
        prop_assert_eq!(comp.eval(&x), f.eval(&g.eval(&x)));
    }

    #[test]
    fn derivative_rules(f in rational_poly(6), g in rational_poly(6), c in rational()) {
        prop_assert_eq!((&f + &g).derivative(), &f.derivative() + &g.derivative());
        prop_assert_eq!(f.scale(&c).derivative(), f.derivative().scale(&c));
        prop_assert_eq!((&f * &g).derivative(), &(&f.derivative() * &g) + &(&f * &g.derivative()));
    }

    #[test]
    fn lambda_is_completely_multiplicative(a in 1u64..2_000_000, b in 1u64..2_000_000) {
        let (ba, bb) = (BigInt::from(a), BigInt::from(b));
        let lhs = lambda_int(&(&ba * &bb)).unwrap();
        prop_assert_eq!(lhs, lambda_int(&ba).unwrap() * lambda_int(&bb).unwrap());
    }

    #[test]
    fn omega_matches_trial_division(n in 1u64..50_000_000) {
        prop_assert_eq!(big_omega(&BigInt::from(n)).unwrap(), big_omega_trial_division(n));
    }

    #[test]
    fn lambda_of_reciprocal(r in nonzero_rational()) {
        let inv = r.inverse().unwrap();
        prop_assert_eq!(lambda_rational(&r).unwrap() * lambda_rational(&inv).unwrap(), Sign::Plus);
    }

    #[test]
    fn lambda_rational_extends_lambda_int(n in -100_000i64..100_000) {
        prop_assume!(n != 0);
        prop_assert_eq!(lambda_rational(&Rational::from(n)).unwrap(), lambda_int(&BigInt::from(n)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parse_print_round_trip_rational(p in rational_poly(8)) {
        let text = print_poly(&p);
        prop_assert_eq!(parse_poly(&text, &Rationals).unwrap(), p);
    }

    #[test]
    fn parse_print_round_trip_prime((a, _b) in prime_poly_pair(8)) {
        let field = *a.field();
        let text = print_poly(&a);
        prop_assert_eq!(parse_poly(&text, &field).unwrap(), a);
    }
}
