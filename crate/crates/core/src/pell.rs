//! The polynomial Pell equation `P^2 - (x^2 - 1) Q^2 = 1`.
//!
//! Its solutions are exactly `(±T_n, ±U_{n-1})`. This module checks and
//! classifies candidate pairs, generates the family, and enumerates all
//! solutions over a small prime field by brute force so the family can be
//! compared against an exhaustive scan.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Field, FieldElement, PrimeField, PrimeFieldElement};
use crate::chebyshev::chebyshev_ladder;
use crate::enumerate::polynomials_of_degree;
use crate::error::{Error, Result};
use crate::poly::{Degree, Polynomial};
use crate::sign::Sign;

pub const DEFAULT_PELL_CEILING: u128 = 50_000_000;

/// Position of a solution in the `(±T_n, ±U_{n-1})` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PellClassification {
    pub n: usize,
    pub sign_p: Sign,
    pub sign_q: Sign,
}

/// A verified solution pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution<E: FieldElement> {
    pub p: Polynomial<E>,
    pub q: Polynomial<E>,
    pub classification: Option<PellClassification>,
}

fn pell_defect<E: FieldElement>(p: &Polynomial<E>, q: &Polynomial<E>) -> Result<Polynomial<E>> {
    let field = p.field();
    if field != q.field() {
        return Err(Error::mismatch(field, q.field()));
    }
    field.require_odd_characteristic("the Pell family needs char != 2")?;
    let x2m1 = Polynomial::from_i64s(field.clone(), &[-1, 0, 1]);
    Ok(p * p - &(&x2m1 * &(q * q)))
}

/// True iff `P^2 - (x^2 - 1) Q^2 = 1`.
pub fn pell_check<E: FieldElement>(p: &Polynomial<E>, q: &Polynomial<E>) -> Result<bool> {
    Ok(pell_defect(p, q)?.is_one())
}

/// `(sign_p T_n, sign_q U_{n-1})`.
pub fn pell_solution<F: Field>(
    n: usize,
    sign_p: Sign,
    sign_q: Sign,
    field: &F,
) -> Result<PellSolution<F::Elem>> {
    let ladder = chebyshev_ladder(n, field)?;
    let p = sign_p.apply(&ladder[n].first_kind);
    let q = match n {
        0 => Polynomial::zero(field.clone()),
        _ => sign_q.apply(&ladder[n - 1].second_kind),
    };
    let sign_q = if n == 0 { Sign::Plus } else { sign_q };
    Ok(PellSolution {
        p,
        q,
        classification: Some(PellClassification { n, sign_p, sign_q }),
    })
}

fn sign_of<E: FieldElement>(actual: &E, expected: &E) -> Option<Sign> {
    if actual == expected {
        Some(Sign::Plus)
    } else if *actual == expected.negated() {
        Some(Sign::Minus)
    } else {
        None
    }
}

/// Locates `(P, Q)` in the Chebyshev family.
///
/// Returns `None` when the pair is not a Pell solution, or when it is one
/// but regenerating `(sign_p T_n, sign_q U_{n-1})` from the degree and the
/// leading coefficients does not reproduce it. For `n = 0` the sign of `Q`
/// is unrecoverable and reported as `+`.
pub fn pell_classify<E: FieldElement>(
    p: &Polynomial<E>,
    q: &Polynomial<E>,
) -> Result<Option<PellClassification>> {
    if !pell_check(p, q)? {
        return Ok(None);
    }
    let Degree::Finite(n) = p.degree() else {
        return Ok(None);
    };
    let field = p.field();
    let two = field.from_i64(2);
    let t_lead = if n == 0 {
        field.one()
    } else {
        two.pow(n as u64 - 1)
    };
    let Some(sign_p) = sign_of(p.leading().expect("nonzero"), &t_lead) else {
        return Ok(None);
    };
    let sign_q = match (n, q.leading()) {
        (0, None) => Sign::Plus,
        (0, Some(_)) | (_, None) => return Ok(None),
        (n, Some(lead)) => match sign_of(lead, &two.pow(n as u64 - 1)) {
            Some(s) => s,
            None => return Ok(None),
        },
    };
    let regenerated = pell_solution(n, sign_p, sign_q, field)?;
    if regenerated.p == *p && regenerated.q == *q {
        Ok(regenerated.classification)
    } else {
        Ok(None)
    }
}

/// Every solution over `F_p` with `deg P <= deg_p_max` and
/// `deg Q <= deg_p_max - 1`, found by exhaustive search.
///
/// Each exact degree is scanned with a nonzero leading coefficient, so no
/// padded representation is visited twice. The scan is split by the degree
/// and leading coefficient of `P` and run in parallel; the output is sorted
/// by classification, with any unclassified solutions last.
pub fn pell_enumerate_bruteforce(
    p: u64,
    deg_p_max: usize,
    ceiling: u128,
) -> Result<Vec<PellSolution<PrimeFieldElement>>> {
    let field = PrimeField::new(p)?;
    field.require_odd_characteristic("the Pell family needs char != 2")?;
    let estimated = (p as u128)
        .checked_pow(2 * deg_p_max as u32 + 1)
        .unwrap_or(u128::MAX);
    if estimated > ceiling {
        return Err(Error::SearchTooLarge { estimated, ceiling });
    }

    let x2m1 = Polynomial::from_i64s(field, &[-1, 0, 1]);
    let mut qs = vec![Polynomial::zero(field)];
    for d in 0..deg_p_max {
        qs.extend(polynomials_of_degree(field, d, None));
    }
    let q_terms: Vec<_> = qs.iter().map(|q| &x2m1 * &(q * q)).collect();

    let blocks: Vec<(usize, PrimeFieldElement)> = (0..=deg_p_max)
        .flat_map(|d| (1..p).map(move |lead| (d, field.element(lead))))
        .collect();
    let mut found: Vec<PellSolution<PrimeFieldElement>> = blocks
        .par_iter()
        .flat_map_iter(|&(d, lead)| {
            let mut hits = Vec::new();
            for cand in polynomials_of_degree(field, d, Some(lead)) {
                let square = &cand * &cand;
                for (q, term) in qs.iter().zip(&q_terms) {
                    if (&square - term).is_one() {
                        hits.push((cand.clone(), q.clone()));
                    }
                }
            }
            hits
        })
        .map(|(p, q)| -> Result<_> {
            let classification = pell_classify(&p, &q)?;
            Ok(PellSolution {
                p,
                q,
                classification,
            })
        })
        .collect::<Result<_>>()?;

    found.sort_by(|a, b| match (&a.classification, &b.classification) {
        (Some(x), Some(y)) => x.cmp(y),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => residues(&a.p)
            .cmp(&residues(&b.p))
            .then_with(|| residues(&a.q).cmp(&residues(&b.q))),
    });
    Ok(found)
}

fn residues(p: &Polynomial<PrimeFieldElement>) -> Vec<u64> {
    p.coeffs().iter().map(|c| c.residue()).collect()
}
