//! Composition identities `f(g(x)) = f(x) h(x)^m`.
//!
//! Solutions with separable `f`, `deg g >= 2`, `g' != 0` and `char K ∤ m`
//! come in two families:
//!
//! * linear `f = ax + b`, with `g = (x + b/a) h^m - b/a` for any `h`;
//! * quadratic `f = ax^2 + bx + c` with `m = 2`, where the substitution
//!   `x = (t sqrt(D) - b) / 2a` turns `f` into `(D/4a)(t^2 - 1)` and the
//!   equation into the Pell equation, so `g` and `h` are Chebyshev
//!   polynomials pulled back through that substitution.
//!
//! The quadratic family is computed in `K(sqrt(D))[x]` and descended to
//! `K[x]` when every coefficient allows it.

use crate::algebra::{
    try_descend, Field, FieldElement, QuadExtElement, QuadraticExtension, RootExtraction,
};
use crate::chebyshev::chebyshev_ladder;
use crate::error::{Error, Result};
use crate::poly::{Degree, Polynomial};
use crate::sign::Sign;

/// A quadruple `(f, g, h, m)` for which `f(g(x)) = f(x) h(x)^m` has been
/// checked exactly. Whether the hypotheses of the classification hold is
/// reported separately by [`CompositionIdentity::hypotheses`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionIdentity<E: FieldElement> {
    f: Polynomial<E>,
    g: Polynomial<E>,
    h: Polynomial<E>,
    m: u32,
}

/// Which side conditions of the classification an identity satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Hypotheses {
    pub f_nonconstant_separable: bool,
    pub deg_g_at_least_two: bool,
    pub g_derivative_nonzero: bool,
    pub m_coprime_to_characteristic: bool,
}

impl Hypotheses {
    pub fn all(&self) -> bool {
        self.f_nonconstant_separable
            && self.deg_g_at_least_two
            && self.g_derivative_nonzero
            && self.m_coprime_to_characteristic
    }
}

impl<E: FieldElement> CompositionIdentity<E> {
    /// Verifies the equation and wraps the quadruple.
    pub fn new(f: Polynomial<E>, g: Polynomial<E>, h: Polynomial<E>, m: u32) -> Result<Self> {
        if !check_identity(&f, &g, &h, m)? {
            return Err(Error::VerificationFailed(format!(
                "f(g(x)) != f(x) h(x)^{m} for f = {f}, g = {g}, h = {h}"
            )));
        }
        Ok(CompositionIdentity { f, g, h, m })
    }

    pub fn f(&self) -> &Polynomial<E> {
        &self.f
    }

    pub fn g(&self) -> &Polynomial<E> {
        &self.g
    }

    pub fn h(&self) -> &Polynomial<E> {
        &self.h
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn hypotheses(&self) -> Hypotheses {
        let p = self.f.field().characteristic();
        Hypotheses {
            f_nonconstant_separable: !self.f.is_constant()
                && self.f.is_separable().unwrap_or(false),
            deg_g_at_least_two: self.g.degree() >= Degree::Finite(2),
            g_derivative_nonzero: !self.g.derivative().is_zero(),
            m_coprime_to_characteristic: p == 0 || self.m as u64 % p != 0,
        }
    }
}

/// True iff `f(g(x)) = f(x) h(x)^m` exactly.
pub fn check_identity<E: FieldElement>(
    f: &Polynomial<E>,
    g: &Polynomial<E>,
    h: &Polynomial<E>,
    m: u32,
) -> Result<bool> {
    if m < 1 {
        return Err(Error::InvalidInput("exponent m must be at least 1".into()));
    }
    let lhs = f.compose(g)?;
    let rhs = f.try_mul(&h.pow(m as u64))?;
    Ok(lhs == rhs)
}

/// Case-II solutions have `m = 2`; any other exponent with a quadratic `f`
/// has no solutions under the classification's hypotheses.
pub fn require_quadratic_exponent(m: u32) -> Result<()> {
    if m == 2 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "for separable quadratic f the equation f(g) = f h^m only has solutions with m = 2 (got m = {m})"
        )))
    }
}

/// The linear family: `f = ax + b`, `g = (x + b/a) h^m - b/a`.
pub fn generate_linear<E: FieldElement>(
    a: &E,
    b: &E,
    h: &Polynomial<E>,
    m: u32,
) -> Result<CompositionIdentity<E>> {
    let field = a.field();
    if b.field() != field || *h.field() != field {
        return Err(Error::mismatch(field, h.field()));
    }
    if m < 2 {
        return Err(Error::InvalidInput("exponent m must be at least 2".into()));
    }
    if a.is_zero() {
        return Err(Error::InvalidInput(
            "leading coefficient a must be nonzero".into(),
        ));
    }
    field.require_coprime_exponent(m as u64, "the exponent m must not be divisible by char K")?;
    let shift = b.divide(a)?;
    let x_plus_shift = Polynomial::new(field.clone(), vec![shift.clone(), field.one()]);
    let g = &x_plus_shift * &h.pow(m as u64) - &Polynomial::constant(field.clone(), shift);
    if g.degree() < Degree::Finite(2) {
        return Err(Error::DegreeTooSmall(format!(
            "g = {g} has degree {}, need at least 2",
            g.degree()
        )));
    }
    let f = Polynomial::new(field, vec![b.clone(), a.clone()]);
    CompositionIdentity::new(f, g, h.clone(), m)
}

/// Data of the substitution `x = (t sqrt(D) - b) / 2a` that carries
/// `f = ax^2 + bx + c` to `(D/4a)(t^2 - 1)`.
#[derive(Debug, Clone)]
pub struct PellNormalization<E: FieldElement> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub discriminant: E,
    pub extension: QuadraticExtension<E::Field>,
    /// `sqrt(D)` inside `K(sqrt(D))`; an element of `K` when `D` is a square.
    pub sqrt_d: QuadExtElement<E>,
    /// `x(t)` as a polynomial over `K(sqrt(D))`.
    pub forward_map: Polynomial<QuadExtElement<E>>,
    /// `D / 4a`.
    pub scale: E,
}

fn lift<E: FieldElement>(
    ext: &QuadraticExtension<E::Field>,
    p: &Polynomial<E>,
) -> Polynomial<QuadExtElement<E>> {
    p.map_coeffs(ext.clone(), |c| ext.embed(c.clone()))
}

fn descend<E: RootExtraction>(
    p: &Polynomial<QuadExtElement<E>>,
    base: &E::Field,
) -> Option<Polynomial<E>> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(try_descend)
        .collect::<Option<Vec<_>>>()?;
    Some(Polynomial::new(base.clone(), coeffs))
}

fn quadratic_parts<E: FieldElement>(f: &Polynomial<E>) -> Result<(E, E, E)> {
    if f.degree() != Degree::Finite(2) {
        return Err(Error::InvalidInput(format!(
            "expected a quadratic, got {f}"
        )));
    }
    Ok((f.coeff(2), f.coeff(1), f.coeff(0)))
}

fn discriminant<E: FieldElement>(a: &E, b: &E, c: &E) -> E {
    let four = a.field().from_i64(4);
    b.times(b).minus(&four.times(a).times(c))
}

/// Computes the substitution taking a separable quadratic `f` to a multiple
/// of `t^2 - 1`. When `D` is a square in `K` its root there is used, so the
/// map has coefficients in `K` and the extension is never entered.
pub fn normalize_to_pell<E: RootExtraction>(f: &Polynomial<E>) -> Result<PellNormalization<E>> {
    let (a, b, c) = quadratic_parts(f)?;
    let field = f.field().clone();
    field.require_odd_characteristic("the Pell normalization divides by 2")?;
    let d = discriminant(&a, &b, &c);
    if d.is_zero() {
        return Err(Error::NotSeparable(format!("{f} has zero discriminant")));
    }
    let ext = QuadraticExtension::new(field.clone(), d.clone())?;
    let sqrt_d = match d.sqrt_in_field() {
        Some(r) => ext.embed(r),
        None => ext.sqrt_d(),
    };
    let two_a_inv = field.from_i64(2).times(&a).inverse()?;
    let forward_map = Polynomial::new(
        ext.clone(),
        vec![
            ext.embed(b.negated().times(&two_a_inv)),
            sqrt_d.times(&ext.embed(two_a_inv)),
        ],
    );
    let scale = d.divide(&field.from_i64(4).times(&a))?;
    let norm = PellNormalization {
        a,
        b,
        c,
        discriminant: d,
        extension: ext,
        sqrt_d,
        forward_map,
        scale,
    };
    debug_assert!(norm.verify());
    Ok(norm)
}

impl<E: FieldElement> PellNormalization<E> {
    pub fn f(&self) -> Polynomial<E> {
        let field = self.a.field();
        Polynomial::new(field, vec![self.c.clone(), self.b.clone(), self.a.clone()])
    }

    /// Checks `f(x(t)) = (D/4a)(t^2 - 1)` in `K(sqrt(D))[t]`.
    pub fn verify(&self) -> bool {
        let ext = &self.extension;
        let lhs = lift(ext, &self.f())
            .compose(&self.forward_map)
            .expect("same field");
        let t2m1 = Polynomial::from_i64s(ext.clone(), &[-1, 0, 1]);
        lhs == t2m1.scale(&ext.embed(self.scale.clone()))
    }

    /// Transports a solution `(g, h)` of `f(g) = f h^2` to the pair
    /// `G(t) = (2a g(x(t)) + b) / sqrt(D)`, `H(t) = h(x(t))`, which solves
    /// `G^2 - (t^2 - 1) H^2 = 1`.
    pub fn transform<P>(
        &self,
        g: &P,
        h: &P,
    ) -> Result<(Polynomial<QuadExtElement<E>>, Polynomial<QuadExtElement<E>>)>
    where
        P: LiftTo<E>,
    {
        let ext = &self.extension;
        let g = g.lift_to(ext).compose(&self.forward_map)?;
        let h = h.lift_to(ext).compose(&self.forward_map)?;
        let two_a = ext.embed(self.a.field().from_i64(2).times(&self.a));
        let b = Polynomial::constant(ext.clone(), ext.embed(self.b.clone()));
        let big_g = (g.scale(&two_a) + b).scale(&self.sqrt_d.inverse()?);
        Ok((big_g, h))
    }
}

impl<E: RootExtraction> PellNormalization<E> {
    /// `sqrt(D)` in `K` when `D` is a square there.
    pub fn sqrt_d_in_base(&self) -> Option<E> {
        self.discriminant.sqrt_in_field()
    }

    /// `x(t)` with coefficients in `K`, when `D` is a square.
    pub fn forward_map_in_base(&self) -> Option<Polynomial<E>> {
        descend(&self.forward_map, &self.a.field())
    }
}

/// Polynomials that can be viewed in `K(sqrt(D))[x]`.
pub trait LiftTo<E: FieldElement> {
    fn lift_to(&self, ext: &QuadraticExtension<E::Field>) -> Polynomial<QuadExtElement<E>>;
}

impl<E: FieldElement> LiftTo<E> for Polynomial<E> {
    fn lift_to(&self, ext: &QuadraticExtension<E::Field>) -> Polynomial<QuadExtElement<E>> {
        lift(ext, self)
    }
}

impl<E: FieldElement> LiftTo<E> for Polynomial<QuadExtElement<E>> {
    fn lift_to(&self, ext: &QuadraticExtension<E::Field>) -> Polynomial<QuadExtElement<E>> {
        assert!(
            self.field() == ext,
            "polynomial lives in a different extension"
        );
        self.clone()
    }
}

/// A quadratic-family identity, over `K` when it descends and over
/// `K(sqrt(D))` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadraticIdentity<E: FieldElement> {
    Base(CompositionIdentity<E>),
    Extension(CompositionIdentity<QuadExtElement<E>>),
}

impl<E: FieldElement> QuadraticIdentity<E> {
    pub fn base(&self) -> Option<&CompositionIdentity<E>> {
        match self {
            QuadraticIdentity::Base(id) => Some(id),
            QuadraticIdentity::Extension(_) => None,
        }
    }

    pub fn extension(&self) -> Option<&CompositionIdentity<QuadExtElement<E>>> {
        match self {
            QuadraticIdentity::Base(_) => None,
            QuadraticIdentity::Extension(id) => Some(id),
        }
    }

    pub fn degree_g(&self) -> Degree {
        match self {
            QuadraticIdentity::Base(id) => id.g().degree(),
            QuadraticIdentity::Extension(id) => id.g().degree(),
        }
    }

    pub fn degree_h(&self) -> Degree {
        match self {
            QuadraticIdentity::Base(id) => id.h().degree(),
            QuadraticIdentity::Extension(id) => id.h().degree(),
        }
    }

    /// True when some coefficient of `g` or `h` keeps a nonzero `sqrt(D)` part.
    pub fn has_radical_coefficient(&self) -> bool {
        match self {
            QuadraticIdentity::Base(_) => false,
            QuadraticIdentity::Extension(id) => id
                .g()
                .coeffs()
                .iter()
                .chain(id.h().coeffs())
                .any(|c| !c.is_in_base()),
        }
    }
}

fn check_quadratic_inputs<E: FieldElement>(a: &E, b: &E, c: &E) -> Result<Polynomial<E>> {
    let field = a.field();
    for other in [b, c] {
        if other.field() != field {
            return Err(Error::mismatch(&field, other.field()));
        }
    }
    if a.is_zero() {
        return Err(Error::InvalidInput(
            "leading coefficient a must be nonzero".into(),
        ));
    }
    field.require_odd_characteristic("the quadratic family needs char != 2")?;
    if discriminant(a, b, c).is_zero() {
        return Err(Error::NotSeparable(
            "discriminant b^2 - 4ac vanishes".into(),
        ));
    }
    Ok(Polynomial::new(
        field,
        vec![c.clone(), b.clone(), a.clone()],
    ))
}

/// The quadratic family:
/// `g = (sign_g T_n(y) sqrt(D) - b) / 2a`, `h = sign_h U_{n-1}(y)` with
/// `y = (2ax + b) / sqrt(D)` and `m = 2`.
pub fn generate_quadratic<E: RootExtraction>(
    a: &E,
    b: &E,
    c: &E,
    n: usize,
    sign_g: Sign,
    sign_h: Sign,
) -> Result<QuadraticIdentity<E>> {
    let f = check_quadratic_inputs(a, b, c)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall(format!(
            "n = {n} gives deg g = {n}, need at least 2"
        )));
    }
    let norm = normalize_to_pell(&f)?;
    let ext = norm.extension.clone();
    let field = a.field();
    let s = norm.sqrt_d.clone();
    let s_inv = s.inverse()?;
    let two_a = field.from_i64(2).times(a);
    let y = Polynomial::new(
        ext.clone(),
        vec![
            ext.embed(b.clone()).times(&s_inv),
            ext.embed(two_a.clone()).times(&s_inv),
        ],
    );
    let ladder = chebyshev_ladder(n, &ext)?;
    let t_of_y = ladder[n].first_kind.compose(&y)?;
    let u_of_y = ladder[n - 1].second_kind.compose(&y)?;

    let b_const = Polynomial::constant(ext.clone(), ext.embed(b.clone()));
    let g = (sign_g.apply(&t_of_y).scale(&s) - b_const).scale(&ext.embed(two_a.inverse()?));
    let h = sign_h.apply(&u_of_y);
    let in_ext = CompositionIdentity::new(lift(&ext, &f), g, h, 2)?;

    match (descend(in_ext.g(), &field), descend(in_ext.h(), &field)) {
        (Some(g), Some(h)) => Ok(QuadraticIdentity::Base(CompositionIdentity::new(
            f, g, h, 2,
        )?)),
        _ => Ok(QuadraticIdentity::Extension(in_ext)),
    }
}

/// The closed `n = 3` member of the quadratic family:
/// `g = (16a^2 x^3 + 24ab x^2 + (9b^2 + 12ac) x + 8bc) / D`,
/// `h = (16a^2 x^2 + 16ab x + 3b^2 + 4ac) / D`.
pub fn generate_lyg<E: FieldElement>(a: &E, b: &E, c: &E) -> Result<CompositionIdentity<E>> {
    let f = check_quadratic_inputs(a, b, c)?;
    let field = a.field();
    let k = |n: i64| field.from_i64(n);
    let d_inv = discriminant(a, b, c).inverse()?;
    let (aa, ab, ac, bb, bc) = (a.times(a), a.times(b), a.times(c), b.times(b), b.times(c));

    let g = Polynomial::new(
        field.clone(),
        vec![
            k(8).times(&bc),
            k(9).times(&bb).plus(&k(12).times(&ac)),
            k(24).times(&ab),
            k(16).times(&aa),
        ],
    )
    .scale(&d_inv);
    let h = Polynomial::new(
        field.clone(),
        vec![
            k(3).times(&bb).plus(&k(4).times(&ac)),
            k(16).times(&ab),
            k(16).times(&aa),
        ],
    )
    .scale(&d_inv);
    CompositionIdentity::new(f, g, h, 2)
}
