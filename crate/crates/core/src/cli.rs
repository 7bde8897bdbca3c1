//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a check fails or a domain error occurs,
//! 2 on usage and parse errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{Field, PrimeField, Rational, Rationals, RootExtraction};
use crate::chebyshev::{chebyshev_t, chebyshev_u, parity_profile};
use crate::error::{Error, Result};
use crate::identity::{
    check_identity, generate_linear, generate_lyg, generate_quadratic, require_quadratic_exponent,
    CompositionIdentity, QuadraticIdentity,
};
use crate::json::{ChebyshevJson, CheckJson, IdentityJson, OrbitJson, PellJson, SearchJson};
use crate::liouville::{
    lambda_orbit_with, lambda_rational, sign_change_scan, OrbitOptions, DEFAULT_DIGIT_LIMIT,
};
use crate::pell::{pell_classify, pell_enumerate_bruteforce, pell_solution, DEFAULT_PELL_CEILING};
use crate::poly::{Degree, Polynomial};
use crate::search::{search_solutions, SearchConfig, DEFAULT_SEARCH_CEILING};
use crate::sign::Sign;
use crate::text::{parse_poly, print_poly};

#[derive(Debug, Parser)]
#[command(
    name = "polycomp",
    version,
    about = "Polynomial composition identities f(g(x)) = f(x) h(x)^m"
)]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chebyshev polynomial T_n or U_n.
    Chebyshev(ChebyshevArgs),
    /// Polynomial Pell equation P^2 - (x^2 - 1) Q^2 = 1.
    #[command(subcommand)]
    Pell(PellCommand),
    /// Build or check composition identities.
    #[command(subcommand)]
    Identity(IdentityCommand),
    /// Exhaustive search over F_p.
    Search(SearchArgs),
    /// Liouville lambda and its orbits.
    #[command(subcommand)]
    Lambda(LambdaCommand),
}

#[derive(Debug, Clone, Copy)]
pub enum FieldArg {
    Q,
    Fp(PrimeField),
}

fn parse_field(s: &str) -> std::result::Result<FieldArg, String> {
    match s {
        "q" | "Q" => Ok(FieldArg::Q),
        _ => {
            let p = s
                .strip_prefix("fp:")
                .ok_or_else(|| format!("expected `q` or `fp:<p>`, got `{s}`"))?;
            let p: u64 = p.parse().map_err(|_| format!("`{p}` is not an integer"))?;
            PrimeField::new(p)
                .map(FieldArg::Fp)
                .map_err(|e| e.to_string())
        }
    }
}

fn parse_sign(s: &str) -> std::result::Result<Sign, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let bad = || format!("expected `<lo>..<hi>` or `<d>`, got `{s}`");
    match s.split_once("..") {
        Some((lo, hi)) => Ok((
            lo.parse().map_err(|_| bad())?,
            hi.parse().map_err(|_| bad())?,
        )),
        None => {
            let d = s.parse().map_err(|_| bad())?;
            Ok((d, d))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    T,
    U,
}

#[derive(Debug, Args)]
pub struct ChebyshevArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub kind: Kind,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, default_value = "q", value_parser = parse_field)]
    pub field: FieldArg,
}

#[derive(Debug, Subcommand)]
pub enum PellCommand {
    /// Check a pair and locate it in the (±T_n, ±U_{n-1}) family.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldArg,
    },
    /// Emit (sign_p T_n, sign_q U_{n-1}).
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = parse_sign)]
        sign_p: Sign,
        #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = parse_sign)]
        sign_q: Sign,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldArg,
    },
    /// Brute-force every solution over F_p up to a degree bound.
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        max_deg: usize,
        #[arg(long, default_value_t = DEFAULT_PELL_CEILING)]
        ceiling: u128,
    },
}

#[derive(Debug, Subcommand)]
pub enum IdentityCommand {
    /// Check f(g) = f h^m.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldArg,
    },
    /// Linear f = ax + b: g = (x + b/a) h^m - b/a.
    Linear {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldArg,
    },
    /// Quadratic f: the Chebyshev solution of index n.
    Quadratic {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = parse_sign)]
        sign_g: Sign,
        #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = parse_sign)]
        sign_h: Sign,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldArg,
    },
    /// Quadratic f: the closed-form cubic solution.
    Lyg {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldArg,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub deg_f: usize,
    #[arg(long, value_parser = parse_range)]
    pub deg_g: (usize, usize),
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    #[arg(long)]
    pub no_separable_filter: bool,
    #[arg(long)]
    pub no_derivative_filter: bool,
    #[arg(long, default_value_t = DEFAULT_SEARCH_CEILING)]
    pub ceiling: u128,
}

#[derive(Debug, Subcommand)]
pub enum LambdaCommand {
    /// λ of an integer or fraction.
    Eval {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// λ(f(k_j)) along k_{j+1} = g(k_j).
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Cofactor; derived from f and g when omitted.
        #[arg(long, allow_hyphen_values = true)]
        h: Option<String>,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        seed: BigInt,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = DEFAULT_DIGIT_LIMIT)]
        digit_limit: usize,
        /// Stop at the digit limit instead of failing.
        #[arg(long)]
        truncate: bool,
    },
    /// Adjacent sign changes of λ(f(n)) on an integer range.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
    },
}

enum Outcome {
    Pass,
    Fail,
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }

    fn json<T: Serialize>(&mut self, v: &T) {
        let text = serde_json::to_string_pretty(v).expect("serializable");
        self.line(text);
    }
}

macro_rules! with_field {
    ($arg:expr, $f:ident => $body:expr) => {
        match $arg {
            FieldArg::Q => {
                let $f = Rationals;
                $body
            }
            FieldArg::Fp(p) => {
                let $f = p;
                $body
            }
        }
    };
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::InvalidCoefficient { .. }
        | Error::InvalidConfig(_)
        | Error::NotPrime(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let mut ctx = Ctx {
        out,
        json: cli.json,
    };
    match dispatch(&cli.command, &mut ctx) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<Outcome> {
    match cmd {
        Command::Chebyshev(a) => with_field!(a.field, f => chebyshev_cmd(&f, a, ctx)),
        Command::Pell(c) => pell_cmd(c, ctx),
        Command::Identity(c) => identity_cmd(c, ctx),
        Command::Search(a) => search_cmd(a, ctx),
        Command::Lambda(c) => lambda_cmd(c, ctx),
    }
}

fn chebyshev_cmd<F: Field>(field: &F, a: &ChebyshevArgs, ctx: &mut Ctx) -> Result<Outcome> {
    let poly = match a.kind {
        Kind::T if a.n < 0 => {
            return Err(Error::InvalidInput(format!(
                "T_n needs n >= 0, got {}",
                a.n
            )));
        }
        Kind::T => chebyshev_t(a.n as usize, field)?,
        Kind::U => chebyshev_u(a.n, field)?,
    };
    if ctx.json {
        ctx.json(&ChebyshevJson {
            kind: if a.kind == Kind::T { "T" } else { "U" },
            n: a.n,
            poly: (&poly).into(),
            parity: parity_profile(&poly),
        });
    } else {
        ctx.line(print_poly(&poly));
    }
    Ok(Outcome::Pass)
}

fn pell_cmd(cmd: &PellCommand, ctx: &mut Ctx) -> Result<Outcome> {
    match cmd {
        PellCommand::Check { p, q, field } => with_field!(*field, fl => {
            let p = parse_poly(p, &fl)?;
            let q = parse_poly(q, &fl)?;
            let class = pell_classify(&p, &q)?;
            let holds = crate::pell::pell_check(&p, &q)?;
            if ctx.json {
                ctx.json(&PellJson { p: (&p).into(), q: (&q).into(), classification: class });
            } else if !holds {
                ctx.line("FAIL");
            } else if let Some(c) = class {
                ctx.line(format!("OK n={} sign_p={} sign_q={}", c.n, c.sign_p, c.sign_q));
            } else {
                ctx.line("OK unclassified");
            }
            Ok(if holds { Outcome::Pass } else { Outcome::Fail })
        }),
        PellCommand::Generate {
            n,
            sign_p,
            sign_q,
            field,
        } => with_field!(*field, fl => {
            let s = pell_solution(*n, *sign_p, *sign_q, &fl)?;
            if ctx.json {
                ctx.json(&PellJson::from(&s));
            } else {
                ctx.line(format!("P = {}", print_poly(&s.p)));
                ctx.line(format!("Q = {}", print_poly(&s.q)));
            }
            Ok(Outcome::Pass)
        }),
        PellCommand::Enumerate {
            p,
            max_deg,
            ceiling,
        } => {
            let sols = pell_enumerate_bruteforce(*p, *max_deg, *ceiling)?;
            if ctx.json {
                ctx.json(&sols.iter().map(PellJson::from).collect::<Vec<_>>());
            } else {
                for s in &sols {
                    let tag = match s.classification {
                        Some(c) => format!("n={} {}{}", c.n, c.sign_p, c.sign_q),
                        None => "unclassified".to_string(),
                    };
                    ctx.line(format!(
                        "{tag} | P = {} | Q = {}",
                        print_poly(&s.p),
                        print_poly(&s.q)
                    ));
                }
                ctx.line(format!("total {}", sols.len()));
            }
            Ok(Outcome::Pass)
        }
    }
}

fn print_identity<E: crate::algebra::FieldElement>(id: &CompositionIdentity<E>, ctx: &mut Ctx) {
    if ctx.json {
        ctx.json(&IdentityJson::from(id));
        return;
    }
    ctx.line(format!("f = {}", print_poly(id.f())));
    ctx.line(format!("g = {}", print_poly(id.g())));
    ctx.line(format!("h = {}", print_poly(id.h())));
    ctx.line(format!("m = {}", id.m()));
    ctx.line(format!("field = {}", id.f().descriptor()));
}

fn identity_cmd(cmd: &IdentityCommand, ctx: &mut Ctx) -> Result<Outcome> {
    match cmd {
        IdentityCommand::Check { f, g, h, m, field } => with_field!(*field, fl => {
            let (f, g, h) = (parse_poly(f, &fl)?, parse_poly(g, &fl)?, parse_poly(h, &fl)?);
            let holds = check_identity(&f, &g, &h, *m)?;
            if ctx.json {
                let hypotheses = holds
                    .then(|| CompositionIdentity::new(f, g, h, *m).map(|id| id.hypotheses()))
                    .transpose()?;
                ctx.json(&CheckJson { holds, hypotheses });
            } else {
                ctx.line(if holds { "OK" } else { "FAIL" });
            }
            Ok(if holds { Outcome::Pass } else { Outcome::Fail })
        }),
        IdentityCommand::Linear { f, h, m, field } => with_field!(*field, fl => {
            let f = parse_poly(f, &fl)?;
            if f.degree() != Degree::Finite(1) {
                return Err(Error::InvalidInput(format!("f = {f} is not linear")));
            }
            let h = parse_poly(h, &fl)?;
            let id = generate_linear(&f.coeff(1), &f.coeff(0), &h, *m)?;
            print_identity(&id, ctx);
            Ok(Outcome::Pass)
        }),
        IdentityCommand::Quadratic {
            f,
            n,
            sign_g,
            sign_h,
            m,
            field,
        } => with_field!(*field, fl => {
            require_quadratic_exponent(*m)?;
            let (a, b, c) = quadratic_coeffs(&parse_poly(f, &fl)?)?;
            match generate_quadratic(&a, &b, &c, *n, *sign_g, *sign_h)? {
                QuadraticIdentity::Base(id) => print_identity(&id, ctx),
                QuadraticIdentity::Extension(id) => print_identity(&id, ctx),
            }
            Ok(Outcome::Pass)
        }),
        IdentityCommand::Lyg { f, field } => with_field!(*field, fl => {
            let (a, b, c) = quadratic_coeffs(&parse_poly(f, &fl)?)?;
            print_identity(&generate_lyg(&a, &b, &c)?, ctx);
            Ok(Outcome::Pass)
        }),
    }
}

fn quadratic_coeffs<E: RootExtraction>(f: &Polynomial<E>) -> Result<(E, E, E)> {
    if f.degree() != Degree::Finite(2) {
        return Err(Error::InvalidInput(format!("f = {f} is not quadratic")));
    }
    Ok((f.coeff(2), f.coeff(1), f.coeff(0)))
}

fn search_cmd(a: &SearchArgs, ctx: &mut Ctx) -> Result<Outcome> {
    let config = SearchConfig {
        p: a.p,
        deg_f: a.deg_f,
        deg_g_min: a.deg_g.0,
        deg_g_max: a.deg_g.1,
        m: a.m,
        require_separable: !a.no_separable_filter,
        require_nonzero_derivative: !a.no_derivative_filter,
        iteration_ceiling: a.ceiling,
    };
    let report = search_solutions(&config)?;
    if ctx.json {
        ctx.json(&SearchJson::from(&report));
        return Ok(Outcome::Pass);
    }
    let c = report.counters;
    ctx.line(format!(
        "F_{} deg f = {} (monic) deg g = {}..{} m = {}",
        config.p, config.deg_f, config.deg_g_min, config.deg_g_max, config.m
    ));
    ctx.line(format!(
        "f {}/{} g {}/{} pairs {} divisible {} power {} solutions {}",
        c.f_kept,
        c.f_enumerated,
        c.g_kept,
        c.g_enumerated,
        c.pairs,
        c.divisible,
        c.power,
        c.solutions
    ));
    for id in &report.solutions {
        ctx.line(format!(
            "f = {} | g = {} | h = {}",
            print_poly(id.f()),
            print_poly(id.g()),
            print_poly(id.h())
        ));
    }
    ctx.line(format!("elapsed {} ms", report.duration.as_millis()));
    Ok(Outcome::Pass)
}

#[derive(Serialize)]
struct EvalJson {
    value: String,
    lambda: Sign,
}

fn lambda_cmd(cmd: &LambdaCommand, ctx: &mut Ctx) -> Result<Outcome> {
    match cmd {
        LambdaCommand::Eval { value } => {
            let r: Rational = value.parse()?;
            let lambda = lambda_rational(&r)?;
            if ctx.json {
                ctx.json(&EvalJson {
                    value: r.to_string(),
                    lambda,
                });
            } else {
                ctx.line(format!("{:+}", lambda.as_i32()));
            }
            Ok(Outcome::Pass)
        }
        LambdaCommand::Orbit {
            f,
            g,
            h,
            m,
            seed,
            steps,
            digit_limit,
            truncate,
        } => {
            let f = parse_poly(f, &Rationals)?;
            let g = parse_poly(g, &Rationals)?;
            let h = match h {
                Some(h) => parse_poly(h, &Rationals)?,
                None => {
                    let cofactor = f
                        .compose(&g)?
                        .exact_div(&f)?
                        .map(|q| q.nth_root(*m))
                        .transpose()?
                        .flatten();
                    match cofactor {
                        Some(h) => h,
                        None => {
                            ctx.line("FAIL");
                            return Ok(Outcome::Fail);
                        }
                    }
                }
            };
            let id = match CompositionIdentity::new(f, g, h, *m) {
                Ok(id) => id,
                Err(Error::VerificationFailed(_)) => {
                    ctx.line("FAIL");
                    return Ok(Outcome::Fail);
                }
                Err(e) => return Err(e),
            };
            let options = OrbitOptions {
                digit_limit: *digit_limit,
                truncate_at_limit: *truncate,
            };
            let orbit = lambda_orbit_with(&id, seed, *steps, &options)?;
            if ctx.json {
                ctx.json(&OrbitJson::from(&orbit));
            } else {
                for e in &orbit.entries {
                    ctx.line(format!(
                        "{} {} {} {:+}",
                        e.step,
                        e.k,
                        e.value,
                        e.lambda.as_i32()
                    ));
                }
            }
            Ok(Outcome::Pass)
        }
        LambdaCommand::Scan { f, from, to } => {
            let f = parse_poly(f, &Rationals)?;
            let report = sign_change_scan(&f, *from, *to)?;
            if ctx.json {
                ctx.json(&report);
            } else {
                for (a, b) in &report.changes {
                    ctx.line(format!("{a} {b}"));
                }
                if !report.zeros.is_empty() {
                    let zs: Vec<_> = report.zeros.iter().map(|z| z.to_string()).collect();
                    ctx.line(format!("zeros {}", zs.join(" ")));
                }
            }
            Ok(Outcome::Pass)
        }
    }
}
