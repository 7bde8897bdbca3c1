//! Text form of polynomials.
//!
//! Grammar, with optional whitespace between tokens:
//!
//! ```text
//! poly  := sign? term (('+' | '-') term)*
//! term  := coeff ('*'? 'x' ('^' int)?)? | 'x' ('^' int)?
//! coeff := int ('/' int)?
//! ```
//!
//! The printer emits descending powers with the sign folded into the
//! operator, `x^1` written as `x` and unit coefficients elided, e.g.
//! `16x^6+24x^4+9x^2+1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Field, FieldElement};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Exponents above this are rejected to keep dense storage bounded.
pub const MAX_EXPONENT: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    X,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    end: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Int(chars[start..i].iter().collect()), col));
                continue;
            }
            '/' => Tok::Slash,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            'x' => Tok::X,
            other => {
                return Err(Error::Parse {
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        toks.push((tok, col));
        i += 1;
    }
    Ok(Lexer {
        toks,
        end: chars.len() + 1,
    })
}

struct Parser<'a, F: Field> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    end: usize,
    field: &'a F,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            column: self.column(),
            message: message.into(),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self, what: &str) -> Result<(BigInt, String)> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok((s.parse().expect("lexed digits"), s))
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let col = self.column();
        let (e, _) = self.int("exponent")?;
        match usize::try_from(&e) {
            Ok(e) if e <= MAX_EXPONENT => Ok(e),
            _ => Err(Error::Parse {
                column: col,
                message: format!("exponent exceeds {MAX_EXPONENT}"),
            }),
        }
    }

    /// One term as `(coefficient, power)`.
    fn term(&mut self, negative: bool) -> Result<(F::Elem, usize)> {
        let (num, den, text) = match self.peek() {
            Some(Tok::Int(_)) => {
                let (num, ntext) = self.int("coefficient")?;
                if self.eat(&Tok::Slash) {
                    let col = self.column();
                    let (den, dtext) = self.int("denominator")?;
                    if den.is_zero() {
                        return Err(Error::Parse {
                            column: col,
                            message: "zero denominator".into(),
                        });
                    }
                    (num, den, format!("{ntext}/{dtext}"))
                } else {
                    (num, BigInt::one(), ntext)
                }
            }
            Some(Tok::X) => (BigInt::one(), BigInt::one(), "1".to_string()),
            _ => return Err(self.error("expected a term")),
        };
        let num = if negative { -num } else { num };
        let coeff = self
            .field
            .from_ratio(&num, &den)
            .map_err(|_| Error::InvalidCoefficient {
                text: text.clone(),
                reason: format!("denominator vanishes in {}", self.field.descriptor()),
            })?;
        let has_star = self.eat(&Tok::Star);
        if self.eat(&Tok::X) {
            Ok((coeff, self.exponent()?))
        } else if has_star {
            Err(self.error("expected `x` after `*`"))
        } else {
            Ok((coeff, 0))
        }
    }

    fn poly(&mut self) -> Result<Polynomial<F::Elem>> {
        if self.toks.is_empty() {
            return Err(self.error("empty polynomial"));
        }
        let mut coeffs: Vec<F::Elem> = Vec::new();
        let mut negative = self.eat(&Tok::Minus);
        if !negative {
            self.eat(&Tok::Plus);
        }
        loop {
            let (c, k) = self.term(negative)?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, self.field.zero());
            }
            coeffs[k] = coeffs[k].plus(&c);
            match self.peek() {
                None => break,
                Some(Tok::Plus) => negative = false,
                Some(Tok::Minus) => negative = true,
                Some(_) => return Err(self.error("expected `+` or `-`")),
            }
            self.pos += 1;
        }
        Ok(Polynomial::new(self.field.clone(), coeffs))
    }
}

/// Parses `text` into a polynomial over `field`; coefficients are reduced
/// into the field. Errors carry a 1-based column.
pub fn parse_poly<F: Field>(text: &str, field: &F) -> Result<Polynomial<F::Elem>> {
    let lexer = lex(text)?;
    let mut parser = Parser {
        toks: &lexer.toks,
        pos: 0,
        end: lexer.end,
        field,
    };
    parser.poly()
}

/// Canonical text of a polynomial.
pub fn print_poly<E: FieldElement>(p: &Polynomial<E>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative_literal();
        let mag = if negative { c.negated() } else { c.clone() };
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if i == 0 || !mag.is_one() {
            out.push_str(&mag.value_text());
        }
        match i {
            0 => {}
            1 => out.push('x'),
            _ => {
                out.push_str("x^");
                out.push_str(&i.to_string());
            }
        }
    }
    out
}
