//! Exact computer algebra for polynomial composition identities
//! `f(g(x)) = f(x) h(x)^m`.
//!
//! The crate builds and verifies such identities over the rationals, prime
//! fields and quadratic extensions, generates the Chebyshev solutions of the
//! quadratic case, enumerates polynomial Pell solutions, exhaustively
//! searches small finite fields for further solutions, and follows Liouville
//! lambda signs along integer orbits of `g`.

pub mod algebra;
pub mod chebyshev;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod identity;
pub mod json;
pub mod liouville;
pub mod pell;
pub mod poly;
pub mod search;
pub mod sign;
pub mod text;

pub use error::{Error, Result};
