//! Super-regularized infinite products over primes, primes in arithmetic
//! progressions, prime ideals of number fields, and closed points of curves
//! over finite fields.

pub mod arith;
pub mod cli;
pub mod dirichlet;
pub mod error;
pub mod funcfield;
pub mod hurwitz;
pub mod lfunc;
pub mod numberfield;
pub mod progressions;
pub mod report;
pub mod series;
pub mod special;

pub use error::{Error, Result};
