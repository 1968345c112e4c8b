//! Balanced sequences built by colouring standard Sturmian sequences with
//! constant gap sequences, and exact computation of their critical exponent
//! and asymptotic critical exponent.
//!
//! The layers build on each other:
//!
//! - [`words`]: finite words and brute-force oracles
//! - [`quadratic`]: exact arithmetic in a real quadratic field
//! - [`sturmian`]: slopes, convergents, bispecials and return words
//! - [`constant_gap`]: the colouring sequences
//! - [`colouring`]: the balanced sequence and its structural formulas
//! - [`critexp`]: the exponent computation itself

pub mod colouring;
pub mod constant_gap;
pub mod critexp;
mod error;
pub mod quadratic;
pub mod sturmian;
pub mod words;

pub use error::{Error, Result};
