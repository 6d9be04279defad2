//! Exact scalar, polynomial and matrix arithmetic.

pub mod matrix;
pub mod parse;
pub mod poly;

pub use matrix::{MatrixFile, RingMatrix};
pub use parse::parse_entry;
pub use poly::{rational_to_string, Monomial, Poly, Rational, Var};
