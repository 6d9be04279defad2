//! Exact-arithmetic verification of multivariate Cayley-Hamilton identities.
//!
//! The crate covers four layers:
//!
//! * [`algebra`]: rationals, sparse polynomials and square matrices over them;
//! * [`mixed`]: mixed discriminants and the mixed characteristic polynomial;
//! * [`objects`]: decorated permutations, paths, maps and the bijection and
//!   involutions between them, plus the two-index ("hatted") variants;
//! * [`theorems`] and [`gen`]: constraint families, their generators and the
//!   verification suites that produce [`theorems::VerificationReport`]s.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod gen;
pub mod mixed;
pub mod objects;
pub mod perm;
pub mod theorems;

pub use error::{Error, Result};
