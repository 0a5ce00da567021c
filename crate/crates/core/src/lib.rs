//! Exact finite-dimensional computations with corings over algebras over the
//! rationals: comatrix corings, infinite comatrix corings, Galois and descent
//! checks for families of comodules, and the graded coring `AG`.

pub mod algebra;
pub mod comatrix;
pub mod coring;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod graded;
pub mod report;

pub use error::{Error, Result};
pub use exactlin::{Matrix, Rational, Subspace};
pub use report::ValidationReport;
