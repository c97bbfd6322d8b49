//! Exact matrix and pseudodifferential-symbol realizations of the
//! superconformal algebras K(2), K'(4)-hat and CK6, together with a
//! verification engine that machine-checks their structure: field-family
//! closure, the sp(2|2N) embedding, cocycle values, module actions and the
//! generation dichotomy for N = 1..4.
//!
//! All arithmetic is exact over the Gaussian rationals.

pub mod clifford;
pub mod error;
pub mod realizations;
pub mod scalar;
pub mod supermatrix;
pub mod symbols;
pub mod verify;
pub mod weyl;

pub use error::SuperweylError;
