//! The verification engine: span membership, bracket tables with
//! structure-constant fitting, cocycle extraction, closure checks, and
//! the generation search over the seed subalgebras.

pub mod axioms;
pub mod consistency;
pub mod export;
pub mod generate;
pub mod span;
pub mod suites;
pub mod table;
