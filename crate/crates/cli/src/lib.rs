//! Claim registry, batch verifier and report emitters behind the `pseff`
//! binary.

pub mod ops;
pub mod registry;
pub mod report;
pub mod runner;

pub use registry::{Claim, Expected, Provenance, Registry};
pub use runner::{run_claims, Report, RunOptions, Status};
