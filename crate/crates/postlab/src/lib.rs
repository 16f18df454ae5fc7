//! Analysis of Boolean circuits over restricted gate bases.
//!
//! The library identifies the clone generated by a gate basis, places it in
//! the lattice of Boolean clones, classifies the complexity of equivalence,
//! isomorphism, frozen-variable, audit, unique-satisfiability and
//! enumeration problems for circuits over that basis, runs the tractable
//! decision algorithms directly, enumerates solutions with polynomial delay
//! where possible, and constructs the hardness-reduction gadgets as
//! verifiable instances.

pub mod boolfn;
pub mod circuit;
pub mod classify;
pub mod clones;
pub mod decide;
pub mod enumerate;
pub mod gadgets;
pub mod generator;

pub use boolfn::{SeparationDegree, TruthTable, MAX_ARITY};
pub use circuit::{Assignment, Base, Circuit};
pub use classify::{classify, ComplexityLabel, ComplexityVerdict, Problem};
pub use clones::CloneName;

/// Variable cap for exhaustive assignment scans; overridable through the
/// `POSTLAB_BRUTE_LIMIT` environment variable (test tooling only).
pub fn brute_limit() -> usize {
    std::env::var("POSTLAB_BRUTE_LIMIT")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(20)
}
