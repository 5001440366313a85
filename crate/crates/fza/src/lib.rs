//! Fuzzy finite automata over complete residuated lattices: exact
//! truth-value algebra, fuzzy relation calculus, determinization and
//! simultaneous state reduction, and a small file format / CLI on top.
//!
//! All arithmetic is exact (arbitrary-precision rationals or chain
//! indices); there are no floating-point values anywhere in the core.

pub mod automaton;
pub mod cli;
pub mod determinize;
pub mod dot;
pub mod format;
pub mod fuzzrel;
pub mod invariants;
pub mod lattice;
pub mod report;

pub use automaton::{Cdfa, FuzzyAutomaton, Word};
pub use determinize::{DetMethod, DetResult};
pub use fuzzrel::{FuzzyRelation, FuzzySet};
pub use invariants::{Budget, QuasiOrderReport};
pub use lattice::{LatticeKind, TruthValue};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum FzaError {
    #[error("value is not a member of the lattice carrier: {0}")]
    IncompatibleValue(String),
    #[error("lattice kind mismatch")]
    KindMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("relation is not a fuzzy quasi-order")]
    NotQuasiOrder,
    #[error("unknown alphabet symbol `{0}`")]
    UnknownSymbol(String),
    #[error("budget exceeded: {what} limit {limit}")]
    BudgetExceeded { what: &'static str, limit: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("syntax error on line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error("validation failed:\n{}", .0.join("\n"))]
    Invalid(Vec<String>),
}

pub type Result<T> = std::result::Result<T, FzaError>;
