//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while interpreting a drawing description or building a
/// planarization from it.
#[derive(Debug, Error)]
pub enum SpecError {
    #[error("inconsistent spec: {0}")]
    InconsistentSpec(String),
    #[error("simplicity violation: {0}")]
    SimplicityViolation(String),
}

/// Errors raised by pattern queries.
#[derive(Debug, Error)]
pub enum PatternError {
    #[error("unknown edge: {0}")]
    UnknownEdge(String),
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    #[error("edge {f} does not cross edge {e}")]
    NotCrossing { e: String, f: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid heart: {0}")]
    InvalidHeart(String),
}

/// Errors raised by drawing surgery.
#[derive(Debug, Error)]
pub enum SurgeryError {
    #[error("invalid route: {0}")]
    InvalidRoute(String),
    #[error("invalid heart: {0}")]
    InvalidHeart(String),
    #[error("surgery failed: {0}")]
    SurgeryFailed(String),
}

/// Errors raised by the witness builders.
#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("fixture corrupt: {0}")]
    FixtureCorrupt(String),
    #[error("composition failed: {0}")]
    CompositionFailed(String),
}

/// Errors raised by the exhaustive enumerator.
#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("budget too large: {0}")]
    BudgetTooLarge(String),
    #[error("invalid search config: {0}")]
    InvalidConfig(String),
}
