use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("derivation is not well defined: D({relation}) is not in the relation ideal")]
    IllDefined { relation: String },
    #[error("not verified within cap: {what} (cap {cap})")]
    CapExceeded { what: String, cap: usize },
    #[error("derivation has no local slice")]
    NoLocalSlice,
    #[error("not a slice: D({element}) = {image}, expected 1")]
    NotASlice { element: String, image: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid affine triple: {0}")]
    InvalidTriple(String),
    #[error("no modification found: {0}")]
    ModificationNotFound(String),
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
