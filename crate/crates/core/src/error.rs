use thiserror::Error;

use crate::lie::AlgebraElement;

/// Errors raised by algebra, calculus and model operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("elements belong to different algebra contexts")]
    ContextMismatch,

    #[error("grading error: {0}")]
    Grading(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },

    #[error("generator `{0}` has no differential assignment")]
    MissingDifferential(String),

    #[error("base element is not a Maurer-Cartan point (defect has {} terms)", .defect.len())]
    NotAPoint { defect: AlgebraElement },

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
