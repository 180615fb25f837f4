use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank error: {0}")]
    Rank(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("evaluation error: {0}")]
    Evaluation(String),
    #[error("invalid decomposition ({clause}): {detail}")]
    Decomposition { clause: String, detail: String },
    #[error("not a mass form: {0}")]
    NotMassForm(String),
    #[error("unknown format: {0}")]
    Format(String),
    #[error("fold symmetry violated: {0}")]
    Symmetry(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
