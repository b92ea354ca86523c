use laurent::LaurentError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutationError {
    #[error("label {0} is not a mutable index")]
    NotMutable(i32),
    #[error("unknown label {0}")]
    UnknownLabel(i32),
    #[error("malformed matrix: {0}")]
    Shape(String),
    #[error("principal part is not skew-symmetrizable")]
    NotSkewSymmetrizable,
    #[error("exchange relation at {k} is not degree-homogeneous: {plus} vs {minus}")]
    HomogeneityViolation { k: i32, plus: String, minus: String },
    #[error("quiver encoding mismatch: {0}")]
    EncodingMismatch(String),
    #[error("belt base rejected: {0}")]
    NotBipartite(String),
    #[error("cluster entry at {0} is zero")]
    ZeroClusterEntry(i32),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("bad seed json: {0}")]
    Json(String),
}
