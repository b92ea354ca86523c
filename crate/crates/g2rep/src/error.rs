use laurent::LaurentError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum G2Error {
    #[error("word {0:?} is not reduced")]
    NonReduced(Vec<u8>),
    #[error("generator index must be 1 or 2, got {0}")]
    BadIndex(u8),
    #[error("torus parameter must be invertible")]
    ZeroParameter,
    #[error("unknown function {0}")]
    UnknownFunction(String),
    #[error("not a weight vector: {0}")]
    NotHomogeneous(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}
