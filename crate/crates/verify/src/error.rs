use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("assigned function for label {0} vanishes where it is inverted")]
    Vanishing(i32),
    #[error("no function assigned to label {0}")]
    Unassigned(i32),
    #[error("variable {0} is not a seed variable")]
    ForeignVariable(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    G2(#[from] g2rep::G2Error),
    #[error(transparent)]
    Mutation(#[from] mutation::MutationError),
    #[error(transparent)]
    Laurent(#[from] laurent::LaurentError),
}
