use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("operands live over different variable sets")]
    VarMismatch,
    #[error("inexact division: nonzero remainder")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable {0} is zero but occurs with a negative exponent")]
    ZeroToNegativePower(String),
    #[error("no value supplied for variable {0}")]
    MissingValue(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
}
