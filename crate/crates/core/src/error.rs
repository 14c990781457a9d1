use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials live over different variable tables")]
    TableMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("negative exponent on non-invertible variable `{0}`")]
    NegativeExponent(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("term order is not admissible")]
    InadmissibleOrder,
    #[error("term order does not end in a block equal to the kept variables")]
    OrderKeepMismatch,
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("matrix size mismatch: {0}")]
    SizeMismatch(String),
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("missing data: {0}")]
    Missing(String),
}

pub type Result<T> = std::result::Result<T, Error>;
