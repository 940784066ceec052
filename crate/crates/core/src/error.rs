use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Input(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("not a complement: {0}")]
    NotComplement(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degree overflow: degree {degree} exceeds cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },
    #[error("singular map: {0}")]
    Singular(String),
    #[error("quotient collapses generators: {0}")]
    Collapse(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
