use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("coefficient not in field: {0}")]
    NotInField(String),
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("computation budget exceeded (degree {degree}, {pairs} pairs processed)")]
    BudgetExceeded { degree: u32, pairs: usize },
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a complete intersection: {0}")]
    NotCompleteIntersection(String),
    #[error("the center lies on the variety")]
    CenterOnVariety,
    #[error("the variety has no section ring profile")]
    MissingProfile,
    #[error("the variety has no parametrization")]
    NoParametrization,
    #[error("degenerate random choice after {retries} retries: {what}")]
    Degenerate { what: String, retries: usize },
    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("Betti table is incomplete")]
    IncompleteTable,
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Error {
        Error::InvalidInput(msg.into())
    }
}
