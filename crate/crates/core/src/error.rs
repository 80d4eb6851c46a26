use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by constraint checks and constructors.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, {cols} entries per row")]
    NotSquare { rows: usize, cols: usize },

    #[error("entry count {found} does not match dim {dim} (expected {expected})")]
    BadEntryCount {
        dim: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian: max |m[i][j] - conj(m[j][i])| = {deviation:e} exceeds tolerance {tol:e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("not a valid density matrix: {reasons}")]
    InvalidDensityMatrix { reasons: String },

    #[error("index out of range: {what}")]
    IndexOutOfRange { what: String },

    #[error("domain error: {what}")]
    Domain { what: String },

    #[error("internal consistency violation: {what}")]
    Internal { what: String },
}

impl Error {
    pub(crate) fn domain(what: impl Into<String>) -> Self {
        Error::Domain { what: what.into() }
    }

    pub(crate) fn index(what: impl Into<String>) -> Self {
        Error::IndexOutOfRange { what: what.into() }
    }
}
