use thiserror::Error;

/// Errors reported by the library operations.
///
/// Unsatisfied theorem preconditions are deliberately *not* errors: a
/// conditional check with a false antecedent is reported as a vacuous pass
/// in its [`crate::suite::InequalityReport`].
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: deviation {deviation:.3e} exceeds {allowed:.3e}")]
    NotHermitian { deviation: f64, allowed: f64 },

    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("ker(T) != ker(T*): no finite alpha/beta certificate exists")]
    KernelMismatch,

    #[error("the zero operator admits no alpha/beta certificate")]
    ZeroOperator,

    #[error("alpha = 0: the right factor of the stated norm form does not exist")]
    AlphaZero,

    #[error("range containment fails: T is not majorized by S")]
    NotMajorized,

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("invalid ensemble spec: {0}")]
    BadSpec(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("entry ({row},{col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
