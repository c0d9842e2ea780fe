use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid code {code:?}: {reason}")]
    InvalidCode { code: String, reason: String },
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(String),
    #[error("invalid composition {0:?}")]
    InvalidComposition(String),
    #[error("invalid partition {0:?}")]
    InvalidPartition(String),
    #[error("invalid sign word {0:?}")]
    InvalidSignWord(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("expected a tree, got forest {0:?}")]
    NotATree(String),
    #[error("permutation {0} is not the maximal linear extension of any forest")]
    NotMaximal(String),
    #[error("size {size} exceeds the cost guard {limit}")]
    CostGuard { size: usize, limit: usize },
    #[error("Laurent window overflow (window {0})")]
    Overflow(i32),
    #[error("division is not exact")]
    InexactDivision,
    #[error("element is not in the image: {0}")]
    NotInImage(String),
    #[error("undefined operation: {0}")]
    Undefined(String),
}

impl Error {
    pub(crate) fn code(code: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidCode {
            code: code.into(),
            reason: reason.into(),
        }
    }
}
