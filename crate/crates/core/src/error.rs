use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),

    #[error("braid index {index} out of range for {strands} strands")]
    BraidIndex { index: i64, strands: usize },

    #[error("invalid curve shape: {0}")]
    InvalidShape(String),

    /// Curve or surface data violate one of the numerical relations every
    /// smooth generic cover must satisfy.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    /// A local splitting constraint failed; `clause` names the failed condition.
    #[error("local splitting violated ({clause}): {detail}")]
    Splitting { clause: &'static str, detail: String },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::Numeric(_))
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
