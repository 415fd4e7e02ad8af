use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a tree degree sequence: {0}")]
    NotATreeSequence(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("Prüfer sequence has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("label {label} out of range for {n} vertices")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("index {index} out of range ({detail})")]
    IndexOutOfRange { index: usize, detail: String },
    #[error("caterpillar needs at least one spine vertex")]
    EmptySpine,
    #[error("degree sequence has no internal vertices")]
    NoInternalVertices,
    #[error("brute-force oracle limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("enumeration budget exceeded: {what} is {predicted}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        predicted: String,
        limit: String,
    },
    #[error("closed form unavailable: {0}")]
    ClosedFormUnavailable(String),
    #[error("closed form needs k in {expected}, got k = {actual}")]
    WrongK { expected: &'static str, actual: usize },
    #[error("transformation not applicable: {0}")]
    NotApplicable(String),
    #[error("closed form disagrees with caterpillar search for {0}")]
    CrossCheckMismatch(String),
}
