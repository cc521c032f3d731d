use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cycle detected between {0} and {1}")]
    CycleDetected(String, String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("operation requires a nonempty poset")]
    EmptyPoset,
    #[error("{0} is not strictly below {1}")]
    NotComparable(String, String),
    #[error("label {0:?} is reserved for the completion top")]
    LabelCollision(String),
    #[error("poset is not rooted")]
    NotRooted,
    #[error("target poset is not rooted")]
    TargetNotRooted,
    #[error("index {index} out of range for element of height {height}")]
    IndexOutOfRange { index: isize, height: usize },
    #[error("downset of {0:?} is not a chain")]
    NotATree(String),
    #[error("poset is not graded")]
    NotGraded,
    #[error("domain is not upward closed at {0:?}")]
    DomainNotUpClosed(String),
    #[error("search budget of {0} states exceeded")]
    SearchBudgetExceeded(u64),
    #[error("size budget of {budget} exceeded (needed {needed})")]
    SizeBudgetExceeded { budget: u64, needed: u64 },
    #[error("width is only computed for at most {limit} elements, got {size}")]
    WidthLimit { limit: usize, size: usize },
    #[error("signature {0} is not below {1}")]
    NotComparableSignatures(String, String),
    #[error("signature {0} is not allowed here")]
    ForbiddenSignature(String),
    #[error("invalid signature {0:?}")]
    BadSignature(String),
    #[error("parse error at {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
    #[error("unknown formula or logic name {0:?}")]
    UnknownName(String),
    #[error("{0} needs a numeric parameter")]
    MissingParameter(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("construction postcondition failed: {0}")]
    ConstructionPostconditionFailed(String),
    #[error("simplex set is not downward closed: missing {0}")]
    NotDownwardClosed(String),
    #[error("simplices {0} and {1} do not meet in a common face")]
    BadIntersection(String, String),
    #[error("vertices of {0} are affinely dependent")]
    AffineDependence(String),
    #[error("point lies outside the support of the complex")]
    PointOutsideSupport,
    #[error("set is not upward closed at {0:?}")]
    NotUpwardClosed(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
