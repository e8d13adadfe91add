use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {point} is outside the ground set of size {size}")]
    PointOutOfRange { point: usize, size: usize },
    #[error("map is not injective: two points are sent to {target}")]
    NotInjective { target: usize },
    #[error("point {0} appears twice in the domain")]
    DuplicateDomainPoint(usize),
    #[error("ground set of size {size} exceeds the limit of {limit}")]
    GroundTooLarge { size: usize, limit: usize },
    #[error("unknown point label {0:?}")]
    UnknownLabel(String),
    #[error("element {0} does not belong to the groupoid")]
    NotInGroupoid(String),
    #[error("degree {degree} out of range 1..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("polynomial is not invariant under the groupoid")]
    NotInvariant,
    #[error("series fit failed: coefficient of Z^{degree} is {found}, expected 0")]
    FitMismatch { degree: usize, found: String },
    #[error("denominator does not divide exactly")]
    InexactDivision,
    #[error("guard exceeded: {what} is {size}, limit {limit}; pass a guard override to force")]
    GuardExceeded { what: &'static str, size: usize, limit: usize },
    #[error("signature mismatch between structures")]
    SignatureMismatch,
    #[error("tuple {tuple:?} does not match arity {arity} of relation {relation}")]
    BadTuple { relation: String, arity: usize, tuple: Vec<usize> },
    #[error("family has {found} members but the predicted rank is {expected}")]
    RankMismatch { found: usize, expected: usize },
    #[error("truncation {truncation} is smaller than degree {degree}")]
    TruncationTooSmall { truncation: usize, degree: usize },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
