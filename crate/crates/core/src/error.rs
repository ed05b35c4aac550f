use thiserror::Error;

/// Every failure the engine can report. Variant names double as the error
/// names surfaced by the command line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {0} is not a half-integer")]
    NonHalfIntegerExponent(String),
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("q -> 1 limit does not exist: {0}")]
    LimitDiverges(String),
    #[error("invalid evaluation point: {0}")]
    InvalidPoint(String),
    #[error("invalid rank: m = {m}, n = {n}")]
    InvalidRank { m: i64, n: i64 },
    #[error("weights belong to different algebras")]
    KindMismatch,
    #[error("bracket argument {0} is not of the form integer + integer*alpha")]
    NonRepresentableBracketArgument(String),
    #[error("bracket [(rho, beta)] vanishes for beta = {0}")]
    ZeroDenominatorBracket(String),
    #[error("classical dimension {0} is not a positive integer")]
    NonIntegralDimension(String),
    #[error("Young diagram {0} is not allowable for gl({1}|{2})")]
    NotAllowable(String, usize, usize),
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("invariant violated by term {index}: {reason}")]
    InvariantViolation { index: usize, reason: String },
    #[error("weight literal: {0}")]
    WeightLiteral(String),
    #[error("could not resolve the l-product nesting: {0}")]
    IndexNestingUnresolved(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    /// Stable variant name, used in command line diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NonHalfIntegerExponent(_) => "NonHalfIntegerExponent",
            Error::PoleAtPoint => "PoleAtPoint",
            Error::LimitDiverges(_) => "LimitDiverges",
            Error::InvalidPoint(_) => "InvalidPoint",
            Error::InvalidRank { .. } => "InvalidRank",
            Error::KindMismatch => "KindMismatch",
            Error::NonRepresentableBracketArgument(_) => "NonRepresentableBracketArgument",
            Error::ZeroDenominatorBracket(_) => "ZeroDenominatorBracket",
            Error::NonIntegralDimension(_) => "NonIntegralDimension",
            Error::NotAllowable(..) => "NotAllowable",
            Error::SchemaError(_) => "SchemaError",
            Error::InvariantViolation { .. } => "InvariantViolation",
            Error::WeightLiteral(_) => "WeightLiteral",
            Error::IndexNestingUnresolved(_) => "IndexNestingUnresolved",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
