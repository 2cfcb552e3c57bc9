use alloc::string::String;
use core::fmt;

use crate::formulas::SequenceId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// A shape grammar error with the byte offset where parsing stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arithmetic overflow in exact count")]
    Overflow,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid lattice rectangle [{a},{b}]x[{c},{d}]: need a < b and c < d")]
    InvalidRect { a: i64, b: i64, c: i64, d: i64 },
    #[error("invalid cell region: {0}")]
    InvalidRegion(&'static str),
    #[error("region is empty")]
    EmptyRegion,
    #[error("result is not row-convex and cannot be stored as a cell region")]
    NotRowConvex,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error {0}")]
    Parse(ParseError),
    #[error("{sequence} is not defined at n = {n}")]
    OutOfDomain { sequence: SequenceId, n: u64 },
    #[error("closed forms of {sequence} disagree at n = {n}")]
    FormDisagreement { sequence: SequenceId, n: u64 },
    #[error("{0}")]
    NotInDomain(String),
    #[error("unknown bijection '{0}'")]
    UnknownMap(String),
    #[error("n = {n} exceeds the exhaustive enumeration guard of {limit}")]
    GuardExceeded { n: u64, limit: u64 },
    #[error("b-file line {line}: {message}")]
    MalformedLine { line: usize, message: String },
    #[error("b-file line {line}: index {index} does not increase")]
    NonMonotonicIndex { line: usize, index: i64 },
    #[error("invalid OEIS id '{0}'")]
    InvalidSequenceId(String),
    #[error("sequence {0} is not one of the identified sequences")]
    UnknownSequence(String),
    #[error("{oeis} is not paired with {sequence}")]
    RejectedPairing { oeis: String, sequence: SequenceId },
    #[error("{oeis} has no term for n = {n}")]
    InsufficientTerms { oeis: String, n: u64 },
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
