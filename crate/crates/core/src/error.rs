use std::fmt;

use thiserror::Error;

/// Where in an input document a parse problem was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    /// 1-based physical line of an edge-list file.
    Line(usize),
    /// 0-based position in the `edges` array of a JSON document.
    Edge(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(n) => write!(f, "line {n}"),
            Location::Edge(n) => write!(f, "edge {n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed header, {0}")]
    Header(Location),
    #[error("missing header")]
    MissingHeader,
    #[error("malformed edge, {0}")]
    Edge(Location),
    #[error("vertex index out of range, {0}")]
    OutOfRange(Location),
    #[error("duplicate edge, {0}")]
    Duplicate(Location),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("trailing content, {0}")]
    Trailing(Location),
    #[error("invalid json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("graph is unbalanced ({left} left vs {right} right vertices)")]
    Unbalanced { left: usize, right: usize },

    #[error("{what} of size {size} exceeds the enumeration cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// A computation produced a value that is impossible for correct input,
    /// such as an inexact division or mass shifted outside the vector.
    #[error("integrity violation: {0}")]
    Integrity(String),

    /// A caller broke an operation's precondition.
    #[error("invalid argument: {0}")]
    Contract(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
