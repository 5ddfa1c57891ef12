use core::fmt;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph was built from inconsistent data.
    InvalidGraph(&'static str, Vertex, Vertex),
    /// A timeline entry lies outside the vertex range or the lifetime.
    MalformedTimeline { v: Vertex, a: u32, b: u32 },
    InvalidBudget(&'static str),
    InvalidPermutation,
    /// The instance exceeds a configured size cap; the solver did not run.
    Refused { what: &'static str, size: u64, cap: u64 },
    /// The solver does not handle this budget variant or objective.
    Unsupported(&'static str),
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGraph(msg, u, v) => write!(f, "invalid graph: {msg} ({u}, {v})"),
            Error::MalformedTimeline { v, a, b } => {
                write!(f, "malformed timeline entry ({v}, {a}, {b})")
            }
            Error::InvalidBudget(msg) => write!(f, "invalid budget: {msg}"),
            Error::InvalidPermutation => f.write_str("layer permutation is not a bijection"),
            Error::Refused { what, size, cap } => {
                write!(f, "refused: {what} size {size} exceeds cap {cap}")
            }
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
