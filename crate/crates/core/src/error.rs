use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id is not below the vertex count of the graph it refers to.
    VertexOutOfRange { vertex: usize, n: usize },
    /// Malformed input: self-loop, equal terminals, zero exponent, ...
    Input(String),
    /// The (p, q) pair lies outside the regime the algorithm is valid for.
    ParameterRegime { p: usize, q: usize, reason: &'static str },
    /// An instance does not satisfy a transformer's or a rule's precondition.
    Precondition(String),
    /// An exhaustive search would exceed its configured capacity.
    Capacity { needed: String, cap: String },
    /// A result failed its own post-hoc verification. Always a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::ParameterRegime { p, q, reason } => {
                write!(f, "unsupported parameter regime p={p}, q={q}: {reason}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Capacity { needed, cap } => {
                write!(f, "capacity exceeded: search needs {needed}, cap is {cap}")
            }
            Error::Internal(msg) => write!(f, "internal verification failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
