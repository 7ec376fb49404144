use thiserror::Error;

use crate::distinguishing::DistinguishingResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0} rejected; graphs are simple")]
    LoopRejected(usize),

    #[error("graph on {n} vertices exceeds the size cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },

    #[error("automorphism group of order {order} was not enumerated (cap {cap})")]
    GroupNotEnumerated { order: u128, cap: usize },

    #[error("automorphism group order overflows u128")]
    OrderOverflow,

    #[error("product power must be at least 1")]
    InvalidPower,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph has no edges")]
    NoEdges,

    #[error("search budget exceeded")]
    BudgetExceeded {
        /// Best certified upper bound found before giving up.
        best: Option<Box<DistinguishingResult>>,
    },

    #[error("label range mismatch: {0}")]
    LabelRangeMismatch(String),

    #[error("{x}{y} is not an edge or loop of the Boolean square")]
    NotBooleanSquareEdge { x: usize, y: usize },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("parse error at line {line}, byte {byte}: {msg}")]
    Parse { line: usize, byte: usize, msg: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn parse(line: usize, byte: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            byte,
            msg: msg.into(),
        }
    }
}
