use thiserror::Error;

/// Parse failure, always tied to the 1-based line where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("missing header line")]
    MissingHeader,
    #[error("malformed line: {0}")]
    MalformedLine(String),
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(usize),
    #[error("element id {0} out of range")]
    ElementOutOfRange(usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate threshold for vertex {0}")]
    DuplicateThreshold(usize),
    #[error("missing threshold for vertex {0}")]
    MissingThreshold(usize),
    #[error("threshold of vertex {0} must be at least 1")]
    ThresholdTooSmall(usize),
    #[error("header declares {expected} {what}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex {vertex} out of range for instance with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid multi-hitting set instance: {0}")]
    InvalidMhs(String),
    #[error("supplied set is not a vertex cover")]
    NotAVertexCover,
    #[error("supplied seed set is not a target set")]
    NotATargetSet,
    #[error("set cover instance is infeasible: element {0} is in no subset")]
    Uncoverable(usize),
    #[error("instance size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("dynamic programming table would need {0} cells")]
    TableTooLarge(u128),
    #[error("instance has vertices with threshold above degree; reduction required")]
    ReductionRequired,
    #[error("generator constraints unsatisfiable: {0}")]
    Generator(String),
    #[error("deadline exceeded")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, Error>;
