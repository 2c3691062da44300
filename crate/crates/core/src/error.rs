use thiserror::Error;

/// Errors produced by the library and the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty family")]
    EmptyFamily,
    #[error("ground set has {0} elements; at most 64 are supported")]
    GroundTooLarge(usize),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element index {0} is outside the ground set")]
    ElementOutOfRange(usize),
    #[error("subset is not contained in the ground set")]
    SubsetOutOfRange,
    #[error("non-disjoint grounds: `{0}` appears in more than one part")]
    NonDisjointGrounds(String),
    #[error("not a matroid: basis exchange axiom fails")]
    NotMatroid,
    #[error("delta-matroid axiom violated upstream")]
    AxiomViolated,
    #[error("not a delta-matroid")]
    NotDeltaMatroid,
    #[error("not binary")]
    NotBinary,
    #[error("handle slide needs two distinct elements")]
    SameElement,
    #[error("deleted and contracted sets overlap")]
    MinorOverlap,
    #[error("no spanning tree: graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("target is not a basis of the matroid")]
    TargetNotBasis,
    #[error("no reduction found")]
    NoReduction,
    #[error("reduction invariant broken: {0}")]
    Invariant(&'static str),
    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("census ground size must be between 1 and 4, got {0}")]
    CensusRange(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
