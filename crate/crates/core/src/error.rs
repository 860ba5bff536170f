use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(String, String),

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("malformed word token `{0}`")]
    MalformedToken(String),

    #[error("letter on generator {0} is foreign to the ambient graph")]
    ForeignLetter(usize),

    #[error("expected {expected} parts, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("inflation factor must be at least 1")]
    ZeroInflation,

    #[error("operation requires a non-trivial element")]
    TrivialElement,

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("commutator needs at least two vertices, got {0}")]
    CommutatorTooShort(usize),

    #[error("repeated vertex {0} in commutator sequence")]
    RepeatedVertex(usize),

    #[error("exponent for ({vertex}, copy {copy}) is zero")]
    ZeroExponent { vertex: usize, copy: usize },

    #[error("missing exponent for ({vertex}, copy {copy})")]
    MissingExponent { vertex: usize, copy: usize },

    #[error("resource budget exceeded ({what}) while building radius {radius}; last complete radius {reached}")]
    BudgetExceeded {
        what: &'static str,
        radius: u64,
        reached: u64,
    },
}
