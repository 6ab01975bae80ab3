use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("malformed header `{0}`")]
    MalformedHeader(String),
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("loop generator a{index} out of range for {fixed} fixed strands")]
    LoopOutOfRange { index: usize, fixed: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("cannot include a braid on {from} strands into {to} strands")]
    IncludeShrinks { from: usize, to: usize },
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("closure in the solid torus needs exactly one fixed strand, got {0}")]
    FixedStrandCount(usize),
    #[error("essentialness is only certified for links in the solid torus")]
    NotSolidTorus,
    #[error("quandle order must be at least 1")]
    EmptyQuandle,
    #[error("quandle axioms fail: {0}")]
    QuandleAxiom(crate::quandle::AxiomViolation),
    #[error("quandle table is malformed: {0}")]
    QuandleTable(String),
    #[error("brute-force quandle enumeration supports orders 1..=4, got {0}")]
    QuandleOrderOutOfRange(usize),
    #[error("unknown quandle `{0}`")]
    UnknownQuandle(String),
    #[error("projection is undefined at the origin")]
    Origin,
    #[error("stereographic projection is undefined at the north pole")]
    NorthPole,
    #[error("integration step must be positive, got {0}")]
    NonPositiveStep(f64),
    #[error("trajectory left the finite range at t = {0}")]
    NonFinite(f64),
    #[error("invalid census configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
