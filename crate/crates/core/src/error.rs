use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("complex has no facets")]
    EmptyComplex,
    #[error("malformed face: {0}")]
    MalformedFace(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("not a face of the complex: {0}")]
    NotAFace(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("label `{0}` is already a vertex of the complex")]
    LabelClash(String),
    #[error("complex has no boundary")]
    NoBoundary,
    #[error("complex is not pure")]
    NotPure,
    #[error("zero-dimensional complexes are not classified")]
    ZeroDimensional,
    #[error("not a clique: {0}")]
    NotAClique(String),
    #[error("banner number undefined: link of face {failing_face:?} is neither banner nor C3")]
    UndefinedBannerNumber { failing_face: Vec<String> },
    #[error("not a pseudomanifold")]
    NotPseudomanifold,
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("invalid shelling seed: {0}")]
    BadSeed(String),
    #[error("shelling search exceeded its budget of {0} node expansions")]
    Timeout(u64),
    #[error("endpoints coincide")]
    SameVertex,
    #[error("graph has {n} vertices; need at least {}", k + 1)]
    TooSmall { n: usize, k: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("every vertex is adjacent to `{0}`")]
    EmptyOutside(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("report: {0}")]
    Report(String),
}
