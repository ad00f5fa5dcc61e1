use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("unsupported relation: {0}")]
    UnsupportedRelation(String),
    #[error("algebra may be infinite dimensional (no vanishing degree up to {0})")]
    InfiniteDimensional(usize),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("decomposition inconclusive: {0}")]
    DecompositionInconclusive(String),
    #[error("isomorphism test inconclusive")]
    IsoInconclusive,
    #[error("resolution did not terminate within {0} steps")]
    ResolutionCap(usize),
    #[error("node cap {0} exceeded during enumeration")]
    NodeCap(usize),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("lookup failed: {0}")]
    Lookup(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
