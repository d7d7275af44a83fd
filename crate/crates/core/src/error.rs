use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("zero vector has no spherical direction")]
    ZeroVector,
    #[error("complex is not a pseudomanifold")]
    NotPseudomanifold,
    #[error("face {0:?} is not contained in any facet")]
    FaceNotFound(Vec<usize>),
    #[error("star of face {face:?} collapses under projection (facet {facet})")]
    DegenerateStar { face: Vec<usize>, facet: usize },
    #[error("no generic probe found after {attempts} attempts")]
    NonGenericProbe { attempts: usize },
    #[error("ridge {0} has a single incident facet")]
    BoundaryRidge(usize),
    #[error("no consistent co-orientation across ridge {ridge}")]
    NonOrientableLocally { ridge: usize },
    #[error("hull construction failed: {0}")]
    HullFailure(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("lineality space leaves no cross-section")]
    DegenerateSection,
    #[error("probe point lies inside the open cone")]
    InputInsideS,
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("bad vertex index {index} at line {line}")]
    BadIndex { line: usize, index: usize },
    #[error("bad rational at line {line}, column {col}")]
    BadRational { line: usize, col: usize },
    #[error("bad generator parameters: {0}")]
    BadParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
