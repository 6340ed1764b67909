use thiserror::Error;

/// Crate-wide error type. Variants carry enough context to name the failing
/// cell, assignment, or datum in user-facing messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero vector has no primitive representative")]
    ZeroVector,
    #[error("simplex vertices are affinely dependent")]
    DegenerateSimplex,
    #[error("complex is not closed under faces: cell {parent} is missing its face {face}")]
    NotClosedUnderFaces { parent: String, face: String },
    #[error("cells {a} and {b} do not intersect in a common face")]
    BadIntersection { a: String, b: String },
    #[error("fan is not sliceable: {0}")]
    FanNotSliceable(String),
    #[error("cone is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("polynomial must have at least two terms")]
    SingleTerm,
    #[error("facet assignments are path dependent at cell {cell}, component {component}")]
    IncompatibleAssignment { cell: usize, component: String },
    #[error("component count {found} over top cell {cell} does not match its weight {weight}")]
    WeightMismatch {
        cell: usize,
        weight: u64,
        found: usize,
    },
    #[error("not a refinement: {0}")]
    NotARefinement(String),
    #[error("image of cell {0} is not contained in any target cell")]
    CellImageNotContained(usize),
    #[error("complex is not a triangulation: {0}")]
    NotTriangulated(String),
    #[error("strata Betti data required for middle rows is missing")]
    MissingBettiData,
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("graph does not have genus one with multiplicative reduction")]
    NotGenusOneMultiplicative,
    #[error("graph has no independent cycles")]
    NoCycles,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported request: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
