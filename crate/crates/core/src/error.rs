//! Error types shared across the crate.

use thiserror::Error;

/// Failures while constructing graphs, set systems, or point sets.
#[derive(Debug, Error, PartialEq)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("set system member {index} is empty")]
    EmptySetMember { index: usize },
    #[error("element {element} outside ground set [{ground}]")]
    ElementOutOfRange { element: usize, ground: usize },
    #[error("point dimension {got} does not match requested dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point {index} is not on the unit sphere (norm {norm})")]
    NotOnSphere { index: usize, norm: f64 },
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0} is forbidden")]
    LoopEdge(usize),
}

/// Failures of the exact solvers.
#[derive(Debug, Error, PartialEq)]
pub enum SolveError {
    #[error("coloring covers {got} vertices but graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error("no proper {palette}-coloring exists")]
    Infeasible { palette: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("budget exhausted; chromatic number within [{lo}, {hi}]")]
    Budget { lo: u32, hi: u32 },
    #[error("budget exhausted during search")]
    BudgetExhausted,
    #[error("budget exhausted; best verified upper bound {upper:?}")]
    BudgetCircular {
        upper: Option<crate::solve::RationalValue>,
    },
    #[error("budget exhausted; best local value so far {best:?}")]
    BudgetLocal { best: Option<u32> },
}

/// Failures of the defect computations.
#[derive(Debug, Error, PartialEq)]
pub enum DefectError {
    #[error("precondition violated: the pairwise disjointness condition fails")]
    PreconditionViolated,
}

/// Failures of the witness searches.
#[derive(Debug, Error, PartialEq)]
pub enum WitnessError {
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error("coloring covers {got} vertices but graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("color sets overlap")]
    OverlappingColorSets,
    #[error("color {color} outside palette [{palette}]")]
    ColorOutOfPalette { color: u32, palette: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no colorful bipartite witness for the requested bipartition")]
    NoWitness,
    #[error("partition re-verification failed: {0}")]
    VerificationFailed(String),
    #[error("budget exhausted during witness search")]
    Budget,
}

/// Failures while reading or writing graph and report files.
#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
