use thiserror::Error;

/// Every domain failure surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("circles are parallel or coincide")]
    ParallelCircles,
    #[error("angles ({0}) lie outside the feasibility pyramid")]
    InfeasibleAngles(String),
    #[error("no configuration with the requested fifth angle: {0}")]
    InfeasibleParameter(String),
    #[error("configuration is degenerate: {0}")]
    DegenerateConfig(String),
    #[error("direction {0} is blocked for these angles")]
    DirectionBlocked(String),
    #[error("quadruple intersection: {0}")]
    QuadrupleBoundary(String),
    #[error("target configuration is infeasible")]
    TargetInfeasible,
    #[error("boundary tie: {0}")]
    BoundaryTie(String),
    #[error("ambiguous on boundary: {0}")]
    AmbiguousOnBoundary(String),
    #[error("side adjacent to the corner is too long (order {0} > 2)")]
    SideTooLong(usize),
    #[error("corner has positive order {0}")]
    NotOrderZero(usize),
    #[error("no quadrilateral face touches two opposite corners")]
    NoEligibleFace,
    #[error("side of order {0} is too long for a digon")]
    LongSide(usize),
    #[error("side of order {0} cannot carry a digon")]
    ForbiddenSide(usize),
    #[error("unknown variant {0}")]
    UnknownVariant(usize),
    #[error("no fixed-angle pattern for label {0}")]
    UnknownLabel(String),
    #[error("label {0} is outside the catalogued chain diagrams")]
    UncataloguedLabel(String),
    #[error("invalid label parameters: {0}")]
    InvalidLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid net: {0}")]
    InvalidNet(String),
}

pub type Result<T> = std::result::Result<T, Error>;
