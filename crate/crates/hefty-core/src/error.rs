//! Error and witness types shared across the crate.
//!
//! Degeneracies are never perturbed away: any Zero sign where an operation
//! assumes genericity is reported as a structured error carrying the
//! offending tuple, so callers can see exactly which points misbehave.

use std::fmt;

use crate::numeric::Point;

/// Witness for a genericity violation, identified by point indices into the
/// set that was being examined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenericityWitness {
    /// d+1 points on a common hyperplane.
    AffinelyDependent(Vec<usize>),
    /// d+2 points on a common (d-1)-sphere.
    Cospherical(Vec<usize>),
    /// d+2 weighted points with a degenerate common orthosphere test.
    OrthoDegenerate(Vec<usize>),
    /// d+1 spherical points on a common great-subsphere.
    LinearlyDependent(Vec<usize>),
    /// Two points (or weighted-point locations) coincide.
    DuplicatePoint(usize, usize),
    /// A spanning hyperplane on the sphere passes through the origin.
    HyperplaneThroughOrigin(Vec<usize>),
    /// More than d hyperplanes of an arrangement pass through one point.
    ConcurrentHyperplanes(Vec<usize>),
}

impl fmt::Display for GenericityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AffinelyDependent(ix) => write!(f, "affinely dependent tuple {ix:?}"),
            Self::Cospherical(ix) => write!(f, "cospherical tuple {ix:?}"),
            Self::OrthoDegenerate(ix) => write!(f, "degenerate orthosphere tuple {ix:?}"),
            Self::LinearlyDependent(ix) => write!(f, "linearly dependent tuple {ix:?}"),
            Self::DuplicatePoint(i, j) => write!(f, "duplicate points {i} and {j}"),
            Self::HyperplaneThroughOrigin(ix) => {
                write!(f, "spanning hyperplane of {ix:?} passes through the origin")
            }
            Self::ConcurrentHyperplanes(ix) => {
                write!(f, "hyperplanes {ix:?} pass through a common point")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate simplex: {}", format_points(.points))]
    DegenerateSimplex { points: Vec<Point> },

    #[error("singular linear system")]
    SingularMatrix,

    #[error("index {index} out of range for set of size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("vertex indices must be distinct, got repeated {0}")]
    RepeatedIndex(usize),

    #[error("genericity violation: {0}")]
    NonGeneric(GenericityWitness),

    #[error("query coincides with set point {0}")]
    QueryAtSetPoint(usize),

    #[error("k = {k} out of range, maximum is {max}")]
    KOutOfRange { k: usize, max: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("local covering count failed to stabilize at vertex {vertex}: {detail}")]
    StabilizationFailure { vertex: usize, detail: String },

    #[error("operation unsupported in dimension {0}")]
    UnsupportedDimension(usize),

    #[error("bounding box of half-width {half_width} too small: vertex {vertex} falls outside")]
    BoxTooSmall { half_width: String, vertex: String },

    #[error("line passes through the boundary of facet {indices:?}")]
    LineThroughFacetBoundary { indices: Vec<usize> },

    #[error("generator failed after {attempts} attempts: {detail}")]
    GeneratorFailure { attempts: usize, detail: String },
}

fn format_points(points: &[Point]) -> String {
    let inner: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    inner.join(", ")
}
