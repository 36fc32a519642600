use crate::lattice::LatticePoint;
use thiserror::Error;

/// Errors for every fallible operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("both inputs are zero")]
    BothZero,
    #[error("the zero vector has no direction")]
    ZeroVector,
    #[error("vector ({0}, {1}) is not simple: component gcd is {2}")]
    NotSimple(i64, i64, u64),
    #[error("vectors are collinear")]
    Collinear,
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} appears more than once")]
    RepeatedVertex(LatticePoint),
    #[error("zero-length edge at vertex index {0}")]
    DegenerateEdge(usize),
    #[error("boundary is not simple: edges {0} and {1} intersect")]
    SelfIntersection(usize, usize),
    #[error("coordinate or intermediate value exceeds the supported exact range")]
    Overflow,
    #[error("chord does not stay strictly inside the polygon")]
    ChordNotInside,
    #[error("chord endpoints must be lattice points on the polygon boundary")]
    ChordEndpointsNotOnBoundary,
    #[error("chord path intersects itself")]
    ChordSelfIntersects,
    #[error("fractions are not in strictly ascending order")]
    NotOrdered,
    #[error("fractions are not Farey neighbors")]
    NotNeighbors,
    #[error("order {0} exceeds the supported maximum {1}")]
    TooLarge(u64, u64),
    #[error("triangulation fails consistency checks: {0}")]
    InconsistentTriangulation(String),
    #[error("triangle set cannot be assembled edge-by-edge into one region")]
    Disconnected,
}

pub type Result<T> = std::result::Result<T, Error>;
