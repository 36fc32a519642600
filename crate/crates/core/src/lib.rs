//! Exact integer geometry on the Z² lattice.
//!
//! The crate ties together several routes to the same quantities so each
//! can validate the others: polygon areas from point counts and from the
//! surveyor formula, primitive cells from the extended Euclidean
//! algorithm, elementary triangulations with their combinatorial counts,
//! visibility-angle and scaling estimates of area, and Farey sequences
//! whose neighbor pairs span primitive cells.
//!
//! All geometry predicates use integer (i128-widened) arithmetic; areas
//! are carried as doubled integers so half-integer values stay exact.
//! Interior-point counting scans rows of the bounding box and runs on the
//! rayon thread pool when the default `parallel` feature is enabled;
//! disabling it yields the identical single-threaded results.

pub mod error;
pub mod farey;
pub mod formats;
pub mod lattice;
pub mod measures;
pub mod polygon;
pub mod rational;
pub mod sampling;
pub mod triangulation;

pub use error::{Error, Result};
pub use lattice::{
    extended_gcd, gcd, minimal_triangle, BasisChange, BezoutCertificate, LatticePoint,
    LatticeVector, COORD_LIMIT,
};
pub use polygon::{twice_area_of_triangle, Location, PointCounts, Polygon, TwiceArea};
pub use rational::Rational;
