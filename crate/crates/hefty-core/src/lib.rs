//! Exact-arithmetic enumeration of k-hefty simplices.
//!
//! A d-simplex with vertices in a finite point set is *k-hefty* if its
//! circumscribed sphere strictly encloses exactly k other points of the set.
//! This crate enumerates such simplices for Euclidean, weighted, and spherical
//! point sets and verifies, by exhaustive search, that they cover space the
//! predicted number of times: `C(d+k, d)` globally and `C(d+k-1, d-1)` locally
//! around a vertex.
//!
//! Everything is computed over arbitrary-precision rationals. There is no
//! floating point in any predicate, so "exactly k points inside" is a
//! well-defined, reproducible statement.
//!
//! Module map:
//! - [`numeric`]: scalars, small exact linear algebra, and the sign predicates
//!   (orientation, in-sphere, point-in-simplex).
//! - [`euclidean`]: finite point sets in R^d, heft enumeration, covering
//!   queries, Tukey depth / k-hull membership, and figure generators.
//! - [`weighted`]: weighted points, power distance, bisectors, orthocenters.
//! - [`spherical`]: finite sets on S^d, k-balancedness, stereographic
//!   transfer, spherical heft.
//! - [`apps`]: k-facets, arrangement levels and chambers, hemisphere censuses,
//!   hypersimplex volumes and the Eulerian-number identities, order-n mosaics.

pub mod apps;
pub mod error;
pub mod euclidean;
pub mod numeric;
pub mod spherical;
pub mod weighted;

pub use error::{Error, GenericityWitness};
pub use euclidean::{CoverReport, HeftySimplex, PointSet};
pub use numeric::{Containment, Point, Scalar, Sign, Sphere};
