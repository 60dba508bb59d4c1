//! Exact scalars, small dense linear algebra, and geometric sign predicates.

pub mod linalg;
pub mod predicates;
pub mod scalar;

pub use linalg::{affine_rank, det, hyperplane_normal, sign_det, solve_linear};
pub use predicates::{
    circumsphere, dist_sq, dot, in_sphere, lifted_sign, norm_sq, orientation, point_in_simplex,
    sub, Containment, Point, Sign, Sphere,
};
pub use scalar::{format_fixed, format_scalar, int, parse_scalar, ratio, Scalar};
