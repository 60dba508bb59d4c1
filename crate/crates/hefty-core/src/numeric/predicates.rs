//! Geometric sign predicates over exact rational points.
//!
//! All predicates are deterministic pure functions; repeated evaluation gives
//! bit-identical results. Zero signs are surfaced, never hidden: callers that
//! assume genericity turn them into structured errors.

use std::fmt;

use num::{Signed, Zero};

use super::linalg::{sign_det, solve_linear};
use super::scalar::{format_scalar, Scalar};
use crate::error::Error;

/// Trichotomous sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(s: &Scalar) -> Sign {
        if s.is_zero() {
            Sign::Zero
        } else if s.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.as_i8() * rhs.as_i8() {
            0 => Sign::Zero,
            1 => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

/// A point of R^d with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<Scalar>,
}

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Point {
        assert!(!coords.is_empty(), "points must have dimension at least 1");
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Point {
        Point::new(coords.iter().map(|&c| super::scalar::int(c)).collect())
    }

    pub fn origin(dim: usize) -> Point {
        Point::new(vec![Scalar::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.coords.iter().map(format_scalar).collect();
        write!(f, "({})", inner.join(", "))
    }
}

/// A (d-1)-sphere: center plus squared radius. The squared radius may be
/// negative in weighted contexts (imaginary orthosphere).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sphere {
    pub center: Point,
    pub squared_radius: Scalar,
}

/// Where a query point sits relative to a closed simplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Interior,
    Boundary,
    Outside,
}

pub fn sub(a: &Point, b: &Point) -> Vec<Scalar> {
    a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm_sq(a: &[Scalar]) -> Scalar {
    dot(a, a)
}

pub fn dist_sq(a: &Point, b: &Point) -> Scalar {
    norm_sq(&sub(a, b))
}

fn check_dims(points: &[&Point], dim: usize) -> Result<(), Error> {
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
    }
    Ok(())
}

/// Orientation of d+1 points in R^d: the sign of the determinant of edge
/// vectors from the first point. Zero iff the points are affinely dependent.
pub fn orientation(points: &[Point]) -> Result<Sign, Error> {
    let d = points
        .first()
        .ok_or(Error::DimensionMismatch { expected: 1, got: 0 })?
        .dim();
    if points.len() != d + 1 {
        return Err(Error::DimensionMismatch {
            expected: d + 1,
            got: points.len(),
        });
    }
    check_dims(&points.iter().collect::<Vec<_>>(), d)?;
    let rows: Vec<Vec<Scalar>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    Ok(sign_det(&rows))
}

/// Position of `query` relative to the circumscribed sphere of the d-simplex:
/// Positive strictly inside, Zero on the sphere, Negative strictly outside.
///
/// Computed as the sign of the lifted (d+1)x(d+1) determinant with rows
/// `(p_i - q, |p_i - q|^2)`, corrected by the simplex orientation and the
/// parity of d so that the result matches the explicit circumsphere test.
pub fn in_sphere(simplex: &[Point], query: &Point) -> Result<Sign, Error> {
    let d = query.dim();
    if simplex.len() != d + 1 {
        return Err(Error::DimensionMismatch {
            expected: d + 1,
            got: simplex.len(),
        });
    }
    check_dims(&simplex.iter().collect::<Vec<_>>(), d)?;
    let orient = orientation(simplex)?;
    if orient.is_zero() {
        return Err(Error::DegenerateSimplex {
            points: simplex.to_vec(),
        });
    }
    let lifted = lifted_sign(simplex, query);
    let parity = if d % 2 == 0 { Sign::Positive } else { Sign::Negative };
    Ok(lifted * orient * parity)
}

/// Sign of the lifted determinant with rows `(p_i - q, |p_i - q|^2)`.
/// Zero iff the d+2 points (simplex plus query) are cospherical or the
/// simplex is degenerate.
pub fn lifted_sign(simplex: &[Point], query: &Point) -> Sign {
    let rows: Vec<Vec<Scalar>> = simplex
        .iter()
        .map(|p| {
            let mut row = sub(p, query);
            row.push(norm_sq(&row));
            row
        })
        .collect();
    sign_det(&rows)
}

/// The unique sphere through d+1 affinely independent points, by exact
/// linear solve: `2 <c, p_i - p_0> = |p_i|^2 - |p_0|^2`.
pub fn circumsphere(simplex: &[Point]) -> Result<Sphere, Error> {
    let d = simplex
        .first()
        .ok_or(Error::DimensionMismatch { expected: 1, got: 0 })?
        .dim();
    if simplex.len() != d + 1 {
        return Err(Error::DimensionMismatch {
            expected: d + 1,
            got: simplex.len(),
        });
    }
    check_dims(&simplex.iter().collect::<Vec<_>>(), d)?;
    let base = &simplex[0];
    let base_norm = norm_sq(base.coords());
    let matrix: Vec<Vec<Scalar>> = simplex[1..]
        .iter()
        .map(|p| sub(p, base).into_iter().map(|c| &c + &c).collect())
        .collect();
    let rhs: Vec<Scalar> = simplex[1..]
        .iter()
        .map(|p| norm_sq(p.coords()) - &base_norm)
        .collect();
    let center = solve_linear(&matrix, &rhs).map_err(|e| match e {
        Error::SingularMatrix => Error::DegenerateSimplex {
            points: simplex.to_vec(),
        },
        other => other,
    })?;
    let center = Point::new(center);
    let squared_radius = dist_sq(&center, base);
    Ok(Sphere {
        center,
        squared_radius,
    })
}

/// Classify `query` against the closed simplex by the d+1 orientation signs
/// obtained by substituting it for each vertex in turn.
pub fn point_in_simplex(simplex: &[Point], query: &Point) -> Result<Containment, Error> {
    let reference = orientation(simplex)?;
    if reference.is_zero() {
        return Err(Error::DegenerateSimplex {
            points: simplex.to_vec(),
        });
    }
    check_dims(&[query], query.dim().max(1))?;
    if query.dim() != simplex[0].dim() {
        return Err(Error::DimensionMismatch {
            expected: simplex[0].dim(),
            got: query.dim(),
        });
    }
    let mut saw_zero = false;
    let mut working = simplex.to_vec();
    for i in 0..simplex.len() {
        working[i] = query.clone();
        let s = orientation(&working)?;
        working[i] = simplex[i].clone();
        if s.is_zero() {
            saw_zero = true;
        } else if s != reference {
            return Ok(Containment::Outside);
        }
    }
    Ok(if saw_zero {
        Containment::Boundary
    } else {
        Containment::Interior
    })
}
