//! Can a multiple cover around a vertex be split into disjoint single covers?
//!
//! Works on the angular decomposition at the vertex (dimension 2 only): each
//! incident triangle occupies a convex cone of directions, the cone boundary
//! rays cut the circle into elementary arcs, and sufficiently close to the
//! vertex, membership in a triangle is membership in its cone. A group of
//! triangles is a single cover of a punctured neighborhood iff every
//! elementary arc is covered exactly once.

use super::{HeftySimplex, PointSet};
use crate::error::Error;
use crate::numeric::{sub, Scalar, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitResult {
    /// A partition into single covers exists; one witness partition is
    /// returned as a group index per simplex.
    Decomposable(Vec<usize>),
    NotDecomposable,
}

fn cross(a: &[Scalar], b: &[Scalar]) -> Scalar {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn dot2(a: &[Scalar], b: &[Scalar]) -> Scalar {
    &a[0] * &b[0] + &a[1] * &b[1]
}

/// Exact counterclockwise order on rays: upper half first (positive y, or
/// positive x axis), then by cross-product sign within a half.
fn ray_order(a: &[Scalar], b: &[Scalar]) -> std::cmp::Ordering {
    let half = |v: &[Scalar]| {
        let sy = Sign::of(&v[1]);
        if sy == Sign::Positive || (sy == Sign::Zero && Sign::of(&v[0]) == Sign::Positive) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| match Sign::of(&cross(a, b)) {
        Sign::Positive => std::cmp::Ordering::Less,
        Sign::Negative => std::cmp::Ordering::Greater,
        Sign::Zero => std::cmp::Ordering::Equal,
    })
}

fn same_ray(a: &[Scalar], b: &[Scalar]) -> bool {
    Sign::of(&cross(a, b)) == Sign::Zero && Sign::of(&dot2(a, b)) == Sign::Positive
}

/// The cone of directions a triangle occupies at the vertex: the two edge
/// directions, ordered so the cone is swept counterclockwise.
struct Cone {
    from: Vec<Scalar>,
    to: Vec<Scalar>,
}

impl Cone {
    fn contains_strictly(&self, m: &[Scalar]) -> bool {
        Sign::of(&cross(&self.from, m)) == Sign::Positive
            && Sign::of(&cross(m, &self.to)) == Sign::Positive
    }
}

/// Exhaustive partition search: can `simplices` (all incident to `vertex`,
/// covering a punctured neighborhood exactly `layers` times) be split into
/// `layers` groups, each covering the punctured neighborhood exactly once?
pub fn cover_split_check(
    set: &PointSet,
    simplices: &[HeftySimplex],
    vertex: usize,
    layers: usize,
) -> Result<SplitResult, Error> {
    if set.dim() != 2 {
        return Err(Error::UnsupportedDimension(set.dim()));
    }
    if layers == 0 || simplices.is_empty() {
        return Err(Error::InvalidInput(
            "need at least one layer and one simplex".into(),
        ));
    }
    let v = set.point(vertex);
    let mut cones = Vec::with_capacity(simplices.len());
    let mut rays: Vec<Vec<Scalar>> = Vec::new();
    for s in simplices {
        if !s.contains_vertex(vertex) {
            return Err(Error::InvalidInput(format!(
                "simplex {:?} is not incident to vertex {vertex}",
                s.vertices
            )));
        }
        let others: Vec<usize> = s.vertices.iter().copied().filter(|&i| i != vertex).collect();
        let u1 = sub(set.point(others[0]), v);
        let u2 = sub(set.point(others[1]), v);
        let cone = match Sign::of(&cross(&u1, &u2)) {
            Sign::Positive => Cone { from: u1, to: u2 },
            Sign::Negative => Cone { from: u2, to: u1 },
            Sign::Zero => {
                return Err(Error::DegenerateSimplex {
                    points: set.simplex_points(&s.vertices),
                })
            }
        };
        rays.push(cone.from.clone());
        rays.push(cone.to.clone());
        cones.push(cone);
    }
    rays.sort_by(|a, b| ray_order(a, b));
    rays.dedup_by(|a, b| same_ray(a, b));

    // one representative direction strictly inside each elementary arc
    let mut reps = Vec::with_capacity(rays.len());
    for i in 0..rays.len() {
        let a = &rays[i];
        let b = &rays[(i + 1) % rays.len()];
        let sum = vec![&a[0] + &b[0], &a[1] + &b[1]];
        let rep = match Sign::of(&cross(a, b)) {
            Sign::Positive => sum,
            Sign::Negative => sum.into_iter().map(|c| -c).collect(),
            Sign::Zero => {
                // antipodal endpoints: quarter-turn counterclockwise from a
                vec![-a[1].clone(), a[0].clone()]
            }
        };
        reps.push(rep);
    }

    // precondition: the full collection covers every arc exactly `layers` times
    let coverage: Vec<Vec<usize>> = reps
        .iter()
        .map(|m| {
            (0..cones.len())
                .filter(|&c| cones[c].contains_strictly(m))
                .collect()
        })
        .collect();
    if let Some(bad) = coverage.iter().find(|c| c.len() != layers) {
        return Err(Error::InvalidInput(format!(
            "simplices cover an arc {} times, expected {layers}",
            bad.len()
        )));
    }

    let n = simplices.len();
    let mut assignment = vec![0usize; n];
    loop {
        if is_layered_cover(&coverage, &assignment, layers) {
            return Ok(SplitResult::Decomposable(assignment));
        }
        // next assignment in base `layers`; simplex 0 stays in group 0
        let mut pos = n - 1;
        loop {
            if pos == 0 {
                return Ok(SplitResult::NotDecomposable);
            }
            assignment[pos] += 1;
            if assignment[pos] < layers {
                break;
            }
            assignment[pos] = 0;
            pos -= 1;
        }
    }
}

fn is_layered_cover(coverage: &[Vec<usize>], assignment: &[usize], layers: usize) -> bool {
    for arc_cover in coverage {
        let mut per_group = vec![0usize; layers];
        for &c in arc_cover {
            per_group[assignment[c]] += 1;
        }
        if per_group.iter().any(|&g| g != 1) {
            return false;
        }
    }
    true
}
