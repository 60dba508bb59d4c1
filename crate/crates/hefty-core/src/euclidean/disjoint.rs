//! Interior disjointness of simplices with a common enclosed set.
//!
//! Two compact convex polytopes have intersecting interiors iff their
//! intersection polytope is full-dimensional, and that polytope is the convex
//! hull of the feasible intersections of d bounding hyperplanes. With 2(d+1)
//! facet hyperplanes this is a small exact vertex enumeration.

use itertools::Itertools;

use super::{HeftySimplex, PointSet};
use crate::error::Error;
use crate::numeric::{
    affine_rank, dot, hyperplane_normal, solve_linear, sub, Point, Scalar, Sign,
};

/// Closed half-space `<normal, x> >= bound`.
struct HalfSpace {
    normal: Vec<Scalar>,
    bound: Scalar,
}

fn facet_halfspaces(simplex: &[Point]) -> Result<Vec<HalfSpace>, Error> {
    let d = simplex[0].dim();
    let mut out = Vec::with_capacity(simplex.len());
    for i in 0..simplex.len() {
        let facet: Vec<&Point> = simplex
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p)
            .collect();
        let spans: Vec<Vec<Scalar>> = facet[1..].iter().map(|p| sub(p, facet[0])).collect();
        let mut normal = hyperplane_normal(&spans);
        debug_assert_eq!(normal.len(), d);
        let mut bound = dot(&normal, facet[0].coords());
        match Sign::of(&(dot(&normal, simplex[i].coords()) - &bound)) {
            Sign::Positive => {}
            Sign::Negative => {
                normal = normal.into_iter().map(|c| -c).collect();
                bound = -bound;
            }
            Sign::Zero => {
                return Err(Error::DegenerateSimplex {
                    points: simplex.to_vec(),
                })
            }
        }
        out.push(HalfSpace { normal, bound });
    }
    Ok(out)
}

/// Interval separation along any coordinate axis rules the interiors apart.
fn boxes_disjoint(a: &[Point], b: &[Point]) -> bool {
    let d = a[0].dim();
    for c in 0..d {
        let a_max = a.iter().map(|p| p.coord(c)).max().expect("nonempty");
        let b_min = b.iter().map(|p| p.coord(c)).min().expect("nonempty");
        if a_max <= b_min {
            return true;
        }
        let b_max = b.iter().map(|p| p.coord(c)).max().expect("nonempty");
        let a_min = a.iter().map(|p| p.coord(c)).min().expect("nonempty");
        if b_max <= a_min {
            return true;
        }
    }
    false
}

/// Do the interiors of two nondegenerate simplices of equal dimension
/// intersect? Exact, any dimension.
pub fn interiors_intersect(a: &[Point], b: &[Point]) -> Result<bool, Error> {
    if boxes_disjoint(a, b) {
        return Ok(false);
    }
    let d = a[0].dim();
    let mut halfspaces = facet_halfspaces(a)?;
    halfspaces.extend(facet_halfspaces(b)?);
    let mut feasible: Vec<Vec<Scalar>> = Vec::new();
    for combo in (0..halfspaces.len()).combinations(d) {
        let matrix: Vec<Vec<Scalar>> = combo.iter().map(|&i| halfspaces[i].normal.clone()).collect();
        let rhs: Vec<Scalar> = combo.iter().map(|&i| halfspaces[i].bound.clone()).collect();
        let Ok(x) = solve_linear(&matrix, &rhs) else {
            continue;
        };
        let ok = halfspaces
            .iter()
            .all(|h| Sign::of(&(dot(&h.normal, &x) - &h.bound)) != Sign::Negative);
        if ok {
            feasible.push(x);
        }
    }
    Ok(affine_rank(&feasible) == d)
}

pub fn interiors_disjoint(a: &[Point], b: &[Point]) -> Result<bool, Error> {
    Ok(!interiors_intersect(a, b)?)
}

/// Do all hefty simplices of the set whose enclosed index set is exactly `b`
/// have pairwise disjoint interiors? They are the 0-hefty simplices of the
/// set minus `b`, so this should always hold for generic sets.
pub fn fixed_enclosed_disjointness(set: &PointSet, b: &[usize]) -> Result<bool, Error> {
    let mut target = b.to_vec();
    target.sort_unstable();
    let k = target.len();
    let family: Vec<HeftySimplex> = set
        .enumerate_hefty(k)?
        .into_iter()
        .filter(|s| s.enclosed == target)
        .collect();
    for i in 0..family.len() {
        let a_pts = set.simplex_points(&family[i].vertices);
        for j in i + 1..family.len() {
            let b_pts = set.simplex_points(&family[j].vertices);
            if interiors_intersect(&a_pts, &b_pts)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;

    fn p(coords: &[i64]) -> Point {
        Point::from_ints(coords)
    }

    #[test]
    fn overlapping_triangles_intersect() {
        let a = [p(&[0, 0]), p(&[4, 0]), p(&[0, 4])];
        let b = [p(&[1, 1]), p(&[5, 1]), p(&[1, 5])];
        assert!(interiors_intersect(&a, &b).unwrap());
    }

    #[test]
    fn touching_triangles_have_disjoint_interiors() {
        // sharing the edge from (0,0) to (4,0)
        let a = [p(&[0, 0]), p(&[4, 0]), p(&[0, 4])];
        let b = [p(&[0, 0]), p(&[4, 0]), p(&[2, -3])];
        assert!(interiors_disjoint(&a, &b).unwrap());
        // sharing just the vertex (4,0)
        let c = [p(&[4, 0]), p(&[8, 1]), p(&[5, 4])];
        assert!(interiors_disjoint(&a, &c).unwrap());
    }

    #[test]
    fn nested_triangle_intersects() {
        let a = [p(&[0, 0]), p(&[10, 0]), p(&[0, 10])];
        let b = [p(&[1, 1]), p(&[3, 1]), p(&[1, 3])];
        assert!(interiors_intersect(&a, &b).unwrap());
    }

    #[test]
    fn intervals_in_one_dimension() {
        let a = [p(&[0]), p(&[2])];
        let b = [p(&[2]), p(&[5])];
        assert!(interiors_disjoint(&a, &b).unwrap());
        let c = [Point::new(vec![ratio(3, 2)]), p(&[3])];
        assert!(interiors_intersect(&a, &c).unwrap());
    }

    #[test]
    fn tetrahedra_in_three_dimensions() {
        let a = [p(&[0, 0, 0]), p(&[4, 0, 0]), p(&[0, 4, 0]), p(&[0, 0, 4])];
        let b = [p(&[1, 1, 1]), p(&[5, 1, 1]), p(&[1, 5, 1]), p(&[1, 1, 5])];
        assert!(interiors_intersect(&a, &b).unwrap());
        let c = [p(&[0, 0, 0]), p(&[4, 0, 0]), p(&[0, 4, 0]), p(&[1, 1, -3])];
        assert!(interiors_disjoint(&a, &c).unwrap());
    }
}
