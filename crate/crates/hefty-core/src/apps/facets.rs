//! k-facets, inversion, and directed line entries.
//!
//! A d-subset spans a hyperplane splitting the remaining points; the ordered
//! convention counts each (subset, side) pair, so the total over all k is
//! 2 C(n, d). Inversion through a unit sphere carries j-facets whose far side
//! avoids the center to j-hefty simplices incident to it.

use itertools::Itertools;

use crate::error::{Error, GenericityWitness};
use crate::euclidean::PointSet;
use crate::numeric::{
    dist_sq, dot, hyperplane_normal, solve_linear, sub, Point, Scalar, Sign,
};

/// A d-subset spanning a hyperplane, together with one designated open side
/// and the number of points strictly on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedFacet {
    pub indices: Vec<usize>,
    /// Sign of <normal, x - base> on the designated side, with the normal
    /// produced by the cofactor expansion over the sorted subset.
    pub side: Sign,
    pub side_count: usize,
}

/// Inversion through the unit sphere centered at z:
/// `a -> z + (a - z) / |a - z|^2`. An exact involution away from z.
pub fn invert(z: &Point, set: &PointSet) -> Result<PointSet, Error> {
    let mut images = Vec::with_capacity(set.len());
    for (i, a) in set.points().iter().enumerate() {
        let offset = sub(a, z);
        let n2 = dist_sq(a, z);
        if num::Zero::is_zero(&n2) {
            return Err(Error::QueryAtSetPoint(i));
        }
        let coords: Vec<Scalar> = z
            .coords()
            .iter()
            .zip(&offset)
            .map(|(zc, oc)| zc + oc / &n2)
            .collect();
        images.push(Point::new(coords));
    }
    PointSet::new(set.dim(), images, format!("invert({})", set.label()))
}

fn facet_geometry(set: &PointSet, combo: &[usize]) -> Result<(Vec<Scalar>, Point), Error> {
    let base = set.point(combo[0]).clone();
    let spans: Vec<Vec<Scalar>> = combo[1..]
        .iter()
        .map(|&i| sub(set.point(i), &base))
        .collect();
    let normal = hyperplane_normal(&spans);
    if normal.iter().all(num::Zero::is_zero) {
        return Err(Error::NonGeneric(GenericityWitness::AffinelyDependent(
            combo.to_vec(),
        )));
    }
    Ok((normal, base))
}

fn side_counts(set: &PointSet, combo: &[usize], normal: &[Scalar], base: &Point) -> Result<(usize, usize), Error> {
    let mut pos = 0usize;
    let mut neg = 0usize;
    for i in 0..set.len() {
        if combo.contains(&i) {
            continue;
        }
        match Sign::of(&dot(&sub(set.point(i), base), normal)) {
            Sign::Positive => pos += 1,
            Sign::Negative => neg += 1,
            Sign::Zero => {
                let mut w = combo.to_vec();
                w.push(i);
                w.sort_unstable();
                return Err(Error::NonGeneric(GenericityWitness::AffinelyDependent(w)));
            }
        }
    }
    Ok((pos, neg))
}

/// All oriented k-facets: (d-subset, side) pairs with exactly k points
/// strictly on the designated side.
pub fn k_facets(set: &PointSet, k: usize) -> Result<Vec<OrientedFacet>, Error> {
    let d = set.dim();
    let mut out = Vec::new();
    for combo in (0..set.len()).combinations(d) {
        let (normal, base) = facet_geometry(set, &combo)?;
        let (pos, neg) = side_counts(set, &combo, &normal, &base)?;
        if pos == k {
            out.push(OrientedFacet {
                indices: combo.clone(),
                side: Sign::Positive,
                side_count: pos,
            });
        }
        if neg == k {
            out.push(OrientedFacet {
                indices: combo,
                side: Sign::Negative,
                side_count: neg,
            });
        }
    }
    Ok(out)
}

/// F_0 .. F_max_k under the ordered convention: F_j counts (subset, side)
/// pairs with exactly j points on the designated side.
pub fn facet_counts(set: &PointSet, max_k: usize) -> Result<Vec<usize>, Error> {
    let d = set.dim();
    let mut counts = vec![0usize; max_k + 1];
    for combo in (0..set.len()).combinations(d) {
        let (normal, base) = facet_geometry(set, &combo)?;
        let (pos, neg) = side_counts(set, &combo, &normal, &base)?;
        if pos <= max_k {
            counts[pos] += 1;
        }
        if neg <= max_k {
            counts[neg] += 1;
        }
    }
    Ok(counts)
}

/// A directed line given by a point and a direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub origin: Point,
    pub direction: Vec<Scalar>,
}

/// How many k-facets the directed line enters: crossings through the relative
/// interior that move from the side holding exactly k points to the other
/// side. Crossings through a facet boundary are structured errors.
pub fn line_entry_count(set: &PointSet, k: usize, line: &Line) -> Result<usize, Error> {
    let d = set.dim();
    if line.origin.dim() != d || line.direction.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: line.origin.dim(),
        });
    }
    if line.direction.iter().all(num::Zero::is_zero) {
        return Err(Error::InvalidInput("line direction must be nonzero".into()));
    }
    let mut entries = 0usize;
    for combo in (0..set.len()).combinations(d) {
        let (normal, base) = facet_geometry(set, &combo)?;
        let denom = dot(&normal, &line.direction);
        let height = dot(&normal, &sub(&line.origin, &base));
        if num::Zero::is_zero(&denom) {
            if num::Zero::is_zero(&height) {
                // line lies inside the facet's hyperplane
                return Err(Error::LineThroughFacetBoundary { indices: combo });
            }
            continue; // parallel, no crossing
        }
        // crossing point of the line with the hyperplane
        let t = -height / &denom;
        let crossing = Point::new(
            line.origin
                .coords()
                .iter()
                .zip(&line.direction)
                .map(|(o, u)| o + &t * u)
                .collect(),
        );
        match facet_relative_position(set, &combo, &crossing)? {
            FacetPosition::Inside => {}
            FacetPosition::OnBoundary => {
                return Err(Error::LineThroughFacetBoundary { indices: combo });
            }
            FacetPosition::Outside => continue,
        }
        // entering from the positive side iff moving against the normal
        let (pos, neg) = side_counts(set, &combo, &normal, &base)?;
        let from_side_count = if Sign::of(&denom) == Sign::Negative {
            pos
        } else {
            neg
        };
        if from_side_count == k {
            entries += 1;
        }
    }
    Ok(entries)
}

enum FacetPosition {
    Inside,
    OnBoundary,
    Outside,
}

/// Position of a point (already on the facet's hyperplane) relative to the
/// (d-1)-simplex spanned by the subset, via barycentric coordinates.
fn facet_relative_position(
    set: &PointSet,
    combo: &[usize],
    point: &Point,
) -> Result<FacetPosition, Error> {
    let d = set.dim();
    // solve sum lambda_i p_i = point, sum lambda_i = 1 in the least-index
    // d x d subsystem that is nonsingular; consistency is guaranteed because
    // the point lies on the affine hull
    let pts: Vec<&Point> = combo.iter().map(|&i| set.point(i)).collect();
    // rows: one per coordinate plus the affine constraint; columns per vertex
    let mut rows: Vec<Vec<Scalar>> = (0..d)
        .map(|c| pts.iter().map(|p| p.coord(c).clone()).collect())
        .collect();
    rows.push(vec![crate::numeric::int(1); pts.len()]);
    let mut rhs: Vec<Scalar> = point.coords().to_vec();
    rhs.push(crate::numeric::int(1));
    // the system is (d+1) x d and consistent; drop one coordinate row to make
    // it square, choosing a row set that stays nonsingular
    for drop in 0..d {
        let matrix: Vec<Vec<Scalar>> = rows
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != drop)
            .map(|(_, row)| row.clone())
            .collect();
        let r: Vec<Scalar> = rhs
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != drop)
            .map(|(_, v)| v.clone())
            .collect();
        if let Ok(lambda) = solve_linear(&matrix, &r) {
            // verify the dropped equation to guard against inconsistency
            let check: Scalar = rows[drop]
                .iter()
                .zip(&lambda)
                .map(|(a, l)| a * l)
                .sum();
            if check != rhs[drop] {
                return Ok(FacetPosition::Outside);
            }
            let mut saw_zero = false;
            for l in &lambda {
                match Sign::of(l) {
                    Sign::Negative => return Ok(FacetPosition::Outside),
                    Sign::Zero => saw_zero = true,
                    Sign::Positive => {}
                }
            }
            return Ok(if saw_zero {
                FacetPosition::OnBoundary
            } else {
                FacetPosition::Inside
            });
        }
    }
    Err(Error::NonGeneric(GenericityWitness::AffinelyDependent(
        combo.to_vec(),
    )))
}
