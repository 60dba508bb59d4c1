//! Finite sets on the d-sphere: k-balancedness, spherical heft, and the
//! stereographic transfer to R^d.
//!
//! Spherical points are exact rational unit vectors in R^(d+1); inverse
//! stereographic projection of rational plane points produces them, and they
//! are dense on the sphere. On a k-balanced set the smaller of the two caps
//! bounded by a (d-1)-sphere is the well-defined "inside": it is the side of
//! the spanning hyperplane opposite the origin.

use itertools::Itertools;

use num::{Signed, Zero};

use crate::error::{Error, GenericityWitness};
use crate::euclidean::{CoverReport, HeftySimplex};
use crate::numeric::{dot, hyperplane_normal, int, sign_det, Point, Scalar, Sign};

/// A point of S^d stored as an exact rational unit vector of R^(d+1).
/// Homogeneous input is accepted when the ray admits a rational unit
/// representative; predicates depend only on the ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalPoint {
    unit: Vec<Scalar>,
}

impl SphericalPoint {
    /// Normalize a homogeneous representative. Fails unless the squared norm
    /// is the square of a rational, i.e. the ray meets the sphere at a
    /// rational point.
    pub fn from_homogeneous(coords: Vec<Scalar>) -> Result<Self, Error> {
        if coords.len() < 2 {
            return Err(Error::InvalidInput(
                "spherical points live in R^(d+1) with d >= 1".into(),
            ));
        }
        let ns: Scalar = coords.iter().map(|c| c * c).sum();
        if ns.is_zero() {
            return Err(Error::InvalidInput("zero vector is not a direction".into()));
        }
        let p = ns.numer();
        let q = ns.denom();
        let sp = p.sqrt();
        let sq = q.sqrt();
        if &(&sp * &sp) != p || &(&sq * &sq) != q {
            return Err(Error::InvalidInput(format!(
                "direction has irrational norm: |v|^2 = {}/{} is not a rational square",
                p, q
            )));
        }
        let norm = Scalar::new(sp, sq);
        let unit = coords.into_iter().map(|c| c / &norm).collect();
        Ok(SphericalPoint { unit })
    }

    /// Dimension d of the sphere S^d.
    pub fn sphere_dim(&self) -> usize {
        self.unit.len() - 1
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn antipode(&self) -> SphericalPoint {
        SphericalPoint {
            unit: self.unit.iter().map(|c| -c).collect(),
        }
    }

    pub fn pole(d: usize) -> SphericalPoint {
        let mut unit = vec![Scalar::zero(); d + 1];
        unit[d] = int(1);
        SphericalPoint { unit }
    }

    pub fn as_point(&self) -> Point {
        Point::new(self.unit.clone())
    }
}

/// Inverse stereographic projection from the pole (0, ..., 0, 1) onto the
/// tangent plane at its antipode: an exact rational unit vector for every
/// rational plane point. The origin maps to the antipode of the pole.
pub fn exact_unit(plane_point: &Point) -> SphericalPoint {
    let ns: Scalar = plane_point.coords().iter().map(|c| c * c).sum();
    let denom = &ns + int(4);
    let mut unit: Vec<Scalar> = plane_point
        .coords()
        .iter()
        .map(|c| int(4) * c / &denom)
        .collect();
    unit.push((&ns - int(4)) / &denom);
    SphericalPoint { unit }
}

/// Forward stereographic projection from the pole (0, ..., 0, 1); inverse of
/// [`exact_unit`]. Fails on the pole itself.
pub fn forward_stereographic(p: &SphericalPoint) -> Result<Point, Error> {
    let d = p.sphere_dim();
    let last = &p.unit[d];
    let denom = int(1) - last;
    if denom.is_zero() {
        return Err(Error::InvalidInput(
            "the projection pole has no stereographic image".into(),
        ));
    }
    Ok(Point::new(
        p.unit[..d].iter().map(|c| int(2) * c / &denom).collect(),
    ))
}

fn common_dim(points: &[SphericalPoint]) -> Result<usize, Error> {
    let d = points
        .first()
        .ok_or(Error::InvalidInput("empty spherical set".into()))?
        .sphere_dim();
    for p in points {
        if p.sphere_dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d + 1,
                got: p.sphere_dim() + 1,
            });
        }
    }
    Ok(d)
}

/// Minimum number of points strictly inside an open hemisphere, by scanning
/// the candidate normals spanned by d-subsets; the generic minimum is
/// attained there. Zero signs at non-spanning points are genericity
/// violations.
fn min_open_hemisphere_count(vectors: &[Vec<Scalar>], ambient: usize) -> Result<usize, Error> {
    let n = vectors.len();
    if n < ambient - 1 {
        return Err(Error::InvalidInput(
            "too few points for a hemisphere scan".into(),
        ));
    }
    let mut best = n;
    for combo in (0..n).combinations(ambient - 1) {
        let rows: Vec<Vec<Scalar>> = combo.iter().map(|&i| vectors[i].clone()).collect();
        let normal = hyperplane_normal(&rows);
        if normal.iter().all(|c| c.is_zero()) {
            let mut w = combo.clone();
            w.sort_unstable();
            return Err(Error::NonGeneric(GenericityWitness::LinearlyDependent(w)));
        }
        let mut pos = 0usize;
        let mut neg = 0usize;
        for (i, v) in vectors.iter().enumerate() {
            if combo.contains(&i) {
                continue;
            }
            match Sign::of(&dot(v, &normal)) {
                Sign::Positive => pos += 1,
                Sign::Negative => neg += 1,
                Sign::Zero => {
                    let mut w = combo.clone();
                    w.push(i);
                    w.sort_unstable();
                    return Err(Error::NonGeneric(GenericityWitness::LinearlyDependent(w)));
                }
            }
        }
        best = best.min(pos).min(neg);
    }
    Ok(best)
}

/// Does every open hemisphere contain at least k+1 of the points?
pub fn is_k_balanced(points: &[SphericalPoint], k: usize) -> Result<bool, Error> {
    let d = common_dim(points)?;
    let vectors: Vec<Vec<Scalar>> = points.iter().map(|p| p.unit.to_vec()).collect();
    Ok(min_open_hemisphere_count(&vectors, d + 1)? >= k + 1)
}

/// Exhaustive spherical genericity: no d+1 points linearly dependent, no d+2
/// affinely dependent in R^(d+1).
pub fn check_generic(points: &[SphericalPoint]) -> Result<(), GenericityWitness> {
    let d = match common_dim(points) {
        Ok(d) => d,
        Err(_) => return Err(GenericityWitness::LinearlyDependent(vec![])),
    };
    let n = points.len();
    for combo in (0..n).combinations(d + 1) {
        let rows: Vec<Vec<Scalar>> = combo.iter().map(|&i| points[i].unit.to_vec()).collect();
        if sign_det(&rows) == Sign::Zero {
            return Err(GenericityWitness::LinearlyDependent(combo));
        }
    }
    for combo in (0..n).combinations(d + 2) {
        let base = &points[combo[0]].unit;
        let rows: Vec<Vec<Scalar>> = combo[1..]
            .iter()
            .map(|&i| {
                points[i]
                    .unit
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        if sign_det(&rows) == Sign::Zero {
            return Err(GenericityWitness::Cospherical(combo));
        }
    }
    Ok(())
}

/// Side of the affine hyperplane through `lifted[indices]` on which `q` lies,
/// relative to the origin: Positive means strictly opposite the origin
/// (enclosed), Negative means the origin's side.
fn separation(
    lifted: &[Vec<Scalar>],
    indices: &[usize],
    q: &[Scalar],
) -> Result<Sign, (Sign, Sign)> {
    let base = &lifted[indices[0]];
    let mut rows: Vec<Vec<Scalar>> = indices[1..]
        .iter()
        .map(|&i| lifted[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rows.push(base.iter().map(|b| -b).collect()); // origin - base
    let origin_side = sign_det(&rows);
    let last = rows.len() - 1;
    rows[last] = q.iter().zip(base).map(|(a, b)| a - b).collect();
    let q_side = sign_det(&rows);
    if origin_side == Sign::Zero || q_side == Sign::Zero {
        return Err((origin_side, q_side));
    }
    Ok(if q_side == origin_side.flip() {
        Sign::Positive
    } else {
        Sign::Negative
    })
}

fn heft_of_lifted(
    lifted: &[Vec<Scalar>],
    vertex_indices: &[usize],
    dim: usize,
) -> Result<HeftySimplex, Error> {
    let mut vertices = vertex_indices.to_vec();
    vertices.sort_unstable();
    if vertices.len() != dim + 1 {
        return Err(Error::DimensionMismatch {
            expected: dim + 1,
            got: vertices.len(),
        });
    }
    for w in vertices.windows(2) {
        if w[0] == w[1] {
            return Err(Error::RepeatedIndex(w[0]));
        }
    }
    for &i in &vertices {
        if i >= lifted.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: lifted.len(),
            });
        }
    }
    let mut enclosed = Vec::new();
    for j in 0..lifted.len() {
        if vertices.binary_search(&j).is_ok() {
            continue;
        }
        match separation(lifted, &vertices, &lifted[j]) {
            Ok(Sign::Positive) => enclosed.push(j),
            Ok(_) => {}
            Err((Sign::Zero, _)) => {
                return Err(Error::NonGeneric(GenericityWitness::HyperplaneThroughOrigin(
                    vertices,
                )));
            }
            Err(_) => {
                let mut w = vertices.clone();
                w.push(j);
                w.sort_unstable();
                return Err(Error::NonGeneric(GenericityWitness::Cospherical(w)));
            }
        }
    }
    Ok(HeftySimplex { vertices, enclosed })
}

/// Heft of the spherical simplex on the given vertices: the points strictly
/// inside the smaller cap, i.e. separated from the origin by the spanning
/// hyperplane. Hyperplanes through the origin are rejected as non-generic.
pub fn spherical_heft(
    points: &[SphericalPoint],
    vertex_indices: &[usize],
) -> Result<HeftySimplex, Error> {
    let d = common_dim(points)?;
    let lifted: Vec<Vec<Scalar>> = points.iter().map(|p| p.unit.to_vec()).collect();
    heft_of_lifted(&lifted, vertex_indices, d)
}

/// A spherical location with a non-negative radius r; the weight is r^2 - 1.
/// The lifted representative r*a lives in R^(d+1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalWeightedPoint {
    pub direction: SphericalPoint,
    pub radius: Scalar,
}

impl SphericalWeightedPoint {
    pub fn new(direction: SphericalPoint, radius: Scalar) -> Result<Self, Error> {
        if radius.is_negative() {
            return Err(Error::InvalidInput("spherical radius must be >= 0".into()));
        }
        Ok(SphericalWeightedPoint { direction, radius })
    }

    pub fn weight(&self) -> Scalar {
        &self.radius * &self.radius - int(1)
    }

    pub fn lifted(&self) -> Vec<Scalar> {
        self.direction.unit.iter().map(|c| c * &self.radius).collect()
    }
}

/// Weighted spherical heft: the lifted points strictly separated from the
/// origin by the hyperplane through the d+1 chosen lifted points. With all
/// radii 1 this is exactly [`spherical_heft`].
pub fn spherical_heft_weighted(
    points: &[SphericalWeightedPoint],
    vertex_indices: &[usize],
) -> Result<HeftySimplex, Error> {
    let d = common_dim(&points.iter().map(|p| p.direction.clone()).collect::<Vec<_>>())?;
    let lifted: Vec<Vec<Scalar>> = points.iter().map(|p| p.lifted()).collect();
    heft_of_lifted(&lifted, vertex_indices, d)
}

/// Weighted k-balancedness: at least k+1 lifted points strictly on each side
/// of every hyperplane through the origin.
pub fn is_k_balanced_weighted(points: &[SphericalWeightedPoint], k: usize) -> Result<bool, Error> {
    let d = common_dim(&points.iter().map(|p| p.direction.clone()).collect::<Vec<_>>())?;
    let lifted: Vec<Vec<Scalar>> = points.iter().map(|p| p.lifted()).collect();
    Ok(min_open_hemisphere_count(&lifted, d + 1)? >= k + 1)
}

/// All spherical simplices of heft exactly k.
pub fn enumerate_hefty_sphere(
    points: &[SphericalPoint],
    k: usize,
) -> Result<Vec<HeftySimplex>, Error> {
    let d = common_dim(points)?;
    let lifted: Vec<Vec<Scalar>> = points.iter().map(|p| p.unit.to_vec()).collect();
    enumerate_lifted(&lifted, d, k)
}

/// All weighted spherical simplices of heft exactly k.
pub fn enumerate_hefty_sphere_weighted(
    points: &[SphericalWeightedPoint],
    k: usize,
) -> Result<Vec<HeftySimplex>, Error> {
    let dirs: Vec<SphericalPoint> = points.iter().map(|p| p.direction.clone()).collect();
    let d = common_dim(&dirs)?;
    let lifted: Vec<Vec<Scalar>> = points.iter().map(|p| p.lifted()).collect();
    enumerate_lifted(&lifted, d, k)
}

fn enumerate_lifted(lifted: &[Vec<Scalar>], d: usize, k: usize) -> Result<Vec<HeftySimplex>, Error> {
    let n = lifted.len();
    if n < d + 2 {
        return Err(Error::InvalidInput(format!(
            "need at least {} spherical points",
            d + 2
        )));
    }
    let max = n - d - 1;
    if k > max {
        return Err(Error::KOutOfRange { k, max });
    }
    let mut out = Vec::new();
    for combo in (0..n).combinations(d + 1) {
        let s = heft_of_lifted(lifted, &combo, d)?;
        if s.heft() == k {
            out.push(s);
        }
    }
    Ok(out)
}

/// Does the query ray lie in the spherical simplex spanned by the vertices?
/// Interior iff all cone coordinates are strictly positive.
pub fn spherical_containment(
    points: &[SphericalPoint],
    vertices: &[usize],
    query: &SphericalPoint,
) -> Result<crate::numeric::Containment, Error> {
    use crate::numeric::Containment;
    let rows: Vec<Vec<Scalar>> = vertices.iter().map(|&i| points[i].unit.to_vec()).collect();
    let full = sign_det(&rows);
    if full == Sign::Zero {
        return Err(Error::NonGeneric(GenericityWitness::LinearlyDependent(
            vertices.to_vec(),
        )));
    }
    let mut saw_zero = false;
    for slot in 0..rows.len() {
        let mut modified = rows.clone();
        modified[slot] = query.unit.to_vec();
        match sign_det(&modified) {
            Sign::Zero => saw_zero = true,
            s if s != full => return Ok(Containment::Outside),
            _ => {}
        }
    }
    Ok(if saw_zero {
        Containment::Boundary
    } else {
        Containment::Interior
    })
}

/// Spherical covering query over unweighted points.
pub fn covering_count_sphere(
    points: &[SphericalPoint],
    k: usize,
    query: &SphericalPoint,
) -> Result<CoverReport, Error> {
    let d = common_dim(points)?;
    let lifted: Vec<Vec<Scalar>> = points.iter().map(|p| p.unit.to_vec()).collect();
    covering_from_lifted(points, &lifted, d, k, query)
}

/// Spherical covering query over weighted points; simplices are spanned by
/// the locations, heft comes from the lifted points.
pub fn covering_count_sphere_weighted(
    points: &[SphericalWeightedPoint],
    k: usize,
    query: &SphericalPoint,
) -> Result<CoverReport, Error> {
    let dirs: Vec<SphericalPoint> = points.iter().map(|p| p.direction.clone()).collect();
    let d = common_dim(&dirs)?;
    let lifted: Vec<Vec<Scalar>> = points.iter().map(|p| p.lifted()).collect();
    covering_from_lifted(&dirs, &lifted, d, k, query)
}

fn covering_from_lifted(
    directions: &[SphericalPoint],
    lifted: &[Vec<Scalar>],
    d: usize,
    k: usize,
    query: &SphericalPoint,
) -> Result<CoverReport, Error> {
    use crate::numeric::Containment;
    let n = lifted.len();
    if n < d + 2 {
        return Err(Error::InvalidInput(format!(
            "need at least {} spherical points",
            d + 2
        )));
    }
    let max = n - d - 1;
    if k > max {
        return Err(Error::KOutOfRange { k, max });
    }
    if let Some(i) = directions.iter().position(|p| p == query) {
        return Err(Error::QueryAtSetPoint(i));
    }
    let mut witnesses = Vec::new();
    let mut boundary_flag = false;
    for combo in (0..n).combinations(d + 1) {
        let s = heft_of_lifted(lifted, &combo, d)?;
        if s.heft() != k {
            continue;
        }
        match spherical_containment(directions, &s.vertices, query)? {
            Containment::Interior => witnesses.push(s),
            Containment::Boundary => boundary_flag = true,
            Containment::Outside => {}
        }
    }
    Ok(CoverReport {
        query: query.as_point(),
        k,
        count: witnesses.len(),
        witnesses,
        boundary_flag,
    })
}

/// Pythagorean rotation steps (cos, sin, denominator): multiplying complex
/// rational units walks the circle exactly.
const CIRCLE_STEPS: &[(i64, i64, i64)] = &[
    (24, 7, 25),
    (12, 5, 13),
    (4, 3, 5),
    (40, 9, 41),
    (60, 11, 61),
    (20, 21, 29),
];

/// Seeded generic k-balanced set on S^1 or S^2.
///
/// On the circle, points come from an exact rotation walk whose pool wraps
/// several times, so random draws spread well; on the 2-sphere, from inverse
/// stereographic lifts of mixed near/mid/far plane points. Candidates are
/// redrawn until the exhaustive balance and genericity checks pass.
pub fn gen_balanced_sphere(
    d: usize,
    n: usize,
    k: usize,
    seed: u64,
) -> Result<Vec<SphericalPoint>, Error> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed ^ 0x7370_6865_7265_0000);
    if d == 0 || d > 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    if n < d + 2 {
        return Err(Error::InvalidInput(format!(
            "need at least {} points on S^{d}",
            d + 2
        )));
    }
    let max_attempts = 400;
    for _ in 0..max_attempts {
        let candidate: Vec<SphericalPoint> = if d == 1 {
            let mut pool = Vec::with_capacity(8 * n);
            let mut cur = (int(1), int(0));
            for _ in 0..8 * n {
                let (c, s, q) = CIRCLE_STEPS[rng.gen_range(0..CIRCLE_STEPS.len())];
                let x = (&cur.0 * int(c) - &cur.1 * int(s)) / int(q);
                let y = (&cur.0 * int(s) + &cur.1 * int(c)) / int(q);
                cur = (x, y);
                pool.push(cur.clone());
            }
            let mut chosen: Vec<(Scalar, Scalar)> = Vec::with_capacity(n);
            let mut guard = 0;
            while chosen.len() < n && guard < 64 * n {
                guard += 1;
                let pick = pool[rng.gen_range(0..pool.len())].clone();
                // keep both poles free for stereographic transfer queries
                if pick.0.is_zero() {
                    continue;
                }
                if !chosen.contains(&pick) {
                    chosen.push(pick);
                }
            }
            if chosen.len() < n {
                continue;
            }
            chosen
                .into_iter()
                .map(|(x, y)| SphericalPoint { unit: vec![x, y] })
                .collect()
        } else {
            // plane preimages must themselves be generic: stereographic
            // projection turns collinear or concyclic plane points into
            // degenerate spherical configurations, and parallel plane
            // vectors put chords through the poles
            let mut plane: Vec<Point> = Vec::with_capacity(n);
            let mut guard = 0;
            while plane.len() < n && guard < 256 * n {
                guard += 1;
                // plane radius 2 is the equator: |p| < 2 fills the lower
                // hemisphere, integers up to 12 the upper mid-latitudes, and
                // the far ring the polar cap
                let class = rng.gen_range(0..3u8);
                let p = match class {
                    0 => Point::new(
                        (0..d)
                            .map(|_| crate::numeric::ratio(rng.gen_range(-15..=15), 8))
                            .collect(),
                    ),
                    1 => Point::from_ints(
                        &(0..d)
                            .map(|_| rng.gen_range(-12..=12))
                            .collect::<Vec<i64>>(),
                    ),
                    _ => loop {
                        let c: Vec<i64> = (0..d).map(|_| rng.gen_range(-60..=60)).collect();
                        let r2: i64 = c.iter().map(|&x| x * x).sum();
                        if r2 >= 196 {
                            break Point::from_ints(&c);
                        }
                    },
                };
                if p.coords().iter().all(num::Zero::is_zero) {
                    continue;
                }
                if plane.contains(&p) {
                    continue;
                }
                let parallel = plane.iter().any(|q| {
                    (q.coord(0) * p.coord(1) - q.coord(1) * p.coord(0)).is_zero()
                });
                if parallel {
                    continue;
                }
                let collinear = {
                    let mut found = false;
                    'pairs: for i in 0..plane.len() {
                        for j in i + 1..plane.len() {
                            let tri = [plane[i].clone(), plane[j].clone(), p.clone()];
                            if crate::numeric::orientation(&tri) == Ok(Sign::Zero) {
                                found = true;
                                break 'pairs;
                            }
                        }
                    }
                    found
                };
                if collinear {
                    continue;
                }
                let cocircular = {
                    let mut found = false;
                    'triples: for i in 0..plane.len() {
                        for j in i + 1..plane.len() {
                            for l in j + 1..plane.len() {
                                let tri =
                                    [plane[i].clone(), plane[j].clone(), plane[l].clone()];
                                if crate::numeric::lifted_sign(&tri, &p) == Sign::Zero {
                                    found = true;
                                    break 'triples;
                                }
                            }
                        }
                    }
                    found
                };
                if cocircular {
                    continue;
                }
                // three lifts on a common great circle = linear dependence
                let lift = exact_unit(&p);
                let on_great_circle = {
                    let mut found = false;
                    'lifted: for i in 0..plane.len() {
                        for j in i + 1..plane.len() {
                            let rows = vec![
                                exact_unit(&plane[i]).unit.to_vec(),
                                exact_unit(&plane[j]).unit.to_vec(),
                                lift.unit.to_vec(),
                            ];
                            if sign_det(&rows) == Sign::Zero {
                                found = true;
                                break 'lifted;
                            }
                        }
                    }
                    found
                };
                if on_great_circle {
                    continue;
                }
                plane.push(p);
            }
            if plane.len() < n {
                continue;
            }
            plane.iter().map(exact_unit).collect()
        };
        if check_generic(&candidate).is_ok() && is_k_balanced(&candidate, k).unwrap_or(false) {
            return Ok(candidate);
        }
    }
    Err(Error::GeneratorFailure {
        attempts: max_attempts,
        detail: format!("no generic {k}-balanced set on S^{d} with n={n}, seed={seed}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;

    fn sp(coords: &[i64]) -> SphericalPoint {
        SphericalPoint::from_homogeneous(coords.iter().map(|&c| int(c)).collect()).unwrap()
    }

    /// Four rational unit vectors spread around S^1 (angles roughly 0, 74,
    /// 164, and 286 degrees), built from Pythagorean triples so every
    /// homogeneous representative normalizes exactly.
    fn axis_quad() -> Vec<SphericalPoint> {
        vec![sp(&[5, 0]), sp(&[7, 24]), sp(&[-24, 7]), sp(&[7, -24])]
    }

    #[test]
    fn from_homogeneous_normalizes_or_rejects() {
        let p = sp(&[3, 4]);
        assert_eq!(p.unit(), &[ratio(3, 5), ratio(4, 5)]);
        let q = SphericalPoint::from_homogeneous(vec![int(6), int(8)]).unwrap();
        assert_eq!(p, q);
        assert!(SphericalPoint::from_homogeneous(vec![int(1), int(1)]).is_err());
        assert!(SphericalPoint::from_homogeneous(vec![int(0), int(0)]).is_err());
    }

    #[test]
    fn exact_unit_examples() {
        // origin maps to the antipode of the pole
        let p = exact_unit(&Point::from_ints(&[0, 0]));
        assert_eq!(p.unit(), &[int(0), int(0), int(-1)]);
        // (2, 0) maps to (1, 0, 0)
        let p = exact_unit(&Point::from_ints(&[2, 0]));
        assert_eq!(p.unit(), &[int(1), int(0), int(0)]);
        assert_eq!(
            forward_stereographic(&p).unwrap(),
            Point::from_ints(&[2, 0])
        );
    }

    #[test]
    fn stereographic_roundtrip_is_exact() {
        for coords in [[3i64, -7], [0, 5], [-2, -2], [11, 13]] {
            let plane = Point::from_ints(&coords);
            let up = exact_unit(&plane);
            let ns: Scalar = up.unit().iter().map(|c| c * c).sum();
            assert_eq!(ns, int(1));
            assert_eq!(forward_stereographic(&up).unwrap(), plane);
        }
    }

    #[test]
    fn balancedness_on_the_axis_quad() {
        let pts = axis_quad();
        assert!(is_k_balanced(&pts, 0).unwrap());
        assert!(!is_k_balanced(&pts, 1).unwrap());
    }

    #[test]
    fn one_hemisphere_sets_are_unbalanced() {
        let pts = vec![sp(&[3, 4]), sp(&[4, 3]), sp(&[12, 5])];
        assert!(!is_k_balanced(&pts, 0).unwrap());
    }

    #[test]
    fn spherical_heft_minor_arc() {
        let pts = axis_quad();
        let h = spherical_heft(&pts, &[0, 1]).unwrap();
        assert_eq!(h.heft(), 0);
    }

    #[test]
    fn antipodal_chord_is_rejected() {
        // exactly antipodal points: the chord passes through the origin
        let pts = vec![sp(&[5, 0]), sp(&[7, 24]), sp(&[-5, 0]), sp(&[7, -24])];
        let err = spherical_heft(&pts, &[0, 2]).unwrap_err();
        assert!(matches!(
            err,
            Error::NonGeneric(GenericityWitness::HyperplaneThroughOrigin(_))
        ));
    }

    #[test]
    fn unit_radii_reduce_to_unweighted() {
        let pts = axis_quad();
        let weighted: Vec<SphericalWeightedPoint> = pts
            .iter()
            .map(|p| SphericalWeightedPoint::new(p.clone(), int(1)).unwrap())
            .collect();
        for combo in [[0usize, 1], [1, 2], [1, 3]] {
            assert_eq!(
                spherical_heft(&pts, &combo).unwrap(),
                spherical_heft_weighted(&weighted, &combo).unwrap()
            );
        }
    }

    #[test]
    fn lifted_point_beyond_the_plane_is_enclosed() {
        // two on-sphere points plus one far lifted point on S^1: chord {0,1}
        // separates the long lifted point from the origin when it points into
        // the cap
        let pts = vec![
            SphericalWeightedPoint::new(sp(&[5, 0]), int(1)).unwrap(),
            SphericalWeightedPoint::new(sp(&[0, 5]), int(1)).unwrap(),
            SphericalWeightedPoint::new(sp(&[3, 4]), int(2)).unwrap(),
            SphericalWeightedPoint::new(sp(&[-24, 7]), int(1)).unwrap(),
        ];
        let h = spherical_heft_weighted(&pts, &[0, 1]).unwrap();
        assert_eq!(h.enclosed, vec![2]);
    }

    #[test]
    fn low_heft_simplices_cover_a_location_boundedly() {
        // heft <= k simplices incident to a location cover its neighborhood
        // at most C(d+k, d) times; probed with exact rational rotations
        let pts = gen_balanced_sphere(1, 9, 2, 41).unwrap();
        let weighted: Vec<SphericalWeightedPoint> = pts
            .iter()
            .enumerate()
            .map(|(i, p)| {
                SphericalWeightedPoint::new(p.clone(), int(1) + ratio(i as i64 % 3, 1000)).unwrap()
            })
            .collect();
        let vertex = 0usize;
        for k in 0..=2usize {
            let bound = k + 1; // C(1+k, 1)
            let mut incident = Vec::new();
            for j in 0..pts.len() {
                if j == vertex {
                    continue;
                }
                let s = spherical_heft_weighted(&weighted, &[vertex, j]).unwrap();
                if s.heft() <= k {
                    incident.push(s);
                }
            }
            // nearby probes: exact small rotations of the vertex both ways
            let steps = [(840i64, 41i64, 841i64), (840, -41, 841)];
            for (c, s, q) in steps {
                let u = &pts[vertex].unit()[0];
                let v = &pts[vertex].unit()[1];
                let probe = SphericalPoint::from_homogeneous(vec![
                    (u * int(c) - v * int(s)) / int(q),
                    (u * int(s) + v * int(c)) / int(q),
                ])
                .unwrap();
                let mut covering = 0usize;
                for sim in &incident {
                    if spherical_containment(&pts, &sim.vertices, &probe).unwrap()
                        == crate::numeric::Containment::Interior
                    {
                        covering += 1;
                    }
                }
                assert!(covering <= bound, "k={k}: {covering} > {bound}");
            }
        }
    }

    #[test]
    fn weighted_heft_matches_orientation_oracle() {
        // independent oracle: orientation determinants of (lifted simplex, q)
        // versus (lifted simplex, origin)
        let pts = vec![
            SphericalWeightedPoint::new(sp(&[5, 0]), ratio(3, 2)).unwrap(),
            SphericalWeightedPoint::new(sp(&[3, 4]), int(1)).unwrap(),
            SphericalWeightedPoint::new(sp(&[-24, 7]), ratio(1, 2)).unwrap(),
            SphericalWeightedPoint::new(sp(&[4, -3]), int(2)).unwrap(),
            SphericalWeightedPoint::new(sp(&[-3, -4]), int(1)).unwrap(),
        ];
        let lifted: Vec<Vec<Scalar>> = pts.iter().map(|p| p.lifted()).collect();
        for combo in [[0usize, 1], [0, 3], [2, 4], [1, 2]] {
            let h = spherical_heft_weighted(&pts, &combo).unwrap();
            let mut expect = Vec::new();
            for j in 0..pts.len() {
                if combo.contains(&j) {
                    continue;
                }
                let a = &lifted[combo[0]];
                let b = &lifted[combo[1]];
                let row = |q: &[Scalar]| vec![q[0].clone() - &a[0], q[1].clone() - &a[1]];
                let det2 = |r1: &[Scalar], r2: &[Scalar]| -> Scalar {
                    &r1[0] * &r2[1] - &r1[1] * &r2[0]
                };
                let rb = row(b);
                let s_origin = Sign::of(&det2(&rb, &row(&[int(0), int(0)])));
                let s_q = Sign::of(&det2(&rb, &row(&lifted[j])));
                if s_q == s_origin.flip() {
                    expect.push(j);
                }
            }
            assert_eq!(h.enclosed, expect, "combo {combo:?}");
        }
    }
}
