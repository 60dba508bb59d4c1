//! Weighted points in R^d: power distance, bisectors, orthospheres, and
//! weighted heft.
//!
//! A weighted point (a, w) pictures a sphere of squared radius w around a;
//! the power of x from it is |x-a|^2 - w. Two weighted points are orthogonal
//! when |a-b|^2 = w_a + w_b. Every d+1 weighted points with affinely
//! independent locations have a unique orthocenter: the weighted point
//! orthogonal to all of them. The heft of the simplex on their locations
//! counts the weighted points strictly "closer than orthogonal" to that
//! orthocenter.

use itertools::Itertools;

use crate::error::{Error, GenericityWitness};
use crate::euclidean::{CoverReport, HeftySimplex, PointSet};
use crate::numeric::{
    dist_sq, dot, norm_sq, orientation, point_in_simplex, solve_linear, sub, Containment, Point,
    Scalar, Sign,
};

/// A location with a weight w = r^2; the sign of w is unrestricted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPoint {
    pub location: Point,
    pub weight: Scalar,
}

impl WeightedPoint {
    pub fn new(location: Point, weight: Scalar) -> Self {
        WeightedPoint { location, weight }
    }

    pub fn unweighted(location: Point) -> Self {
        WeightedPoint {
            location,
            weight: Scalar::from_integer(0.into()),
        }
    }

    /// Power (weighted squared distance) of x from this point:
    /// `|x - a|^2 - w_a`.
    pub fn power(&self, x: &Point) -> Scalar {
        dist_sq(x, &self.location) - &self.weight
    }
}

/// Hyperplane `<normal, x> = offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Scalar>,
    pub offset: Scalar,
}

impl Hyperplane {
    /// Sign of `<normal, x> - offset`.
    pub fn side(&self, x: &Point) -> Sign {
        Sign::of(&(dot(&self.normal, x.coords()) - &self.offset))
    }
}

/// Bisector of two weighted points: the hyperplane of equal power. Normal is
/// parallel to b - a; with equal weights it is the perpendicular bisector.
pub fn bisector(a: &WeightedPoint, b: &WeightedPoint) -> Result<Hyperplane, Error> {
    if a.location == b.location {
        return Err(Error::InvalidInput(
            "bisector undefined for coincident locations".into(),
        ));
    }
    let normal: Vec<Scalar> = sub(&b.location, &a.location)
        .into_iter()
        .map(|c| &c + &c)
        .collect();
    let offset = (norm_sq(b.location.coords()) - &b.weight)
        - (norm_sq(a.location.coords()) - &a.weight);
    Ok(Hyperplane { normal, offset })
}

/// The unique weighted point orthogonal to d+1 weighted points with affinely
/// independent locations, by exact linear solve. Its weight may be negative.
pub fn orthocenter(points: &[WeightedPoint]) -> Result<WeightedPoint, Error> {
    let d = points
        .first()
        .ok_or(Error::DimensionMismatch { expected: 1, got: 0 })?
        .location
        .dim();
    if points.len() != d + 1 {
        return Err(Error::DimensionMismatch {
            expected: d + 1,
            got: points.len(),
        });
    }
    let base = &points[0];
    let base_val = norm_sq(base.location.coords()) - &base.weight;
    let matrix: Vec<Vec<Scalar>> = points[1..]
        .iter()
        .map(|p| {
            sub(&p.location, &base.location)
                .into_iter()
                .map(|c| &c + &c)
                .collect()
        })
        .collect();
    let rhs: Vec<Scalar> = points[1..]
        .iter()
        .map(|p| norm_sq(p.location.coords()) - &p.weight - &base_val)
        .collect();
    let center = solve_linear(&matrix, &rhs).map_err(|e| match e {
        Error::SingularMatrix => Error::DegenerateSimplex {
            points: points.iter().map(|p| p.location.clone()).collect(),
        },
        other => other,
    })?;
    let center = Point::new(center);
    let weight = dist_sq(&center, &base.location) - &base.weight;
    Ok(WeightedPoint {
        location: center,
        weight,
    })
}

/// An indexed set of weighted points with distinct locations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSet {
    dim: usize,
    points: Vec<WeightedPoint>,
    label: String,
}

impl WeightedSet {
    pub fn new(
        dim: usize,
        points: Vec<WeightedPoint>,
        label: impl Into<String>,
    ) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        for p in &points {
            if p.location.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.location.dim(),
                });
            }
        }
        for (i, p) in points.iter().enumerate() {
            for (j, q) in points.iter().enumerate().skip(i + 1) {
                if p.location == q.location {
                    return Err(Error::NonGeneric(GenericityWitness::DuplicatePoint(i, j)));
                }
            }
        }
        Ok(WeightedSet {
            dim,
            points,
            label: label.into(),
        })
    }

    pub fn from_locations(set: &PointSet) -> Self {
        WeightedSet {
            dim: set.dim(),
            points: set
                .points()
                .iter()
                .cloned()
                .map(WeightedPoint::unweighted)
                .collect(),
            label: set.label().to_string(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn point(&self, i: usize) -> &WeightedPoint {
        &self.points[i]
    }

    pub fn points(&self) -> &[WeightedPoint] {
        &self.points
    }

    pub fn locations(&self) -> PointSet {
        let pts = self.points.iter().map(|p| p.location.clone()).collect();
        PointSet::new(self.dim, pts, self.label.clone()).expect("locations validated on construction")
    }

    fn gather(&self, indices: &[usize]) -> Vec<WeightedPoint> {
        indices.iter().map(|&i| self.points[i].clone()).collect()
    }

    /// Location genericity plus a nonzero orthosphere test for every held-out
    /// point of every (d+2)-subset.
    pub fn check_generic(&self) -> Result<(), GenericityWitness> {
        let d = self.dim;
        let n = self.len();
        let locs = self.locations();
        for combo in (0..n).combinations(d + 1) {
            let pts = locs.simplex_points(&combo);
            if orientation(&pts).map(|s| s.is_zero()).unwrap_or(true) {
                return Err(GenericityWitness::AffinelyDependent(combo));
            }
        }
        for combo in (0..n).combinations(d + 2) {
            let center = match orthocenter(&self.gather(&combo[1..])) {
                Ok(c) => c,
                Err(_) => return Err(GenericityWitness::AffinelyDependent(combo)),
            };
            if self.ortho_test(&center, combo[0]).is_zero() {
                return Err(GenericityWitness::OrthoDegenerate(combo));
            }
        }
        Ok(())
    }

    /// Sign of `|x - b|^2 - w_x - w_b` for set point b against a weighted
    /// point x; Negative means "closer than orthogonal", i.e. enclosed.
    fn ortho_test(&self, x: &WeightedPoint, b: usize) -> Sign {
        let p = &self.points[b];
        Sign::of(&(dist_sq(&x.location, &p.location) - &x.weight - &p.weight))
    }

    /// Weighted heft: the set points strictly closer than orthogonal to the
    /// orthocenter of the chosen d+1 weighted points.
    pub fn weighted_heft(&self, vertex_indices: &[usize]) -> Result<HeftySimplex, Error> {
        let mut vertices = vertex_indices.to_vec();
        vertices.sort_unstable();
        if vertices.len() != self.dim + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.dim + 1,
                got: vertices.len(),
            });
        }
        for &i in &vertices {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: self.len(),
                });
            }
        }
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RepeatedIndex(w[0]));
            }
        }
        let center = orthocenter(&self.gather(&vertices)).map_err(|e| match e {
            Error::DegenerateSimplex { .. } => {
                Error::NonGeneric(GenericityWitness::AffinelyDependent(vertices.clone()))
            }
            other => other,
        })?;
        let mut enclosed = Vec::new();
        for i in 0..self.len() {
            if vertices.binary_search(&i).is_ok() {
                continue;
            }
            match self.ortho_test(&center, i) {
                Sign::Negative => enclosed.push(i),
                Sign::Zero => {
                    let mut witness = vertices.clone();
                    witness.push(i);
                    witness.sort_unstable();
                    return Err(Error::NonGeneric(GenericityWitness::OrthoDegenerate(witness)));
                }
                Sign::Positive => {}
            }
        }
        Ok(HeftySimplex { vertices, enclosed })
    }

    /// All weighted simplices with heft exactly k.
    pub fn enumerate_hefty(&self, k: usize) -> Result<Vec<HeftySimplex>, Error> {
        let d = self.dim;
        if self.len() < d + 1 {
            return Err(Error::InvalidInput(format!(
                "need at least {} weighted points in dimension {d}",
                d + 1
            )));
        }
        let max = self.len() - d - 1;
        if k > max {
            return Err(Error::KOutOfRange { k, max });
        }
        let mut out = Vec::new();
        for combo in (0..self.len()).combinations(d + 1) {
            let s = self.weighted_heft(&combo)?;
            if s.heft() == k {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Covering query: heft-k simplices (convex hulls of locations) whose
    /// interior contains the query.
    pub fn covering_count(&self, k: usize, query: &Point) -> Result<CoverReport, Error> {
        if query.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: query.dim(),
            });
        }
        if let Some(i) = self.points.iter().position(|p| &p.location == query) {
            return Err(Error::QueryAtSetPoint(i));
        }
        let locs = self.locations();
        let mut witnesses = Vec::new();
        let mut boundary_flag = false;
        for s in self.enumerate_hefty(k)? {
            match point_in_simplex(&locs.simplex_points(&s.vertices), query)? {
                Containment::Interior => witnesses.push(s),
                Containment::Boundary => boundary_flag = true,
                Containment::Outside => {}
            }
        }
        Ok(CoverReport {
            query: query.clone(),
            k,
            count: witnesses.len(),
            witnesses,
            boundary_flag,
        })
    }
}

/// The equal-power flat of p+1 weighted points (p <= d), parametrized as a
/// particular point plus a basis of the (d-p)-dimensional direction space.
/// Used to exercise the orthogonal-pencil identity.
pub fn equal_power_flat(points: &[WeightedPoint]) -> Result<(Point, Vec<Vec<Scalar>>), Error> {
    let d = points[0].location.dim();
    let p = points.len() - 1;
    if p == 0 || p > d {
        return Err(Error::InvalidInput(
            "equal-power flat needs 2..=d+1 weighted points".into(),
        ));
    }
    let base = &points[0];
    let base_val = norm_sq(base.location.coords()) - &base.weight;
    // p equations 2<a_i - a_0, x> = (|a_i|^2 - w_i) - (|a_0|^2 - w_0)
    let rows: Vec<Vec<Scalar>> = points[1..]
        .iter()
        .map(|q| {
            sub(&q.location, &base.location)
                .into_iter()
                .map(|c| &c + &c)
                .collect()
        })
        .collect();
    let rhs: Vec<Scalar> = points[1..]
        .iter()
        .map(|q| norm_sq(q.location.coords()) - &q.weight - &base_val)
        .collect();
    // row-reduce the underdetermined system to a particular + homogeneous basis
    let mut aug: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(&rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0usize;
    for col in 0..d {
        let Some(pr) = (rank..aug.len()).find(|&r| !num::Zero::is_zero(&aug[r][col])) else {
            continue;
        };
        aug.swap(rank, pr);
        let pv = aug[rank][col].clone();
        for c in col..=d {
            aug[rank][c] = &aug[rank][c] / &pv;
        }
        for r in 0..aug.len() {
            if r != rank && !num::Zero::is_zero(&aug[r][col]) {
                let f = aug[r][col].clone();
                for c in col..=d {
                    let delta = &f * &aug[rank][c];
                    aug[r][c] = &aug[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == aug.len() {
            break;
        }
    }
    if rank < p {
        return Err(Error::DegenerateSimplex {
            points: points.iter().map(|q| q.location.clone()).collect(),
        });
    }
    let zero = Scalar::from_integer(0.into());
    let mut particular = vec![zero.clone(); d];
    for (r, &col) in pivot_cols.iter().enumerate() {
        particular[col] = aug[r][d].clone();
    }
    let free_cols: Vec<usize> = (0..d).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![zero.clone(); d];
        v[fc] = Scalar::from_integer(1.into());
        for (r, &col) in pivot_cols.iter().enumerate() {
            v[col] = -aug[r][fc].clone();
        }
        basis.push(v);
    }
    Ok((Point::new(particular), basis))
}
