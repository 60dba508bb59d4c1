//! Finite point sets in R^d: genericity checking, heft computation, k-hefty
//! simplex enumeration, and covering queries.

mod depth;
mod disjoint;
pub(crate) mod fast;
mod generators;
mod split;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, GenericityWitness};
use crate::numeric::{
    in_sphere, lifted_sign, orientation, point_in_simplex, Containment, Point, Scalar, Sign,
};

pub use disjoint::{fixed_enclosed_disjointness, interiors_disjoint};
pub use generators::{gen_pentagon, gen_radial, gen_random_points, gen_random_points_in_range};
pub use split::{cover_split_check, SplitResult};

/// An indexed finite point set. Indices 0..n-1 are stable identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
    label: String,
}

/// A d-simplex on set indices together with the indices strictly enclosed by
/// its circumscribed sphere. Its heft is `enclosed.len()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HeftySimplex {
    pub vertices: Vec<usize>,
    pub enclosed: Vec<usize>,
}

impl HeftySimplex {
    pub fn heft(&self) -> usize {
        self.enclosed.len()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Result of a covering query: how many k-hefty simplices contain the query
/// point in their interior, and which ones. Boundary incidences set the flag
/// but are never counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub query: Point,
    pub k: usize,
    pub count: usize,
    pub witnesses: Vec<HeftySimplex>,
    pub boundary_flag: bool,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Point>, label: impl Into<String>) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        for (i, p) in points.iter().enumerate() {
            for (j, q) in points.iter().enumerate().skip(i + 1) {
                if p == q {
                    return Err(Error::NonGeneric(GenericityWitness::DuplicatePoint(i, j)));
                }
            }
        }
        Ok(PointSet {
            dim,
            points,
            label: label.into(),
        })
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

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn simplex_points(&self, indices: &[usize]) -> Vec<Point> {
        indices.iter().map(|&i| self.points[i].clone()).collect()
    }

    fn int_grid(&self) -> Option<Vec<Vec<i128>>> {
        fast::integerize(&[self.points()]).map(|mut g| g.pop().expect("one group"))
    }

    /// Exhaustive genericity check: every (d+1)-subset affinely independent,
    /// every (d+2)-subset non-cospherical. Returns the first violating tuple.
    pub fn check_generic(&self) -> Result<(), GenericityWitness> {
        let d = self.dim;
        let n = self.len();
        let grid = self.int_grid();
        for combo in (0..n).combinations(d + 1) {
            let sign = grid
                .as_deref()
                .and_then(|g| {
                    let rows: Vec<&[i128]> = combo.iter().map(|&i| g[i].as_slice()).collect();
                    fast::orientation_int(&rows)
                })
                .map(Ok)
                .unwrap_or_else(|| orientation(&self.simplex_points(&combo)))
                .map_err(|_| GenericityWitness::AffinelyDependent(combo.clone()))?;
            if sign == Sign::Zero {
                return Err(GenericityWitness::AffinelyDependent(combo));
            }
        }
        for combo in (0..n).combinations(d + 2) {
            let sign = grid
                .as_deref()
                .and_then(|g| {
                    let rows: Vec<&[i128]> = combo.iter().map(|&i| g[i].as_slice()).collect();
                    fast::lifted_sign_int(&rows)
                })
                .unwrap_or_else(|| {
                    lifted_sign(&self.simplex_points(&combo[1..]), &self.points[combo[0]])
                });
            if sign == Sign::Zero {
                return Err(GenericityWitness::Cospherical(combo));
            }
        }
        Ok(())
    }

    pub fn is_generic(&self) -> bool {
        self.check_generic().is_ok()
    }

    fn validate_vertex_indices(&self, indices: &[usize]) -> Result<Vec<usize>, Error> {
        if indices.len() != self.dim + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.dim + 1,
                got: indices.len(),
            });
        }
        for &i in indices {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: self.len(),
                });
            }
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RepeatedIndex(w[0]));
            }
        }
        Ok(sorted)
    }

    /// Heft of the simplex on the given d+1 indices: the set of other indices
    /// whose points lie strictly inside its circumscribed sphere.
    pub fn heft(&self, vertex_indices: &[usize]) -> Result<HeftySimplex, Error> {
        let vertices = self.validate_vertex_indices(vertex_indices)?;
        let simplex = self.simplex_points(&vertices);
        if orientation(&simplex)? == Sign::Zero {
            return Err(Error::NonGeneric(GenericityWitness::AffinelyDependent(
                vertices,
            )));
        }
        let mut enclosed = Vec::new();
        for i in 0..self.len() {
            if vertices.binary_search(&i).is_ok() {
                continue;
            }
            match in_sphere(&simplex, &self.points[i])? {
                Sign::Positive => enclosed.push(i),
                Sign::Zero => {
                    let mut witness = vertices.clone();
                    witness.push(i);
                    witness.sort_unstable();
                    return Err(Error::NonGeneric(GenericityWitness::Cospherical(witness)));
                }
                Sign::Negative => {}
            }
        }
        Ok(HeftySimplex { vertices, enclosed })
    }

    fn max_heft(&self) -> Result<usize, Error> {
        let d = self.dim;
        if self.len() < d + 1 {
            return Err(Error::InvalidInput(format!(
                "need at least {} points in dimension {d}, have {}",
                d + 1,
                self.len()
            )));
        }
        Ok(self.len() - d - 1)
    }

    /// Heft of a sorted valid subset via the integer grid; `None` defers to
    /// the exact rational path (overflow, or a true Zero sign that needs its
    /// structured witness).
    fn heft_fast(&self, vertices: &[usize], grid: &[Vec<i128>]) -> Option<HeftySimplex> {
        let simplex: Vec<&[i128]> = vertices.iter().map(|&i| grid[i].as_slice()).collect();
        let mut enclosed = Vec::new();
        for i in 0..self.len() {
            if vertices.binary_search(&i).is_ok() {
                continue;
            }
            match fast::in_sphere_int(&simplex, &grid[i])? {
                Sign::Positive => enclosed.push(i),
                Sign::Zero => return None,
                Sign::Negative => {}
            }
        }
        Some(HeftySimplex {
            vertices: vertices.to_vec(),
            enclosed,
        })
    }

    fn heft_via(&self, combo: &[usize], grid: Option<&[Vec<i128>]>) -> Result<HeftySimplex, Error> {
        if let Some(g) = grid {
            if let Some(s) = self.heft_fast(combo, g) {
                return Ok(s);
            }
        }
        self.heft(combo)
    }

    /// All simplices with heft exactly k, by full scan over the C(n, d+1)
    /// vertex subsets, sorted by vertex indices.
    pub fn enumerate_hefty(&self, k: usize) -> Result<Vec<HeftySimplex>, Error> {
        let max = self.max_heft()?;
        if k > max {
            return Err(Error::KOutOfRange { k, max });
        }
        let grid = self.int_grid();
        let mut out = Vec::new();
        for combo in (0..self.len()).combinations(self.dim + 1) {
            let simplex = self.heft_via(&combo, grid.as_deref())?;
            if simplex.heft() == k {
                out.push(simplex);
            }
        }
        Ok(out)
    }

    /// Heft of every (d+1)-subset in one scan, in vertex-index order.
    pub fn enumerate_all(&self) -> Result<Vec<HeftySimplex>, Error> {
        self.max_heft()?;
        let grid = self.int_grid();
        (0..self.len())
            .combinations(self.dim + 1)
            .map(|combo| self.heft_via(&combo, grid.as_deref()))
            .collect()
    }

    /// Parallel variant of [`enumerate_all`](Self::enumerate_all); the output
    /// order is identical to the serial scan.
    pub fn enumerate_all_parallel(&self) -> Result<Vec<HeftySimplex>, Error> {
        self.max_heft()?;
        let grid = self.int_grid();
        let combos: Vec<Vec<usize>> = (0..self.len()).combinations(self.dim + 1).collect();
        combos
            .into_par_iter()
            .map(|combo| self.heft_via(&combo, grid.as_deref()))
            .collect()
    }

    /// How many k-hefty simplices contain the query point strictly.
    pub fn covering_count(&self, k: usize, query: &Point) -> Result<CoverReport, Error> {
        if query.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: query.dim(),
            });
        }
        if let Some(i) = self.points.iter().position(|p| p == query) {
            return Err(Error::QueryAtSetPoint(i));
        }
        let simplices = self.enumerate_hefty(k)?;
        self.cover_report(k, query, simplices)
    }

    /// Covering query against an already-enumerated family of k-hefty
    /// simplices, so one scan can serve many query points.
    pub fn covering_among(
        &self,
        k: usize,
        query: &Point,
        simplices: &[HeftySimplex],
    ) -> Result<CoverReport, Error> {
        if query.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: query.dim(),
            });
        }
        if let Some(i) = self.points.iter().position(|p| p == query) {
            return Err(Error::QueryAtSetPoint(i));
        }
        self.cover_report(k, query, simplices.to_vec())
    }

    fn cover_report(
        &self,
        k: usize,
        query: &Point,
        simplices: Vec<HeftySimplex>,
    ) -> Result<CoverReport, Error> {
        let joint = fast::integerize(&[self.points(), std::slice::from_ref(query)]);
        let (grid, int_query) = match joint {
            Some(mut g) => {
                let q = g.pop().expect("query group");
                (Some(g.pop().expect("point group")), q.into_iter().next())
            }
            None => (None, None),
        };
        let mut witnesses = Vec::new();
        let mut boundary_flag = false;
        for s in simplices {
            let fast_result = match (&grid, &int_query) {
                (Some(g), Some(q)) => {
                    let simplex: Vec<&[i128]> =
                        s.vertices.iter().map(|&i| g[i].as_slice()).collect();
                    fast::containment_int(&simplex, q)
                }
                _ => None,
            };
            let containment = match fast_result {
                Some(c) => c,
                None => point_in_simplex(&self.simplex_points(&s.vertices), query)?,
            };
            match containment {
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

    /// Covering count of a small punctured neighborhood of a vertex by the
    /// k-hefty simplices incident to it.
    ///
    /// Probes 2d+1 directions (2 in dimension 1), walking each query point
    /// toward the vertex with geometrically shrinking steps until the count
    /// of containing incident simplices is identical on three consecutive
    /// steps. The stabilized value is cross-checked against the exact
    /// directional limit (barycentric entry test at the vertex); the walk
    /// never truncates silently.
    pub fn local_covering_count(&self, k: usize, vertex: usize) -> Result<usize, Error> {
        if vertex >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: vertex,
                len: self.len(),
            });
        }
        let incident: Vec<HeftySimplex> = self
            .enumerate_hefty(k)?
            .into_iter()
            .filter(|s| s.contains_vertex(vertex))
            .collect();
        let v = &self.points[vertex];
        let mut stabilized: Option<usize> = None;
        for dir in probe_directions(self.dim) {
            let limit = incident
                .iter()
                .filter(|s| self.enters_strictly(s, vertex, &dir))
                .count();
            let walked = self.walk_direction(&incident, v, &dir, vertex, limit)?;
            match stabilized {
                None => stabilized = Some(walked),
                Some(prev) if prev != walked => {
                    return Err(Error::StabilizationFailure {
                        vertex,
                        detail: format!(
                            "directions disagree: {prev} vs {walked} along {dir:?}"
                        ),
                    });
                }
                Some(_) => {}
            }
        }
        Ok(stabilized.unwrap_or(0))
    }

    /// Does the ray v + t*dir enter the interior of the incident simplex for
    /// all sufficiently small t > 0? Exact: solve dir = sum mu_j (w_j - v)
    /// and require every mu_j > 0.
    fn enters_strictly(&self, simplex: &HeftySimplex, vertex: usize, dir: &[Scalar]) -> bool {
        let v = &self.points[vertex];
        let others: Vec<&Point> = simplex
            .vertices
            .iter()
            .filter(|&&i| i != vertex)
            .map(|&i| &self.points[i])
            .collect();
        let d = self.dim;
        // columns are w_j - v; row i of the system is coordinate i
        let matrix: Vec<Vec<Scalar>> = (0..d)
            .map(|row| {
                others
                    .iter()
                    .map(|w| w.coord(row) - v.coord(row))
                    .collect()
            })
            .collect();
        match crate::numeric::solve_linear(&matrix, dir) {
            Ok(mu) => mu.iter().all(|m| Sign::of(m) == Sign::Positive),
            Err(_) => false,
        }
    }

    /// Walk v + t*dir with geometrically shrinking t until the count of
    /// containing incident simplices is identical on three consecutive steps
    /// and agrees with the exact directional limit; the count is monotone in
    /// t, so earlier plateaus at coarse scales are walked through.
    fn walk_direction(
        &self,
        incident: &[HeftySimplex],
        v: &Point,
        dir: &[Scalar],
        vertex: usize,
        limit: usize,
    ) -> Result<usize, Error> {
        let mut t = self.coordinate_spread().max(crate::numeric::int(1));
        let quarter = crate::numeric::ratio(1, 4);
        let mut last: Option<usize> = None;
        let mut consecutive = 0;
        for _ in 0..100 {
            let q = Point::new(
                v.coords()
                    .iter()
                    .zip(dir)
                    .map(|(c, u)| c + &t * u)
                    .collect(),
            );
            t = &t * &quarter;
            let mut count = 0;
            let mut clean = true;
            for s in incident {
                match point_in_simplex(&self.simplex_points(&s.vertices), &q)? {
                    Containment::Interior => count += 1,
                    Containment::Boundary => {
                        clean = false;
                        break;
                    }
                    Containment::Outside => {}
                }
            }
            if !clean {
                continue;
            }
            if last == Some(count) {
                consecutive += 1;
            } else {
                last = Some(count);
                consecutive = 1;
            }
            if consecutive >= 3 && count == limit {
                return Ok(count);
            }
        }
        Err(Error::StabilizationFailure {
            vertex,
            detail: format!(
                "no stable count matching the directional limit {limit} after 100 steps along {dir:?}"
            ),
        })
    }

    fn coordinate_spread(&self) -> Scalar {
        let mut spread = Scalar::from_integer(0.into());
        for axis in 0..self.dim {
            let mut min = self.points[0].coord(axis).clone();
            let mut max = min.clone();
            for p in &self.points {
                let c = p.coord(axis);
                if c < &min {
                    min = c.clone();
                }
                if c > &max {
                    max = c.clone();
                }
            }
            let range = max - min;
            if range > spread {
                spread = range;
            }
        }
        spread
    }

    /// Tukey depth: the minimum, over open half-spaces containing the query,
    /// of the number of set points in the half-space.
    pub fn tukey_depth(&self, query: &Point) -> Result<usize, Error> {
        depth::tukey_depth(self, query)
    }

    /// Membership in the k-hull: the intersection of all closed half-spaces
    /// missing at most k points. Equivalent to Tukey depth >= k+1.
    pub fn khull_member(&self, k: usize, query: &Point) -> Result<bool, Error> {
        Ok(self.tukey_depth(query)? >= k + 1)
    }
}

/// Probe directions for local covering: non-axis-aligned integer directions,
/// two per axis plus the all-ones vector, so all orthants are represented.
fn probe_directions(d: usize) -> Vec<Vec<Scalar>> {
    use crate::numeric::int;
    if d == 1 {
        return vec![vec![int(1)], vec![int(-1)]];
    }
    let mut dirs = Vec::with_capacity(2 * d + 1);
    for i in 0..d {
        let base: Vec<Scalar> = (0..d)
            .map(|j| {
                if j == i {
                    int(257 + (j as i64 + 1))
                } else {
                    int(j as i64 + 1)
                }
            })
            .collect();
        dirs.push(base.clone());
        dirs.push(base.into_iter().map(|c| -c).collect());
    }
    dirs.push(vec![int(1); d]);
    dirs
}
