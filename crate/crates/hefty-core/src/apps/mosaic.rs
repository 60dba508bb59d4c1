//! Order-n mosaic cells: averaged hypersimplex copies spawned by hefty
//! simplices.
//!
//! For p = 1..min(d, n), every (n-p)-hefty simplex contributes one d-cell:
//! the convex hull of the averages of its n-p enclosed points together with
//! each p-subset of its d+1 vertices. For n = 1 these are the Delaunay top
//! cells; the p = 1 cells are 1/n homothets of their source simplices.

use itertools::Itertools;

use crate::error::Error;
use crate::euclidean::{HeftySimplex, PointSet};
use crate::numeric::{int, solve_linear, Containment, Point, Scalar, Sign};

/// One d-cell of the order-n mosaic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MosaicCell {
    /// The (n-p)-hefty simplex that spawned this cell.
    pub source: HeftySimplex,
    /// How many source vertices enter each average.
    pub p: usize,
    /// The mosaic order n.
    pub n: usize,
    /// Cell vertices: averages of (enclosed points + p source vertices).
    pub vertices: Vec<Point>,
}

fn average(set: &PointSet, enclosed: &[usize], subset: &[usize], n: usize) -> Point {
    let d = set.dim();
    let coords: Vec<Scalar> = (0..d)
        .map(|c| {
            let total: Scalar = enclosed
                .iter()
                .chain(subset)
                .map(|&i| set.point(i).coord(c).clone())
                .sum();
            total / int(n as i64)
        })
        .collect();
    Point::new(coords)
}

/// All d-cells of the order-n mosaic of the set.
pub fn order_n_mosaic_cells(set: &PointSet, n: usize) -> Result<Vec<MosaicCell>, Error> {
    if n == 0 {
        return Err(Error::InvalidInput("mosaic order must be at least 1".into()));
    }
    let d = set.dim();
    let mut cells = Vec::new();
    for p in 1..=d.min(n) {
        let hefty = n - p;
        if hefty > set.len().saturating_sub(d + 1) {
            continue;
        }
        for simplex in set.enumerate_hefty(hefty)? {
            let vertices: Vec<Point> = simplex
                .vertices
                .iter()
                .copied()
                .combinations(p)
                .map(|subset| average(set, &simplex.enclosed, &subset, n))
                .collect();
            cells.push(MosaicCell {
                source: simplex,
                p,
                n,
                vertices,
            });
        }
    }
    Ok(cells)
}

/// Membership of a query in a mosaic cell, via the hypersimplex coordinates:
/// solving sum mu_i x_i = n q - sum(enclosed), sum mu_i = p gives the unique
/// affine weights; the cell is `0 <= mu <= 1`, the interior is strict.
pub fn cell_contains(set: &PointSet, cell: &MosaicCell, query: &Point) -> Result<Containment, Error> {
    let d = set.dim();
    if query.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: query.dim(),
        });
    }
    let verts = &cell.source.vertices;
    // rows: d coordinate equations plus the weight-sum equation
    let mut matrix: Vec<Vec<Scalar>> = (0..d)
        .map(|c| verts.iter().map(|&i| set.point(i).coord(c).clone()).collect())
        .collect();
    matrix.push(vec![int(1); verts.len()]);
    let mut rhs: Vec<Scalar> = (0..d)
        .map(|c| {
            let enclosed_sum: Scalar = cell
                .source
                .enclosed
                .iter()
                .map(|&i| set.point(i).coord(c).clone())
                .sum();
            int(cell.n as i64) * query.coord(c) - enclosed_sum
        })
        .collect();
    rhs.push(int(cell.p as i64));
    let mu = solve_linear(&matrix, &rhs)?;
    let mut saw_face = false;
    for m in &mu {
        match Sign::of(m) {
            Sign::Negative => return Ok(Containment::Outside),
            Sign::Zero => saw_face = true,
            Sign::Positive => {}
        }
        match Sign::of(&(int(1) - m)) {
            Sign::Negative => return Ok(Containment::Outside),
            Sign::Zero => saw_face = true,
            Sign::Positive => {}
        }
    }
    Ok(if saw_face {
        Containment::Boundary
    } else {
        Containment::Interior
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclidean::gen_random_points;
    use crate::numeric::ratio;

    #[test]
    fn order_one_mosaic_is_the_delaunay_mosaic() {
        let set = gen_random_points(2, 8, 77).unwrap();
        let cells = order_n_mosaic_cells(&set, 1).unwrap();
        let delaunay = set.enumerate_hefty(0).unwrap();
        assert_eq!(cells.len(), delaunay.len());
        for cell in &cells {
            assert_eq!(cell.p, 1);
            let expected: Vec<Point> = cell
                .source
                .vertices
                .iter()
                .map(|&i| set.point(i).clone())
                .collect();
            assert_eq!(cell.vertices, expected);
        }
    }

    #[test]
    fn p1_cells_are_homothets_scaled_by_one_over_n() {
        let set = gen_random_points(2, 9, 78).unwrap();
        let n = 3usize;
        let cells = order_n_mosaic_cells(&set, n).unwrap();
        for cell in cells.iter().filter(|c| c.p == 1) {
            // vertex i of the cell = (1/n) * source vertex i + constant
            let shift: Vec<Scalar> = (0..set.dim())
                .map(|c| {
                    cell.vertices[0].coord(c)
                        - set.point(cell.source.vertices[0]).coord(c) * ratio(1, n as i64)
                })
                .collect();
            for (cv, &sv) in cell.vertices.iter().zip(&cell.source.vertices) {
                for c in 0..set.dim() {
                    let expect = set.point(sv).coord(c) * ratio(1, n as i64) + &shift[c];
                    assert_eq!(cv.coord(c), &expect);
                }
            }
        }
    }

    #[test]
    fn mosaic_cells_tile_around_deep_queries() {
        let set = gen_random_points(2, 10, 79).unwrap();
        for n in [1usize, 2] {
            let cells = order_n_mosaic_cells(&set, n).unwrap();
            let q = crate::euclidean::tests_support::deep_interior_query(&set, 3);
            let mut inside = 0usize;
            for cell in &cells {
                match cell_contains(&set, cell, &q).unwrap() {
                    Containment::Interior => inside += 1,
                    Containment::Boundary | Containment::Outside => {}
                }
            }
            assert_eq!(inside, 1, "order {n}");
        }
    }
}
