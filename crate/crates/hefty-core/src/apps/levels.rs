//! Levels of arrangements of affine functions and their local minima.
//!
//! The k-level is the pointwise (k+1)-largest value of the collection. A
//! local minimum sits where d+1 graphs meet; it is accepted when the d+1
//! gradients surround the origin and exactly k functions pass strictly above
//! the meeting point.

use itertools::Itertools;

use crate::error::{Error, GenericityWitness};
use crate::numeric::{dot, int, point_in_simplex, solve_linear, Containment, Point, Scalar, Sign};

/// An affine function h(x) = <x, g> + c with nonzero gradient g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFunction {
    pub gradient: Vec<Scalar>,
    pub offset: Scalar,
}

impl AffineFunction {
    pub fn new(gradient: Vec<Scalar>, offset: Scalar) -> Result<Self, Error> {
        if gradient.iter().all(num::Zero::is_zero) {
            return Err(Error::InvalidInput("gradient must be nonzero".into()));
        }
        Ok(AffineFunction { gradient, offset })
    }

    pub fn eval(&self, x: &Point) -> Scalar {
        dot(&self.gradient, x.coords()) + &self.offset
    }

    pub fn dim(&self) -> usize {
        self.gradient.len()
    }
}

/// An indexed collection of affine functions over R^d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    functions: Vec<AffineFunction>,
}

impl Arrangement {
    pub fn new(dim: usize, functions: Vec<AffineFunction>) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        for f in &functions {
            if f.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: f.dim(),
                });
            }
        }
        Ok(Arrangement { dim, functions })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    pub fn function(&self, i: usize) -> &AffineFunction {
        &self.functions[i]
    }

    pub fn functions(&self) -> &[AffineFunction] {
        &self.functions
    }
}

/// Local minima of the k-level: for every (d+1)-subset of functions meeting
/// at a common point (x, xi), accept x iff the origin is interior to the
/// convex hull of the gradients and exactly k functions pass strictly above.
/// Singular subsets are skipped with a debug log entry.
pub fn level_minima(arr: &Arrangement, k: usize) -> Result<Vec<Point>, Error> {
    let d = arr.dim();
    let mut minima = Vec::new();
    if arr.len() < d + 1 {
        return Ok(minima);
    }
    for combo in (0..arr.len()).combinations(d + 1) {
        // unknowns (x, xi): <g_i, x> - xi = -c_i
        let matrix: Vec<Vec<Scalar>> = combo
            .iter()
            .map(|&i| {
                let mut row = arr.function(i).gradient.clone();
                row.push(int(-1));
                row
            })
            .collect();
        let rhs: Vec<Scalar> = combo.iter().map(|&i| -arr.function(i).offset.clone()).collect();
        let solution = match solve_linear(&matrix, &rhs) {
            Ok(s) => s,
            Err(Error::SingularMatrix) => {
                log::debug!("level_minima: singular function subset {combo:?}, skipped");
                continue;
            }
            Err(e) => return Err(e),
        };
        let (x_coords, xi) = solution.split_at(d);
        let x = Point::new(x_coords.to_vec());
        let xi = &xi[0];

        let gradients: Vec<Point> = combo
            .iter()
            .map(|&i| Point::new(arr.function(i).gradient.clone()))
            .collect();
        match point_in_simplex(&gradients, &Point::origin(d)) {
            Ok(Containment::Interior) => {}
            Ok(_) => continue,
            Err(Error::DegenerateSimplex { .. }) => continue,
            Err(e) => return Err(e),
        }

        let mut above = 0usize;
        let mut degenerate = false;
        for j in 0..arr.len() {
            if combo.contains(&j) {
                continue;
            }
            match Sign::of(&(arr.function(j).eval(&x) - xi)) {
                Sign::Positive => above += 1,
                Sign::Zero => {
                    degenerate = true;
                    break;
                }
                Sign::Negative => {}
            }
        }
        if degenerate {
            let mut w = combo.clone();
            w.sort_unstable();
            return Err(Error::NonGeneric(GenericityWitness::AffinelyDependent(w)));
        }
        if above == k {
            minima.push(x);
        }
    }
    Ok(minima)
}

/// Local maxima of the k-level are the local minima of the (k-d)-level; in
/// particular there are none unless k >= d.
pub fn level_maxima(arr: &Arrangement, k: usize) -> Result<Vec<Point>, Error> {
    if k < arr.dim() {
        return Ok(Vec::new());
    }
    level_minima(arr, k - arr.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apps::binomial_usize;
    use crate::numeric::ratio;

    fn af(gradient: &[i64], offset: i64) -> AffineFunction {
        AffineFunction::new(gradient.iter().map(|&g| int(g)).collect(), int(offset)).unwrap()
    }

    #[test]
    fn single_function_has_no_minima() {
        let arr = Arrangement::new(2, vec![af(&[1, 1], 0)]).unwrap();
        assert!(level_minima(&arr, 0).unwrap().is_empty());
    }

    #[test]
    fn two_crossing_lines_have_one_minimum() {
        // slopes +1 and -1 over R^1: upper envelope has one minimum at x = 0
        let arr = Arrangement::new(1, vec![af(&[1], 0), af(&[-1], 0)]).unwrap();
        let minima = level_minima(&arr, 0).unwrap();
        assert_eq!(minima, vec![Point::from_ints(&[0])]);
        assert!(minima.len() <= binomial_usize(1, 1));
    }

    #[test]
    fn no_maxima_below_dimension() {
        let arr = Arrangement::new(2, vec![af(&[1, 0], 0), af(&[0, 1], 0), af(&[-1, -1], 1)]).unwrap();
        assert!(level_maxima(&arr, 1).unwrap().is_empty());
    }

    #[test]
    fn zero_gradient_is_rejected() {
        assert!(AffineFunction::new(vec![int(0), int(0)], int(1)).is_err());
    }

    #[test]
    fn maxima_are_minima_shifted_by_dimension() {
        let arr = Arrangement::new(1, vec![af(&[1], 0), af(&[-1], 2), af(&[2], -5)]).unwrap();
        let max1 = level_maxima(&arr, 1).unwrap();
        let min0 = level_minima(&arr, 0).unwrap();
        assert_eq!(max1, min0);
    }

    #[test]
    fn minimum_accepted_only_with_surrounding_gradients() {
        // two functions with gradients on the same side never make a minimum
        let arr = Arrangement::new(1, vec![af(&[1], 0), af(&[2], 1)]).unwrap();
        assert!(level_minima(&arr, 0).unwrap().is_empty());
    }

    #[test]
    fn clarkson_bound_small_cases() {
        let arr = Arrangement::new(
            1,
            vec![af(&[1], 0), af(&[-1], 0), af(&[2], 3), af(&[-3], 1), af(&[1], -4)],
        )
        .unwrap();
        for k in 0..=3usize {
            let m = level_minima(&arr, k).unwrap().len();
            assert!(m <= binomial_usize(1 + k, 1), "k={k}: {m}");
        }
    }

    #[test]
    fn rational_crossing_is_exact() {
        let arr = Arrangement::new(1, vec![af(&[3], 1), af(&[-2], 2)]).unwrap();
        let minima = level_minima(&arr, 0).unwrap();
        assert_eq!(minima, vec![Point::new(vec![ratio(1, 5)])]);
    }
}
