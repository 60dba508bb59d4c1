//! Small dense exact linear algebra.
//!
//! Determinant signs drive every geometric predicate, so they get a fast
//! path: rows are cleared to integers, and if everything fits in `i128` the
//! sign comes from fraction-free (Bareiss) elimination with overflow checks.
//! On overflow, or for big inputs, the same elimination runs over `BigInt`.
//! Linear systems are solved by plain rational Gauss-Jordan; results are
//! exact, residuals are identically zero.

use num::bigint::BigInt;
use num::{Signed, Zero};

use super::scalar::Scalar;
use super::Sign;
use crate::error::Error;

/// Sign of the determinant of a square matrix given as rows.
pub fn sign_det(rows: &[Vec<Scalar>]) -> Sign {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    if n == 0 {
        return Sign::Positive;
    }
    let int_rows = clear_denominators(rows);
    if let Some(small) = to_i128(&int_rows) {
        if let Some(sign) = bareiss_sign_i128(small) {
            return sign;
        }
    }
    bareiss_sign_bigint(int_rows)
}

/// Exact determinant value.
pub fn det(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    if n == 0 {
        return Scalar::from_integer(BigInt::from(1));
    }
    let mut factor = Scalar::from_integer(BigInt::from(1));
    let mut int_rows = Vec::with_capacity(n);
    for row in rows {
        let lcm = row
            .iter()
            .fold(BigInt::from(1), |acc, s| num::integer::lcm(acc, s.denom().clone()));
        let cleared: Vec<BigInt> = row.iter().map(|s| s.numer() * (&lcm / s.denom())).collect();
        factor *= Scalar::from_integer(lcm);
        int_rows.push(cleared);
    }
    Scalar::from_integer(bareiss_value_bigint(int_rows)) / factor
}

/// Row-wise denominator clearing; multiplies each row by a positive integer,
/// which preserves the determinant sign.
fn clear_denominators(rows: &[Vec<Scalar>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::from(1), |acc, s| num::integer::lcm(acc, s.denom().clone()));
            row.iter().map(|s| s.numer() * (&lcm / s.denom())).collect()
        })
        .collect()
}

fn to_i128(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|row| row.iter().map(|v| i128::try_from(v).ok()).collect())
        .collect()
}

/// Fraction-free elimination over i128; `None` means overflow, fall back.
pub(crate) fn bareiss_sign_i128(mut m: Vec<Vec<i128>>) -> Option<Sign> {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let pivot = (k + 1..n).find(|&r| m[r][k] != 0);
            match pivot {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Some(Sign::Zero),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    let last = m[n - 1][n - 1];
    Some(if last == 0 {
        Sign::Zero
    } else if (last > 0) == (sign > 0) {
        Sign::Positive
    } else {
        Sign::Negative
    })
}

fn bareiss_sign_bigint(m: Vec<Vec<BigInt>>) -> Sign {
    let v = bareiss_value_bigint(m);
    if v.is_zero() {
        Sign::Zero
    } else if v.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

fn bareiss_value_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match pivot {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let last = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -last
    } else {
        last
    }
}

/// Exact solution of `matrix * x = rhs` by rational Gauss-Jordan.
pub fn solve_linear(matrix: &[Vec<Scalar>], rhs: &[Scalar]) -> Result<Vec<Scalar>, Error> {
    let n = matrix.len();
    if rhs.len() != n || matrix.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: rhs.len(),
        });
    }
    let mut aug: Vec<Vec<Scalar>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !aug[r][k].is_zero()).ok_or(Error::SingularMatrix)?;
        aug.swap(k, pivot);
        let p = aug[k][k].clone();
        for j in k..=n {
            aug[k][j] = &aug[k][j] / &p;
        }
        for i in 0..n {
            if i != k && !aug[i][k].is_zero() {
                let f = aug[i][k].clone();
                for j in k..=n {
                    let delta = &f * &aug[k][j];
                    aug[i][j] = &aug[i][j] - &delta;
                }
            }
        }
    }
    Ok(aug.into_iter().map(|row| row[row.len() - 1].clone()).collect())
}

/// Normal to the hyperplane spanned by `n-1` vectors in R^n (generalized
/// cross product by cofactor expansion). Zero vector iff the input is
/// linearly dependent.
pub fn hyperplane_normal(vectors: &[Vec<Scalar>]) -> Vec<Scalar> {
    let n = vectors.first().map_or(1, |v| v.len());
    debug_assert_eq!(vectors.len() + 1, n);
    (0..n)
        .map(|drop| {
            let minor: Vec<Vec<Scalar>> = vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != drop)
                        .map(|(_, s)| s.clone())
                        .collect()
                })
                .collect();
            let d = det(&minor);
            if drop % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Affine rank of a point cloud: dimension of the affine hull.
pub fn affine_rank(points: &[Vec<Scalar>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let mut rows: Vec<Vec<Scalar>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let cols = base.len();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let p = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if !rows[r][col].is_zero() {
                let f = &rows[r][col] / &p;
                for c in col..cols {
                    let delta = &f * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
