//! Integer fast path for the predicate-heavy scans.
//!
//! Rational coordinates with a small common denominator are rescaled to an
//! integer grid (sign predicates are invariant under uniform positive
//! scaling) and evaluated with checked i128 arithmetic. Any overflow or any
//! Zero sign abandons the fast path for that evaluation; the exact rational
//! route is the single source of truth for degeneracies and errors.

use num::bigint::BigInt;
use num::One;

use crate::numeric::linalg::bareiss_sign_i128;
use crate::numeric::{Containment, Point, Sign};

/// Joint integerization of a point cloud (plus optional extra points) by the
/// least common denominator. `None` if anything falls outside the safe
/// magnitude window.
pub(crate) fn integerize(groups: &[&[Point]]) -> Option<Vec<Vec<Vec<i128>>>> {
    let mut lcm = BigInt::one();
    for group in groups {
        for p in *group {
            for c in p.coords() {
                lcm = num::integer::lcm(lcm, c.denom().clone());
            }
        }
    }
    let mut out = Vec::with_capacity(groups.len());
    let mut max_abs: i128 = 0;
    for group in groups {
        let mut converted = Vec::with_capacity(group.len());
        for p in *group {
            let row: Option<Vec<i128>> = p
                .coords()
                .iter()
                .map(|c| i128::try_from(&(c.numer() * (&lcm / c.denom()))).ok())
                .collect();
            let row = row?;
            for &v in &row {
                max_abs = max_abs.max(v.abs());
            }
            converted.push(row);
        }
        out.push(converted);
    }
    // beyond this the checked ops would fail on nearly every evaluation;
    // within it, they still guard every multiplication individually
    if max_abs >= 1 << 26 {
        return None;
    }
    Some(out)
}

fn checked_dot(a: &[i128], b: &[i128]) -> Option<i128> {
    let mut acc: i128 = 0;
    for (x, y) in a.iter().zip(b) {
        acc = acc.checked_add(x.checked_mul(*y)?)?;
    }
    Some(acc)
}

pub(crate) fn sub_int(a: &[i128], b: &[i128]) -> Vec<i128> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Orientation sign of d+1 integer points in R^d.
pub(crate) fn orientation_int(points: &[&[i128]]) -> Option<Sign> {
    let rows: Vec<Vec<i128>> = points[1..].iter().map(|p| sub_int(p, points[0])).collect();
    bareiss_sign_i128(rows)
}

/// In-sphere sign of `query` against the circumsphere of `simplex`, matching
/// the exact predicate: lifted determinant times orientation times parity.
pub(crate) fn in_sphere_int(simplex: &[&[i128]], query: &[i128]) -> Option<Sign> {
    let d = query.len();
    let orient = orientation_int(simplex)?;
    if orient == Sign::Zero {
        return Some(Sign::Zero); // defer to the exact path for the witness
    }
    let mut rows = Vec::with_capacity(simplex.len());
    for p in simplex {
        let mut row = sub_int(p, query);
        let norm = checked_dot(&row, &row)?;
        row.push(norm);
        rows.push(row);
    }
    let lifted = bareiss_sign_i128(rows)?;
    let parity = if d % 2 == 0 { Sign::Positive } else { Sign::Negative };
    Some(lifted * orient * parity)
}

/// Cosphericality test for d+2 integer points: the lifted determinant with
/// the first point as base.
pub(crate) fn lifted_sign_int(points: &[&[i128]]) -> Option<Sign> {
    let base = points[0];
    let mut rows = Vec::with_capacity(points.len() - 1);
    for p in &points[1..] {
        let mut row = sub_int(p, base);
        let norm = checked_dot(&row, &row)?;
        row.push(norm);
        rows.push(row);
    }
    bareiss_sign_i128(rows)
}

/// Containment of an integer query in the closed integer simplex.
pub(crate) fn containment_int(simplex: &[&[i128]], query: &[i128]) -> Option<Containment> {
    let reference = orientation_int(simplex)?;
    if reference == Sign::Zero {
        return None;
    }
    let mut saw_zero = false;
    let mut working: Vec<&[i128]> = simplex.to_vec();
    for i in 0..simplex.len() {
        working[i] = query;
        let s = orientation_int(&working)?;
        working[i] = simplex[i];
        if s == Sign::Zero {
            saw_zero = true;
        } else if s != reference {
            return Some(Containment::Outside);
        }
    }
    Some(if saw_zero {
        Containment::Boundary
    } else {
        Containment::Interior
    })
}

/// Determinant value of a small integer matrix by fraction-free elimination.
pub(crate) fn det_int(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Some(0),
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
    Some(sign * m[n - 1][n - 1])
}

/// Normal to the span of n-1 integer vectors in R^n by cofactor expansion;
/// all-zero means linearly dependent.
pub(crate) fn normal_int(vectors: &[Vec<i128>]) -> Option<Vec<i128>> {
    let n = vectors.first().map_or(1, |v| v.len());
    let mut normal = Vec::with_capacity(n);
    for drop in 0..n {
        let minor: Vec<Vec<i128>> = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != drop)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let d = det_int(minor)?;
        normal.push(if drop % 2 == 0 { d } else { -d });
    }
    Some(normal)
}
