//! Exhaustive exact Tukey depth.
//!
//! Candidate half-space boundaries come from two families: hyperplanes
//! through the query plus d-1 set points, and hyperplanes through d set
//! points. For the first family the candidate value is the strict count on
//! either side (the spanning points can be rotated out); for the second it is
//! the strict count on the query's side (the boundary can be translated
//! toward the query). Incidental Zero signs make a candidate unusable and it
//! is skipped; a Zero sign among non-spanning set points in the second family
//! means the set itself is degenerate and is reported.

use itertools::Itertools;

use super::PointSet;
use crate::error::{Error, GenericityWitness};
use crate::numeric::{dot, hyperplane_normal, sub, Point, Sign};

pub(super) fn tukey_depth(set: &PointSet, query: &Point) -> Result<usize, Error> {
    let d = set.dim();
    if query.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: query.dim(),
        });
    }
    if let Some(i) = set.points().iter().position(|p| p == query) {
        return Err(Error::QueryAtSetPoint(i));
    }
    if let Some(depth) = tukey_depth_int(set, query) {
        return Ok(depth);
    }
    tukey_depth_exact(set, query)
}

/// Integer mirror of the scan below; `None` on overflow or on any Zero sign
/// that the exact route must turn into a structured genericity error.
fn tukey_depth_int(set: &PointSet, query: &Point) -> Option<usize> {
    use super::fast;
    let d = set.dim();
    let n = set.len();
    let mut groups = fast::integerize(&[set.points(), std::slice::from_ref(query)])?;
    let q = groups.pop()?.into_iter().next()?;
    let pts = groups.pop()?;
    let mut best = n;

    for combo in (0..n).combinations(d - 1) {
        let spans: Vec<Vec<i128>> = combo.iter().map(|&i| fast::sub_int(&pts[i], &q)).collect();
        let normal = fast::normal_int(&spans)?;
        if normal.iter().all(|&c| c == 0) {
            continue;
        }
        let mut pos = 0usize;
        let mut neg = 0usize;
        let mut tied = false;
        for i in 0..n {
            if combo.contains(&i) {
                continue;
            }
            let mut acc: i128 = 0;
            for (c, (a, b)) in normal.iter().zip(pts[i].iter().zip(&q)) {
                acc = acc.checked_add(c.checked_mul(a - b)?)?;
            }
            match acc.cmp(&0) {
                std::cmp::Ordering::Greater => pos += 1,
                std::cmp::Ordering::Less => neg += 1,
                std::cmp::Ordering::Equal => {
                    tied = true;
                    break;
                }
            }
        }
        if tied {
            continue;
        }
        best = best.min(pos).min(neg);
    }

    for combo in (0..n).combinations(d) {
        let base = &pts[combo[0]];
        let spans: Vec<Vec<i128>> = combo[1..]
            .iter()
            .map(|&i| fast::sub_int(&pts[i], base))
            .collect();
        let normal = fast::normal_int(&spans)?;
        if normal.iter().all(|&c| c == 0) {
            return None; // degenerate set: exact route reports the witness
        }
        let mut query_side: i128 = 0;
        for (c, (a, b)) in normal.iter().zip(q.iter().zip(base)) {
            query_side = query_side.checked_add(c.checked_mul(a - b)?)?;
        }
        if query_side == 0 {
            continue;
        }
        let mut same_side = 0usize;
        for i in 0..n {
            if combo.contains(&i) {
                continue;
            }
            let mut acc: i128 = 0;
            for (c, (a, b)) in normal.iter().zip(pts[i].iter().zip(base)) {
                acc = acc.checked_add(c.checked_mul(a - b)?)?;
            }
            if acc == 0 {
                return None; // degenerate set
            }
            if (acc > 0) == (query_side > 0) {
                same_side += 1;
            }
        }
        best = best.min(same_side);
    }
    Some(best)
}

fn tukey_depth_exact(set: &PointSet, query: &Point) -> Result<usize, Error> {
    let d = set.dim();
    let n = set.len();
    let mut best = n;

    // family a: boundary through the query and d-1 set points
    for combo in (0..n).combinations(d - 1) {
        let spans: Vec<Vec<_>> = combo
            .iter()
            .map(|&i| sub(set.point(i), query))
            .collect();
        let normal = hyperplane_normal(&spans);
        if normal.iter().all(|c| Sign::of(c) == Sign::Zero) {
            continue; // query and the chosen points are affinely dependent
        }
        let mut pos = 0usize;
        let mut neg = 0usize;
        let mut tied = false;
        for i in 0..n {
            if combo.contains(&i) {
                continue;
            }
            match Sign::of(&dot(&sub(set.point(i), query), &normal)) {
                Sign::Positive => pos += 1,
                Sign::Negative => neg += 1,
                Sign::Zero => {
                    tied = true;
                    break;
                }
            }
        }
        if tied {
            continue; // non-generic candidate, rejected
        }
        best = best.min(pos).min(neg);
    }

    // family b: boundary through d set points, query strictly off it
    for combo in (0..n).combinations(d) {
        let base = set.point(combo[0]);
        let spans: Vec<Vec<_>> = combo[1..]
            .iter()
            .map(|&i| sub(set.point(i), base))
            .collect();
        let normal = hyperplane_normal(&spans);
        if normal.iter().all(|c| Sign::of(c) == Sign::Zero) {
            let mut w = combo.clone();
            w.sort_unstable();
            return Err(Error::NonGeneric(GenericityWitness::AffinelyDependent(w)));
        }
        let query_side = Sign::of(&dot(&sub(query, base), &normal));
        if query_side == Sign::Zero {
            continue; // boundary passes through the query: no strict half-space
        }
        let mut same_side = 0usize;
        for i in 0..n {
            if combo.contains(&i) {
                continue;
            }
            match Sign::of(&dot(&sub(set.point(i), base), &normal)) {
                Sign::Zero => {
                    let mut w = combo.clone();
                    w.push(i);
                    w.sort_unstable();
                    return Err(Error::NonGeneric(GenericityWitness::AffinelyDependent(w)));
                }
                s if s == query_side => same_side += 1,
                _ => {}
            }
        }
        best = best.min(same_side);
    }

    Ok(best)
}
