//! Chambers of half-space arrangements and hemisphere censuses.
//!
//! Chambers are found by sampling exact interior points next to every vertex
//! of the arrangement clipped to a bounding box, then deduplicating by sign
//! vector. The box encloses all arrangement vertices, so every chamber meets
//! its interior and is sampled at some vertex of the clipped complex. The
//! heft of a chamber counts the half-spaces whose positive side contains it.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::identities::binomial_usize;
use super::levels::{AffineFunction, Arrangement};
use crate::error::{Error, GenericityWitness};
use crate::numeric::{dot, int, ratio, solve_linear, Point, Scalar, Sign};
use crate::spherical::SphericalPoint;

/// A full-dimensional cell of the arrangement, identified by its sign vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    /// Sign of each function on the chamber; `true` = positive side.
    pub positive: Vec<bool>,
    /// Number of positive signs.
    pub heft: usize,
    /// An exact interior point realizing the sign vector strictly.
    pub witness: Point,
    pub bounded: bool,
}

fn eval(f: &AffineFunction, x: &Point) -> Scalar {
    f.eval(x)
}

fn box_functions(dim: usize, half_width: &Scalar) -> Vec<AffineFunction> {
    let mut out = Vec::with_capacity(2 * dim);
    for axis in 0..dim {
        for sign in [1i64, -1] {
            let mut g = vec![Scalar::zero(); dim];
            g[axis] = int(sign);
            out.push(AffineFunction {
                gradient: g,
                offset: -half_width.clone(),
            });
        }
    }
    out
}

fn arrangement_vertices(arr: &Arrangement) -> Result<Vec<Point>, Error> {
    let d = arr.dim();
    let mut vertices = Vec::new();
    for combo in (0..arr.len()).combinations(d) {
        let matrix: Vec<Vec<Scalar>> = combo
            .iter()
            .map(|&i| arr.function(i).gradient.clone())
            .collect();
        let rhs: Vec<Scalar> = combo.iter().map(|&i| -arr.function(i).offset.clone()).collect();
        let Ok(x) = solve_linear(&matrix, &rhs) else {
            continue;
        };
        let x = Point::new(x);
        for l in 0..arr.len() {
            if !combo.contains(&l) && eval(arr.function(l), &x).is_zero() {
                let mut w = combo.clone();
                w.push(l);
                w.sort_unstable();
                return Err(Error::NonGeneric(GenericityWitness::ConcurrentHyperplanes(w)));
            }
        }
        vertices.push(x);
    }
    Ok(vertices)
}

/// Enumerate all chambers. With `half_width = None` the bounding box is sized
/// automatically from the arrangement vertices; a given half-width must keep
/// every vertex strictly inside, else the failure is reported.
pub fn enumerate_chambers(
    arr: &Arrangement,
    half_width: Option<Scalar>,
) -> Result<Vec<Chamber>, Error> {
    let d = arr.dim();
    if arr.is_empty() {
        return Ok(vec![Chamber {
            positive: Vec::new(),
            heft: 0,
            witness: Point::origin(d),
            bounded: false,
        }]);
    }
    let vertices = arrangement_vertices(arr)?;
    let mut max_abs = Scalar::from_integer(1.into());
    for v in &vertices {
        for c in v.coords() {
            let a = c.abs();
            if a > max_abs {
                max_abs = a;
            }
        }
    }
    for f in arr.functions() {
        let a = f.offset.abs();
        if a > max_abs {
            max_abs = a;
        }
    }
    let auto = half_width.is_none();
    let mut half = match half_width {
        Some(h) => {
            for v in &vertices {
                if v.coords().iter().any(|c| c.abs() >= h) {
                    return Err(Error::BoxTooSmall {
                        half_width: crate::numeric::format_scalar(&h),
                        vertex: v.to_string(),
                    });
                }
            }
            h
        }
        None => &max_abs * int(2) + int(1),
    };

    // a vertex can land exactly on a box wall; with an automatic box we can
    // simply grow it and retry
    for _ in 0..8 {
        match sample_chambers(arr, &half) {
            Ok(chambers) => return Ok(chambers),
            Err(SampleFailure::BoxBoundary) if auto => {
                half = &half * ratio(3, 2) + int(1);
            }
            Err(SampleFailure::BoxBoundary) => {
                return Err(Error::BoxTooSmall {
                    half_width: crate::numeric::format_scalar(&half),
                    vertex: "a clipped vertex lies on the box boundary".into(),
                })
            }
            Err(SampleFailure::Hard(e)) => return Err(e),
        }
    }
    Err(Error::GeneratorFailure {
        attempts: 8,
        detail: "bounding box kept hitting arrangement vertices".into(),
    })
}

enum SampleFailure {
    BoxBoundary,
    Hard(Error),
}

fn sample_chambers(arr: &Arrangement, half: &Scalar) -> Result<Vec<Chamber>, SampleFailure> {
    let d = arr.dim();
    let m = arr.len();
    let mut combined: Vec<AffineFunction> = arr.functions().to_vec();
    combined.extend(box_functions(d, half));
    let total = combined.len();

    let mut seen: BTreeMap<Vec<bool>, Point> = BTreeMap::new();
    for combo in (0..total).combinations(d) {
        let matrix: Vec<Vec<Scalar>> = combo
            .iter()
            .map(|&i| combined[i].gradient.clone())
            .collect();
        let rhs: Vec<Scalar> = combo.iter().map(|&i| -combined[i].offset.clone()).collect();
        let Ok(v) = solve_linear(&matrix, &rhs) else {
            continue;
        };
        let v = Point::new(v);

        // margins to all non-defining functions
        let mut min_ratio: Option<Scalar> = None;
        let mut degenerate = false;
        let duals: Vec<Vec<Scalar>> = (0..d)
            .map(|j| {
                let mut e = vec![Scalar::zero(); d];
                e[j] = int(1);
                solve_linear(&matrix, &e).expect("matrix inverted once already")
            })
            .collect();
        for (l, f) in combined.iter().enumerate() {
            if combo.contains(&l) {
                continue;
            }
            let margin = eval(f, &v).abs();
            if margin.is_zero() {
                if l < m && combo.iter().all(|&i| i < m) {
                    let mut w: Vec<usize> = combo.clone();
                    w.push(l);
                    w.sort_unstable();
                    return Err(SampleFailure::Hard(Error::NonGeneric(
                        GenericityWitness::ConcurrentHyperplanes(w),
                    )));
                }
                degenerate = true;
                break;
            }
            let spread: Scalar = duals
                .iter()
                .map(|w| dot(&f.gradient, w).abs())
                .sum();
            // spread is nonzero: the duals form a basis and the gradient is nonzero
            let r = margin / spread;
            min_ratio = Some(match min_ratio {
                None => r,
                Some(m) if r < m => r,
                Some(m) => m,
            });
        }
        if degenerate {
            return Err(SampleFailure::BoxBoundary);
        }
        let delta = min_ratio.map(|r| r * ratio(1, 2)).unwrap_or_else(|| int(1));

        for signs in 0..(1u32 << d) {
            let offset: Vec<Scalar> = (0..d)
                .map(|c| {
                    (0..d)
                        .map(|j| {
                            let s = if signs >> j & 1 == 1 { int(1) } else { int(-1) };
                            s * &duals[j][c]
                        })
                        .sum::<Scalar>()
                        * &delta
                })
                .collect();
            let p = Point::new(
                v.coords()
                    .iter()
                    .zip(&offset)
                    .map(|(a, b)| a + b)
                    .collect(),
            );
            // stay strictly inside the box
            if combined[m..].iter().any(|f| !eval(f, &p).is_negative()) {
                continue;
            }
            let mut positive = Vec::with_capacity(m);
            let mut on_boundary = false;
            for f in &combined[..m] {
                match Sign::of(&eval(f, &p)) {
                    Sign::Positive => positive.push(true),
                    Sign::Negative => positive.push(false),
                    Sign::Zero => {
                        on_boundary = true;
                        break;
                    }
                }
            }
            if on_boundary {
                // cannot happen with the margin-safe delta
                return Err(SampleFailure::BoxBoundary);
            }
            seen.entry(positive).or_insert(p);
        }
    }

    let chambers = seen
        .into_iter()
        .map(|(positive, witness)| {
            let heft = positive.iter().filter(|&&b| b).count();
            let bounded = chamber_bounded(arr, &positive);
            Chamber {
                positive,
                heft,
                witness,
                bounded,
            }
        })
        .collect();
    Ok(chambers)
}

/// A chamber is bounded iff its recession cone is trivial: no nonzero v with
/// sign_i <g_i, v> >= 0 for all i. Checked by Fourier-Motzkin feasibility of
/// the cone intersected with each face v_axis = +-1 of the unit box.
fn chamber_bounded(arr: &Arrangement, positive: &[bool]) -> bool {
    let d = arr.dim();
    let base: Vec<(Vec<Scalar>, Scalar)> = arr
        .functions()
        .iter()
        .zip(positive)
        .map(|(f, &pos)| {
            let coeffs = if pos {
                f.gradient.clone()
            } else {
                f.gradient.iter().map(|c| -c).collect()
            };
            (coeffs, Scalar::zero())
        })
        .collect();
    for axis in 0..d {
        for s in [1i64, -1] {
            let mut constraints = base.clone();
            let mut e = vec![Scalar::zero(); d];
            e[axis] = int(1);
            constraints.push((e.clone(), int(s)));
            constraints.push((e.iter().map(|c| -c).collect(), int(-s)));
            if fm_feasible(constraints, d) {
                return false;
            }
        }
    }
    true
}

/// Feasibility of a system of constraints `<c, v> >= b` by Fourier-Motzkin
/// elimination; exact over rationals.
fn fm_feasible(mut constraints: Vec<(Vec<Scalar>, Scalar)>, vars: usize) -> bool {
    for var in (0..vars).rev() {
        let mut lowers: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
        let mut uppers: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
        let mut rest: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
        for (c, b) in constraints {
            match Sign::of(&c[var]) {
                Sign::Positive => lowers.push((c, b)),
                Sign::Negative => uppers.push((c, b)),
                Sign::Zero => rest.push((c, b)),
            }
        }
        for (cl, bl) in &lowers {
            for (cu, bu) in &uppers {
                let alpha = cl[var].clone();
                let beta = -cu[var].clone();
                let coeffs: Vec<Scalar> = cl
                    .iter()
                    .zip(cu)
                    .map(|(a, b)| &beta * a + &alpha * b)
                    .collect();
                let bound = &beta * bl + &alpha * bu;
                rest.push((coeffs, bound));
            }
        }
        constraints = rest;
    }
    constraints.iter().all(|(_, b)| !b.is_positive())
}

/// Barycentric lower-bound construction: k parallel hyperplanes per facet of
/// the standard simplex, spaced so the minimum heft is exactly k and it is
/// attained by C(d+k, d) chambers.
pub fn gen_hexmesh(d: usize, k: usize) -> Result<Arrangement, Error> {
    if d == 0 || k == 0 {
        return Err(Error::InvalidInput("hexmesh needs d >= 1 and k >= 1".into()));
    }
    let denom = (2 * k - 1) as i64;
    let mut functions = Vec::with_capacity((d + 1) * k);
    for j in 0..k {
        let level = ratio(2 * j as i64, denom);
        // facets opposite e_1 .. e_d: barycentric coordinate x_i
        for i in 0..d {
            let mut g = vec![Scalar::zero(); d];
            g[i] = int(1);
            functions.push(AffineFunction {
                gradient: g,
                offset: -level.clone(),
            });
        }
        // facet opposite the origin vertex: barycentric coordinate 1 - sum x
        functions.push(AffineFunction {
            gradient: vec![int(-1); d],
            offset: int(1) - &level,
        });
    }
    Arrangement::new(d, functions)
}

/// Seeded random generic arrangement with integer data; redrawn until the
/// chamber enumeration accepts it.
pub fn gen_random_arrangement(d: usize, m: usize, seed: u64) -> Result<Arrangement, Error> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x6172_7261_6e67_0000);
    let max_attempts = 64;
    for _ in 0..max_attempts {
        let mut functions = Vec::with_capacity(m);
        for _ in 0..m {
            let mut gradient: Vec<Scalar>;
            loop {
                gradient = (0..d).map(|_| int(rng.gen_range(-20..=20))).collect();
                if !gradient.iter().all(Zero::is_zero) {
                    break;
                }
            }
            let offset = int(rng.gen_range(-50..=50));
            functions.push(AffineFunction { gradient, offset });
        }
        let Ok(arr) = Arrangement::new(d, functions) else {
            continue;
        };
        if enumerate_chambers(&arr, None).is_ok() {
            return Ok(arr);
        }
    }
    Err(Error::GeneratorFailure {
        attempts: max_attempts,
        detail: format!("no generic arrangement for d={d}, m={m}, seed={seed}"),
    })
}

/// Heft census of the chambers cut out of S^d by hemisphere boundaries,
/// with the bounds evaluated at the realized minimum heft.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HemisphereCensus {
    /// Heft of each chamber (number of covering hemispheres).
    pub hefts: Vec<usize>,
    pub min_heft: usize,
    pub min_heft_count: usize,
    /// `C(d+k, d) + C(d+k-1, d)` at k = min_heft.
    pub general_bound: usize,
    pub general_bound_ok: bool,
    /// The half-space bound `C(d+k, d)` applies when n > k + k*C(d+k, d).
    pub restricted_applicable: bool,
    pub restricted_bound: usize,
    pub restricted_bound_ok: bool,
}

fn census_from_hefts(hefts: Vec<usize>, d: usize, n: usize) -> HemisphereCensus {
    let min_heft = *hefts.iter().min().expect("at least one chamber");
    let min_heft_count = hefts.iter().filter(|&&h| h == min_heft).count();
    let general_bound = binomial_usize(d + min_heft, d)
        + if min_heft >= 1 {
            binomial_usize(d + min_heft - 1, d)
        } else {
            0
        };
    let restricted_bound = binomial_usize(d + min_heft, d);
    let restricted_applicable = n > min_heft + min_heft * restricted_bound;
    HemisphereCensus {
        general_bound_ok: min_heft_count <= general_bound,
        restricted_bound_ok: !restricted_applicable || min_heft_count <= restricted_bound,
        hefts,
        min_heft,
        min_heft_count,
        general_bound,
        restricted_applicable,
        restricted_bound,
    }
}

/// Chamber heft census for hemispheres of S^1 or S^2 given by their center
/// normals; the hemisphere i is the open side `<x, n_i> > 0`.
pub fn hemisphere_chambers(normals: &[SphericalPoint]) -> Result<HemisphereCensus, Error> {
    let d = normals
        .first()
        .ok_or_else(|| Error::InvalidInput("need at least one hemisphere".into()))?
        .sphere_dim();
    for n in normals {
        if n.sphere_dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d + 1,
                got: n.sphere_dim() + 1,
            });
        }
    }
    match d {
        1 => hemisphere_census_s1(normals),
        2 => hemisphere_census_s2(normals),
        other => Err(Error::UnsupportedDimension(other)),
    }
}

fn cross2(a: &[Scalar], b: &[Scalar]) -> Scalar {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn ray_order2(a: &[Scalar], b: &[Scalar]) -> std::cmp::Ordering {
    let half = |v: &[Scalar]| {
        let sy = Sign::of(&v[1]);
        if sy == Sign::Positive || (sy == Sign::Zero && Sign::of(&v[0]) == Sign::Positive) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| match Sign::of(&cross2(a, b)) {
        Sign::Positive => std::cmp::Ordering::Less,
        Sign::Negative => std::cmp::Ordering::Greater,
        Sign::Zero => std::cmp::Ordering::Equal,
    })
}

fn hemisphere_census_s1(normals: &[SphericalPoint]) -> Result<HemisphereCensus, Error> {
    let n = normals.len();
    for (i, a) in normals.iter().enumerate() {
        for (j, b) in normals.iter().enumerate().skip(i + 1) {
            if cross2(a.unit(), b.unit()).is_zero() {
                return Err(Error::NonGeneric(GenericityWitness::LinearlyDependent(vec![
                    i, j,
                ])));
            }
        }
    }
    // boundary points of hemisphere i: +-rot90(n_i)
    let mut events: Vec<Vec<Scalar>> = Vec::with_capacity(2 * n);
    for p in normals {
        let u = p.unit();
        events.push(vec![-u[1].clone(), u[0].clone()]);
        events.push(vec![u[1].clone(), -u[0].clone()]);
    }
    events.sort_by(|a, b| ray_order2(a, b));
    let mut hefts = Vec::with_capacity(events.len());
    for i in 0..events.len() {
        let a = &events[i];
        let b = &events[(i + 1) % events.len()];
        let rep: Vec<Scalar> = match Sign::of(&cross2(a, b)) {
            Sign::Positive => vec![&a[0] + &b[0], &a[1] + &b[1]],
            Sign::Zero => vec![-a[1].clone(), a[0].clone()],
            Sign::Negative => vec![-(&a[0] + &b[0]), -(&a[1] + &b[1])],
        };
        let heft = normals
            .iter()
            .filter(|p| Sign::of(&dot(&rep, p.unit())) == Sign::Positive)
            .count();
        hefts.push(heft);
    }
    Ok(census_from_hefts(hefts, 1, n))
}

fn hemisphere_census_s2(normals: &[SphericalPoint]) -> Result<HemisphereCensus, Error> {
    let n = normals.len();
    if n < 2 {
        return Err(Error::InvalidInput(
            "census on the 2-sphere needs at least two hemispheres".into(),
        ));
    }
    let cross3 = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> {
        vec![
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ]
    };
    let mut seen: BTreeMap<Vec<bool>, ()> = BTreeMap::new();
    let mut hefts = Vec::new();
    for (i, j) in (0..n).tuple_combinations() {
        let axis = cross3(normals[i].unit(), normals[j].unit());
        if axis.iter().all(Zero::is_zero) {
            return Err(Error::NonGeneric(GenericityWitness::LinearlyDependent(vec![
                i, j,
            ])));
        }
        for flip in [false, true] {
            let v: Vec<Scalar> = if flip {
                axis.iter().map(|c| -c).collect()
            } else {
                axis.clone()
            };
            // margins of the other great circles at this vertex
            let mut min_ratio: Option<Scalar> = None;
            let mut degenerate = None;
            for (l, p) in normals.iter().enumerate() {
                if l == i || l == j {
                    continue;
                }
                let margin = dot(&v, p.unit()).abs();
                if margin.is_zero() {
                    degenerate = Some(l);
                    break;
                }
                if min_ratio.as_ref().is_none_or(|m| &margin < m) {
                    min_ratio = Some(margin);
                }
            }
            if let Some(l) = degenerate {
                let mut w = vec![i, j, l];
                w.sort_unstable();
                return Err(Error::NonGeneric(GenericityWitness::ConcurrentHyperplanes(w)));
            }
            // step vectors that move the two defining margins independently
            let matrix = vec![
                normals[i].unit().to_vec(),
                normals[j].unit().to_vec(),
                v.clone(),
            ];
            let mut e1 = vec![Scalar::zero(); 3];
            e1[0] = int(1);
            let mut e2 = vec![Scalar::zero(); 3];
            e2[1] = int(1);
            let w1 = solve_linear(&matrix, &e1)?;
            let w2 = solve_linear(&matrix, &e2)?;
            let spread: Scalar = normals
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != i && *l != j)
                .map(|(_, p)| dot(p.unit(), &w1).abs() + dot(p.unit(), &w2).abs())
                .fold(Scalar::zero(), |a, b| if b > a { b } else { a });
            let delta = match min_ratio {
                Some(mr) if !spread.is_zero() => mr / spread * ratio(1, 2),
                _ => int(1),
            };
            for s1 in [1i64, -1] {
                for s2 in [1i64, -1] {
                    let q: Vec<Scalar> = (0..3)
                        .map(|c| &v[c] + (&delta * (int(s1) * &w1[c] + int(s2) * &w2[c])))
                        .collect();
                    let mut positive = Vec::with_capacity(n);
                    let mut bad = false;
                    for p in normals {
                        match Sign::of(&dot(&q, p.unit())) {
                            Sign::Positive => positive.push(true),
                            Sign::Negative => positive.push(false),
                            Sign::Zero => {
                                bad = true;
                                break;
                            }
                        }
                    }
                    if bad {
                        continue;
                    }
                    if let std::collections::btree_map::Entry::Vacant(slot) =
                        seen.entry(positive)
                    {
                        hefts.push(slot.key().iter().filter(|&&b| b).count());
                        slot.insert(());
                    }
                }
            }
        }
    }
    Ok(census_from_hefts(hefts, 2, n))
}

/// Rational unit normals dual to a near-regular (2k+1)-gon on S^1: each
/// vertex direction becomes the center of a half-circle. Frozen tangent-half-
/// angle approximations keep every normal an exact unit vector.
pub fn gen_polygon_duals(k: usize) -> Result<Vec<SphericalPoint>, Error> {
    const D: i64 = 12289;
    let numerators: &[&[i64]] = &[
        &[0, 21285, -21285],
        &[0, 8928, 37822, -37822, -8928],
        &[0, 5918, 15410, 53842, -53842, -15410, -5918],
        &[0, 4473, 10312, 21285, 69694, -69694, -21285, -10312, -4473],
    ];
    if k == 0 || k > numerators.len() {
        return Err(Error::InvalidInput(format!(
            "polygon duals are frozen for 1 <= k <= {}, got {k}",
            numerators.len()
        )));
    }
    numerators[k - 1]
        .iter()
        .map(|&m| {
            // tangent half-angle: t = m / D maps to ((D^2 - m^2), 2 D m) / (D^2 + m^2)
            let coords = vec![int(D * D - m * m), int(2 * D * m)];
            SphericalPoint::from_homogeneous(coords)
        })
        .collect()
}

/// Seeded random half-circle normals on S^1, pairwise independent.
pub fn gen_random_circle_normals(n: usize, seed: u64) -> Result<Vec<SphericalPoint>, Error> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x6865_6d69_0000_0000);
    let max_attempts = 64;
    for _ in 0..max_attempts {
        let mut params = Vec::with_capacity(n);
        while params.len() < n {
            let p = rng.gen_range(-60i64..=60);
            if !params.contains(&p) {
                params.push(p);
            }
        }
        let normals: Vec<SphericalPoint> = params
            .iter()
            .map(|&p| crate::spherical::exact_unit(&Point::from_ints(&[p])))
            .collect();
        let independent = (0..n)
            .tuple_combinations()
            .all(|(i, j)| !cross2(normals[i].unit(), normals[j].unit()).is_zero());
        if independent {
            return Ok(normals);
        }
    }
    Err(Error::GeneratorFailure {
        attempts: max_attempts,
        detail: format!("no independent circle normals for n={n}, seed={seed}"),
    })
}
