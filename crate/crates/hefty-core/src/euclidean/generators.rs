//! Instance generators: the radial set, the surrounded-point hexad, and
//! seeded random generic sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::PointSet;
use crate::error::Error;
use crate::numeric::{int, point_in_simplex, ratio, Containment, Point, Scalar};
use itertools::Itertools;

/// Directions for the radial set: e_1, ..., e_d and -(1, ..., 1). They are in
/// convex position around the origin, which is all the containment and
/// composition arguments need; exact unit vectors are not required.
fn radial_directions(d: usize) -> Vec<Vec<Scalar>> {
    let mut dirs: Vec<Vec<Scalar>> = (0..d)
        .map(|j| (0..d).map(|i| int((i == j) as i64)).collect())
        .collect();
    dirs.push(vec![int(-1); d]);
    dirs
}

/// Radial set: `layers` points on each of d+1 rays from the origin, then a
/// deterministic rational perturbation small enough to make the set generic
/// while preserving, for every (d+1)-subset, whether it strictly contains the
/// origin, and the heft of every origin-containing simplex.
///
/// A simplex with one vertex i_j * v_j per direction contains the origin, its
/// circumsphere contains the origin, and each ray crosses that sphere exactly
/// once, so the enclosed points are the sum of (i_j - 1): the heft values at
/// the origin enumerate the compositions of k into d+1 non-negative parts.
/// The construction is re-verified exhaustively after perturbing; the scale
/// shrinks and the offsets are redrawn until every check passes.
pub fn gen_radial(d: usize, layers: usize, seed: u64) -> Result<PointSet, Error> {
    if d == 0 || layers == 0 {
        return Err(Error::InvalidInput(
            "radial set needs dimension and layer count at least 1".into(),
        ));
    }
    let dirs = radial_directions(d);
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x7261_6469_616c_0000);
    let max_attempts = 12;
    for attempt in 0..max_attempts {
        let scale = ratio(1, 1i64 << (14 + 2 * attempt.min(20) as i64).min(62));
        let mut points = Vec::with_capacity(dirs.len() * layers);
        let mut meta = Vec::new();
        for (j, v) in dirs.iter().enumerate() {
            for i in 1..=layers {
                let coords: Vec<Scalar> = v
                    .iter()
                    .map(|c| {
                        let jitter = int(rng.gen_range(-1000..=1000)) * ratio(1, 1000) * &scale;
                        int(i as i64) * c + jitter
                    })
                    .collect();
                points.push(Point::new(coords));
                meta.push((j, i));
            }
        }
        let set = match PointSet::new(d, points, format!("radial(d={d},layers={layers})")) {
            Ok(s) => s,
            Err(_) => continue,
        };
        if verify_radial(&set, &meta, dirs.len()).is_ok() {
            return Ok(set);
        }
    }
    Err(Error::GeneratorFailure {
        attempts: max_attempts,
        detail: "radial perturbation never satisfied all invariants".into(),
    })
}

fn verify_radial(set: &PointSet, meta: &[(usize, usize)], ndirs: usize) -> Result<(), ()> {
    set.check_generic().map_err(|_| ())?;
    let origin = Point::origin(set.dim());
    let d = set.dim();
    for combo in (0..set.len()).combinations(d + 1) {
        let used: std::collections::BTreeSet<usize> = combo.iter().map(|&i| meta[i].0).collect();
        let one_per_direction = used.len() == ndirs;
        let simplex = set.simplex_points(&combo);
        match point_in_simplex(&simplex, &origin).map_err(|_| ())? {
            Containment::Interior => {
                if !one_per_direction {
                    return Err(());
                }
                let expected: usize = combo.iter().map(|&i| meta[i].1 - 1).sum();
                let h = set.heft(&combo).map_err(|_| ())?;
                if h.heft() != expected {
                    return Err(());
                }
            }
            Containment::Boundary => return Err(()),
            Containment::Outside => {
                if one_per_direction {
                    return Err(());
                }
            }
        }
    }
    Ok(())
}

/// Six generic points: one near the origin surrounded by five others on a
/// slightly irregular pentagon. The five triangles on the center and two
/// second-neighbor pentagon vertices each enclose exactly the skipped vertex,
/// so they are the 1-hefty triangles incident to the center, and together
/// they wrap around it twice. The constants are frozen; the properties are
/// asserted in tests.
pub fn gen_pentagon() -> PointSet {
    let pts = vec![
        Point::new(vec![ratio(1, 173), ratio(-1, 181)]),
        Point::new(vec![int(0), int(1)]),
        Point::new(vec![ratio(-951, 970), ratio(309, 970)]),
        Point::new(vec![ratio(-784, 1375), ratio(-3236, 4125)]),
        Point::new(vec![ratio(15141, 25250), ratio(-83327, 101000)]),
        Point::new(vec![ratio(46599, 50000), ratio(15141, 50000)]),
    ];
    PointSet::new(2, pts, "pentagon").expect("frozen pentagon constants are valid")
}

/// Seeded random set with integer coordinates, redrawn until exhaustively
/// generic. Deterministic for a fixed seed.
pub fn gen_random_points(d: usize, n: usize, seed: u64) -> Result<PointSet, Error> {
    gen_random_points_in_range(d, n, seed, 1000)
}

pub fn gen_random_points_in_range(
    d: usize,
    n: usize,
    seed: u64,
    half_range: i64,
) -> Result<PointSet, Error> {
    if d == 0 || n == 0 {
        return Err(Error::InvalidInput("need d >= 1 and n >= 1".into()));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x7074_7365_7400_0000);
    let max_attempts = 64;
    for _ in 0..max_attempts {
        let mut points = Vec::with_capacity(n);
        for _ in 0..n {
            let coords: Vec<Scalar> = (0..d)
                .map(|_| int(rng.gen_range(-half_range..=half_range)))
                .collect();
            points.push(Point::new(coords));
        }
        let Ok(set) = PointSet::new(d, points, format!("random(d={d},n={n},seed={seed})")) else {
            continue;
        };
        if set.check_generic().is_ok() {
            return Ok(set);
        }
    }
    Err(Error::GeneratorFailure {
        attempts: max_attempts,
        detail: format!("no generic random set for d={d}, n={n}, seed={seed}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radial_layout_has_one_point_per_layer_per_direction() {
        let set = gen_radial(2, 3, 7).unwrap();
        assert_eq!(set.len(), 9);
        assert!(set.check_generic().is_ok());
    }

    #[test]
    fn pentagon_is_generic() {
        let set = gen_pentagon();
        assert_eq!(set.len(), 6);
        assert!(set.check_generic().is_ok());
    }

    #[test]
    fn random_sets_are_generic_and_deterministic() {
        let a = gen_random_points(2, 12, 42).unwrap();
        let b = gen_random_points(2, 12, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.check_generic().is_ok());
    }
}
