//! Property-based invariants for the exact predicates.

use hefty_core::numeric::{
    circumsphere, dist_sq, in_sphere, int, orientation, ratio, sign_det, Point, Scalar, Sign,
};
use hefty_core::weighted::{bisector, WeightedPoint};
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-60i64..=60, 1i64..=8).prop_map(|(p, q)| ratio(p, q))
}

fn point_strategy(d: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(scalar_strategy(), d).prop_map(Point::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn orientation_flips_under_swap(pts in prop::collection::vec(point_strategy(2), 3)) {
        let swapped = vec![pts[1].clone(), pts[0].clone(), pts[2].clone()];
        let a = orientation(&pts).unwrap();
        let b = orientation(&swapped).unwrap();
        prop_assert_eq!(a, b.flip());
    }

    #[test]
    fn orientation_is_translation_invariant(
        pts in prop::collection::vec(point_strategy(2), 3),
        shift in point_strategy(2),
    ) {
        let moved: Vec<Point> = pts
            .iter()
            .map(|p| {
                Point::new(
                    p.coords()
                        .iter()
                        .zip(shift.coords())
                        .map(|(a, b)| a + b)
                        .collect(),
                )
            })
            .collect();
        prop_assert_eq!(orientation(&pts).unwrap(), orientation(&moved).unwrap());
    }

    #[test]
    fn in_sphere_agrees_with_explicit_circumsphere(
        pts in prop::collection::vec(point_strategy(2), 3),
        q in point_strategy(2),
    ) {
        prop_assume!(orientation(&pts).unwrap() != Sign::Zero);
        let det_route = in_sphere(&pts, &q).unwrap();
        let sphere = circumsphere(&pts).unwrap();
        let explicit = Sign::of(&(&sphere.squared_radius - dist_sq(&sphere.center, &q)));
        prop_assert_eq!(det_route, explicit);
    }

    #[test]
    fn in_sphere_is_permutation_invariant(
        pts in prop::collection::vec(point_strategy(2), 3),
        q in point_strategy(2),
        swap in 0usize..3,
    ) {
        prop_assume!(orientation(&pts).unwrap() != Sign::Zero);
        let mut permuted = pts.clone();
        permuted.swap(swap, (swap + 1) % 3);
        prop_assert_eq!(in_sphere(&pts, &q).unwrap(), in_sphere(&permuted, &q).unwrap());
    }

    #[test]
    fn in_sphere_agrees_in_three_dimensions(
        pts in prop::collection::vec(point_strategy(3), 4),
        q in point_strategy(3),
    ) {
        prop_assume!(orientation(&pts).unwrap() != Sign::Zero);
        let det_route = in_sphere(&pts, &q).unwrap();
        let sphere = circumsphere(&pts).unwrap();
        let explicit = Sign::of(&(&sphere.squared_radius - dist_sq(&sphere.center, &q)));
        prop_assert_eq!(det_route, explicit);
    }

    #[test]
    fn determinant_sign_matches_rational_expansion(
        rows in prop::collection::vec(prop::collection::vec(scalar_strategy(), 3), 3),
    ) {
        // cofactor expansion as an independent route
        let det3 = |m: &[Vec<Scalar>]| -> Scalar {
            let minor = |r: usize, c: usize| -> Scalar {
                let mut vals = Vec::new();
                for i in 0..3 {
                    if i == r { continue; }
                    for j in 0..3 {
                        if j == c { continue; }
                        vals.push(m[i][j].clone());
                    }
                }
                &vals[0] * &vals[3] - &vals[1] * &vals[2]
            };
            &m[0][0] * minor(0, 0) - &m[0][1] * minor(0, 1) + &m[0][2] * minor(0, 2)
        };
        prop_assert_eq!(sign_det(&rows), Sign::of(&det3(&rows)));
    }

    #[test]
    fn arithmetic_is_exact(a in scalar_strategy(), b in scalar_strategy()) {
        let sum = &a + &b;
        prop_assert_eq!(&sum - &b, a);
    }

    #[test]
    fn bisector_sign_matches_power_difference(
        a in point_strategy(2),
        b in point_strategy(2),
        wa in scalar_strategy(),
        wb in scalar_strategy(),
        q in point_strategy(2),
    ) {
        prop_assume!(a != b);
        let wa = WeightedPoint::new(a, wa);
        let wb = WeightedPoint::new(b, wb);
        let h = bisector(&wa, &wb).unwrap();
        prop_assert_eq!(h.side(&q), Sign::of(&(wa.power(&q) - wb.power(&q))));
    }

    #[test]
    fn inversion_is_an_involution(pts in prop::collection::vec(point_strategy(2), 5)) {
        let z = Point::new(vec![int(100), int(101)]);
        prop_assume!(pts.iter().all(|p| p != &z));
        let mut unique = pts.clone();
        unique.sort();
        unique.dedup();
        prop_assume!(unique.len() == pts.len());
        let set = hefty_core::PointSet::new(2, pts, "prop").unwrap();
        let once = hefty_core::apps::invert(&z, &set).unwrap();
        let twice = hefty_core::apps::invert(&z, &once).unwrap();
        prop_assert_eq!(twice.points(), set.points());
    }

    #[test]
    fn stereographic_roundtrip(p in point_strategy(2)) {
        let up = hefty_core::spherical::exact_unit(&p);
        let norm: Scalar = up.unit().iter().map(|c| c * c).sum();
        prop_assert_eq!(norm, int(1));
        let back = hefty_core::spherical::forward_stereographic(&up).unwrap();
        prop_assert_eq!(back, p);
    }
}
