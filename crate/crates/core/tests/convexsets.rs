use menger::convexsets::{diameter, midpoint_set, unique_midpoint, MidConvention, SetRep};
use menger::spaces::{MetricSpace, Point, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn norm(p: f64, v: &[f64]) -> f64 {
    if p.is_infinite() {
        v.iter().fold(0.0, |m, c| m.max(c.abs()))
    } else {
        v.iter().map(|c| c.abs().powf(p)).sum::<f64>().powf(1.0 / p)
    }
}

fn dist(p: f64, a: &[f64], b: &[f64]) -> f64 {
    let diff: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    norm(p, &diff)
}

#[test]
fn midpoint_sets_are_nonempty_and_on_both_spheres() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for p in [1.0, 1.5, 2.0, 3.0, f64::INFINITY] {
        let space = MetricSpace::lp(3, p).unwrap();
        for _ in 0..1000 {
            let x: Vec<f64> = (0..3).map(|_| rng.random_range(-2.0..2.0)).collect();
            let y: Vec<f64> = (0..3).map(|_| rng.random_range(-2.0..2.0)).collect();
            let t = rng.random_range(0.01..0.99);
            let set = midpoint_set(&space, &Point::float(x.clone()), &Point::float(y.clone()), &Scalar::float(t), MidConvention::FromY)
                .unwrap();
            let d = dist(p, &x, &y);
            let members = set.members(&space, 3).unwrap();
            assert!(!members.is_empty());
            for z in members {
                let z = z.to_f64();
                assert!((dist(p, &x, &z) - (1.0 - t) * d).abs() <= 1e-9 * (1.0 + d), "p = {p}");
                assert!((dist(p, &y, &z) - t * d).abs() <= 1e-9 * (1.0 + d), "p = {p}");
            }
        }
    }
}

#[test]
fn conventions_agree_at_one_half() {
    let half = Scalar::ratio(1, 2);
    for space in [MetricSpace::l1(2).exact().unwrap(), MetricSpace::linf(3).exact().unwrap()] {
        let dim = space.dim().unwrap();
        let x = Point::from_ratios(&vec![(1, 2); dim]);
        let y = Point::from_ratios(&(0..dim).map(|i| (3 - 2 * i as i64, 3)).collect::<Vec<_>>());
        let a = midpoint_set(&space, &x, &y, &half, MidConvention::FromX).unwrap();
        let b = midpoint_set(&space, &x, &y, &half, MidConvention::FromY).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn strictly_convex_midpoint_sets_have_zero_diameter() {
    let space = MetricSpace::l2(3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let x = Point::float((0..3).map(|_| rng.random_range(-2.0..2.0)).collect());
        let y = Point::float((0..3).map(|_| rng.random_range(-2.0..2.0)).collect());
        let t = Scalar::float(rng.random_range(0.05..0.95));
        let set = midpoint_set(&space, &x, &y, &t, MidConvention::FromY).unwrap();
        assert!(matches!(set, SetRep::Singleton(_)));
        assert_eq!(diameter(&space, &set).unwrap().value.to_f64(), 0.0);
        let m = unique_midpoint(&space, &x, &y, &t).unwrap();
        assert!(set.contains(&space, &m).unwrap());
    }
}

#[test]
fn l1_and_linf_have_fat_midpoint_sets() {
    let half = Scalar::ratio(1, 2);
    let x = Point::from_ints(&[0, 0]);
    let y = Point::from_ints(&[2, 2]);
    for space in [MetricSpace::l1(2).exact().unwrap(), MetricSpace::linf(2).exact().unwrap()] {
        let y = if space.id().starts_with("linf") { Point::from_ints(&[2, 0]) } else { y.clone() };
        let set = midpoint_set(&space, &x, &y, &half, MidConvention::FromY).unwrap();
        let dia = diameter(&space, &set).unwrap();
        assert!(dia.exact);
        // d_1: segment from (1,1)±(1,-1); d_inf: {1} x [-1, 1]
        assert!(dia.value >= Scalar::int(1), "{}: {}", space.id(), dia.value);
        assert_eq!(space.distance(&dia.pair.0, &dia.pair.1).unwrap(), dia.value);
    }
}

#[test]
fn lattice_neighbours_have_no_midpoint() {
    let space = MetricSpace::integers(1, menger::spaces::Exponent::Finite(1.0)).unwrap();
    let err = midpoint_set(&space, &Point::from_ints(&[0]), &Point::from_ints(&[1]), &Scalar::ratio(1, 2), MidConvention::FromY);
    assert!(err.is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn swapping_endpoints_swaps_conventions(
        x in prop::collection::vec((-12i64..12, 1i64..5), 2),
        y in prop::collection::vec((-12i64..12, 1i64..5), 2),
        t in (1i64..9).prop_map(|n| Scalar::ratio(n, 10)),
        inf in any::<bool>(),
    ) {
        let space = if inf { MetricSpace::linf(2) } else { MetricSpace::l1(2) }.exact().unwrap();
        let (x, y) = (Point::from_ratios(&x), Point::from_ratios(&y));
        prop_assume!(x != y);
        let a = midpoint_set(&space, &x, &y, &t, MidConvention::FromX).unwrap();
        let b = midpoint_set(&space, &y, &x, &t, MidConvention::FromY).unwrap();
        let mut ma = a.members(&space, 3).unwrap();
        let mut mb = b.members(&space, 3).unwrap();
        ma.sort_by(|p, q| p.lex_cmp(q));
        mb.sort_by(|p, q| p.lex_cmp(q));
        prop_assert_eq!(ma, mb);
    }

    #[test]
    fn unique_midpoint_is_affine(
        x in prop::collection::vec(-5.0f64..5.0, 3),
        y in prop::collection::vec(-5.0f64..5.0, 3),
        t in 0.01f64..0.99,
        p in prop::sample::select(vec![1.5, 2.0, 4.0]),
    ) {
        let space = MetricSpace::lp(3, p).unwrap();
        let m = unique_midpoint(&space, &Point::float(x.clone()), &Point::float(y.clone()), &Scalar::float(t)).unwrap();
        for i in 0..3 {
            prop_assert!((m.to_f64()[i] - (t * x[i] + (1.0 - t) * y[i])).abs() <= 1e-12);
        }
    }
}
