use menger::convexsets::SetRep;
use menger::hausdorff::{directed_hausdorff, hausdorff};
use menger::spaces::{MetricSpace, Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn linf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn brute(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    let dir = |a: &[Vec<f64>], b: &[Vec<f64>]| {
        a.iter().map(|p| b.iter().map(|q| linf(p, q)).fold(f64::INFINITY, f64::min)).fold(0.0, f64::max)
    };
    dir(a, b).max(dir(b, a))
}

fn random_set(rng: &mut ChaCha8Rng) -> Vec<Point> {
    (0..rng.random_range(1..7)).map(|_| Point::from_ints(&[rng.random_range(-9..9), rng.random_range(-9..9)])).collect()
}

#[test]
fn finite_sets_form_a_metric() {
    let space = MetricSpace::linf(2).exact().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..1000 {
        let (a, b, c) = (random_set(&mut rng), random_set(&mut rng), random_set(&mut rng));
        let f = |s: &[Point]| SetRep::finite(s.to_vec()).unwrap();
        let (sa, sb, sc) = (f(&a), f(&b), f(&c));
        let ab = hausdorff(&space, &sa, &sb).unwrap();
        let ba = hausdorff(&space, &sb, &sa).unwrap();
        assert!(ab.exact);
        assert_eq!(ab.value, ba.value);
        let ac = hausdorff(&space, &sa, &sc).unwrap().value;
        let bc = hausdorff(&space, &sb, &sc).unwrap().value;
        assert!(ac <= &ab.value + &bc);
        let floats = |s: &[Point]| s.iter().map(|p| p.to_f64().into_owned()).collect::<Vec<_>>();
        assert_eq!(ab.value.to_f64(), brute(&floats(&a), &floats(&b)));
        assert_eq!(space.distance(&ab.witness.0, &ab.witness.1).unwrap(), ab.value);
    }
}

#[test]
fn directed_distance_is_zero_for_subsets() {
    let space = MetricSpace::l1(2).exact().unwrap();
    let a = SetRep::finite(vec![Point::from_ints(&[0, 0]), Point::from_ints(&[3, 1])]).unwrap();
    let b = SetRep::finite(vec![Point::from_ints(&[0, 0]), Point::from_ints(&[3, 1]), Point::from_ints(&[7, 7])]).unwrap();
    assert!(directed_hausdorff(&space, &a, &b).unwrap().value.is_zero());
    assert_eq!(directed_hausdorff(&space, &b, &a).unwrap().value.to_f64(), 10.0);
}

fn grid(lo: &[f64], hi: &[f64], n: usize) -> Vec<Vec<f64>> {
    let axis = |i: usize| (0..=n).map(move |k| lo[i] + (hi[i] - lo[i]) * k as f64 / n as f64);
    axis(0).flat_map(|u| axis(1).map(move |v| vec![u, v])).collect()
}

#[test]
fn box_distance_matches_grid_brute_force() {
    let space = MetricSpace::linf(2).exact().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let n = 40;
    for _ in 0..100 {
        let mut corners = || {
            let (a, b) = (rng.random_range(-8..8), rng.random_range(-8..8));
            let (c, d) = (rng.random_range(-8..8), rng.random_range(-8..8));
            ([a.min(b), c.min(d)], [a.max(b), c.max(d)])
        };
        let ((la, ua), (lb, ub)) = (corners(), corners());
        let sa = SetRep::boxed(Point::from_ints(&la), Point::from_ints(&ua)).unwrap();
        let sb = SetRep::boxed(Point::from_ints(&lb), Point::from_ints(&ub)).unwrap();
        let h = hausdorff(&space, &sa, &sb).unwrap();
        assert!(h.exact);
        let f = |v: [i64; 2]| v.map(|c| c as f64);
        let ga = grid(&f(la), &f(ua), n);
        let gb = grid(&f(lb), &f(ub), n);
        let spacing = (0..2).map(|i| ((ua[i] - la[i]).max(ub[i] - lb[i])) as f64 / n as f64).fold(0.0, f64::max);
        let oracle = brute(&ga, &gb);
        assert!((h.value.to_f64() - oracle).abs() <= spacing + 1e-12, "{} vs {oracle}", h.value);
    }
}
