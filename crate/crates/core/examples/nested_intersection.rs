//! Common points of decreasing ball intersections.
//!
//! Run with `cargo run --example nested_intersection`.

use menger::convexsets::Ball;
use menger::nested::{build_shrinking_family, cantor_point, common_point, from_sets};
use menger::sampling::SamplePlan;
use menger::spaces::{MetricSpace, Point, Scalar};

fn main() -> menger::Result<()> {
    // Radii 2^-n with centers walking toward (1, 0).
    let space = MetricSpace::l2(2);
    let n = 30;
    let radii: Vec<Scalar> = (0..n).map(|k| Scalar::float(0.5f64.powi(k))).collect();
    let centers: Vec<Point> = (0..n).map(|k| Point::float(vec![1.0 - 0.5f64.powi(k), 0.0])).collect();
    let family = build_shrinking_family(&space, &centers, &radii)?;
    let r = cantor_point(&space, &family, 1e-6)?;
    println!("cantor point {} (restart {}, agreement {:.1e} <= {:.1e}: {})", r.point, r.restart, r.agreement.to_f64(), r.bound, r.unique);

    // Intersections of two balls each, exactly in d_inf.
    let linf = MetricSpace::linf(2).exact()?;
    let sets = vec![
        vec![Ball::new(Point::from_ints(&[0, 0]), Scalar::int(4))],
        vec![Ball::new(Point::from_ints(&[1, 0]), Scalar::int(2)), Ball::new(Point::from_ints(&[2, 1]), Scalar::int(2))],
        vec![Ball::new(Point::from_ratios(&[(3, 2), (1, 2)]), Scalar::ratio(1, 2))],
    ];
    let family = from_sets(&linf, sets, &SamplePlan::default())?;
    let z = common_point(&linf, &family, 0.0)?;
    println!("exact common point {z}, largest violation {}", family.max_violation(&linf, &z)?);

    // Radii that stop shrinking do not single out a point.
    let stalled: Vec<Scalar> = (0..10).map(|k| Scalar::float(1.0 + 0.5f64.powi(k))).collect();
    let family = build_shrinking_family(&space, &vec![Point::float(vec![0.0, 0.0]); 10], &stalled)?;
    println!("stalled family: {}", cantor_point(&space, &family, 1e-6).unwrap_err());
    Ok(())
}
