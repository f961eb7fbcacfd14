//! Midpoint sets under the sup metric are boxes, so property A fails.
//!
//! Run with `cargo run --example linf_box`.

use menger::convexsets::{diameter, midpoint_set, MidConvention, SetRep};
use menger::properties::{check_diameter_strict, property_a_instance};
use menger::spaces::{MetricSpace, Point, Scalar};

fn main() -> menger::Result<()> {
    let space = MetricSpace::linf(2).exact()?;
    let x = Point::from_ints(&[0, 0]);
    let y = Point::from_ints(&[2, 0]);
    let half = Scalar::ratio(1, 2);

    let c = midpoint_set(&space, &x, &y, &half, MidConvention::FromY)?;
    let SetRep::Box(b) = &c else { unreachable!("d_inf midpoint sets are boxes") };
    println!("c(x, y, 1/2) = [{}, {}]", b.lower(), b.upper());

    let dia = diameter(&space, &c)?;
    println!("diameter {} attained by {} and {}", dia.value, dia.pair.0, dia.pair.1);

    let verdict = property_a_instance(&space, &x, &y, &half, MidConvention::FromY, &dia.pair.0, &dia.pair.1)?;
    let cert = verdict.certificate().expect("two distinct members");
    println!("property A: {} (d(p, q) = {} > {}), certificate re-verifies: {}", verdict.status(), cert.lhs, cert.rhs, cert.verify()?);

    // A smaller box strictly inside [-2, 2]^2 has a strictly smaller diameter.
    let outer = SetRep::boxed(Point::from_ints(&[-2, -2]), Point::from_ints(&[2, 2]))?;
    let inner = SetRep::boxed(Point::from_ratios(&[(-3, 2), (-1, 1)]), Point::from_ratios(&[(3, 2), (1, 2)]))?;
    let strict = check_diameter_strict(&space, &outer, &inner)?;
    let k = strict.extremal().expect("holds carries the ratio");
    println!("diameter ratio k = {} < 1: {}", k.lhs, strict.status());
    Ok(())
}
