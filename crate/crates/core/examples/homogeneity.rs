//! Norm metrics scale with the points; a capped metric does not.
//!
//! Run with `cargo run --example homogeneity`.

use menger::properties::{check_homogeneity, homogeneity_instance};
use menger::sampling::SamplePlan;
use menger::spaces::{Exponent, MetricSpace, Point, Scalar};

fn main() -> menger::Result<()> {
    let plan = SamplePlan::new(9, 500);
    for space in [MetricSpace::l1(3).exact()?, MetricSpace::l2(3), MetricSpace::linf(3)] {
        let v = check_homogeneity(&space, &plan)?;
        println!("{}: {} over {} samples", space.id(), v.status(), v.samples());
    }

    let capped = MetricSpace::bounded(2, Exponent::Finite(1.0), Scalar::int(1))?.exact()?;
    let x = Point::from_ratios(&[(1, 2), (1, 4)]);
    let v = homogeneity_instance(&capped, &Scalar::int(4), &x)?;
    let c = v.certificate().expect("capping breaks scaling");
    println!("{}: d(0, 4x) = {} but 4·d(0, x) = {}; certificate re-verifies: {}", capped.id(), c.lhs, c.rhs, c.verify()?);
    Ok(())
}
