//! Sampled verdicts for every checkable property across several spaces.
//!
//! Run with `cargo run --release --example property_suite`.

use menger::convexsets::MidConvention;
use menger::properties::{check, Property};
use menger::sampling::SamplePlan;
use menger::spaces::{Exponent, MetricSpace, Scalar};

fn main() -> menger::Result<()> {
    let spaces = [
        MetricSpace::l2(2),
        MetricSpace::lp(3, 3.0)?,
        MetricSpace::l1(2),
        MetricSpace::linf(3),
        MetricSpace::linf(2).exact()?,
        MetricSpace::integers(2, Exponent::Finite(1.0))?,
        MetricSpace::bounded(2, Exponent::Finite(2.0), Scalar::int(1))?,
    ];
    let props = [
        Property::MengerConvex,
        Property::A,
        Property::B,
        Property::Bprime,
        Property::Bdoubleprime,
        Property::C,
        Property::Homogeneity,
    ];
    let plan = SamplePlan::new(2024, 300);

    print!("{:<22}", "space");
    for p in props {
        print!("{:>14}", p.name());
    }
    println!();
    for space in &spaces {
        print!("{:<22}", space.id());
        for p in props {
            let v = check(space, p, MidConvention::FromY, &plan)?;
            if let Some(c) = v.certificate() {
                assert!(c.verify()?, "every failure carries a reproducible certificate");
            }
            print!("{:>14}", v.status());
        }
        println!();
    }
    Ok(())
}
