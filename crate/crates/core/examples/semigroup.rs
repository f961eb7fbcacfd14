//! Midpoint maps about a fixed point compose by multiplying parameters.
//!
//! Run with `cargo run --example semigroup`.

use menger::fixedpoint::{left_reversal_witness, semigroup_compose, MidpointMap};
use menger::sampling::SamplePlan;
use menger::spaces::{MetricSpace, Point, Scalar};

fn main() -> menger::Result<()> {
    let space = MetricSpace::l2(2);
    let y = Point::float(vec![1.0, 1.0]);
    let ts = [Scalar::float(0.5), Scalar::float(0.5), Scalar::float(0.4)];
    let r = semigroup_compose(&space, &y, &ts, &SamplePlan::new(1, 500))?;
    println!("composite parameter {} (product of 1/2, 1/2, 2/5)", r.product);
    println!("Lipschitz estimate {:.12}, within product: {}", r.lipschitz_estimate, r.within_product);
    println!("fixes y: {}, associativity error {:.1e}", r.fixes_y, r.associativity_error);

    let (t1, t2) = (Scalar::ratio(1, 3), Scalar::ratio(3, 4));
    let (a, b) = left_reversal_witness(&t1, &t2);
    println!("left reversal: c_{a} o c_{t1} = c_{b} o c_{t2} since {a}·{t1} = {b}·{t2} = {}", &a * &t1);

    let exact = MetricSpace::l2(2);
    let x = Point::float(vec![-3.0, 5.0]);
    let lhs = MidpointMap::new(y.clone(), a.to_float()).compose(&MidpointMap::new(y.clone(), t1.to_float()))?.apply(&exact, &x)?;
    let rhs = MidpointMap::new(y.clone(), b.to_float()).compose(&MidpointMap::new(y, t2.to_float()))?.apply(&exact, &x)?;
    println!("applied to {x}: {lhs} and {rhs}");
    Ok(())
}
