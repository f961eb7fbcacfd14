//! The finite family a_ij in (R^2, d_1): every pair has the same midpoint
//! set structure, and midpoint sets are segments with exact vertices.
//!
//! Run with `cargo run --example l1_aij`.

use menger::convexsets::{diameter, midpoint_set, MidConvention};
use menger::properties::reproduce;
use menger::spaces::{MetricSpace, Point, Scalar};

fn main() -> menger::Result<()> {
    let report = reproduce("l1-aij")?;
    println!("{} on {}: {}", report.name, report.space, report.summary);
    for claim in &report.claims {
        println!("  {:<50} {:>8}  expected {:>8}  {}", claim.statement, claim.value, claim.expected, if claim.reproduced { "ok" } else { "MISMATCH" });
    }

    let space = MetricSpace::l1(2).exact()?;
    let x = Point::from_ints(&[0, 0]);
    let y = Point::from_ints(&[1, 1]);
    for t in [Scalar::ratio(1, 4), Scalar::ratio(1, 2)] {
        let c = midpoint_set(&space, &x, &y, &t, MidConvention::FromX)?;
        let vertices = c.hull_vertices().unwrap_or_default();
        let shown: Vec<String> = vertices.iter().map(ToString::to_string).collect();
        println!("c(x, y, {t}) has vertices {} and diameter {}", shown.join(", "), diameter(&space, &c)?.value);
    }
    Ok(())
}
