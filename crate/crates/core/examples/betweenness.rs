//! Metric segments and the betweenness of nested midpoints.
//!
//! Run with `cargo run --example betweenness`.

use menger::convexsets::{midpoint_set, segment, MidConvention};
use menger::properties::{check_betweenness, reproduce};
use menger::spaces::{MetricSpace, Point, Scalar};

fn main() -> menger::Result<()> {
    let space = MetricSpace::l1(2).exact()?;
    let x = Point::from_ints(&[0, 0]);
    let y = Point::from_ints(&[4, 2]);
    let grid: Vec<Scalar> = (1..8).map(|k| Scalar::ratio(k, 8)).collect();
    let seg = segment(&space, &x, &y, &grid)?;
    println!("[x, y] sampled at {} parameters, {} member points", seg.samples.len(), seg.members(&space, 3)?.len());

    let (t1, t2) = (Scalar::ratio(1, 4), Scalar::ratio(3, 4));
    let p1 = midpoint_set(&space, &x, &y, &t1, MidConvention::FromX)?.hull_vertices().expect("exact")[0].clone();
    let c2 = midpoint_set(&space, &x, &y, &t2, MidConvention::FromX)?;
    for p2 in c2.hull_vertices().expect("exact") {
        let v = check_betweenness(&space, &x, &y, &t1, &t2, &p1, &p2)?;
        let cert = v.extremal().or(v.certificate()).expect("one instance");
        println!("p1 = {p1}, p2 = {p2}: d(p1,p2) + d(p2,y) = {} vs d(p1,y) = {} -> {}", cert.lhs, cert.rhs, v.status());
    }
    println!("segment contains (1, 1): {}", seg.contains(&space, &Point::from_ints(&[1, 1]))?);
    println!("segment contains (5, 0): {}", seg.contains(&space, &Point::from_ints(&[5, 0]))?);

    let report = reproduce("ex1-betweenness")?;
    println!("fixture {}: passed = {}", report.name, report.passed);
    Ok(())
}
