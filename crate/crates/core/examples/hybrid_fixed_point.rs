//! Fixed points of generalized hybrid mappings by minimizing the asymptotic
//! center functional.
//!
//! Run with `cargo run --release --example hybrid_fixed_point`.

use std::f64::consts::PI;

use menger::fixedpoint::{find_fixed_point, Domain, HybridParams, Mapping, MappingSpec, SolverConfig};
use menger::spaces::{MetricSpace, Point};

fn main() -> menger::Result<()> {
    let space = MetricSpace::l2(2);
    let cfg = SolverConfig::default();
    let cases = [
        ("rotation by 2pi/7 on the unit disk", MappingSpec::rotation(2.0 * PI / 7.0), HybridParams::nonexpansive(), vec![1.0, 0.0]),
        ("x/2 + (1, -1)", MappingSpec::scaled_shift(0.5, vec![1.0, -1.0]), HybridParams::nonexpansive(), vec![0.0, 0.0]),
        (
            "projection onto [1,2]^2",
            MappingSpec::new(Mapping::Projection { lower: vec![1.0, 1.0], upper: vec![2.0, 2.0] }, Domain::Whole),
            HybridParams::nonspreading(),
            vec![5.0, -3.0],
        ),
        ("doubling", MappingSpec::scaled_shift(2.0, vec![0.0, 0.0]), HybridParams::nonexpansive(), vec![1.0, 0.0]),
        ("translation by (1, 0)", MappingSpec::scaled_shift(1.0, vec![1.0, 0.0]), HybridParams::nonexpansive(), vec![0.0, 0.0]),
    ];
    for (name, spec, params, x0) in cases {
        match find_fixed_point(&space, &spec, params, &Point::float(x0), &cfg) {
            Ok(r) => println!(
                "{name}: u0 = {}, d(Tu0, u0) = {:.2e}, f(u0) = {:.6}, {} evaluations",
                r.u0, r.residual, r.f_value, r.evaluations
            ),
            Err(e) => println!("{name}: {e}"),
        }
    }
    Ok(())
}
