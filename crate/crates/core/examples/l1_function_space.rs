//! Piecewise polynomials on [0, 1] under the L1 and sup metrics, with exact
//! rational integrals.
//!
//! Run with `cargo run --example l1_function_space`.

use menger::properties::{reproduce, tent};
use menger::spaces::{MetricSpace, PiecewisePoly, Scalar};

fn main() -> menger::Result<()> {
    let l1 = MetricSpace::l1_functions();
    let linf = MetricSpace::linf_functions();
    let zero = PiecewisePoly::constant(Scalar::int(0));
    for a in [Scalar::ratio(1, 4), Scalar::ratio(1, 2), Scalar::ratio(3, 4)] {
        let h = tent(&a)?;
        println!("tent peaked at {a}: L1 norm {}, sup norm {}", l1.pl_distance(&h, &zero)?, linf.pl_distance(&h, &zero)?);
    }

    // x^2 against x: the integrand changes sign only at the endpoints.
    let square = PiecewisePoly::new(vec![Scalar::int(0), Scalar::int(1)], vec![[Scalar::int(0), Scalar::int(0), Scalar::int(1)]])?;
    let identity = PiecewisePoly::new(vec![Scalar::int(0), Scalar::int(1)], vec![[Scalar::int(0), Scalar::int(1), Scalar::int(0)]])?;
    println!("d_1(x^2, x) = {}", l1.pl_distance(&square, &identity)?);
    println!("d_inf(x^2, x) = {}", linf.pl_distance(&square, &identity)?);

    for name in ["L1-ha", "Linf-hp"] {
        let report = reproduce(name)?;
        println!("{name}: {}", report.summary);
        for c in &report.claims {
            println!("  {} = {} (expected {})", c.statement, c.value, c.expected);
        }
    }
    Ok(())
}
