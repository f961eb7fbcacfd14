//! Empirical modulus of convexity against the closed form for d_2.
//!
//! Run with `cargo run --release --example uniform_modulus`.

use menger::properties::estimate_uniform_modulus;
use menger::sampling::SamplePlan;
use menger::spaces::MetricSpace;

fn main() -> menger::Result<()> {
    let eps = [0.25, 0.5, 1.0, 1.5, 2.0];
    let plan = SamplePlan::new(5, 4000);
    for p in [2.0, 3.0, 1.5] {
        let space = MetricSpace::lp(2, p)?;
        println!("p = {p}");
        for est in estimate_uniform_modulus(&space, &eps, &plan)? {
            let closed = if p == 2.0 { format!("{:.6}", 1.0 - (1.0 - est.eps * est.eps / 4.0).sqrt()) } else { "-".into() };
            println!("  eps {:<5} delta_hat {:.6}  d_2 closed form {closed}", est.eps, est.delta_hat);
        }
    }
    match estimate_uniform_modulus(&MetricSpace::linf(2), &eps, &plan) {
        Err(e) => println!("d_inf: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
