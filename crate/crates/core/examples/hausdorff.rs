//! Hausdorff distances between finite sets, boxes and midpoint sets.
//!
//! Run with `cargo run --example hausdorff`.

use menger::convexsets::{midpoint_set, MidConvention, SetRep};
use menger::hausdorff::{directed_hausdorff, hausdorff};
use menger::spaces::{MetricSpace, Point, Scalar};

fn main() -> menger::Result<()> {
    let linf = MetricSpace::linf(2).exact()?;
    let a = SetRep::boxed(Point::from_ints(&[0, 0]), Point::from_ints(&[2, 1]))?;
    let b = SetRep::boxed(Point::from_ints(&[1, 0]), Point::from_ints(&[4, 1]))?;
    let h = hausdorff(&linf, &a, &b)?;
    println!("H(box, box) = {} witnessed by {} and {} (exact: {})", h.value, h.witness.0, h.witness.1, h.exact);

    let pts = SetRep::finite(vec![Point::from_ints(&[0, 0]), Point::from_ints(&[3, 3])])?;
    println!("directed H(points -> box) = {}", directed_hausdorff(&linf, &pts, &a)?.value);
    println!("directed H(box -> points) = {}", directed_hausdorff(&linf, &a, &pts)?.value);

    // Midpoint sets of two pairs sharing y, compared to t·d(x, z).
    let l1 = MetricSpace::l1(2).exact()?;
    let (x, z, y) = (Point::from_ints(&[0, 0]), Point::from_ints(&[2, 0]), Point::from_ints(&[1, 3]));
    let t = Scalar::ratio(1, 3);
    let cx = midpoint_set(&l1, &x, &y, &t, MidConvention::FromY)?;
    let cz = midpoint_set(&l1, &z, &y, &t, MidConvention::FromY)?;
    let h = hausdorff(&l1, &cx, &cz)?;
    println!("H(c(x,y,t), c(z,y,t)) = {} vs t·d(x,z) = {}", h.value, &t * &l1.distance(&x, &z)?);
    Ok(())
}
