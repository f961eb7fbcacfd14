use serde::{Deserialize, Serialize};

use crate::convexsets::unique_midpoint;
use crate::error::{Error, Result};
use crate::sampling::SamplePlan;
use crate::spaces::{MetricSpace, Point, Scalar};

/// `x ↦ m(x, y, t)`: the point at distance `t·d(x, y)` from `y` on the way
/// to `x`. A `t`-Lipschitz map fixing `y`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MidpointMap {
    pub y: Point,
    pub t: Scalar,
}

impl MidpointMap {
    pub fn new(y: Point, t: Scalar) -> Self {
        MidpointMap { y, t }
    }

    pub fn apply(&self, space: &MetricSpace, x: &Point) -> Result<Point> {
        unique_midpoint(space, x, &self.y, &self.t)
    }

    /// `self ∘ other`, defined when both maps share `y`.
    pub fn compose(&self, other: &MidpointMap) -> Result<MidpointMap> {
        if self.y != other.y {
            return Err(Error::Precondition("midpoint maps compose only about a common point".into()));
        }
        Ok(MidpointMap { y: self.y.clone(), t: &self.t * &other.t })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SemigroupReport {
    /// `c_{t_1} ∘ … ∘ c_{t_k}`.
    pub composed: MidpointMap,
    /// `∏ t_i`.
    pub product: Scalar,
    /// Largest `d(Cx, Cx') / d(x, x')` seen when the maps are applied one
    /// after another.
    pub lipschitz_estimate: f64,
    pub within_product: bool,
    /// Every map, and the composite, fixes `y`.
    pub fixes_y: bool,
    /// Largest disagreement between the two bracketings of consecutive
    /// triples and sequential application.
    pub associativity_error: f64,
    pub samples: usize,
}

/// Composes midpoint maps about `y` and checks the composite numerically.
pub fn semigroup_compose(space: &MetricSpace, y: &Point, t_list: &[Scalar], plan: &SamplePlan) -> Result<SemigroupReport> {
    if !space.has_unique_midpoints() {
        return Err(Error::NoUniqueMidpoint { op: "semigroup_compose", metric: space.metric().to_string() });
    }
    if t_list.is_empty() {
        return Err(Error::Precondition("at least one parameter is needed".into()));
    }
    let y = space.normalize(y)?;
    let maps: Vec<MidpointMap> = t_list.iter().map(|t| MidpointMap::new(y.clone(), t.clone())).collect();
    let mut composed = maps[maps.len() - 1].clone();
    for m in maps.iter().rev().skip(1) {
        composed = m.compose(&composed)?;
    }
    let sequential = |x: &Point| -> Result<Point> {
        maps.iter().rev().try_fold(x.clone(), |acc, m| m.apply(space, &acc))
    };

    let mut fixes_y = composed.apply(space, &y)? == y;
    for m in &maps {
        fixes_y &= m.apply(space, &y)? == y;
    }

    let mut s = plan.sampler(space, 70);
    let mut lipschitz = 0.0f64;
    let mut assoc = 0.0f64;
    for i in 0..plan.samples {
        let x = s.point();
        let x2 = s.point_distinct_from(&x);
        let (cx, cx2) = (sequential(&x)?, sequential(&x2)?);
        lipschitz = lipschitz.max(space.distance(&cx, &cx2)?.to_f64() / space.distance(&x, &x2)?.to_f64());

        let k = maps.len();
        let (a, b, c) = (&maps[i % k], &maps[(i + 1) % k], &maps[(i + 2) % k]);
        let left = a.compose(b)?.compose(c)?.apply(space, &x)?;
        let right = a.compose(&b.compose(c)?)?.apply(space, &x)?;
        let seq = a.apply(space, &b.apply(space, &c.apply(space, &x)?)?)?;
        assoc = assoc.max(space.distance(&left, &right)?.to_f64()).max(space.distance(&left, &seq)?.to_f64());
    }
    let product = composed.t.clone();
    Ok(SemigroupReport {
        within_product: lipschitz <= product.to_f64() + space.tau(),
        composed,
        product,
        lipschitz_estimate: lipschitz,
        fixes_y,
        associativity_error: assoc,
        samples: plan.samples,
    })
}

/// `(a, b)` with `a·t1 = b·t2`, i.e. `c_a ∘ c_{t1} = c_b ∘ c_{t2}`.
pub fn left_reversal_witness(t1: &Scalar, t2: &Scalar) -> (Scalar, Scalar) {
    let half = if t1.is_exact() && t2.is_exact() { Scalar::ratio(1, 2) } else { Scalar::float(0.5) };
    (t2 * &half, t1 * &half)
}
