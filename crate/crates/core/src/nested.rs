//! Decreasing sequences of finite ball intersections and their common points.
//!
//! Each set `K_n` is kept as the list of balls it is the intersection of.
//! Common points come from cyclic projection onto all ball constraints,
//! deepest set first, where projecting onto `B[c, r]` means scaling toward
//! `c` until the distance is `r`. The scaled point always lies in the ball
//! for a norm-induced metric, and the arithmetic stays rational in exact
//! mode.

use serde::{Deserialize, Serialize};

use crate::convexsets::Ball;
use crate::error::{Error, Result};
use crate::sampling::SamplePlan;
use crate::spaces::{MetricSpace, Point, Scalar};

/// Sweeps of cyclic projection before giving up.
pub const MAX_SWEEPS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NestedFamily {
    /// `K_n` as the balls it is the intersection of.
    pub sets: Vec<Vec<Ball>>,
    /// Upper estimate of `δ(K_n)`: twice the smallest radius among its balls.
    pub diameters: Vec<f64>,
}

impl NestedFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Largest violation of any stored ball constraint at `z`.
    pub fn max_violation(&self, space: &MetricSpace, z: &Point) -> Result<Scalar> {
        let mut worst = space.constant(0, 1);
        for ball in self.sets.iter().flatten() {
            worst = worst.max(ball.violation(space, z)?);
        }
        Ok(worst)
    }

    /// Whether `z` lies in `K_n` up to the space tolerance.
    pub fn contains(&self, space: &MetricSpace, n: usize, z: &Point) -> Result<bool> {
        for b in &self.sets[n] {
            if !b.contains(space, z)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn from_parts(space: &MetricSpace, sets: Vec<Vec<Ball>>) -> Result<Self> {
        if sets.is_empty() || sets.iter().any(Vec::is_empty) {
            return Err(Error::EmptySet);
        }
        let mut normalized = Vec::with_capacity(sets.len());
        for set in sets {
            let mut balls = Vec::with_capacity(set.len());
            for b in set {
                let radius = space.normalize_scalar(&b.radius)?;
                if radius.is_negative() {
                    return Err(Error::ParameterOutOfRange(format!("negative radius {radius}")));
                }
                balls.push(Ball::new(space.normalize(&b.center)?, radius));
            }
            normalized.push(balls);
        }
        let diameters = normalized
            .iter()
            .map(|set| set.iter().map(|b| 2.0 * b.radius.to_f64()).fold(f64::INFINITY, f64::min))
            .collect();
        Ok(NestedFamily { sets: normalized, diameters })
    }
}

/// Balls `B[c_n, r_n]` with `r_n` strictly decreasing and
/// `d(c_n, c_{n+1}) <= r_n - r_{n+1}`, which makes them nested.
pub fn build_shrinking_family(space: &MetricSpace, centers: &[Point], radii: &[Scalar]) -> Result<NestedFamily> {
    if centers.len() != radii.len() {
        return Err(Error::Precondition(format!("{} centers but {} radii", centers.len(), radii.len())));
    }
    for (i, r) in radii.iter().enumerate() {
        if r.is_negative() || r.is_zero() {
            return Err(Error::ParameterOutOfRange(format!("radius r_{i} = {r} must be positive")));
        }
        if let Some(next) = radii.get(i + 1).filter(|next| *next >= r) {
            return Err(Error::Precondition(format!("radii must strictly decrease: r_{i} = {r}, r_{} = {next}", i + 1)));
        }
    }
    let family = NestedFamily::from_parts(
        space,
        centers.iter().zip(radii).map(|(c, r)| vec![Ball::new(c.clone(), r.clone())]).collect(),
    )?;
    for n in 0..family.len().saturating_sub(1) {
        let (a, b) = (&family.sets[n][0], &family.sets[n + 1][0]);
        let gap = &a.radius - &b.radius;
        if !space.le(&space.distance(&a.center, &b.center)?, &gap) {
            return Err(Error::NestingViolated { index: n, next: n + 1 });
        }
    }
    Ok(family)
}

/// A family from explicit ball lists. `K_{n+1} ⊆ K_n` is checked on points
/// of `K_{n+1}`: its centers pulled into the set plus sampled members.
pub fn from_sets(space: &MetricSpace, sets: Vec<Vec<Ball>>, plan: &SamplePlan) -> Result<NestedFamily> {
    let family = NestedFamily::from_parts(space, sets)?;
    let mut s = plan.sampler(space, 80);
    let per_set = plan.samples.clamp(1, 256);
    for n in 0..family.len().saturating_sub(1) {
        let inner = NestedFamily { sets: vec![family.sets[n + 1].clone()], diameters: vec![family.diameters[n + 1]] };
        let mut probes = Vec::new();
        for b in &inner.sets[0] {
            if let Ok(p) = project_cyclic(space, &inner, b.center.clone(), MAX_SWEEPS / 100) {
                probes.push(p);
            }
        }
        let smallest = inner.sets[0]
            .iter()
            .min_by(|a, b| a.radius.total_cmp(&b.radius))
            .expect("sets are nonempty");
        let (c, r) = (smallest.center.to_f64().into_owned(), smallest.radius.to_f64());
        let draws = if space.is_exact() { 0 } else { per_set };
        for _ in 0..draws {
            let z = Point::float(c.iter().map(|ci| s.uniform(ci - r, ci + r)).collect());
            if inner.contains(space, 0, &z)? {
                probes.push(z);
            }
        }
        for z in &probes {
            if !family.contains(space, n, z)? {
                return Err(Error::NestingViolated { index: n, next: n + 1 });
            }
        }
    }
    Ok(family)
}

/// Cyclic projection from `start`; returns once every constraint holds
/// within the space tolerance.
fn project_cyclic(space: &MetricSpace, family: &NestedFamily, start: Point, sweeps: usize) -> Result<Point> {
    let tol = space.constant(0, 1);
    project_until(space, family, start, &tol, sweeps)
}

fn project_until(space: &MetricSpace, family: &NestedFamily, start: Point, tol: &Scalar, sweeps: usize) -> Result<Point> {
    let mut z = space.normalize(&start)?;
    let mut worst = family.max_violation(space, &z)?;
    for _ in 0..sweeps {
        if space.le(&worst, tol) {
            return Ok(z);
        }
        for ball in family.sets.iter().rev().flatten() {
            let d = space.distance(&ball.center, &z)?;
            if ball.radius < d {
                z = ball.center.toward(&z, &(&ball.radius / &d));
            }
        }
        worst = family.max_violation(space, &z)?;
    }
    if space.le(&worst, tol) {
        return Ok(z);
    }
    Err(Error::NoProgress { max_violation: worst.to_f64(), iterations: sweeps })
}

/// A point of every `K_n`, each ball constraint violated by at most `tol`.
pub fn common_point(space: &MetricSpace, family: &NestedFamily, tol: f64) -> Result<Point> {
    let start = deepest_center(family);
    common_point_from(space, family, start, tol)
}

/// [`common_point`] started at `start` instead of the deepest center.
pub fn common_point_from(space: &MetricSpace, family: &NestedFamily, start: Point, tol: f64) -> Result<Point> {
    if family.is_empty() {
        return Err(Error::EmptySet);
    }
    let sweeps = if space.is_exact() { MAX_SWEEPS / 50 } else { MAX_SWEEPS };
    project_until(space, family, start, &Scalar::float(tol), sweeps)
}

fn deepest_center(family: &NestedFamily) -> Point {
    family.sets.last().and_then(|s| s.first()).map(|b| b.center.clone()).expect("family is nonempty")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CantorResult {
    pub point: Point,
    /// Second solve, started on the boundary of `K_1` opposite the first.
    pub restart: Point,
    pub agreement: Scalar,
    /// `2·δ(K_last) + tol`.
    pub bound: f64,
    pub unique: bool,
}

/// The common point of a family whose diameters vanish, plus a restarted
/// solve that must land within `2·δ(K_last)` of it.
pub fn cantor_point(space: &MetricSpace, family: &NestedFamily, tol: f64) -> Result<CantorResult> {
    if family.is_empty() {
        return Err(Error::EmptySet);
    }
    let decreasing = family.diameters.windows(2).all(|w| w[1] < w[0]);
    let last = *family.diameters.last().expect("nonempty");
    if !decreasing || last >= tol {
        return Err(Error::DiametersNotVanishing { tol });
    }
    let point = common_point(space, family, tol)?;
    let outer = &family.sets[0][0];
    let away = point.sub(&outer.center);
    let dim = point.dim();
    let dir = if space.distance(&outer.center, &point)?.is_zero() {
        Point::axis(dim, 0, space.constant(1, 1))
    } else {
        let d = space.distance(&point, &outer.center)?;
        away.scale(&(-(space.constant(1, 1) / d)))
    };
    let start = space.normalize(&outer.center.add(&dir.scale(&outer.radius)))?;
    let restart = common_point_from(space, family, start, tol)?;
    let agreement = space.distance(&point, &restart)?;
    let bound = 2.0 * last + tol;
    Ok(CantorResult { unique: agreement.to_f64() <= bound, point, restart, agreement, bound })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::float(vec![x, y])
    }

    #[test]
    fn increasing_radii_rejected() {
        let s = MetricSpace::l2(2);
        let err = build_shrinking_family(&s, &[p(0.0, 0.0), p(0.0, 0.0)], &[Scalar::float(1.0), Scalar::float(2.0)]);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn constant_centers() {
        let s = MetricSpace::l2(2);
        let radii: Vec<Scalar> = (1..=20).map(|n| Scalar::float(1.0 / n as f64)).collect();
        let f = build_shrinking_family(&s, &vec![p(0.3, 0.4); 20], &radii).unwrap();
        assert_eq!(common_point(&s, &f, 1e-9).unwrap(), p(0.3, 0.4));
    }

    #[test]
    fn disjoint_balls_make_no_progress() {
        let s = MetricSpace::l2(2);
        let sets = vec![vec![Ball::new(p(0.0, 0.0), Scalar::float(1.0)), Ball::new(p(5.0, 0.0), Scalar::float(1.0))]];
        let f = from_sets(&s, sets, &SamplePlan::default()).unwrap();
        match common_point(&s, &f, 1e-6) {
            Err(Error::NoProgress { max_violation, .. }) => assert!(max_violation > 1.0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn exact_linf_boxes_meet_at_origin() {
        let s = MetricSpace::linf(2).exact().unwrap();
        let centers: Vec<Point> = (1..=30).map(|n| Point::from_ratios(&[(1, 1 << (n + 1)), (1, 1 << (n + 1))])).collect();
        let radii: Vec<Scalar> = (1..=30).map(|n| Scalar::ratio(1, 1 << (n + 1))).collect();
        let f = build_shrinking_family(&s, &centers, &radii).unwrap();
        let c = cantor_point(&s, &f, 1e-6).unwrap();
        assert!(c.unique);
        assert!(f.max_violation(&s, &c.point).unwrap().is_zero());
        assert!(s.distance(&c.point, &Point::from_ints(&[0, 0])).unwrap().to_f64() <= 1e-6);
    }

    #[test]
    fn stuck_diameters_rejected() {
        let s = MetricSpace::l2(2);
        let radii: Vec<Scalar> = (1..=10).map(|n| Scalar::float(1.0 + 1.0 / n as f64)).collect();
        let f = build_shrinking_family(&s, &vec![p(0.0, 0.0); 10], &radii).unwrap();
        assert!(matches!(cantor_point(&s, &f, 1e-6), Err(Error::DiametersNotVanishing { .. })));
    }
}
