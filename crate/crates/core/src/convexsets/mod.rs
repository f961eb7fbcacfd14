//! Midpoint sets `c(x, y, t)`, unique midpoints, metric segments and
//! set-lifted unions `C(A, y, t)`.
//!
//! `c(x, y, t)` is the intersection of two closed balls about `x` and `y`
//! whose radii add up to `d(x, y)`. Its shape depends on the metric:
//! a point for strictly convex d_p, an axis-aligned box for d_∞, a slice of
//! a coordinate box for d_1, a finite set of lattice points for Z^n.

mod setrep;

use serde::{Deserialize, Serialize};

pub use setrep::{Ball, BoxSet, SampledSet, SetRep};

use crate::error::{Error, Result};
use crate::properties::{Certificate, Inputs, Property, PropertyVerdict, Tracker};
use crate::sampling::DEFAULT_RESOLUTION;
use crate::spaces::{Exponent, Metric, MetricSpace, Point, Scalar};

/// Which ball receives the radius `t·d(x, y)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum MidConvention {
    /// `c(x,y,t) = B[x, t·d] ∩ B[y, (1-t)·d]`.
    FromX,
    /// `c(x,y,t) = B[x, (1-t)·d] ∩ B[y, t·d]`, so that `m(x,y,t) = t·x + (1-t)·y`.
    #[default]
    FromY,
}

impl MidConvention {
    /// `(r_x, r_y)` for a pair at distance `d`.
    pub fn radii(self, d: &Scalar, t: &Scalar) -> (Scalar, Scalar) {
        let near = d * t;
        let far = d - &near;
        match self {
            MidConvention::FromX => (near, far),
            MidConvention::FromY => (far, near),
        }
    }

    /// Fraction of the way from `x` to `y` at which the affine point of the
    /// midpoint set sits.
    pub fn fraction_from_x(self, t: &Scalar) -> Scalar {
        match self {
            MidConvention::FromX => t.clone(),
            MidConvention::FromY => t.one_like() - t,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MidConvention::FromX => "FromX",
            MidConvention::FromY => "FromY",
        }
    }
}

pub(crate) fn check_t(space: &MetricSpace, t: &Scalar) -> Result<Scalar> {
    let t = space.normalize_scalar(t)?;
    if !(t > t.zero_like() && t < t.one_like()) {
        return Err(Error::ParameterOutOfRange(t.to_string()));
    }
    Ok(t)
}

/// `c(x, y, t)` as the tightest available representation.
pub fn midpoint_set(space: &MetricSpace, x: &Point, y: &Point, t: &Scalar, conv: MidConvention) -> Result<SetRep> {
    midpoint_set_with(space, x, y, t, conv, DEFAULT_RESOLUTION)
}

/// [`midpoint_set`] with an explicit grid resolution for sampled results.
pub fn midpoint_set_with(
    space: &MetricSpace,
    x: &Point,
    y: &Point,
    t: &Scalar,
    conv: MidConvention,
    resolution: usize,
) -> Result<SetRep> {
    let t = check_t(space, t)?;
    let (x, y) = (space.normalize(x)?, space.normalize(y)?);
    if x == y {
        return Err(Error::CoincidentPoints);
    }
    let d = space.distance_unchecked(&x, &y);
    let (rx, ry) = conv.radii(&d, &t);
    two_ball(space, &x, &y, &rx, &ry, resolution).map_err(|e| match e {
        Error::EmptySet => Error::EmptyIntersection { t: t.to_string() },
        e => e,
    })
}

/// `B[x, rx] ∩ B[y, ry]` for `rx + ry = d(x, y)`, with `x`, `y` normalized.
fn two_ball(space: &MetricSpace, x: &Point, y: &Point, rx: &Scalar, ry: &Scalar, resolution: usize) -> Result<SetRep> {
    let d = space.distance_unchecked(x, y);
    if d.is_zero() {
        return Ok(SetRep::Singleton(x.clone()));
    }
    let p = match space.metric() {
        Metric::Lp { p } => *p,
        m => return Err(Error::UnsupportedMetric { op: "midpoint_set", metric: m.to_string() }),
    };
    if space.is_integer_lattice() {
        return lattice_two_ball(space, x, y, rx, ry);
    }
    match p {
        Exponent::Infinity => {
            let mut lower = Vec::new();
            let mut upper = Vec::new();
            for (xi, yi) in x.scalars().iter().zip(y.scalars()) {
                let lo = (xi - rx).max(&yi - ry);
                let hi = (xi + rx).min(&yi + ry);
                if lo > hi {
                    if !space.le(&lo, &hi) {
                        return Err(Error::EmptySet);
                    }
                    let mid = (&lo + &hi) / space.constant(2, 1);
                    lower.push(mid.clone());
                    upper.push(mid);
                } else {
                    lower.push(lo);
                    upper.push(hi);
                }
            }
            SetRep::boxed(Point::from_scalars(lower), Point::from_scalars(upper))
        }
        p if p.is_one() => l1_two_ball(space, x, y, rx, ry, resolution),
        _ => Ok(SetRep::Singleton(x.toward(y, &(rx / &d)))),
    }
}

/// Under d_1 the intersection is `{x + s∘u : 0 <= u_i <= |y_i - x_i|, Σu_i = rx}`
/// with `s_i = sign(y_i - x_i)`: a slice of the coordinate box spanned by x, y.
fn l1_two_ball(space: &MetricSpace, x: &Point, y: &Point, rx: &Scalar, ry: &Scalar, resolution: usize) -> Result<SetRep> {
    let vertices = l1_slice_vertices(space, x, y, rx)?;
    if vertices.len() == 1 {
        return Ok(SetRep::Singleton(vertices.into_iter().next().expect("one vertex")));
    }
    let piece = vec![Ball::new(x.clone(), rx.clone()), Ball::new(y.clone(), ry.clone())];
    SampledSet::new(vec![piece], vertices, true, resolution).map(SetRep::Sampled)
}

struct Slice {
    active: Vec<usize>,
    widths: Vec<Scalar>,
    signs: Vec<Scalar>,
}

fn l1_slice(x: &Point, y: &Point) -> Slice {
    let diff = y.sub(x).scalars();
    let mut active = Vec::new();
    let mut widths = Vec::new();
    let mut signs = Vec::new();
    for (i, di) in diff.iter().enumerate() {
        if !di.is_zero() {
            active.push(i);
            widths.push(di.abs());
            signs.push(if di.is_negative() { -di.one_like() } else { di.one_like() });
        }
    }
    Slice { active, widths, signs }
}

fn l1_point(x: &Point, slice: &Slice, u: &[Scalar]) -> Point {
    let mut coords = x.scalars();
    for (k, &i) in slice.active.iter().enumerate() {
        coords[i] = &coords[i] + &slice.signs[k] * &u[k];
    }
    Point::from_scalars(coords)
}

/// Puts `r - Σ others` into slot `j` when it fits in `[0, w_j]`.
fn solve_last(space: &MetricSpace, u: &mut [Scalar], j: usize, r: &Scalar, w: &Scalar) -> bool {
    let rest = u.iter().enumerate().filter(|(k, _)| *k != j).fold(r.clone(), |acc, (_, v)| acc - v);
    let zero = rest.zero_like();
    if !(space.le(&zero, &rest) && space.le(&rest, w)) {
        return false;
    }
    u[j] = rest.max(zero).min(w.clone());
    true
}

/// Vertices of the slice: every coordinate but one at an end of its range.
fn l1_slice_vertices(space: &MetricSpace, x: &Point, y: &Point, rx: &Scalar) -> Result<Vec<Point>> {
    let slice = l1_slice(x, y);
    let m = slice.active.len();
    if m > 20 {
        return Err(Error::TooLarge(format!("{m} active coordinates in a d_1 midpoint set")));
    }
    let mut out: Vec<Point> = Vec::new();
    for j in 0..m {
        for mask in 0u32..(1 << (m - 1)) {
            let mut u = Vec::with_capacity(m);
            let mut bit = 0;
            for k in 0..m {
                if k == j {
                    u.push(rx.zero_like());
                } else {
                    u.push(if mask >> bit & 1 == 1 { slice.widths[k].clone() } else { rx.zero_like() });
                    bit += 1;
                }
            }
            if solve_last(space, &mut u, j, rx, &slice.widths[j]) {
                out.push(l1_point(x, &slice, &u));
            }
        }
    }
    out.sort_by(|a, b| a.lex_cmp(b));
    out.dedup();
    if out.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(out)
}

/// Grid of the slice: `resolution` values for each active coordinate but the
/// last, which is solved for.
fn l1_slice_grid(space: &MetricSpace, x: &Point, y: &Point, rx: &Scalar, resolution: usize) -> Result<Vec<Point>> {
    let slice = l1_slice(x, y);
    let m = slice.active.len();
    if m == 0 {
        return Ok(vec![x.clone()]);
    }
    let count = resolution.checked_pow(m as u32 - 1).filter(|&c| c <= 1_000_000);
    if count.is_none() {
        return Err(Error::TooLarge(format!("{resolution}^{} grid points", m - 1)));
    }
    let steps = space.constant(resolution as i64 - 1, 1);
    let mut out = Vec::new();
    let mut idx = vec![0usize; m - 1];
    loop {
        let mut u: Vec<Scalar> = idx
            .iter()
            .enumerate()
            .map(|(k, &i)| &slice.widths[k] * space.constant(i as i64, 1) / &steps)
            .collect();
        u.push(rx.zero_like());
        if solve_last(space, &mut u, m - 1, rx, &slice.widths[m - 1]) {
            out.push(l1_point(x, &slice, &u));
        }
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < resolution {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    Ok(out)
}

fn lattice_two_ball(space: &MetricSpace, x: &Point, y: &Point, rx: &Scalar, ry: &Scalar) -> Result<SetRep> {
    use num_traits::ToPrimitive;
    let mut ranges = Vec::new();
    let mut total: u64 = 1;
    for (xi, yi) in x.scalars().iter().zip(y.scalars()) {
        let lo = (xi - rx).max(&yi - ry);
        let hi = (xi + rx).min(&yi + ry);
        let (lo, hi) = (lo.as_exact().expect("exact").ceil(), hi.as_exact().expect("exact").floor());
        if lo > hi {
            return Err(Error::EmptySet);
        }
        let (a, b) = (lo.to_integer().to_i64().unwrap_or(0), hi.to_integer().to_i64().unwrap_or(0));
        total = total.saturating_mul((b - a + 1) as u64);
        ranges.push((a, b));
    }
    if total > 1_000_000 {
        return Err(Error::TooLarge(format!("{total} lattice candidates")));
    }
    let mut out = Vec::new();
    let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        let z = Point::from_ints(&cur);
        let dx = space.distance_unchecked(x, &z);
        let dy = space.distance_unchecked(y, &z);
        if &dx <= rx && &dy <= ry {
            out.push(z);
        }
        let mut k = 0;
        while k < cur.len() {
            cur[k] += 1;
            if cur[k] <= ranges[k].1 {
                break;
            }
            cur[k] = ranges[k].0;
            k += 1;
        }
        if k == cur.len() {
            break;
        }
    }
    match out.len() {
        0 => Err(Error::EmptySet),
        1 => Ok(SetRep::Singleton(out.pop().expect("one point"))),
        _ => SetRep::finite(out),
    }
}

/// Grid of one piece of a sampled set.
pub(crate) fn piece_grid(space: &MetricSpace, piece: &[Ball], resolution: usize) -> Result<Vec<Point>> {
    match piece {
        [b] if b.radius.is_zero() => Ok(vec![b.center.clone()]),
        [a, b] => {
            let d = space.distance(&a.center, &b.center)?;
            if space.approx_eq(&(&a.radius + &b.radius), &d) {
                if space.lp_exponent().is_some_and(Exponent::is_one) && !d.is_zero() {
                    return l1_slice_grid(space, &a.center, &b.center, &a.radius, resolution);
                }
                return match two_ball(space, &a.center, &b.center, &a.radius, &b.radius, resolution)? {
                    SetRep::Box(bx) => Ok(bx.grid(resolution)),
                    other => other.members(space, resolution),
                };
            }
            Err(Error::Precondition("piece is not a midpoint set".into()))
        }
        _ => Err(Error::Precondition("piece is not a midpoint set".into())),
    }
}

/// Checks every sampled member of `c(x, y, t)` against both sphere equations.
pub fn sphere_equivalence_check(
    space: &MetricSpace,
    x: &Point,
    y: &Point,
    t: &Scalar,
    conv: MidConvention,
) -> Result<PropertyVerdict> {
    let set = midpoint_set(space, x, y, t, conv)?;
    sphere_check_set(space, x, y, t, conv, &set, 3)
}

/// Checks a given representation against the sphere equations of `c(x, y, t)`.
/// Boxes are sampled on a `box_resolution` grid.
pub fn sphere_check_set(
    space: &MetricSpace,
    x: &Point,
    y: &Point,
    t: &Scalar,
    conv: MidConvention,
    set: &SetRep,
    box_resolution: usize,
) -> Result<PropertyVerdict> {
    let mut tracker = Tracker::new(Property::SphereEquivalence, space, Some(conv), None);
    for z in set.members(space, box_resolution)? {
        let inputs = Inputs::Sphere { x: x.clone(), y: y.clone(), t: t.clone(), z };
        let cert = Certificate::evaluate(space, Some(conv), inputs, DEFAULT_RESOLUTION)?;
        if let Some(v) = tracker.push(cert) {
            return Ok(v);
        }
    }
    Ok(tracker.finish())
}

/// Residual of the sphere equations at `z`: `max(|d(x,z) - r_x|, |d(y,z) - r_y|)`.
pub(crate) fn sphere_defect(
    space: &MetricSpace,
    x: &Point,
    y: &Point,
    t: &Scalar,
    conv: MidConvention,
    z: &Point,
) -> Result<Scalar> {
    let t = check_t(space, t)?;
    let d = space.distance(x, y)?;
    let (rx, ry) = conv.radii(&d, &t);
    let ex = (space.distance(x, z)? - rx).abs();
    let ey = (space.distance(y, z)? - ry).abs();
    Ok(ex.max(ey))
}

/// `m(x, y, t) = t·x + (1-t)·y`, at distance `(1-t)·d` from `x` and `t·d` from
/// `y`. Only for spaces where midpoint sets are singletons; `x = y` gives `y`.
pub fn unique_midpoint(space: &MetricSpace, x: &Point, y: &Point, t: &Scalar) -> Result<Point> {
    if !space.has_unique_midpoints() {
        return Err(Error::NoUniqueMidpoint { op: "unique_midpoint", metric: space.metric().to_string() });
    }
    let t = check_t(space, t)?;
    let (x, y) = (space.normalize(x)?, space.normalize(y)?);
    Ok(y.toward(&x, &t))
}

/// Sampled metric segment `[x, y]`: `c(x, y, t)` for each `t` of a grid,
/// with `t` the fraction of `d(x, y)` measured from `x`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub x: Point,
    pub y: Point,
    pub samples: Vec<(Scalar, SetRep)>,
}

impl Segment {
    /// `d(x,z) + d(z,y) - d(x,y)`, zero exactly on the segment.
    pub fn betweenness_defect(&self, space: &MetricSpace, z: &Point) -> Result<Scalar> {
        Ok(space.distance(&self.x, z)? + space.distance(z, &self.y)? - space.distance(&self.x, &self.y)?)
    }

    pub fn contains(&self, space: &MetricSpace, z: &Point) -> Result<bool> {
        let defect = self.betweenness_defect(space, z)?;
        Ok(space.le(&defect, &defect.zero_like()))
    }

    /// Members of every sampled midpoint set, boxes on a `box_resolution` grid.
    pub fn members(&self, space: &MetricSpace, box_resolution: usize) -> Result<Vec<Point>> {
        let mut out = Vec::new();
        for (_, set) in &self.samples {
            out.extend(set.members(space, box_resolution)?);
        }
        Ok(out)
    }
}

pub fn segment(space: &MetricSpace, x: &Point, y: &Point, t_grid: &[Scalar]) -> Result<Segment> {
    let mut samples = Vec::with_capacity(t_grid.len());
    for t in t_grid {
        samples.push((t.clone(), midpoint_set(space, x, y, t, MidConvention::FromX)?));
    }
    Ok(Segment { x: space.normalize(x)?, y: space.normalize(y)?, samples })
}

/// `C(A, y, t)`: the union of `c(x, y, t)` over `x` in `A`. Boxes are
/// represented by a `resolution` grid of their points.
pub fn lifted_union(space: &MetricSpace, a: &SetRep, y: &Point, t: &Scalar, conv: MidConvention) -> Result<SetRep> {
    lifted_union_with(space, a, y, t, conv, DEFAULT_RESOLUTION)
}

pub fn lifted_union_with(
    space: &MetricSpace,
    a: &SetRep,
    y: &Point,
    t: &Scalar,
    conv: MidConvention,
    resolution: usize,
) -> Result<SetRep> {
    let t = check_t(space, t)?;
    let y = space.normalize(y)?;
    let reps = match a {
        SetRep::Singleton(p) => vec![p.clone()],
        SetRep::Finite(ps) => ps.clone(),
        SetRep::Box(b) => b.grid(resolution),
        SetRep::Sampled(_) => {
            return Err(Error::Precondition("lifted_union needs a finite set or a box".into()))
        }
    };
    if reps.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut pieces = Vec::with_capacity(reps.len());
    let mut sets = Vec::with_capacity(reps.len());
    for x in &reps {
        let x = space.normalize(x)?;
        let set = if x == y {
            SetRep::Singleton(y.clone())
        } else {
            midpoint_set_with(space, &x, &y, &t, conv, resolution)?
        };
        let d = space.distance_unchecked(&x, &y);
        let (rx, ry) = conv.radii(&d, &t);
        pieces.push(vec![Ball::new(x, rx), Ball::new(y.clone(), ry)]);
        sets.push(set);
    }
    if sets.len() == 1 {
        return Ok(sets.pop().expect("one set"));
    }
    if !matches!(a, SetRep::Box(_)) && sets.iter().all(|s| matches!(s, SetRep::Singleton(_))) {
        let mut pts: Vec<Point> = sets
            .into_iter()
            .map(|s| match s {
                SetRep::Singleton(p) => p,
                _ => unreachable!(),
            })
            .collect();
        pts.sort_by(|p, q| p.lex_cmp(q));
        pts.dedup();
        return SetRep::finite(pts);
    }
    let mut extremes = Vec::new();
    let mut complete = !matches!(a, SetRep::Box(_));
    for s in &sets {
        match s.hull_vertices() {
            Some(v) => extremes.extend(v),
            None => complete = false,
        }
    }
    extremes.sort_by(|p, q| p.lex_cmp(q));
    extremes.dedup();
    SampledSet::new(pieces, extremes, complete, resolution.max(crate::sampling::MIN_RESOLUTION)).map(SetRep::Sampled)
}

/// Diameter of a set representation, with the pair realizing it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diameter {
    pub value: Scalar,
    pub pair: (Point, Point),
    pub exact: bool,
    /// Grid resolution when the value is a sampled lower bound.
    pub resolution: Option<usize>,
}

pub fn diameter(space: &MetricSpace, a: &SetRep) -> Result<Diameter> {
    match a {
        SetRep::Singleton(p) => {
            let p = space.normalize(p)?;
            Ok(Diameter { value: space.constant(0, 1), pair: (p.clone(), p), exact: true, resolution: None })
        }
        SetRep::Box(b) if space.lp_exponent().is_some_and(Exponent::is_infinite) => {
            // widest axis, other coordinates at the center
            let widths = b.widths();
            let j = (0..widths.len()).fold(0, |best, i| if widths[i] > widths[best] { i } else { best });
            let center = b.center().scalars();
            let mut p = center.clone();
            let mut q = center;
            p[j] = b.lower().coord(j);
            q[j] = b.upper().coord(j);
            let (p, q) = (space.normalize(&Point::from_scalars(p))?, space.normalize(&Point::from_scalars(q))?);
            let value = space.distance_unchecked(b.lower(), b.upper());
            Ok(Diameter { value, pair: (p, q), exact: space.is_exact(), resolution: None })
        }
        _ => {
            let (pts, exact) = match a.hull_vertices() {
                Some(v) => (v, true),
                None => match a {
                    SetRep::Sampled(s) => (s.extreme_points.clone(), false),
                    _ => unreachable!(),
                },
            };
            let pts: Vec<Point> = pts.iter().map(|p| space.normalize(p)).collect::<Result<_>>()?;
            let mut best = (space.constant(0, 1), pts[0].clone(), pts[0].clone());
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    let d = space.distance_unchecked(&pts[i], &pts[j]);
                    if d > best.0 {
                        best = (d, pts[i].clone(), pts[j].clone());
                    }
                }
            }
            Ok(Diameter {
                value: best.0,
                pair: (best.1, best.2),
                exact: exact && space.is_exact(),
                resolution: if exact { None } else { a.resolution() },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn linf_box_from_x() {
        let s = MetricSpace::linf(3).exact().unwrap();
        let set = midpoint_set(&s, &Point::from_ints(&[0, 0, 0]), &Point::from_ints(&[2, 0, 0]), &q(1, 4), MidConvention::FromX)
            .unwrap();
        let expected =
            SetRep::boxed(Point::from_ratios(&[(1, 2), (-1, 2), (-1, 2)]), Point::from_ratios(&[(1, 2), (1, 2), (1, 2)]))
                .unwrap();
        assert_eq!(set, expected);
        assert_eq!(diameter(&s, &set).unwrap().value, q(1, 1));
    }

    #[test]
    fn conventions_agree_at_half() {
        for space in [MetricSpace::linf(3).exact().unwrap(), MetricSpace::l1(3).exact().unwrap()] {
            let x = Point::from_ints(&[0, 1, 0]);
            let y = Point::from_ints(&[2, -1, 3]);
            let a = midpoint_set(&space, &x, &y, &q(1, 2), MidConvention::FromX).unwrap();
            let b = midpoint_set(&space, &x, &y, &q(1, 2), MidConvention::FromY).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn l1_set_accepts_every_aij() {
        let s = MetricSpace::l1(4).exact().unwrap();
        let x = Point::from_ints(&[0, 0, 0, 0]);
        let y = Point::from_ratios(&[(1, 2); 4]);
        let set = midpoint_set(&s, &x, &y, &q(1, 2), MidConvention::FromY).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i == j {
                    continue;
                }
                let mut c = vec![(1, 4); 4];
                c[i] = (0, 1);
                c[j] = (1, 2);
                assert!(set.contains(&s, &Point::from_ratios(&c)).unwrap());
            }
        }
        assert!(!set.contains(&s, &Point::from_ratios(&[(1, 2), (1, 2), (1, 2), (0, 1)])).unwrap());
        let members = set.members(&s, 3).unwrap();
        assert!(members.len() > 6);
        for m in &members {
            assert_eq!(sphere_defect(&s, &x, &y, &q(1, 2), MidConvention::FromY, m).unwrap(), q(0, 1));
        }
    }

    #[test]
    fn integers_have_no_midpoint_between_neighbours() {
        let z = MetricSpace::integers(1, Exponent::Finite(1.0)).unwrap();
        let e = midpoint_set(&z, &Point::from_ints(&[0]), &Point::from_ints(&[1]), &q(1, 2), MidConvention::FromY);
        assert!(matches!(e, Err(Error::EmptyIntersection { .. })));
        let ok = midpoint_set(&z, &Point::from_ints(&[0]), &Point::from_ints(&[2]), &q(1, 2), MidConvention::FromY);
        assert_eq!(ok.unwrap(), SetRep::Singleton(Point::from_ints(&[1])));
    }

    #[test]
    fn unique_midpoint_refusals() {
        let x = Point::from_ints(&[0, 0]);
        let y = Point::from_ints(&[2, 0]);
        for s in [MetricSpace::l1(2), MetricSpace::linf(2)] {
            assert!(matches!(unique_midpoint(&s, &x, &y, &q(1, 4)), Err(Error::NoUniqueMidpoint { .. })));
        }
        let m = unique_midpoint(&MetricSpace::l2(2), &x, &y, &Scalar::float(0.25)).unwrap();
        assert_eq!(m, Point::float(vec![1.5, 0.0]));
        assert!(unique_midpoint(&MetricSpace::l2(2), &x, &y, &Scalar::float(1.0)).is_err());
    }

    #[test]
    fn lifted_union_of_two_points() {
        let s = MetricSpace::l2(2);
        let a = SetRep::finite(vec![Point::float(vec![0.0, 0.0]), Point::float(vec![2.0, 0.0])]).unwrap();
        let u = lifted_union(&s, &a, &Point::float(vec![0.0, 2.0]), &Scalar::float(0.5), MidConvention::FromY).unwrap();
        assert_eq!(u, SetRep::Finite(vec![Point::float(vec![0.0, 1.0]), Point::float(vec![1.0, 1.0])]));
    }

    #[test]
    fn corrupted_box_fails_sphere_check() {
        let s = MetricSpace::linf(3);
        let (x, y) = (Point::float(vec![0.0; 3]), Point::float(vec![2.0, 0.0, 0.0]));
        let t = Scalar::float(0.25);
        let good = midpoint_set(&s, &x, &y, &t, MidConvention::FromX).unwrap();
        assert!(sphere_check_set(&s, &x, &y, &t, MidConvention::FromX, &good, 3).unwrap().holds());
        let bad = SetRep::boxed(Point::float(vec![0.4, -0.6, -0.6]), Point::float(vec![0.6, 0.6, 0.6])).unwrap();
        let v = sphere_check_set(&s, &x, &y, &t, MidConvention::FromX, &bad, 3).unwrap();
        assert!(v.certificate().unwrap().verify().unwrap());
    }
}
