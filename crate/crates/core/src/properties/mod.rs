//! Verdict engines for the convexity properties.
//!
//! Every check draws seeded samples, turns each one into a [`Certificate`]
//! (inputs plus both sides of the inequality under test) and folds them:
//! the first violation becomes `Fails`, otherwise `Holds` records the sample
//! count and the largest slack. Calls that are ill-posed for the space come
//! back as `Refused`.
//!
//! | property | claim per sample |
//! |---|---|
//! | MengerConvex | `c(x,y,t)` is nonempty and lies on both spheres |
//! | A | `c(x,y,t)` is a single point |
//! | B | `d(m(x,y,t), m(z,y,t)) <= t·d(x,z)` |
//! | Bprime | `H(c(x,y,t), c(z,y,t)) <= t·d(x,z)` |
//! | Bdoubleprime | `H(C(A,y,t), C(B,y,t)) <= t·H(A,B)` |
//! | C | `c(u,v,s) ⊆ [x,y]` for `u, v` in `[x,y]` |

mod fixtures;
mod verdict;

use serde::{Deserialize, Serialize};

pub use fixtures::{hp_member, reproduce, tent, Claim, FixtureReport, FIXTURES};
pub use verdict::{Certificate, Inputs, Outcome, Property, PropertyVerdict, Relation, Tracker};

use crate::convexsets::{
    check_t, diameter, lifted_union_with, midpoint_set, midpoint_set_with, sphere_defect, MidConvention, SetRep,
};
use crate::error::{Error, Result};
use crate::hausdorff::hausdorff_with;
use crate::sampling::SamplePlan;
use crate::spaces::{MetricSpace, Point, Scalar};

pub(crate) fn property_of(inputs: &Inputs) -> Property {
    match inputs {
        Inputs::Menger { .. } => Property::MengerConvex,
        Inputs::Sphere { .. } => Property::SphereEquivalence,
        Inputs::A { .. } => Property::A,
        Inputs::B { .. } => Property::B,
        Inputs::Bprime { .. } => Property::Bprime,
        Inputs::Bdoubleprime { .. } => Property::Bdoubleprime,
        Inputs::C { .. } => Property::C,
        Inputs::Betweenness { .. } => Property::Betweenness,
        Inputs::Homogeneity { .. } => Property::Homogeneity,
        Inputs::DiameterStrict { .. } => Property::DiameterStrict,
        Inputs::Hybrid { .. } => Property::Hybrid,
    }
}

fn require_member(
    space: &MetricSpace,
    x: &Point,
    y: &Point,
    t: &Scalar,
    conv: MidConvention,
    p: &Point,
    name: &str,
) -> Result<()> {
    let defect = sphere_defect(space, x, y, t, conv, p)?;
    if !space.approx_eq(&defect, &defect.zero_like()) {
        return Err(Error::Precondition(format!("{name} = {p} is not in c(x, y, {t}) (defect {defect})")));
    }
    Ok(())
}

/// Affine point of the midpoint set under `conv`; needs unique midpoints.
fn affine_midpoint(space: &MetricSpace, x: &Point, y: &Point, t: &Scalar, conv: MidConvention) -> Result<Point> {
    if !space.has_unique_midpoints() {
        return Err(Error::NoUniqueMidpoint { op: "property (B)", metric: space.metric().to_string() });
    }
    let t = check_t(space, t)?;
    let (x, y) = (space.normalize(x)?, space.normalize(y)?);
    Ok(x.toward(&y, &conv.fraction_from_x(&t)))
}

fn ratio(num: Scalar, den: Scalar, what: &str) -> Result<Scalar> {
    if den.is_zero() {
        return Err(Error::Precondition(format!("{what} is zero")));
    }
    Ok(num / den)
}

/// Emptiness gap of `c(x,y,t)`: 0 when nonempty; on a lattice, the least
/// amount by which a lattice point misses one of the two balls.
fn emptiness_gap(space: &MetricSpace, x: &Point, y: &Point, t: &Scalar, conv: MidConvention) -> Result<Scalar> {
    match midpoint_set(space, x, y, t, conv) {
        Ok(_) => Ok(space.constant(0, 1)),
        Err(Error::EmptyIntersection { .. }) if space.is_integer_lattice() => {
            use num_traits::ToPrimitive;
            let d = space.distance(x, y)?;
            let (rx, ry) = conv.radii(&d, t);
            let reach = rx.as_exact().expect("exact").floor().to_integer().to_i64().unwrap_or(0);
            let base: Vec<i64> = x
                .scalars()
                .iter()
                .map(|c| c.as_exact().expect("exact").to_integer().to_i64().unwrap_or(0))
                .collect();
            let mut best: Option<Scalar> = None;
            let mut offset = vec![-reach; base.len()];
            loop {
                let z: Vec<i64> = base.iter().zip(&offset).map(|(b, o)| b + o).collect();
                let z = Point::from_ints(&z);
                let gap = (space.distance(x, &z)? - &rx).max(space.distance(y, &z)? - &ry);
                best = Some(match best {
                    Some(b) => b.min(gap),
                    None => gap,
                });
                let mut k = 0;
                while k < offset.len() {
                    offset[k] += 1;
                    if offset[k] <= reach {
                        break;
                    }
                    offset[k] = -reach;
                    k += 1;
                }
                if k == offset.len() {
                    break;
                }
            }
            Ok(best.expect("x itself is a candidate"))
        }
        Err(e) => Err(e),
    }
}

/// Both sides and the relation for one instance.
pub(crate) fn evaluate(
    space: &MetricSpace,
    conv: Option<MidConvention>,
    inputs: &Inputs,
    resolution: usize,
) -> Result<(Scalar, Scalar, Relation)> {
    let c = conv.unwrap_or_default();
    let zero = space.constant(0, 1);
    match inputs {
        Inputs::Menger { x, y, t } => Ok((emptiness_gap(space, x, y, t, c)?, zero, Relation::Le)),
        Inputs::Sphere { x, y, t, z } => Ok((sphere_defect(space, x, y, t, c, z)?, zero, Relation::Eq)),
        Inputs::A { x, y, t, p, q } => {
            require_member(space, x, y, t, c, p, "p")?;
            require_member(space, x, y, t, c, q, "q")?;
            Ok((space.distance(p, q)?, zero, Relation::Le))
        }
        Inputs::B { x, y, z, t } => {
            let mx = affine_midpoint(space, x, y, t, c)?;
            let mz = affine_midpoint(space, z, y, t, c)?;
            let lhs = ratio(space.distance(&mx, &mz)?, space.distance(x, z)?, "d(x, z)")?;
            Ok((lhs, space.normalize_scalar(t)?, Relation::Le))
        }
        Inputs::Bprime { x, y, z, t } => {
            let cx = midpoint_set_with(space, x, y, t, c, resolution)?;
            let cz = midpoint_set_with(space, z, y, t, c, resolution)?;
            let h = hausdorff_with(space, &cx, &cz, resolution)?;
            let lhs = ratio(h.value, space.distance(x, z)?, "d(x, z)")?;
            Ok((lhs, space.normalize_scalar(t)?, Relation::Le))
        }
        Inputs::Bdoubleprime { a, b, y, t } => {
            let (sa, sb) = (SetRep::finite(a.clone())?, SetRep::finite(b.clone())?);
            let ca = lifted_union_with(space, &sa, y, t, c, resolution)?;
            let cb = lifted_union_with(space, &sb, y, t, c, resolution)?;
            let top = hausdorff_with(space, &ca, &cb, resolution)?;
            let bottom = hausdorff_with(space, &sa, &sb, resolution)?;
            Ok((ratio(top.value, bottom.value, "H(A, B)")?, space.normalize_scalar(t)?, Relation::Le))
        }
        Inputs::C { x, y, u, v, s, w } => {
            let dxy = space.distance(x, y)?;
            for (name, p) in [("u", u), ("v", v)] {
                let defect = space.distance(x, p)? + space.distance(p, y)? - &dxy;
                if !space.approx_eq(&defect, &zero) {
                    return Err(Error::Precondition(format!("{name} = {p} is not on the segment [x, y]")));
                }
            }
            require_member(space, u, v, s, c, w, "w")?;
            Ok((space.distance(x, w)? + space.distance(w, y)?, dxy, Relation::Le))
        }
        Inputs::Betweenness { x, y, t1, t2, p1, p2 } => {
            if !(t1 < t2) {
                return Err(Error::Precondition(format!("t1 = {t1} must be below t2 = {t2}")));
            }
            require_member(space, x, y, t1, c, p1, "p1")?;
            require_member(space, x, y, t2, c, p2, "p2")?;
            let lhs = space.distance(p1, p2)? + space.distance(p2, y)?;
            Ok((lhs, space.distance(p1, y)?, Relation::Eq))
        }
        Inputs::Homogeneity { alpha, x } => {
            let alpha = space.normalize_scalar(alpha)?;
            let x = space.normalize(x)?;
            let origin = Point::zeros(x.dim(), space.is_exact());
            let lhs = space.distance(&origin, &x.scale(&alpha))?;
            let rhs = alpha.abs() * space.distance(&origin, &x)?;
            Ok((lhs, rhs, Relation::Eq))
        }
        Inputs::DiameterStrict { a, c: inner } => {
            let SetRep::Box(outer) = a else {
                return Err(Error::Precondition("the outer set must be a box with nonempty interior".into()));
            };
            let lo = outer.lower().scalars();
            let hi = outer.upper().scalars();
            if lo.iter().zip(&hi).any(|(l, h)| !space.lt(l, h)) {
                return Err(Error::Precondition("the outer box has empty interior".into()));
            }
            let pts = match inner.hull_vertices() {
                Some(v) => v,
                None => inner.members(space, resolution)?,
            };
            for p in &pts {
                for (i, v) in p.scalars().iter().enumerate() {
                    if !(space.lt(&lo[i], v) && space.lt(v, &hi[i])) {
                        return Err(Error::Precondition(format!("{p} is not in the interior of the outer box")));
                    }
                }
            }
            let k = ratio(diameter(space, inner)?.value, diameter(space, a)?.value, "δ(A)")?;
            Ok((k, space.constant(1, 1), Relation::Lt))
        }
        Inputs::Hybrid { mapping, alpha, beta, x, y } => {
            let (lhs, rhs) = crate::fixedpoint::hybrid_sides(space, mapping, *alpha, *beta, x, y)?;
            Ok((Scalar::Float(lhs), Scalar::Float(rhs), Relation::Le))
        }
    }
}

fn single(space: &MetricSpace, conv: Option<MidConvention>, inputs: Inputs) -> Result<PropertyVerdict> {
    let cert = Certificate::evaluate(space, conv, inputs, crate::sampling::DEFAULT_RESOLUTION)?;
    let mut tracker = Tracker::new(cert.property, space, conv, None);
    Ok(tracker.push(cert).unwrap_or_else(|| tracker.finish()))
}

/// Turns refusals into `Refused` verdicts and leaves other errors alone.
fn refusal(property: Property, space: &MetricSpace, conv: Option<MidConvention>, e: Error) -> Result<PropertyVerdict> {
    match e {
        Error::NoUniqueMidpoint { .. } | Error::UnsupportedMetric { .. } | Error::ExactUnsupported(_) => {
            Ok(PropertyVerdict::refused(property, space, conv, e.to_string()))
        }
        Error::EmptyIntersection { .. } if property != Property::MengerConvex => Ok(PropertyVerdict::refused(
            property,
            space,
            conv,
            format!("{e}; the space is not Menger convex"),
        )),
        e => Err(e),
    }
}

/// Nonemptiness of sampled midpoint sets, each checked against both sphere
/// equations.
pub fn check_menger_convex(space: &MetricSpace, plan: &SamplePlan) -> Result<PropertyVerdict> {
    let conv = MidConvention::FromY;
    let mut s = plan.sampler(space, 11);
    let mut tracker = Tracker::new(Property::MengerConvex, space, Some(conv), Some(plan.clone()));
    for _ in 0..plan.samples {
        let x = s.point();
        let y = s.point_distinct_from(&x);
        let t = s.t();
        let cert = match Certificate::evaluate(space, Some(conv), Inputs::Menger { x: x.clone(), y: y.clone(), t: t.clone() }, plan.resolution) {
            Ok(c) => c,
            Err(e) => return refusal(Property::MengerConvex, space, Some(conv), e),
        };
        let empty = cert.violated();
        if let Some(v) = tracker.push(cert) {
            return Ok(v);
        }
        if !empty {
            let set = midpoint_set_with(space, &x, &y, &t, conv, plan.resolution)?;
            let sphere = crate::convexsets::sphere_check_set(space, &x, &y, &t, conv, &set, 2)?;
            if sphere.fails() {
                return Ok(PropertyVerdict { property: Property::MengerConvex, plan: Some(plan.clone()), ..sphere });
            }
        }
    }
    Ok(tracker.finish())
}

/// Menger convexity at one configuration.
pub fn menger_instance(space: &MetricSpace, x: &Point, y: &Point, t: &Scalar) -> Result<PropertyVerdict> {
    single(space, Some(MidConvention::FromY), Inputs::Menger { x: x.clone(), y: y.clone(), t: t.clone() })
}

/// Sampled check of property A, B, Bprime, Bdoubleprime or C.
pub fn check_property(
    space: &MetricSpace,
    which: Property,
    conv: MidConvention,
    plan: &SamplePlan,
) -> Result<PropertyVerdict> {
    let run = || -> Result<PropertyVerdict> {
        let mut s = plan.sampler(space, 20 + which as u64);
        let mut tracker = Tracker::new(which, space, Some(conv), Some(plan.clone()));
        let push = |tracker: &mut Tracker, inputs: Inputs| -> Result<Option<PropertyVerdict>> {
            let cert = Certificate::evaluate(space, Some(conv), inputs, plan.resolution)?;
            Ok(tracker.push(cert))
        };
        for _ in 0..plan.samples {
            let verdict = match which {
                Property::A => {
                    let x = s.point();
                    let y = s.point_distinct_from(&x);
                    let t = s.t();
                    let set = midpoint_set_with(space, &x, &y, &t, conv, plan.resolution)?;
                    let (p, q) = diameter(space, &set)?.pair;
                    push(&mut tracker, Inputs::A { x, y, t, p, q })?
                }
                Property::B | Property::Bprime => {
                    let x = s.point();
                    let y = s.point();
                    let z = s.point_distinct_from(&x);
                    let t = s.t();
                    if which == Property::Bprime && (x == y || z == y) {
                        continue;
                    }
                    let inputs = if which == Property::B {
                        Inputs::B { x, y, z, t }
                    } else {
                        Inputs::Bprime { x, y, z, t }
                    };
                    push(&mut tracker, inputs)?
                }
                Property::Bdoubleprime => {
                    let na = 1 + s.index(8);
                    let nb = 1 + s.index(8);
                    let a: Vec<Point> = (0..na).map(|_| s.point()).collect();
                    let b: Vec<Point> = (0..nb).map(|_| s.point()).collect();
                    let y = s.point();
                    let t = s.t();
                    let (sa, sb) = (SetRep::finite(a.clone())?, SetRep::finite(b.clone())?);
                    if hausdorff_with(space, &sa, &sb, plan.resolution)?.value.is_zero() {
                        continue;
                    }
                    push(&mut tracker, Inputs::Bdoubleprime { a, b, y, t })?
                }
                Property::C => {
                    let x = s.point();
                    let y = s.point_distinct_from(&x);
                    let (t1, t2) = (s.t(), s.t());
                    let m1 = midpoint_set_with(space, &x, &y, &t1, MidConvention::FromX, plan.resolution)?
                        .members(space, 2)?;
                    let m2 = midpoint_set_with(space, &x, &y, &t2, MidConvention::FromX, plan.resolution)?
                        .members(space, 2)?;
                    let u = m1[s.index(m1.len())].clone();
                    let v = m2[s.index(m2.len())].clone();
                    if u == v {
                        continue;
                    }
                    let sp = s.t();
                    let ws = midpoint_set_with(space, &u, &v, &sp, conv, plan.resolution)?.members(space, 3)?;
                    let mut failed = None;
                    for w in ws {
                        let inputs =
                            Inputs::C { x: x.clone(), y: y.clone(), u: u.clone(), v: v.clone(), s: sp.clone(), w };
                        if let Some(f) = push(&mut tracker, inputs)? {
                            failed = Some(f);
                            break;
                        }
                    }
                    failed
                }
                other => {
                    return Err(Error::Precondition(format!("check_property does not handle {}", other.name())))
                }
            };
            if let Some(v) = verdict {
                return Ok(v);
            }
        }
        Ok(tracker.finish())
    };
    run().or_else(|e| refusal(which, space, Some(conv), e))
}

/// Property A at an explicit configuration with two candidate members.
pub fn property_a_instance(
    space: &MetricSpace,
    x: &Point,
    y: &Point,
    t: &Scalar,
    conv: MidConvention,
    p: &Point,
    q: &Point,
) -> Result<PropertyVerdict> {
    single(space, Some(conv), Inputs::A { x: x.clone(), y: y.clone(), t: t.clone(), p: p.clone(), q: q.clone() })
}

/// Property B at an explicit configuration.
pub fn property_b_instance(
    space: &MetricSpace,
    x: &Point,
    y: &Point,
    z: &Point,
    t: &Scalar,
    conv: MidConvention,
) -> Result<PropertyVerdict> {
    let inputs = Inputs::B { x: x.clone(), y: y.clone(), z: z.clone(), t: t.clone() };
    single(space, Some(conv), inputs).or_else(|e| refusal(Property::B, space, Some(conv), e))
}

/// Property Bprime at an explicit configuration.
pub fn property_bprime_instance(
    space: &MetricSpace,
    x: &Point,
    y: &Point,
    z: &Point,
    t: &Scalar,
    conv: MidConvention,
) -> Result<PropertyVerdict> {
    single(space, Some(conv), Inputs::Bprime { x: x.clone(), y: y.clone(), z: z.clone(), t: t.clone() })
}

/// Property C at an explicit configuration: every member `w` of `c(u, v, s)`
/// is tested for membership in `[x, y]`.
pub fn property_c_instance(
    space: &MetricSpace,
    x: &Point,
    y: &Point,
    u: &Point,
    v: &Point,
    s: &Scalar,
    conv: MidConvention,
) -> Result<PropertyVerdict> {
    let mut tracker = Tracker::new(Property::C, space, Some(conv), None);
    for w in midpoint_set(space, u, v, s, conv)?.members(space, 3)? {
        let inputs = Inputs::C { x: x.clone(), y: y.clone(), u: u.clone(), v: v.clone(), s: s.clone(), w };
        let cert = Certificate::evaluate(space, Some(conv), inputs, crate::sampling::DEFAULT_RESOLUTION)?;
        if let Some(f) = tracker.push(cert) {
            return Ok(f);
        }
    }
    Ok(tracker.finish())
}

/// Whether `p2` lies between `p1` and `y`, for `p1 ∈ c(x,y,t1)`,
/// `p2 ∈ c(x,y,t2)`, `t1 < t2`, with `t` measured from `x`.
pub fn check_betweenness(
    space: &MetricSpace,
    x: &Point,
    y: &Point,
    t1: &Scalar,
    t2: &Scalar,
    p1: &Point,
    p2: &Point,
) -> Result<PropertyVerdict> {
    let inputs = Inputs::Betweenness {
        x: x.clone(),
        y: y.clone(),
        t1: t1.clone(),
        t2: t2.clone(),
        p1: p1.clone(),
        p2: p2.clone(),
    };
    single(space, Some(MidConvention::FromX), inputs)
}

/// `d(0, αx) = |α|·d(0, x)` over sampled `(α, x)`, starting with `α = 0`
/// and `x = 0`.
pub fn check_homogeneity(space: &MetricSpace, plan: &SamplePlan) -> Result<PropertyVerdict> {
    let mut s = plan.sampler(space, 40);
    let mut tracker = Tracker::new(Property::Homogeneity, space, None, Some(plan.clone()));
    let dim = space.dim().ok_or(Error::UnsupportedMetric { op: "homogeneity", metric: space.metric().to_string() })?;
    for i in 0..plan.samples {
        let (alpha, x) = match i {
            0 => (space.constant(0, 1), s.point()),
            1 => (s.coordinate(), Point::zeros(dim, space.is_exact())),
            _ => {
                let a = if space.is_exact() { s.coordinate() * Scalar::int(2) } else { Scalar::Float(s.uniform(-4.0, 4.0)) };
                (a, s.point())
            }
        };
        let cert = Certificate::evaluate(space, None, Inputs::Homogeneity { alpha, x }, plan.resolution)?;
        if let Some(v) = tracker.push(cert) {
            return Ok(v);
        }
    }
    Ok(tracker.finish())
}

/// Runs the sampled engine for `which`. Properties that need caller-chosen
/// inputs (sets, mappings, explicit points) come back refused.
pub fn check(space: &MetricSpace, which: Property, conv: MidConvention, plan: &SamplePlan) -> Result<PropertyVerdict> {
    match which {
        Property::MengerConvex => check_menger_convex(space, plan),
        Property::A | Property::B | Property::Bprime | Property::Bdoubleprime | Property::C => {
            check_property(space, which, conv, plan)
        }
        Property::Homogeneity => check_homogeneity(space, plan),
        _ => Ok(PropertyVerdict::refused(
            which,
            space,
            Some(conv),
            format!("{} has no sampled engine; use its instance entry point", which.name()),
        )),
    }
}

pub fn homogeneity_instance(space: &MetricSpace, alpha: &Scalar, x: &Point) -> Result<PropertyVerdict> {
    single(space, None, Inputs::Homogeneity { alpha: alpha.clone(), x: x.clone() })
}

/// `k̂ = δ(C) / δ(A)` for `C` inside the interior of the box `A`; holds when
/// `k̂ < 1`. The extremal certificate of a `Holds` verdict carries `k̂` as lhs.
pub fn check_diameter_strict(space: &MetricSpace, a: &SetRep, c: &SetRep) -> Result<PropertyVerdict> {
    single(space, None, Inputs::DiameterStrict { a: a.clone(), c: c.clone() })
}

/// One point of the empirical modulus of convexity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModulusEstimate {
    pub eps: f64,
    /// `1 - max d(z, m(x,y,1/2)) / r` over the sampled configurations.
    pub delta_hat: f64,
    pub samples: usize,
    /// `(x, y, z, r)` attaining the maximum ratio.
    pub witness: Option<(Point, Point, Point, f64)>,
}

/// Estimates `δ(ε)` by sampling `x, y` on a sphere `S[z, r]` with
/// `d(x, y) = rε` and maximizing `d(z, m(x, y, 1/2)) / r`.
pub fn estimate_uniform_modulus(space: &MetricSpace, eps_grid: &[f64], plan: &SamplePlan) -> Result<Vec<ModulusEstimate>> {
    if !space.has_unique_midpoints() {
        return Err(Error::NoUniqueMidpoint { op: "estimate_uniform_modulus", metric: space.metric().to_string() });
    }
    let dim = space.dim().expect("vector carrier");
    let origin = vec![0.0; dim];
    let norm = |v: &[f64]| space.distance_f64(&origin, v);
    let mut out = Vec::with_capacity(eps_grid.len());
    for (k, &eps) in eps_grid.iter().enumerate() {
        if !(eps >= 0.0) {
            return Err(Error::ParameterOutOfRange(format!("eps = {eps}")));
        }
        if eps > 2.0 {
            out.push(ModulusEstimate { eps, delta_hat: 1.0, samples: 0, witness: None });
            continue;
        }
        let mut s = plan.sampler(space, 50 + k as u64);
        let mut best: Option<(f64, Vec<f64>, Vec<f64>, Vec<f64>, f64)> = None;
        for _ in 0..plan.samples {
            let z: Vec<f64> = s.point().to_f64().into_owned();
            let r = s.uniform(0.5, 2.0);
            let u = random_direction(&mut s, dim, &norm);
            let w = random_direction(&mut s, dim, &norm);
            let on_sphere = |v: &[f64]| -> Vec<f64> {
                let n = norm(v);
                z.iter().zip(v).map(|(zi, vi)| zi + r * vi / n).collect()
            };
            let x = on_sphere(&u);
            let target = r * eps;
            let gap = |v: &[f64]| space.distance_f64(&x, &on_sphere(v)) - target;
            let neg_u: Vec<f64> = u.iter().map(|v| -v).collect();
            let (from, to) = if gap(&w) >= 0.0 { (u.clone(), w.clone()) } else { (w.clone(), neg_u) };
            let blend = |s: f64| -> Vec<f64> { from.iter().zip(&to).map(|(a, b)| (1.0 - s) * a + s * b).collect() };
            let (mut lo, mut hi) = (0.0f64, 1.0f64);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if gap(&blend(mid)) >= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let y = on_sphere(&blend(hi));
            let m: Vec<f64> = x.iter().zip(&y).map(|(a, b)| 0.5 * (a + b)).collect();
            let ratio = space.distance_f64(&z, &m) / r;
            if best.as_ref().is_none_or(|b| ratio > b.0) {
                best = Some((ratio, x, y, z, r));
            }
        }
        let (ratio, x, y, z, r) = best.expect("at least one sample");
        out.push(ModulusEstimate {
            eps,
            delta_hat: 1.0 - ratio,
            samples: plan.samples,
            witness: Some((Point::float(x), Point::float(y), Point::float(z), r)),
        });
    }
    Ok(out)
}

fn random_direction(s: &mut crate::sampling::Sampler<'_>, dim: usize, norm: &dyn Fn(&[f64]) -> f64) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| s.uniform(-1.0, 1.0)).collect();
        let n = norm(&v);
        if n > 1e-3 {
            return v.into_iter().map(|c| c / n).collect();
        }
    }
}
