use std::cell::Cell;

use serde::{Deserialize, Serialize};

use super::mapping::{Domain, MappingSpec};
use crate::error::{Error, Result};
use crate::properties::{Certificate, Inputs, Property, PropertyVerdict, Tracker};
use crate::sampling::SamplePlan;
use crate::spaces::{MetricSpace, Point};

/// `(α, β)` of a generalized hybrid mapping: `α ∉ (0, 1)`, `β ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HybridParams {
    pub alpha: f64,
    pub beta: f64,
}

impl HybridParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha <= 0.0 || alpha >= 1.0) || !alpha.is_finite() {
            return Err(Error::ParameterOutOfRange(format!("alpha = {alpha} must lie outside (0, 1)")));
        }
        if !(0.0..=1.0).contains(&beta) {
            return Err(Error::ParameterOutOfRange(format!("beta = {beta} must lie in [0, 1]")));
        }
        Ok(HybridParams { alpha, beta })
    }

    /// `(1, 0)`: `d(Tx, Ty) <= d(x, y)`.
    pub fn nonexpansive() -> Self {
        HybridParams { alpha: 1.0, beta: 0.0 }
    }

    /// `(2, 1)`: `2 d(Tx,Ty)² <= d(x,Ty)² + d(Tx,y)²`.
    pub fn nonspreading() -> Self {
        HybridParams { alpha: 2.0, beta: 1.0 }
    }
}

/// `(α d(Tx,Ty)² + (1-α) d(x,Ty)², β d(Tx,y)² + (1-β) d(x,y)²)`.
pub fn hybrid_sides(
    space: &MetricSpace,
    spec: &MappingSpec,
    alpha: f64,
    beta: f64,
    x: &Point,
    y: &Point,
) -> Result<(f64, f64)> {
    spec.check(space)?;
    let (x, y) = (space.normalize(x)?.to_f64().into_owned(), space.normalize(y)?.to_f64().into_owned());
    let (tx, ty) = (spec.apply(&x), spec.apply(&y));
    let d = |a: &[f64], b: &[f64]| {
        let v = space.distance_f64(a, b);
        v * v
    };
    let lhs = alpha * d(&tx, &ty) + (1.0 - alpha) * d(&x, &ty);
    let rhs = beta * d(&tx, &y) + (1.0 - beta) * d(&x, &y);
    Ok((lhs, rhs))
}

/// Checks the generalized hybrid inequality on sampled pairs of the domain,
/// after confirming that every sample is mapped back into the domain.
pub fn verify_hybrid(
    space: &MetricSpace,
    spec: &MappingSpec,
    params: HybridParams,
    plan: &SamplePlan,
) -> Result<PropertyVerdict> {
    HybridParams::new(params.alpha, params.beta)?;
    spec.check(space)?;
    let mut s = plan.sampler(space, 60);
    let mut tracker = Tracker::new(Property::Hybrid, space, None, Some(plan.clone()));
    for _ in 0..plan.samples {
        let x = spec.domain.sample(space, &mut s);
        let y = spec.domain.sample(space, &mut s);
        for p in [&x, &y] {
            if !spec.domain.contains(space, &spec.apply(p)) {
                return Err(Error::NonSelfMap { point: Point::float(p.clone()).to_string() });
            }
        }
        let inputs = Inputs::Hybrid {
            mapping: spec.clone(),
            alpha: params.alpha,
            beta: params.beta,
            x: Point::float(x),
            y: Point::float(y),
        };
        let cert = Certificate::evaluate(space, None, inputs, plan.resolution)?;
        if let Some(v) = tracker.push(cert) {
            return Ok(v);
        }
    }
    Ok(tracker.finish())
}

/// `T x0, T² x0, …, T^N x0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Orbit {
    pub x0: Point,
    pub points: Vec<Point>,
    /// `max_n d(x0, Tⁿ x0)` over the computed points.
    pub max_excursion: f64,
    pub rmax: f64,
    pub bounded: bool,
    /// Step at which the excursion first exceeded `rmax`.
    pub unbounded_at: Option<usize>,
}

impl Orbit {
    /// `max_n d(center, Tⁿ x0)`.
    pub fn radius_about(&self, space: &MetricSpace, center: &Point) -> f64 {
        let c = center.to_f64();
        self.points.iter().map(|p| space.distance_f64(&c, &p.to_f64())).fold(0.0, f64::max)
    }

    pub fn tail(&self, window: usize) -> &[Point] {
        &self.points[self.points.len().saturating_sub(window)..]
    }
}

/// Iterates `T` from `x0`, stopping early once the orbit leaves `B[x0, rmax]`.
pub fn orbit(space: &MetricSpace, spec: &MappingSpec, x0: &Point, n: usize, rmax: f64) -> Result<Orbit> {
    spec.check(space)?;
    let start = space.normalize(x0)?.to_f64().into_owned();
    if !spec.domain.contains(space, &start) {
        return Err(Error::Precondition(format!("x0 = {x0} is outside the domain")));
    }
    let mut points = Vec::with_capacity(n);
    let mut cur = start.clone();
    let mut max_excursion = 0.0f64;
    let mut unbounded_at = None;
    for step in 1..=n {
        cur = spec.apply(&cur);
        if !spec.domain.contains(space, &cur) {
            return Err(Error::DomainEscape { step });
        }
        max_excursion = max_excursion.max(space.distance_f64(&start, &cur));
        points.push(Point::float(cur.clone()));
        if max_excursion > rmax {
            unbounded_at = Some(step);
            break;
        }
    }
    Ok(Orbit {
        x0: Point::float(start),
        points,
        max_excursion,
        rmax,
        bounded: unbounded_at.is_none(),
        unbounded_at,
    })
}

/// `f(y) = max over the last W orbit points p of d(p, a)`, with `a` the
/// point halfway from `p` to `y`: a tail-window surrogate for
/// `limsup_n d(Tⁿx, a_n)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticFunctional {
    pub orbit_len: usize,
    pub window: usize,
    tail: Vec<Vec<f64>>,
}

impl AsymptoticFunctional {
    pub fn new(orbit: &Orbit, window: usize) -> Result<Self> {
        if window == 0 || window > orbit.points.len() {
            return Err(Error::WindowTooLong { window, len: orbit.points.len() });
        }
        Ok(AsymptoticFunctional {
            orbit_len: orbit.points.len(),
            window,
            tail: orbit.tail(window).iter().map(|p| p.to_f64().into_owned()).collect(),
        })
    }

    pub fn eval(&self, space: &MetricSpace, y: &[f64]) -> f64 {
        self.tail
            .iter()
            .map(|p| {
                let a: Vec<f64> = p.iter().zip(y).map(|(pi, yi)| pi + 0.5 * (yi - pi)).collect();
                space.distance_f64(p, &a)
            })
            .fold(0.0, f64::max)
    }

    pub fn tail(&self) -> &[Vec<f64>] {
        &self.tail
    }
}

/// `f(y)` for a point `y`.
pub fn asymptotic_center(space: &MetricSpace, f: &AsymptoticFunctional, y: &Point) -> Result<f64> {
    Ok(f.eval(space, &space.normalize(y)?.to_f64()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub orbit_n: usize,
    pub window: usize,
    pub tol: f64,
    /// Maximum number of evaluations of the functional.
    pub budget: usize,
    pub rmax: f64,
    /// Samples for the hybrid-inequality check.
    pub plan: SamplePlan,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { orbit_n: 256, window: 32, tol: 1e-6, budget: 200_000, rmax: 100.0, plan: SamplePlan::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixedPointResult {
    pub u0: Point,
    /// `d(T u0, u0)`.
    pub residual: f64,
    pub f_value: f64,
    /// `f(T u0)`, which should not exceed `f(u0)`.
    pub f_of_image: f64,
    pub evaluations: usize,
    pub orbit_excursion: f64,
    pub orbit_radius_about_u0: f64,
    pub window: usize,
    pub orbit_n: usize,
    pub hybrid: PropertyVerdict,
}

/// Minimizes the asymptotic functional by pattern search and returns the
/// minimizer, which is a fixed point when the hybrid inequality holds.
pub fn find_fixed_point(
    space: &MetricSpace,
    spec: &MappingSpec,
    params: HybridParams,
    x0: &Point,
    cfg: &SolverConfig,
) -> Result<FixedPointResult> {
    let dim = spec.check(space)?;
    let hybrid = verify_hybrid(space, spec, params, &cfg.plan)?;
    if let Some(c) = hybrid.certificate() {
        return Err(Error::NotHybrid {
            alpha: params.alpha,
            beta: params.beta,
            detail: match &c.inputs {
                Inputs::Hybrid { x, y, .. } => format!("lhs {} > rhs {} at x = {x}, y = {y}", c.lhs, c.rhs),
                _ => format!("lhs {} > rhs {}", c.lhs, c.rhs),
            },
        });
    }
    let orb = orbit(space, spec, x0, cfg.orbit_n, cfg.rmax)?;
    if !orb.bounded {
        return Err(Error::Unbounded {
            excursion: orb.max_excursion,
            rmax: cfg.rmax,
            step: orb.unbounded_at.unwrap_or(orb.points.len()),
        });
    }
    let f = AsymptoticFunctional::new(&orb, cfg.window)?;
    let (lo, hi) = search_box(space, &spec.domain, &orb, &f, dim);
    let evals = Cell::new(0usize);
    let eval = |y: &[f64]| {
        evals.set(evals.get() + 1);
        f.eval(space, y)
    };

    // coarse grid
    let per_axis = if dim <= 2 { 9 } else if dim <= 4 { 5 } else { 3 };
    let mut best = spec.domain.project(space, &lo);
    let mut best_f = eval(&best);
    let mut idx = vec![0usize; dim];
    loop {
        let cand: Vec<f64> = (0..dim)
            .map(|i| lo[i] + (hi[i] - lo[i]) * idx[i] as f64 / (per_axis - 1) as f64)
            .collect();
        let cand = spec.domain.project(space, &cand);
        let v = eval(&cand);
        if v < best_f {
            best = cand;
            best_f = v;
        }
        let mut k = 0;
        while k < dim {
            idx[k] += 1;
            if idx[k] < per_axis {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == dim {
            break;
        }
    }

    // pattern search with step halving
    let dirs = directions(dim);
    let width = lo.iter().zip(&hi).map(|(l, h)| h - l).fold(0.0, f64::max).max(1e-3);
    let mut step = width / (per_axis - 1) as f64;
    let floor = width * 1e-15;
    while step > floor && evals.get() < cfg.budget {
        let mut moved = false;
        for d in &dirs {
            let cand: Vec<f64> = best.iter().zip(d).map(|(b, di)| b + step * di).collect();
            let cand = spec.domain.project(space, &cand);
            let v = eval(&cand);
            if v < best_f {
                best = cand;
                best_f = v;
                moved = true;
                break;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }

    // f(Tu) <= f(u) along the hybrid inequality; take the image when it is no worse
    let image = spec.apply(&best);
    let image_f = eval(&image);
    if image_f <= best_f && spec.domain.contains(space, &image) {
        best = image;
        best_f = image_f;
    }
    let image = spec.apply(&best);
    let residual = space.distance_f64(&image, &best);
    let f_of_image = f.eval(space, &image);
    if residual > cfg.tol {
        return Err(Error::BudgetExhausted { residual, tol: cfg.tol });
    }
    let u0 = Point::float(best);
    Ok(FixedPointResult {
        orbit_radius_about_u0: orb.radius_about(space, &u0),
        u0,
        residual,
        f_value: best_f,
        f_of_image,
        evaluations: evals.get(),
        orbit_excursion: orb.max_excursion,
        window: cfg.window,
        orbit_n: cfg.orbit_n,
        hybrid,
    })
}

/// Bounding box of the domain, or of `x0` and the orbit tail padded by the
/// tail's spread when the domain is unbounded.
fn search_box(
    space: &MetricSpace,
    domain: &Domain,
    orb: &Orbit,
    f: &AsymptoticFunctional,
    dim: usize,
) -> (Vec<f64>, Vec<f64>) {
    if let Some(b) = domain.bounds() {
        return b;
    }
    let mut lo = orb.x0.to_f64().into_owned();
    let mut hi = lo.clone();
    for p in f.tail() {
        for i in 0..dim {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    let pad = 0.1 * lo.iter().zip(&hi).map(|(l, h)| h - l).fold(0.0, f64::max) + 1e-3;
    let _ = space;
    (lo.iter().map(|v| v - pad).collect(), hi.iter().map(|v| v + pad).collect())
}

/// `{-1, 0, 1}^n \ {0}` for small `n`, the `2n` coordinate directions otherwise.
fn directions(dim: usize) -> Vec<Vec<f64>> {
    if dim > 4 {
        let mut out = Vec::new();
        for i in 0..dim {
            for s in [1.0, -1.0] {
                let mut d = vec![0.0; dim];
                d[i] = s;
                out.push(d);
            }
        }
        return out;
    }
    let mut out = Vec::new();
    let total = 3usize.pow(dim as u32);
    for code in 0..total {
        let mut c = code;
        let d: Vec<f64> = (0..dim)
            .map(|_| {
                let v = (c % 3) as f64 - 1.0;
                c /= 3;
                v
            })
            .collect();
        if d.iter().any(|v| *v != 0.0) {
            out.push(d);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoercivityReport {
    /// `(k, f(u + k·direction))` for `k = 1, 2, 4, …, 1024`.
    pub values: Vec<(f64, f64)>,
    /// `max_n d(Tⁿx, u)` over the tail: the orbit-based scale `f` must exceed.
    pub bound: f64,
    pub monotone: bool,
    pub holds: bool,
}

/// Evaluates `f` along the ray `u + k·direction`.
pub fn coercivity_probe(
    space: &MetricSpace,
    f: &AsymptoticFunctional,
    u: &Point,
    direction: &Point,
) -> Result<CoercivityReport> {
    let u = space.normalize(u)?.to_f64().into_owned();
    let dir = space.normalize(direction)?.to_f64().into_owned();
    let values: Vec<(f64, f64)> = (0..=10)
        .map(|e| {
            let k = (1u32 << e) as f64;
            let y: Vec<f64> = u.iter().zip(&dir).map(|(a, b)| a + k * b).collect();
            (k, f.eval(space, &y))
        })
        .collect();
    let bound = f.tail().iter().map(|p| space.distance_f64(p, &u)).fold(0.0, f64::max);
    let monotone = values.windows(2).all(|w| w[1].1 >= w[0].1 - space.tau());
    let last = values.last().expect("eleven values").1;
    Ok(CoercivityReport { holds: monotone && last > bound, values, bound, monotone })
}
