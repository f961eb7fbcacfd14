use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sampling::MIN_RESOLUTION;
use crate::spaces::{MetricSpace, Point, Scalar};

/// Closed ball `B[center, radius]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Point,
    pub radius: Scalar,
}

impl Ball {
    pub fn new(center: Point, radius: Scalar) -> Self {
        Ball { center, radius }
    }

    pub fn contains(&self, space: &MetricSpace, z: &Point) -> Result<bool> {
        Ok(space.le(&space.distance(&self.center, z)?, &self.radius))
    }

    /// How far `z` lies outside the ball (0 when inside).
    pub fn violation(&self, space: &MetricSpace, z: &Point) -> Result<Scalar> {
        let excess = space.distance(&self.center, z)? - &self.radius;
        Ok(excess.clone().max(excess.zero_like()))
    }
}

/// Axis-aligned box `[lower, upper]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoxSet {
    lower: Point,
    upper: Point,
}

impl BoxSet {
    pub fn new(lower: Point, upper: Point) -> Result<Self> {
        if lower.dim() != upper.dim() {
            return Err(Error::DimensionMismatch { expected: lower.dim(), found: upper.dim() });
        }
        if lower.scalars().iter().zip(upper.scalars()).any(|(l, u)| l > &u) {
            return Err(Error::InvalidPoint(format!("box lower {lower} exceeds upper {upper}")));
        }
        let (lower, upper) = if lower.is_exact() && upper.is_exact() {
            (lower, upper)
        } else {
            (lower.to_float(), upper.to_float())
        };
        Ok(BoxSet { lower, upper })
    }

    pub fn lower(&self) -> &Point {
        &self.lower
    }

    pub fn upper(&self) -> &Point {
        &self.upper
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    pub fn is_exact(&self) -> bool {
        self.lower.is_exact()
    }

    pub fn center(&self) -> Point {
        self.lower.toward(&self.upper, &exactness_of(&self.lower, Scalar::ratio(1, 2)))
    }

    pub fn widths(&self) -> Vec<Scalar> {
        self.upper.sub(&self.lower).scalars()
    }

    /// Distinct corners, in lexicographic order of the choice vector.
    pub fn corners(&self) -> Vec<Point> {
        self.grid(2)
    }

    /// `resolution` evenly spaced values per nondegenerate axis; degenerate
    /// axes contribute one value. Includes all corners when `resolution >= 2`.
    pub fn grid(&self, resolution: usize) -> Vec<Point> {
        let res = resolution.max(2);
        let lo = self.lower.scalars();
        let hi = self.upper.scalars();
        let axes: Vec<Vec<Scalar>> = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| {
                if l == h {
                    vec![l.clone()]
                } else {
                    let step = (h - l) / exactness_of(&self.lower, Scalar::int(res as i64 - 1));
                    (0..res)
                        .map(|k| if k + 1 == res { h.clone() } else { l + &step * Scalar::int(k as i64) })
                        .collect()
                }
            })
            .collect();
        let mut out = vec![Vec::with_capacity(axes.len())];
        for axis in &axes {
            let mut next = Vec::with_capacity(out.len() * axis.len());
            for prefix in &out {
                for v in axis {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(Point::from_scalars).collect()
    }

    pub fn contains(&self, space: &MetricSpace, z: &Point) -> bool {
        let zero = space.constant(0, 1);
        z.scalars().iter().zip(self.lower.scalars().iter().zip(self.upper.scalars())).all(|(v, (l, u))| {
            space.le(&(l - v).max(zero.clone()), &zero) && space.le(&(v - &u).max(zero.clone()), &zero)
        })
    }

    /// Nearest point of the box in every d_p metric: coordinatewise clamp.
    pub fn clamp(&self, z: &Point) -> Point {
        let lo = self.lower.scalars();
        let hi = self.upper.scalars();
        Point::from_scalars(
            z.scalars()
                .into_iter()
                .zip(lo.into_iter().zip(hi))
                .map(|(v, (l, h))| v.max(l).min(h))
                .collect(),
        )
    }
}

fn exactness_of(p: &Point, s: Scalar) -> Scalar {
    if p.is_exact() {
        s
    } else {
        s.to_float()
    }
}

/// A union of ball intersections, known through a membership oracle plus a
/// deterministic grid of `resolution` values per axis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampledSet {
    /// Each piece is the intersection of its balls; the set is the union.
    pub pieces: Vec<Vec<Ball>>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub resolution: usize,
    /// Vertices (or other extreme points) of the pieces.
    pub extreme_points: Vec<Point>,
    /// True when `extreme_points` contains every vertex of every piece, so
    /// that maxima of convex functions over the set are attained among them.
    pub vertices_complete: bool,
}

impl SampledSet {
    pub fn new(
        pieces: Vec<Vec<Ball>>,
        extreme_points: Vec<Point>,
        vertices_complete: bool,
        resolution: usize,
    ) -> Result<Self> {
        if pieces.is_empty() || extreme_points.is_empty() {
            return Err(Error::EmptySet);
        }
        if resolution < MIN_RESOLUTION {
            return Err(Error::Precondition(format!("grid resolution {resolution} is below {MIN_RESOLUTION}")));
        }
        let dim = extreme_points[0].dim();
        let mut lower = vec![f64::INFINITY; dim];
        let mut upper = vec![f64::NEG_INFINITY; dim];
        for p in &extreme_points {
            for (i, v) in p.to_f64().iter().enumerate() {
                lower[i] = lower[i].min(*v);
                upper[i] = upper[i].max(*v);
            }
        }
        Ok(SampledSet { pieces, lower, upper, resolution, extreme_points, vertices_complete })
    }

    pub fn contains(&self, space: &MetricSpace, z: &Point) -> Result<bool> {
        for piece in &self.pieces {
            let mut inside = true;
            for ball in piece {
                if !ball.contains(space, z)? {
                    inside = false;
                    break;
                }
            }
            if inside {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "SetRepJson", try_from = "SetRepJson")]
pub enum SetRep {
    Singleton(Point),
    Box(BoxSet),
    Finite(Vec<Point>),
    Sampled(SampledSet),
}

impl SetRep {
    pub fn finite(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(SetRep::Finite(points))
    }

    pub fn boxed(lower: Point, upper: Point) -> Result<Self> {
        BoxSet::new(lower, upper).map(SetRep::Box)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SetRep::Singleton(_) => "singleton",
            SetRep::Box(_) => "box",
            SetRep::Finite(_) => "finite",
            SetRep::Sampled(_) => "sampled",
        }
    }

    /// Exact rational coordinates and an exact (non-sampled) representation.
    pub fn is_exact(&self) -> bool {
        match self {
            SetRep::Singleton(p) => p.is_exact(),
            SetRep::Box(b) => b.is_exact(),
            SetRep::Finite(ps) => ps.iter().all(Point::is_exact),
            SetRep::Sampled(_) => false,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SetRep::Singleton(p) => p.dim(),
            SetRep::Box(b) => b.dim(),
            SetRep::Finite(ps) => ps[0].dim(),
            SetRep::Sampled(s) => s.extreme_points[0].dim(),
        }
    }

    pub fn resolution(&self) -> Option<usize> {
        match self {
            SetRep::Sampled(s) => Some(s.resolution),
            _ => None,
        }
    }

    /// Singletons and boxes; finite sets and sampled unions are not convex
    /// in general.
    pub fn is_convex(&self) -> bool {
        matches!(self, SetRep::Singleton(_) | SetRep::Box(_))
    }

    /// Points whose convex hull contains the set, when known exactly.
    pub fn hull_vertices(&self) -> Option<Vec<Point>> {
        match self {
            SetRep::Singleton(p) => Some(vec![p.clone()]),
            SetRep::Box(b) => Some(b.corners()),
            SetRep::Finite(ps) => Some(ps.clone()),
            SetRep::Sampled(s) if s.vertices_complete => Some(s.extreme_points.clone()),
            SetRep::Sampled(_) => None,
        }
    }

    pub fn contains(&self, space: &MetricSpace, z: &Point) -> Result<bool> {
        let zero = space.constant(0, 1);
        match self {
            SetRep::Singleton(p) => Ok(space.le(&space.distance(p, z)?, &zero)),
            SetRep::Box(b) => Ok(b.contains(space, z)),
            SetRep::Finite(ps) => {
                for p in ps {
                    if space.le(&space.distance(p, z)?, &zero) {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            SetRep::Sampled(s) => s.contains(space, z),
        }
    }

    /// Sample points of the set: every member of finite representations,
    /// a `box_resolution` grid for boxes, extreme points plus the per-piece
    /// grid for sampled sets.
    pub fn members(&self, space: &MetricSpace, box_resolution: usize) -> Result<Vec<Point>> {
        match self {
            SetRep::Singleton(p) => Ok(vec![p.clone()]),
            SetRep::Box(b) => Ok(b.grid(box_resolution)),
            SetRep::Finite(ps) => Ok(ps.clone()),
            SetRep::Sampled(s) => {
                let mut out = s.extreme_points.clone();
                for piece in &s.pieces {
                    out.extend(super::piece_grid(space, piece, s.resolution)?);
                }
                out.sort_by(|a, b| a.lex_cmp(b));
                out.dedup();
                Ok(out)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "repr", rename_all = "snake_case")]
enum SetRepJson {
    Singleton {
        #[serde(default)]
        exact: bool,
        point: Point,
    },
    Box {
        #[serde(default)]
        exact: bool,
        lower: Point,
        upper: Point,
    },
    Finite {
        #[serde(default)]
        exact: bool,
        points: Vec<Point>,
    },
    Sampled {
        #[serde(default)]
        exact: bool,
        #[serde(flatten)]
        set: SampledSet,
    },
}

impl From<SetRep> for SetRepJson {
    fn from(s: SetRep) -> Self {
        let exact = s.is_exact();
        match s {
            SetRep::Singleton(point) => SetRepJson::Singleton { exact, point },
            SetRep::Box(b) => SetRepJson::Box { exact, lower: b.lower, upper: b.upper },
            SetRep::Finite(points) => SetRepJson::Finite { exact, points },
            SetRep::Sampled(set) => SetRepJson::Sampled { exact, set },
        }
    }
}

impl TryFrom<SetRepJson> for SetRep {
    type Error = Error;
    fn try_from(j: SetRepJson) -> Result<Self> {
        match j {
            SetRepJson::Singleton { point, .. } => Ok(SetRep::Singleton(point)),
            SetRepJson::Box { lower, upper, .. } => SetRep::boxed(lower, upper),
            SetRepJson::Finite { points, .. } => SetRep::finite(points),
            SetRepJson::Sampled { set, .. } => {
                SampledSet::new(set.pieces, set.extreme_points, set.vertices_complete, set.resolution)
                    .map(SetRep::Sampled)
            }
        }
    }
}
