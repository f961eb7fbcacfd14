use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sampling::Sampler;
use crate::spaces::{MetricSpace, Point};

/// A self-map of R^n in floating point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "parameters", rename_all = "snake_case")]
pub enum Mapping {
    /// `x ↦ Mx + b`.
    Affine { matrix: Vec<Vec<f64>>, offset: Vec<f64> },
    /// Planar rotation by `angle` radians about `center`.
    Rotation { angle: f64, center: Vec<f64> },
    /// Coordinatewise clamp onto `[lower, upper]`, the nearest-point map of
    /// the box in every d_p metric.
    Projection { lower: Vec<f64>, upper: Vec<f64> },
    /// Applied first to last.
    Composition(Vec<Mapping>),
}

impl Mapping {
    pub fn dim(&self) -> Option<usize> {
        match self {
            Mapping::Affine { offset, .. } => Some(offset.len()),
            Mapping::Rotation { .. } => Some(2),
            Mapping::Projection { lower, .. } => Some(lower.len()),
            Mapping::Composition(maps) => maps.iter().find_map(Mapping::dim),
        }
    }

    fn validate(&self, dim: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpace(msg));
        match self {
            Mapping::Affine { matrix, offset } => {
                if offset.len() != dim || matrix.len() != dim || matrix.iter().any(|r| r.len() != dim) {
                    return bad(format!("affine map must be {dim}x{dim} with a length-{dim} offset"));
                }
            }
            Mapping::Rotation { center, .. } => {
                if dim != 2 || center.len() != 2 {
                    return bad("rotations act on the plane".into());
                }
            }
            Mapping::Projection { lower, upper } => {
                if lower.len() != dim || upper.len() != dim || lower.iter().zip(upper).any(|(l, u)| l > u) {
                    return bad("projection box must match the dimension with lower <= upper".into());
                }
            }
            Mapping::Composition(maps) => {
                for m in maps {
                    m.validate(dim)?;
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        match self {
            Mapping::Affine { matrix, offset } => matrix
                .iter()
                .zip(offset)
                .map(|(row, b)| row.iter().zip(x).map(|(m, v)| m * v).sum::<f64>() + b)
                .collect(),
            Mapping::Rotation { angle, center } => {
                let (s, c) = angle.sin_cos();
                let (dx, dy) = (x[0] - center[0], x[1] - center[1]);
                vec![center[0] + c * dx - s * dy, center[1] + s * dx + c * dy]
            }
            Mapping::Projection { lower, upper } => {
                x.iter().zip(lower.iter().zip(upper)).map(|(v, (l, u))| v.clamp(*l, *u)).collect()
            }
            Mapping::Composition(maps) => maps.iter().fold(x.to_vec(), |acc, m| m.apply(&acc)),
        }
    }
}

/// Closed convex domain of a mapping.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Domain {
    #[default]
    Whole,
    /// Closed ball in the space's metric.
    Ball { center: Vec<f64>, radius: f64 },
    Box { lower: Vec<f64>, upper: Vec<f64> },
}

impl Domain {
    pub fn contains(&self, space: &MetricSpace, x: &[f64]) -> bool {
        let tau = space.tau();
        match self {
            Domain::Whole => true,
            Domain::Ball { center, radius } => space.distance_f64(center, x) <= radius + tau,
            Domain::Box { lower, upper } => {
                x.iter().zip(lower.iter().zip(upper)).all(|(v, (l, u))| *v >= l - tau && *v <= u + tau)
            }
        }
    }

    /// A point of the domain close to `x`: radial scaling for balls, clamp
    /// for boxes.
    pub fn project(&self, space: &MetricSpace, x: &[f64]) -> Vec<f64> {
        match self {
            Domain::Whole => x.to_vec(),
            Domain::Ball { center, radius } => {
                let d = space.distance_f64(center, x);
                if d <= *radius {
                    x.to_vec()
                } else {
                    center.iter().zip(x).map(|(c, v)| c + (v - c) * radius / d).collect()
                }
            }
            Domain::Box { lower, upper } => {
                x.iter().zip(lower.iter().zip(upper)).map(|(v, (l, u))| v.clamp(*l, *u)).collect()
            }
        }
    }

    /// Bounding box, if the domain is bounded.
    pub fn bounds(&self) -> Option<(Vec<f64>, Vec<f64>)> {
        match self {
            Domain::Whole => None,
            Domain::Ball { center, radius } => Some((
                center.iter().map(|c| c - radius).collect(),
                center.iter().map(|c| c + radius).collect(),
            )),
            Domain::Box { lower, upper } => Some((lower.clone(), upper.clone())),
        }
    }

    pub fn sample(&self, space: &MetricSpace, s: &mut Sampler<'_>) -> Vec<f64> {
        match self.bounds() {
            None => s.point().to_f64().into_owned(),
            Some((lo, hi)) => loop {
                let p: Vec<f64> = lo.iter().zip(&hi).map(|(l, h)| s.uniform(*l, *h)).collect();
                if self.contains(space, &p) {
                    return p;
                }
            },
        }
    }
}

/// A mapping together with the domain it is meant to preserve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MappingSpec {
    #[serde(flatten)]
    pub map: Mapping,
    #[serde(default)]
    pub domain: Domain,
}

impl MappingSpec {
    pub fn new(map: Mapping, domain: Domain) -> Self {
        MappingSpec { map, domain }
    }

    pub fn rotation(angle: f64) -> Self {
        MappingSpec::new(
            Mapping::Rotation { angle, center: vec![0.0, 0.0] },
            Domain::Ball { center: vec![0.0, 0.0], radius: 1.0 },
        )
    }

    /// `x ↦ k·x + b` on the whole space.
    pub fn scaled_shift(k: f64, b: Vec<f64>) -> Self {
        let n = b.len();
        let matrix = (0..n).map(|i| (0..n).map(|j| if i == j { k } else { 0.0 }).collect()).collect();
        MappingSpec::new(Mapping::Affine { matrix, offset: b }, Domain::Whole)
    }

    /// Checks dimensions against `space` and returns them.
    pub fn check(&self, space: &MetricSpace) -> Result<usize> {
        if space.is_exact() {
            return Err(Error::ExactUnsupported("mappings".into()));
        }
        let dim = space.dim().ok_or(Error::UnsupportedMetric { op: "mapping", metric: space.metric().to_string() })?;
        self.map.validate(dim)?;
        if let Some((lo, hi)) = self.domain.bounds() {
            if lo.len() != dim || hi.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: lo.len() });
            }
        }
        Ok(dim)
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.map.apply(x)
    }

    pub fn apply_point(&self, space: &MetricSpace, x: &Point) -> Result<Point> {
        let x = space.normalize(x)?;
        Ok(Point::float(self.apply(&x.to_f64())))
    }
}
