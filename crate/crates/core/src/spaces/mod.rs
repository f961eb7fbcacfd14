//! Concrete metric spaces and exact/float distance evaluation.
//!
//! A [`MetricSpace`] is a descriptor: which carrier, which metric, which
//! arithmetic. Every other module evaluates distances through it so that
//! exactness and the comparison tolerance are decided in one place.

mod piecewise;
mod point;
mod scalar;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use piecewise::PiecewisePoly;
pub use point::{Coords, Point};
pub use scalar::{rational, rational_from_f64, rational_sqrt, rational_to_f64, Scalar};

use crate::error::{Error, Result};

/// Default float comparison tolerance.
pub const DEFAULT_TAU: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arithmetic {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Carrier {
    /// R^n (or Q^n in exact mode).
    Vector { dim: usize },
    /// Z^n with the restriction of a d_p metric.
    Integer { dim: usize },
    /// Piecewise polynomials of degree <= 2 on [0, 1].
    PiecewiseFn,
}

/// The exponent of a d_p metric, `p` in [1, inf].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinity,
}

impl Exponent {
    pub fn is_one(self) -> bool {
        self == Exponent::Finite(1.0)
    }

    pub fn is_infinite(self) -> bool {
        self == Exponent::Infinity
    }

    /// 1 < p < inf: the norm is uniformly convex.
    pub fn is_strictly_convex(self) -> bool {
        matches!(self, Exponent::Finite(p) if p > 1.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Exponent::Infinity),
            _ => s
                .parse::<f64>()
                .map(Exponent::Finite)
                .map_err(|_| Error::Parse(format!("bad exponent {s:?}"))),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(p) => s.serialize_f64(*p),
            Exponent::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(p) => Ok(Exponent::Finite(p)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Metric {
    /// `d_p(x,y) = (sum |x_i - y_i|^p)^(1/p)`, or the max for p = inf.
    Lp { p: Exponent },
    /// L1 norm of the difference on [0, 1].
    L1Fn,
    /// Sup norm of the difference on [0, 1].
    LinfFn,
    /// `min(cap, d_p)`. A metric, but not induced by a norm.
    Bounded { p: Exponent, cap: Scalar },
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Lp { p } => write!(f, "d_{p}"),
            Metric::L1Fn => write!(f, "L1[0,1]"),
            Metric::LinfFn => write!(f, "Linf[0,1]"),
            Metric::Bounded { p, cap } => write!(f, "min({cap}, d_{p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricSpace {
    carrier: Carrier,
    metric: Metric,
    arithmetic: Arithmetic,
    tau: f64,
}

impl MetricSpace {
    pub fn new(carrier: Carrier, metric: Metric, arithmetic: Arithmetic) -> Result<Self> {
        let space = MetricSpace { carrier, metric, arithmetic, tau: DEFAULT_TAU };
        space.validate()?;
        Ok(space)
    }

    fn validate(&self) -> Result<()> {
        let check_p = |p: Exponent| match p {
            Exponent::Finite(v) if !(v >= 1.0 && v.is_finite()) => {
                Err(Error::InvalidSpace(format!("p = {v} is outside [1, inf]")))
            }
            _ => Ok(()),
        };
        match (&self.carrier, &self.metric) {
            (Carrier::Vector { dim } | Carrier::Integer { dim }, Metric::Lp { p } | Metric::Bounded { p, .. }) => {
                if *dim == 0 {
                    return Err(Error::InvalidSpace("dimension must be positive".into()));
                }
                check_p(*p)?;
            }
            (Carrier::PiecewiseFn, Metric::L1Fn | Metric::LinfFn) => {}
            (c, m) => return Err(Error::InvalidSpace(format!("metric {m} does not apply to carrier {c:?}"))),
        }
        if let Metric::Bounded { cap, .. } = &self.metric {
            if !(cap > &cap.zero_like()) {
                return Err(Error::InvalidSpace("cap must be positive".into()));
            }
        }
        if self.arithmetic == Arithmetic::Exact {
            let ok = match &self.metric {
                Metric::Lp { p } => p.is_one() || p.is_infinite(),
                Metric::Bounded { p, cap } => (p.is_one() || p.is_infinite()) && cap.is_exact(),
                Metric::L1Fn | Metric::LinfFn => true,
            };
            if !ok {
                return Err(Error::ExactUnsupported(format!("metric {}", self.metric)));
            }
        } else if matches!(self.carrier, Carrier::Integer { .. }) {
            return Err(Error::InvalidSpace("integer carriers use exact arithmetic".into()));
        }
        if !(self.tau >= 0.0) {
            return Err(Error::InvalidSpace("tau must be nonnegative".into()));
        }
        Ok(())
    }

    pub fn lp(dim: usize, p: f64) -> Result<Self> {
        let p = if p.is_infinite() { Exponent::Infinity } else { Exponent::Finite(p) };
        MetricSpace::new(Carrier::Vector { dim }, Metric::Lp { p }, Arithmetic::Float)
    }

    pub fn l1(dim: usize) -> Self {
        MetricSpace::lp(dim, 1.0).expect("valid")
    }

    pub fn l2(dim: usize) -> Self {
        MetricSpace::lp(dim, 2.0).expect("valid")
    }

    pub fn linf(dim: usize) -> Self {
        MetricSpace::lp(dim, f64::INFINITY).expect("valid")
    }

    /// Z^n under d_1 or d_inf, exact.
    pub fn integers(dim: usize, p: Exponent) -> Result<Self> {
        MetricSpace::new(Carrier::Integer { dim }, Metric::Lp { p }, Arithmetic::Exact)
    }

    pub fn bounded(dim: usize, p: Exponent, cap: Scalar) -> Result<Self> {
        MetricSpace::new(Carrier::Vector { dim }, Metric::Bounded { p, cap }, Arithmetic::Float)
    }

    pub fn l1_functions() -> Self {
        MetricSpace::new(Carrier::PiecewiseFn, Metric::L1Fn, Arithmetic::Exact).expect("valid")
    }

    pub fn linf_functions() -> Self {
        MetricSpace::new(Carrier::PiecewiseFn, Metric::LinfFn, Arithmetic::Exact).expect("valid")
    }

    pub fn with_arithmetic(mut self, arithmetic: Arithmetic) -> Result<Self> {
        self.arithmetic = arithmetic;
        if let Metric::Bounded { cap, .. } = &mut self.metric {
            if arithmetic == Arithmetic::Exact && !cap.is_exact() {
                if let Some(q) = rational_from_f64(cap.to_f64()) {
                    *cap = Scalar::Exact(q);
                }
            }
        }
        self.validate()?;
        Ok(self)
    }

    pub fn exact(self) -> Result<Self> {
        self.with_arithmetic(Arithmetic::Exact)
    }

    pub fn with_tau(mut self, tau: f64) -> Result<Self> {
        self.tau = tau;
        self.validate()?;
        Ok(self)
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn arithmetic(&self) -> Arithmetic {
        self.arithmetic
    }

    pub fn is_exact(&self) -> bool {
        self.arithmetic == Arithmetic::Exact
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn dim(&self) -> Option<usize> {
        match self.carrier {
            Carrier::Vector { dim } | Carrier::Integer { dim } => Some(dim),
            Carrier::PiecewiseFn => None,
        }
    }

    /// The exponent when the metric is a genuine d_p norm metric.
    pub fn lp_exponent(&self) -> Option<Exponent> {
        match (&self.carrier, &self.metric) {
            (Carrier::Vector { .. }, Metric::Lp { p }) => Some(*p),
            _ => None,
        }
    }

    pub fn is_integer_lattice(&self) -> bool {
        matches!(self.carrier, Carrier::Integer { .. })
    }

    /// True for d_p with 1 < p < inf, where midpoint sets are singletons.
    pub fn has_unique_midpoints(&self) -> bool {
        self.lp_exponent().is_some_and(Exponent::is_strictly_convex)
    }

    /// Short identifier, e.g. `l2:3`, `linf:5/exact`, `lp:1.5:2`.
    pub fn id(&self) -> String {
        let base = match (&self.carrier, &self.metric) {
            (Carrier::Vector { dim }, Metric::Lp { p }) => match p {
                Exponent::Infinity => format!("linf:{dim}"),
                Exponent::Finite(v) if *v == 1.0 => format!("l1:{dim}"),
                Exponent::Finite(v) if *v == 2.0 => format!("l2:{dim}"),
                Exponent::Finite(v) => format!("lp:{v}:{dim}"),
            },
            (Carrier::Integer { dim }, Metric::Lp { p }) => match p {
                Exponent::Infinity => format!("zinf:{dim}"),
                _ => format!("z1:{dim}"),
            },
            (Carrier::Vector { dim }, Metric::Bounded { p, cap }) => format!("bounded:{p}:{cap}:{dim}"),
            (_, Metric::L1Fn) => "L1fn".to_string(),
            (_, Metric::LinfFn) => "Linffn".to_string(),
            _ => "invalid".to_string(),
        };
        match self.arithmetic {
            Arithmetic::Exact => format!("{base}/exact"),
            Arithmetic::Float => base,
        }
    }

    /// A constant in this space's arithmetic.
    pub fn constant(&self, num: i64, den: i64) -> Scalar {
        match self.arithmetic {
            Arithmetic::Exact => Scalar::ratio(num, den),
            Arithmetic::Float => Scalar::Float(num as f64 / den as f64),
        }
    }

    /// Brings a scalar into this space's arithmetic.
    pub fn normalize_scalar(&self, s: &Scalar) -> Result<Scalar> {
        match (self.arithmetic, s) {
            (Arithmetic::Exact, Scalar::Float(_)) => Err(Error::InexactInput),
            (Arithmetic::Exact, Scalar::Exact(_)) => Ok(s.clone()),
            (Arithmetic::Float, _) => Ok(s.to_float()),
        }
    }

    /// Checks carrier membership and brings `p` into this space's arithmetic.
    pub fn normalize(&self, p: &Point) -> Result<Point> {
        let dim = self
            .dim()
            .ok_or(Error::UnsupportedMetric { op: "vector point", metric: self.metric.to_string() })?;
        if p.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
        match self.arithmetic {
            Arithmetic::Exact => {
                let coords = p.as_exact().ok_or(Error::InexactInput)?;
                if self.is_integer_lattice() && coords.iter().any(|q| !q.is_integer()) {
                    return Err(Error::InvalidPoint(format!("{p} is not a lattice point")));
                }
                Ok(p.clone())
            }
            Arithmetic::Float => Ok(if p.is_exact() { p.to_float() } else { p.clone() }),
        }
    }

    /// d(p, q) under the selected metric.
    pub fn distance(&self, p: &Point, q: &Point) -> Result<Scalar> {
        let (p, q) = (self.normalize(p)?, self.normalize(q)?);
        Ok(self.distance_unchecked(&p, &q))
    }

    /// Distance between points already normalized for this space.
    pub(crate) fn distance_unchecked(&self, p: &Point, q: &Point) -> Scalar {
        let (exp, cap) = match &self.metric {
            Metric::Lp { p } => (*p, None),
            Metric::Bounded { p, cap } => (*p, Some(cap)),
            Metric::L1Fn | Metric::LinfFn => unreachable!("vector distance on a function space"),
        };
        let raw = match (p.coords(), q.coords()) {
            (Coords::Exact(a), Coords::Exact(b)) => Scalar::Exact(exact_lp(a, b, exp)),
            _ => Scalar::Float(float_lp(&p.to_f64(), &q.to_f64(), exp)),
        };
        match cap {
            Some(c) => raw.min(if self.is_exact() { c.clone() } else { c.to_float() }),
            None => raw,
        }
    }

    /// Float distance kernel for hot loops; ignores exactness.
    pub fn distance_f64(&self, a: &[f64], b: &[f64]) -> f64 {
        match &self.metric {
            Metric::Lp { p } => float_lp(a, b, *p),
            Metric::Bounded { p, cap } => float_lp(a, b, *p).min(cap.to_f64()),
            Metric::L1Fn | Metric::LinfFn => f64::NAN,
        }
    }

    /// Distance between two piecewise polynomials (L1 or L∞ on [0, 1]).
    pub fn pl_distance(&self, f: &PiecewisePoly, g: &PiecewisePoly) -> Result<Scalar> {
        let (f, g) = match self.arithmetic {
            Arithmetic::Exact => {
                if !f.is_exact() || !g.is_exact() {
                    return Err(Error::InexactInput);
                }
                (f.clone(), g.clone())
            }
            Arithmetic::Float => (f.to_float(), g.to_float()),
        };
        match self.metric {
            Metric::L1Fn => piecewise::l1_distance(&f, &g),
            Metric::LinfFn => Ok(piecewise::linf_distance(&f, &g)),
            _ => Err(Error::UnsupportedMetric { op: "pl_distance", metric: self.metric.to_string() }),
        }
    }

    /// `a <= b`, exactly or within tau.
    pub fn le(&self, a: &Scalar, b: &Scalar) -> bool {
        match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) => x <= y,
            _ => a.to_f64() <= b.to_f64() + self.tau,
        }
    }

    /// `a < b` by a margin: exactly, or by more than tau.
    pub fn lt(&self, a: &Scalar, b: &Scalar) -> bool {
        match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) => x < y,
            _ => a.to_f64() < b.to_f64() - self.tau,
        }
    }

    pub fn approx_eq(&self, a: &Scalar, b: &Scalar) -> bool {
        match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) => x == y,
            _ => (a.to_f64() - b.to_f64()).abs() <= self.tau,
        }
    }
}

impl FromStr for MetricSpace {
    type Err = Error;

    /// Parses identifiers produced by [`MetricSpace::id`]:
    /// `l1:N`, `l2:N`, `linf:N`, `lp:P:N`, `z1:N`, `zinf:N`,
    /// `bounded:P:CAP:N`, `L1fn`, `Linffn`, each optionally suffixed `/exact`
    /// or `/float`.
    fn from_str(s: &str) -> Result<Self> {
        let (body, arith) = match s.rsplit_once('/') {
            Some((b, "exact")) => (b, Some(Arithmetic::Exact)),
            Some((b, "float")) => (b, Some(Arithmetic::Float)),
            _ => (s, None),
        };
        let parts: Vec<&str> = body.split(':').collect();
        let dim = |t: &str| -> Result<usize> {
            t.parse::<usize>().map_err(|_| Error::Parse(format!("bad dimension {t:?} in {s:?}")))
        };
        let space = match parts.as_slice() {
            ["l1", n] => MetricSpace::l1(dim(n)?),
            ["l2", n] => MetricSpace::l2(dim(n)?),
            ["linf", n] => MetricSpace::linf(dim(n)?),
            ["lp", p, n] => {
                let p: Exponent = p.parse()?;
                MetricSpace::new(Carrier::Vector { dim: dim(n)? }, Metric::Lp { p }, Arithmetic::Float)?
            }
            ["z1", n] => MetricSpace::integers(dim(n)?, Exponent::Finite(1.0))?,
            ["zinf", n] => MetricSpace::integers(dim(n)?, Exponent::Infinity)?,
            ["bounded", p, cap, n] => MetricSpace::bounded(dim(n)?, p.parse()?, cap.parse()?)?,
            ["L1fn"] => MetricSpace::l1_functions(),
            ["Linffn"] => MetricSpace::linf_functions(),
            _ => return Err(Error::Parse(format!("unknown space id {s:?}"))),
        };
        match arith {
            Some(a) => space.with_arithmetic(a),
            None => Ok(space),
        }
    }
}

fn exact_lp(a: &[BigRational], b: &[BigRational], p: Exponent) -> BigRational {
    let diffs = a.iter().zip(b).map(|(x, y)| (x - y).abs());
    if p.is_infinite() {
        diffs.fold(BigRational::zero(), |m, d| if d > m { d } else { m })
    } else {
        debug_assert!(p.is_one());
        diffs.fold(BigRational::zero(), |s, d| s + d)
    }
}

fn float_lp(a: &[f64], b: &[f64], p: Exponent) -> f64 {
    let diffs = a.iter().zip(b).map(|(x, y)| (x - y).abs());
    match p {
        Exponent::Infinity => diffs.fold(0.0, f64::max),
        Exponent::Finite(1.0) => diffs.sum(),
        Exponent::Finite(2.0) => diffs.map(|d| d * d).sum::<f64>().sqrt(),
        Exponent::Finite(v) => {
            // scale by the largest difference to keep powf in range
            let m = diffs.clone().fold(0.0, f64::max);
            if m == 0.0 {
                return 0.0;
            }
            m * diffs.map(|d| (d / m).powf(v)).sum::<f64>().powf(1.0 / v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linf_reference_pair() {
        let s = MetricSpace::linf(3).exact().unwrap();
        let d = s.distance(&Point::from_ints(&[0, 0, 0]), &Point::from_ints(&[2, 0, 0])).unwrap();
        assert_eq!(d, Scalar::int(2));
        assert!(d.is_exact());
    }

    #[test]
    fn l2_unit_vectors() {
        let s = MetricSpace::l2(2);
        let d = s.distance(&Point::float(vec![1.0, 0.0]), &Point::float(vec![0.0, 1.0])).unwrap();
        assert_eq!(d.to_f64(), 2f64.sqrt());
    }

    #[test]
    fn exact_refused_for_p2() {
        assert!(matches!(MetricSpace::l2(2).exact(), Err(Error::ExactUnsupported(_))));
        assert!(MetricSpace::lp(2, 0.5).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let s = MetricSpace::l1(3);
        let e = s.distance(&Point::float(vec![0.0; 2]), &Point::float(vec![0.0; 3])).unwrap_err();
        assert_eq!(e, Error::DimensionMismatch { expected: 3, found: 2 });
    }

    #[test]
    fn inexact_input_in_exact_space() {
        let s = MetricSpace::l1(2).exact().unwrap();
        assert_eq!(
            s.distance(&Point::float(vec![0.0; 2]), &Point::from_ints(&[0, 0])).unwrap_err(),
            Error::InexactInput
        );
    }

    #[test]
    fn lattice_membership() {
        let z = MetricSpace::integers(1, Exponent::Finite(1.0)).unwrap();
        assert!(z.normalize(&Point::from_ratios(&[(1, 2)])).is_err());
        assert_eq!(z.distance(&Point::from_ints(&[0]), &Point::from_ints(&[3])).unwrap(), Scalar::int(3));
    }

    #[test]
    fn bounded_metric_caps() {
        let s = MetricSpace::bounded(2, Exponent::Finite(2.0), Scalar::int(1)).unwrap();
        let d = s.distance(&Point::float(vec![0.0, 0.0]), &Point::float(vec![3.0, 0.0])).unwrap();
        assert_eq!(d.to_f64(), 1.0);
    }

    #[test]
    fn ids_round_trip() {
        for id in ["l1:4", "l2:3", "linf:5/exact", "lp:1.5:2", "z1:1/exact", "L1fn/exact", "bounded:2:1/1:2"] {
            let s: MetricSpace = id.parse().unwrap();
            assert_eq!(s.id().parse::<MetricSpace>().unwrap(), s, "{id}");
        }
        assert!("l7".parse::<MetricSpace>().is_err());
    }

    #[test]
    fn scaled_p_norm_matches_direct_formula() {
        let s = MetricSpace::lp(3, 3.0).unwrap();
        let d = s.distance_f64(&[0.0, 0.0, 0.0], &[1.0, 2.0, -2.0]);
        assert!((d - 17f64.powf(1.0 / 3.0)).abs() < 1e-14);
    }
}
