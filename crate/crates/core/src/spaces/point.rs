use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{rational, rational_to_f64, Scalar};

/// Coordinates are stored homogeneously: all exact or all float.
#[derive(Clone, Debug)]
pub enum Coords {
    Exact(Vec<BigRational>),
    Float(Vec<f64>),
}

/// A point of a finite-dimensional vector carrier.
#[derive(Clone, Debug)]
pub struct Point {
    coords: Coords,
}

impl Point {
    pub fn float(coords: Vec<f64>) -> Self {
        Point { coords: Coords::Float(coords) }
    }

    pub fn exact(coords: Vec<BigRational>) -> Self {
        Point { coords: Coords::Exact(coords) }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point::exact(coords.iter().map(|&n| BigRational::from_integer(BigInt::from(n))).collect())
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Point::exact(coords.iter().map(|&(n, d)| rational(n, d)).collect())
    }

    /// Exact when every scalar is exact, float otherwise.
    pub fn from_scalars(coords: Vec<Scalar>) -> Self {
        if coords.iter().all(Scalar::is_exact) {
            Point::exact(
                coords
                    .into_iter()
                    .map(|s| match s {
                        Scalar::Exact(q) => q,
                        Scalar::Float(_) => unreachable!(),
                    })
                    .collect(),
            )
        } else {
            Point::float(coords.iter().map(Scalar::to_f64).collect())
        }
    }

    pub fn zeros(dim: usize, exact: bool) -> Self {
        if exact {
            Point::exact(vec![BigRational::zero(); dim])
        } else {
            Point::float(vec![0.0; dim])
        }
    }

    /// `scale * e_axis`.
    pub fn axis(dim: usize, axis: usize, scale: Scalar) -> Self {
        let mut coords = vec![scale.zero_like(); dim];
        coords[axis] = scale;
        Point::from_scalars(coords)
    }

    pub fn coords(&self) -> &Coords {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        match &self.coords {
            Coords::Exact(v) => v.len(),
            Coords::Float(v) => v.len(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.coords, Coords::Exact(_))
    }

    pub fn coord(&self, i: usize) -> Scalar {
        match &self.coords {
            Coords::Exact(v) => Scalar::Exact(v[i].clone()),
            Coords::Float(v) => Scalar::Float(v[i]),
        }
    }

    pub fn scalars(&self) -> Vec<Scalar> {
        (0..self.dim()).map(|i| self.coord(i)).collect()
    }

    pub fn as_exact(&self) -> Option<&[BigRational]> {
        match &self.coords {
            Coords::Exact(v) => Some(v),
            Coords::Float(_) => None,
        }
    }

    pub fn to_f64(&self) -> Cow<'_, [f64]> {
        match &self.coords {
            Coords::Float(v) => Cow::Borrowed(v),
            Coords::Exact(v) => Cow::Owned(v.iter().map(rational_to_f64).collect()),
        }
    }

    pub fn to_float(&self) -> Point {
        Point::float(self.to_f64().into_owned())
    }

    fn zip_with(
        &self,
        other: &Point,
        exact: impl Fn(&BigRational, &BigRational) -> BigRational,
        float: impl Fn(f64, f64) -> f64,
    ) -> Point {
        match (&self.coords, &other.coords) {
            (Coords::Exact(a), Coords::Exact(b)) => {
                Point::exact(a.iter().zip(b).map(|(x, y)| exact(x, y)).collect())
            }
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                Point::float(a.iter().zip(b.iter()).map(|(&x, &y)| float(x, y)).collect())
            }
        }
    }

    pub fn add(&self, other: &Point) -> Point {
        self.zip_with(other, |x, y| x + y, |x, y| x + y)
    }

    pub fn sub(&self, other: &Point) -> Point {
        self.zip_with(other, |x, y| x - y, |x, y| x - y)
    }

    pub fn scale(&self, s: &Scalar) -> Point {
        match (&self.coords, s) {
            (Coords::Exact(a), Scalar::Exact(q)) => Point::exact(a.iter().map(|x| x * q).collect()),
            _ => {
                let k = s.to_f64();
                Point::float(self.to_f64().iter().map(|x| x * k).collect())
            }
        }
    }

    /// `self + s * (other - self)`: the point a fraction `s` of the way to `other`.
    pub fn toward(&self, other: &Point, s: &Scalar) -> Point {
        self.add(&other.sub(self).scale(s))
    }

    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        match (&self.coords, &other.coords) {
            (Coords::Exact(a), Coords::Exact(b)) => a.cmp(b),
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                for (x, y) in a.iter().zip(b.iter()) {
                    match x.total_cmp(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                a.len().cmp(&b.len())
            }
        }
    }
}

impl PartialEq for Point {
    fn eq(&self, other: &Self) -> bool {
        match (&self.coords, &other.coords) {
            (Coords::Exact(a), Coords::Exact(b)) => a == b,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.scalars().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.scalars().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<Scalar>::deserialize(deserializer).map(Point::from_scalars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homogeneous_storage() {
        let p = Point::from_scalars(vec![Scalar::int(1), Scalar::ratio(1, 2)]);
        assert!(p.is_exact());
        let q = Point::from_scalars(vec![Scalar::int(1), Scalar::float(0.5)]);
        assert!(!q.is_exact());
        assert_eq!(p, q);
    }

    #[test]
    fn toward_is_exact_on_rationals() {
        let x = Point::from_ints(&[0, 0]);
        let y = Point::from_ints(&[2, 4]);
        let m = x.toward(&y, &Scalar::ratio(1, 4));
        assert_eq!(m, Point::from_ratios(&[(1, 2), (1, 1)]));
        assert!(m.is_exact());
    }

    #[test]
    fn json_round_trip() {
        let p = Point::from_ratios(&[(1, 2), (-3, 4)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1/2","-3/4"]"#);
        let back: Point = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let f: Point = serde_json::from_str("[0.5, 1]").unwrap();
        assert!(!f.is_exact());
    }
}
