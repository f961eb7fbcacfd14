//! Deterministic sample plans and seeded generators of points and parameters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::spaces::{MetricSpace, Point, Scalar};

pub const DEFAULT_SEED: u64 = 0x6d65_6e67;
pub const DEFAULT_RESOLUTION: usize = 9;
pub const MIN_RESOLUTION: usize = 8;

/// Seed, sample count and grid resolution of a randomized check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplePlan {
    pub seed: u64,
    pub samples: usize,
    /// Grid points per axis for sampled set representations.
    pub resolution: usize,
    /// Coordinates are drawn from `[-radius, radius]`.
    pub radius: f64,
}

impl Default for SamplePlan {
    fn default() -> Self {
        SamplePlan { seed: DEFAULT_SEED, samples: 1000, resolution: DEFAULT_RESOLUTION, radius: 2.0 }
    }
}

impl SamplePlan {
    pub fn new(seed: u64, samples: usize) -> Self {
        SamplePlan { seed, samples, ..SamplePlan::default() }
    }

    pub fn with_resolution(mut self, resolution: usize) -> Self {
        self.resolution = resolution;
        self
    }

    pub fn with_radius(mut self, radius: f64) -> Self {
        self.radius = radius;
        self
    }

    /// A sampler for `space`. Distinct `stream`s give independent sequences
    /// from the same seed.
    pub fn sampler<'a>(&self, space: &'a MetricSpace, stream: u64) -> Sampler<'a> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        Sampler { rng, space, radius: self.radius }
    }
}

/// Draws points and parameters in the arithmetic of its space.
///
/// Exact spaces get dyadic-ish rationals with small denominators so that
/// exact distance sums stay cheap; integer lattices get integers.
pub struct Sampler<'a> {
    rng: ChaCha8Rng,
    space: &'a MetricSpace,
    radius: f64,
}

const EXACT_DENOMINATORS: [i64; 6] = [1, 2, 3, 4, 6, 8];

impl Sampler<'_> {
    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn space(&self) -> &MetricSpace {
        self.space
    }

    pub fn coordinate(&mut self) -> Scalar {
        if self.space.is_integer_lattice() {
            let r = self.radius.ceil().max(1.0) as i64;
            Scalar::int(self.rng.random_range(-r..=r))
        } else if self.space.is_exact() {
            let den = EXACT_DENOMINATORS[self.rng.random_range(0..EXACT_DENOMINATORS.len())];
            let r = (self.radius * den as f64).floor() as i64;
            Scalar::ratio(self.rng.random_range(-r..=r), den)
        } else {
            Scalar::Float(self.rng.random_range(-self.radius..=self.radius))
        }
    }

    pub fn point(&mut self) -> Point {
        let dim = self.space.dim().unwrap_or(1);
        if self.space.is_exact() {
            Point::from_scalars((0..dim).map(|_| self.coordinate()).collect())
        } else {
            Point::float((0..dim).map(|_| self.rng.random_range(-self.radius..=self.radius)).collect())
        }
    }

    /// A point different from `other`.
    pub fn point_distinct_from(&mut self, other: &Point) -> Point {
        loop {
            let p = self.point();
            if &p != other {
                return p;
            }
        }
    }

    /// A parameter strictly inside (0, 1), rational in exact mode.
    pub fn t(&mut self) -> Scalar {
        if self.space.is_exact() {
            let den = self.rng.random_range(2..=12);
            Scalar::ratio(self.rng.random_range(1..den), den)
        } else {
            Scalar::Float(self.rng.random_range(0.01..0.99))
        }
    }

    /// A parameter strictly inside (0, 1/2).
    pub fn t_below_half(&mut self) -> Scalar {
        if self.space.is_exact() {
            let den: i64 = self.rng.random_range(3..=12);
            Scalar::ratio(self.rng.random_range(1..(den + 1) / 2), den)
        } else {
            Scalar::Float(self.rng.random_range(0.01..0.49))
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }
}
