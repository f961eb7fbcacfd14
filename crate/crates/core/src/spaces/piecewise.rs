//! Piecewise polynomials of degree at most 2 on [0, 1] and their exact
//! L1 / L∞ distances.

use serde::{Deserialize, Serialize};

use super::scalar::{rational_sqrt, Scalar};
use crate::error::{Error, Result};

/// `c0 + c1*x + c2*x^2` on each interval between consecutive breakpoints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPiecewise")]
pub struct PiecewisePoly {
    breakpoints: Vec<Scalar>,
    pieces: Vec<[Scalar; 3]>,
}

#[derive(Deserialize)]
struct RawPiecewise {
    breakpoints: Vec<Scalar>,
    pieces: Vec<[Scalar; 3]>,
}

impl TryFrom<RawPiecewise> for PiecewisePoly {
    type Error = Error;
    fn try_from(raw: RawPiecewise) -> Result<Self> {
        PiecewisePoly::new(raw.breakpoints, raw.pieces)
    }
}

impl PiecewisePoly {
    pub fn new(breakpoints: Vec<Scalar>, pieces: Vec<[Scalar; 3]>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::InvalidBreakpoints("need at least the two endpoints 0 and 1".into()));
        }
        if !breakpoints[0].is_zero() || breakpoints[breakpoints.len() - 1] != Scalar::int(1) {
            return Err(Error::InvalidBreakpoints("breakpoints must start at 0 and end at 1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBreakpoints("breakpoints must be strictly increasing".into()));
        }
        if pieces.len() + 1 != breakpoints.len() {
            return Err(Error::InvalidBreakpoints(format!(
                "{} breakpoints need {} pieces, got {}",
                breakpoints.len(),
                breakpoints.len() - 1,
                pieces.len()
            )));
        }
        Ok(PiecewisePoly { breakpoints, pieces })
    }

    pub fn constant(c: Scalar) -> Self {
        let z = c.zero_like();
        PiecewisePoly {
            breakpoints: vec![Scalar::int(0), Scalar::int(1)],
            pieces: vec![[c, z.clone(), z]],
        }
    }

    /// Continuous piecewise-linear function through `(x_i, y_i)` with
    /// `x_0 = 0` and `x_last = 1`.
    pub fn linear_interpolant(knots: &[(Scalar, Scalar)]) -> Result<Self> {
        let breakpoints: Vec<Scalar> = knots.iter().map(|(x, _)| x.clone()).collect();
        let mut pieces = Vec::with_capacity(knots.len().saturating_sub(1));
        for w in knots.windows(2) {
            let ((x0, y0), (x1, y1)) = (&w[0], &w[1]);
            if x1 <= x0 {
                return Err(Error::InvalidBreakpoints("knots must be strictly increasing".into()));
            }
            let slope = (y1 - y0) / (x1 - x0);
            let intercept = y0 - &slope * x0;
            pieces.push([intercept, slope, y0.zero_like()]);
        }
        PiecewisePoly::new(breakpoints, pieces)
    }

    pub fn breakpoints(&self) -> &[Scalar] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[[Scalar; 3]] {
        &self.pieces
    }

    pub fn is_exact(&self) -> bool {
        self.breakpoints.iter().chain(self.pieces.iter().flatten()).all(Scalar::is_exact)
    }

    pub fn to_float(&self) -> PiecewisePoly {
        PiecewisePoly {
            breakpoints: self.breakpoints.iter().map(Scalar::to_float).collect(),
            pieces: self.pieces.iter().map(|p| [p[0].to_float(), p[1].to_float(), p[2].to_float()]).collect(),
        }
    }

    /// Index of the piece whose closed interval contains `[a, b]`.
    fn piece_covering(&self, a: &Scalar, b: &Scalar) -> usize {
        let i = self.breakpoints.partition_point(|bp| bp <= a);
        let i = i.saturating_sub(1).min(self.pieces.len() - 1);
        debug_assert!(&self.breakpoints[i + 1] >= b);
        i
    }

    pub fn eval(&self, x: f64) -> f64 {
        let i = self
            .breakpoints
            .partition_point(|bp| bp.to_f64() <= x)
            .saturating_sub(1)
            .min(self.pieces.len() - 1);
        let [c0, c1, c2] = &self.pieces[i];
        c0.to_f64() + x * (c1.to_f64() + x * c2.to_f64())
    }
}

fn merged_grid(f: &PiecewisePoly, g: &PiecewisePoly) -> Vec<Scalar> {
    let mut grid: Vec<Scalar> = f.breakpoints.iter().chain(g.breakpoints.iter()).cloned().collect();
    grid.sort_by(|a, b| a.total_cmp(b));
    grid.dedup_by(|a, b| a == b);
    grid
}

fn eval_quad(c: &[Scalar; 3], x: &Scalar) -> Scalar {
    &c[0] + x * (&c[1] + x * &c[2])
}

fn antiderivative(c: &[Scalar; 3], x: &Scalar) -> Scalar {
    let x2 = x * x;
    let x3 = &x2 * x;
    &c[0] * x + &c[1] * x2 / Scalar::int(2) + &c[2] * x3 / Scalar::int(3)
}

/// Sign-change points of the quadratic strictly inside (a, b), ascending.
fn interior_roots(c: &[Scalar; 3], a: &Scalar, b: &Scalar) -> Result<Vec<Scalar>> {
    let inside = |r: &Scalar| a < r && r < b;
    let [c0, c1, c2] = c;
    let mut roots = Vec::new();
    if c2.is_zero() {
        if !c1.is_zero() {
            let r = -(c0 / c1);
            if inside(&r) {
                roots.push(r);
            }
        }
        return Ok(roots);
    }
    let disc = c1 * c1 - Scalar::int(4) * c2 * c0;
    if !disc.is_negative() && !disc.is_zero() {
        match &disc {
            Scalar::Exact(q) => match rational_sqrt(q) {
                Some(s) => {
                    let s = Scalar::Exact(s);
                    let two_a = Scalar::int(2) * c2;
                    roots.push((-c1 - &s) / &two_a);
                    roots.push((-c1 + &s) / &two_a);
                }
                None => {
                    // Irrational roots are fine as long as none lies inside.
                    let (qa, qb) = (eval_quad(c, a), eval_quad(c, b));
                    let vertex = -(c1 / (Scalar::int(2) * c2));
                    let crosses = (qa.is_negative() != qb.is_negative() && !qa.is_zero() && !qb.is_zero())
                        || (inside(&vertex)
                            && eval_quad(c, &vertex).is_negative() != qa.is_negative()
                            && !eval_quad(c, &vertex).is_zero());
                    if crosses {
                        return Err(Error::ExactUnsupported(
                            "L1 distance whose integrand changes sign at an irrational point".into(),
                        ));
                    }
                }
            },
            Scalar::Float(d) => {
                let (c0, c1, c2) = (c0.to_f64(), c1.to_f64(), c2.to_f64());
                let sign = if c1 >= 0.0 { 1.0 } else { -1.0 };
                let q = -0.5 * (c1 + sign * d.sqrt());
                roots.push(Scalar::Float(q / c2));
                if q != 0.0 {
                    roots.push(Scalar::Float(c0 / q));
                }
            }
        }
    }
    roots.retain(|r| inside(r));
    roots.sort_by(|x, y| x.total_cmp(y));
    roots.dedup_by(|x, y| x == y);
    Ok(roots)
}

fn difference(f: &[Scalar; 3], g: &[Scalar; 3]) -> [Scalar; 3] {
    [&f[0] - &g[0], &f[1] - &g[1], &f[2] - &g[2]]
}

/// Exact integral of |f - g| over [0, 1].
pub fn l1_distance(f: &PiecewisePoly, g: &PiecewisePoly) -> Result<Scalar> {
    let grid = merged_grid(f, g);
    let mut total = grid[0].zero_like();
    for w in grid.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let q = difference(&f.pieces[f.piece_covering(a, b)], &g.pieces[g.piece_covering(a, b)]);
        let mut cuts = vec![a.clone()];
        cuts.extend(interior_roots(&q, a, b)?);
        cuts.push(b.clone());
        for s in cuts.windows(2) {
            let part = antiderivative(&q, &s[1]) - antiderivative(&q, &s[0]);
            total = total + part.abs();
        }
    }
    Ok(total)
}

/// Exact supremum of |f - g| over [0, 1].
pub fn linf_distance(f: &PiecewisePoly, g: &PiecewisePoly) -> Scalar {
    let grid = merged_grid(f, g);
    let mut best = grid[0].zero_like();
    for w in grid.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let q = difference(&f.pieces[f.piece_covering(a, b)], &g.pieces[g.piece_covering(a, b)]);
        let mut candidates = vec![a.clone(), b.clone()];
        if !q[2].is_zero() {
            let v = -(&q[1] / (Scalar::int(2) * &q[2]));
            if a < &v && &v < b {
                candidates.push(v);
            }
        }
        for x in &candidates {
            best = best.max(eval_quad(&q, x).abs());
        }
    }
    best
}
