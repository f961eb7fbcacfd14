//! Hausdorff distance between set representations.
//!
//! Exact whenever both the supremum and the infimum can be taken over
//! finitely many candidates: finite sets, nearest points of boxes (clamp),
//! and vertices of a convex-hull description when the target set is convex
//! (the distance to a convex set is a convex function, so its maximum over a
//! polytope sits at a vertex). Everything else is evaluated on grids and
//! flagged inexact with its resolution.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::convexsets::{BoxSet, SetRep};
use crate::error::Result;
use crate::sampling::DEFAULT_RESOLUTION;
use crate::spaces::{Exponent, MetricSpace, Point, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HausdorffResult {
    pub value: Scalar,
    /// `(a, b)` with `a` in the first set, `b` in the second, `d(a, b) = value`.
    pub witness: (Point, Point),
    pub exact: bool,
    /// Grid resolution when the value is sampled.
    pub resolution: Option<usize>,
}

pub fn hausdorff(space: &MetricSpace, a: &SetRep, b: &SetRep) -> Result<HausdorffResult> {
    hausdorff_with(space, a, b, DEFAULT_RESOLUTION)
}

pub fn directed_hausdorff(space: &MetricSpace, a: &SetRep, b: &SetRep) -> Result<HausdorffResult> {
    directed_hausdorff_with(space, a, b, DEFAULT_RESOLUTION)
}

/// `max(directed(A, B), directed(B, A))`; on a tie the `A → B` witness is kept.
pub fn hausdorff_with(space: &MetricSpace, a: &SetRep, b: &SetRep, resolution: usize) -> Result<HausdorffResult> {
    let ab = directed_hausdorff_with(space, a, b, resolution)?;
    let ba = directed_hausdorff_with(space, b, a, resolution)?;
    let exact = ab.exact && ba.exact;
    let resolution = ab.resolution.or(ba.resolution);
    let mut best = if ba.value > ab.value {
        HausdorffResult { witness: (ba.witness.1, ba.witness.0), ..ba }
    } else {
        ab
    };
    best.exact = exact;
    best.resolution = resolution;
    Ok(best)
}

/// `sup_{a in A} inf_{b in B} d(a, b)`.
pub fn directed_hausdorff_with(space: &MetricSpace, a: &SetRep, b: &SetRep, resolution: usize) -> Result<HausdorffResult> {
    if let (SetRep::Box(ba), SetRep::Box(bb)) = (a, b) {
        if space.lp_exponent().is_some_and(Exponent::is_infinite) {
            return box_box_linf(space, ba, bb);
        }
    }
    let (candidates, sup_exact) = match (b.is_convex(), a.hull_vertices()) {
        (true, Some(v)) => (v, true),
        _ => match a {
            SetRep::Singleton(_) | SetRep::Finite(_) => (a.members(space, resolution)?, true),
            _ => (a.members(space, resolution)?, false),
        },
    };
    let inf_exact = !matches!(b, SetRep::Sampled(_));
    let targets = match b {
        SetRep::Box(_) => Vec::new(),
        _ => b
            .members(space, resolution)?
            .iter()
            .map(|p| space.normalize(p))
            .collect::<Result<Vec<_>>>()?,
    };
    let mut best: Option<(Scalar, Point, Point)> = None;
    for p in candidates {
        let p = space.normalize(&p)?;
        let (d, q) = nearest(space, &p, b, &targets)?;
        let better = match &best {
            None => true,
            Some((bd, bp, bq)) => match d.partial_cmp(bd) {
                Some(Ordering::Greater) => true,
                Some(Ordering::Equal) => pair_lt(&p, &q, bp, bq),
                _ => false,
            },
        };
        if better {
            best = Some((d, p, q));
        }
    }
    let (value, p, q) = best.ok_or(crate::Error::EmptySet)?;
    let exact = sup_exact && inf_exact && value.is_exact();
    Ok(HausdorffResult {
        value,
        witness: (p, q),
        exact,
        resolution: if sup_exact && inf_exact { None } else { Some(resolution) },
    })
}

fn pair_lt(p: &Point, q: &Point, bp: &Point, bq: &Point) -> bool {
    p.lex_cmp(bp).then_with(|| q.lex_cmp(bq)) == Ordering::Less
}

/// Nearest point of `b` to `p` (lexicographically smallest on ties).
fn nearest(space: &MetricSpace, p: &Point, b: &SetRep, targets: &[Point]) -> Result<(Scalar, Point)> {
    if let SetRep::Box(bx) = b {
        let q = space.normalize(&bx.clamp(p))?;
        return Ok((space.distance_unchecked(p, &q), q));
    }
    let mut best: Option<(Scalar, &Point)> = None;
    for q in targets {
        let d = space.distance_unchecked(p, q);
        let better = match &best {
            None => true,
            Some((bd, bq)) => match d.partial_cmp(bd) {
                Some(Ordering::Less) => true,
                Some(Ordering::Equal) => q.lex_cmp(bq) == Ordering::Less,
                _ => false,
            },
        };
        if better {
            best = Some((d, q));
        }
    }
    let (d, q) = best.ok_or(crate::Error::EmptySet)?;
    Ok((d, q.clone()))
}

/// Under d_∞ the directed distance between boxes separates by coordinate:
/// the largest per-axis overhang of A beyond B.
fn box_box_linf(space: &MetricSpace, a: &BoxSet, b: &BoxSet) -> Result<HausdorffResult> {
    let (al, au, bl, bu) = (a.lower().scalars(), a.upper().scalars(), b.lower().scalars(), b.upper().scalars());
    let zero = space.constant(0, 1);
    let mut best = (zero.clone(), 0usize, false);
    for i in 0..al.len() {
        let below = (&bl[i] - &al[i]).max(zero.clone());
        let above = (&au[i] - &bu[i]).max(zero.clone());
        let (gap, upper_side) = if above > below { (above, true) } else { (below, false) };
        if gap > best.0 {
            best = (gap, i, upper_side);
        }
    }
    let (value, j, upper_side) = best;
    let mut p = al.clone();
    if upper_side {
        p[j] = au[j].clone();
    }
    let p = space.normalize(&Point::from_scalars(p))?;
    let q = space.normalize(&b.clamp(&p))?;
    debug_assert!(space.approx_eq(&space.distance_unchecked(&p, &q), &value));
    Ok(HausdorffResult { exact: value.is_exact(), value, witness: (p, q), resolution: None })
}
