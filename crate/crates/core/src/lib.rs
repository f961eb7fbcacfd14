//! Metric convexity laboratory.
//!
//! Midpoint sets `c(x, y, t)` on concrete metric spaces, Hausdorff
//! distances between their representations, verdict engines that either
//! collect evidence for a convexity property or return a self-checking
//! counterexample, fixed points of generalized hybrid mappings via
//! asymptotic centers, and nested-intersection demonstrations.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod convexsets;
pub mod error;
pub mod fixedpoint;
pub mod hausdorff;
pub mod nested;
pub mod properties;
pub mod sampling;
pub mod spaces;

pub use error::{Error, Result};
