//! Fixed points of generalized hybrid mappings via asymptotic centers, and
//! the semigroup of midpoint maps.

mod mapping;
mod semigroup;
mod solver;

pub use mapping::{Domain, Mapping, MappingSpec};
pub use semigroup::{left_reversal_witness, semigroup_compose, MidpointMap, SemigroupReport};
pub use solver::{
    asymptotic_center, coercivity_probe, find_fixed_point, hybrid_sides, orbit, verify_hybrid, AsymptoticFunctional,
    CoercivityReport, FixedPointResult, HybridParams, Orbit, SolverConfig,
};
