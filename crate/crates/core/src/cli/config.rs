use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::convexsets::MidConvention;
use crate::error::{Error, Result};
use crate::fixedpoint::SolverConfig;
use crate::properties::Property;
use crate::sampling::{SamplePlan, DEFAULT_RESOLUTION, DEFAULT_SEED};
use crate::spaces::DEFAULT_TAU;

/// Fully resolved run settings. Every report embeds one.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub convention: MidConvention,
    /// `"exact"` or `"float"`; unset keeps each space's own default.
    pub arithmetic: Option<String>,
    pub grid: GridConfig,
    pub rng: RngConfig,
    pub tolerance: ToleranceConfig,
    pub fp: FpConfig,
    pub nested: NestedConfig,
    /// Expected status per property: `holds`, `fails` or `refused`.
    pub expect: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridConfig {
    pub resolution: usize,
    pub samples: usize,
    /// Half-width of the cube sample points are drawn from.
    pub radius: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        let plan = SamplePlan::default();
        GridConfig { resolution: DEFAULT_RESOLUTION, samples: plan.samples, radius: plan.radius }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RngConfig {
    pub seed: u64,
}

impl Default for RngConfig {
    fn default() -> Self {
        RngConfig { seed: DEFAULT_SEED }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ToleranceConfig {
    pub tau: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig { tau: DEFAULT_TAU }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FpConfig {
    pub orbit_n: usize,
    pub window: usize,
    pub tol: f64,
    pub budget: usize,
    pub rmax: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl Default for FpConfig {
    fn default() -> Self {
        let s = SolverConfig::default();
        FpConfig { orbit_n: s.orbit_n, window: s.window, tol: s.tol, budget: s.budget, rmax: s.rmax, alpha: 1.0, beta: 0.0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NestedConfig {
    pub tol: f64,
}

impl Default for NestedConfig {
    fn default() -> Self {
        NestedConfig { tol: 1e-6 }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn plan(&self) -> SamplePlan {
        SamplePlan::new(self.rng.seed, self.grid.samples)
            .with_resolution(self.grid.resolution)
            .with_radius(self.grid.radius)
    }

    pub fn solver(&self) -> SolverConfig {
        SolverConfig {
            orbit_n: self.fp.orbit_n,
            window: self.fp.window,
            tol: self.fp.tol,
            budget: self.fp.budget,
            rmax: self.fp.rmax,
            plan: self.plan(),
        }
    }

    /// Expected status for a property, `holds` when unset. Keys accept the
    /// same aliases as `--props`.
    pub fn expected(&self, property: Property) -> String {
        self.expect
            .iter()
            .find(|(k, _)| k.parse::<Property>().ok() == Some(property))
            .map(|(_, v)| v.to_ascii_lowercase())
            .unwrap_or_else(|| "holds".into())
    }
}
