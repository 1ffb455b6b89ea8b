//! Scenario files: JSON with the top-level objects `metadata`, `params`,
//! `splits` and `sweeps`. Every key is optional and falls back to the
//! built-in baseline; unknown keys are rejected. An explicit
//! `"splits": null` removes the split profiles.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::CostParams;
use crate::sensitivity::SplitPair;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Metadata {
    pub name: String,
    pub description: String,
}

impl Default for Metadata {
    fn default() -> Self {
        Metadata {
            name: "baseline".to_string(),
            description: "Baseline constants: 100 km2 city, 9120 EUR drones, 665 Mbps base link"
                .to_string(),
        }
    }
}

/// Axes used by the sweep and compare commands when none are given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepAxes {
    pub drone_costs: Vec<f64>,
    pub n_values: Vec<u32>,
    pub c_steps: Vec<u32>,
    pub horizons: Vec<u32>,
}

impl Default for SweepAxes {
    fn default() -> Self {
        SweepAxes {
            drone_costs: vec![9120.0, 13120.0, 17120.0, 21120.0],
            n_values: (1..=15).collect(),
            c_steps: (1..=10).collect(),
            horizons: vec![1, 5],
        }
    }
}

fn strictly_ascending<T: PartialOrd>(v: &[T]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl SweepAxes {
    pub fn validate(&self) -> Result<()> {
        let fail = |field: &str, msg: &str| Err(Error::validation(format!("sweeps.{field}"), msg));
        if self.drone_costs.is_empty() || !strictly_ascending(&self.drone_costs) {
            return fail("drone_costs", "must be non-empty and strictly ascending");
        }
        if self
            .drone_costs
            .iter()
            .any(|d| !(d.is_finite() && *d >= 0.0))
        {
            return fail("drone_costs", "values must be >= 0");
        }
        for (field, axis) in [
            ("n_values", &self.n_values),
            ("c_steps", &self.c_steps),
            ("horizons", &self.horizons),
        ] {
            if axis.is_empty() || !strictly_ascending(axis) {
                return fail(field, "must be non-empty and strictly ascending");
            }
            if axis[0] < 1 {
                return fail(field, "values must be >= 1");
            }
        }
        Ok(())
    }
}

fn fixture_splits() -> Option<SplitPair> {
    Some(SplitPair::fixture())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default)]
    pub metadata: Metadata,
    #[serde(default)]
    pub params: CostParams,
    #[serde(default = "fixture_splits")]
    pub splits: Option<SplitPair>,
    #[serde(default)]
    pub sweeps: SweepAxes,
}

impl Default for Scenario {
    fn default() -> Self {
        default_scenario()
    }
}

/// Baseline constants with the fixture split profiles and default sweep axes.
pub fn default_scenario() -> Scenario {
    Scenario {
        metadata: Metadata::default(),
        params: CostParams::default(),
        splits: fixture_splits(),
        sweeps: SweepAxes::default(),
    }
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if let Some(splits) = &self.splits {
            splits.validate()?;
        }
        self.sweeps.validate()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario is always serializable")
    }

    pub fn splits(&self) -> Result<&SplitPair> {
        self.splits
            .as_ref()
            .ok_or_else(|| Error::validation("splits", "scenario defines no split profiles"))
    }
}

/// Parses and validates scenario text.
pub fn load_scenario_str(text: &str) -> Result<Scenario> {
    let scenario: Scenario = serde_json::from_str(text).map_err(classify)?;
    scenario.validate()?;
    Ok(scenario)
}

pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_scenario_str(&text)
}

fn classify(err: serde_json::Error) -> Error {
    let message = err.to_string();
    if message.starts_with("unknown field") {
        Error::UnknownKey { message }
    } else {
        Error::Parse {
            line: err.line(),
            column: err.column(),
            message,
        }
    }
}
