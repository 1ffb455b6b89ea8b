//! Sweeps over drone cost, capacity step and functional split.

use serde::{Deserialize, Serialize};

use crate::cost::{self, check_horizon, CostBreakdown};
use crate::error::{Error, Result};
use crate::grid::SweepGrid;
use crate::params::{CostParams, DesignPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitName {
    /// PDCP-layer split: heavier drone radio, light fronthaul.
    #[serde(rename = "split2")]
    Split2,
    /// PHY-layer split: RF-only drone radio, heavy fronthaul.
    #[serde(rename = "split7")]
    Split7,
}

impl std::fmt::Display for SplitName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SplitName::Split2 => "SPLIT2",
            SplitName::Split7 => "SPLIT7",
        })
    }
}

/// Split-specific overrides applied on top of a base parameter set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitProfile {
    pub drone_unit_cost: f64,
    pub fronthaul_rate_multiplier: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smc_override: Option<f64>,
}

impl SplitProfile {
    pub fn apply(&self, base: &CostParams) -> CostParams {
        CostParams {
            drone_unit_cost: self.drone_unit_cost,
            fronthaul_multiplier: self.fronthaul_rate_multiplier,
            smc: self.smc_override.unwrap_or(base.smc),
            ..base.clone()
        }
    }

    fn validate(&self, prefix: &str) -> Result<()> {
        if !(self.drone_unit_cost.is_finite() && self.drone_unit_cost >= 0.0) {
            return Err(Error::validation(
                format!("{prefix}.drone_unit_cost"),
                format!("{} must be >= 0", self.drone_unit_cost),
            ));
        }
        if !(self.fronthaul_rate_multiplier.is_finite() && self.fronthaul_rate_multiplier >= 1.0) {
            return Err(Error::validation(
                format!("{prefix}.fronthaul_rate_multiplier"),
                format!("{} must be >= 1", self.fronthaul_rate_multiplier),
            ));
        }
        if let Some(smc) = self.smc_override {
            if !(smc.is_finite() && smc >= 0.0) {
                return Err(Error::validation(
                    format!("{prefix}.smc_override"),
                    format!("{smc} must be >= 0"),
                ));
            }
        }
        Ok(())
    }
}

/// The two profiles compared by [`compare_splits`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitPair {
    pub split2: SplitProfile,
    pub split7: SplitProfile,
}

impl SplitPair {
    /// Assumed values: the PHY split's drone is a third cheaper, its
    /// fronthaul carries 2.5x the link rate and its cell upgrades cost 20%
    /// more. The PDCP split keeps the base constants.
    pub fn fixture() -> Self {
        SplitPair {
            split2: SplitProfile {
                drone_unit_cost: 9120.0,
                fronthaul_rate_multiplier: 1.0,
                smc_override: None,
            },
            split7: SplitProfile {
                drone_unit_cost: 6080.0,
                fronthaul_rate_multiplier: 2.5,
                smc_override: Some(3060.0),
            },
        }
    }

    /// PHY split must not have a pricier drone nor a lighter fronthaul.
    pub fn validate(&self) -> Result<()> {
        self.split2.validate("splits.split2")?;
        self.split7.validate("splits.split7")?;
        if self.split7.fronthaul_rate_multiplier < self.split2.fronthaul_rate_multiplier {
            return Err(Error::validation(
                "splits.split7.fronthaul_rate_multiplier",
                "must be >= the split2 multiplier",
            ));
        }
        if self.split7.drone_unit_cost > self.split2.drone_unit_cost {
            return Err(Error::validation(
                "splits.split7.drone_unit_cost",
                "must be <= the split2 drone unit cost",
            ));
        }
        Ok(())
    }

    pub fn profiles(&self) -> [(SplitName, &SplitProfile); 2] {
        [
            (SplitName::Split2, &self.split2),
            (SplitName::Split7, &self.split7),
        ]
    }
}

fn check_ascending(field: &'static str, values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::domain(field, "axis is empty"));
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain(field, "axis must be strictly ascending"));
    }
    Ok(())
}

fn n_axis(n_values: &[u32]) -> Result<Vec<f64>> {
    if n_values.contains(&0) {
        return Err(Error::domain("n_dr", "drone counts start at 1"));
    }
    let n: Vec<f64> = n_values.iter().map(|&n| n as f64).collect();
    check_ascending("n_dr", &n)?;
    Ok(n)
}

/// TCO at `c_step = 1` over drone unit cost (rows) and drone count (columns).
pub fn sweep_drone_cost(
    params: &CostParams,
    d_values: &[f64],
    n_values: &[u32],
    horizon_years: u32,
) -> Result<SweepGrid> {
    check_horizon(horizon_years)?;
    check_ascending("drone_unit_cost", d_values)?;
    if d_values.iter().any(|d| !(d.is_finite() && *d >= 0.0)) {
        return Err(Error::domain("drone_unit_cost", "values must be >= 0"));
    }
    let n = n_axis(n_values)?;
    SweepGrid::evaluate("d", d_values.to_vec(), "n_dr", n, |d, n| {
        let p = CostParams {
            drone_unit_cost: d,
            ..params.clone()
        };
        cost::tco(DesignPoint::new(n, 1.0)?, &p, horizon_years).map(|b| b.tco)
    })
}

/// TCO over capacity step (rows) and drone count (columns).
pub fn sweep_capacity(
    params: &CostParams,
    c_steps: &[u32],
    n_values: &[u32],
    horizon_years: u32,
) -> Result<SweepGrid> {
    check_horizon(horizon_years)?;
    if c_steps.contains(&0) {
        return Err(Error::domain("c_step", "capacity steps start at 1"));
    }
    let c: Vec<f64> = c_steps.iter().map(|&s| s as f64).collect();
    check_ascending("c_step", &c)?;
    let n = n_axis(n_values)?;
    SweepGrid::evaluate("c_step", c, "n_dr", n, |c, n| {
        cost::tco(DesignPoint::new(n, c)?, params, horizon_years).map(|b| b.tco)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitCost {
    pub split: SplitName,
    pub horizon_years: u32,
    pub breakdown: CostBreakdown,
}

/// Cost breakdowns for both splits at every horizon, split-major.
pub fn compare_splits(
    base: &CostParams,
    splits: &SplitPair,
    point: DesignPoint,
    horizons: &[u32],
) -> Result<Vec<SplitCost>> {
    if horizons.is_empty() {
        return Err(Error::domain("horizon", "no horizons given"));
    }
    let mut out = Vec::with_capacity(2 * horizons.len());
    for (split, profile) in splits.profiles() {
        let params = profile.apply(base);
        for &h in horizons {
            out.push(SplitCost {
                split,
                horizon_years: h,
                breakdown: cost::tco(point, &params, h)?,
            });
        }
    }
    Ok(out)
}
