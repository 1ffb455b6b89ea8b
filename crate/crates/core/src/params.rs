//! Model constants and design points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a capacity step index maps to provisioned link capacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum CapacityMapping {
    /// `c_base + (c_step - 1) * c_step_size`: the base link plus fixed increments.
    #[default]
    Prose,
    /// `c_base * (c_step - 1) * 100`, kept for auditing the printed formula.
    Literal,
}

/// Which backhaul increment form is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum BackhaulVariant {
    /// Increment `c * k / n_dr`, the form that appears in the optimized objective.
    #[default]
    Eq6,
    /// Increment `n_dr * c * k`, the form printed with the component definition.
    Eq5,
}

impl std::fmt::Display for CapacityMapping {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CapacityMapping::Prose => "prose",
            CapacityMapping::Literal => "literal",
        })
    }
}

impl std::fmt::Display for BackhaulVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BackhaulVariant::Eq6 => "eq6",
            BackhaulVariant::Eq5 => "eq5",
        })
    }
}

/// All constants of the cost model. Units: km, km², euros, Mbps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CostParams {
    pub city_area: f64,
    /// Coverage radius contributed by each drone in the relay chain.
    pub drone_reach: f64,
    pub drone_unit_cost: f64,
    /// Lease-curve coefficient `a` in `a * capacity^b`.
    pub cost_a: f64,
    /// Lease-curve exponent `b`, strictly between 0 and 1.
    pub cost_b: f64,
    /// Upgrade cost per ground small cell.
    pub smc: f64,
    /// Existing fronthaul capacity per small cell.
    pub fhc: f64,
    /// Existing backhaul capacity per cell.
    pub bhc: f64,
    pub bbu: u32,
    pub mux: f64,
    pub c_base: f64,
    pub c_step_size: f64,
    /// Scales the drone-link capacity carried on fronthaul (functional split burden).
    pub fronthaul_multiplier: f64,
    pub backhaul_variant: BackhaulVariant,
    pub capacity_mapping: CapacityMapping,
}

impl Default for CostParams {
    fn default() -> Self {
        CostParams {
            city_area: 100.0,
            drone_reach: 0.2,
            drone_unit_cost: 9120.0,
            cost_a: 3840.0,
            cost_b: 0.2,
            smc: 2550.0,
            fhc: 799.0,
            bhc: 833.0,
            bbu: 6,
            mux: 1.5,
            c_base: 665.0,
            c_step_size: 100.0,
            fronthaul_multiplier: 1.0,
            backhaul_variant: BackhaulVariant::Eq6,
            capacity_mapping: CapacityMapping::Prose,
        }
    }
}

fn check(field: &str, value: f64, ok: bool, rule: &str) -> Result<()> {
    if value.is_finite() && ok {
        Ok(())
    } else {
        Err(Error::validation(field, format!("{value} violates {rule}")))
    }
}

impl CostParams {
    /// Checks every range invariant, naming the first offending field.
    pub fn validate(&self) -> Result<()> {
        check(
            "city_area",
            self.city_area,
            self.city_area > 0.0,
            "city_area > 0",
        )?;
        check(
            "drone_reach",
            self.drone_reach,
            self.drone_reach > 0.0,
            "drone_reach > 0",
        )?;
        check(
            "drone_unit_cost",
            self.drone_unit_cost,
            self.drone_unit_cost >= 0.0,
            "drone_unit_cost >= 0",
        )?;
        check("cost_a", self.cost_a, self.cost_a > 0.0, "cost_a > 0")?;
        check(
            "cost_b",
            self.cost_b,
            self.cost_b > 0.0 && self.cost_b < 1.0,
            "0 < cost_b < 1",
        )?;
        check("smc", self.smc, self.smc >= 0.0, "smc >= 0")?;
        check("fhc", self.fhc, self.fhc >= 0.0, "fhc >= 0")?;
        check("bhc", self.bhc, self.bhc >= 0.0, "bhc >= 0")?;
        if self.bbu < 1 {
            return Err(Error::validation("bbu", "0 violates bbu >= 1"));
        }
        check("mux", self.mux, self.mux >= 1.0, "mux >= 1")?;
        check("c_base", self.c_base, self.c_base > 0.0, "c_base > 0")?;
        check(
            "c_step_size",
            self.c_step_size,
            self.c_step_size > 0.0,
            "c_step_size > 0",
        )?;
        check(
            "fronthaul_multiplier",
            self.fronthaul_multiplier,
            self.fronthaul_multiplier >= 1.0,
            "fronthaul_multiplier >= 1",
        )?;
        Ok(())
    }

    /// `k = city_area / (pi * drone_reach^2)`, the small-cell count for a single drone.
    pub fn cell_constant(&self) -> f64 {
        self.city_area / (std::f64::consts::PI * self.drone_reach * self.drone_reach)
    }
}

/// A candidate `(n_dr, c_step)` pair. Both coordinates are at least 1.
///
/// Coordinates are continuous; integer lattice points are just points whose
/// coordinates happen to be whole numbers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DesignPoint {
    n_dr: f64,
    c_step: f64,
}

impl DesignPoint {
    pub fn new(n_dr: f64, c_step: f64) -> Result<Self> {
        if !(n_dr.is_finite() && n_dr >= 1.0) {
            return Err(Error::domain("n_dr", format!("{n_dr} violates n_dr >= 1")));
        }
        if !(c_step.is_finite() && c_step >= 1.0) {
            return Err(Error::domain(
                "c_step",
                format!("{c_step} violates c_step >= 1"),
            ));
        }
        Ok(DesignPoint { n_dr, c_step })
    }

    /// Lattice point constructor; panics on zero coordinates.
    pub fn lattice(n_dr: u32, c_step: u32) -> Self {
        assert!(n_dr >= 1 && c_step >= 1, "lattice coordinates start at 1");
        DesignPoint {
            n_dr: n_dr as f64,
            c_step: c_step as f64,
        }
    }

    /// Clamps arbitrary coordinates into the feasible box.
    pub(crate) fn projected(n_dr: f64, c_step: f64, upper: Option<(f64, f64)>) -> Self {
        let (n_hi, c_hi) = upper.unwrap_or((f64::INFINITY, f64::INFINITY));
        DesignPoint {
            n_dr: n_dr.max(1.0).min(n_hi),
            c_step: c_step.max(1.0).min(c_hi),
        }
    }

    pub fn n_dr(&self) -> f64 {
        self.n_dr
    }

    pub fn c_step(&self) -> f64 {
        self.c_step
    }

    pub fn is_integer(&self) -> bool {
        self.n_dr.fract() == 0.0 && self.c_step.fract() == 0.0
    }
}
