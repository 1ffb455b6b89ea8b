//! Shannon-limit link capacity over a fixed allocation.
//!
//! The cost model's capacity steps are a fixed number of Mbps each. Adding
//! one bit/s/Hz costs close to 3 dB of SNR only at high SNR, so
//! [`step_snr_requirements`] reports the SNR each step actually needs.

use serde::Serialize;

use crate::cost::link_capacity;
use crate::error::{Error, Result};
use crate::params::CostParams;

/// 100 MHz.
pub const DEFAULT_BANDWIDTH_HZ: f64 = 1e8;

/// Capacity in Mbps of `bandwidth_hz` at the given SNR.
pub fn shannon_capacity(bandwidth_hz: f64, snr_db: f64) -> f64 {
    let linear = 10f64.powf(snr_db / 10.0);
    bandwidth_hz * linear.ln_1p() / std::f64::consts::LN_2 / 1e6
}

/// SNR (dB) at which `bandwidth_hz` carries `capacity_mbps`.
pub fn required_snr(capacity_mbps: f64, bandwidth_hz: f64) -> f64 {
    let spectral_efficiency = capacity_mbps * 1e6 / bandwidth_hz;
    10.0 * (spectral_efficiency * std::f64::consts::LN_2)
        .exp_m1()
        .log10()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinkBudget {
    pub bandwidth_hz: f64,
    pub snr_db: f64,
    pub capacity_mbps: f64,
}

impl LinkBudget {
    pub fn new(bandwidth_hz: f64, snr_db: f64) -> Result<Self> {
        if !(bandwidth_hz.is_finite() && bandwidth_hz > 0.0) {
            return Err(Error::domain("bandwidth", "bandwidth must be positive"));
        }
        Ok(LinkBudget {
            bandwidth_hz,
            snr_db,
            capacity_mbps: shannon_capacity(bandwidth_hz, snr_db),
        })
    }

    pub fn for_capacity(capacity_mbps: f64, bandwidth_hz: f64) -> Result<Self> {
        if !(bandwidth_hz.is_finite() && bandwidth_hz > 0.0) {
            return Err(Error::domain("bandwidth", "bandwidth must be positive"));
        }
        if !(capacity_mbps.is_finite() && capacity_mbps > 0.0) {
            return Err(Error::domain("capacity", "capacity must be positive"));
        }
        Ok(LinkBudget {
            bandwidth_hz,
            snr_db: required_snr(capacity_mbps, bandwidth_hz),
            capacity_mbps,
        })
    }

    pub fn spectral_efficiency(&self) -> f64 {
        self.capacity_mbps * 1e6 / self.bandwidth_hz
    }
}

/// SNR requirement of one capacity step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StepSnr {
    pub c_step: u32,
    pub capacity_mbps: f64,
    pub required_snr_db: f64,
    /// Increase over the previous step; `None` for the first.
    pub delta_db: Option<f64>,
}

/// Required SNR at every capacity step under the active capacity mapping.
pub fn step_snr_requirements(
    params: &CostParams,
    bandwidth_hz: f64,
    c_steps: &[u32],
) -> Result<Vec<StepSnr>> {
    let mut out: Vec<StepSnr> = Vec::with_capacity(c_steps.len());
    for &s in c_steps {
        if s < 1 {
            return Err(Error::domain("c_step", "capacity steps start at 1"));
        }
        let budget = LinkBudget::for_capacity(link_capacity(s as f64, params), bandwidth_hz)?;
        let delta_db = out.last().map(|prev| budget.snr_db - prev.required_snr_db);
        out.push(StepSnr {
            c_step: s,
            capacity_mbps: budget.capacity_mbps,
            required_snr_db: budget.snr_db,
            delta_db,
        });
    }
    Ok(out)
}
