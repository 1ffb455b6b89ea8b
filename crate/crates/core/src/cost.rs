//! Cost components and the total-cost objective.
//!
//! Drones and small-cell upgrades are one-off CAPEX. Fronthaul and backhaul
//! capacity leases follow the concave law `a * capacity^b` and are annual OPEX,
//! accumulated linearly over the horizon (no discounting).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{BackhaulVariant, CapacityMapping, CostParams, DesignPoint};

/// Multiplier that appears in the literal capacity formula.
const LITERAL_STEP_MBPS: f64 = 100.0;

/// How the small-cell count enters the cost components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CellCounting {
    /// Fractional provisioning estimate; the only mode the optimizer sees.
    #[default]
    Continuous,
    /// Whole cells, rounded up. For reports only.
    Ceiling,
}

/// Per-component costs at one design point, aggregated over a horizon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostBreakdown {
    pub c_dr: f64,
    pub c_sc: f64,
    pub c_fh_annual: f64,
    pub c_bh_annual: f64,
    pub horizon_years: u32,
    pub tco: f64,
}

impl CostBreakdown {
    pub fn capex(&self) -> f64 {
        self.c_dr + self.c_sc
    }

    pub fn opex_annual(&self) -> f64 {
        self.c_fh_annual + self.c_bh_annual
    }

    pub fn opex_total(&self) -> f64 {
        self.horizon_years as f64 * self.opex_annual()
    }

    /// Fraction of the total attributable to OPEX.
    pub fn opex_share(&self) -> f64 {
        self.opex_total() / self.tco
    }
}

pub(crate) fn check_horizon(horizon_years: u32) -> Result<()> {
    if horizon_years < 1 {
        return Err(Error::domain("horizon", "horizon must be at least 1 year"));
    }
    Ok(())
}

/// Provisioned drone-link capacity (Mbps) for a capacity step index.
pub fn capacity_increment(c_step: f64, params: &CostParams) -> Result<f64> {
    if !(c_step.is_finite() && c_step >= 1.0) {
        return Err(Error::domain(
            "c_step",
            format!("{c_step} violates c_step >= 1"),
        ));
    }
    Ok(link_capacity(c_step, params))
}

pub(crate) fn link_capacity(c_step: f64, params: &CostParams) -> f64 {
    match params.capacity_mapping {
        CapacityMapping::Prose => params.c_base + (c_step - 1.0) * params.c_step_size,
        CapacityMapping::Literal => params.c_base * (c_step - 1.0) * LITERAL_STEP_MBPS,
    }
}

/// d(capacity)/d(c_step); constant under both mappings.
pub(crate) fn link_capacity_slope(params: &CostParams) -> f64 {
    match params.capacity_mapping {
        CapacityMapping::Prose => params.c_step_size,
        CapacityMapping::Literal => params.c_base * LITERAL_STEP_MBPS,
    }
}

/// Ground small cells to upgrade: `k / n_dr^2`. Not rounded.
pub fn small_cell_count(n_dr: f64, params: &CostParams) -> Result<f64> {
    if !(n_dr.is_finite() && n_dr >= 1.0) {
        return Err(Error::domain("n_dr", format!("{n_dr} violates n_dr >= 1")));
    }
    Ok(cells(n_dr, params))
}

fn cells(n_dr: f64, params: &CostParams) -> f64 {
    params.city_area / (std::f64::consts::PI * (params.drone_reach * n_dr).powi(2))
}

fn counted_cells(n_dr: f64, params: &CostParams, counting: CellCounting) -> f64 {
    match counting {
        CellCounting::Continuous => cells(n_dr, params),
        CellCounting::Ceiling => cells(n_dr, params).ceil(),
    }
}

/// Drone CAPEX: radio cost doubles with every capacity step.
pub fn drone_cost(point: DesignPoint, params: &CostParams) -> f64 {
    (point.c_step() - 1.0).exp2() * point.n_dr() * params.drone_unit_cost
}

pub fn small_cell_upgrade_cost(point: DesignPoint, params: &CostParams) -> f64 {
    sc_cost(point, params, cells(point.n_dr(), params))
}

fn sc_cost(point: DesignPoint, params: &CostParams, n_sc: f64) -> f64 {
    n_sc * point.n_dr() * params.smc
}

fn lease(params: &CostParams, capacity: f64) -> f64 {
    params.cost_a * capacity.powf(params.cost_b)
}

pub fn fronthaul_cost_annual(point: DesignPoint, params: &CostParams) -> f64 {
    fh_cost(point, params, cells(point.n_dr(), params))
}

fn fh_cost(point: DesignPoint, params: &CostParams, n_sc: f64) -> f64 {
    let c = link_capacity(point.c_step(), params) * params.fronthaul_multiplier;
    let added = lease(params, params.fhc + point.n_dr() * c) - lease(params, params.fhc);
    n_sc * added.max(0.0)
}

pub fn backhaul_cost_annual(point: DesignPoint, params: &CostParams) -> f64 {
    let c = link_capacity(point.c_step(), params);
    let k = params.cell_constant();
    let increment = match params.backhaul_variant {
        BackhaulVariant::Eq6 => c * k / point.n_dr(),
        BackhaulVariant::Eq5 => point.n_dr() * c * k,
    };
    let added = lease(params, (params.bhc + increment) / params.mux)
        - lease(params, params.bhc / params.mux);
    params.bbu as f64 * added.max(0.0)
}

pub fn tco(point: DesignPoint, params: &CostParams, horizon_years: u32) -> Result<CostBreakdown> {
    tco_with(point, params, horizon_years, CellCounting::Continuous)
}

pub fn tco_with(
    point: DesignPoint,
    params: &CostParams,
    horizon_years: u32,
    counting: CellCounting,
) -> Result<CostBreakdown> {
    check_horizon(horizon_years)?;
    let n_sc = counted_cells(point.n_dr(), params, counting);
    let c_dr = drone_cost(point, params);
    let c_sc = sc_cost(point, params, n_sc);
    let c_fh_annual = fh_cost(point, params, n_sc);
    let c_bh_annual = backhaul_cost_annual(point, params);
    let tco = c_dr + c_sc + horizon_years as f64 * (c_fh_annual + c_bh_annual);
    Ok(CostBreakdown {
        c_dr,
        c_sc,
        c_fh_annual,
        c_bh_annual,
        horizon_years,
        tco,
    })
}

/// One-year total cost written in the collapsed form that is minimized:
///
/// `2^(c_step-1) n d + (k/n) smc + (k/n^2) a [(fhc + n c)^b - fhc^b]
///  + bbu a [((bhc + c k/n)/mux)^b - (bhc/mux)^b]`
///
/// Respects the backhaul variant and capacity mapping in `params`.
pub fn objective(point: DesignPoint, params: &CostParams) -> f64 {
    horizon_objective(point, params, 1.0)
}

pub(crate) fn horizon_objective(point: DesignPoint, params: &CostParams, horizon: f64) -> f64 {
    let n = point.n_dr();
    let k = params.cell_constant();
    let (a, b) = (params.cost_a, params.cost_b);
    let c = link_capacity(point.c_step(), params);
    let c_fh = c * params.fronthaul_multiplier;
    let bh_inc = match params.backhaul_variant {
        BackhaulVariant::Eq6 => c * k / n,
        BackhaulVariant::Eq5 => n * c * k,
    };

    let capex = (point.c_step() - 1.0).exp2() * n * params.drone_unit_cost + k / n * params.smc;
    let fronthaul = k / (n * n) * a * ((params.fhc + n * c_fh).powf(b) - params.fhc.powf(b));
    let backhaul = params.bbu as f64
        * a
        * (((params.bhc + bh_inc) / params.mux).powf(b) - (params.bhc / params.mux).powf(b));
    capex + horizon * (fronthaul + backhaul)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Oracle values below come from a direct evaluation of each formula with
    // the default constants, done outside this crate.
    const K: f64 = 795.774_715_459_476_6;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    fn p71() -> DesignPoint {
        DesignPoint::lattice(7, 1)
    }

    #[test]
    fn capacity_increment_mappings() {
        let mut p = CostParams::default();
        assert_eq!(capacity_increment(1.0, &p).unwrap(), 665.0);
        assert_eq!(capacity_increment(3.0, &p).unwrap(), 865.0);
        p.capacity_mapping = CapacityMapping::Literal;
        assert_eq!(capacity_increment(1.0, &p).unwrap(), 0.0);
        assert_eq!(capacity_increment(2.0, &p).unwrap(), 66_500.0);
        assert!(matches!(
            capacity_increment(0.5, &p),
            Err(Error::Domain {
                field: "c_step",
                ..
            })
        ));
    }

    #[test]
    fn small_cell_count_geometry() {
        let p = CostParams::default();
        assert!(rel(small_cell_count(1.0, &p).unwrap(), K) < 1e-12);
        assert!(rel(small_cell_count(2.0, &p).unwrap(), 198.943_678_864_869_2) < 1e-12);
        assert!(rel(p.cell_constant(), K) < 1e-12);
        assert!(small_cell_count(0.9, &p).is_err());
    }

    #[test]
    fn drone_cost_doubles_per_step() {
        let p = CostParams::default();
        assert_eq!(drone_cost(p71(), &p), 63_840.0);
        assert_eq!(drone_cost(DesignPoint::lattice(7, 2), &p), 127_680.0);
    }

    #[test]
    fn small_cell_upgrade_cost_values() {
        let p = CostParams::default();
        let one = small_cell_upgrade_cost(DesignPoint::lattice(1, 1), &p);
        assert!(rel(one, 2_029_225.524_421_665_4) < 1e-12);
        assert!(rel(small_cell_upgrade_cost(p71(), &p), 289_889.360_631_666_5) < 1e-12);
        let doubled = CostParams {
            smc: 2.0 * p.smc,
            ..p.clone()
        };
        assert!(
            rel(
                small_cell_upgrade_cost(p71(), &doubled),
                2.0 * 289_889.360_631_666_5
            ) < 1e-12
        );
    }

    #[test]
    fn lease_costs_at_reported_minimizer() {
        let p = CostParams::default();
        assert!(rel(fronthaul_cost_annual(p71(), &p), 111_177.770_935_933_9) < 1e-11);
        assert!(rel(backhaul_cost_annual(p71(), &p), 119_790.555_380_516_7) < 1e-11);
        let b = tco(p71(), &p, 1).unwrap();
        assert!(rel(b.tco, 584_697.686_948_117_1) < 1e-12);
    }

    #[test]
    fn null_increment_zeroes_leases() {
        let p = CostParams {
            capacity_mapping: CapacityMapping::Literal,
            ..CostParams::default()
        };
        for variant in [BackhaulVariant::Eq5, BackhaulVariant::Eq6] {
            let p = CostParams {
                backhaul_variant: variant,
                ..p.clone()
            };
            let pt = DesignPoint::lattice(4, 1);
            assert_eq!(fronthaul_cost_annual(pt, &p), 0.0);
            assert_eq!(backhaul_cost_annual(pt, &p), 0.0);
        }
    }

    #[test]
    fn fronthaul_increases_with_capacity() {
        let p = CostParams::default();
        let mut last = 0.0;
        for s in 1..=10 {
            let v = fronthaul_cost_annual(DesignPoint::lattice(5, s), &p);
            assert!(v > last);
            last = v;
        }
    }

    #[test]
    fn eq5_backhaul_exceeds_eq6() {
        let eq6 = CostParams::default();
        let eq5 = CostParams {
            backhaul_variant: BackhaulVariant::Eq5,
            ..eq6.clone()
        };
        for n in 2..=12 {
            for s in 1..=5 {
                let pt = DesignPoint::lattice(n, s);
                assert!(backhaul_cost_annual(pt, &eq5) > backhaul_cost_annual(pt, &eq6));
            }
        }
        // at n_dr = 1 both increments coincide
        let pt = DesignPoint::lattice(1, 2);
        assert!(
            rel(
                backhaul_cost_annual(pt, &eq5),
                backhaul_cost_annual(pt, &eq6)
            ) < 1e-12
        );
    }

    #[test]
    fn horizon_accumulates_opex_only() {
        let p = CostParams::default();
        let one = tco(p71(), &p, 1).unwrap();
        let five = tco(p71(), &p, 5).unwrap();
        assert!(rel(five.tco - one.tco, 4.0 * one.opex_annual()) < 1e-12);
        assert_eq!(one.capex(), five.capex());
        assert!(five.opex_share() > one.opex_share());
        assert!(matches!(
            tco(p71(), &p, 0),
            Err(Error::Domain {
                field: "horizon",
                ..
            })
        ));
    }

    #[test]
    fn objective_matches_one_year_tco_on_lattice() {
        let p = CostParams::default();
        for n in 1..=20 {
            for s in 1..=10 {
                let pt = DesignPoint::lattice(n, s);
                let t = tco(pt, &p, 1).unwrap().tco;
                assert!(rel(objective(pt, &p), t) < 1e-12, "({n},{s})");
            }
        }
    }

    #[test]
    fn objective_increases_with_drone_cost() {
        let p = CostParams::default();
        let pricier = CostParams {
            drone_unit_cost: p.drone_unit_cost + 1.0,
            ..p.clone()
        };
        let pt = DesignPoint::new(3.7, 1.4).unwrap();
        assert!(objective(pt, &pricier) > objective(pt, &p));
    }

    #[test]
    fn ceiling_mode_rounds_cells_up() {
        let p = CostParams::default();
        let cont = tco(p71(), &p, 1).unwrap();
        let ceil = tco_with(p71(), &p, 1, CellCounting::Ceiling).unwrap();
        // 16.24 cells -> 17
        assert!(rel(ceil.c_sc, 17.0 * 7.0 * 2550.0) < 1e-12);
        assert!(ceil.c_fh_annual > cont.c_fh_annual);
        assert_eq!(ceil.c_bh_annual, cont.c_bh_annual);
    }
}
