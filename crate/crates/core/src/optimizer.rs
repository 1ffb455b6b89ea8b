//! Projected cyclic coordinate descent over `(n_dr, c_step)`, plus the
//! exhaustive lattice search used to check it.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::cost::{self, check_horizon, link_capacity, link_capacity_slope};
use crate::error::{Error, Result};
use crate::grid::SweepGrid;
use crate::params::{BackhaulVariant, CostParams, DesignPoint};

/// Backtracking gives up on a coordinate once the trial step drops below this.
pub const MIN_STEP: f64 = 1e-6;

/// A smooth function on the feasible region `n_dr >= 1, c_step >= 1`.
pub trait Objective {
    fn value(&self, point: DesignPoint) -> f64;

    /// Gradient `(d/dn_dr, d/dc_step)`. Defaults to central differences,
    /// switching to a forward difference where the lower bound is within reach.
    fn gradient(&self, point: DesignPoint, fd_epsilon: f64) -> Result<[f64; 2]> {
        let (n, c) = (point.n_dr(), point.c_step());
        let diff = |x: f64, along_n: bool| -> Result<f64> {
            let at = |v: f64| {
                let p = if along_n {
                    DesignPoint::new(v, c)
                } else {
                    DesignPoint::new(n, v)
                };
                p.map(|p| self.value(p))
            };
            if x - fd_epsilon >= 1.0 {
                Ok((at(x + fd_epsilon)? - at(x - fd_epsilon)?) / (2.0 * fd_epsilon))
            } else {
                Ok((at(x + fd_epsilon)? - at(x)?) / fd_epsilon)
            }
        };
        Ok([diff(n, true)?, diff(c, false)?])
    }
}

/// Total cost over a horizon, with its analytic gradient.
#[derive(Debug, Clone, Copy)]
pub struct TcoObjective<'a> {
    params: &'a CostParams,
    horizon_years: u32,
}

impl<'a> TcoObjective<'a> {
    pub fn new(params: &'a CostParams, horizon_years: u32) -> Result<Self> {
        check_horizon(horizon_years)?;
        Ok(TcoObjective {
            params,
            horizon_years,
        })
    }
}

impl Objective for TcoObjective<'_> {
    fn value(&self, point: DesignPoint) -> f64 {
        cost::horizon_objective(point, self.params, self.horizon_years as f64)
    }

    fn gradient(&self, point: DesignPoint, _fd_epsilon: f64) -> Result<[f64; 2]> {
        tco_gradient(point, self.params, self.horizon_years as f64)
    }
}

/// Gradient of the one-year objective, derived by hand from its closed form.
pub fn analytic_gradient(point: DesignPoint, params: &CostParams) -> Result<(f64, f64)> {
    let [gn, gc] = tco_gradient(point, params, 1.0)?;
    Ok((gn, gc))
}

fn tco_gradient(point: DesignPoint, params: &CostParams, horizon: f64) -> Result<[f64; 2]> {
    let n = point.n_dr();
    let k = params.cell_constant();
    let (a, b) = (params.cost_a, params.cost_b);
    let m = params.fronthaul_multiplier;
    let c = link_capacity(point.c_step(), params);
    let dc = link_capacity_slope(params);
    let doubling = (point.c_step() - 1.0).exp2();

    // drones: 2^(s-1) n d
    let dr_n = doubling * params.drone_unit_cost;
    let dr_c = doubling * std::f64::consts::LN_2 * n * params.drone_unit_cost;

    // small cells: k smc / n
    let sc_n = -k * params.smc / (n * n);

    // fronthaul: (k a / n^2) [X^b - fhc^b], X = fhc + n c m
    let x = params.fhc + n * c * m;
    let lease_fh = x.powf(b) - params.fhc.powf(b);
    let slope_fh = b * x.powf(b - 1.0);
    let fh_n = -2.0 * k * a / (n * n * n) * lease_fh + k * a / (n * n) * slope_fh * c * m;
    let fh_c = k * a / n * slope_fh * m * dc;

    // backhaul: bbu a [Y^b - (bhc/mux)^b]
    let bbu_a = params.bbu as f64 * a;
    let (bh_n, bh_c) = match params.backhaul_variant {
        BackhaulVariant::Eq6 => {
            let y = (params.bhc + c * k / n) / params.mux;
            let s = bbu_a * b * y.powf(b - 1.0) / params.mux;
            (-s * c * k / (n * n), s * k * dc / n)
        }
        BackhaulVariant::Eq5 => {
            let y = (params.bhc + n * c * k) / params.mux;
            let s = bbu_a * b * y.powf(b - 1.0) / params.mux;
            (s * c * k, s * n * k * dc)
        }
    };

    let g = [
        dr_n + sc_n + horizon * (fh_n + bh_n),
        dr_c + horizon * (fh_c + bh_c),
    ];
    if g.iter().all(|v| v.is_finite()) {
        Ok(g)
    } else {
        Err(Error::domain(
            "point",
            format!(
                "gradient undefined at ({n}, {}) (zero capacity with zero existing capacity)",
                point.c_step()
            ),
        ))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DescentConfig {
    /// Initial trial step of every coordinate move.
    pub step: f64,
    /// Stop once the projected gradient's max-norm falls to this fraction of its starting value.
    pub grad_tolerance: f64,
    /// Maximum number of full coordinate cycles.
    pub max_iterations: usize,
    /// Half-width for objectives without an analytic gradient.
    pub fd_epsilon: f64,
    /// Optional inclusive upper corner of the search box.
    pub upper_bounds: Option<(f64, f64)>,
}

impl Default for DescentConfig {
    fn default() -> Self {
        DescentConfig {
            step: 0.1,
            grad_tolerance: 1e-8,
            max_iterations: 10_000,
            fd_epsilon: 1e-5,
            upper_bounds: None,
        }
    }
}

impl DescentConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |field: &'static str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::domain(field, format!("{v} must be positive")))
            }
        };
        positive("step", self.step)?;
        positive("grad_tolerance", self.grad_tolerance)?;
        positive("fd_epsilon", self.fd_epsilon)?;
        if self.max_iterations < 1 {
            return Err(Error::domain("max_iterations", "must be at least 1"));
        }
        if let Some((n_hi, c_hi)) = self.upper_bounds {
            if !(n_hi >= 1.0 && c_hi >= 1.0) {
                return Err(Error::domain(
                    "upper_bounds",
                    format!("({n_hi}, {c_hi}) excludes the feasible corner (1, 1)"),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceStep {
    pub point: DesignPoint,
    pub objective: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimizationResult {
    pub minimizer_continuous: DesignPoint,
    pub minimizer_integer: DesignPoint,
    /// Objective at the continuous minimizer.
    pub objective_value: f64,
    pub integer_objective_value: f64,
    /// Starting point followed by every accepted move.
    pub trace: Vec<TraceStep>,
    pub iterations: usize,
    pub converged: bool,
}

fn projected_gradient_norm(g: [f64; 2], point: DesignPoint, upper: Option<(f64, f64)>) -> f64 {
    let (n_hi, c_hi) = upper.unwrap_or((f64::INFINITY, f64::INFINITY));
    let coords = [(point.n_dr(), n_hi), (point.c_step(), c_hi)];
    g.iter()
        .zip(coords)
        .map(|(&gi, (x, hi))| {
            let pinned = (x <= 1.0 && gi > 0.0) || (x >= hi && gi < 0.0);
            if pinned {
                0.0
            } else {
                gi.abs()
            }
        })
        .fold(0.0, f64::max)
}

fn with_coordinate(
    point: DesignPoint,
    coord: usize,
    value: f64,
    upper: Option<(f64, f64)>,
) -> DesignPoint {
    if coord == 0 {
        DesignPoint::projected(value, point.c_step(), upper)
    } else {
        DesignPoint::projected(point.n_dr(), value, upper)
    }
}

/// Minimizes `objective` by cycling over the two coordinates.
///
/// Each move steps against the sign of the partial derivative, halving the
/// trial step until the objective strictly decreases, then projects back onto
/// the feasible box. The loop ends when the projected gradient is small
/// relative to where it started or when a whole cycle makes no progress at
/// the [`MIN_STEP`] resolution. The continuous result is then rounded and
/// the best lattice point of its 3x3 neighborhood is kept.
pub fn coordinate_descent<O: Objective + ?Sized>(
    start: DesignPoint,
    objective: &O,
    config: &DescentConfig,
) -> Result<OptimizationResult> {
    config.validate()?;
    let upper = config.upper_bounds;
    let mut x = DesignPoint::projected(start.n_dr(), start.c_step(), upper);
    let mut fx = objective.value(x);
    let mut trace = vec![TraceStep {
        point: x,
        objective: fx,
    }];

    let g0 = projected_gradient_norm(objective.gradient(x, config.fd_epsilon)?, x, upper);
    let mut converged = g0 == 0.0;
    let mut iterations = 0;

    while !converged && iterations < config.max_iterations {
        iterations += 1;
        let mut moved = false;
        for coord in 0..2 {
            let g = objective.gradient(x, config.fd_epsilon)?[coord];
            if g == 0.0 {
                continue;
            }
            let current = if coord == 0 { x.n_dr() } else { x.c_step() };
            let mut t = config.step;
            while t >= MIN_STEP {
                let candidate = with_coordinate(x, coord, current - g.signum() * t, upper);
                if candidate == x {
                    break;
                }
                let fc = objective.value(candidate);
                if fc < fx {
                    x = candidate;
                    fx = fc;
                    trace.push(TraceStep {
                        point: x,
                        objective: fx,
                    });
                    moved = true;
                    break;
                }
                t *= 0.5;
            }
        }
        let g = objective.gradient(x, config.fd_epsilon)?;
        if !moved || projected_gradient_norm(g, x, upper) <= config.grad_tolerance * g0 {
            converged = true;
        }
    }

    let (minimizer_integer, integer_objective_value) = refine_on_lattice(x, objective, upper);
    Ok(OptimizationResult {
        minimizer_continuous: x,
        minimizer_integer,
        objective_value: fx,
        integer_objective_value,
        trace,
        iterations,
        converged,
    })
}

/// Best lattice point in the 3x3 block around the rounded continuous point.
fn refine_on_lattice<O: Objective + ?Sized>(
    x: DesignPoint,
    objective: &O,
    upper: Option<(f64, f64)>,
) -> (DesignPoint, f64) {
    let (n_hi, c_hi) = upper
        .map(|(n, c)| (n.floor(), c.floor()))
        .unwrap_or((f64::INFINITY, f64::INFINITY));
    let n0 = x.n_dr().round().clamp(1.0, n_hi);
    let c0 = x.c_step().round().clamp(1.0, c_hi);
    let mut best: Option<(DesignPoint, f64)> = None;
    for dn in [-1.0, 0.0, 1.0] {
        for dc in [-1.0, 0.0, 1.0] {
            let (n, c) = (n0 + dn, c0 + dc);
            if n < 1.0 || c < 1.0 || n > n_hi || c > c_hi {
                continue;
            }
            let p = DesignPoint::projected(n, c, None);
            let v = objective.value(p);
            if best.is_none_or(|(_, bv)| v < bv) {
                best = Some((p, v));
            }
        }
    }
    best.expect("rounded point is always in its own neighborhood")
}

/// Exhaustive lattice minimum.
#[derive(Debug, Clone, PartialEq)]
pub struct GridOptimum {
    pub point: DesignPoint,
    pub value: f64,
    /// Rows are `c_step`, columns `n_dr`.
    pub grid: SweepGrid,
}

/// Evaluates the horizon TCO at every lattice point of the box.
///
/// Ties go to the smaller `n_dr`, then the smaller `c_step`.
pub fn grid_search(
    params: &CostParams,
    n_range: RangeInclusive<u32>,
    c_range: RangeInclusive<u32>,
    horizon_years: u32,
) -> Result<GridOptimum> {
    check_horizon(horizon_years)?;
    lattice_search(n_range, c_range, |p| {
        cost::tco(p, params, horizon_years).map(|b| b.tco)
    })
}

/// [`grid_search`] for an arbitrary objective.
pub fn grid_search_objective<O: Objective + Sync + ?Sized>(
    objective: &O,
    n_range: RangeInclusive<u32>,
    c_range: RangeInclusive<u32>,
) -> Result<GridOptimum> {
    lattice_search(n_range, c_range, |p| Ok(objective.value(p)))
}

fn lattice_search<F>(
    n_range: RangeInclusive<u32>,
    c_range: RangeInclusive<u32>,
    f: F,
) -> Result<GridOptimum>
where
    F: Fn(DesignPoint) -> Result<f64> + Sync,
{
    if n_range.is_empty() || *n_range.start() < 1 {
        return Err(Error::domain(
            "n_range",
            format!("{n_range:?} is empty or below 1"),
        ));
    }
    if c_range.is_empty() || *c_range.start() < 1 {
        return Err(Error::domain(
            "c_range",
            format!("{c_range:?} is empty or below 1"),
        ));
    }
    let columns: Vec<f64> = n_range.map(f64::from).collect();
    let rows: Vec<f64> = c_range.map(f64::from).collect();
    let grid = SweepGrid::evaluate("c_step", rows, "n_dr", columns, |c, n| {
        f(DesignPoint::projected(n, c, None))
    })?;

    let mut best = (0, 0);
    for j in 0..grid.columns.len() {
        for i in 0..grid.rows.len() {
            if grid.value(i, j) < grid.value(best.0, best.1) {
                best = (i, j);
            }
        }
    }
    Ok(GridOptimum {
        point: DesignPoint::projected(grid.columns[best.1], grid.rows[best.0], None),
        value: grid.value(best.0, best.1),
        grid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Bowl;

    impl Objective for Bowl {
        fn value(&self, p: DesignPoint) -> f64 {
            (p.n_dr() - 3.0).powi(2) + (p.c_step() - 2.0).powi(2)
        }
    }

    struct Ramp;

    impl Objective for Ramp {
        fn value(&self, p: DesignPoint) -> f64 {
            2.0 * p.n_dr() + 5.0 * p.c_step()
        }
    }

    #[test]
    fn quadratic_bowl_reaches_center() {
        let r = coordinate_descent(DesignPoint::lattice(1, 1), &Bowl, &DescentConfig::default())
            .unwrap();
        assert!(r.converged);
        assert!((r.minimizer_continuous.n_dr() - 3.0).abs() < 1e-3);
        assert!((r.minimizer_continuous.c_step() - 2.0).abs() < 1e-3);
        assert_eq!(r.minimizer_integer, DesignPoint::lattice(3, 2));
    }

    #[test]
    fn increasing_objective_stays_at_corner() {
        let r = coordinate_descent(DesignPoint::lattice(1, 1), &Ramp, &DescentConfig::default())
            .unwrap();
        assert!(r.converged);
        assert_eq!(r.minimizer_continuous, DesignPoint::lattice(1, 1));
        assert_eq!(r.minimizer_integer, DesignPoint::lattice(1, 1));
        assert_eq!(r.trace.len(), 1);
    }

    #[test]
    fn upper_bounds_are_respected() {
        let cfg = DescentConfig {
            upper_bounds: Some((2.5, 1.5)),
            ..DescentConfig::default()
        };
        let r = coordinate_descent(DesignPoint::lattice(1, 1), &Bowl, &cfg).unwrap();
        assert!((r.minimizer_continuous.n_dr() - 2.5).abs() < 1e-12);
        assert!((r.minimizer_continuous.c_step() - 1.5).abs() < 1e-12);
        assert_eq!(r.minimizer_integer, DesignPoint::lattice(2, 1));
    }

    #[test]
    fn iteration_cap_reports_non_convergence() {
        let cfg = DescentConfig {
            max_iterations: 3,
            ..DescentConfig::default()
        };
        let r = coordinate_descent(DesignPoint::lattice(1, 1), &Bowl, &cfg).unwrap();
        assert!(!r.converged);
        assert_eq!(r.iterations, 3);
    }

    #[test]
    fn config_validation() {
        let bad = DescentConfig {
            step: 0.0,
            ..DescentConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = DescentConfig {
            upper_bounds: Some((0.5, 3.0)),
            ..DescentConfig::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn n_partial_negative_at_corner() {
        let (gn, gc) =
            analytic_gradient(DesignPoint::lattice(1, 1), &CostParams::default()).unwrap();
        assert!(gn < 0.0);
        assert!(gc > 0.0);
    }

    #[test]
    fn n_partial_tends_to_drone_cost() {
        let p = CostParams::default();
        for s in [1.0, 2.0, 3.5] {
            let (gn, _) = analytic_gradient(DesignPoint::new(1e7, s).unwrap(), &p).unwrap();
            let limit = (s - 1.0f64).exp2() * p.drone_unit_cost;
            assert!((gn - limit).abs() / limit < 1e-6, "{gn} vs {limit}");
        }
    }

    #[test]
    fn grid_search_degenerate_and_empty() {
        let p = CostParams::default();
        let g = grid_search(&p, 1..=1, 1..=1, 1).unwrap();
        assert_eq!(g.point, DesignPoint::lattice(1, 1));
        assert_eq!(g.grid.cells.len(), 1);
        #[allow(clippy::reversed_empty_ranges)]
        let empty = grid_search(&p, 3..=2, 1..=1, 1);
        assert!(empty.is_err());
        assert!(grid_search(&p, 0..=3, 1..=1, 1).is_err());
        assert!(grid_search(&p, 1..=3, 1..=1, 0).is_err());
    }

    #[test]
    fn grid_search_minimum_dominates() {
        let g = grid_search(&CostParams::default(), 1..=30, 1..=10, 1).unwrap();
        for row in &g.grid.cells {
            for v in row {
                assert!(g.value <= *v);
            }
        }
    }

    #[test]
    fn grid_ties_prefer_smaller_n_then_c() {
        struct Flat;
        impl Objective for Flat {
            fn value(&self, _: DesignPoint) -> f64 {
                1.0
            }
        }
        let g = grid_search_objective(&Flat, 2..=5, 3..=4).unwrap();
        assert_eq!(g.point, DesignPoint::lattice(2, 3));
    }
}
