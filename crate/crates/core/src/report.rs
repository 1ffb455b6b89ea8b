//! Tabular reports behind the command-line tool.
//!
//! Every command produces a [`ReportTable`] of preformatted strings, which is
//! emitted as CSV (provenance as trailing `#` lines) or JSON. Euro amounts are
//! rounded half-up to cents here and nowhere else.

use serde::Serialize;

use crate::cost::{self, CellCounting};
use crate::error::{Error, Result};
use crate::link;
use crate::optimizer::{self, DescentConfig, Objective, TcoObjective};
use crate::params::DesignPoint;
use crate::scenario::{Scenario, SweepAxes};
use crate::sensitivity;

pub const TOOL: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub scenario: String,
    pub backhaul_variant: String,
    pub capacity_mapping: String,
    pub tool: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Provenance {
    pub fn of(scenario: &Scenario) -> Self {
        Provenance {
            scenario: scenario.metadata.name.clone(),
            backhaul_variant: scenario.params.backhaul_variant.to_string(),
            capacity_mapping: scenario.params.capacity_mapping.to_string(),
            tool: TOOL.to_string(),
            notes: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl ReportTable {
    fn new(columns: &[&str], provenance: Provenance) -> Self {
        ReportTable {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            provenance,
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Index of a column by header name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Cell parsed as a number.
    pub fn number(&self, row: usize, column: &str) -> Option<f64> {
        self.rows.get(row)?.get(self.column(column)?)?.parse().ok()
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        let p = &self.provenance;
        out.push_str(&format!("# scenario: {}\n", p.scenario));
        out.push_str(&format!("# backhaul_variant: {}\n", p.backhaul_variant));
        out.push_str(&format!("# capacity_mapping: {}\n", p.capacity_mapping));
        out.push_str(&format!("# tool: {}\n", p.tool));
        for note in &p.notes {
            out.push_str(&format!("# note: {note}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("tables are always serializable");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// Fixed-point formatting with half-up rounding (ties away from zero).
pub fn format_fixed(value: f64, decimals: u32) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    let scale = 10f64.powi(decimals as i32);
    let scaled = (value.abs() * scale + 0.5).floor();
    if scaled >= 1e17 {
        return format!("{value:.*}", decimals as usize);
    }
    let units = scaled as u128;
    let sign = if value < 0.0 && units > 0 { "-" } else { "" };
    if decimals == 0 {
        return format!("{sign}{units}");
    }
    let div = 10u128.pow(decimals);
    format!(
        "{sign}{}.{:0width$}",
        units / div,
        units % div,
        width = decimals as usize
    )
}

pub fn euros(value: f64) -> String {
    format_fixed(value, 2)
}

/// Coordinates print as integers when whole.
fn coord(value: f64) -> String {
    if value.fract() == 0.0 {
        format!("{value}")
    } else {
        format_fixed(value, 6)
    }
}

/// One-row cost breakdown.
pub fn cmd_evaluate(
    scenario: &Scenario,
    n_dr: f64,
    c_step: f64,
    horizon_years: u32,
    counting: CellCounting,
) -> Result<ReportTable> {
    let point = DesignPoint::new(n_dr, c_step)?;
    let b = cost::tco_with(point, &scenario.params, horizon_years, counting)?;
    let mut provenance = Provenance::of(scenario);
    if counting == CellCounting::Ceiling {
        provenance
            .notes
            .push("small-cell count rounded up".to_string());
    }
    let mut table = ReportTable::new(
        &[
            "n_dr",
            "c_step",
            "horizon",
            "C_dr",
            "C_sc",
            "C_fh_annual",
            "C_bh_annual",
            "CAPEX",
            "OPEX_total",
            "TCO",
        ],
        provenance,
    );
    table.push(vec![
        coord(n_dr),
        coord(c_step),
        horizon_years.to_string(),
        euros(b.c_dr),
        euros(b.c_sc),
        euros(b.c_fh_annual),
        euros(b.c_bh_annual),
        euros(b.capex()),
        euros(b.opex_total()),
        euros(b.tco),
    ]);
    Ok(table)
}

/// Inclusive lattice box searched by the optimizer and its oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBox {
    pub n_max: u32,
    pub c_max: u32,
}

impl Default for SearchBox {
    fn default() -> Self {
        SearchBox {
            n_max: 30,
            c_max: 10,
        }
    }
}

const OPTIMIZE_COLUMNS: [&str; 14] = [
    "horizon",
    "descent_n_dr",
    "descent_c_step",
    "descent_TCO",
    "descent_int_n_dr",
    "descent_int_c_step",
    "descent_int_TCO",
    "oracle_n_dr",
    "oracle_c_step",
    "oracle_TCO",
    "iterations",
    "trace_len",
    "converged",
    "agreement",
];

/// Descent from `(1, 1)` compared against exhaustive search of the box.
pub fn cmd_optimize(
    scenario: &Scenario,
    horizon_years: u32,
    bounds: SearchBox,
) -> Result<ReportTable> {
    let objective = TcoObjective::new(&scenario.params, horizon_years)?;
    let mut table = cmd_optimize_objective(&objective, bounds, Provenance::of(scenario))?;
    table.rows[0][0] = horizon_years.to_string();
    Ok(table)
}

/// [`cmd_optimize`] over any objective; the horizon column is left blank.
pub fn cmd_optimize_objective<O: Objective + Sync + ?Sized>(
    objective: &O,
    bounds: SearchBox,
    provenance: Provenance,
) -> Result<ReportTable> {
    if bounds.n_max < 1 || bounds.c_max < 1 {
        return Err(Error::domain("bounds", "search box must contain (1, 1)"));
    }
    let config = DescentConfig {
        upper_bounds: Some((bounds.n_max as f64, bounds.c_max as f64)),
        ..DescentConfig::default()
    };
    let result = optimizer::coordinate_descent(DesignPoint::lattice(1, 1), objective, &config)?;
    let oracle = optimizer::grid_search_objective(objective, 1..=bounds.n_max, 1..=bounds.c_max)?;

    let mut table = ReportTable::new(&OPTIMIZE_COLUMNS, provenance);
    let cont = result.minimizer_continuous;
    let int = result.minimizer_integer;
    table.push(vec![
        String::new(),
        coord(cont.n_dr()),
        coord(cont.c_step()),
        euros(result.objective_value),
        coord(int.n_dr()),
        coord(int.c_step()),
        euros(result.integer_objective_value),
        coord(oracle.point.n_dr()),
        coord(oracle.point.c_step()),
        euros(oracle.value),
        result.iterations.to_string(),
        result.trace.len().to_string(),
        result.converged.to_string(),
        (int == oracle.point).to_string(),
    ]);
    Ok(table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepMode {
    DroneCost,
    Capacity,
}

/// Long-form sweep: one row per cell, row-major, ascending.
pub fn cmd_sweep(
    scenario: &Scenario,
    mode: SweepMode,
    horizon_years: u32,
    axes: &SweepAxes,
) -> Result<ReportTable> {
    let (grid, label) = match mode {
        SweepMode::DroneCost => (
            sensitivity::sweep_drone_cost(
                &scenario.params,
                &axes.drone_costs,
                &axes.n_values,
                horizon_years,
            )?,
            "d",
        ),
        SweepMode::Capacity => (
            sensitivity::sweep_capacity(
                &scenario.params,
                &axes.c_steps,
                &axes.n_values,
                horizon_years,
            )?,
            "c_step",
        ),
    };
    let mut table = ReportTable::new(
        &[label, "n_dr", "TCO", "is_row_argmin"],
        Provenance::of(scenario),
    );
    for (i, row_value) in grid.rows.iter().enumerate() {
        let row_text = match mode {
            SweepMode::DroneCost => euros(*row_value),
            SweepMode::Capacity => coord(*row_value),
        };
        for (j, n) in grid.columns.iter().enumerate() {
            table.push(vec![
                row_text.clone(),
                coord(*n),
                euros(grid.value(i, j)),
                (grid.row_argmin[i] == j).to_string(),
            ]);
        }
    }
    Ok(table)
}

pub fn cmd_compare_splits(
    scenario: &Scenario,
    point: DesignPoint,
    horizons: &[u32],
) -> Result<ReportTable> {
    let rows = sensitivity::compare_splits(&scenario.params, scenario.splits()?, point, horizons)?;
    let mut provenance = Provenance::of(scenario);
    provenance.notes.push(format!(
        "design point n_dr={}, c_step={}",
        coord(point.n_dr()),
        coord(point.c_step())
    ));
    let mut table = ReportTable::new(
        &["split", "horizon", "CAPEX", "OPEX_total", "TCO"],
        provenance,
    );
    for r in rows {
        table.push(vec![
            r.split.to_string(),
            r.horizon_years.to_string(),
            euros(r.breakdown.capex()),
            euros(r.breakdown.opex_total()),
            euros(r.breakdown.tco),
        ]);
    }
    Ok(table)
}

/// Shannon SNR needed by each capacity step, next to the nominal 3 dB rule.
pub fn cmd_snr_steps(
    scenario: &Scenario,
    bandwidth_hz: f64,
    c_steps: &[u32],
) -> Result<ReportTable> {
    let steps = link::step_snr_requirements(&scenario.params, bandwidth_hz, c_steps)?;
    let mut provenance = Provenance::of(scenario);
    provenance.notes.push(format!(
        "bandwidth {} MHz; the 3 dB per step rule is only reached asymptotically",
        coord(bandwidth_hz / 1e6)
    ));
    let mut table = ReportTable::new(
        &[
            "c_step",
            "capacity_Mbps",
            "required_SNR_dB",
            "delta_dB",
            "nominal_delta_dB",
        ],
        provenance,
    );
    for s in steps {
        table.push(vec![
            s.c_step.to_string(),
            format_fixed(s.capacity_mbps, 2),
            format_fixed(s.required_snr_db, 4),
            s.delta_db.map(|d| format_fixed(d, 4)).unwrap_or_default(),
            if s.delta_db.is_some() {
                "3.0000".into()
            } else {
                String::new()
            },
        ]);
    }
    Ok(table)
}
