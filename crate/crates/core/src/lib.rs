//! Total cost of ownership for drone-relayed 5G emergency coverage.
//!
//! A chain of `n_dr` drones relays a high-capacity link from an upgraded
//! ground small cell to the incident area. Longer chains reach farther, so
//! fewer small cells need upgrading, but every drone costs money and its
//! radio price doubles with each capacity step. The crate prices that trade-off:
//!
//! - [`cost`]: drone and small-cell CAPEX, fronthaul and backhaul lease OPEX,
//!   and the total over a horizon.
//! - [`optimizer`]: projected coordinate descent over `(n_dr, c_step)` and an
//!   exhaustive lattice search that checks it.
//! - [`sensitivity`]: drone-cost, capacity-step and functional-split studies.
//! - [`link`]: Shannon capacity and the SNR each capacity step requires.
//! - [`scenario`]: JSON scenario files and the baseline scenario.
//! - [`report`]: the tables printed by the `drone-tco` binary.
//!
//! ```
//! use drone_tco::{cost, DesignPoint, CostParams};
//!
//! let params = CostParams::default();
//! let five_years = cost::tco(DesignPoint::lattice(7, 1), &params, 5).unwrap();
//! assert!(five_years.opex_share() > 0.5);
//! ```
//!
//! Runnable examples live in `examples/`; `cargo run --example <name>`.

pub mod cost;
pub mod error;
pub mod grid;
pub mod link;
pub mod optimizer;
pub mod params;
pub mod report;
pub mod scenario;
pub mod sensitivity;

pub use cost::CostBreakdown;
pub use error::{Error, Result};
pub use grid::SweepGrid;
pub use optimizer::{DescentConfig, OptimizationResult};
pub use params::{BackhaulVariant, CapacityMapping, CostParams, DesignPoint};
pub use scenario::{default_scenario, load_scenario, Scenario};
pub use sensitivity::{SplitPair, SplitProfile};
