//! CAPEX and OPEX of the PDCP (split 2) and PHY (split 7) functional splits.
//!
//! The split profiles come from the scenario file when one is given:
//! cargo run --example compare_splits -- examples/scenarios/split_study.json

use drone_tco::sensitivity::compare_splits;
use drone_tco::{default_scenario, load_scenario, DesignPoint};

fn main() -> drone_tco::Result<()> {
    let scenario = match std::env::args().nth(1) {
        Some(path) => load_scenario(path)?,
        None => default_scenario(),
    };
    let splits = scenario.splits()?;
    println!(
        "{}: {}",
        scenario.metadata.name, scenario.metadata.description
    );
    for (name, profile) in splits.profiles() {
        println!(
            "  {name}: drone {:.0} EUR, fronthaul x{}, smc {}",
            profile.drone_unit_cost,
            profile.fronthaul_rate_multiplier,
            profile.smc_override.unwrap_or(scenario.params.smc)
        );
    }
    let rows = compare_splits(
        &scenario.params,
        splits,
        DesignPoint::lattice(7, 1),
        &scenario.sweeps.horizons,
    )?;
    println!(
        "\n{:>7} {:>8} {:>14} {:>14} {:>14} {:>6}",
        "split", "horizon", "CAPEX", "OPEX", "TCO", "OPEX%"
    );
    for r in rows {
        let b = r.breakdown;
        println!(
            "{:>7} {:>8} {:>14.2} {:>14.2} {:>14.2} {:>5.1}%",
            r.split,
            r.horizon_years,
            b.capex(),
            b.opex_total(),
            b.tco,
            100.0 * b.opex_share()
        );
    }
    Ok(())
}
