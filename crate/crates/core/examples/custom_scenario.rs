//! Loading scenario overrides and switching model variants.

use drone_tco::optimizer::grid_search;
use drone_tco::scenario::load_scenario_str;
use drone_tco::{BackhaulVariant, CapacityMapping, Error};

fn main() -> drone_tco::Result<()> {
    let text = r#"{
        "metadata": { "name": "dense-city", "description": "Smaller area, pricier leases" },
        "params": { "city_area": 40, "cost_a": 5200, "fhc": 1200 }
    }"#;
    let scenario = load_scenario_str(text)?;
    let base = grid_search(&scenario.params, 1..=30, 1..=10, 1)?;
    println!(
        "{}: best (n_dr, c_step) = ({}, {}) at {:.2} EUR",
        scenario.metadata.name,
        base.point.n_dr(),
        base.point.c_step(),
        base.value
    );

    let mut eq5 = scenario.params.clone();
    eq5.backhaul_variant = BackhaulVariant::Eq5;
    let alt = grid_search(&eq5, 1..=30, 1..=10, 1)?;
    println!(
        "with the n_dr * c * k backhaul increment: ({}, {}) at {:.2} EUR",
        alt.point.n_dr(),
        alt.point.c_step(),
        alt.value
    );

    let mut literal = scenario.params.clone();
    literal.capacity_mapping = CapacityMapping::Literal;
    let lit = grid_search(&literal, 1..=30, 1..=10, 1)?;
    println!(
        "with the literal capacity formula: ({}, {}) at {:.2} EUR",
        lit.point.n_dr(),
        lit.point.c_step(),
        lit.value
    );

    for bad in [
        r#"{"params": {"mux": 0.5}}"#,
        r#"{"params": {"muxx": 1}}"#,
        "{\n  \"params\": {,\n}",
    ] {
        match load_scenario_str(bad) {
            Err(
                e @ (Error::Validation { .. } | Error::UnknownKey { .. } | Error::Parse { .. }),
            ) => {
                println!("rejected: {e}")
            }
            other => println!("unexpected: {other:?}"),
        }
    }
    println!("\nfull scenario as JSON:\n{}", scenario.to_json());
    Ok(())
}
