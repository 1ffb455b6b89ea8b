//! Cost breakdown of the baseline scenario at one design point.
//!
//! cargo run --example evaluate_baseline -- 7 1

use drone_tco::cost::{self, CellCounting};
use drone_tco::{CostParams, DesignPoint};

fn main() -> drone_tco::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<f64>().expect("numeric argument"));
    let n_dr = args.next().unwrap_or(7.0);
    let c_step = args.next().unwrap_or(1.0);
    let params = CostParams::default();
    let point = DesignPoint::new(n_dr, c_step)?;

    println!("k = {:.4} cells for a single drone", params.cell_constant());
    println!(
        "cells to upgrade at n_dr = {n_dr}: {:.2}",
        cost::small_cell_count(n_dr, &params)?
    );
    println!(
        "link capacity at c_step = {c_step}: {} Mbps",
        cost::capacity_increment(c_step, &params)?
    );
    println!();
    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>12} {:>12} {:>8}",
        "horizon", "C_dr", "C_sc", "C_fh/yr", "C_bh/yr", "TCO", "OPEX%"
    );
    for horizon in [1, 5] {
        let b = cost::tco(point, &params, horizon)?;
        println!(
            "{horizon:>8} {:>12.2} {:>12.2} {:>12.2} {:>12.2} {:>12.2} {:>7.1}%",
            b.c_dr,
            b.c_sc,
            b.c_fh_annual,
            b.c_bh_annual,
            b.tco,
            100.0 * b.opex_share()
        );
    }

    let whole = cost::tco_with(point, &params, 1, CellCounting::Ceiling)?;
    println!(
        "\nwith whole cells (rounded up): 1-year TCO {:.2}",
        whole.tco
    );
    Ok(())
}
