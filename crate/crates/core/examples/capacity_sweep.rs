//! Cheapest chain length per capacity step after one and five years.
//! Accumulated fronthaul OPEX favors longer chains over longer horizons.

use drone_tco::sensitivity::sweep_capacity;
use drone_tco::CostParams;

fn main() -> drone_tco::Result<()> {
    let params = CostParams::default();
    let steps: Vec<u32> = (1..=10).collect();
    let n: Vec<u32> = (1..=15).collect();
    let one = sweep_capacity(&params, &steps, &n, 1)?;
    let five = sweep_capacity(&params, &steps, &n, 5)?;

    println!(
        "{:>6} {:>10} {:>14} {:>10} {:>14}",
        "c_step", "best n (1y)", "TCO (1y)", "best n (5y)", "TCO (5y)"
    );
    for (i, s) in steps.iter().enumerate() {
        println!(
            "{s:>6} {:>10} {:>14.2} {:>10} {:>14.2}",
            one.row_minimizer(i),
            one.value(i, one.row_argmin[i]),
            five.row_minimizer(i),
            five.value(i, five.row_argmin[i]),
        );
    }
    Ok(())
}
