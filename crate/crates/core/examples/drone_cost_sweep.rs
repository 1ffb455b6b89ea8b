//! TCO over drone unit cost and chain length at the base capacity step.
//! Pricier drones push the cheapest chain length down.

use drone_tco::sensitivity::sweep_drone_cost;
use drone_tco::CostParams;

fn main() -> drone_tco::Result<()> {
    let params = CostParams::default();
    let costs: Vec<f64> = (0..4).map(|i| 9120.0 + 4000.0 * i as f64).collect();
    let n: Vec<u32> = (1..=20).collect();
    let grid = sweep_drone_cost(&params, &costs, &n, 1)?;

    print!("{:>9}", "d \\ n_dr");
    for n in &grid.columns {
        print!("{n:>8}");
    }
    println!();
    for (i, d) in grid.rows.iter().enumerate() {
        print!("{d:>9}");
        for j in 0..grid.columns.len() {
            let mark = if grid.row_argmin[i] == j { '*' } else { ' ' };
            print!("{:>7.0}{mark}", grid.value(i, j) / 1e3);
        }
        println!();
    }
    println!("(kEUR, * marks the cheapest chain length per drone cost)");
    Ok(())
}
