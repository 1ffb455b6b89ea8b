//! Coordinate descent from (1, 1) against exhaustive lattice search, and a
//! finite-difference check of the analytic gradient along the way.

use drone_tco::cost;
use drone_tco::optimizer::{analytic_gradient, coordinate_descent, grid_search, TcoObjective};
use drone_tco::{CostParams, DescentConfig, DesignPoint};

fn main() -> drone_tco::Result<()> {
    let params = CostParams::default();
    for horizon in [1, 5] {
        let objective = TcoObjective::new(&params, horizon)?;
        let config = DescentConfig {
            upper_bounds: Some((30.0, 10.0)),
            ..DescentConfig::default()
        };
        let result = coordinate_descent(DesignPoint::lattice(1, 1), &objective, &config)?;
        let oracle = grid_search(&params, 1..=30, 1..=10, horizon)?;

        println!("horizon {horizon} year(s)");
        println!(
            "  descent:  ({:.4}, {:.4}) -> {:.2} after {} cycles, {} accepted moves, converged={}",
            result.minimizer_continuous.n_dr(),
            result.minimizer_continuous.c_step(),
            result.objective_value,
            result.iterations,
            result.trace.len() - 1,
            result.converged
        );
        println!(
            "  lattice:  ({}, {}) -> {:.2}",
            result.minimizer_integer.n_dr(),
            result.minimizer_integer.c_step(),
            result.integer_objective_value
        );
        println!(
            "  oracle:   ({}, {}) -> {:.2}",
            oracle.point.n_dr(),
            oracle.point.c_step(),
            oracle.value
        );
        for step in result.trace.iter().step_by(40) {
            println!(
                "    n_dr {:>8.4}  c_step {:>6.4}  TCO {:>12.2}",
                step.point.n_dr(),
                step.point.c_step(),
                step.objective
            );
        }
    }

    println!("\ngradient check (h = 1e-5):");
    let h = 1e-5;
    for (n, c) in [(1.5, 1.5), (7.0, 2.0), (19.2, 1.1)] {
        let (gn, gc) = analytic_gradient(DesignPoint::new(n, c)?, &params)?;
        let f = |n: f64, c: f64| cost::objective(DesignPoint::new(n, c).unwrap(), &params);
        let fd_n = (f(n + h, c) - f(n - h, c)) / (2.0 * h);
        let fd_c = (f(n, c + h) - f(n, c - h)) / (2.0 * h);
        println!("  ({n}, {c}): analytic ({gn:.4}, {gc:.4})  central ({fd_n:.4}, {fd_c:.4})");
    }
    Ok(())
}
