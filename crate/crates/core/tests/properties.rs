mod common;

use drone_tco::cost::{self, small_cell_count, small_cell_upgrade_cost};
use drone_tco::link::{required_snr, shannon_capacity};
use drone_tco::optimizer::{analytic_gradient, coordinate_descent, TcoObjective};
use drone_tco::scenario::{load_scenario_str, SweepAxes};
use drone_tco::sensitivity::{sweep_capacity, sweep_drone_cost, SplitPair};
use drone_tco::{CostParams, DescentConfig, DesignPoint, Scenario};
use proptest::prelude::*;

use common::{central_difference, params_strategy, point_strategy, rel};

proptest! {
    #[test]
    fn components_non_negative(params in params_strategy(), p in point_strategy(), h in 1u32..40) {
        let b = cost::tco(p, &params, h).unwrap();
        prop_assert!(b.c_dr >= 0.0 && b.c_sc >= 0.0);
        prop_assert!(b.c_fh_annual >= 0.0 && b.c_bh_annual >= 0.0);
        let sum = b.c_dr + b.c_sc + h as f64 * (b.c_fh_annual + b.c_bh_annual);
        prop_assert!((b.tco - sum).abs() <= 1e-12 * b.tco);
    }

    #[test]
    fn geometry_law(params in params_strategy(), n in 1.0..100.0f64) {
        let k = small_cell_count(1.0, &params).unwrap();
        prop_assert!(rel(small_cell_count(n, &params).unwrap() * n * n, k) <= 1e-12);
    }

    #[test]
    fn monotone_in_coordinates_and_drone_cost(
        params in params_strategy(),
        p in point_strategy(),
        dn in 0.01..5.0f64,
        dc in 0.01..2.0f64,
    ) {
        let further = DesignPoint::new(p.n_dr() + dn, p.c_step()).unwrap();
        let richer = DesignPoint::new(p.n_dr(), p.c_step() + dc).unwrap();
        prop_assert!(small_cell_upgrade_cost(further, &params) < small_cell_upgrade_cost(p, &params)
            || params.smc == 0.0);
        if params.drone_unit_cost > 0.0 {
            prop_assert!(cost::drone_cost(further, &params) > cost::drone_cost(p, &params));
            prop_assert!(cost::drone_cost(richer, &params) > cost::drone_cost(p, &params));
        }
        let pricier = CostParams { drone_unit_cost: params.drone_unit_cost + 100.0, ..params.clone() };
        prop_assert!(cost::tco(p, &pricier, 1).unwrap().tco > cost::tco(p, &params, 1).unwrap().tco);
    }

    #[test]
    fn objective_is_one_year_tco_on_lattice(params in params_strategy(), n in 1u32..=20, c in 1u32..=10) {
        let p = DesignPoint::lattice(n, c);
        let t = cost::tco(p, &params, 1).unwrap().tco;
        prop_assert!(rel(cost::objective(p, &params), t) <= 1e-12);
    }

    #[test]
    fn gradient_matches_finite_differences(
        params in params_strategy(),
        n in 1.05..30.0f64,
        c in 1.05..8.0f64,
    ) {
        // fhc = 0 with zero capacity makes the fronthaul slope singular
        prop_assume!(params.fhc > 1.0);
        let f = |n: f64, c: f64| cost::objective(DesignPoint::new(n, c).unwrap(), &params);
        let (fd_n, fd_c) = central_difference(f, n, c, 1e-5);
        let (gn, gc) = analytic_gradient(DesignPoint::new(n, c).unwrap(), &params).unwrap();
        let err = (gn - fd_n).abs().max((gc - fd_c).abs()) / gn.abs().max(gc.abs());
        prop_assert!(err <= 1e-6, "err {err:e}");
    }

    #[test]
    fn shannon_round_trip(b in 1e5..1e10f64, snr in -30.0..70.0f64) {
        prop_assert!(rel(required_snr(shannon_capacity(b, snr), b), snr) <= 1e-9);
    }

    #[test]
    fn shannon_monotone(b in 1e5..1e10f64, snr in -30.0..70.0f64, db in 0.01..5.0f64, scale in 1.01..3.0f64) {
        prop_assert!(shannon_capacity(b, snr + db) > shannon_capacity(b, snr));
        prop_assert!(shannon_capacity(b * scale, snr) > shannon_capacity(b, snr));
    }

    #[test]
    fn scenario_serialization_round_trip(params in params_strategy(), name in "[a-z]{1,12}") {
        let mut scenario = Scenario::default();
        scenario.metadata.name = name;
        scenario.params = params;
        let back = load_scenario_str(&scenario.to_json()).unwrap();
        prop_assert_eq!(back, scenario);
    }

    #[test]
    fn descent_trace_monotone_and_feasible(params in params_strategy()) {
        prop_assume!(params.fhc > 1.0);
        let objective = TcoObjective::new(&params, 1).unwrap();
        let config = DescentConfig { upper_bounds: Some((30.0, 10.0)), ..DescentConfig::default() };
        let r = coordinate_descent(DesignPoint::lattice(1, 1), &objective, &config).unwrap();
        for w in r.trace.windows(2) {
            prop_assert!(w[1].objective < w[0].objective);
        }
        for s in &r.trace {
            prop_assert!(s.point.n_dr() >= 1.0 && s.point.c_step() >= 1.0);
        }
        let again = coordinate_descent(DesignPoint::lattice(1, 1), &objective, &config).unwrap();
        prop_assert_eq!(again, r);
    }

    #[test]
    fn grid_cells_match_direct_evaluation(params in params_strategy(), i in 0usize..10, j in 0usize..15) {
        let axes = SweepAxes::default();
        let g = sweep_capacity(&params, &axes.c_steps, &axes.n_values, 5).unwrap();
        let p = DesignPoint::lattice(axes.n_values[j], axes.c_steps[i]);
        prop_assert_eq!(g.value(i, j), cost::tco(p, &params, 5).unwrap().tco);
        prop_assert!(g.is_consistent());

        let d = sweep_drone_cost(&params, &axes.drone_costs, &axes.n_values, 1).unwrap();
        let row = i % axes.drone_costs.len();
        let priced = CostParams { drone_unit_cost: axes.drone_costs[row], ..params.clone() };
        let p = DesignPoint::lattice(axes.n_values[j], 1);
        prop_assert_eq!(d.value(row, j), cost::tco(p, &priced, 1).unwrap().tco);
        prop_assert!(d.is_consistent());
    }
}

#[test]
fn invalid_fixture_corpus_rejected() {
    use drone_tco::Error;
    let cases: &[(&str, &str)] = &[
        (r#"{"params": {"mux": 0.5}}"#, "validation"),
        (r#"{"params": {"cost_b": 1.2}}"#, "validation"),
        (r#"{"params": {"city_area": 0}}"#, "validation"),
        (r#"{"params": {"bbu": 0}}"#, "validation"),
        (r#"{"params": {"c_step_size": -100}}"#, "validation"),
        (
            r#"{"splits": {"split2": {"drone_unit_cost": 5000, "fronthaul_rate_multiplier": 1},
                       "split7": {"drone_unit_cost": 9000, "fronthaul_rate_multiplier": 2}}}"#,
            "validation",
        ),
        (r#"{"sweeps": {"drone_costs": []}}"#, "validation"),
        (r#"{"params": {"mux": 1.5, "smc_cost": 1}}"#, "unknown"),
        (r#"{"metadata": {"name": "x", "owner": "y"}}"#, "unknown"),
        (r#"{"params": {"backhaul_variant": "eq7"}}"#, "parse"),
        (r#"{"params": "table"}"#, "parse"),
        ("{ not json", "parse"),
        ("", "parse"),
    ];
    for (text, class) in cases {
        let err = load_scenario_str(text).unwrap_err();
        let got = match err {
            Error::Validation { .. } => "validation",
            Error::UnknownKey { .. } => "unknown",
            Error::Parse { .. } => "parse",
            _ => "other",
        };
        assert_eq!(got, *class, "{text}: {err}");
        assert_eq!(err.exit_code(), 3);
    }
}

#[test]
fn split_fixture_survives_serialization() {
    let json = serde_json::to_string(&SplitPair::fixture()).unwrap();
    let back: SplitPair = serde_json::from_str(&json).unwrap();
    assert_eq!(back, SplitPair::fixture());
}
