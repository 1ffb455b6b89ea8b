#![allow(dead_code)]

use drone_tco::{BackhaulVariant, CapacityMapping, CostParams, DesignPoint};
use proptest::prelude::*;
use rand::Rng;

/// Parameters drawn from a realistic slice of the valid region.
pub fn random_params<R: Rng>(rng: &mut R) -> CostParams {
    CostParams {
        city_area: rng.gen_range(10.0..500.0),
        drone_reach: rng.gen_range(0.1..0.5),
        drone_unit_cost: rng.gen_range(1_000.0..50_000.0),
        cost_a: rng.gen_range(1_000.0..10_000.0),
        cost_b: rng.gen_range(0.05..0.95),
        smc: rng.gen_range(500.0..10_000.0),
        fhc: rng.gen_range(100.0..2_000.0),
        bhc: rng.gen_range(100.0..2_000.0),
        bbu: rng.gen_range(1..=20),
        mux: rng.gen_range(1.0..3.0),
        c_base: rng.gen_range(100.0..1_000.0),
        c_step_size: rng.gen_range(50.0..200.0),
        fronthaul_multiplier: rng.gen_range(1.0..3.0),
        backhaul_variant: BackhaulVariant::Eq6,
        capacity_mapping: CapacityMapping::Prose,
    }
}

pub fn params_strategy() -> impl Strategy<Value = CostParams> {
    (
        (
            1.0..1_000.0f64,
            0.05..1.0f64,
            0.0..100_000.0f64,
            1.0..20_000.0f64,
        ),
        (
            0.01..0.99f64,
            0.0..20_000.0f64,
            0.0..5_000.0f64,
            0.0..5_000.0f64,
        ),
        (1u32..50, 1.0..5.0f64, 1.0..2_000.0f64, 1.0..500.0f64),
        (1.0..4.0f64, any::<bool>(), any::<bool>()),
    )
        .prop_map(|(a, b, c, d)| CostParams {
            city_area: a.0,
            drone_reach: a.1,
            drone_unit_cost: a.2,
            cost_a: a.3,
            cost_b: b.0,
            smc: b.1,
            fhc: b.2,
            bhc: b.3,
            bbu: c.0,
            mux: c.1,
            c_base: c.2,
            c_step_size: c.3,
            fronthaul_multiplier: d.0,
            backhaul_variant: if d.1 {
                BackhaulVariant::Eq6
            } else {
                BackhaulVariant::Eq5
            },
            capacity_mapping: if d.2 {
                CapacityMapping::Prose
            } else {
                CapacityMapping::Literal
            },
        })
}

pub fn point_strategy() -> impl Strategy<Value = DesignPoint> {
    (1.0..60.0f64, 1.0..12.0f64).prop_map(|(n, c)| DesignPoint::new(n, c).unwrap())
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// Central differences of `f` in both coordinates, half-width `h`.
pub fn central_difference(f: impl Fn(f64, f64) -> f64, n: f64, c: f64, h: f64) -> (f64, f64) {
    (
        (f(n + h, c) - f(n - h, c)) / (2.0 * h),
        (f(n, c + h) - f(n, c - h)) / (2.0 * h),
    )
}
