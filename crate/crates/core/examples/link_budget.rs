//! Shannon SNR needed by each 100 Mbps capacity step over 100 MHz.

use drone_tco::link::{shannon_capacity, step_snr_requirements, DEFAULT_BANDWIDTH_HZ};
use drone_tco::CostParams;

fn main() -> drone_tco::Result<()> {
    let params = CostParams::default();
    let steps: Vec<u32> = (1..=10).collect();
    println!(
        "{:>6} {:>10} {:>10} {:>8}",
        "c_step", "Mbps", "SNR dB", "+dB"
    );
    for s in step_snr_requirements(&params, DEFAULT_BANDWIDTH_HZ, &steps)? {
        let delta = s.delta_db.map(|d| format!("{d:.3}")).unwrap_or_default();
        println!(
            "{:>6} {:>10.1} {:>10.3} {:>8}",
            s.c_step, s.capacity_mbps, s.required_snr_db, delta
        );
    }

    println!("\ncapacity gained by +3 dB:");
    for snr in [0.0, 10.0, 15.0, 20.0, 30.0] {
        let gain = shannon_capacity(DEFAULT_BANDWIDTH_HZ, snr + 3.0)
            - shannon_capacity(DEFAULT_BANDWIDTH_HZ, snr);
        println!("  at {snr:>4} dB: {gain:.1} Mbps");
    }
    Ok(())
}
