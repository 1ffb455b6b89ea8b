//! Batch front end: evaluate, optimize, sweep, compare-splits, snr-steps.
//!
//! Exit status: 0 success, 2 usage error, 3 scenario error, 4 domain error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use drone_tco::cost::CellCounting;
use drone_tco::report::{self, Format, ReportTable, SearchBox, SweepMode};
use drone_tco::{default_scenario, load_scenario, DesignPoint, Error, Scenario};

#[derive(Parser)]
#[command(
    name = "drone-tco",
    version,
    about = "Drone-relay 5G emergency coverage cost model"
)]
struct Cli {
    /// Scenario JSON file; the built-in baseline when omitted.
    #[arg(long, global = true)]
    scenario: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Point {
    #[arg(long, default_value_t = 7.0)]
    n_dr: f64,
    #[arg(long, default_value_t = 1.0)]
    c_step: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Cost breakdown at one design point.
    Evaluate {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 1)]
        horizon: u32,
        /// Round the small-cell count up to whole cells.
        #[arg(long)]
        ceil_cells: bool,
    },
    /// Coordinate descent against exhaustive lattice search.
    Optimize {
        #[arg(long, default_value_t = 1)]
        horizon: u32,
        #[arg(long, default_value_t = 30)]
        n_max: u32,
        #[arg(long, default_value_t = 10)]
        c_max: u32,
    },
    /// Long-form TCO grid over drone cost or capacity step.
    Sweep {
        #[arg(long, value_enum, default_value_t = SweepMode::DroneCost)]
        mode: SweepMode,
        #[arg(long, default_value_t = 1)]
        horizon: u32,
        #[arg(long, requires_all = ["d_max", "d_step"])]
        d_min: Option<f64>,
        #[arg(long, requires_all = ["d_min", "d_step"])]
        d_max: Option<f64>,
        #[arg(long, requires_all = ["d_min", "d_max"])]
        d_step: Option<f64>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        c_steps: Option<Vec<u32>>,
    },
    /// CAPEX/OPEX of both functional splits at one point.
    CompareSplits {
        #[command(flatten)]
        point: Point,
        #[arg(long, value_delimiter = ',')]
        horizons: Option<Vec<u32>>,
    },
    /// Shannon SNR needed by each capacity step.
    SnrSteps {
        #[arg(long, default_value_t = 100.0)]
        bandwidth_mhz: f64,
        #[arg(long, value_delimiter = ',')]
        c_steps: Option<Vec<u32>>,
    },
}

fn drone_cost_axis(min: f64, max: f64, step: f64) -> Result<Vec<f64>, Error> {
    if !(step > 0.0 && min.is_finite() && max >= min) {
        return Err(Error::Domain {
            field: "d_step",
            message: "need d_step > 0 and d_max >= d_min".to_string(),
        });
    }
    let count = ((max - min) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| min + i as f64 * step).collect())
}

fn run(cli: Cli) -> Result<ReportTable, Error> {
    let scenario: Scenario = match &cli.scenario {
        Some(path) => load_scenario(path)?,
        None => default_scenario(),
    };
    match cli.command {
        Command::Evaluate {
            point,
            horizon,
            ceil_cells,
        } => {
            let counting = if ceil_cells {
                CellCounting::Ceiling
            } else {
                CellCounting::Continuous
            };
            report::cmd_evaluate(&scenario, point.n_dr, point.c_step, horizon, counting)
        }
        Command::Optimize {
            horizon,
            n_max,
            c_max,
        } => report::cmd_optimize(&scenario, horizon, SearchBox { n_max, c_max }),
        Command::Sweep {
            mode,
            horizon,
            d_min,
            d_max,
            d_step,
            n_max,
            c_steps,
        } => {
            let mut axes = scenario.sweeps.clone();
            if let (Some(lo), Some(hi), Some(step)) = (d_min, d_max, d_step) {
                axes.drone_costs = drone_cost_axis(lo, hi, step)?;
            }
            if let Some(n_max) = n_max {
                axes.n_values = (1..=n_max).collect();
            }
            if let Some(c) = c_steps {
                axes.c_steps = c;
            }
            report::cmd_sweep(&scenario, mode, horizon, &axes)
        }
        Command::CompareSplits { point, horizons } => {
            let horizons = horizons.unwrap_or_else(|| scenario.sweeps.horizons.clone());
            let point = DesignPoint::new(point.n_dr, point.c_step)?;
            report::cmd_compare_splits(&scenario, point, &horizons)
        }
        Command::SnrSteps {
            bandwidth_mhz,
            c_steps,
        } => {
            let c_steps = c_steps.unwrap_or_else(|| scenario.sweeps.c_steps.clone());
            report::cmd_snr_steps(&scenario, bandwidth_mhz * 1e6, &c_steps)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let out = cli.out.clone();
    let table = match run(cli) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = table.render(format);
    match out {
        Some(path) => {
            if let Err(source) = std::fs::write(&path, text) {
                let e = Error::Io {
                    path: path.display().to_string(),
                    source,
                };
                eprintln!("error: {e}");
                return ExitCode::from(e.exit_code() as u8);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
