use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use raman_core::presets::{run_figure, Figure};
use raman_core::revivals::{detect_revivals, DEFAULT_WINDOW};
use raman_core::scenario::{run_scenario, ScenarioInput};
use raman_core::series::TimeSeries;
use raman_core::verify::{verify, CutoffOverrides};
use raman_core::Error;

#[derive(Parser)]
#[command(name = "raman", about = "Raman coupled model: inversion, negativity and linear entropy time series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a scenario on a uniform grid and write CSV
    Simulate {
        #[command(flatten)]
        scenario: ScenarioFlags,
        /// Output file (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the CSV for a figure preset
    Figure {
        /// fig1a | fig1b | fig2 | fig3 | fig3a | fig3b | fig4
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare closed forms against brute-force evolution
    Verify {
        #[command(flatten)]
        scenario: ScenarioFlags,
        #[arg(long)]
        n1_max: Option<usize>,
        #[arg(long)]
        n2_max: Option<usize>,
    },
    /// Print revival-peak times found in one CSV column
    Revivals {
        csv: PathBuf,
        #[arg(long, default_value = "inversion")]
        column: String,
        /// Half-width of the moving-maximum window, in samples
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
    },
}

#[derive(Args)]
struct ScenarioFlags {
    /// key=value file; flags given here override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// quantum | semiclassical
    #[arg(long)]
    model: Option<String>,
    /// fock:N | coherent:NBAR | thermal:NBAR
    #[arg(long)]
    mode1: Option<String>,
    #[arg(long)]
    mode2: Option<String>,
    /// g2/g1, or r' = |Omega_L|/g in the semiclassical model
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    delta_over_g1: Option<String>,
    /// Comma-separated: inversion,negativity,linear-entropy
    #[arg(long)]
    observables: Option<String>,
    #[arg(long)]
    tau_max: Option<String>,
    #[arg(long)]
    steps: Option<String>,
    #[arg(long)]
    epsilon: Option<String>,
}

impl ScenarioFlags {
    fn input(&self) -> raman_core::Result<ScenarioInput> {
        let base = match &self.config {
            Some(path) => ScenarioInput::from_file(path)?,
            None => ScenarioInput::default(),
        };
        let mut flags = ScenarioInput::default();
        let pairs = [
            ("model", &self.model),
            ("mode1", &self.mode1),
            ("mode2", &self.mode2),
            ("r", &self.r),
            ("delta_over_g1", &self.delta_over_g1),
            ("observables", &self.observables),
            ("tau_max", &self.tau_max),
            ("steps", &self.steps),
            ("epsilon", &self.epsilon),
        ];
        for (key, value) in pairs {
            if let Some(v) = value {
                flags.set(key, v)?;
            }
        }
        Ok(base.merge(flags))
    }
}

fn emit(series: &TimeSeries, out: Option<&PathBuf>) -> raman_core::Result<()> {
    match out {
        Some(path) => series.write_csv(path),
        None => {
            print!("{}", series.to_csv());
            Ok(())
        }
    }
}

fn run(cli: Cli) -> raman_core::Result<ExitCode> {
    match cli.command {
        Command::Simulate { scenario, out } => {
            let s = scenario.input()?.build()?;
            emit(&run_scenario(&s)?, out.as_ref())?;
        }
        Command::Figure { name, out } => {
            let fig: Figure = name.parse()?;
            emit(&run_figure(fig)?, out.as_ref())?;
        }
        Command::Verify { scenario, n1_max, n2_max } => {
            let s = scenario.input()?.build()?;
            let report = verify(&s, CutoffOverrides { n1_max, n2_max })?;
            println!("{report}");
            if !report.passed() {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Revivals { csv, column, window } => {
            let series = TimeSeries::read_csv(&csv)?;
            let values = series.column(&column).ok_or_else(|| {
                Error::InvalidArgument(format!("{} has no column {column:?}", csv.display()))
            })?;
            for t in detect_revivals(series.tau(), values, window)? {
                println!("{t:.10e}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InvalidScenario(_) | Error::Parse(_) | Error::InvalidParameter(_) | Error::InvalidTolerance(_) => 2,
                Error::TruncationTooSmall { .. } => 4,
                _ => 1,
            })
        }
    }
}
