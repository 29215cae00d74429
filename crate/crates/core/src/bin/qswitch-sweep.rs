//! Batch driver: evaluates a figure preset (or a custom sweep) and writes CSV.
//!
//! Exit codes: 0 on success, 2 on an invalid spec or usage error, 1 on I/O
//! failure.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use qswitch::sweep::{parse_config, run_sweep, write_csv, Figure, SweepSpec};
use qswitch::Error;

#[derive(Parser, Debug)]
#[command(
    name = "qswitch-sweep",
    version,
    about = "Coherence sweeps for the quantum switch"
)]
struct Cli {
    /// Figure preset: 2a..2h, 3a, 3b or custom
    #[arg(long)]
    figure: Option<String>,

    /// DM intensity D_z (overrides the preset)
    #[arg(long)]
    dz: Option<String>,

    #[arg(long, value_name = "T")]
    t_start: Option<String>,

    #[arg(long, value_name = "T")]
    t_stop: Option<String>,

    /// Number of t grid points
    #[arg(long, value_name = "N")]
    t_steps: Option<String>,

    #[arg(long, value_name = "A")]
    a_start: Option<String>,

    #[arg(long, value_name = "A")]
    a_stop: Option<String>,

    /// Number of a grid points (parametrized figures and custom)
    #[arg(long, value_name = "N")]
    a_steps: Option<String>,

    /// Measure for custom sweeps: l1, re, delta or overlap
    #[arg(long)]
    measure: Option<String>,

    /// Output CSV path
    #[arg(long, value_name = "PATH")]
    out: Option<String>,

    /// Swap-test shots for the overlap measure (0 = exact)
    #[arg(long, value_name = "N")]
    shots: Option<String>,

    /// Seed for sampled overlaps
    #[arg(long, value_name = "N")]
    seed: Option<String>,

    /// key=value settings file; command-line flags take precedence
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Print the figure presets and exit
    #[arg(long)]
    list_figures: bool,
}

impl Cli {
    fn flag_settings(&self) -> BTreeMap<String, String> {
        let pairs = [
            ("figure", &self.figure),
            ("dz", &self.dz),
            ("t-start", &self.t_start),
            ("t-stop", &self.t_stop),
            ("t-steps", &self.t_steps),
            ("a-start", &self.a_start),
            ("a-stop", &self.a_stop),
            ("a-steps", &self.a_steps),
            ("measure", &self.measure),
            ("out", &self.out),
            ("shots", &self.shots),
            ("seed", &self.seed),
        ];
        pairs
            .into_iter()
            .filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.clone())))
            .collect()
    }
}

fn exit_code(err: &Error) -> ExitCode {
    match err {
        Error::Io(_) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let mut settings = match &cli.config {
        Some(path) => parse_config(&std::fs::read_to_string(path)?)?,
        None => BTreeMap::new(),
    };
    settings.extend(cli.flag_settings());

    let spec = SweepSpec::from_settings(&settings)?;
    let rows = run_sweep(&spec)?;
    write_csv(&rows, &spec.output_path)?;
    eprintln!(
        "figure {}: wrote {} rows to {}",
        spec.figure,
        rows.len(),
        spec.output_path.display()
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if cli.list_figures {
        for f in Figure::ALL {
            println!("{:<7} {}", f.id(), f.description());
        }
        return ExitCode::SUCCESS;
    }

    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
