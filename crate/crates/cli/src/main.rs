use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polariton_core::scenario::output::{self, Metadata};
use polariton_core::scenario::run::{self, Series};
use polariton_core::scenario::{preset, Scenario, PRESET_NAMES};
use polariton_core::{Error, Result};

#[derive(Parser)]
#[command(name = "polariton", version, about = "Excitons and cavity polaritons of atoms in an optical lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Transfer rates, observability, coupling and strong-coupling verdicts.
    Check(Common),
    /// Dispersion series along the k sweep.
    Dispersion {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = What::Polariton)]
        what: What,
    },
    /// Exciton and photon weights of both branches along the k sweep.
    Hopfield(Common),
    /// Transmission, reflection and absorption spectra.
    Spectra {
        #[command(flatten)]
        common: Common,
        /// Comma-separated in-plane wavevectors (rad/m); defaults to sweep.k_list.
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<f64>>,
    },
    /// Exact-diagonalization and 2x2 eigen oracles.
    Oracle(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Exciton,
    Photon,
    Polariton,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Common {
    /// JSON scenario file.
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Named preset.
    #[arg(long)]
    preset: Option<String>,
    /// Output file (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

impl Common {
    fn scenario(&self) -> Result<Scenario> {
        match (&self.config, &self.preset) {
            (Some(path), None) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                Scenario::from_json(&text, None)
            }
            (None, Some(name)) => {
                let text = preset(name).ok_or_else(|| {
                    Error::Config(format!("unknown preset `{name}` (known: {})", PRESET_NAMES.join(", ")))
                })?;
                Scenario::from_json(text, Some(name.clone()))
            }
            _ => Err(Error::Config("exactly one of --config or --preset is required".into())),
        }
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text)?,
            None => io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

fn sidecar(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".peaks.json");
    PathBuf::from(name)
}

fn execute(command: &Command) -> Result<()> {
    match command {
        Command::Check(c) => {
            let sc = c.scenario()?;
            let report = run::run_check(&sc)?;
            let meta = Metadata::new(&sc, "check");
            c.emit(&match c.format {
                Format::Csv => output::check_csv(&meta, &report),
                Format::Json => output::check_json(&meta, &report),
            })
        }
        Command::Dispersion { common: c, what } => {
            let series = match what {
                What::Exciton => Series::Exciton,
                What::Photon => Series::Photon,
                What::Polariton => Series::Polariton,
            };
            table(c, series, &format!("dispersion --what {series}"))
        }
        Command::Hopfield(c) => table(c, Series::Hopfield, "hopfield"),
        Command::Spectra { common: c, k } => {
            let sc = c.scenario()?;
            let spectra = run::run_spectra(&sc, k.as_deref())?;
            let meta = Metadata::new(&sc, "spectra");
            match c.format {
                Format::Json => c.emit(&output::spectra_json(&meta, &spectra)),
                Format::Csv => {
                    let csv = output::spectra_csv(&meta, &spectra);
                    let summary = output::spectra_summary_json(&meta, &spectra);
                    match &c.out {
                        Some(path) => {
                            fs::write(path, csv)?;
                            fs::write(sidecar(path), summary)?;
                        }
                        None => {
                            io::stdout().lock().write_all(csv.as_bytes())?;
                            io::stderr().lock().write_all(summary.as_bytes())?;
                        }
                    }
                    Ok(())
                }
            }
        }
        Command::Oracle(c) => {
            let sc = c.scenario()?;
            let report = run::run_oracle(&sc)?;
            let meta = Metadata::new(&sc, "oracle");
            c.emit(&match c.format {
                Format::Csv => output::oracle_csv(&meta, &report),
                Format::Json => output::oracle_json(&meta, &report),
            })?;
            report.to_error().map_or(Ok(()), Err)
        }
    }
}

fn table(c: &Common, series: Series, command: &str) -> Result<()> {
    let sc = c.scenario()?;
    let table = run::run_dispersion(&sc, series)?;
    let meta = Metadata::new(&sc, command);
    c.emit(&match c.format {
        Format::Csv => output::table_csv(&meta, &table),
        Format::Json => output::table_json(&meta, &table),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
