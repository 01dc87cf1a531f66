//! `nlft`: reproducible tables and reports for the nonlinear Fourier
//! transform library — partition-count cross-checks, transform evaluations
//! with unitarity diagnostics, beta-distribution convergence, polytope
//! volumes, and multinomial alt-class probabilities.
//!
//! Exit codes: 0 success, 1 usage error, 2 internal consistency failure
//! (an oracle disagreement, reported on stderr after the table is emitted).

mod commands;
mod table;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use commands::{CliError, NlftArgs, Outcome, TransformChoice, VolumeArgs};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Parser)]
#[command(
    name = "nlft",
    version,
    about = "Nonlinear Fourier transform tables: partition counts, discretizations, beta limits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Write the table to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Distinct-parts alternating partition counts by three routes.
    AqTable {
        /// Grid size N.
        #[arg(long)]
        size: usize,
        /// Number of parts d.
        #[arg(long)]
        degree: usize,
    },
    /// Non-distinct alternating partition counts by three routes.
    ApTable {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Evaluate a transform at every spectral index in {0..N-1}.
    Nlft {
        #[arg(long, value_enum)]
        kind: TransformChoice,
        /// Constant-signal amplitude (with --size).
        #[arg(long)]
        amplitude: Option<f64>,
        /// Grid size N for --amplitude mode.
        #[arg(long)]
        size: Option<usize>,
        /// Signal file: one sample per line, `re` or `re im`.
        #[arg(long)]
        signal: Option<PathBuf>,
        /// Series truncation order for dyson / volume-expansion.
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// Discrete beta density against the continuous beta density.
    Beta {
        /// Integer exponents "a,b" of the density x^a (1-x)^b.
        #[arg(long)]
        shape: String,
        /// Target point in [0, 1].
        #[arg(long)]
        lambda: f64,
        /// Comma-separated grid sizes, e.g. "64,128,256".
        #[arg(long)]
        sizes: String,
    },
    /// Scaled distinct-parts counts against the beta density limit.
    AqLimit {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        sizes: String,
    },
    /// Polytope-slice volumes: closed-form grid, or Monte Carlo vs formula.
    Volume {
        #[arg(long)]
        degree: usize,
        /// Grid-mode point count (table rows at l = i/size).
        #[arg(long, default_value_t = 100)]
        size: usize,
        /// Monte Carlo bin center (enables MC mode together with --samples).
        #[arg(long)]
        lambda: Option<f64>,
        /// Monte Carlo sample count (>= 10000).
        #[arg(long)]
        samples: Option<u64>,
        /// RNG seed; mandatory for Monte Carlo runs.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Multinomial alt-class probabilities by two routes.
    Multinomial {
        /// Probability vector file (samples must sum to 1).
        #[arg(long)]
        signal: PathBuf,
        /// Number of draws d.
        #[arg(long)]
        degree: usize,
        /// Report only this class l (the checksum still covers all classes).
        #[arg(long)]
        shift: Option<usize>,
        /// Optional cross-check of the inferred grid size.
        #[arg(long)]
        size: Option<usize>,
    },
}

fn parse_sizes(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad grid size {s:?} in --sizes")))
        })
        .collect()
}

fn parse_shape(text: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Usage(format!("--shape expects \"a,b\" with integers, got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::AqTable { size, degree } => commands::aq_table(*size, *degree),
        Command::ApTable { size, degree } => commands::ap_table(*size, *degree),
        Command::Nlft {
            kind,
            amplitude,
            size,
            signal,
            dmax,
        } => {
            let signal = signal
                .as_deref()
                .map(commands::load_signal)
                .transpose()?;
            commands::nlft(NlftArgs {
                kind: *kind,
                amplitude: *amplitude,
                size: *size,
                signal,
                d_max: *dmax,
            })
        }
        Command::Beta {
            shape,
            lambda,
            sizes,
        } => {
            let (a, b) = parse_shape(shape)?;
            commands::beta(a, b, *lambda, &parse_sizes(sizes)?)
        }
        Command::AqLimit {
            degree,
            lambda,
            sizes,
        } => commands::aq_limit(*degree, *lambda, &parse_sizes(sizes)?),
        Command::Volume {
            degree,
            size,
            lambda,
            samples,
            seed,
        } => commands::volume(VolumeArgs {
            degree: *degree,
            grid_points: *size,
            lambda: *lambda,
            samples: *samples,
            seed: *seed,
        }),
        Command::Multinomial {
            signal,
            degree,
            shift,
            size,
        } => {
            let u = commands::load_signal(signal)?;
            commands::multinomial(&u, *degree, *shift, *size)
        }
    }
}

fn emit(cli: &Cli, outcome: &Outcome) -> Result<(), CliError> {
    let rendered = outcome.table.render(cli.format);
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                // --help / --version are not errors.
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            if let Err(CliError::Usage(msg)) = emit(&cli, &outcome) {
                eprintln!("error: {msg}");
                return ExitCode::from(1);
            }
            // The table is emitted in full before a disagreement is fatal.
            if let Some(reason) = &outcome.failure {
                eprintln!("consistency failure: {reason}");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Consistency(msg)) => {
            eprintln!("consistency failure: {msg}");
            ExitCode::from(2)
        }
    }
}
