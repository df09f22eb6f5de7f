//! JSON-in/JSON-out command-line front end over the library pipelines.
//!
//! Exit codes: 0 success (or a unique inversion), 1 failed reference cases,
//! 2 schema violation, 3 computational failure, 4 unusual case,
//! 5 inconsistent data.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lattice_ist::error::Error;
use lattice_ist::forward::Potential;
use lattice_ist::golden;
use lattice_ist::report::{self, ProblemDocument};
use lattice_ist::tev::InverseMethod;

#[derive(Parser)]
#[command(
    name = "lattice-ist",
    about = "Forward and inverse spectral computations for the half-line lattice Schrödinger operator",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Marchenko,
    Gl,
}

impl From<MethodArg> for InverseMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Marchenko => InverseMethod::Marchenko,
            MethodArg::Gl => InverseMethod::GelfandLevitan,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full spectral picture of a potential document (stdin: kind=potential).
    Forward,
    /// Recover a potential from transmission eigenvalues (stdin: kind=spectrum).
    Invert {
        /// Linear inverse method that finishes the reconstruction.
        #[arg(long, value_enum, default_value = "marchenko")]
        method: MethodArg,
    },
    /// Marchenko inversion of a Jost function (stdin: kind=jost).
    Marchenko,
    /// Gel'fand-Levitan inversion (stdin: kind=jost or kind=gl_data).
    Gl,
    /// Run the named reference cases and print a pass/fail table.
    Examples {
        /// Run a single case by id (e.g. 6.6).
        #[arg(long)]
        only: Option<String>,
    },
    /// Enumerate the three-site sign-symmetric family for (gamma, epsilon).
    UnusualB3 {
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        epsilon: f64,
    },
}

const EXIT_SCHEMA: u8 = 2;
const EXIT_COMPUTE: u8 = 3;
const EXIT_UNUSUAL: u8 = 4;
const EXIT_INCONSISTENT: u8 = 5;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_input_error() {
                ExitCode::from(EXIT_SCHEMA)
            } else {
                ExitCode::from(EXIT_COMPUTE)
            }
        }
    }
}

fn read_stdin() -> Result<String, Error> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

/// Write a line to stdout; a closed pipe downstream is not an error.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}").and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(i32::from(EXIT_COMPUTE));
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Forward => {
            let doc = ProblemDocument::parse(&read_stdin()?)?;
            let ProblemDocument::Potential { v, .. } = doc else {
                return Err(Error::InvalidInput(
                    "forward expects a document with kind=potential".into(),
                ));
            };
            let potential = Potential::new(v)?;
            let rep = report::forward_report(&potential)?;
            emit(&report::to_json(&rep));
            Ok(ExitCode::SUCCESS)
        }
        Command::Invert { method } => {
            let doc = ProblemDocument::parse(&read_stdin()?)?;
            let ProblemDocument::Spectrum { eigs, .. } = doc else {
                return Err(Error::InvalidInput(
                    "invert expects a document with kind=spectrum".into(),
                ));
            };
            let rep = report::invert_report(&eigs, method.into())?;
            emit(&report::to_json(&rep));
            let code = match rep.status.as_str() {
                "unusual" => ExitCode::from(EXIT_UNUSUAL),
                "inconsistent" => ExitCode::from(EXIT_INCONSISTENT),
                _ => ExitCode::SUCCESS,
            };
            Ok(code)
        }
        Command::Marchenko => {
            let doc = ProblemDocument::parse(&read_stdin()?)?;
            let ProblemDocument::Jost { f0, b, .. } = doc else {
                return Err(Error::InvalidInput(
                    "marchenko expects a document with kind=jost".into(),
                ));
            };
            let rep = report::marchenko_report(&f0, b)?;
            emit(&report::to_json(&rep));
            Ok(ExitCode::SUCCESS)
        }
        Command::Gl => {
            let doc = ProblemDocument::parse(&read_stdin()?)?;
            let rep = report::gl_report(&doc)?;
            emit(&report::to_json(&rep));
            Ok(ExitCode::SUCCESS)
        }
        Command::Examples { only } => {
            let tol_override = match std::env::var("LATTICE_IST_TOL") {
                Ok(text) => Some(text.parse::<f64>().map_err(|_| {
                    Error::InvalidInput(format!("LATTICE_IST_TOL is not a number: {text}"))
                })?),
                Err(_) => None,
            };
            let outcomes = match only {
                Some(id) => match golden::run_case(&id, tol_override) {
                    Some(outcome) => vec![outcome?],
                    None => {
                        eprintln!("unknown case: {id}");
                        return Ok(ExitCode::from(EXIT_SCHEMA));
                    }
                },
                None => golden::run_all(tol_override)?,
            };
            let mut all_passed = true;
            emit(&format!("{:<6} {:<8} {:<12} case", "id", "status", "residual"));
            for outcome in &outcomes {
                let status = if outcome.passed() { "PASS" } else { "FAIL" };
                all_passed &= outcome.passed();
                emit(&format!(
                    "{:<6} {:<8} {:<12.3e} {}",
                    outcome.id,
                    status,
                    outcome.worst_residual(),
                    outcome.title
                ));
                for chk in &outcome.checks {
                    if !chk.passed() {
                        eprintln!(
                            "  check failed: {} (residual {:.3e}, tolerance {:.1e})",
                            chk.label, chk.residual, chk.tolerance
                        );
                    }
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::UnusualB3 { gamma, epsilon } => {
            let rep = report::unusual_family_report(gamma, epsilon)?;
            emit(&report::to_json(&rep));
            Ok(ExitCode::SUCCESS)
        }
    }
}
