//! Command-line max-plus matrix calculator.
//!
//! Reads matrices in the plain text format of [`tropical::io`] (one row per
//! line, ε written `E`), runs one operation per invocation and prints the
//! result in the same format. Results go to standard output (or `--output`);
//! diagnostics go to standard error. Exit status 0 means success, 1 a
//! computation or input error, 2 a usage error.

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tropical::io::{format_matrix, parse_matrix, parse_scalar, ParseError};
use tropical::{Matrix, RecurrenceProblem};

const USAGE_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "tropical",
    version,
    about = "Max-plus matrix calculator",
    long_about = "Max-plus matrix calculator.\n\n\
        Matrices are plain text: one row per line, entries separated by \
        spaces or tabs, each entry an integer or the letter E for the \
        absorbing element. Pass - as an input path to read from standard \
        input."
)]
struct Cli {
    /// Write the result to this file instead of standard output.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entrywise sum (maximum) of two equally shaped matrices.
    Add {
        /// Left matrix file, or - for standard input.
        a: String,
        /// Right matrix file, or - for standard input.
        b: String,
    },
    /// Matrix product: each entry is a maximum of sums.
    Mul {
        /// Left matrix file, or - for standard input.
        a: String,
        /// Right matrix file, or - for standard input.
        b: String,
    },
    /// Add a scalar to every entry (tropical scalar product).
    Smul {
        /// Scalar: an integer or E.
        #[arg(long, value_name = "SCALAR", allow_hyphen_values = true)]
        scalar: String,
        /// Matrix file, or - for standard input.
        a: String,
    },
    /// Raise a square matrix to a power; k = 0 gives the identity.
    Pow {
        /// Exponent.
        #[arg(long, value_name = "K")]
        k: u64,
        /// Matrix file, or - for standard input.
        a: String,
    },
    /// Run the recurrence X(k+1) = A (x) X(k) and print X(k).
    Evolve {
        /// Number of steps.
        #[arg(long, value_name = "K")]
        k: u64,
        /// Print every state X(0) .. X(k), separated by blank lines.
        #[arg(long)]
        trajectory: bool,
        /// Transition matrix file, or - for standard input.
        a: String,
        /// Initial state: a column vector file, or - for standard input.
        x0: String,
    },
}

enum CliError {
    Read { path: String, source: io::Error },
    Write { path: String, source: io::Error },
    Parse { path: String, source: ParseError },
    Scalar { token: String },
    Compute(tropical::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Read { path, source } => write!(f, "{path}: {source}"),
            CliError::Write { path, source } => write!(f, "{path}: {source}"),
            CliError::Parse { path, source } => write!(f, "{path}: {source}"),
            CliError::Scalar { token } => {
                write!(f, "bad scalar {token:?} (expected an integer or \"E\")")
            }
            CliError::Compute(source) => write!(f, "{source}"),
        }
    }
}

impl From<tropical::Error> for CliError {
    fn from(source: tropical::Error) -> Self {
        CliError::Compute(source)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(message) = check_stdin_usage(&cli.command) {
        eprintln!("error: {message}");
        return ExitCode::from(USAGE_ERROR);
    }
    match run(&cli.command) {
        Ok(result) => match write_result(cli.output.as_deref(), &result) {
            Ok(()) => ExitCode::SUCCESS,
            Err(err) => {
                eprintln!("error: {err}");
                ExitCode::FAILURE
            }
        },
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}

/// Standard input can back at most one operand.
fn check_stdin_usage(command: &Command) -> Result<(), String> {
    let inputs: &[&String] = match command {
        Command::Add { a, b } | Command::Mul { a, b } => &[a, b],
        Command::Smul { a, .. } => &[a],
        Command::Pow { a, .. } => &[a],
        Command::Evolve { a, x0, .. } => &[a, x0],
    };
    if inputs.iter().filter(|path| path.as_str() == "-").count() > 1 {
        return Err("at most one input may come from standard input".to_owned());
    }
    Ok(())
}

fn run(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Add { a, b } => {
            let lhs = read_matrix(a)?;
            let rhs = read_matrix(b)?;
            Ok(format_matrix(&lhs.add(&rhs)?))
        }
        Command::Mul { a, b } => {
            let lhs = read_matrix(a)?;
            let rhs = read_matrix(b)?;
            Ok(format_matrix(&lhs.mul(&rhs)?))
        }
        Command::Smul { scalar, a } => {
            let alpha = parse_scalar(scalar).map_err(|_| CliError::Scalar {
                token: scalar.clone(),
            })?;
            let matrix = read_matrix(a)?;
            Ok(format_matrix(&matrix.scale(alpha)?))
        }
        Command::Pow { k, a } => {
            let matrix = read_matrix(a)?;
            Ok(format_matrix(&matrix.pow(*k)?))
        }
        Command::Evolve {
            k,
            trajectory,
            a,
            x0,
        } => {
            let transition = read_matrix(a)?;
            let initial = read_matrix(x0)?;
            let problem = RecurrenceProblem::new(transition, initial, *k)?;
            if *trajectory {
                let frames: Vec<String> = problem.trajectory()?.iter().map(format_matrix).collect();
                Ok(frames.join("\n"))
            } else {
                Ok(format_matrix(&problem.evolve()?))
            }
        }
    }
}

fn read_matrix(path: &str) -> Result<Matrix, CliError> {
    let text = read_input(path)?;
    parse_matrix(&text).map_err(|source| CliError::Parse {
        path: display_name(path),
        source,
    })
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Read {
                path: display_name(path),
                source,
            })?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_owned(),
            source,
        })
    }
}

fn display_name(path: &str) -> String {
    if path == "-" {
        "<stdin>".to_owned()
    } else {
        path.to_owned()
    }
}

fn write_result(output: Option<&std::path::Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|source| CliError::Write {
                    path: "<stdout>".to_owned(),
                    source,
                })
        }
    }
}
