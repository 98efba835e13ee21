//! The `torsym` command line. [`run`] is the whole program minus process
//! plumbing, so tests can drive it with in-memory streams.

mod range;
mod render;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use torsym_core::bundle::{parse_bundle, TorusBundle};
use torsym_core::Error;

pub use range::IntRange;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "torsym",
    version,
    about = "Symplectic torus bundles over surfaces: homology, spectral ranks and Seiberg-Witten checks"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the bundle is symplectic, with rationale and cross-checks.
    Classify { bundle: PathBuf },
    /// First homology of the total space and its Betti numbers.
    Homology { bundle: PathBuf },
    /// Ranks of the E^2 page and the fiber-class verdict they give.
    Spectral { bundle: PathBuf },
    /// Seiberg-Witten polynomial of the circle bundle over Σ_g with Euler number n.
    Swpoly {
        #[arg(long)]
        genus: usize,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// sw(0) of the torus bundle with Euler class (m, n), by every available route.
    Sw0 {
        #[arg(long)]
        genus: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Evaluate sw(0) over a grid and check that every value is even.
    VerifyParity {
        /// Genus range `a..b`, inclusive.
        #[arg(long = "g")]
        g: IntRange,
        /// Range `c..d` used for both m and n; zero is skipped.
        #[arg(long = "mn", allow_hyphen_values = true)]
        mn: IntRange,
    },
}

/// Why a command did not produce a report.
#[derive(Debug)]
pub(crate) enum Failure {
    Input(String),
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInconsistency(_) => Failure::Inconsistent(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn load_bundle(path: &Path) -> Result<TorusBundle, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_bundle(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn dispatch(cli: &Cli) -> Result<render::Report, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Classify { bundle } => render::classify(&load_bundle(bundle)?, format),
        Command::Homology { bundle } => render::homology(&load_bundle(bundle)?, format),
        Command::Spectral { bundle } => render::spectral(&load_bundle(bundle)?, format),
        Command::Swpoly { genus, n } => render::swpoly(*genus, *n, format),
        Command::Sw0 { genus, m, n } => render::sw0(*genus, *m, *n, format),
        Command::VerifyParity { g, mn } => render::verify_parity(g, mn, format),
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit code: 0 on success, 1 on input errors, 2 when two
/// independent computations disagree.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_INPUT
                }
            };
        }
    };

    match dispatch(&cli) {
        Ok(report) => {
            let _ = writeln!(out, "{}", report.body);
            report.exit_code
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Inconsistent(msg)) => {
            let _ = writeln!(err, "inconsistency: {msg}");
            EXIT_INCONSISTENT
        }
    }
}
