//! Command-line front end.
//!
//! [`run`] parses arguments, writes the report to `out` and diagnostics to
//! `err`, and returns the process exit code: 0 on success, 2 on invalid
//! input, 3 when a verification tolerance is not met.

mod commands;
mod output;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use output::Format;

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for invalid input or usage.
pub const EXIT_USAGE: i32 = 2;
/// Exit code for a failed verification.
pub const EXIT_VERIFY: i32 = 3;

/// Environment variable capping the worker threads (0 or unset: automatic).
pub const THREADS_ENV: &str = "ELLIPSOID_GEOM_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "ellipsoid",
    version,
    about = "Surface area and curvature of the general ellipsoid"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Surface area, volume and shape parameters; axes in any order.
    Area {
        #[command(flatten)]
        axes: AxesArgs,
        /// Recompute the area by quadrature and compare.
        #[arg(long)]
        verify: bool,
        /// Largest accepted relative deviation for --verify.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Relative tolerance requested from the quadrature.
        #[arg(long, default_value_t = 1e-10)]
        quad_tol: f64,
    },
    /// Fundamental forms and principal curvatures at eccentric anomalies (θ, φ).
    ///
    /// Angles refer to the axes after sorting into a ≥ b ≥ c and accept
    /// multiples of pi such as `pi/4` or `-3pi/2`.
    #[command(allow_negative_numbers = true)]
    Curvature {
        #[command(flatten)]
        axes: AxesArgs,
        #[arg(value_parser = commands::parse_angle, allow_hyphen_values = true)]
        theta: f64,
        #[arg(value_parser = commands::parse_angle, allow_hyphen_values = true)]
        phi: f64,
    },
    /// The four umbilics of a strictly triaxial ellipsoid.
    Umbilics {
        #[command(flatten)]
        axes: AxesArgs,
    },
    /// Classify every `a b c` line of a file (`-` reads standard input).
    Classify { file: PathBuf },
    /// Check the closed forms against every quadrature identity on random ellipsoids.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
        /// Largest accepted relative deviation.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Relative tolerance requested from the quadrature.
        #[arg(long, default_value_t = 1e-10)]
        quad_tol: f64,
    },
    /// The classification table with one representative ellipsoid per class.
    Table,
}

#[derive(Debug, Args)]
struct AxesArgs {
    a: f64,
    b: f64,
    c: f64,
}

/// Why a command stopped early.
#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    Verification(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let format = cli.format;
    let result = match cli.command {
        Command::Area {
            axes,
            verify,
            tol,
            quad_tol,
        } => commands::area(
            out,
            format,
            (axes.a, axes.b, axes.c),
            verify.then_some((tol, quad_tol)),
        ),
        Command::Curvature { axes, theta, phi } => {
            commands::curvature(out, err, format, (axes.a, axes.b, axes.c), theta, phi)
        }
        Command::Umbilics { axes } => commands::umbilics(out, format, (axes.a, axes.b, axes.c)),
        Command::Classify { file } => commands::classify_file(out, format, &file),
        Command::Verify {
            seed,
            cases,
            tol,
            quad_tol,
        } => verify::run(out, err, format, seed, cases, tol, quad_tol),
        Command::Table => commands::table(out, format),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            EXIT_VERIFY
        }
    }
}

/// Runs `f` on a thread pool sized by [`THREADS_ENV`].
pub(crate) fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(s) => s.trim().parse::<usize>().map_err(|_| {
            Failure::Usage(format!(
                "{THREADS_ENV} must be a non-negative integer, got {s:?}"
            ))
        })?,
        Err(_) => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Failure::Usage(format!("cannot start worker threads: {e}")))?;
    Ok(pool.install(f))
}
