//! Command-line front end: exact molecule counts, satellite addresses,
//! numerical verification, center sweeps, count tables, and marked
//! escape-time plots.
//!
//! Exit status: 0 on success (and a true verification verdict), 1 on a false
//! verdict or failed verification run, 2 on usage or configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use molecule::{
    all_centers_sweep, build_table, enumerate_addresses, locate_addresses, molecule_count_direct,
    molecule_count_prime_power, molecule_count_recursive, molecule_count_squarefree, ordered_bell,
    render_ppm, to_csv, to_json, verify_molecule_count, BigCount, CountError, NumericsError,
    PathFollowConfig, PlotSpec, PrimeFactorization, SatelliteAddress, SweepConfig, VerifyOptions,
    Window, DEFAULT_ENUMERATION_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "molecule",
    version,
    about = "Count the period-n hyperbolic components on the main molecule of the Mandelbrot set, and verify the counts by locating their centers in the parameter plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Ordered-factorization sum
    Direct,
    /// Divisor recursion
    Recursive,
    /// Prime-power or squarefree closed form
    Closed,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AddressFormat {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print M(n), the number of period-n components on the main molecule
    Count {
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
    },
    /// Rows n, M(n), nu(n), M(n)/nu(n) for n = 1..=max
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Print the ordered Bell number N(m)
    Bell { m: u32 },
    /// List the satellite address of every period-n molecule component
    Addresses {
        n: u64,
        #[arg(long, value_enum, default_value_t = AddressFormat::Json)]
        format: AddressFormat,
    },
    /// Locate every period-n molecule center and check it against M(n)
    Verify {
        n: u64,
        /// Newton residual tolerance
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Cross-check against the full Q_n root sweep (the default)
        #[arg(long, overrides_with = "no_sweep")]
        sweep: bool,
        /// Skip the sweep cross-check
        #[arg(long)]
        no_sweep: bool,
    },
    /// Dump every period-n center found by the full parameter-plane sweep
    Centers { n: u64 },
    /// Render an escape-time plot with the period-n centers marked (binary P6 PPM)
    Plot {
        n: u64,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
        /// Window as re_min,re_max,im_min,im_max
        #[arg(
            long,
            default_value = "-2,0.75,-1.15,1.15",
            value_parser = parse_window,
            allow_hyphen_values = true
        )]
        window: Window,
        #[arg(long = "max-iter", default_value_t = 256)]
        max_iter: u32,
        /// Output file path
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_window(raw: &str) -> Result<Window, String> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 4 {
        return Err("window needs four comma-separated numbers".to_string());
    }
    let mut vals = [0.0f64; 4];
    for (slot, part) in vals.iter_mut().zip(&parts) {
        *slot = part.trim().parse::<f64>().map_err(|e| format!("bad window bound {part:?}: {e}"))?;
    }
    Ok(Window { re_min: vals[0], re_max: vals[1], im_min: vals[2], im_max: vals[3] })
}

const USAGE: u8 = 2;
const VERDICT_FALSE: u8 = 1;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: USAGE, message: message.into() }
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Configuration-shaped numerics errors exit 2; runtime verification
/// failures exit 1.
impl From<NumericsError> for Failure {
    fn from(e: NumericsError) -> Self {
        let code = match &e {
            NumericsError::SweepLimit { .. }
            | NumericsError::InvalidConfig(_)
            | NumericsError::ZeroPeriod
            | NumericsError::Count(_) => USAGE,
            _ => VERDICT_FALSE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Count { n, method } => {
            let m = count_with_method(n, method)?;
            println!("{m}");
            Ok(0)
        }
        Command::Table { max, format } => {
            let (rows, fallbacks) = build_table(max, DEFAULT_ENUMERATION_BUDGET)?;
            for n in fallbacks {
                eprintln!("note: n={n} exceeds the direct enumeration budget; used the divisor recursion");
            }
            match format {
                TableFormat::Csv => print!("{}", to_csv(&rows)),
                TableFormat::Json => println!("{}", to_json(&rows)),
            }
            Ok(0)
        }
        Command::Bell { m } => {
            println!("{}", ordered_bell(m));
            Ok(0)
        }
        Command::Addresses { n, format: AddressFormat::Json } => {
            let addresses = enumerate_addresses(n)?;
            let rows: Vec<AddressRow> = addresses
                .iter()
                .map(|a| AddressRow { rotations: a, period: n })
                .collect();
            println!("{}", serde_json::to_string(&rows).expect("addresses serialize"));
            Ok(0)
        }
        Command::Verify { n, tol, sweep: _, no_sweep } => {
            let opts = VerifyOptions {
                path: PathFollowConfig { newton_tol: tol, ..PathFollowConfig::default() },
                sweep: if no_sweep { None } else { Some(SweepConfig::default()) },
            };
            let report = verify_molecule_count(n, &opts)?;
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
            Ok(if report.verdict { 0 } else { VERDICT_FALSE })
        }
        Command::Centers { n } => {
            let centers = all_centers_sweep(n, &SweepConfig::default())?;
            println!("{}", serde_json::to_string(&centers).expect("centers serialize"));
            Ok(0)
        }
        Command::Plot { n, width, height, window, max_iter, out } => {
            let spec = PlotSpec { period: n, width, height, window, max_iter, escape_radius: 2.0 };
            spec.validate().map_err(|e| Failure::usage(e.to_string()))?;
            let addresses = enumerate_addresses(n).map_err(|e| Failure::usage(e.to_string()))?;
            let centers = locate_addresses(&addresses, &PathFollowConfig::default())
                .map_err(|e| Failure::usage(format!("center location failed: {e}")))?;
            let marks: Vec<_> = centers.iter().map(|c| c.c).collect();
            let bytes = render_ppm(&spec, &marks);
            std::fs::write(&out, bytes)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", out.display())))?;
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct AddressRow<'a> {
    rotations: &'a SatelliteAddress,
    period: u64,
}

fn count_with_method(n: u64, method: Method) -> Result<BigCount, Failure> {
    match method {
        Method::Direct => Ok(molecule_count_direct(n)?),
        Method::Recursive => Ok(molecule_count_recursive(n)?),
        Method::Closed => {
            let f = PrimeFactorization::of(n)?;
            if n == 1 {
                Ok(BigCount::from(1u8))
            } else if f.is_prime_power() {
                let (p, k) = f.pairs()[0];
                Ok(molecule_count_prime_power(p, k)?)
            } else if f.is_squarefree() {
                Ok(molecule_count_squarefree(&f.distinct_primes())?)
            } else {
                Err(Failure::usage(format!(
                    "the closed form applies to prime powers and squarefree n only; {n} is neither"
                )))
            }
        }
    }
}
