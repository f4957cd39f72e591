//! `arcfourier`: JSON front end for the arc Fourier library.
//!
//! Every subcommand reads one JSON document from stdin (except `selftest`)
//! and writes one to stdout. Exit codes: 0 success, 1 not in range or a
//! failed test, 2 invalid input, 3 numerical failure.

mod json;

use std::io::Read;
use std::process::ExitCode;

use arcfourier::sampling::random_case;
use arcfourier::{recover, roundtrip, Error, RecoveryOutcome, Tolerances};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use json::{ArcInput, CoefficientInput};

/// Cases whose endpoint error exceeds this fail `roundtrip` and `selftest`.
const ROUNDTRIP_THRESHOLD: f64 = 1e-6;
/// Minimum arc length and gap for `selftest` cases, in radians.
const SELFTEST_MIN_SEP: f64 = 0.05;

#[derive(Parser)]
#[command(
    name = "arcfourier",
    version,
    about = "Fourier coefficients of arc unions and their inversion"
)]
struct Cli {
    #[command(flatten)]
    options: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Options {
    /// Accepted distance of the Toeplitz norm from 1.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol_norm: f64,
    /// Eigenvalues of M*M this close to 1 count as norm preserving.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol_eig: f64,
    /// Roots this close to the unit circle count as lying on it.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol_circle: f64,
    /// Largest accepted coefficient mismatch after recovery.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol_verify: f64,
    /// Seed for `selftest` (ChaCha8).
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
}

impl Options {
    fn tolerances(&self) -> Tolerances {
        Tolerances {
            tol_norm: self.tol_norm,
            tol_eig: self.tol_eig,
            tol_circle: self.tol_circle,
            tol_verify: self.tol_verify,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients c_0..c_n of an arc union.
    Forward,
    /// Decide whether a coefficient tuple comes from an arc union and recover it.
    Recover,
    /// Forward then recover, reporting the endpoint error.
    Roundtrip,
    /// Round trips on seeded random arc unions.
    Selftest {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

/// Why a command stopped early.
enum Failure {
    Input(String),
    Numerical(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numerical(e)
    }
}

#[derive(Serialize)]
struct ForwardOutput {
    coefficients: Vec<[f64; 2]>,
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum RecoverOutput {
    Recovered {
        arcs: Vec<[f64; 2]>,
        full: bool,
        order: usize,
        residual: f64,
    },
    NotInRange {
        reason: &'static str,
        norm: Option<f64>,
        mismatch: Option<f64>,
    },
}

#[derive(Serialize)]
struct RoundtripOutput {
    pass: bool,
    error: Option<f64>,
    order: Option<usize>,
    arcs: Option<Vec<[f64; 2]>>,
    message: Option<String>,
}

#[derive(Serialize)]
struct SelftestFailure {
    case: usize,
    arcs: Vec<[f64; 2]>,
    full: bool,
    error: Option<f64>,
    message: Option<String>,
}

#[derive(Serialize)]
struct SelftestOutput {
    count: usize,
    seed: u64,
    n_max: usize,
    generator: &'static str,
    passed: usize,
    max_error: f64,
    mean_error: f64,
    failures: Vec<SelftestFailure>,
}

fn read_stdin<T: serde::de::DeserializeOwned>() -> Result<T, Failure> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("invalid JSON: {e}")))
}

fn forward() -> Result<(Value, u8), Failure> {
    let input: ArcInput = read_stdin()?;
    let e = input.arc_union().map_err(Failure::Input)?;
    let out = ForwardOutput {
        coefficients: json::pairs(&e.fourier_coefficients(input.n)),
    };
    Ok((serialize(&out), 0))
}

fn recover_cmd(tol: &Tolerances) -> Result<(Value, u8), Failure> {
    let input: CoefficientInput = read_stdin()?;
    let c = input.tuple().map_err(Failure::Input)?;
    let (out, code) = match recover(&c, tol)? {
        RecoveryOutcome::Recovered(r) => (
            RecoverOutput::Recovered {
                arcs: json::arcs(&r.arcs),
                full: r.arcs.is_full(),
                order: r.order,
                residual: r.residual,
            },
            0,
        ),
        RecoveryOutcome::NotInRange(rej) => (
            RecoverOutput::NotInRange {
                reason: rej.reason.as_str(),
                norm: rej.norm,
                mismatch: rej.mismatch,
            },
            1,
        ),
    };
    Ok((serialize(&out), code))
}

fn roundtrip_cmd(tol: &Tolerances) -> Result<(Value, u8), Failure> {
    let input: ArcInput = read_stdin()?;
    let e = input.arc_union().map_err(Failure::Input)?;
    let out = match roundtrip(&e, input.n, tol) {
        Ok(rt) => RoundtripOutput {
            pass: rt.error <= ROUNDTRIP_THRESHOLD,
            error: Some(rt.error),
            order: Some(rt.recovered.order),
            arcs: Some(json::arcs(&rt.recovered.arcs)),
            message: None,
        },
        Err(Error::RoundTripFailure(message)) => RoundtripOutput {
            pass: false,
            error: None,
            order: None,
            arcs: None,
            message: Some(message),
        },
        Err(other) => return Err(other.into()),
    };
    let code = if out.pass { 0 } else { 1 };
    Ok((serialize(&out), code))
}

fn selftest(tol: &Tolerances, count: usize, seed: u64, n_max: usize) -> (Value, u8) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let (mut max_error, mut total) = (0.0f64, 0.0);
    for case in 0..count {
        let e = random_case(&mut rng, n_max, SELFTEST_MIN_SEP);
        let failure = |error, message| SelftestFailure {
            case,
            arcs: json::arcs(&e),
            full: e.is_full(),
            error,
            message,
        };
        match roundtrip(&e, e.arc_count(), tol) {
            Ok(rt) => {
                max_error = max_error.max(rt.error);
                total += rt.error;
                if rt.error > ROUNDTRIP_THRESHOLD {
                    failures.push(failure(Some(rt.error), None));
                }
            }
            Err(err) => failures.push(failure(None, Some(err.to_string()))),
        }
    }
    let out = SelftestOutput {
        count,
        seed,
        n_max,
        generator: "ChaCha8",
        passed: count - failures.len(),
        max_error,
        mean_error: if count == 0 { 0.0 } else { total / count as f64 },
        failures,
    };
    let code = if out.failures.is_empty() { 0 } else { 1 };
    (serialize(&out), code)
}

fn serialize<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("output types serialize to JSON")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = cli.options.tolerances();
    if !tol.is_valid() {
        eprintln!("error: tolerances must be finite and positive");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Forward => forward(),
        Command::Recover => recover_cmd(&tol),
        Command::Roundtrip => roundtrip_cmd(&tol),
        Command::Selftest { count, n_max } => Ok(selftest(&tol, count, cli.options.seed, n_max)),
    };
    match result {
        Ok((value, code)) => {
            println!("{}", json::to_string(&value, cli.options.pretty));
            ExitCode::from(code)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
    }
}
