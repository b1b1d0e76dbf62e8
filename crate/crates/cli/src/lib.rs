//! Command-line front end: argument parsing, campaign execution, exit codes.
//!
//! Subcommands: `invert`, `verify`, `random-verify`. All output intended for
//! machines (`--json`) is deterministic byte-for-byte given identical argv.

// The core error type carries exact rationals; error paths are cold.
#![allow(clippy::result_large_err)]

pub mod campaign;
pub mod rng;

use std::ffi::OsString;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use campaign::{budget_note, error_exit_code, run_campaign, CampaignConfig, Mode};
use lagver_core::Rat;

#[derive(Parser)]
#[command(
    name = "lagver",
    about = "Exact verifier for a Lagrange-inversion product identity over Newton-Puiseux branches",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the functional equation: print H for e = 1, or the branch
    /// series g and the first 2e power sums for e > 1
    Invert(ProblemArgs),
    /// Compute both sides of the identity for one R and compare exactly
    Verify(ProblemArgs),
    /// Verify a seeded campaign of random R; deterministic for a fixed seed
    RandomVerify(RandomArgs),
}

#[derive(Args)]
struct ProblemArgs {
    /// Coefficients r_0,r_1,... of R, ascending exponent ("1,-2,1/2")
    #[arg(long = "r", value_delimiter = ',', allow_hyphen_values = true, required = true, value_parser = parse_rat)]
    r: Vec<Rat>,

    /// Ramification index: verify H^e = q R(H)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    e: u32,

    /// q-order to compute and compare
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    order: i64,

    /// Designated e-th root of r_0 (defaults to 1 when r_0 = 1; forced to
    /// r_0 itself when e = 1)
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
    root: Option<Rat>,

    /// Emit JSON instead of human-readable text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RandomArgs {
    /// Number of random cases
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    cases: u64,

    /// PRNG seed (SplitMix64)
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Minimum degree of random R
    #[arg(long = "deg-min", default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..))]
    deg_min: i64,

    /// Maximum degree of random R (hint: only deg R > e gives a nontrivial
    /// left side; deg R <= e collapses it to 1)
    #[arg(long = "deg-max", default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
    deg_max: i64,

    /// Coefficients are drawn uniformly from [-B, B] (r_0 is forced to 1)
    #[arg(long = "coeff-bound", default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
    coeff_bound: i64,

    /// Ramification index
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    e: u32,

    /// q-order to compare per case
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    order: i64,

    /// Emit one JSON report per line
    #[arg(long)]
    json: bool,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::from_str(s).map_err(|e| e.to_string())
}

fn to_config(command: Command) -> CampaignConfig {
    match command {
        Command::Invert(a) => problem_config(Mode::Invert, a),
        Command::Verify(a) => problem_config(Mode::Verify, a),
        Command::RandomVerify(a) => CampaignConfig {
            mode: Mode::RandomVerify,
            r_coeffs: Vec::new(),
            root: None,
            e: a.e,
            order: a.order,
            cases: a.cases,
            seed: a.seed,
            deg_min: a.deg_min,
            deg_max: a.deg_max,
            coeff_bound: a.coeff_bound,
            json: a.json,
        },
    }
}

fn problem_config(mode: Mode, a: ProblemArgs) -> CampaignConfig {
    CampaignConfig {
        mode,
        r_coeffs: a.r,
        root: a.root,
        e: a.e,
        order: a.order,
        cases: 0,
        seed: 0,
        deg_min: 1,
        deg_max: 1,
        coeff_bound: 1,
        json: a.json,
    }
}

/// Parse argv, run, and return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let config = to_config(cli.command);
    if config.mode == Mode::RandomVerify && config.deg_max < config.deg_min {
        eprintln!("error: --deg-max must be at least --deg-min");
        return 2;
    }

    let mut stdout = std::io::stdout().lock();
    match run_campaign(&config, &mut stdout) {
        Ok(outcome) => outcome.exit_code(),
        Err(err) => {
            let code = error_exit_code(&err);
            eprintln!("error: {err}");
            if code == 3 {
                eprintln!("{}", budget_note(config.e, config.order));
            }
            code
        }
    }
}
