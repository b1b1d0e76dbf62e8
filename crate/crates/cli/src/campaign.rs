//! Campaign execution: single verification, seeded random campaigns, and
//! the invert mode, with deterministic output and exit codes.
//!
//! Exit codes: 0 all verified, 1 mismatch found, 2 usage error,
//! 3 internal/precision error.
//!
//! Cases of a random campaign may run concurrently; reports are buffered
//! and emitted in case order, so output bytes are identical for identical
//! argv (seed included).

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use lagver_core::{
    power_sum, solve_ramified_branch, solve_unramified, verify, Error, LaurentSeries, PowerSeries,
    RSpec, Rat, VerificationReport,
};

use crate::rng::{random_r_coeffs, SplitMix64};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Invert,
    Verify,
    RandomVerify,
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub mode: Mode,
    pub r_coeffs: Vec<Rat>,
    pub root: Option<Rat>,
    pub e: u32,
    pub order: i64,
    pub cases: u64,
    pub seed: u64,
    pub deg_min: i64,
    pub deg_max: i64,
    pub coeff_bound: i64,
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    AllVerified,
    MismatchFound,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::AllVerified => 0,
            Outcome::MismatchFound => 1,
        }
    }
}

/// Exit code for an error bubbling out of a campaign: bad input is a usage
/// error (2), anything arising during computation is internal (3).
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidRational(_)
        | Error::ZeroLeadingCoefficient
        | Error::RootMismatch { .. }
        | Error::RootRequired { .. } => 2,
        Error::PrecisionExceeded { .. }
        | Error::DivisionByZero
        | Error::CompositionDomain { .. }
        | Error::ConstantTermNotOne { .. }
        | Error::ConstantTermNotZero { .. }
        | Error::ZeroConstantTerm
        | Error::InternalConsistency(_) => 3,
    }
}

/// Context printed alongside exit-3 errors so the failure is reproducible:
/// the working-order budget that turned out to be insufficient.
pub fn budget_note(e: u32, order: i64) -> String {
    let e = e as i64;
    format!(
        "working-order budget: t-order e*(N+e+2) = {} for e = {e}, N = {order}",
        e * (order + e + 2)
    )
}

pub fn run_campaign(config: &CampaignConfig, out: &mut dyn Write) -> Result<Outcome, Error> {
    match config.mode {
        Mode::Verify => run_verify(config, out),
        Mode::RandomVerify => run_random_verify(config, out),
        Mode::Invert => run_invert(config, out),
    }
}

fn build_rspec(coeffs: Vec<Rat>, root: &Option<Rat>) -> Result<RSpec, Error> {
    match root {
        Some(rho) => RSpec::with_root(coeffs, rho.clone()),
        None => RSpec::new(coeffs),
    }
}

fn run_verify(config: &CampaignConfig, out: &mut dyn Write) -> Result<Outcome, Error> {
    let r = build_rspec(config.r_coeffs.clone(), &config.root)?;
    // fail fast on an unresolvable root before solving anything
    r.designated_root(config.e)?;
    let report = verify(&r, config.e, config.order)?;
    emit_report(&report, config.json, out);
    Ok(if report.equal {
        Outcome::AllVerified
    } else {
        Outcome::MismatchFound
    })
}

fn run_random_verify(config: &CampaignConfig, out: &mut dyn Write) -> Result<Outcome, Error> {
    let mut rng = SplitMix64::new(config.seed);
    let inputs: Vec<RSpec> = (0..config.cases)
        .map(|_| {
            let coeffs = random_r_coeffs(&mut rng, config.deg_min, config.deg_max, config.coeff_bound);
            RSpec::new(coeffs).expect("generator forces r_0 = 1")
        })
        .collect();

    let results: Vec<Result<VerificationReport, Error>> = inputs
        .par_iter()
        .map(|r| verify(r, config.e, config.order))
        .collect();

    let mut outcome = Outcome::AllVerified;
    for (i, result) in results.into_iter().enumerate() {
        let report = result?;
        if config.json {
            emit_report(&report, true, out);
        } else {
            let _ = writeln!(
                out,
                "case {i}: R = [{}], e = {}, order = {} ... {}",
                join(&report.r),
                report.e,
                report.order,
                if report.equal { "equal" } else { "MISMATCH" }
            );
        }
        if !report.equal {
            outcome = Outcome::MismatchFound;
            if !config.json {
                emit_report(&report, false, out);
                let _ = writeln!(
                    out,
                    "reproduce: lagver verify --r {} --e {} --order {}",
                    report.r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
                    report.e,
                    report.order
                );
            }
        }
    }
    if !config.json {
        let _ = writeln!(
            out,
            "{}",
            match outcome {
                Outcome::AllVerified => format!("all {} cases verified", config.cases),
                Outcome::MismatchFound => "MISMATCH FOUND (see above)".to_string(),
            }
        );
    }
    Ok(outcome)
}

#[derive(Serialize)]
struct InvertUnramifiedOutput {
    e: u32,
    order: i64,
    h: PowerSeries,
}

#[derive(Serialize)]
struct InvertRamifiedOutput {
    e: u32,
    order: i64,
    g: PowerSeries,
    power_sums: Vec<LaurentSeries>,
}

fn run_invert(config: &CampaignConfig, out: &mut dyn Write) -> Result<Outcome, Error> {
    let r = build_rspec(config.r_coeffs.clone(), &config.root)?;
    r.designated_root(config.e)?;
    if config.e == 1 {
        let h = solve_unramified(&r, config.order);
        if config.json {
            let payload = InvertUnramifiedOutput {
                e: 1,
                order: config.order,
                h,
            };
            let _ = writeln!(out, "{}", serde_json::to_string(&payload).expect("serializable"));
        } else {
            let _ = writeln!(out, "H = {}", h.to_pretty("q"));
        }
    } else {
        // t-order e(order+1) gives every p_m at least order+1 known q-coefficients
        let n_t = (config.e as i64) * (config.order + 1);
        let branches = solve_ramified_branch(&r, config.e, n_t)?;
        let g = branches.branch_series().truncated(config.order + 1);
        let sums: Vec<LaurentSeries> = (1..=2 * config.e as i64)
            .map(|m| power_sum(&branches, m).truncated(config.order + 1))
            .collect();
        if config.json {
            let payload = InvertRamifiedOutput {
                e: config.e,
                order: config.order,
                g,
                power_sums: sums,
            };
            let _ = writeln!(out, "{}", serde_json::to_string(&payload).expect("serializable"));
        } else {
            let _ = writeln!(out, "g = {}", g.to_pretty("t"));
            for (m, s) in sums.iter().enumerate() {
                let _ = writeln!(out, "p_{} = {}", m + 1, s.to_pretty("q"));
            }
        }
    }
    Ok(Outcome::AllVerified)
}

fn emit_report(report: &VerificationReport, json: bool, out: &mut dyn Write) {
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string(report).expect("serializable"));
        return;
    }
    let _ = writeln!(out, "R = [{}], e = {}, order = {}", join(&report.r), report.e, report.order);
    let _ = writeln!(out, "lhs: {}", join(&report.lhs));
    let _ = writeln!(out, "rhs: {}", join(&report.rhs));
    let _ = writeln!(out, "equal: {}", report.equal);
    if let Some(k) = report.first_mismatch {
        let _ = writeln!(out, "first mismatch at q^{k}");
    }
}

fn join(coeffs: &[Rat]) -> String {
    coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
