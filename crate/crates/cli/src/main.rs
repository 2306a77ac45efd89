//! `oqsim`: run obscure-qubit scripts and single-shot queries.
//!
//! Exit status: 0 on success, 1 on usage, I/O, parse or semantic errors,
//! 2 on numeric domain errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use obscure::dsl::{self, DslError};
use obscure::entangle::TwoQubitRegister;
use obscure::kron::{KroneckerQubit, ObscureAmplitude};
use obscure::membership::MembershipModel;
use obscure::obscure::{BlochParams, ObscureQudit};
use obscure::report::{ConcurrenceRecord, DensityEntry, Listing, NormRecord, Report, Section};
use obscure::selfcheck;

#[derive(Parser)]
#[command(name = "oqsim", version, about = "Obscure-qubit simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Born,
    Arc,
    CircleSquare,
}

impl From<Model> for MembershipModel {
    fn from(m: Model) -> Self {
        match m {
            Model::Born => MembershipModel::BornLike,
            Model::Arc => MembershipModel::Arc,
            Model::CircleSquare => MembershipModel::CircleSquare,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Product,
    Kronecker,
}

#[derive(Clone, Copy, ValueEnum)]
enum Example {
    Bell,
    Ps22,
}

#[derive(clap::Args)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Absolute tolerance for normalization and model checks.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and execute a script.
    Run {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Overrides the script's `model` statement.
        #[arg(long, value_enum)]
        model: Option<Model>,
        /// Accepted and ignored; no computation is stochastic.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check the embedded published values.
    Selfcheck {
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Norm, probabilities and memberships of the qubit at Bloch angles.
    Bloch {
        #[arg(allow_negative_numbers = true)]
        theta: f64,
        #[arg(allow_negative_numbers = true)]
        phi: f64,
        #[arg(allow_negative_numbers = true)]
        theta_mu: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Density matrix of the qubit at Bloch angles.
    Density {
        #[arg(allow_negative_numbers = true)]
        theta: f64,
        #[arg(allow_negative_numbers = true)]
        phi: f64,
        #[arg(allow_negative_numbers = true)]
        theta_mu: f64,
        /// Product form (2×2) or Kronecker form (4×4).
        #[arg(long, value_enum, default_value = "kronecker")]
        form: Form,
        #[command(flatten)]
        common: Common,
    },
    /// Concurrences of a two-qubit register.
    ///
    /// VALUES are eight amplitudes: b then β, each listed as 00' 10' 01' 11'.
    /// A b entry may be complex, written `re,im`; fractions like 1/2 are
    /// accepted.
    Concurrence {
        #[arg(
            num_args = 8,
            allow_negative_numbers = true,
            required_unless_present = "example",
            conflicts_with = "example"
        )]
        values: Vec<String>,
        #[arg(long, value_enum)]
        example: Option<Example>,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    User(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::User(_) => 1,
            Failure::Domain(_) => 2,
        }
    }
}

fn domain(e: obscure::Error) -> Failure {
    Failure::Domain(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            let (Failure::User(msg) | Failure::Domain(msg)) = &f;
            eprintln!("oqsim: {msg}");
            ExitCode::from(f.code())
        }
    }
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
}

fn dispatch(cmd: Command) -> Result<ExitCode, Failure> {
    match cmd {
        Command::Run {
            path,
            common,
            model,
            seed: _,
        } => {
            let src = std::fs::read_to_string(&path)
                .map_err(|e| Failure::User(format!("cannot read {}: {e}", path.display())))?;
            let report = dsl::run(&src, model.map(Into::into), common.tolerance).map_err(|e| {
                let msg = format!("{}: {e}", path.display());
                match e {
                    DslError::Runtime { .. } => Failure::Domain(msg),
                    _ => Failure::User(msg),
                }
            })?;
            emit(&report, common.format);
        }
        Command::Selfcheck { tolerance } => {
            let start = Instant::now();
            let result = selfcheck::run(tolerance);
            for item in &result.items {
                println!("{item}");
            }
            let passed = result.items.iter().filter(|i| i.passed).count();
            println!(
                "{passed}/{} passed in {:.3} s",
                result.items.len(),
                start.elapsed().as_secs_f64()
            );
            if !result.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bloch {
            theta,
            phi,
            theta_mu,
            common,
        } => {
            let params = BlochParams::new(theta, phi, theta_mu).map_err(domain)?;
            let state = ObscureQudit::from_bloch(params);
            let labels = || vec!["0".to_string(), "1".to_string()];
            let mut report = Report::new(MembershipModel::BornLike);
            report.push(Section::Norm(NormRecord::new(
                "state",
                state.norm(),
                params.closed_form_norm(),
            )));
            report.push(Section::Probabilities(vec![Listing::new(
                "state",
                labels(),
                state.probabilities(),
            )]));
            let mu = state.memberships(common.tolerance).map_err(domain)?;
            report.push(Section::Memberships(vec![Listing::new(
                "state",
                labels(),
                mu.into_vec(),
            )]));
            emit(&report, common.format);
        }
        Command::Density {
            theta,
            phi,
            theta_mu,
            form,
            common,
        } => {
            let params = BlochParams::new(theta, phi, theta_mu).map_err(domain)?;
            let state = ObscureQudit::from_bloch(params);
            let rho = match form {
                Form::Product => state.density2().map_err(domain)?,
                Form::Kronecker => {
                    let (q, a) = (state.quantum(), state.membership());
                    KroneckerQubit::from_columns([q[0], q[1]], [a[0], a[1]], common.tolerance)
                        .map_err(domain)?
                        .density4()
                }
            };
            let mut report = Report::new(MembershipModel::BornLike);
            report.push(Section::Density(vec![DensityEntry::new("state", &rho)]));
            emit(&report, common.format);
        }
        Command::Concurrence {
            values,
            example,
            common,
        } => {
            let reg = match example {
                Some(Example::Bell) => selfcheck::bell_register(),
                Some(Example::Ps22) => selfcheck::intermediate_register(),
                None => register_from_args(&values, common.tolerance)?,
            };
            let mut report = Report::new(MembershipModel::BornLike);
            report.push(Section::Concurrence(ConcurrenceRecord::new(
                "register",
                reg.concurrence(),
            )));
            emit(&report, common.format);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_real(s: &str) -> Result<f64, Failure> {
    let bad = || Failure::User(format!("not a number: {s:?}"));
    let v = match s.split_once('/') {
        Some((n, d)) => {
            n.trim().parse::<f64>().map_err(|_| bad())?
                / d.trim().parse::<f64>().map_err(|_| bad())?
        }
        None => s.trim().parse::<f64>().map_err(|_| bad())?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

fn parse_complex(s: &str) -> Result<Complex64, Failure> {
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse_real(re)?, parse_real(im)?)),
        None => Ok(Complex64::new(parse_real(s)?, 0.0)),
    }
}

fn register_from_args(values: &[String], tol: f64) -> Result<TwoQubitRegister<f64>, Failure> {
    let mut amps = [ObscureAmplitude::zero(); 4];
    for k in 0..4 {
        amps[k] = ObscureAmplitude::new(parse_complex(&values[k])?, parse_real(&values[k + 4])?);
    }
    TwoQubitRegister::from_listing(amps, tol).map_err(domain)
}
