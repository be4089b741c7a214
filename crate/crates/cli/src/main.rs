//! `hopf-qexp`: quasi-exponents, Drinfeld doubles and twists of
//! finite-dimensional Hopf algebras, in exact arithmetic.

mod commands;
mod output;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopf_qexp::Error;

#[derive(Parser, Debug)]
#[command(name = "hopf-qexp", version, about = "Exact quasi-exponents of finite-dimensional Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Hopf algebra axioms.
    Validate(AlgebraArgs),
    /// Minimal polynomial of the Drinfeld element, qexp, exponent, |S²|.
    Qexp(QexpArgs),
    /// The exponent (order of the Drinfeld element), possibly infinite.
    Exponent(QexpArgs),
    /// Order of the squared antipode.
    S2Order(BoundArgs),
    /// The declared grouplikes, verified, with their orders.
    Grouplikes(AlgebraArgs),
    /// Build D(H) with its R-matrix and check quasitriangularity.
    Double(AlgebraArgs),
    /// Check the twist conditions for a twist file.
    TwistCheck(TwistArgs),
    /// Emit the twisted algebra Hᴶ.
    TwistApply(TwistArgs),
    /// Emit a preset algebra as JSON, or list the preset zoo.
    Preset(PresetArgs),
    /// Run every property over the preset zoo.
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// Preset name, e.g. sweedler, taft:3, group:builtin:S3, tensor:a,b.
    #[arg(long, conflicts_with_all = ["input", "file"])]
    pub preset: Option<String>,
    /// Hopf algebra JSON file.
    #[arg(long = "in", conflicts_with = "file")]
    pub input: Option<PathBuf>,
    /// Hopf algebra JSON file (same as --in).
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct BoundArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Search bound for orders.
    #[arg(long, env = "HOPFQEXP_BOUND")]
    pub bound: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    T,
    Regular,
}

#[derive(Args, Debug, Clone)]
pub struct QexpArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Search bound for the root-of-unity order.
    #[arg(long, env = "HOPFQEXP_BOUND")]
    pub bound: Option<u64>,
    /// Also compute through the other route and require agreement.
    #[arg(long)]
    pub cross_check: bool,
    #[arg(long, value_enum, default_value_t = RouteArg::T)]
    pub route: RouteArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct TwistArgs {
    /// Twist file: {"algebra": name or object, "J": N×N, "J_inv"?: N×N}.
    #[arg(long)]
    pub twist: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct PresetArgs {
    /// Preset name.
    #[arg(required_unless_present = "list")]
    pub name: Option<String>,
    /// List the preset zoo.
    #[arg(long)]
    pub list: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct SuiteArgs {
    /// Skip algebras above this dimension.
    #[arg(long, default_value_t = 27)]
    pub max_dim: usize,
    /// Include the expensive cross-checks.
    #[arg(long)]
    pub deep: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// A computed check came out false (exit 1).
    Check(String),
    /// Bad input: unreadable, malformed or axiom-violating (exit 2).
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } | Error::Inconsistent(_) | Error::DivisionByZero => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate(a) => commands::validate(&a),
        Command::Qexp(a) => commands::qexp(&a),
        Command::Exponent(a) => commands::exponent(&a),
        Command::S2Order(a) => commands::s2_order(&a),
        Command::Grouplikes(a) => commands::grouplikes(&a),
        Command::Double(a) => commands::double(&a),
        Command::TwistCheck(a) => commands::twist_check(&a),
        Command::TwistApply(a) => commands::twist_apply(&a),
        Command::Preset(a) => commands::preset(&a),
        Command::Suite(a) => suite::run(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
