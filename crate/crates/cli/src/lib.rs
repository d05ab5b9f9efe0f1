//! Command-line driver for the cherednik verification kernel.

pub mod commands;
pub mod eval;
pub mod expr;
pub mod report;

use std::path::PathBuf;

use cherednik_core::{Fp, GenOrder, Rational, DEFAULT_STEP_BUDGET};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use report::{Check, Report, Status, Witness};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse {what}: {source}")]
    Parse {
        what: String,
        #[source]
        source: expr::ParseError,
    },
    #[error("{what}: {source}")]
    Eval {
        what: String,
        #[source]
        source: eval::EvalError,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Field {
    Q,
    Fp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Default,
    Triangular,
}

impl From<OrderArg> for GenOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Default => GenOrder::Default,
            OrderArg::Triangular => GenOrder::Triangular,
        }
    }
}

#[derive(Debug, Args)]
pub struct Options {
    /// Deformation parameter, a polynomial in tau and Delta.
    #[arg(
        long = "c",
        global = true,
        default_value = "0",
        allow_hyphen_values = true
    )]
    pub c: String,
    #[arg(long, global = true, value_enum, default_value = "q")]
    pub field: Field,
    /// Prime for `--field fp`.
    #[arg(long, global = true)]
    pub p: Option<u32>,
    #[arg(long, global = true)]
    pub max_degree: Option<u32>,
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_BUDGET)]
    pub step_budget: u64,
    #[arg(long, global = true, value_enum, default_value = "default")]
    pub order: OrderArg,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression.
    Normalize { expr: String },
    /// Normal form of `ab - ba`.
    Commutator { a: String, b: String },
    /// F and G of a polynomial in tau and Delta.
    Fg { alpha: String },
    /// F(Delta^n), G(Delta^n) for n up to --max-degree (default 5).
    FgTable,
    /// The Jacobi residual of c.
    Jacobi,
    /// Jacobi-triple residuals of the relation table.
    PbwCheck,
    /// The central element B.
    CenterB,
    /// The central element D = d - z; z searched with degrees up to --max-degree (default 3).
    CenterD,
    /// Central elements in a box of total degree --max-degree (default 3).
    CenterScan {
        #[arg(long, requires = "ug_degree")]
        v_degree: Option<u32>,
        #[arg(long, requires = "v_degree")]
        ug_degree: Option<u32>,
    },
    /// alpha_m for m = --m, or for 1..=--max-degree (default 3).
    AlphaM {
        #[arg(long)]
        m: Option<u32>,
    },
    /// Finite dimensionality of L(lambda, mu), m up to --max-degree (default 3).
    FiniteDim {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        mu: String,
    },
    /// Maximal vectors of M(lambda, mu) to depth --max-degree (default 2).
    MaximalVectors {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        mu: String,
    },
    /// Centrality claims in characteristic p; needs --field fp.
    Modp,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Normalize { .. } => "normalize",
            Command::Commutator { .. } => "commutator",
            Command::Fg { .. } => "fg",
            Command::FgTable => "fg-table",
            Command::Jacobi => "jacobi",
            Command::PbwCheck => "pbw-check",
            Command::CenterB => "center-b",
            Command::CenterD => "center-d",
            Command::CenterScan { .. } => "center-scan",
            Command::AlphaM { .. } => "alpha-m",
            Command::FiniteDim { .. } => "finite-dim",
            Command::MaximalVectors { .. } => "maximal-vectors",
            Command::Modp => "modp",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cherednik",
    version,
    about = "Verification kernel for infinitesimal Cherednik algebras of gl2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

macro_rules! dispatch_prime {
    ($p:expr, $cli:expr, [$($n:literal),*]) => {
        match $p {
            $($n => commands::execute::<Fp<$n>>($cli),)*
            other => Err(CliError::Usage(format!("--p {other}: supported primes are those below 100"))),
        }
    };
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match (cli.opts.field, cli.opts.p) {
        (Field::Q, None) => commands::execute::<Rational>(cli),
        (Field::Q, Some(_)) => Err(CliError::Usage("--p needs --field fp".into())),
        (Field::Fp, None) => Err(CliError::Usage("--field fp needs --p".into())),
        (Field::Fp, Some(p)) => dispatch_prime!(
            p,
            cli,
            [
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                83, 89, 97
            ]
        ),
    }
}
