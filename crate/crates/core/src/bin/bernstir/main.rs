//! `bernstir`: exact r-Stirling numbers, higher-order Bernoulli values and
//! identity sweeps from the command line.
//!
//! Exit codes: 0 success / verified, 1 identity falsified or routes
//! disagree, 2 usage error, 3 pole at a sampled point.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bernstir::{BernoulliFamily, Rational, SignConvention, StirlingKind};

#[derive(Debug, Parser)]
#[command(name = "bernstir", version, about = "Exact r-Stirling numbers and higher-order Bernoulli polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// r-Stirling number [N K]_r / {N K}_r, or a whole triangle with --table.
    Stirling(StirlingArgs),
    /// B_n^(alpha)(x) or b_n^(alpha)(x) at an integer x.
    Bernoulli(BernoulliArgs),
    /// Sweep an identity over a parameter grid.
    Verify(VerifyArgs),
    /// Tables of Genocchi numbers, Bernoulli numbers or Euler values.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct StirlingArgs {
    /// 1 = unsigned first kind (cycles), 2 = second kind (blocks).
    #[arg(long, value_parser = parse_kind)]
    kind: StirlingKind,
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long = "K")]
    big_k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    r: usize,
    /// Emit every row N = r..=MAX_N instead of a single value.
    #[arg(long, value_name = "MAX_N", conflicts_with_all = ["big_n", "big_k"])]
    table: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Route {
    /// Closed forms from r-Stirling numbers.
    #[default]
    Closed,
    /// Generating-function expansion.
    Oracle,
    /// Both, with an agreement flag.
    Both,
}

#[derive(Debug, Args)]
struct BernoulliArgs {
    /// B (first kind) or b (second kind).
    #[arg(long, value_parser = parse_family)]
    family: BernoulliFamily,
    #[arg(long)]
    n: usize,
    /// Order as a/b, e.g. 7/3, -5/2 or 2.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    alpha: Rational,
    #[arg(long, allow_hyphen_values = true)]
    x: i64,
    /// Number of sample points minus one (default n).
    #[arg(long)]
    p: Option<usize>,
    /// Shift of the sampled orders (default 0).
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    route: Route,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity id, e.g. c1-first, c5-second, c1-ex-r1-first, a5, carlitz.
    #[arg(value_parser = parse_identity)]
    identity: bernstir::IdentityId,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long)]
    max_r: Option<usize>,
    #[arg(long)]
    max_q: Option<usize>,
    /// Offsets d with p = n + d, comma separated.
    #[arg(long, value_delimiter = ',')]
    p_offsets: Option<Vec<usize>>,
    /// Orders for the carlitz sweep, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational)]
    alphas: Option<Vec<Rational>>,
    /// Sign of the first displays of c1/c5: as printed, or corrected.
    #[arg(long, value_parser = parse_sign, default_value = "corrected")]
    sign: SignConvention,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(value_enum)]
    kind: TableKind,
    /// Largest index for genocchi (n) and bernoulli-numbers (n).
    #[arg(long, default_value_t = 6)]
    max: usize,
    /// Degree n of B_n in E_{n-1}(m) for euler-even.
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    m_min: usize,
    #[arg(long, default_value_t = 8)]
    m_max: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Genocchi,
    BernoulliNumbers,
    EulerEven,
}

fn parse_kind(s: &str) -> Result<StirlingKind, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<BernoulliFamily, String> {
    s.parse()
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    bernstir::arith::parse_rational(s).map_err(|e| e.to_string())
}

fn parse_identity(s: &str) -> Result<bernstir::IdentityId, String> {
    s.parse()
}

fn parse_sign(s: &str) -> Result<SignConvention, String> {
    s.parse()
}

/// Process outcome other than plain success.
#[derive(Debug)]
pub enum Failure {
    /// Identity falsified or routes disagree; output was still printed.
    Falsified,
    Usage(String),
    Pole(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Falsified => 1,
            Failure::Usage(_) => 2,
            Failure::Pole(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Stirling(args) => commands::stirling(&args),
        Command::Bernoulli(args) => commands::bernoulli(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Table(args) => commands::table(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Falsified => {}
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Pole(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
