use clap::{Args, Parser, Subcommand, ValueEnum};
use rodrigues_core::exact::parse_rational;
use rodrigues_core::{Poly, Rational};

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Ascending coefficients, comma separated: `1,0,-1/2` is `1 - x^2/2`.
fn poly(s: &str) -> Result<Poly, String> {
    s.split(',').map(rational).collect::<Result<Vec<_>, _>>().map(Poly::new)
}

#[derive(Parser, Debug)]
#[command(name = "rodrigues", version, about = "Exact complementary polynomials from Rodrigues formulas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coefficient tables for P_0 .. P_V.
    Gen(GenArgs),
    /// Exact value of one polynomial at a rational point.
    Eval(EvalArgs),
    /// Run identity checks; exits 1 if any assert-class check fails.
    Check(CheckArgs),
    /// Shift each coefficient slot of each assert check and confirm it fails.
    Audit(CheckArgs),
    Table {
        #[command(subcommand)]
        table: TableCommand,
    },
    Probe {
        #[command(subcommand)]
        probe: ProbeCommand,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// legendre, confluent, hypergeometric, relhermite, prelaguerre or general
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub c: Option<Rational>,
    #[arg(long = "N", value_parser = rational, allow_hyphen_values = true)]
    pub n: Option<Rational>,
    /// General family only: weighted or hypergeometric.
    #[arg(long)]
    pub framework: Option<String>,
    #[arg(long, value_parser = poly, allow_hyphen_values = true)]
    pub sigma: Option<Poly>,
    #[arg(long, value_parser = poly, allow_hyphen_values = true)]
    pub w: Option<Poly>,
    /// Exponential argument of the hypergeometric-type framework.
    #[arg(long, value_parser = poly, allow_hyphen_values = true)]
    pub q: Option<Poly>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub nu_max: u32,
    #[arg(long, default_value = "genfunc")]
    pub route: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Expand the generating function to this order before truncating.
    #[arg(long)]
    pub order: Option<u32>,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub nu: u32,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub x: Rational,
    #[arg(long, default_value = "genfunc")]
    pub route: String,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Comma-separated check ids, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value = "default")]
    pub grid: String,
}

#[derive(Subcommand, Debug)]
pub enum TableCommand {
    /// Rows (l, m, N_l^m) for 0 <= m <= l <= L.
    LegendreNorms {
        #[arg(long)]
        l_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
pub enum ProbeCommand {
    /// Both sides of the resummed Legendre translation series.
    Translation {
        #[arg(long)]
        l: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        h: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, default_value_t = 40)]
        terms: u32,
    },
}
