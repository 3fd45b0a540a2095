//! Command-line front end for `symcurve-core`.
//!
//! The binary is a thin wrapper over [`execute`], which returns the text
//! to print and the exit code so it can be driven in-process from tests.

pub mod commands;
pub mod expr;
pub mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symcurve_core::Rational;

pub use output::{Format, OutputDocument};

#[derive(Parser, Debug)]
#[command(name = "symcurve", version)]
#[command(
    about = "Exact classes, intersection numbers, cones and volumes on symmetric powers of curves"
)]
#[command(after_help = "EXAMPLES:
    symcurve class ramification --g 4 --d 3
    symcurve intersect \"(theta - x)^3\" --g 4 --d 3
    symcurve cone --g 5 --d 3 --curve hyperelliptic
    symcurve volume --g 4 --d 3 --t 1/2
    symcurve verify --suite all --format json")]
pub struct Cli {
    /// Output format; defaults to $SYMCURVE_FORMAT, then text
    #[arg(long, global = true, value_enum, env = "SYMCURVE_FORMAT", default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the class of a named cycle
    Class(ClassArgs),
    /// Multiply classes and evaluate in top degree
    Intersect(IntersectArgs),
    /// Effective cone and nef data of C_d
    Cone(ConeArgs),
    /// Volume of θ - t·x
    Volume(VolumeArgs),
    /// Run the identity suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassName {
    Subordinate,
    SmallDiagonal,
    BipartitionDiagonal,
    Ramification,
    #[value(name = "e-k")]
    EK,
    HyperellipticC1d,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    #[default]
    Proof,
    Statement,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Curve {
    #[default]
    General,
    Hyperelliptic,
}

#[derive(Args, Debug)]
pub struct ClassArgs {
    #[arg(value_enum)]
    pub name: ClassName,
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    /// Closed form used for bipartition-diagonal
    #[arg(long, value_enum, default_value_t)]
    pub variant: Variant,
}

#[derive(Args, Debug)]
pub struct IntersectArgs {
    /// Expression in theta, x, smalldiag, ramification, c1d, subordinate, ek
    pub expression: String,
    #[arg(long, allow_hyphen_values = true)]
    pub g: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub d: i64,
    /// Degree of the series used by `subordinate`
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    /// Dimension of the series used by `subordinate`
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<i64>,
}

#[derive(Args, Debug)]
pub struct ConeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub g: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub d: i64,
    #[arg(long, value_enum, default_value_t)]
    pub curve: Curve,
    /// Divisor expression to locate relative to the cone
    #[arg(long)]
    pub member: Option<String>,
}

#[derive(Args, Debug)]
pub struct VolumeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub g: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub d: i64,
    /// Rational `p/q`
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub t: Rational,
    #[arg(long, value_enum, default_value_t)]
    pub curve: Curve,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `all` or one check name
    #[arg(long, default_value = "all", value_parser = suite_names())]
    pub suite: String,
    /// Sweep bound for the chosen check; with `all`, caps every bound
    #[arg(long, allow_hyphen_values = true)]
    pub max: Option<i64>,
    /// Corrupt one identity to confirm the suite can fail
    #[arg(long, value_enum, hide = true)]
    pub inject: Option<Injection>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Injection {
    FlipCombsumRhs,
    ShiftDdSolution,
    OffsetVolume,
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names = vec!["all"];
    names.extend(
        symcurve_core::identity_suite::CheckId::ALL
            .iter()
            .map(|c| c.name()),
    );
    clap::builder::PossibleValuesParser::new(names)
}

/// Parses `p` or `p/q` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: symcurve_core::Integer = p
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a rational p/q"))?;
    let q: symcurve_core::Integer = q
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a rational p/q"))?;
    if q == symcurve_core::Integer::from(0) {
        return Err(format!("{s:?} has a zero denominator"));
    }
    Ok(Rational::new(p, q))
}

pub mod exit {
    pub const OK: u8 = 0;
    pub const VERIFICATION_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const PRECONDITION: u8 = 3;
    pub const OUT_OF_DOMAIN: u8 = 4;
}

/// What a run printed and how it ended.
#[derive(Debug)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub fn execute(cli: &Cli) -> Execution {
    match commands::dispatch(&cli.command) {
        Ok((doc, code)) => Execution {
            stdout: doc.render(cli.format),
            stderr: String::new(),
            code,
        },
        Err(e) => Execution {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use symcurve_core::exact_arith::{int, rat};

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rational("1").unwrap(), int(1));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 12/11 ").unwrap(), rat(12, 11));
        for bad in ["", "1/0", "a", "1.5", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
