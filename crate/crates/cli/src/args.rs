use bicx::{parse_bicomplex, parse_grid, Bicomplex};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bicx",
    version,
    about = "Bicomplex Miller-Ross functions and fractional operators"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function at one point.
    Eval(EvalArgs),
    /// Run identity suites on seeded random clouds.
    Verify(VerifyArgs),
    /// Solve a fractional kinetic equation on a time grid.
    Kinetic(KineticArgs),
    /// Tabulate a function over a real grid.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalFunction {
    Mr,
    Gamma,
    Rgamma,
    Exp,
    Log,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Relative stopping tolerance for series.
    #[arg(long, default_value_t = 1e-14)]
    pub rel_tol: f64,
    /// Term cap for series.
    #[arg(long, default_value_t = 10_000)]
    pub max_terms: usize,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub function: EvalFunction,
    /// Order V.
    #[arg(long, allow_hyphen_values = true, value_parser = bicomplex, default_value = "0")]
    pub v: Bicomplex,
    /// Multiplier C.
    #[arg(long, allow_hyphen_values = true, value_parser = bicomplex, default_value = "1")]
    pub c: Bicomplex,
    /// Argument Z of `mr`, `exp` and `log`.
    #[arg(long, allow_hyphen_values = true, value_parser = bicomplex, default_value = "1")]
    pub z: Bicomplex,
    /// Argument of `gamma` and `rgamma`.
    #[arg(long, allow_hyphen_values = true, value_parser = bicomplex, default_value = "1")]
    pub y: Bicomplex,
    #[command(flatten)]
    pub series: SeriesArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Algebra,
    Special,
    Recurrences,
    Derivatives,
    Ode,
    IntegralReps,
    Barnes,
    Fractional,
    Kinetic,
    Cr,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    /// Cloud seed; the BICX_SEED environment variable takes precedence.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Points per cloud (suite default when omitted).
    #[arg(long)]
    pub n: Option<usize>,
    /// Barnes contour half-height.
    #[arg(long, default_value_t = 40.0)]
    pub t: f64,
    /// Flip a sign inside the ODE check; the suite must then fail.
    #[arg(long)]
    pub inject_bug: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Basic,
    Exp,
    Mr,
}

#[derive(Debug, Args)]
pub struct KineticArgs {
    #[arg(long, value_enum, default_value_t = Kind::Basic)]
    pub kind: Kind,
    /// Order V of the integral operator.
    #[arg(long, allow_hyphen_values = true, value_parser = bicomplex, default_value = "1")]
    pub v: Bicomplex,
    /// Rate constant c > 0.
    #[arg(long, default_value_t = 1.0)]
    pub cc: f64,
    /// Initial quantity N0 > 0.
    #[arg(long, default_value_t = 1.0)]
    pub n0: f64,
    /// Forcing multiplier C (exp and mr kinds).
    #[arg(long, allow_hyphen_values = true, value_parser = bicomplex, default_value = "0")]
    pub c: Bicomplex,
    /// Forcing order mu (mr kind).
    #[arg(long, allow_hyphen_values = true, value_parser = bicomplex, default_value = "0")]
    pub mu: Bicomplex,
    /// Forcing scale Z0 (mr kind).
    #[arg(long, allow_hyphen_values = true, value_parser = bicomplex, default_value = "1")]
    pub z0: Bicomplex,
    /// Fixed index k of the forcing order mu k (mr kind).
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Last grid time; the grid is tmax/points, 2 tmax/points, ..., tmax.
    #[arg(long, default_value_t = 2.0)]
    pub tmax: f64,
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    /// Explicit grid `start:stop:step`, overriding --tmax/--points.
    #[arg(long, allow_hyphen_values = true, value_parser = grid)]
    pub t_grid: Option<Grid>,
    /// Skip the quadrature residual columns.
    #[arg(long)]
    pub no_verify: bool,
    #[command(flatten)]
    pub series: SeriesArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFunction {
    Mr,
    Gamma,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub function: TableFunction,
    #[arg(long, allow_hyphen_values = true, value_parser = bicomplex, default_value = "0")]
    pub v: Bicomplex,
    #[arg(long, allow_hyphen_values = true, value_parser = bicomplex, default_value = "1")]
    pub c: Bicomplex,
    /// Real grid for Z (`mr`).
    #[arg(long, allow_hyphen_values = true, value_parser = grid, default_value = "0:1:0.25")]
    pub z_grid: Grid,
    /// Real grid for the gamma argument (`gamma`).
    #[arg(long, allow_hyphen_values = true, value_parser = grid, default_value = "1:5:1")]
    pub y_grid: Grid,
    #[command(flatten)]
    pub series: SeriesArgs,
}

fn bicomplex(s: &str) -> Result<Bicomplex, String> {
    parse_bicomplex(s).map_err(|e| e.to_string())
}

/// Grid points parsed from `start:stop:step`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(pub Vec<f64>);

fn grid(s: &str) -> Result<Grid, String> {
    parse_grid(s).map(Grid).map_err(|e| e.to_string())
}
