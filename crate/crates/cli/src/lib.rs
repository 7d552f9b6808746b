//! Command implementations behind the `bicx` binary.
//!
//! Exit codes: 0 success, 1 identity failure, 2 parse error, 3 domain error,
//! 4 divergence or non-convergence.

pub mod args;
pub mod suites;
pub mod table;

use std::io::Write;

use bicx::fractional::{kinetic_solve, kinetic_verify, KineticProblem, KineticSolution};
use bicx::literal::format_real;
use bicx::miller_ross::{eval, MRParams};
use bicx::special::{bicomplex_gamma, bicomplex_reciprocal_gamma};
use bicx::{
    format_bicomplex, Bicomplex, Error, HyperbolicNorm, QuadratureConfig, TruncationPolicy,
};

use args::{
    Cli, Command, EvalArgs, EvalFunction, Kind, KineticArgs, SeriesArgs, TableArgs, TableFunction,
    VerifyArgs,
};
use suites::{suite_name, SuiteConfig};
use table::{Cell, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_DIVERGENCE: i32 = 4;

/// Environment variable that overrides `verify --seed`.
pub const SEED_VAR: &str = "BICX_SEED";

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::MaxTermsExceeded { .. }
        | Error::SeriesDivergence { .. }
        | Error::QuadratureNonConvergence { .. }
        | Error::PathTruncationError { .. } => EXIT_DIVERGENCE,
        _ => EXIT_DOMAIN,
    }
}

/// Runs a parsed command, writing data to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a).map(|t| (t, EXIT_OK)),
        Command::Verify(a) => match seed(a) {
            Ok(s) => cmd_verify(a, s),
            Err(msg) => {
                let _ = writeln!(err, "error: {msg}");
                return EXIT_PARSE;
            }
        },
        Command::Kinetic(a) => cmd_kinetic(a).map(|t| (t, EXIT_OK)),
        Command::Table(a) => cmd_table(a).map(|t| (t, EXIT_OK)),
    };
    match result {
        Ok((table, code)) => {
            if out.write_all(table.render(cli.format).as_bytes()).is_err() {
                return EXIT_DOMAIN;
            }
            code
        }
        Err(Failure { error, note }) => {
            let _ = writeln!(err, "error: {}: {error}", error.name());
            if let Some(note) = note {
                let _ = writeln!(err, "{note}");
            }
            exit_code(&error)
        }
    }
}

struct Failure {
    error: Error,
    note: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, note: None }
    }
}

type CmdResult<T> = std::result::Result<T, Failure>;

fn policy(s: &SeriesArgs) -> CmdResult<TruncationPolicy> {
    Ok(TruncationPolicy::new(s.rel_tol, 1e-300, s.max_terms)?)
}

fn norm_text(n: HyperbolicNorm) -> String {
    format!("{}|{}", format_real(n.n1), format_real(n.n2))
}

fn cmd_eval(a: &EvalArgs) -> CmdResult<Table> {
    let mut t = Table::new(vec!["function", "value", "terms_used", "tail_bound"]);
    let name = match a.function {
        EvalFunction::Mr => "mr",
        EvalFunction::Gamma => "gamma",
        EvalFunction::Rgamma => "rgamma",
        EvalFunction::Exp => "exp",
        EvalFunction::Log => "log",
    };
    let (value, terms, tail) = match a.function {
        EvalFunction::Mr => {
            let e = eval(&MRParams::new(a.v, a.c), a.z, &policy(&a.series)?)?;
            (e.value, e.terms_used.into(), norm_text(e.tail_bound).into())
        }
        EvalFunction::Gamma => (bicomplex_gamma(a.y)?, Cell::Empty, Cell::Empty),
        EvalFunction::Rgamma => (bicomplex_reciprocal_gamma(a.y), Cell::Empty, Cell::Empty),
        EvalFunction::Exp => (a.z.exp(), Cell::Empty, Cell::Empty),
        EvalFunction::Log => (a.z.log()?, Cell::Empty, Cell::Empty),
    };
    t.push(vec![
        name.into(),
        format_bicomplex(&value).into(),
        terms,
        tail,
    ]);
    Ok(t)
}

fn seed(a: &VerifyArgs) -> std::result::Result<u64, String> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("{SEED_VAR}={s:?} is not an unsigned integer")),
        Err(_) => Ok(a.seed),
    }
}

/// `x` rounded to three significant digits, so reports do not depend on
/// the last bits of a residual.
fn three_digits(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.2e}").parse().unwrap_or(x)
    } else {
        x
    }
}

fn cmd_verify(a: &VerifyArgs, seed: u64) -> CmdResult<(Table, i32)> {
    let cfg = SuiteConfig {
        seed,
        n: a.n,
        barnes_height: a.t,
        inject_bug: a.inject_bug,
    };
    let reports = suites::run(a.suite, &cfg)?;
    let passed = reports.iter().all(|r| r.passed());
    let mut t = Table::new(vec![
        "suite", "check", "points", "worst", "relation", "budget", "status",
    ]);
    t.meta.push(("seed", Cell::Int(seed)));
    t.meta.push(("n", a.n.map_or(Cell::Empty, Cell::from)));
    t.meta.push(("passed", passed.into()));
    for report in &reports {
        for c in &report.checks {
            t.push(vec![
                suite_name(report.suite).into(),
                c.name.into(),
                c.points.into(),
                three_digits(c.worst).into(),
                c.relation.symbol().into(),
                c.budget.into(),
                if c.passed() { "PASS" } else { "FAIL" }.into(),
            ]);
        }
    }
    Ok((t, if passed { EXIT_OK } else { EXIT_IDENTITY }))
}

fn problem(a: &KineticArgs) -> CmdResult<KineticProblem> {
    Ok(match a.kind {
        Kind::Basic => KineticProblem::basic(a.n0, a.cc, a.v)?,
        Kind::Exp => KineticProblem::exp_forced(a.n0, a.cc, a.v, a.c)?,
        Kind::Mr => KineticProblem::mr_forced(a.n0, a.cc, a.v, a.c, a.mu, a.z0, a.k)?,
    })
}

fn diverged(sol: &KineticSolution, error: Error) -> Failure {
    let note = match error {
        Error::SeriesDivergence { .. } | Error::MaxTermsExceeded { .. } => Some(format!(
            "empirical radius: t <= {}",
            format_real(sol.empirical_radius())
        )),
        _ => None,
    };
    Failure { error, note }
}

fn cmd_kinetic(a: &KineticArgs) -> CmdResult<Table> {
    let problem = problem(a)?;
    let sol = kinetic_solve(&problem, &policy(&a.series)?)?;
    let grid: Vec<f64> = match &a.t_grid {
        Some(g) => g.0.clone(),
        None => {
            if a.tmax.is_nan() || a.tmax <= 0.0 || a.points == 0 {
                return Err(
                    Error::Precondition("the grid needs tmax > 0 and points > 0".into()).into(),
                );
            }
            (1..=a.points)
                .map(|i| a.tmax * i as f64 / a.points as f64)
                .collect()
        }
    };
    let mut values = Vec::with_capacity(grid.len());
    for &t in &grid {
        values.push(sol.eval(t).map_err(|e| diverged(&sol, e))?);
    }
    let residuals = if a.no_verify {
        None
    } else {
        let quad = QuadratureConfig::default();
        Some(kinetic_verify(&problem, &sol, &grid, &quad).map_err(|e| diverged(&sol, e))?)
    };
    let mut t = Table::new(vec![
        "t",
        "n_re",
        "n_i",
        "n_j",
        "n_k",
        "tail",
        "residual_1",
        "residual_2",
    ]);
    t.meta.push(("kind", problem.kind.name().into()));
    t.meta.push(("n0", problem.n0.into()));
    t.meta.push(("c", problem.c.into()));
    t.meta.push(("v", format_bicomplex(&problem.v).into()));
    for (i, (&time, value)) in grid.iter().zip(&values).enumerate() {
        let [a0, a1, a2, a3] = value.value.parts();
        let (r1, r2) = match &residuals {
            Some(r) => (Cell::Num(r[i].norm.n1), Cell::Num(r[i].norm.n2)),
            None => (Cell::Empty, Cell::Empty),
        };
        t.push(vec![
            time.into(),
            a0.into(),
            a1.into(),
            a2.into(),
            a3.into(),
            value.tail_bound.max().into(),
            r1,
            r2,
        ]);
    }
    Ok(t)
}

fn cmd_table(a: &TableArgs) -> CmdResult<Table> {
    let policy = policy(&a.series)?;
    match a.function {
        TableFunction::Mr => {
            let params = MRParams::new(a.v, a.c);
            let mut t = Table::new(vec!["z", "value", "terms_used", "tail_bound"]);
            t.meta.push(("v", format_bicomplex(&a.v).into()));
            t.meta.push(("c", format_bicomplex(&a.c).into()));
            for &z in &a.z_grid.0 {
                let e = eval(&params, Bicomplex::from_real(z), &policy)?;
                t.push(vec![
                    z.into(),
                    format_bicomplex(&e.value).into(),
                    e.terms_used.into(),
                    e.tail_bound.max().into(),
                ]);
            }
            Ok(t)
        }
        TableFunction::Gamma => {
            let mut t = Table::new(vec!["y", "value"]);
            for &y in &a.y_grid.0 {
                let g = bicomplex_gamma(Bicomplex::from_real(y))?;
                t.push(vec![y.into(), format_bicomplex(&g).into()]);
            }
            Ok(t)
        }
    }
}
