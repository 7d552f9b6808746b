#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// A documented invocation, its golden stdout file and expected exit code.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const CASES: &[Case] = &[
    Case {
        name: "eval_mr_exp",
        args: &["eval", "mr", "--v", "0", "--c", "1", "--z", "1"],
        exit: 0,
    },
    Case {
        name: "eval_mr_zero_c",
        args: &["eval", "mr", "--v", "0", "--c", "0", "--z", "1|2"],
        exit: 0,
    },
    Case {
        name: "eval_gamma_json",
        args: &["--format", "json", "eval", "gamma", "--y", "2|3"],
        exit: 0,
    },
    Case {
        name: "eval_gamma_pole",
        args: &["eval", "gamma", "--y", "-1|2"],
        exit: 3,
    },
    Case {
        name: "eval_log_zero_divisor",
        args: &["eval", "log", "--z", "0|2"],
        exit: 3,
    },
    Case {
        name: "eval_parse_error",
        args: &["eval", "mr", "--z", "1+2q"],
        exit: 2,
    },
    Case {
        name: "verify_recurrences",
        args: &[
            "--format",
            "json",
            "verify",
            "recurrences",
            "--seed",
            "42",
            "--n",
            "20",
        ],
        exit: 0,
    },
    Case {
        name: "verify_barnes",
        args: &["verify", "barnes", "--t", "40", "--n", "3"],
        exit: 0,
    },
    Case {
        name: "verify_ode_bug",
        args: &["verify", "ode", "--inject-bug", "--n", "10"],
        exit: 1,
    },
    Case {
        name: "kinetic_exponential",
        args: &[
            "--format", "csv", "kinetic", "--kind", "basic", "--v", "1", "--cc", "2", "--n0", "1",
            "--tmax", "2",
        ],
        exit: 0,
    },
    Case {
        name: "kinetic_mittag_leffler",
        args: &[
            "--format",
            "csv",
            "kinetic",
            "--kind",
            "basic",
            "--v",
            "0.5",
            "--cc",
            "1",
            "--no-verify",
        ],
        exit: 0,
    },
    Case {
        name: "kinetic_mr_forced",
        args: &[
            "--format", "json", "kinetic", "--kind", "mr", "--v", "0.8+0.1j", "--cc", "0.5", "--c",
            "-0.5", "--mu", "0.5", "--z0", "1+0.2j", "--k", "1", "--tmax", "2", "--points", "4",
        ],
        exit: 0,
    },
    Case {
        name: "kinetic_divergence",
        args: &[
            "kinetic", "--kind", "basic", "--v", "1", "--cc", "1", "--tmax", "40", "--points", "4",
        ],
        exit: 4,
    },
    Case {
        name: "kinetic_inadmissible",
        args: &["kinetic", "--kind", "basic", "--v", "-0.5"],
        exit: 3,
    },
    Case {
        name: "table_mr_erf",
        args: &[
            "--format",
            "csv",
            "table",
            "mr",
            "--v",
            "0.5",
            "--c",
            "1",
            "--z-grid",
            "0.1:2:0.1",
        ],
        exit: 0,
    },
    Case {
        name: "table_gamma",
        args: &["table", "gamma", "--y-grid", "1:5:1"],
        exit: 0,
    },
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(format!("{name}.out"))
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicx"))
        .args(args)
        .env_remove("BICX_SEED")
        .output()
        .expect("the bicx binary runs")
}

/// Runs every case; returns one message per mismatch. With `BICX_BLESS`
/// set, golden files are rewritten instead of compared.
pub fn check_cases() -> Vec<String> {
    let bless = std::env::var_os("BICX_BLESS").is_some();
    let mut problems = Vec::new();
    for case in CASES {
        let out = run(case.args);
        let code = out.status.code().unwrap_or(-1);
        if code != case.exit {
            problems.push(format!(
                "{}: exit {code}, expected {}",
                case.name, case.exit
            ));
        }
        let path = golden_path(case.name);
        if bless {
            std::fs::write(&path, &out.stdout).expect("golden file is writable");
            continue;
        }
        match std::fs::read(&path) {
            Ok(expected) if expected == out.stdout => {}
            Ok(_) => problems.push(format!(
                "{}: stdout differs from {}",
                case.name,
                path.display()
            )),
            Err(_) => problems.push(format!("{}: missing {}", case.name, path.display())),
        }
        let again = run(case.args);
        if again.stdout != out.stdout {
            problems.push(format!("{}: output not stable across runs", case.name));
        }
    }
    problems
}
