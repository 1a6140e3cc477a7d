//! `qposet`: partition solving, poset reports, Hasse export and structural
//! verification for the sign-vector posets `P(n)` and `Q(n)`.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on usage,
//! parse or size-guard errors.

mod checks;
mod dot;
mod input;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qposet_core::counting::{
    height_formula, p_rank_profile, q_rank_profile, q_size, width_value, MAX_COUNT_N,
};
use qposet_core::poset::{build_hasse, build_hasse_unbounded, CheckStatus, MAX_DAG_N_Q};
use qposet_core::{solve_with, Algorithm, Guard, Instance, PosetKind};
use serde::Serialize;
use thiserror::Error;

use input::{parse_instance, ParseError};

/// Largest `n` for which `profile` also reports the height of the built diagram.
const PROFILE_DAG_MAX_N: usize = 12;

#[derive(Parser)]
#[command(name = "qposet", version, about = "Sign-vector posets and number partitioning")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the partition problem for the integers in FILE.
    Solve {
        /// Whitespace-separated nonnegative integers; `#` lines are comments.
        file: PathBuf,
        #[arg(long, default_value = "auto", value_parser = parse_algorithm)]
        algo: Algorithm,
        #[arg(long)]
        json: bool,
        /// Lift the size guards of the enumeration solvers.
        #[arg(long)]
        force: bool,
    },
    /// Size, rank profile, width and height of P(n) or Q(n).
    Profile {
        n: usize,
        #[arg(long, value_enum, default_value_t = PosetArg::Q)]
        poset: PosetArg,
        #[arg(long)]
        json: bool,
    },
    /// Write the Hasse diagram of P(n) or Q(n) as a DOT digraph.
    Hasse {
        n: usize,
        #[arg(long, value_enum, default_value_t = PosetArg::Q)]
        poset: PosetArg,
        /// Output path; the DOT text goes to standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Lift the diagram size guard.
        #[arg(long)]
        force: bool,
    },
    /// Run structural checks at size n.
    Verify {
        n: usize,
        /// `all` or a comma-separated list: covers, iso, symmetry, chain,
        /// compara, graded, extremes, profile, solvers.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        json: bool,
        /// Run checks above their size guard.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetArg {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
}

impl From<PosetArg> for PosetKind {
    fn from(p: PosetArg) -> Self {
        match p {
            PosetArg::P => PosetKind::P,
            PosetArg::Q => PosetKind::Q,
        }
    }
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: qposet_core::Error| e.to_string())
}

#[derive(Debug, Error)]
enum CliError {
    #[error("ParseError: {path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{0}")]
    Range(String),
    #[error(transparent)]
    Core(#[from] qposet_core::Error),
}

/// Whether every check passed; only `verify` can return `false`.
type Outcome = Result<bool, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli.command);
    if let Err(e) = &outcome {
        eprintln!("error: {e}");
    }
    ExitCode::from(exit_status(&outcome))
}

fn exit_status(outcome: &Outcome) -> u8 {
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(_) => 2,
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Solve { file, algo, json, force } => cmd_solve(&file, algo, json, force),
        Command::Profile { n, poset, json } => cmd_profile(n, poset.into(), json),
        Command::Hasse { n, poset, out, json, force } => {
            cmd_hasse(n, poset.into(), out.as_deref(), json, force)
        }
        Command::Verify { n, checks, json, force } => cmd_verify(n, &checks, json, force),
    }
}

/// The invocation as typed, minus the program path.
fn command_echo() -> String {
    std::iter::once("qposet".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn warn_force() {
    eprintln!("warning: --force lifts size guards; the run may take very long or exhaust memory");
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct SolveReport {
    command: String,
    n: usize,
    total: i64,
    algo: &'static str,
    abs_delta: u64,
    delta: i64,
    subset: Vec<usize>,
    nodes_visited: u64,
}

fn cmd_solve(file: &Path, algo: Algorithm, json: bool, force: bool) -> Outcome {
    let path = file.display().to_string();
    let text = fs::read_to_string(file).map_err(|source| CliError::Read {
        path: path.clone(),
        source,
    })?;
    let raw = parse_instance(&text).map_err(|source| CliError::Parse { path, source })?;
    let inst = Instance::normalize(&raw)?;
    let guard = if force {
        warn_force();
        Guard::Lift
    } else {
        Guard::Enforce
    };
    let s = solve_with(&inst, algo, guard)?;
    let report = SolveReport {
        command: command_echo(),
        n: inst.len(),
        total: inst.total(),
        algo: s.algorithm.name(),
        abs_delta: s.abs_delta,
        delta: s.delta,
        subset: s.subset.indices().to_vec(),
        nodes_visited: s.nodes_visited,
    };
    if json {
        print_json(&report);
    } else {
        println!("# {}", report.command);
        println!("n: {}", report.n);
        println!("total: {}", report.total);
        println!("algo: {}", report.algo);
        println!("abs_delta: {}", report.abs_delta);
        println!("delta: {}", report.delta);
        println!("subset: {}", join(&report.subset));
        println!("nodes_visited: {}", report.nodes_visited);
    }
    Ok(true)
}

#[derive(Serialize)]
struct ProfileReport {
    command: String,
    poset: String,
    n: usize,
    size: u128,
    profile: Vec<u128>,
    max_level: u128,
    width: u128,
    height: Option<u64>,
    dag_height: Option<u64>,
    symmetric: bool,
    unimodal: bool,
}

fn cmd_profile(n: usize, kind: PosetKind, json: bool) -> Outcome {
    if !(1..=MAX_COUNT_N).contains(&n) {
        return Err(CliError::Range(format!("n must be in 1..={MAX_COUNT_N}, got {n}")));
    }
    let (size, profile) = match kind {
        PosetKind::P => (1u128 << n, p_rank_profile(n)?),
        _ => (q_size(n)?.value(), q_rank_profile(n)?),
    };
    let summary = profile.summary();
    let (height, dag_height, width) = if size == 0 {
        (None, None, 0)
    } else {
        let dag_height = if n <= PROFILE_DAG_MAX_N {
            Some(build_hasse(n, kind)?.height() as u64)
        } else {
            None
        };
        (Some(height_formula(n, kind)?), dag_height, width_value(n)?.value())
    };
    let report = ProfileReport {
        command: command_echo(),
        poset: kind.to_string(),
        n,
        size,
        profile: profile.counts,
        max_level: summary.max_level.value(),
        width,
        height,
        dag_height,
        symmetric: summary.symmetric,
        unimodal: summary.unimodal,
    };
    if json {
        print_json(&report);
    } else {
        let opt = |v: Option<u64>| v.map_or_else(|| "none".to_string(), |h| h.to_string());
        println!("# {}", report.command);
        println!("poset: {}", report.poset);
        println!("n: {}", report.n);
        println!("size: {}", report.size);
        println!("profile: {}", join(&report.profile));
        println!("max_level: {}", report.max_level);
        println!("width: {}", report.width);
        println!("height: {}", opt(report.height));
        println!("dag_height: {}", opt(report.dag_height));
        println!("symmetric: {}", report.symmetric);
        println!("unimodal: {}", report.unimodal);
    }
    Ok(true)
}

#[derive(Serialize)]
struct HasseReport {
    command: String,
    poset: String,
    n: usize,
    nodes: usize,
    edges: usize,
    out: String,
}

fn cmd_hasse(n: usize, kind: PosetKind, out: Option<&Path>, json: bool, force: bool) -> Outcome {
    let dag = if force {
        warn_force();
        build_hasse_unbounded(n, kind)?
    } else {
        build_hasse(n, kind)?
    };
    let text = dot::render(&dag);
    let Some(out) = out else {
        print!("{text}");
        return Ok(true);
    };
    let path = out.display().to_string();
    fs::write(out, text).map_err(|source| CliError::Write {
        path: path.clone(),
        source,
    })?;
    let report = HasseReport {
        command: command_echo(),
        poset: kind.to_string(),
        n,
        nodes: dag.node_count(),
        edges: dag.edge_count(),
        out: path,
    };
    if json {
        print_json(&report);
    } else {
        println!("# {}", report.command);
        println!("poset: {}", report.poset);
        println!("n: {}", report.n);
        println!("nodes: {}", report.nodes);
        println!("edges: {}", report.edges);
        println!("out: {}", report.out);
    }
    Ok(true)
}

#[derive(Serialize)]
struct CheckLine {
    check: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

#[derive(Serialize)]
struct VerifyReport {
    command: String,
    n: usize,
    checks: Vec<CheckLine>,
    passed: bool,
}

fn cmd_verify(n: usize, list: &str, json: bool, force: bool) -> Outcome {
    let (selected, all) = checks::parse_checks(list)?;
    if !(1..=MAX_DAG_N_Q).contains(&n) && !(force && (1..=63).contains(&n)) {
        return Err(CliError::Range(format!(
            "n must be in 1..={MAX_DAG_N_Q} (or up to 63 with --force), got {n}"
        )));
    }
    if force {
        warn_force();
    } else if !all {
        if let Some(c) = selected.iter().find(|c| n > c.max_n()) {
            return Err(CliError::Range(format!(
                "check `{c}` is limited to n <= {}, got {n} (use --force to override)",
                c.max_n()
            )));
        }
    }
    let mut lines = Vec::with_capacity(selected.len());
    for check in selected {
        let status = if !force && n > check.max_n() {
            CheckStatus::Skipped {
                reason: format!("limited to n <= {} without --force", check.max_n()),
            }
        } else {
            checks::run(check, n)?
        };
        let (status, counterexample, reason) = match status {
            CheckStatus::Pass => ("pass", None, None),
            CheckStatus::Fail { counterexample } => ("fail", Some(counterexample), None),
            CheckStatus::Skipped { reason } => ("skip", None, Some(reason)),
        };
        lines.push(CheckLine {
            check: check.name(),
            status,
            counterexample,
            reason,
        });
    }
    let passed = lines.iter().all(|l| l.status != "fail");
    let report = VerifyReport {
        command: command_echo(),
        n,
        checks: lines,
        passed,
    };
    if json {
        print_json(&report);
    } else {
        println!("# {}", report.command);
        println!("n: {}", report.n);
        for l in &report.checks {
            match (&l.counterexample, &l.reason) {
                (Some(c), _) => println!("{}: {}: {c}", l.check, l.status),
                (_, Some(r)) => println!("{}: {} ({r})", l.check, l.status),
                _ => println!("{}: {}", l.check, l.status),
            }
        }
        println!("passed: {}", report.passed);
    }
    Ok(passed)
}
