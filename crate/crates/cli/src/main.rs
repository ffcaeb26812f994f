//! `pdt`: power domination number, minimum PMU sets and friends.
//!
//! Exit codes: 0 on success, 2 when the input cannot be read or parsed, 3
//! when a computed set fails verification against the input graph.

mod bench;
mod input;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pdt_core::{
    allminpds, default_workers, is_power_dominating_set, solve, write_edge_list, write_graph6, Graph, Mode,
    SolveResult, SolverConfig,
};

use bench::BenchArgs;
use input::InputArgs;

#[derive(Debug, Parser)]
#[command(name = "pdt", version, about = "Exact power domination solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the power domination number
    Pdn(SolveArgs),
    /// Print one minimum power dominating set
    Minpds(SolveArgs),
    /// Print every minimum power dominating set
    Allminpds(SolveArgs),
    /// Show contraction, preferred nodes, candidates and search counters
    Analyze(SolveArgs),
    /// Rewrite a graph in another format
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Solve seeded random graphs and write CSV timings to stdout
    Bench {
        #[command(flatten)]
        bench: BenchArgs,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Worker threads [default: available processors - 1]
    #[arg(long, env = "PDT_WORKERS")]
    workers: Option<usize>,
}

impl RunArgs {
    fn workers(&self) -> usize {
        self.workers.unwrap_or_else(default_workers).max(1)
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    run: RunArgs,
    #[arg(long, value_parser = parse_mode, default_value = "optimized")]
    mode: Mode,
    /// Return the first set found instead of the lowest-ranked one
    #[arg(long)]
    nondeterministic: bool,
    #[arg(long)]
    json: bool,
}

impl SolveArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            deterministic: !self.nondeterministic,
            ..SolverConfig::default().with_workers(self.run.workers()).with_mode(self.mode)
        }
    }
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

enum Failure {
    Input(anyhow::Error),
    Invariant(String),
    Other(anyhow::Error),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load(input: &InputArgs) -> Result<Graph, Failure> {
    input.load().map_err(Failure::Input)
}

fn emit(text: impl AsRef<str>) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    writeln!(out, "{}", text.as_ref())
        .and_then(|()| out.flush())
        .map_err(|e| Failure::Other(e.into()))
}

fn verify(g: &Graph, pds: &[String]) -> Result<(), Failure> {
    match is_power_dominating_set(g, pds) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Failure::Invariant(format!("{pds:?} does not observe the graph"))),
        Err(e) => Err(Failure::Invariant(e.to_string())),
    }
}

fn timed_solve(g: &Graph, args: &SolveArgs) -> Result<(SolveResult, f64), Failure> {
    let start = Instant::now();
    let r = solve(g, &args.config());
    let ms = start.elapsed().as_secs_f64() * 1e3;
    verify(g, &r.pds)?;
    if r.pds.len() != r.pdn {
        return Err(Failure::Invariant(format!("pds size {} differs from pdn {}", r.pds.len(), r.pdn)));
    }
    Ok((r, ms))
}

fn json_line(v: &serde_json::Value) -> String {
    serde_json::to_string(v).expect("values built from strings and numbers serialize")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Pdn(args) => {
            let g = load(&args.input)?;
            let (r, ms) = timed_solve(&g, &args)?;
            if args.json {
                emit(json_line(&report::solve_json(&r, ms)))
            } else {
                emit(r.pdn.to_string())
            }
        }
        Command::Minpds(args) => {
            let g = load(&args.input)?;
            let (r, ms) = timed_solve(&g, &args)?;
            if args.json {
                emit(json_line(&report::solve_json(&r, ms)))
            } else {
                emit(json_line(&serde_json::json!(r.pds)))
            }
        }
        Command::Allminpds(args) => {
            let g = load(&args.input)?;
            let start = Instant::now();
            let sets = allminpds(&g, &args.config());
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let pdn = sets.first().map_or(0, |s| s.len());
            for s in &sets {
                verify(&g, &s.iter().cloned().collect::<Vec<_>>())?;
            }
            if args.json {
                emit(json_line(&report::sets_json(pdn, &sets, ms)))
            } else {
                let lines: Vec<String> = sets.iter().map(|s| json_line(&serde_json::json!(s))).collect();
                emit(lines.join("\n"))
            }
        }
        Command::Analyze(args) => {
            let g = load(&args.input)?;
            let parts = report::analyze_components(&g).map_err(Failure::Other)?;
            let (r, ms) = timed_solve(&g, &args)?;
            if args.json {
                emit(json_line(&report::analysis_json(&parts, &r, ms)))
            } else {
                emit(report::analysis_text(&g, &parts, &r).trim_end())
            }
        }
        Command::Convert { input, to } => {
            let g = load(&input)?;
            match to {
                Target::Graph6 => emit(String::from_utf8(write_graph6(&g)).expect("graph6 is ASCII")),
                Target::Edgelist => emit(write_edge_list(&g).trim_end()),
            }
        }
        Command::Bench { bench, run } => {
            bench::run(&bench, run.workers(), io::stdout().lock())
                .context("benchmark failed")
                .map_err(Failure::Other)
        }
    }
}
