use std::io::Write;
use std::time::Instant;

use anyhow::Result;
use clap::Args;
use pdt_core::{erdos_renyi_connected, solve, Mode, SolverConfig};

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Graph orders to generate
    #[arg(long, value_delimiter = ',', default_values_t = [20, 40, 60, 80, 100, 120])]
    pub sizes: Vec<usize>,

    /// Edge probability
    #[arg(long, default_value_t = 0.05)]
    pub p: f64,

    /// First seed; graph i of each size uses seed + i
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Graphs per size
    #[arg(long, default_value_t = 1)]
    pub count: u64,

    /// Skip naive runs on graphs larger than this (they grow very quickly)
    #[arg(long, value_name = "N")]
    pub naive_max_n: Option<usize>,

    /// Only run the optimized solver
    #[arg(long)]
    pub optimized_only: bool,
}

pub fn run(args: &BenchArgs, workers: usize, out: impl Write) -> Result<()> {
    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(["n", "seed", "mode", "workers", "pdn", "subsets_checked", "wall_ms"])?;
    for &n in &args.sizes {
        for seed in args.seed..args.seed + args.count {
            let g = erdos_renyi_connected(n, args.p, seed)?;
            for mode in [Mode::Optimized, Mode::Naive] {
                if mode == Mode::Naive && (args.optimized_only || args.naive_max_n.is_some_and(|m| n > m)) {
                    continue;
                }
                let config = SolverConfig::default().with_workers(workers).with_mode(mode);
                let start = Instant::now();
                let r = solve(&g, &config);
                let ms = start.elapsed().as_secs_f64() * 1e3;
                csv.write_record([
                    n.to_string(),
                    seed.to_string(),
                    mode.as_str().to_string(),
                    workers.to_string(),
                    r.pdn.to_string(),
                    r.diagnostics.subsets_checked.to_string(),
                    format!("{ms:.3}"),
                ])?;
                csv.flush()?;
            }
        }
    }
    Ok(())
}
