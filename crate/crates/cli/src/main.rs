//! Benchmark CLI: runs experiments from config files or canned presets and
//! writes regret summaries, per-step curves, and a run manifest as CSV/JSON.

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use driftbandit_core::config::{parse_config, preset, render_config, PRESET_NAMES};
use driftbandit_core::csvio::{
    write_curves, write_manifest, write_steps, write_summary, RunManifest,
};
use driftbandit_core::harness::{epsilon_grid_best, run_experiment, with_thread_cap};
use driftbandit_core::ExperimentConfig;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "driftbandit",
    about = "Replicated regret benchmarks for dynamic Bernoulli bandits",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment described by a config file.
    Run {
        /// Path to a key-value config file.
        config: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run a canned experiment preset.
    Preset {
        /// One of: small-change, case1..case4, large-arms, eta-sweep,
        /// baseline-sweep, dts-c.
        name: String,
        /// Arm count for the large-arms preset (50 or 100).
        #[arg(long)]
        arms: Option<usize>,
        /// Environment case for the large-arms preset (case1..case4).
        #[arg(long)]
        case: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Number of Monte Carlo replications.
    #[arg(long)]
    reps: Option<u32>,
    /// Master seed; every stream in the run derives from it.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory (created if missing).
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Log every k-th step of every replication to steps.csv.
    #[arg(long = "steps-log", value_name = "EVERY_K")]
    steps_log: Option<u64>,
    /// Print the resolved config and exit without running.
    #[arg(long)]
    print_config: bool,
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let (mut config, common) = match cli.command {
        Command::Run { config, common } => {
            let text = fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            (parse_config(&text)?, common)
        }
        Command::Preset {
            name,
            arms,
            case,
            common,
        } => {
            let config = preset(&name, arms, case.as_deref()).with_context(|| {
                format!("known presets: {}", PRESET_NAMES.join(", "))
            })?;
            (config, common)
        }
    };

    if let Some(reps) = common.reps {
        config.replications = reps;
    }
    if let Some(seed) = common.seed {
        config.seed = seed;
    }
    if let Some(k) = common.steps_log {
        config.step_log_every = Some(k);
    }
    if common.print_config {
        print!("{}", render_config(&config));
        return Ok(());
    }

    execute(&config, &common.out)
}

fn execute(config: &ExperimentConfig, out: &PathBuf) -> Result<()> {
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let start = Instant::now();
    let (result, grid_best) = with_thread_cap(|| {
        let result = run_experiment(config)?;
        let grid_best = if config.epsilon_grid.is_empty() {
            None
        } else {
            Some(epsilon_grid_best(config, &config.epsilon_grid)?)
        };
        Ok::<_, driftbandit_core::HarnessError>((result, grid_best))
    })?;
    let duration = start.elapsed();

    let mut summaries = result.summaries;
    if let Some((epsilon, best)) = grid_best {
        println!("best grid epsilon: {epsilon}");
        summaries.push(best);
    }

    let mut manifest = RunManifest::new(render_config(config), config.seed);
    manifest.duration_secs = duration.as_secs_f64();
    if config.step_log_every.is_some() {
        manifest
            .files
            .push(write_steps(&out.join("steps.csv"), &result.steps)?);
    }
    manifest
        .files
        .push(write_summary(&out.join("summary.csv"), &summaries)?);
    manifest
        .files
        .push(write_curves(&out.join("curves.csv"), &summaries)?);
    write_manifest(&out.join("manifest.json"), &manifest)?;

    println!(
        "{} policies x {} replications x {} steps in {:.1}s -> {}",
        config.policies.len(),
        config.replications,
        config.horizon,
        duration.as_secs_f64(),
        out.display()
    );
    println!("{:<28} {:>14}", "policy", "mean regret");
    for s in &summaries {
        println!("{:<28} {:>14.2}", s.label, s.mean_total_regret);
    }
    Ok(())
}
