//! `cpb` — experiment runner for changepoint-detecting bandit policies.
//!
//! Subcommands:
//! - `run`       seeded replicated simulations → `traces.csv`, `events.csv`,
//!               `summary.csv`, `bounds.json`
//! - `bounds`    analytical bound report only (stdout or `bounds.json`)
//! - `bench`     scan-counter / wall-clock sweep over horizons → `bench.csv`
//! - `eta-sweep` detection success vs. segment-length sweep →
//!               `eta_summary.csv`
//!
//! All randomness is keyed by `(seed, replication, t, stream)`, so any seed
//! subrange of a run reproduces exactly the same records byte-for-byte.

use std::ops::Range;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use cpbandits::analysis::{regret_bounds, BoundReport};
use cpbandits::env::Environment;
use cpbandits::harness::{
    bench_detection_cost, compute_metrics, eta_sweep, load_config, parse_radius_name,
    run_experiment, write_bench, write_bounds, write_eta_summary, write_experiment_outputs,
    BoundsSpec, ExperimentConfig, Metrics,
};
use cpbandits::policies::RadiusName;
use cpbandits::Real;

/// A half-open replication range written `a..b` (for example `0..50`).
#[derive(Debug, Clone)]
struct SeedRange(Range<u64>);

impl FromStr for SeedRange {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (start, end) = text
            .split_once("..")
            .ok_or_else(|| format!("expected `a..b`, found `{text}`"))?;
        let start: u64 = start
            .trim()
            .parse()
            .map_err(|_| format!("invalid range start `{start}`"))?;
        let end: u64 = end
            .trim()
            .parse()
            .map_err(|_| format!("invalid range end `{end}`"))?;
        if start >= end {
            return Err(format!("range `{text}` is empty"));
        }
        Ok(SeedRange(start..end))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cpb",
    about = "Bandit experiments under piecewise-stationary rewards",
    version
)]
struct Cli {
    /// Override the confidence-radius family of every scan-based policy.
    #[arg(long, global = true, value_parser = ["laplace", "union", "peeling"])]
    radius: Option<String>,

    /// Worker threads for replications (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ConfigArg {
    /// Path to the JSON experiment configuration.
    #[arg(long)]
    config: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run seeded replications and write traces, events, summary, bounds.
    Run {
        #[command(flatten)]
        config: ConfigArg,
        /// Replication indices to run, as `a..b` (default: the config's
        /// `0..replications`).
        #[arg(long)]
        seeds: Option<SeedRange>,
        /// Output directory (created if missing).
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate the analytical regret bounds for the configured environment.
    Bounds {
        #[command(flatten)]
        config: ConfigArg,
        /// Write `bounds.json` into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure scan counters and wall-clock medians over a horizon sweep.
    Bench {
        #[command(flatten)]
        config: ConfigArg,
        /// Write `bench.csv` into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep detection success against the separation parameter eta.
    EtaSweep {
        #[command(flatten)]
        config: ConfigArg,
        /// Replication indices to run, as `a..b` (default: the config's
        /// `0..replications`).
        #[arg(long)]
        seeds: Option<SeedRange>,
        /// Write `eta_summary.csv` into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(path: &Path) -> anyhow::Result<(ExperimentConfig, Environment)> {
    let (config, env) = load_config(path)
        .with_context(|| format!("failed to load config {}", path.display()))?;
    config.validate(&env).context("invalid configuration")?;
    Ok((config, env))
}

fn bound_report(config: &ExperimentConfig, env: &Environment) -> anyhow::Result<BoundReport> {
    let spec = config.bounds.clone().unwrap_or_else(BoundsSpec::default);
    let horizon = env.horizon();
    let delta = spec.delta.unwrap_or(1.0 / horizon as Real);
    let t = spec.t.unwrap_or(horizon);
    regret_bounds(env, t, delta, spec.gamma, spec.eta).context("bound evaluation failed")
}

/// Write to stdout without panicking when the reader closes the pipe early
/// (e.g. `cpb bounds ... | head`).
fn print_out(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if let Err(err) = stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
    {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("failed to write to stdout: {err}");
        std::process::exit(1);
    }
}

fn run_summary_text(metrics: &Metrics) -> String {
    use std::fmt::Write;
    let mut text = String::new();
    for policy in &metrics.policies {
        let delay = policy
            .mean_delay
            .map_or_else(|| "-".to_string(), |d| format!("{d:.1}"));
        let _ = writeln!(
            text,
            "{}: regret {:.2} ± {:.2}, detections {}, misses {}, false alarms {}, mean delay {}, failures {}",
            policy.policy,
            policy.mean_final_regret,
            policy.std_final_regret,
            policy.detections,
            policy.misses,
            policy.false_alarms,
            delay,
            policy.failures
        );
    }
    text
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("failed to configure the worker pool")?;
    }
    let radius_override: Option<RadiusName> = cli
        .radius
        .as_deref()
        .map(parse_radius_name)
        .transpose()
        .context("invalid --radius value")?;

    match cli.command {
        Command::Run { config, seeds, out } => {
            let (config, env) = load(&config.config)?;
            let seeds = seeds.map_or(0..config.replications, |s| s.0);
            let result = run_experiment(&config, &env, seeds, radius_override)
                .context("experiment failed")?;
            let metrics = compute_metrics(&result, &env).context("metric aggregation failed")?;
            let bounds = if env.horizon() > 0 {
                Some(bound_report(&config, &env)?)
            } else {
                None
            };
            write_experiment_outputs(&out, &result, &metrics, bounds.as_ref())
                .with_context(|| format!("failed to write outputs to {}", out.display()))?;
            print_out(&run_summary_text(&metrics));
            eprintln!("wrote {}", out.display());
        }
        Command::Bounds { config, out } => {
            let (config, env) = load(&config.config)?;
            let report = bound_report(&config, &env)?;
            match out {
                Some(dir) => {
                    std::fs::create_dir_all(&dir)?;
                    let path = dir.join("bounds.json");
                    write_bounds(&path, &report)?;
                    eprintln!("wrote {}", path.display());
                }
                None => print_out(&format!("{}\n", serde_json::to_string_pretty(&report)?)),
            }
        }
        Command::Bench { config, out } => {
            let (config, env) = load(&config.config)?;
            let Some(spec) = config.bench.clone() else {
                bail!("config has no `bench` block");
            };
            let rows = bench_detection_cost(&config, &env, &spec, radius_override)
                .context("benchmark failed")?;
            match out {
                Some(dir) => {
                    std::fs::create_dir_all(&dir)?;
                    let path = dir.join("bench.csv");
                    write_bench(&path, &rows)?;
                    eprintln!("wrote {}", path.display());
                }
                None => {
                    use std::fmt::Write;
                    let mut text = String::new();
                    for row in &rows {
                        let _ = writeln!(
                            text,
                            "{} @ T={}: {} scans, {} splits, {} restarts, {:.3} ms",
                            row.policy,
                            row.horizon,
                            row.scan_calls,
                            row.splits_evaluated,
                            row.restarts,
                            row.median_wall_ms
                        );
                    }
                    print_out(&text);
                }
            }
        }
        Command::EtaSweep { config, seeds, out } => {
            let (config, env) = load(&config.config)?;
            let Some(spec) = config.eta_sweep.clone() else {
                bail!("config has no `eta_sweep` block");
            };
            let seeds = seeds.map_or(0..config.replications, |s| s.0);
            let rows = eta_sweep(&config, &env, &spec, seeds, radius_override)
                .context("eta sweep failed")?;
            match out {
                Some(dir) => {
                    std::fs::create_dir_all(&dir)?;
                    let path = dir.join("eta_summary.csv");
                    write_eta_summary(&path, &rows)?;
                    eprintln!("wrote {}", path.display());
                }
                None => {
                    use std::fmt::Write;
                    let mut text = String::new();
                    for row in &rows {
                        let _ = writeln!(
                            text,
                            "eta={} {}: success {:.3} ± {:.3} (len {}, T={})",
                            row.eta,
                            row.policy,
                            row.mean_success,
                            row.std_success,
                            row.segment_length,
                            row.horizon
                        );
                    }
                    print_out(&text);
                }
            }
        }
    }
    Ok(())
}
