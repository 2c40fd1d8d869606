//! Detection-cost benchmark: scan counters and wall-clock medians across a
//! horizon sweep.
//!
//! For each requested horizon the environment is truncated (segments
//! starting after the horizon are dropped, the last surviving segment is
//! clipped or extended to fill it) and every configured policy is run once
//! per repeat at replication 0. Counters are deterministic, so they are
//! taken from the first repeat; wall-clock time is the median over repeats
//! to damp scheduler noise.

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use serde::Serialize;

use crate::policies::RadiusName;
use crate::env::{build_environment, Environment};
use crate::harness::config::{BenchSpec, ExperimentConfig};
use crate::harness::run::run_experiment;
use crate::{Error, Real, Result};

/// One benchmark measurement: a (policy, horizon) cell of the sweep.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub policy: String,
    pub horizon: u64,
    pub scan_calls: u64,
    pub splits_evaluated: u64,
    pub restarts: u64,
    pub median_wall_ms: Real,
}

/// Rebuild `env` with the given horizon, keeping only segments that start
/// at or before it.
///
/// # Errors
///
/// [`Error::ValueOutOfRange`] for a zero horizon; environment validation
/// errors are propagated (they cannot occur for a truncation of an already
/// valid environment).
pub fn truncate_environment(env: &Environment, horizon: u64) -> Result<Environment> {
    if horizon == 0 {
        return Err(Error::ValueOutOfRange(
            "bench horizon must be positive".into(),
        ));
    }
    let segments = env
        .segments()
        .iter()
        .filter(|s| s.start_time <= horizon)
        .cloned()
        .collect();
    build_environment(segments, horizon, env.reward_model())
}

fn median(sorted: &[Real]) -> Real {
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    }
}

/// Run the benchmark sweep described by `spec` and return one row per
/// (horizon, policy), horizon-major in the order configured.
///
/// Every repeat replays replication 0 of the same seeded run, so a failed
/// run fails identically on each repeat; such failures abort the benchmark
/// with the run's error rather than producing rows with fabricated numbers.
///
/// # Errors
///
/// Truncation errors, run errors (including quarantined single-run
/// failures, surfaced here as hard errors), and
/// [`Error::ValueOutOfRange`] for zero repeats.
pub fn bench_detection_cost(
    config: &ExperimentConfig,
    env: &Environment,
    spec: &BenchSpec,
    radius_override: Option<RadiusName>,
) -> Result<Vec<BenchRow>> {
    if spec.repeats == 0 {
        return Err(Error::ValueOutOfRange("bench repeats must be >= 1".into()));
    }
    let mut rows = Vec::with_capacity(spec.horizons.len() * config.policies.len());
    for &horizon in &spec.horizons {
        let truncated = truncate_environment(env, horizon)?;
        // wall_samples[policy][repeat]
        let mut wall_samples: Vec<Vec<Real>> = vec![Vec::new(); config.policies.len()];
        let mut counters = Vec::new();
        for repeat in 0..spec.repeats {
            let result = run_experiment(config, &truncated, 0..1, radius_override)?;
            for record in &result.records {
                if let Some(error) = &record.error {
                    return Err(Error::InconsistentTrace(format!(
                        "bench run failed for policy `{}` at horizon {horizon}: {error}",
                        result.labels[record.policy]
                    )));
                }
                wall_samples[record.policy].push(record.wall_ms);
            }
            if repeat == 0 {
                counters = result
                    .records
                    .iter()
                    .map(|r| r.counters.clone())
                    .collect();
            }
        }
        for (policy, policy_config) in config.policies.iter().enumerate() {
            wall_samples[policy].sort_by(Real::total_cmp);
            rows.push(BenchRow {
                policy: policy_config.label().to_string(),
                horizon,
                scan_calls: counters[policy].scan_calls,
                splits_evaluated: counters[policy].splits_evaluated,
                restarts: counters[policy].restarts,
                median_wall_ms: median(&wall_samples[policy]),
            });
        }
    }
    Ok(rows)
}

/// Write `bench.csv`: one row per (horizon, policy) measurement.
///
/// Columns: `policy,horizon,scan_calls,splits_evaluated,restarts,`
/// `median_wall_ms`.
///
/// # Errors
///
/// Propagates I/O failures as [`Error::ParseError`].
pub fn write_bench(path: &Path, rows: &[BenchRow]) -> Result<()> {
    let mut writer = csv::Writer::from_writer(BufWriter::new(File::create(path)?));
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush().map_err(std::io::Error::from)?;
    Ok(())
}
