//! Detection-success sweep over the separation parameter `eta`.
//!
//! For each swept `eta` the environment is rebuilt from the configured
//! segment mean rows with every segment `ceil(segment_cost * eta)` steps
//! long (larger `eta` means longer, easier segments), the full policy roster
//! is replayed over the requested replications, and per-policy detection
//! success is aggregated. Success for one run is the fraction of the
//! environment's changepoints it detected.

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use serde::Serialize;

use crate::policies::RadiusName;
use crate::env::{build_environment, Environment, Segment};
use crate::harness::config::{EtaSweepSpec, ExperimentConfig};
use crate::harness::metrics::{compute_metrics, EventKind};
use crate::harness::run::run_experiment;
use crate::{Error, Real, Result};

/// One sweep measurement: a (eta, policy) cell.
#[derive(Debug, Clone, Serialize)]
pub struct EtaRow {
    pub eta: Real,
    pub policy: String,
    /// Segment length `ceil(segment_cost * eta)` used for this cell.
    pub segment_length: u64,
    /// Rebuilt horizon (`segment_length * rows`).
    pub horizon: u64,
    /// Mean over runs of (changepoints detected / changepoints).
    pub mean_success: Real,
    /// Sample standard deviation of the per-run success fraction.
    pub std_success: Real,
    pub detections: u64,
    pub misses: u64,
    pub false_alarms: u64,
}

/// Rebuild the environment's mean rows with uniform segments of length
/// `ceil(segment_cost * eta)`. Returns the environment and that length.
///
/// # Errors
///
/// [`Error::InvalidEta`] for `eta` outside `(0, 1]`;
/// [`Error::ValueOutOfRange`] for `segment_cost < 1`.
pub fn build_eta_environment(
    env: &Environment,
    eta: Real,
    segment_cost: Real,
) -> Result<(Environment, u64)> {
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(Error::InvalidEta(eta));
    }
    if !(segment_cost >= 1.0) {
        return Err(Error::ValueOutOfRange(format!(
            "segment cost must be >= 1, found {segment_cost}"
        )));
    }
    let length = (segment_cost * eta).ceil() as u64;
    let segments: Vec<Segment> = env
        .segments()
        .iter()
        .enumerate()
        .map(|(row, segment)| Segment {
            start_time: 1 + row as u64 * length,
            means: segment.means.clone(),
        })
        .collect();
    let horizon = length * segments.len() as u64;
    let rebuilt = build_environment(segments, horizon, env.reward_model())?;
    Ok((rebuilt, length))
}

/// Run the sweep described by `spec` and return one row per (eta, policy),
/// eta-major in the configured order.
///
/// # Errors
///
/// Environment-rebuild errors, run errors, and metric-consistency errors
/// are propagated.
pub fn eta_sweep(
    config: &ExperimentConfig,
    env: &Environment,
    spec: &EtaSweepSpec,
    replications: std::ops::Range<u64>,
    radius_override: Option<RadiusName>,
) -> Result<Vec<EtaRow>> {
    let mut rows = Vec::with_capacity(spec.etas.len() * config.policies.len());
    for &eta in &spec.etas {
        let (swept, length) = build_eta_environment(env, eta, spec.segment_cost)?;
        let change_count = swept.changepoint_times().len();
        let result = run_experiment(config, &swept, replications.clone(), radius_override)?;
        let metrics = compute_metrics(&result, &swept)?;

        // Per-run detection counts, to give the success fraction a spread.
        // detected[(policy, replication)] += 1 per detection event.
        let mut per_run: std::collections::BTreeMap<(usize, u64), u64> =
            std::collections::BTreeMap::new();
        for record in &result.records {
            if record.error.is_none() {
                per_run.insert((record.policy, record.replication), 0);
            }
        }
        for event in &metrics.events {
            if event.kind == EventKind::Detection {
                *per_run
                    .entry((event.policy, event.replication))
                    .or_insert(0) += 1;
            }
        }
        for (policy, policy_metrics) in metrics.policies.iter().enumerate() {
            let successes: Vec<Real> = per_run
                .range((policy, 0)..=(policy, u64::MAX))
                .map(|(_, &detected)| {
                    if change_count == 0 {
                        0.0
                    } else {
                        detected as Real / change_count as Real
                    }
                })
                .collect();
            let mean = if successes.is_empty() {
                0.0
            } else {
                successes.iter().sum::<Real>() / successes.len() as Real
            };
            let std = if successes.len() < 2 {
                0.0
            } else {
                (successes.iter().map(|s| (s - mean) * (s - mean)).sum::<Real>()
                    / (successes.len() - 1) as Real)
                    .sqrt()
            };
            rows.push(EtaRow {
                eta,
                policy: policy_metrics.policy.clone(),
                segment_length: length,
                horizon: swept.horizon(),
                mean_success: mean,
                std_success: std,
                detections: policy_metrics.detections,
                misses: policy_metrics.misses,
                false_alarms: policy_metrics.false_alarms,
            });
        }
    }
    Ok(rows)
}

/// Write `eta_summary.csv`: one row per (eta, policy) measurement.
///
/// Columns: `eta,policy,segment_length,horizon,mean_success,std_success,`
/// `detections,misses,false_alarms`.
///
/// # Errors
///
/// Propagates I/O failures as [`Error::ParseError`].
pub fn write_eta_summary(path: &Path, rows: &[EtaRow]) -> Result<()> {
    let mut writer = csv::Writer::from_writer(BufWriter::new(File::create(path)?));
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush().map_err(std::io::Error::from)?;
    Ok(())
}
