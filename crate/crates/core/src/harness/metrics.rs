//! Detection and regret metrics over completed runs.
//!
//! A changepoint `g` at time `t_g` counts as **detected** by a run iff some
//! restart falls in the window `(t_g, t_{g+1}]` (with `T + 1` closing the
//! last window); the first such restart defines the detection delay
//! `tau - t_g >= 1`. Every other restart is a **false alarm**. Scheduled
//! restarts of the oracle wrappers are exempt from this classification —
//! they are neither detections nor false alarms.

use serde::Serialize;

use crate::env::Environment;
use crate::harness::run::{ExperimentResult, RunRecord};
use crate::{Error, Real, Result};

/// How a restart event was classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EventKind {
    /// First restart inside a changepoint's attribution window.
    Detection,
    /// Any other policy-triggered restart.
    FalseAlarm,
    /// Scheduled restart of an oracle wrapper (exempt from classification).
    Oracle,
}

impl EventKind {
    /// The lowercase name used in CSV output.
    pub fn as_str(&self) -> &'static str {
        match self {
            EventKind::Detection => "detection",
            EventKind::FalseAlarm => "false_alarm",
            EventKind::Oracle => "oracle",
        }
    }
}

/// One classified restart event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassifiedEvent {
    pub replication: u64,
    /// Index into the policy list.
    pub policy: usize,
    pub time: u64,
    pub arm: Option<u32>,
    pub split: Option<u64>,
    pub kind: EventKind,
    /// The changepoint time a detection is attributed to.
    pub true_changepoint: Option<u64>,
}

/// Detection statistics for one changepoint of one policy, aggregated over
/// replications.
#[derive(Debug, Clone, Serialize)]
pub struct ChangepointMetrics {
    /// Changepoint index `g` (0-based).
    pub changepoint: usize,
    /// Changepoint time `t_g`.
    pub time: u64,
    pub detections: u64,
    pub misses: u64,
    /// Detection delays (one per detecting run), ascending.
    pub delays: Vec<u64>,
    pub mean_delay: Option<Real>,
    pub median_delay: Option<Real>,
}

/// Aggregated metrics for one policy.
#[derive(Debug, Clone, Serialize)]
pub struct PolicyMetrics {
    pub policy: String,
    /// Completed (non-quarantined) runs.
    pub runs: u64,
    /// Quarantined runs (construction or runtime failure).
    pub failures: u64,
    pub mean_final_regret: Real,
    pub std_final_regret: Real,
    pub detections: u64,
    pub misses: u64,
    pub false_alarms: u64,
    /// Mean delay over all detections, all changepoints pooled.
    pub mean_delay: Option<Real>,
    /// detections / (changepoints x completed runs); `None` when stationary.
    pub success_rate: Option<Real>,
    pub per_changepoint: Vec<ChangepointMetrics>,
    pub mean_scan_calls: Real,
    pub mean_splits_evaluated: Real,
    pub mean_wall_ms: Real,
}

/// Full metric report for one experiment.
#[derive(Debug, Clone, Serialize)]
pub struct Metrics {
    /// One entry per configured policy, in config order.
    pub policies: Vec<PolicyMetrics>,
    /// Every restart event, classified, sorted by (replication, policy,
    /// time).
    pub events: Vec<ClassifiedEvent>,
}

/// Per-run detection outcome, used by both metrics and event output.
struct RunClassification {
    /// First restart time per changepoint, if any.
    detected: Vec<Option<u64>>,
    events: Vec<ClassifiedEvent>,
    false_alarms: u64,
}

fn classify_run(record: &RunRecord, changepoints: &[u64], horizon: u64) -> RunClassification {
    let count = changepoints.len();
    let mut detected: Vec<Option<u64>> = vec![None; count];
    let mut events = Vec::with_capacity(record.events.len());
    let mut false_alarms = 0;
    for event in &record.events {
        if event.oracle {
            events.push(ClassifiedEvent {
                replication: record.replication,
                policy: record.policy,
                time: event.time,
                arm: event.arm,
                split: event.split,
                kind: EventKind::Oracle,
                true_changepoint: None,
            });
            continue;
        }
        // The window containing the restart: the last changepoint strictly
        // before the restart time, provided the restart is inside that
        // window's closing bound.
        let g = changepoints.partition_point(|&cp| cp < event.time);
        let (kind, attributed) = if g == 0 {
            // Restart at or before the first changepoint: nothing to detect.
            (EventKind::FalseAlarm, None)
        } else {
            let window_end = changepoints.get(g).copied().unwrap_or(horizon + 1);
            debug_assert!(event.time > changepoints[g - 1] && event.time <= window_end);
            if detected[g - 1].is_none() {
                detected[g - 1] = Some(event.time);
                (EventKind::Detection, Some(changepoints[g - 1]))
            } else {
                (EventKind::FalseAlarm, None)
            }
        };
        if kind == EventKind::FalseAlarm {
            false_alarms += 1;
        }
        events.push(ClassifiedEvent {
            replication: record.replication,
            policy: record.policy,
            time: event.time,
            arm: event.arm,
            split: event.split,
            kind,
            true_changepoint: attributed,
        });
    }
    RunClassification {
        detected,
        events,
        false_alarms,
    }
}

/// Recompute a run's final regret from pull counts and optimality gaps and
/// check it against the trace's running sum.
fn verify_regret_identity(record: &RunRecord, env: &Environment) -> Result<()> {
    let Some(last) = record.rows.last() else {
        return Ok(());
    };
    // Pull counts per (segment, arm).
    let mut counts = vec![vec![0u64; env.arms()]; env.segments().len()];
    for row in &record.rows {
        let segment = env.segment_index(row.t)?;
        counts[segment][row.arm as usize] += 1;
    }
    let mut decomposed = 0.0;
    for (segment, arm_counts) in counts.iter().enumerate() {
        let (_, optimal_mean) = env.optimal(segment);
        let means = env.effective_means(segment);
        for (arm, &n) in arm_counts.iter().enumerate() {
            if n > 0 {
                decomposed += (optimal_mean - means[arm]) * n as Real;
            }
        }
    }
    let difference = (decomposed - last.cum_regret).abs();
    if difference > 1e-9 {
        return Err(Error::InconsistentTrace(format!(
            "replication {} policy {}: decomposed regret {} vs traced {} (difference {:e})",
            record.replication, record.policy, decomposed, last.cum_regret, difference
        )));
    }
    Ok(())
}

fn mean(values: &[Real]) -> Real {
    if values.is_empty() {
        return 0.0;
    }
    values.iter().sum::<Real>() / values.len() as Real
}

fn std_dev(values: &[Real]) -> Real {
    if values.len() < 2 {
        return 0.0;
    }
    let m = mean(values);
    let var = values.iter().map(|v| (v - m) * (v - m)).sum::<Real>() / (values.len() - 1) as Real;
    var.sqrt()
}

fn median_of_sorted(values: &[u64]) -> Option<Real> {
    if values.is_empty() {
        return None;
    }
    let mid = values.len() / 2;
    Some(if values.len() % 2 == 1 {
        values[mid] as Real
    } else {
        (values[mid - 1] as Real + values[mid] as Real) / 2.0
    })
}

/// Compute detection and regret metrics for every policy in `result`.
///
/// Also re-derives each run's final regret from the per-segment pull-count
/// decomposition and checks it against the traced running sum.
///
/// # Errors
///
/// [`Error::InconsistentTrace`] if any run's two regret computations
/// disagree by more than `1e-9`.
pub fn compute_metrics(result: &ExperimentResult, env: &Environment) -> Result<Metrics> {
    let changepoints = env.changepoint_times();
    let change_count = changepoints.len();
    let policy_count = result.labels.len();

    let mut all_events = Vec::new();
    let mut final_regrets: Vec<Vec<Real>> = vec![Vec::new(); policy_count];
    let mut failures = vec![0u64; policy_count];
    let mut false_alarms = vec![0u64; policy_count];
    let mut delays_per_cp: Vec<Vec<Vec<u64>>> = vec![vec![Vec::new(); change_count]; policy_count];
    let mut misses_per_cp: Vec<Vec<u64>> = vec![vec![0; change_count]; policy_count];
    let mut scan_calls: Vec<Vec<Real>> = vec![Vec::new(); policy_count];
    let mut splits: Vec<Vec<Real>> = vec![Vec::new(); policy_count];
    let mut walls: Vec<Vec<Real>> = vec![Vec::new(); policy_count];

    for record in &result.records {
        let policy = record.policy;
        if record.error.is_some() {
            failures[policy] += 1;
            continue;
        }
        verify_regret_identity(record, env)?;
        final_regrets[policy].push(record.rows.last().map_or(0.0, |r| r.cum_regret));
        scan_calls[policy].push(record.counters.scan_calls as Real);
        splits[policy].push(record.counters.splits_evaluated as Real);
        walls[policy].push(record.wall_ms);
        let classified = classify_run(record, &changepoints, env.horizon());
        false_alarms[policy] += classified.false_alarms;
        for (g, first) in classified.detected.iter().enumerate() {
            match first {
                Some(tau) => delays_per_cp[policy][g].push(tau - changepoints[g]),
                None => misses_per_cp[policy][g] += 1,
            }
        }
        all_events.extend(classified.events);
    }
    all_events.sort_by_key(|e| (e.replication, e.policy, e.time));

    let mut policies = Vec::with_capacity(policy_count);
    for (policy, label) in result.labels.iter().enumerate() {
        let runs = final_regrets[policy].len() as u64;
        let mut per_changepoint = Vec::with_capacity(change_count);
        let mut detections = 0;
        let mut misses = 0;
        let mut all_delays: Vec<u64> = Vec::new();
        for g in 0..change_count {
            let mut delays = std::mem::take(&mut delays_per_cp[policy][g]);
            delays.sort_unstable();
            detections += delays.len() as u64;
            misses += misses_per_cp[policy][g];
            all_delays.extend(&delays);
            per_changepoint.push(ChangepointMetrics {
                changepoint: g,
                time: changepoints[g],
                detections: delays.len() as u64,
                misses: misses_per_cp[policy][g],
                mean_delay: if delays.is_empty() {
                    None
                } else {
                    Some(mean(&delays.iter().map(|&d| d as Real).collect::<Vec<_>>()))
                },
                median_delay: median_of_sorted(&delays),
                delays,
            });
        }
        let success_rate = if change_count > 0 && runs > 0 {
            Some(detections as Real / (change_count as u64 * runs) as Real)
        } else {
            None
        };
        let mean_delay = if all_delays.is_empty() {
            None
        } else {
            Some(mean(&all_delays.iter().map(|&d| d as Real).collect::<Vec<_>>()))
        };
        policies.push(PolicyMetrics {
            policy: label.clone(),
            runs,
            failures: failures[policy],
            mean_final_regret: mean(&final_regrets[policy]),
            std_final_regret: std_dev(&final_regrets[policy]),
            detections,
            misses,
            false_alarms: false_alarms[policy],
            mean_delay,
            success_rate,
            per_changepoint,
            mean_scan_calls: mean(&scan_calls[policy]),
            mean_splits_evaluated: mean(&splits[policy]),
            mean_wall_ms: mean(&walls[policy]),
        });
    }
    Ok(Metrics {
        policies,
        events: all_events,
    })
}
