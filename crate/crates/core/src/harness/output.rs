//! File output: experiment CSVs and the bound report JSON.
//!
//! All writers run after aggregation, produce byte-deterministic output for
//! a given result set (floats are printed with the shortest round-trip
//! representation), and leave optional cells empty rather than inventing
//! sentinels. `wall_ms` columns are the only non-deterministic content.

use std::fs::{self, File};
use std::io::{BufWriter, Write as _};
use std::path::Path;

use crate::analysis::BoundReport;
use crate::harness::metrics::Metrics;
use crate::harness::run::ExperimentResult;
use crate::Result;

fn fmt_opt<T: std::fmt::Display>(value: Option<T>) -> String {
    value.map_or_else(String::new, |v| v.to_string())
}

/// Write `traces.csv`: one row per (replication, policy, t).
///
/// Columns: `replication,policy,t,arm,reward,inst_regret,cum_regret,restart`
/// with `restart` as `0`/`1`. Quarantined runs contribute no rows.
///
/// # Errors
///
/// Propagates I/O failures as [`crate::Error::ParseError`].
pub fn write_traces(path: &Path, result: &ExperimentResult) -> Result<()> {
    let mut writer = csv::Writer::from_writer(BufWriter::new(File::create(path)?));
    writer.write_record([
        "replication",
        "policy",
        "t",
        "arm",
        "reward",
        "inst_regret",
        "cum_regret",
        "restart",
    ])?;
    for record in &result.records {
        if record.error.is_some() {
            continue;
        }
        let label = &result.labels[record.policy];
        for row in &record.rows {
            writer.write_record([
                record.replication.to_string(),
                label.clone(),
                row.t.to_string(),
                row.arm.to_string(),
                row.reward.to_string(),
                row.inst_regret.to_string(),
                row.cum_regret.to_string(),
                u8::from(row.restart).to_string(),
            ])?;
        }
    }
    writer.flush().map_err(std::io::Error::from)?;
    Ok(())
}

/// Write `events.csv`: one row per classified restart event.
///
/// Columns: `replication,policy,time,arm,split,kind,true_cp` where `kind` is
/// `detection`, `false_alarm`, or `oracle`, and `arm`/`split`/`true_cp` are
/// empty when not applicable.
///
/// # Errors
///
/// Propagates I/O failures as [`crate::Error::ParseError`].
pub fn write_events(path: &Path, result: &ExperimentResult, metrics: &Metrics) -> Result<()> {
    let mut writer = csv::Writer::from_writer(BufWriter::new(File::create(path)?));
    writer.write_record([
        "replication",
        "policy",
        "time",
        "arm",
        "split",
        "kind",
        "true_cp",
    ])?;
    for event in &metrics.events {
        writer.write_record([
            event.replication.to_string(),
            result.labels[event.policy].clone(),
            event.time.to_string(),
            fmt_opt(event.arm),
            fmt_opt(event.split),
            event.kind.as_str().to_string(),
            fmt_opt(event.true_changepoint),
        ])?;
    }
    writer.flush().map_err(std::io::Error::from)?;
    Ok(())
}

/// Write `summary.csv`: one row per policy.
///
/// Columns: `policy,mean_final_regret,std,detections,misses,false_alarms,`
/// `mean_delay,scan_calls,wall_ms,failures`. `mean_delay` is empty when the
/// policy never detected anything; `scan_calls` and `wall_ms` are means over
/// completed runs.
///
/// # Errors
///
/// Propagates I/O failures as [`crate::Error::ParseError`].
pub fn write_summary(path: &Path, metrics: &Metrics) -> Result<()> {
    let mut writer = csv::Writer::from_writer(BufWriter::new(File::create(path)?));
    writer.write_record([
        "policy",
        "mean_final_regret",
        "std",
        "detections",
        "misses",
        "false_alarms",
        "mean_delay",
        "scan_calls",
        "wall_ms",
        "failures",
    ])?;
    for policy in &metrics.policies {
        writer.write_record([
            policy.policy.clone(),
            policy.mean_final_regret.to_string(),
            policy.std_final_regret.to_string(),
            policy.detections.to_string(),
            policy.misses.to_string(),
            policy.false_alarms.to_string(),
            fmt_opt(policy.mean_delay),
            policy.mean_scan_calls.to_string(),
            policy.mean_wall_ms.to_string(),
            policy.failures.to_string(),
        ])?;
    }
    writer.flush().map_err(std::io::Error::from)?;
    Ok(())
}

/// Write `bounds.json`: the pretty-printed analytical bound report.
///
/// # Errors
///
/// Propagates I/O and serialization failures as
/// [`crate::Error::ParseError`].
pub fn write_bounds(path: &Path, report: &BoundReport) -> Result<()> {
    let mut file = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut file, report)?;
    file.write_all(b"\n").map_err(crate::Error::from)?;
    file.flush().map_err(crate::Error::from)?;
    Ok(())
}

/// Write the full output set for one experiment into `out_dir`, creating the
/// directory if needed: `traces.csv`, `events.csv`, `summary.csv`, and —
/// when a bound report is supplied — `bounds.json`.
///
/// # Errors
///
/// Propagates I/O failures as [`crate::Error::ParseError`].
pub fn write_experiment_outputs(
    out_dir: &Path,
    result: &ExperimentResult,
    metrics: &Metrics,
    bounds: Option<&BoundReport>,
) -> Result<()> {
    fs::create_dir_all(out_dir)?;
    write_traces(&out_dir.join("traces.csv"), result)?;
    write_events(&out_dir.join("events.csv"), result, metrics)?;
    write_summary(&out_dir.join("summary.csv"), metrics)?;
    if let Some(report) = bounds {
        write_bounds(&out_dir.join("bounds.json"), report)?;
    }
    Ok(())
}
