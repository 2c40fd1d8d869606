//! Experiment harness: configuration, seeded replicated runs, detection and
//! regret metrics, benchmark and eta sweeps, and file output.
//!
//! The harness is deliberately concrete (`f64`, owned vectors, `rayon`
//! parallelism); the generic numerical kernels live in
//! [`crate::confbounds`] and [`crate::analysis`].
//!
//! Flow: [`config::load_config`] parses and validates a JSON experiment
//! description; [`run::run_experiment`] replays every (replication, policy)
//! pair with keyed random streams and quarantines per-run failures;
//! [`metrics::compute_metrics`] classifies restarts against the true
//! changepoints and checks the regret decomposition identity;
//! [`output`] writes `traces.csv`, `events.csv`, `summary.csv`, and
//! `bounds.json`. [`bench`] and [`eta`] implement the two sweep
//! subcommands.

pub mod bench;
pub mod config;
pub mod eta;
pub mod metrics;
pub mod output;
pub mod run;

pub use bench::{bench_detection_cost, truncate_environment, write_bench, BenchRow};
pub use config::{
    load_config, parse_radius_name, BenchSpec, BoundsSpec, EnvironmentSpec, EtaSweepSpec,
    ExperimentConfig,
};
pub use eta::{build_eta_environment, eta_sweep, write_eta_summary, EtaRow};
pub use metrics::{
    compute_metrics, ChangepointMetrics, ClassifiedEvent, EventKind, Metrics, PolicyMetrics,
};
pub use output::{
    write_bounds, write_events, write_experiment_outputs, write_summary, write_traces,
};
pub use run::{run_experiment, EventRow, ExperimentResult, KahanSum, RunRecord, StepRow};
