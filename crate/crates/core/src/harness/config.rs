//! Experiment configuration: the JSON file format and its validation.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::env::{build_environment, load_mean_matrix_csv, Environment, RewardModel, Segment};
use crate::policies::{build_policy, BuildContext, PolicyConfig, RadiusName};
use crate::{Error, Real, Result};

fn default_replications() -> u64 {
    1
}

fn default_reward_model() -> RewardModel {
    RewardModel::Bernoulli
}

fn default_gamma() -> Real {
    0.05
}

fn default_eta() -> Real {
    0.5
}

fn default_repeats() -> u64 {
    5
}

/// Where the environment means come from: inline segments or a CSV file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvironmentSpec {
    /// Inline segment list (exclusive with `csv`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segments: Option<Vec<Segment>>,
    /// Path to a mean-matrix CSV, relative to the config file
    /// (exclusive with `segments`). Rows are `start_time,mean_1,...,mean_K`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<PathBuf>,
    /// Horizon `T`.
    pub horizon: u64,
    /// Reward distribution family (default Bernoulli).
    #[serde(default = "default_reward_model")]
    pub reward_model: RewardModel,
}

impl EnvironmentSpec {
    /// Build the environment, resolving a relative CSV path against
    /// `base_dir` (the config file's directory).
    ///
    /// # Errors
    ///
    /// [`Error::EmptySpec`] unless exactly one of `segments`/`csv` is given,
    /// plus any environment construction error.
    pub fn build(&self, base_dir: Option<&Path>) -> Result<Environment> {
        match (&self.segments, &self.csv) {
            (Some(segments), None) => {
                build_environment(segments.clone(), self.horizon, self.reward_model)
            }
            (None, Some(csv)) => {
                let path = match base_dir {
                    Some(dir) if csv.is_relative() => dir.join(csv),
                    _ => csv.clone(),
                };
                let loaded = load_mean_matrix_csv(&path, self.horizon)?;
                match self.reward_model {
                    RewardModel::Bernoulli => Ok(loaded),
                    other => {
                        build_environment(loaded.segments().to_vec(), self.horizon, other)
                    }
                }
            }
            (Some(_), Some(_)) => Err(Error::EmptySpec(
                "environment must give either inline segments or a csv path, not both".into(),
            )),
            (None, None) => Err(Error::EmptySpec(
                "environment needs inline segments or a csv path".into(),
            )),
        }
    }
}

/// Detection-success sweep over the separation parameter `eta`.
///
/// For each `eta` the sweep rebuilds the environment from the configured
/// mean rows with every segment `ceil(segment_cost * eta)` steps long, so
/// larger `eta` gives longer (easier) segments.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EtaSweepSpec {
    /// Values to sweep, each in `(0, 1]`.
    pub etas: Vec<Real>,
    /// Base segment cost `c` in timesteps.
    pub segment_cost: Real,
}

/// Runtime benchmark request: scan counters and wall-clock per horizon.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchSpec {
    /// Horizons to truncate the environment to.
    pub horizons: Vec<u64>,
    /// Timing repeats per (policy, horizon); the median is reported.
    #[serde(default = "default_repeats")]
    pub repeats: u64,
}

/// Parameters for the analytical bound report.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BoundsSpec {
    /// Confidence level (default `1/T`).
    pub delta: Option<Real>,
    /// Phase discount for the known-horizon bound terms.
    pub gamma: Real,
    /// Separation parameter for the precondition flags.
    pub eta: Real,
    /// Evaluation time for the anytime bound (default `T`).
    pub t: Option<u64>,
}

impl Default for BoundsSpec {
    fn default() -> Self {
        BoundsSpec {
            delta: None,
            gamma: default_gamma(),
            eta: default_eta(),
            t: None,
        }
    }
}

/// A full experiment description as read from a JSON config file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub environment: EnvironmentSpec,
    pub policies: Vec<PolicyConfig>,
    /// Replications to run (default 1).
    #[serde(default = "default_replications")]
    pub replications: u64,
    /// Base seed; every random stream is keyed from it.
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta_sweep: Option<EtaSweepSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bench: Option<BenchSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsSpec>,
}

impl ExperimentConfig {
    /// Parse a config from JSON text.
    ///
    /// # Errors
    ///
    /// [`Error::ParseError`] for malformed JSON or unknown fields.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|err| Error::ParseError(err.to_string()))
    }

    /// Validate the config against a built environment: at least one
    /// replication, at least one policy, unique labels, and every policy
    /// constructible.
    ///
    /// # Errors
    ///
    /// [`Error::ValueOutOfRange`] for zero replications;
    /// [`Error::EmptySpec`] for an empty policy list;
    /// [`Error::ParseError`] for duplicate labels or unbuildable policies.
    pub fn validate(&self, env: &Environment) -> Result<()> {
        if self.replications == 0 {
            return Err(Error::ValueOutOfRange(
                "replications must be at least 1".into(),
            ));
        }
        if self.policies.is_empty() {
            return Err(Error::EmptySpec("config lists no policies".into()));
        }
        let mut labels: Vec<&str> = self.policies.iter().map(|p| p.label()).collect();
        labels.sort_unstable();
        if let Some(pair) = labels.windows(2).find(|pair| pair[0] == pair[1]) {
            return Err(Error::ParseError(format!(
                "duplicate policy label {:?}; give one of them an explicit \"label\"",
                pair[0]
            )));
        }
        let changepoints = env.changepoint_times();
        let ctx = BuildContext {
            arms: env.arms(),
            horizon: env.horizon(),
            changepoints: &changepoints,
            radius_override: None,
        };
        for policy in &self.policies {
            build_policy(policy, &ctx)?;
        }
        if let Some(sweep) = &self.eta_sweep {
            if sweep.etas.is_empty() {
                return Err(Error::EmptySpec("eta sweep lists no eta values".into()));
            }
            for &eta in &sweep.etas {
                if !(eta > 0.0 && eta <= 1.0) {
                    return Err(Error::InvalidEta(eta));
                }
            }
            if !(sweep.segment_cost >= 1.0) {
                return Err(Error::ValueOutOfRange(format!(
                    "eta sweep segment cost must be at least 1, found {}",
                    sweep.segment_cost
                )));
            }
        }
        if let Some(bench) = &self.bench {
            if bench.horizons.is_empty() {
                return Err(Error::EmptySpec("bench lists no horizons".into()));
            }
            if bench.repeats == 0 {
                return Err(Error::ValueOutOfRange(
                    "bench repeats must be at least 1".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Load and validate a config file, returning it with its built environment.
///
/// # Errors
///
/// [`Error::ParseError`] for unreadable or malformed files, plus any
/// environment or policy validation error.
pub fn load_config(path: &Path) -> Result<(ExperimentConfig, Environment)> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| Error::ParseError(format!("cannot read {}: {err}", path.display())))?;
    let config = ExperimentConfig::from_json(&text)?;
    let env = config.environment.build(path.parent())?;
    config.validate(&env)?;
    Ok((config, env))
}

/// Parse a `--radius` override name.
///
/// # Errors
///
/// [`Error::ParseError`] for anything other than `laplace`, `union`, or
/// `peeling`.
pub fn parse_radius_name(text: &str) -> Result<RadiusName> {
    text.parse()
}
