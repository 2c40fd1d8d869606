//! Bandit policies behind a uniform select/update interface.
//!
//! Three families are provided:
//!
//! - **Actively restarting**: [`CpdPolicy`] (exhaustive scans with Laplace,
//!   union, or peeling radii — the `ucbl-cpd` / `ucb-cpd` / `ucbp-cpd`
//!   configurations) and [`ImpCpd`] (phase-based scans with pseudo arm
//!   elimination). These monitor their own observations and restart
//!   themselves when a scan reports disjoint confidence intervals.
//! - **Passive baselines**: [`Ucb1`], [`Ducb`] (discounted UCB), [`SwUcb`]
//!   (sliding-window UCB), and [`Dts`] (discounted Thompson sampling). These
//!   never restart.
//! - **Oracle restarts**: [`OracleRestart`] wraps a resettable base policy
//!   and resets it exactly at the true changepoint times.
//!
//! A driver alternates [`Policy::select`] and [`Policy::update`] once per
//! timestep; the update returns a [`StepOutcome`] carrying any restart that
//! fired. Policies draw all randomness from the RNG handed to them, so a
//! fixed RNG stream reproduces a fixed trace.

mod baselines;
mod cpd;
mod impcpd;
mod oracle;

pub use baselines::{ucb1_index, Dts, Ducb, SwUcb, Ucb1};
pub use cpd::CpdPolicy;
pub use impcpd::ImpCpd;
pub use oracle::OracleRestart;

use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::confbounds::RadiusKind;
use crate::detect::Detection;
use crate::{Error, Real, Result};

// ---------------------------------------------------------------------------
// Step outcomes
// ---------------------------------------------------------------------------

/// A restart performed by a policy at `time`.
///
/// `detection` carries the scan alarm for self-triggered restarts and is
/// `None` for oracle restarts (which consume the true changepoint times
/// rather than detecting anything).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RestartEvent {
    /// Timestep at which the policy reset its state.
    pub time: u64,
    /// The scan alarm that triggered the restart, if any.
    pub detection: Option<Detection>,
}

/// What one select/update round produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepOutcome {
    /// The arm that was pulled this step.
    pub arm: usize,
    /// A restart performed while processing this step's observation.
    pub restart: Option<RestartEvent>,
    /// True when the selection was a forced initialization pull (the
    /// round-robin sweep at the start of a run or right after a restart).
    pub forced_init: bool,
}

/// Cumulative detection-work counters a policy exposes for cost accounting.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanCounters {
    /// Number of scan invocations (exhaustive or phase-boundary).
    pub scan_calls: u64,
    /// Total splits whose disjointness condition was evaluated.
    pub splits_evaluated: u64,
    /// Number of self-triggered restarts.
    pub restarts: u64,
}

// ---------------------------------------------------------------------------
// Policy trait
// ---------------------------------------------------------------------------

/// Uniform interface the experiment driver runs every policy through.
///
/// The driver alternates strictly: one [`Policy::select`] then one
/// [`Policy::update`] with the chosen arm, both at the same `t`, with `t`
/// increasing by 1 each round. Policies may rely on that cadence. The same
/// per-step RNG is handed to both calls; policies that need randomness draw
/// from it in a fixed order so traces are reproducible.
pub trait Policy {
    /// Choose the arm to pull at timestep `t`.
    ///
    /// # Errors
    ///
    /// Policies whose index computation can fail (e.g. a degenerate phase
    /// logarithm) propagate that error; index-free selections never fail.
    fn select(&mut self, t: u64, rng: &mut dyn RngCore) -> Result<usize>;

    /// Feed back the reward observed for `arm` at timestep `t`.
    ///
    /// Runs the policy's detection logic (if any) and reports the outcome.
    ///
    /// # Errors
    ///
    /// Propagates tracker and scan errors (invalid rewards, degenerate scan
    /// arguments).
    fn update(&mut self, arm: usize, reward: Real, t: u64, rng: &mut dyn RngCore)
        -> Result<StepOutcome>;

    /// Detection-work counters accumulated so far (all zero for policies
    /// that never scan).
    fn scan_counters(&self) -> ScanCounters {
        ScanCounters::default()
    }

    /// True if the policy exhausted its phase schedule mid-epoch and froze
    /// further scanning (only [`ImpCpd`] can report this).
    fn frozen_phase(&self) -> bool {
        false
    }
}

/// A policy whose state can be returned to its fresh-start configuration;
/// required by [`OracleRestart`].
pub trait Resettable {
    /// Reset all learned state, as if no step had been taken yet.
    fn reset(&mut self);
}

// ---------------------------------------------------------------------------
// Confidence schedules
// ---------------------------------------------------------------------------

/// How an actively scanning policy sets its confidence level over time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DeltaSchedule {
    /// `delta(t) = 1/t`, re-evaluated at every radius computation (the
    /// anytime schedule of the Laplace-based policy).
    InvT,
    /// A fixed `delta` for the whole run.
    Fixed(Real),
}

impl DeltaSchedule {
    /// The confidence level in effect at timestep `t`.
    pub fn delta(&self, t: u64) -> Real {
        match *self {
            DeltaSchedule::InvT => 1.0 / t as Real,
            DeltaSchedule::Fixed(delta) => delta,
        }
    }
}

impl Serialize for DeltaSchedule {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            DeltaSchedule::InvT => serializer.serialize_str("inv-t"),
            DeltaSchedule::Fixed(delta) => serializer.serialize_f64(delta),
        }
    }
}

impl<'de> Deserialize<'de> for DeltaSchedule {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Named(String),
            Value(f64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Named(name) => match name.as_str() {
                "inv-t" | "1/t" => Ok(DeltaSchedule::InvT),
                other => Err(serde::de::Error::custom(format!(
                    "unknown delta schedule {other:?}; use \"inv-t\" or a number"
                ))),
            },
            Raw::Value(delta) => Ok(DeltaSchedule::Fixed(delta)),
        }
    }
}

// ---------------------------------------------------------------------------
// Policy configuration
// ---------------------------------------------------------------------------

/// Radius family names accepted in configs and on the command line for the
/// exhaustive-scan policies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadiusName {
    /// Time-uniform Laplace radius.
    Laplace,
    /// Union-bound radius.
    Union,
    /// Peeling radius (block growth rate set separately).
    Peeling,
}

impl std::str::FromStr for RadiusName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "laplace" => Ok(RadiusName::Laplace),
            "union" => Ok(RadiusName::Union),
            "peeling" => Ok(RadiusName::Peeling),
            other => Err(Error::ParseError(format!(
                "unknown radius family {other:?}; use laplace, union, or peeling"
            ))),
        }
    }
}

/// One policy entry of a harness config: a name, optional parameters, and an
/// optional display label (defaults to the name).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolicyConfig {
    /// Policy name: `ucbl-cpd`, `ucb-cpd`, `ucbp-cpd`, `impcpd`, `ucb1`,
    /// `ducb`, `swucb`, `dts`, `oucb1`, or `ots`.
    pub name: String,
    /// Policy-specific parameters; see the per-policy parameter structs.
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub params: serde_json::Value,
    /// Display label used in output files; defaults to `name`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl PolicyConfig {
    /// A config with just a name and default parameters.
    pub fn named(name: &str) -> Self {
        PolicyConfig {
            name: name.to_string(),
            params: serde_json::Value::Null,
            label: None,
        }
    }

    /// The label output files should use for this policy.
    pub fn label(&self) -> &str {
        self.label.as_deref().unwrap_or(&self.name)
    }
}

fn parse_params<'a, T: Deserialize<'a> + Default>(value: &'a serde_json::Value) -> Result<T> {
    if value.is_null() {
        return Ok(T::default());
    }
    T::deserialize(value).map_err(|err| Error::ParseError(err.to_string()))
}

/// Parameters for the exhaustive-scan policies (`ucbl-cpd`, `ucb-cpd`,
/// `ucbp-cpd`).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CpdParams {
    /// Confidence schedule; `None` selects the family default (`inv-t` for
    /// the Laplace policy, fixed 0.05 for the union/peeling policies).
    pub delta: Option<DeltaSchedule>,
    /// Peeling block growth rate (only used by `ucbp-cpd`).
    pub alpha: f64,
}

impl Default for CpdParams {
    fn default() -> Self {
        CpdParams {
            delta: None,
            alpha: 1.5,
        }
    }
}

/// Parameters for `impcpd`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ImpCpdParams {
    /// Phase shrink factor: `epsilon_{m+1} = epsilon_m / (1 + gamma)`.
    pub gamma: f64,
    /// Phase radius scale.
    pub alpha: f64,
    /// Optional confidence level; `None` uses the canonical `1/T`, giving
    /// `psi = T^2 / (K^2 ln K)`.
    pub delta: Option<f64>,
}

impl Default for ImpCpdParams {
    fn default() -> Self {
        ImpCpdParams {
            gamma: 0.05,
            alpha: 1.5,
            delta: None,
        }
    }
}

/// Parameters for `ducb`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DucbParams {
    /// Discount factor; `None` uses the horizon rule `1 - sqrt(1/T)/4`.
    pub gamma_d: Option<f64>,
    /// Padding scale inside the square root.
    pub xi: f64,
}

impl Default for DucbParams {
    fn default() -> Self {
        DucbParams {
            gamma_d: None,
            xi: 0.6,
        }
    }
}

/// Parameters for `swucb`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SwUcbParams {
    /// Window length in timesteps; `None` uses the horizon rule
    /// `ceil(4 sqrt(T ln T))`.
    pub window: Option<u64>,
    /// Padding scale inside the square root.
    pub xi: f64,
}

impl Default for SwUcbParams {
    fn default() -> Self {
        SwUcbParams {
            window: None,
            xi: 0.6,
        }
    }
}

/// Parameters for `dts`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DtsParams {
    /// Posterior discount applied to every arm each round.
    pub gamma_t: f64,
}

impl Default for DtsParams {
    fn default() -> Self {
        DtsParams { gamma_t: 0.75 }
    }
}

/// Everything a policy constructor may need besides its own parameters.
#[derive(Debug, Clone, Copy)]
pub struct BuildContext<'a> {
    /// Number of arms.
    pub arms: usize,
    /// Horizon `T`.
    pub horizon: u64,
    /// True changepoint times (consumed by the oracle wrappers only).
    pub changepoints: &'a [u64],
    /// Command-line radius-family override for the exhaustive-scan policies.
    pub radius_override: Option<RadiusName>,
}

/// Instantiate the policy a [`PolicyConfig`] describes.
///
/// # Errors
///
/// [`Error::ParseError`] for unknown names or malformed parameters, plus any
/// construction error of the policy itself (e.g. a degenerate phase schedule
/// or too few arms for `impcpd`).
pub fn build_policy(config: &PolicyConfig, ctx: &BuildContext<'_>) -> Result<Box<dyn Policy>> {
    let arms = ctx.arms;
    let horizon = ctx.horizon;
    let override_kind = |default: RadiusName, alpha: f64| -> Result<RadiusKind> {
        let name = ctx.radius_override.unwrap_or(default);
        Ok(match name {
            RadiusName::Laplace => RadiusKind::Laplace,
            RadiusName::Union => RadiusKind::Union,
            RadiusName::Peeling => RadiusKind::peeling(alpha)?,
        })
    };
    match config.name.as_str() {
        "ucbl-cpd" => {
            let params: CpdParams = parse_params(&config.params)?;
            let kind = override_kind(RadiusName::Laplace, params.alpha)?;
            let delta = params.delta.unwrap_or(DeltaSchedule::InvT);
            Ok(Box::new(CpdPolicy::new(arms, kind, delta)?))
        }
        "ucb-cpd" => {
            let params: CpdParams = parse_params(&config.params)?;
            let kind = override_kind(RadiusName::Union, params.alpha)?;
            let delta = params.delta.unwrap_or(DeltaSchedule::Fixed(0.05));
            Ok(Box::new(CpdPolicy::new(arms, kind, delta)?))
        }
        "ucbp-cpd" => {
            let params: CpdParams = parse_params(&config.params)?;
            let kind = override_kind(RadiusName::Peeling, params.alpha)?;
            let delta = params.delta.unwrap_or(DeltaSchedule::Fixed(0.05));
            Ok(Box::new(CpdPolicy::new(arms, kind, delta)?))
        }
        "impcpd" => {
            let params: ImpCpdParams = parse_params(&config.params)?;
            Ok(Box::new(ImpCpd::new(
                arms,
                horizon,
                params.gamma,
                params.alpha,
                params.delta,
            )?))
        }
        "ucb1" => {
            parse_params::<serde_json::Map<String, serde_json::Value>>(&config.params)?;
            Ok(Box::new(Ucb1::new(arms)?))
        }
        "ducb" => {
            let params: DucbParams = parse_params(&config.params)?;
            Ok(Box::new(Ducb::new(arms, horizon, params.gamma_d, params.xi)?))
        }
        "swucb" => {
            let params: SwUcbParams = parse_params(&config.params)?;
            Ok(Box::new(SwUcb::new(arms, horizon, params.window, params.xi)?))
        }
        "dts" => {
            let params: DtsParams = parse_params(&config.params)?;
            Ok(Box::new(Dts::new(arms, params.gamma_t)?))
        }
        "oucb1" => {
            parse_params::<serde_json::Map<String, serde_json::Value>>(&config.params)?;
            Ok(Box::new(OracleRestart::new(
                Ucb1::new(arms)?,
                ctx.changepoints.to_vec(),
            )))
        }
        "ots" => {
            parse_params::<serde_json::Map<String, serde_json::Value>>(&config.params)?;
            Ok(Box::new(OracleRestart::new(
                Dts::new(arms, 1.0)?,
                ctx.changepoints.to_vec(),
            )))
        }
        other => Err(Error::ParseError(format!(
            "unknown policy {other:?}; known policies: ucbl-cpd, ucb-cpd, ucbp-cpd, \
             impcpd, ucb1, ducb, swucb, dts, oucb1, ots"
        ))),
    }
}

/// Round-robin initialization queue shared by the concrete policies.
///
/// Counts down from `arms` to 0; while pending, the next forced arm is
/// `arms - remaining`.
#[derive(Debug, Clone)]
pub(crate) struct InitQueue {
    arms: usize,
    remaining: usize,
}

impl InitQueue {
    pub(crate) fn fresh(arms: usize) -> Self {
        InitQueue {
            arms,
            remaining: arms,
        }
    }

    pub(crate) fn pending(&self) -> bool {
        self.remaining > 0
    }

    /// The forced arm for the current initialization step.
    pub(crate) fn current(&self) -> usize {
        debug_assert!(self.remaining > 0, "no initialization pull pending");
        self.arms - self.remaining
    }

    pub(crate) fn advance(&mut self) {
        debug_assert!(self.remaining > 0, "no initialization pull pending");
        self.remaining -= 1;
    }

    pub(crate) fn rearm(&mut self) {
        self.remaining = self.arms;
    }
}

/// Lowest-index argmax over per-arm index values.
pub(crate) fn argmax(values: impl Iterator<Item = Real>) -> usize {
    let mut best_arm = 0usize;
    let mut best_value = Real::NEG_INFINITY;
    for (arm, value) in values.enumerate() {
        if value > best_value {
            best_value = value;
            best_arm = arm;
        }
    }
    best_arm
}
