//! Multi-armed bandit policies for piecewise-stationary reward processes.
//!
//! A piecewise-stationary (or piecewise-i.i.d.) bandit draws rewards from a
//! fixed per-arm distribution within each *piece* and switches the whole mean
//! vector at unknown changepoints. This crate provides:
//!
//! - [`confbounds`]: time-uniform and union-bound confidence radii used both
//!   for arm selection and for changepoint detection.
//! - [`env`]: piecewise environment specifications with Bernoulli and clipped
//!   Gaussian reward models, validation, and CSV loading.
//! - [`detect`]: per-arm observation trackers and the split-based changepoint
//!   scans (exhaustive and phase-boundary variants).
//! - [`policies`]: actively restarting policies (`UcblCpd`, `UcbCpd`,
//!   `UcbpCpd`, `ImpCpd`), passive baselines (`Ucb1`, `Ducb`, `SwUcb`, `Dts`),
//!   and an oracle-restart wrapper.
//! - [`analysis`]: closed-form evaluators for detection-delay and regret
//!   bounds (hardness quantities, per-changepoint thresholds, and the
//!   theorem-style bound reports).
//! - [`harness`]: a reproducible experiment runner with seed-derived reward
//!   tapes, replication-level parallelism, regret/detection metrics, and CSV
//!   output.
//!
//! The numeric kernels in [`confbounds`] and the scalar helpers in
//! [`analysis`] are generic over any [`Scalar`] (an IEEE float provided by
//! `num-traits`); the simulation stack is concrete over [`Real`].

pub mod analysis;
pub mod confbounds;
pub mod detect;
pub mod env;
mod errors;
pub mod harness;
pub mod policies;

pub use confbounds::Scalar;
pub use errors::Error;

/// Concrete scalar used by the simulation stack (environments, policies,
/// harness). The generic kernels accept any [`Scalar`]; everything that
/// touches RNG streams or file output is pinned to this alias.
pub type Real = f64;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
